#pragma once

#include "air.hpp"
#include "codec.hpp"
#include "field.hpp"
#include "oracle.hpp"
#include "problem.hpp"
#include "rates.hpp"
