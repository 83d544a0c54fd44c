#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "field.hpp"
#include "problem.hpp"

// Independent brute-force ground truth on tiny instances. Decodability is
// checked by explicit span enumeration over GF(2), deliberately avoiding the
// Gaussian-elimination machinery it cross-checks.

namespace suicp {

// Scalar (t=1) decodability per receiver: L_k must differ from every GF(2)
// combination of the interference rows. Rows are treated as bit masks.
inline bool check_decodable_bruteforce(const ExactMatrix& encoding, const SciInstance& inst) {
    if (encoding.rows() != inst.K())
        throw std::invalid_argument("encoding must have K rows (scalar case)");
    if (encoding.cols() > 63)
        throw std::invalid_argument("too many columns for mask enumeration");
    std::vector<std::uint64_t> masks(inst.K(), 0);
    for (std::size_t r = 0; r < inst.K(); ++r)
        for (std::size_t c = 0; c < encoding.cols(); ++c)
            if (encoding.at(r, c) % 2) masks[r] |= (1ull << c);

    for (std::size_t k = 0; k < inst.K(); ++k) {
        std::vector<std::size_t> interf = interference_set(inst, k);
        if (interf.size() > 20)
            throw std::invalid_argument("interference set too large for enumeration");
        std::uint64_t combos = 1ull << interf.size();
        for (std::uint64_t pick = 0; pick < combos; ++pick) {
            std::uint64_t sum = 0;
            for (std::size_t i = 0; i < interf.size(); ++i)
                if (pick & (1ull << i)) sum ^= masks[interf[i]];
            if (sum == masks[k]) return false;  // L_k in span(L_{I_k})
        }
    }
    return true;
}

struct OracleResult {
    std::size_t minimal_length;
    ExactMatrix witness;
};

// Exhausts K x N binary matrices in canonical order (counter bits laid out
// row-major) for N = 1..n_max and returns the first decodable one.
inline std::optional<OracleResult> minimal_scalar_code(const SciInstance& inst,
                                                       std::size_t n_max) {
    if (inst.K() > 6 || n_max > 5)
        throw std::invalid_argument("oracle caps: K <= 6 and n_max <= 5");
    const std::size_t K = inst.K();
    std::vector<std::vector<std::size_t>> interf(K);
    for (std::size_t k = 0; k < K; ++k) interf[k] = interference_set(inst, k);

    std::vector<std::uint64_t> masks(K);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const std::uint64_t row_mask = (1ull << n) - 1;
        const std::uint64_t count = 1ull << (K * n);
        for (std::uint64_t code = 0; code < count; ++code) {
            for (std::size_t r = 0; r < K; ++r)
                masks[r] = (code >> (r * n)) & row_mask;
            bool ok = true;
            for (std::size_t k = 0; k < K && ok; ++k) {
                const auto& I = interf[k];
                std::uint64_t combos = 1ull << I.size();
                for (std::uint64_t pick = 0; pick < combos; ++pick) {
                    std::uint64_t sum = 0;
                    for (std::size_t i = 0; i < I.size(); ++i)
                        if (pick & (1ull << i)) sum ^= masks[I[i]];
                    if (sum == masks[k]) { ok = false; break; }
                }
            }
            if (ok) {
                ExactMatrix witness(K, n);
                for (std::size_t r = 0; r < K; ++r)
                    for (std::size_t c = 0; c < n; ++c)
                        if (masks[r] & (1ull << c)) witness.at(r, c) = 1;
                return OracleResult{n, std::move(witness)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace suicp
