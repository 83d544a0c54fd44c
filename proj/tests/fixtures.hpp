#pragma once

// Reference fixtures for the worked 18-receiver and 13-receiver codes:
// the 18x12 AIR matrix, the broadcast-symbol compositions and the decoding
// tables. Coordinates are 1-based here, matching the reference tables.

#include <cstddef>
#include <string>
#include <vector>

#include "suicp/field.hpp"

namespace fixtures {

inline suicp::ExactMatrix air_18x12() {
    static const char* rows[18] = {
        "1 0 0 0 0 0 0 0 0 0 0 0",
        "0 1 0 0 0 0 0 0 0 0 0 0",
        "0 0 1 0 0 0 0 0 0 0 0 0",
        "0 0 0 1 0 0 0 0 0 0 0 0",
        "0 0 0 0 1 0 0 0 0 0 0 0",
        "0 0 0 0 0 1 0 0 0 0 0 0",
        "0 0 0 0 0 0 1 0 0 0 0 0",
        "0 0 0 0 0 0 0 1 0 0 0 0",
        "0 0 0 0 0 0 0 0 1 0 0 0",
        "0 0 0 0 0 0 0 0 0 1 0 0",
        "0 0 0 0 0 0 0 0 0 0 1 0",
        "0 0 0 0 0 0 0 0 0 0 0 1",
        "1 0 0 0 0 0 1 0 0 0 0 0",
        "0 1 0 0 0 0 0 1 0 0 0 0",
        "0 0 1 0 0 0 0 0 1 0 0 0",
        "0 0 0 1 0 0 0 0 0 1 0 0",
        "0 0 0 0 1 0 0 0 0 0 1 0",
        "0 0 0 0 0 1 0 0 0 0 0 1",
    };
    suicp::ExactMatrix m(18, 12);
    for (std::size_t r = 0; r < 18; ++r) {
        std::size_t c = 0;
        for (const char* p = rows[r]; *p; ++p)
            if (*p == '0' || *p == '1') m.at(r, c++) = (*p == '1');
    }
    return m;
}

struct XTerm {
    std::size_t msg;
    std::size_t coord;  // 1-based

    bool operator==(const XTerm& o) const = default;
    auto operator<=>(const XTerm& o) const = default;
};

using CLine = std::vector<XTerm>;

// Broadcast symbols c_0..c_11 for the 18-receiver code, transcribed as-is.
// The c_4 line carries a known slip: x_{15,3} where the construction gives
// x_{14,3}.
inline std::vector<CLine> table1() {
    return {
        {{0, 1}, {17, 2}, {16, 3}, {12, 1}, {11, 2}, {10, 3}},
        {{1, 1}, {0, 2}, {17, 3}, {13, 1}, {12, 2}, {11, 3}},
        {{2, 1}, {1, 2}, {0, 3}, {14, 1}, {13, 2}, {12, 3}},
        {{3, 1}, {2, 2}, {1, 3}, {15, 1}, {14, 2}, {13, 3}},
        {{4, 1}, {3, 2}, {2, 3}, {16, 1}, {15, 2}, {15, 3}},
        {{5, 1}, {4, 2}, {3, 3}, {17, 1}, {16, 2}, {15, 3}},
        {{6, 1}, {5, 2}, {4, 3}, {12, 1}, {11, 2}, {10, 3}},
        {{7, 1}, {6, 2}, {5, 3}, {13, 1}, {12, 2}, {11, 3}},
        {{8, 1}, {7, 2}, {6, 3}, {14, 1}, {13, 2}, {12, 3}},
        {{9, 1}, {8, 2}, {7, 3}, {15, 1}, {14, 2}, {13, 3}},
        {{10, 1}, {9, 2}, {8, 3}, {16, 1}, {15, 2}, {14, 3}},
        {{11, 1}, {10, 2}, {9, 3}, {17, 1}, {16, 2}, {15, 3}},
    };
}

// Decoding table for the 18-receiver code: per receiver k and coordinate
// j in [1:3], the code symbols summed to recover x_{k,j}.
inline std::vector<std::vector<std::vector<std::size_t>>> table2() {
    return {
        {{0}, {1}, {2}},
        {{1}, {2}, {3}},
        {{2}, {3}, {4}},
        {{3}, {4}, {5}},
        {{4}, {5}, {0, 6}},
        {{5}, {0, 6}, {1, 7}},
        {{0, 6}, {1, 7}, {2, 8}},
        {{1, 7}, {2, 8}, {3, 9}},
        {{2, 8}, {3, 9}, {4, 10}},
        {{3, 9}, {4, 10}, {5, 11}},
        {{4, 10}, {5, 11}, {6}},
        {{5, 11}, {6}, {7}},
        {{6}, {7}, {8}},
        {{7}, {8}, {9}},
        {{8}, {9}, {10}},
        {{9}, {10}, {11}},
        {{10}, {11}, {0}},
        {{11}, {0}, {1}},
    };
}

// Broadcast symbols c_0..c_25 for the 13-receiver code, transcribed as-is.
inline std::vector<CLine> table3() {
    return {
        {{0, 1}, {12, 2}, {8, 5}, {7, 6}},   {{0, 3}, {12, 4}, {9, 1}, {8, 2}},
        {{0, 5}, {12, 6}, {9, 3}, {8, 4}},   {{1, 1}, {0, 2}, {9, 5}, {8, 6}},
        {{1, 3}, {0, 4}, {10, 1}, {9, 2}},   {{1, 5}, {0, 6}, {10, 3}, {9, 4}},
        {{2, 1}, {1, 2}, {10, 5}, {9, 6}},   {{2, 3}, {1, 4}, {11, 1}, {10, 2}},
        {{2, 5}, {1, 6}, {11, 3}, {10, 4}},  {{3, 1}, {2, 2}, {11, 5}, {10, 6}},
        {{3, 3}, {2, 4}, {12, 1}, {11, 2}},  {{3, 5}, {2, 6}, {12, 3}, {11, 4}},
        {{4, 1}, {3, 2}, {12, 5}, {11, 6}},  {{4, 3}, {3, 4}, {8, 5}, {7, 6}},
        {{4, 5}, {3, 6}, {9, 1}, {8, 2}},    {{5, 1}, {4, 2}, {9, 3}, {8, 4}},
        {{5, 3}, {4, 4}, {9, 5}, {8, 6}},    {{5, 5}, {4, 6}, {10, 1}, {9, 2}},
        {{6, 1}, {5, 2}, {10, 3}, {9, 4}},   {{6, 3}, {5, 4}, {10, 5}, {9, 6}},
        {{6, 5}, {5, 6}, {11, 1}, {10, 2}},  {{7, 1}, {6, 2}, {11, 3}, {10, 4}},
        {{7, 3}, {6, 4}, {11, 5}, {10, 6}},  {{7, 5}, {6, 6}, {12, 1}, {11, 2}},
        {{8, 1}, {7, 2}, {12, 3}, {11, 4}},  {{8, 3}, {7, 4}, {12, 5}, {11, 6}},
    };
}

// Decoding table for the 13-receiver code: per receiver k and coordinate
// j in [1:6], the code symbols summed to recover x_{k,j}.
inline std::vector<std::vector<std::vector<std::size_t>>> table4() {
    return {
        {{0}, {3}, {1}, {4}, {2}, {5}},
        {{3}, {6}, {4}, {7}, {5}, {8}},
        {{6}, {9}, {7}, {10}, {8}, {11}},
        {{9}, {12}, {10}, {0, 13}, {11}, {1, 14}},
        {{12}, {2, 15}, {0, 13}, {3, 16}, {1, 14}, {4, 17}},
        {{2, 15}, {5, 18}, {3, 16}, {6, 19}, {4, 17}, {7, 20}},
        {{5, 18}, {8, 21}, {6, 19}, {9, 22}, {7, 20}, {10, 23}},
        {{8, 21}, {11, 24}, {9, 22}, {12, 25}, {10, 23}, {13}},
        {{11, 24}, {14}, {12, 25}, {15}, {13}, {16}},
        {{14}, {17}, {15}, {18}, {16}, {19}},
        {{17}, {20}, {18}, {21}, {19}, {22}},
        {{20}, {23}, {21}, {24}, {22}, {25}},
        {{23}, {0}, {24}, {1}, {25}, {2}},
    };
}

}  // namespace fixtures
