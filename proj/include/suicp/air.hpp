#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "field.hpp"

// Construction of adjacent-row-independent (AIR) matrices: binary g x h
// matrices in which any h cyclically adjacent rows are linearly independent
// over every field.

namespace suicp {

// One fill step of the construction. A row block stacks `copies` identity
// matrices I_ident vertically; a column block lays them out horizontally.
struct FillStep {
    bool row_block;
    std::size_t copies;
    std::size_t ident;
    std::size_t row_off;
    std::size_t col_off;

    std::size_t area() const { return copies * ident * ident; }
};

struct AirMatrix {
    std::size_t g = 0;  // rows
    std::size_t h = 0;  // cols
    ExactMatrix matrix;
    std::vector<FillStep> trace;
};

inline AirMatrix build_air(std::size_t g, std::size_t h) {
    if (h == 0 || h > g) throw std::invalid_argument("build_air requires g >= h >= 1");
    AirMatrix out;
    out.g = g;
    out.h = h;
    out.matrix = ExactMatrix(g, h);

    // The unfilled part stays rectangular; it shrinks from the top after a
    // row fill and from the left after a column fill.
    std::size_t row_off = 0, col_off = 0;
    std::size_t m = g, n = h;
    while (true) {
        std::size_t q = m / n, r = m % n;
        for (std::size_t copy = 0; copy < q; ++copy)
            for (std::size_t i = 0; i < n; ++i)
                out.matrix.at(row_off + copy * n + i, col_off + i) = 1;
        out.trace.push_back({true, q, n, row_off, col_off});
        row_off += q * n;
        if (r == 0) break;
        m = r;

        std::size_t qp = n / r, rp = n % r;
        for (std::size_t copy = 0; copy < qp; ++copy)
            for (std::size_t i = 0; i < r; ++i)
                out.matrix.at(row_off + i, col_off + copy * r + i) = 1;
        out.trace.push_back({false, qp, r, row_off, col_off});
        col_off += qp * r;
        if (rp == 0) break;
        n = rp;
    }
    return out;
}

// Euclidean remainder chain lambda_{-1} = h, lambda_0 = g - h,
// lambda_{i-1} = beta_i * lambda_i + lambda_{i+1}, down to lambda_{l+1} = 0.
struct LambdaChain {
    std::vector<long long> lambdas;  // lambda_{-1}, lambda_0, ..., lambda_l
    std::vector<long long> betas;    // beta_0, ..., beta_l

    bool degenerate() const { return betas.empty(); }
};

inline LambdaChain lambda_chain(std::size_t g, std::size_t h) {
    if (h == 0 || h > g) throw std::invalid_argument("lambda_chain requires g >= h >= 1");
    LambdaChain chain;
    chain.lambdas.push_back(static_cast<long long>(h));
    chain.lambdas.push_back(static_cast<long long>(g - h));
    if (g == h) return chain;  // square case: lambda_0 = 0, no betas
    while (true) {
        long long prev = chain.lambdas[chain.lambdas.size() - 2];
        long long cur = chain.lambdas.back();
        chain.betas.push_back(prev / cur);
        long long next = prev % cur;
        if (next == 0) break;
        chain.lambdas.push_back(next);
    }
    return chain;
}

// Every row must lie outside the span of the h-1 rows above it and the
// gcd(g,h)-1 rows below it, indices cyclic modulo g.
inline bool check_air_property(const AirMatrix& a, const FieldSpec& field = FieldSpec{}) {
    const std::size_t g = a.g, h = a.h;
    const std::size_t below = std::gcd(g, h);
    std::vector<char> used(g, 0);
    for (std::size_t k = 0; k < g; ++k) {
        std::fill(used.begin(), used.end(), 0);
        ExactMatrix others(0, h);
        for (std::size_t d = 1; d < h; ++d) {
            std::size_t idx = (k + g - (d % g)) % g;
            if (idx == k || used[idx]) continue;
            used[idx] = 1;
            others.append_row(a.matrix.row(idx));
        }
        for (std::size_t d = 1; d < below; ++d) {
            std::size_t idx = (k + d) % g;
            if (idx == k || used[idx]) continue;
            used[idx] = 1;
            others.append_row(a.matrix.row(idx));
        }
        if (in_span(a.matrix.row(k), others, field)) return false;
    }
    return true;
}

}  // namespace suicp
