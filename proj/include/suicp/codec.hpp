#pragma once

#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "air.hpp"
#include "field.hpp"
#include "problem.hpp"
#include "rates.hpp"

// The vector linear encoder for SUICP(SCI): b(m+1)-dimensional messages are
// folded into Kb extended symbols, each a sum of m+1 coordinates of m+1
// cyclically consecutive messages, and the extended symbols are mixed by an
// AIR matrix of size Kb x (b(D+2m+1)+a).

namespace suicp {

struct Term {
    std::size_t msg;    // message index in [0, K)
    std::size_t coord;  // coordinate in [0, t)

    bool operator==(const Term& o) const { return msg == o.msg && coord == o.coord; }
};

struct CodeBook {
    SciInstance inst;
    long long a;
    long long b;
    std::size_t t;      // per-message dimension b(m+1)
    std::size_t n;      // code length b(D+2m+1)+a
    AirMatrix air;      // (K*b) x n
    // extended_map[k*b + j] lists the terms of y_{k,j+1} (j zero-based).
    std::vector<std::vector<Term>> extended_map;
    // Row k*t + c carries the AIR row of the extended symbol holding
    // coordinate (k, c).
    ExactMatrix encoding;
};

// Extended symbol holding coordinate (k, c): with j = c / (m+1) and
// i = c % (m+1) (zero-based), it is y_{k+i, j}.
inline std::size_t symbol_of_coordinate(const SciInstance& inst, long long b,
                                        std::size_t k, std::size_t c) {
    std::size_t j = c / (inst.m() + 1);
    std::size_t i = c % (inst.m() + 1);
    return inst.wrap(static_cast<long long>(k + i)) * static_cast<std::size_t>(b) + j;
}

inline CodeBook build_codebook(const SciInstance& inst, long long a, long long b) {
    RatePair pair = is_member(inst, a, b);
    if (!pair.member)
        throw std::invalid_argument("(a,b) is not a member of S_{K,D,U,m}");
    const std::size_t K = inst.K();
    const std::size_t m = inst.m();
    const std::size_t t = static_cast<std::size_t>(b) * (m + 1);
    const std::size_t n = static_cast<std::size_t>(b) * (inst.D() + 2 * m + 1) +
                          static_cast<std::size_t>(a);
    const std::size_t rows = K * static_cast<std::size_t>(b);
    if (n > rows)
        throw std::invalid_argument("code length exceeds Kb; pair is unusable");

    CodeBook cb{inst, a, b, t, n, build_air(rows, n), {}, {}};

    // y_{k,j} = sum_{i=1}^{m+1} x_{k+1-i, (j-1)(m+1)+i}
    cb.extended_map.resize(rows);
    for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t j = 0; j < static_cast<std::size_t>(b); ++j) {
            std::vector<Term>& terms = cb.extended_map[k * b + j];
            for (std::size_t i = 0; i < m + 1; ++i)
                terms.push_back({inst.wrap(static_cast<long long>(k) - static_cast<long long>(i)),
                                 j * (m + 1) + i});
        }
    }

    cb.encoding = ExactMatrix(K * t, n);
    for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t c = 0; c < t; ++c) {
            std::size_t sym = symbol_of_coordinate(inst, b, k, c);
            cb.encoding.set_row(k * t + c, cb.air.matrix.row(sym));
        }
    }
    return cb;
}

inline CodeBook build_codebook(const SciInstance& inst) {
    OptimalPair opt = find_optimal_pair(inst);
    return build_codebook(inst, opt.a_min, opt.b_min);
}

using Codeword = std::vector<std::uint8_t>;

// messages is K x t; the codeword is the flattened message row times the
// encoding matrix (identical to the extended-symbol route).
inline Codeword encode(const CodeBook& cb, const ExactMatrix& messages,
                       const FieldSpec& field = FieldSpec{}) {
    if (messages.rows() != cb.inst.K() || messages.cols() != cb.t)
        throw std::invalid_argument("message shape mismatch");
    Codeword out(cb.n, 0);
    for (std::size_t sym = 0; sym < cb.extended_map.size(); ++sym) {
        unsigned y = 0;
        for (const Term& term : cb.extended_map[sym])
            y += messages.at(term.msg, term.coord);
        std::uint8_t yv = field.reduce(static_cast<long long>(y));
        if (yv == 0) continue;
        const std::uint8_t* row = cb.air.matrix.row_ptr(sym);
        for (std::size_t c = 0; c < cb.n; ++c)
            out[c] = field.add(out[c], field.mul(yv, row[c]));
    }
    return out;
}

struct ReceiverReport {
    std::size_t receiver;
    bool ok;
    std::vector<std::size_t> failed_coords;
};

struct DecodabilityReport {
    std::vector<ReceiverReport> receivers;

    bool all_ok() const {
        for (const auto& r : receivers)
            if (!r.ok) return false;
        return true;
    }
};

// Alignment criterion on an arbitrary Kt x N encoding matrix: receiver k
// decodes all t coordinates iff its t rows stay independent modulo the span
// of the interference rows.
inline DecodabilityReport verify_decodability(const ExactMatrix& encoding,
                                              const SciInstance& inst, std::size_t t,
                                              const FieldSpec& field = FieldSpec{}) {
    if (encoding.rows() != inst.K() * t)
        throw std::invalid_argument("encoding must have K*t rows");
    DecodabilityReport report;
    for (std::size_t k = 0; k < inst.K(); ++k) {
        std::vector<std::size_t> interf = interference_set(inst, k);
        detail::Eliminator elim(encoding.cols(), field);
        for (std::size_t msg : interf)
            for (std::size_t c = 0; c < t; ++c)
                elim.add_row(encoding.row(msg * t + c));
        std::size_t base = elim.rank();
        bool ok = true;
        for (std::size_t c = 0; c < t; ++c)
            elim.add_row(encoding.row(k * t + c));
        if (elim.rank() != base + t) ok = false;

        ReceiverReport rr{k, ok, {}};
        if (!ok) {
            // name the failing coordinates with per-coordinate span tests
            for (std::size_t c = 0; c < t; ++c) {
                ExactMatrix others(0, encoding.cols());
                for (std::size_t msg : interf)
                    for (std::size_t cc = 0; cc < t; ++cc)
                        others.append_row(encoding.row(msg * t + cc));
                for (std::size_t cc = 0; cc < t; ++cc)
                    if (cc != c) others.append_row(encoding.row(k * t + cc));
                if (in_span(encoding.row(k * t + c), others, field))
                    rr.failed_coords.push_back(c);
            }
        }
        report.receivers.push_back(std::move(rr));
    }
    return report;
}

inline DecodabilityReport verify_decodability(const CodeBook& cb,
                                              const FieldSpec& field = FieldSpec{}) {
    return verify_decodability(cb.encoding, cb.inst, cb.t, field);
}

struct CoordRecipe {
    std::vector<std::uint8_t> combo;                      // over the n code symbols
    std::vector<std::pair<Term, std::uint8_t>> correction;  // side-info terms
};

struct DecodingRecipe {
    std::size_t receiver;
    std::vector<CoordRecipe> coords;  // one per wanted coordinate
};

// For each receiver and coordinate, finds w over the code symbols such that
// w . codeword, minus the listed side-information corrections, equals the
// coordinate. The solve works in the unknown-coordinate space (interference
// plus wanted), so validity is a matrix identity, not a sampled check.
inline std::vector<DecodingRecipe> derive_recipes(const CodeBook& cb,
                                                  const FieldSpec& field = FieldSpec{}) {
    const std::size_t K = cb.inst.K();
    const std::size_t t = cb.t;
    std::vector<DecodingRecipe> out;
    out.reserve(K);
    for (std::size_t k = 0; k < K; ++k) {
        std::vector<std::size_t> unknown_msgs = interference_set(cb.inst, k);
        unknown_msgs.push_back(k);
        std::vector<std::size_t> unknown_rows;
        for (std::size_t msg : unknown_msgs)
            for (std::size_t c = 0; c < t; ++c)
                unknown_rows.push_back(msg * t + c);
        std::size_t wanted_base = (unknown_msgs.size() - 1) * t;

        // columns of the encoding restricted to the unknown coordinates
        ExactMatrix restricted(cb.n, unknown_rows.size());
        for (std::size_t c = 0; c < cb.n; ++c)
            for (std::size_t i = 0; i < unknown_rows.size(); ++i)
                restricted.at(c, i) = cb.encoding.at(unknown_rows[i], c);
        RowEchelon echelon = row_reduce(restricted, field);

        DecodingRecipe recipe{k, {}};
        std::vector<char> is_unknown(K, 0);
        for (std::size_t msg : unknown_msgs) is_unknown[msg] = 1;
        for (std::size_t c = 0; c < t; ++c) {
            std::vector<std::uint8_t> target(unknown_rows.size(), 0);
            target[wanted_base + c] = 1;
            auto w = solve_against(echelon, target, field);
            if (!w)
                throw std::runtime_error("receiver " + std::to_string(k) +
                                         " cannot decode coordinate " + std::to_string(c));
            // full coefficient vector over all Kt coordinates
            std::vector<std::uint8_t> coeffs = matrix_times_col(cb.encoding, *w, field);
            CoordRecipe cr;
            cr.combo = std::move(*w);
            for (std::size_t msg = 0; msg < K; ++msg) {
                if (is_unknown[msg]) continue;
                for (std::size_t cc = 0; cc < t; ++cc)
                    if (coeffs[msg * t + cc] != 0)
                        cr.correction.push_back({{msg, cc}, coeffs[msg * t + cc]});
            }
            recipe.coords.push_back(std::move(cr));
        }
        out.push_back(std::move(recipe));
    }
    return out;
}

struct RoundtripMismatch {
    std::size_t receiver;
    std::size_t coord;
    std::uint8_t expected;
    std::uint8_t got;
};

struct RoundtripReport {
    std::size_t recovered = 0;
    std::size_t total = 0;
    std::vector<RoundtripMismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

// Draws pseudorandom messages, encodes, and replays every recipe using only
// the codeword and that receiver's side information.
inline RoundtripReport simulate_roundtrip(const CodeBook& cb,
                                          const std::vector<DecodingRecipe>& recipes,
                                          std::uint64_t seed,
                                          const FieldSpec& field = FieldSpec{}) {
    const std::size_t K = cb.inst.K();
    const std::size_t t = cb.t;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> dist(0, field.p() - 1);
    ExactMatrix messages(K, t);
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t c = 0; c < t; ++c)
            messages.at(k, c) = static_cast<std::uint8_t>(dist(rng));
    Codeword cw = encode(cb, messages, field);

    RoundtripReport report;
    for (const DecodingRecipe& recipe : recipes) {
        for (std::size_t c = 0; c < t; ++c) {
            const CoordRecipe& cr = recipe.coords[c];
            unsigned acc = 0;
            for (std::size_t i = 0; i < cb.n; ++i)
                acc += unsigned(cr.combo[i]) * unsigned(cw[i]);
            std::uint8_t val = field.reduce(static_cast<long long>(acc));
            for (const auto& [term, coeff] : cr.correction)
                val = field.sub(val, field.mul(coeff, messages.at(term.msg, term.coord)));
            std::uint8_t expected = messages.at(recipe.receiver, c);
            ++report.total;
            if (val == expected)
                ++report.recovered;
            else
                report.mismatches.push_back({recipe.receiver, c, expected, val});
        }
    }
    return report;
}

inline RoundtripReport simulate_roundtrip(const CodeBook& cb, std::uint64_t seed,
                                          const FieldSpec& field = FieldSpec{}) {
    return simulate_roundtrip(cb, derive_recipes(cb, field), seed, field);
}

}  // namespace suicp
