#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "problem.hpp"

// The achievable-rate set S_{K,D,U,m}, the a_min/b_min optimizer and the
// lower/upper bound and capacity formulas. All arithmetic is exact; decimals
// are for display only.

namespace suicp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string format_rational(const Rational& r, int places = 3) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << "/" << boost::multiprecision::denominator(r);
    double approx = static_cast<double>(boost::multiprecision::numerator(r)) /
                    static_cast<double>(boost::multiprecision::denominator(r));
    os.setf(std::ios::fixed);
    os.precision(places);
    os << " (~" << approx << ")";
    return os.str();
}

struct RatePair {
    long long a;
    long long b;
    BigInt gcd_witness;  // gcd(bK, b(D+2m+1)+a)
    bool member;
};

// Membership test: gcd(bK, b(D+2m+1)+a) >= b(U+2m+1).
inline RatePair is_member(const SciInstance& inst, long long a, long long b) {
    if (a < 0 || b < 1) throw std::invalid_argument("need a >= 0 and b >= 1");
    BigInt bK = BigInt(b) * inst.K();
    BigInt lhs = BigInt(b) * (inst.D() + 2 * inst.m() + 1) + a;
    BigInt witness = boost::multiprecision::gcd(bK, lhs);
    BigInt threshold = BigInt(b) * (inst.U() + 2 * inst.m() + 1);
    return {a, b, witness, witness >= threshold};
}

// Rate of a member pair: 1 + (D + m + a/b) / (m + 1).
inline Rational achieved_rate(const SciInstance& inst, long long a, long long b) {
    Rational ab(a, b);
    return 1 + (Rational(inst.D()) + inst.m() + ab) / (inst.m() + 1);
}

// (alpha, gamma) = (K mod (D+2m+1), floor(K / (D+2m+1))); always a member.
struct FallbackPair {
    long long alpha;
    long long gamma;
};

inline FallbackPair fallback_pair(const SciInstance& inst) {
    long long span = static_cast<long long>(inst.D() + 2 * inst.m() + 1);
    long long K = static_cast<long long>(inst.K());
    return {K % span, K / span};
}

struct OptimalPair {
    long long a_min;
    long long b_min;
    Rational rate;
    // Set when the bounded scan found nothing and the fallback pair was
    // returned instead (only possible with a caller-lowered b_cap).
    bool fallback_used = false;
};

// Rate-minimizing scan over a <= K mod (D+2m+1) and b <= b_cap, ties broken
// by smallest a then smallest b. Minimizing a alone is not enough: the same
// a can admit several b (K=9, D=U=1 has both (1,1) and (1,4) in S), and for
// some instances every member at the smallest a is strictly worse than the
// fallback pair (K=25, D=6, U=3 admits (3,1) but nothing else at a=3). The
// fallback pair lies inside the default scan range, so the result never
// exceeds its rate.
inline OptimalPair find_optimal_pair(const SciInstance& inst, long long b_cap = 0) {
    if (b_cap <= 0) b_cap = static_cast<long long>(inst.K());
    const long long K = static_cast<long long>(inst.K());
    const long long S = static_cast<long long>(inst.D() + 2 * inst.m() + 1);
    const long long T = static_cast<long long>(inst.U() + 2 * inst.m() + 1);
    FallbackPair fb = fallback_pair(inst);

    // a=0 membership does not depend on b: gcd(bK, bS) = b gcd(K, S)
    if (std::gcd(K, S) >= T) return {0, 1, achieved_rate(inst, 0, 1), false};

    // Membership scales: (a,b) in S iff the reduced pair is, since
    // gcd(dbK, dbS+da) = d gcd(bK, bS+a). For coprime (a,b) the witness is
    // coprime to b, hence a divisor g of K with g >= bT and g | bS+a. So the
    // minimum ratio is found by walking the divisors g of K and, for each
    // b <= g/T, taking the least positive a == -bS (mod g).
    long long best_a = 0, best_b = 0;
    for (long long g = 1; g <= K; ++g) {
        if (K % g != 0) continue;
        for (long long b = 1; b <= std::min(b_cap, g / T); ++b) {
            long long a = (g - (b % g) * (S % g) % g) % g;
            if (a == 0) a = g;
            if (a > fb.alpha) continue;
            if (best_b == 0 || a * best_b < best_a * b ||
                (a * best_b == best_a * b && a < best_a)) {
                best_a = a;
                best_b = b;
            }
        }
    }
    if (best_b != 0) {
        long long d = std::gcd(best_a, best_b);
        best_a /= d;
        best_b /= d;
        return {best_a, best_b, achieved_rate(inst, best_a, best_b), false};
    }
    return {fb.alpha, fb.gamma, achieved_rate(inst, fb.alpha, fb.gamma), true};
}

inline Rational lower_bound(const SciInstance& inst) {
    return 1 + Rational(inst.D() + inst.m(), inst.m() + 1);
}

inline Rational upper_bound(const SciInstance& inst) {
    OptimalPair opt = find_optimal_pair(inst);
    return opt.rate;
}

// Closed-form capacity C = (m+1)/(D+2m+1), available when
// gcd(K, D+2m+1) >= U+2m+1.
inline std::optional<Rational> capacity_special(const SciInstance& inst) {
    std::size_t span = inst.D() + 2 * inst.m() + 1;
    if (std::gcd(inst.K(), span) < inst.U() + 2 * inst.m() + 1) return std::nullopt;
    return Rational(inst.m() + 1, span);
}

// Optimality gap bound (K mod (D+2m+1)) / ((m+1) floor(K/(D+2m+1))).
inline Rational gap_bound(const SciInstance& inst) {
    FallbackPair fb = fallback_pair(inst);
    if (fb.gamma < 1) throw std::invalid_argument("gap_bound needs K >= D+2m+1");
    return Rational(fb.alpha, (inst.m() + 1) * fb.gamma);
}

// Symmetric neighboring side-information capacity.
inline Rational snc_capacity(std::size_t K, std::size_t D_tilde, std::size_t U_tilde) {
    if (U_tilde > D_tilde) throw std::invalid_argument("need U~ <= D~");
    if (U_tilde + D_tilde > K - 1) throw std::invalid_argument("need U~ + D~ <= K - 1");
    if (U_tilde + D_tilde == K - 1) return 1;
    return Rational(U_tilde + 1, K - D_tilde + U_tilde);
}

struct RateBound {
    Rational lower;
    Rational upper;
    std::optional<Rational> capacity;  // C, when the gcd condition holds
    OptimalPair opt;
    Rational gap;
};

inline RateBound compute_bounds(const SciInstance& inst) {
    RateBound out;
    out.lower = lower_bound(inst);
    out.opt = find_optimal_pair(inst);
    out.upper = out.opt.rate;
    out.capacity = capacity_special(inst);
    out.gap = gap_bound(inst);
    return out;
}

}  // namespace suicp
