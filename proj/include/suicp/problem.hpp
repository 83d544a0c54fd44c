#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// SUICP(SCI) problem instances: K messages on a cycle, receiver k wants x_k,
// sees interference U+D wide at cyclic distance m+1, knows the rest.

namespace suicp {

class SciInstance {
public:
    SciInstance(std::size_t K, std::size_t D, std::size_t U, std::size_t m)
        : K_(K), D_(D), U_(U), m_(m) {
        if (K < 1) throw std::invalid_argument("K must be >= 1");
        if (U > D) throw std::invalid_argument("U must not exceed D");
        if (2 * m >= K || U + D >= K - 2 * m)
            throw std::invalid_argument("U + D < K - 2m must hold");
    }

    std::size_t K() const { return K_; }
    std::size_t D() const { return D_; }
    std::size_t U() const { return U_; }
    std::size_t m() const { return m_; }

    bool is_sni() const { return m_ == 0; }

    // All index arithmetic goes through here.
    std::size_t wrap(long long idx) const {
        long long k = static_cast<long long>(K_);
        long long r = idx % k;
        if (r < 0) r += k;
        return static_cast<std::size_t>(r);
    }

    bool operator==(const SciInstance& o) const {
        return K_ == o.K_ && D_ == o.D_ && U_ == o.U_ && m_ == o.m_;
    }

private:
    std::size_t K_, D_, U_, m_;
};

// I_k = {k-U-m, ..., k-m-1} u {k+m+1, ..., k+m+D}, sorted.
inline std::vector<std::size_t> interference_set(const SciInstance& inst, std::size_t k) {
    if (k >= inst.K()) throw std::invalid_argument("receiver index out of range");
    std::vector<std::size_t> out;
    out.reserve(inst.U() + inst.D());
    long long kk = static_cast<long long>(k);
    for (std::size_t d = 1; d <= inst.U(); ++d)
        out.push_back(inst.wrap(kk - static_cast<long long>(inst.m() + d)));
    for (std::size_t d = 1; d <= inst.D(); ++d)
        out.push_back(inst.wrap(kk + static_cast<long long>(inst.m() + d)));
    std::sort(out.begin(), out.end());
    return out;
}

// Complement of I_k u {k}, sorted.
inline std::vector<std::size_t> side_info_set(const SciInstance& inst, std::size_t k) {
    std::vector<char> excluded(inst.K(), 0);
    excluded[k] = 1;
    for (std::size_t i : interference_set(inst, k)) excluded[i] = 1;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < inst.K(); ++i)
        if (!excluded[i]) out.push_back(i);
    return out;
}

struct ReceiverView {
    std::size_t k;
    std::vector<std::size_t> interference;
    std::vector<std::size_t> side_info;
};

inline ReceiverView receiver_view(const SciInstance& inst, std::size_t k) {
    return {k, interference_set(inst, k), side_info_set(inst, k)};
}

// The SNI problem seen by the extended symbols: D' = D+2m, U' = U+2m, m' = 0.
inline SciInstance as_sni(const SciInstance& inst) {
    return SciInstance(inst.K(), inst.D() + 2 * inst.m(), inst.U() + 2 * inst.m(), 0);
}

// Parses the literal form "K=18,D=7,U=1,m=2"; m defaults to 0 when omitted.
inline SciInstance parse_instance(std::string_view text) {
    long long K = -1, D = -1, U = -1, m = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view part = text.substr(pos, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - pos);
        std::size_t eq = part.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("bad instance literal: " + std::string(text));
        std::string_view key = part.substr(0, eq);
        std::string_view val = part.substr(eq + 1);
        long long parsed = 0;
        auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), parsed);
        if (ec != std::errc{} || ptr != val.data() + val.size() || parsed < 0)
            throw std::invalid_argument("bad instance value: " + std::string(part));
        if (key == "K") K = parsed;
        else if (key == "D") D = parsed;
        else if (key == "U") U = parsed;
        else if (key == "m") m = parsed;
        else throw std::invalid_argument("unknown instance key: " + std::string(key));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (K < 0 || D < 0 || U < 0)
        throw std::invalid_argument("instance literal must set K, D and U");
    return SciInstance(static_cast<std::size_t>(K), static_cast<std::size_t>(D),
                       static_cast<std::size_t>(U), static_cast<std::size_t>(m));
}

inline std::string format_instance(const SciInstance& inst) {
    return "K=" + std::to_string(inst.K()) + ",D=" + std::to_string(inst.D()) +
           ",U=" + std::to_string(inst.U()) + ",m=" + std::to_string(inst.m());
}

}  // namespace suicp
