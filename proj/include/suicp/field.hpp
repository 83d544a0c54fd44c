#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

// Exact linear algebra over prime fields GF(p). Everything here is a pure
// function of its inputs; matrices are plain dense value types.

namespace suicp {

class FieldSpec {
public:
    constexpr FieldSpec() = default;

    explicit FieldSpec(unsigned p) : p_(p) {
        if (!is_prime(p))
            throw std::invalid_argument("field modulus must be prime and >= 2");
    }

    unsigned p() const { return p_; }

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const {
        return static_cast<std::uint8_t>((unsigned(a) + unsigned(b)) % p_);
    }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const {
        return static_cast<std::uint8_t>((unsigned(a) + p_ - unsigned(b)) % p_);
    }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
        return static_cast<std::uint8_t>((unsigned(a) * unsigned(b)) % p_);
    }
    std::uint8_t neg(std::uint8_t a) const {
        return a == 0 ? 0 : static_cast<std::uint8_t>(p_ - a);
    }
    std::uint8_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<std::uint8_t>(r);
    }

    // Multiplicative inverse of a nonzero element.
    std::uint8_t inv(std::uint8_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        // extended Euclid on (a, p)
        long long t = 0, newt = 1;
        long long r = p_, newr = a;
        while (newr != 0) {
            long long q = r / newr;
            long long tmp = t - q * newt;
            t = newt; newt = tmp;
            tmp = r - q * newr;
            r = newr; newr = tmp;
        }
        return reduce(t);
    }

    static bool is_prime(unsigned n) {
        if (n < 2) return false;
        for (unsigned d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    unsigned p_ = 2;
};

class ExactMatrix {
public:
    ExactMatrix() = default;

    ExactMatrix(std::size_t rows, std::size_t cols, std::uint8_t fill = 0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint8_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::uint8_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::uint8_t* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }
    std::uint8_t* row_ptr(std::size_t r) { return data_.data() + r * cols_; }

    std::vector<std::uint8_t> row(std::size_t r) const {
        return {row_ptr(r), row_ptr(r) + cols_};
    }

    void set_row(std::size_t r, const std::vector<std::uint8_t>& v) {
        if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
        std::copy(v.begin(), v.end(), row_ptr(r));
    }

    void append_row(const std::vector<std::uint8_t>& v) {
        if (rows_ != 0 && v.size() != cols_)
            throw std::invalid_argument("row length mismatch");
        if (rows_ == 0) cols_ = v.size();
        data_.insert(data_.end(), v.begin(), v.end());
        ++rows_;
    }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t.at(c, r) = at(r, c);
        return t;
    }

    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    const std::vector<std::uint8_t>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> data_;
};

// v * M for a row vector v of length M.rows().
inline std::vector<std::uint8_t> row_times_matrix(const std::vector<std::uint8_t>& v,
                                                  const ExactMatrix& m,
                                                  const FieldSpec& f) {
    if (v.size() != m.rows()) throw std::invalid_argument("dimension mismatch");
    std::vector<std::uint8_t> out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::uint8_t s = v[r];
        if (s == 0) continue;
        const std::uint8_t* src = m.row_ptr(r);
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[c] = f.add(out[c], f.mul(s, src[c]));
    }
    return out;
}

// M * v for a column vector v of length M.cols().
inline std::vector<std::uint8_t> matrix_times_col(const ExactMatrix& m,
                                                  const std::vector<std::uint8_t>& v,
                                                  const FieldSpec& f) {
    if (v.size() != m.cols()) throw std::invalid_argument("dimension mismatch");
    std::vector<std::uint8_t> out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const std::uint8_t* src = m.row_ptr(r);
        unsigned acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c)
            acc += unsigned(src[c]) * unsigned(v[c]);
        out[r] = f.reduce(static_cast<long long>(acc));
    }
    return out;
}

namespace detail {

// Forward elimination working set. Rows are eliminated in the order given;
// pivot choice is deterministic: first nonzero column, lowest surviving row.
class Eliminator {
public:
    explicit Eliminator(std::size_t cols, const FieldSpec& f) : cols_(cols), field_(f) {}

    // Adds a row, reducing it against existing pivots. Returns true if the
    // row was independent (a new pivot was created).
    bool add_row(std::vector<std::uint8_t> row) {
        reduce_against_pivots(row);
        for (std::size_t c = 0; c < cols_; ++c) {
            if (row[c] != 0) {
                std::uint8_t s = field_.inv(row[c]);
                for (std::size_t j = c; j < cols_; ++j)
                    row[j] = field_.mul(row[j], s);
                pivot_cols_.push_back(c);
                rows_.push_back(std::move(row));
                return true;
            }
        }
        return false;
    }

    // Reduces v in place against the stored pivots; v ends zero iff it was
    // in the span of the added rows.
    void reduce_against_pivots(std::vector<std::uint8_t>& v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::uint8_t coeff = v[pivot_cols_[i]];
            if (coeff == 0) continue;
            std::uint8_t m = field_.neg(coeff);
            const std::vector<std::uint8_t>& pr = rows_[i];
            for (std::size_t j = pivot_cols_[i]; j < cols_; ++j)
                v[j] = field_.add(v[j], field_.mul(m, pr[j]));
        }
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t cols_;
    FieldSpec field_;
    std::vector<std::vector<std::uint8_t>> rows_;
    std::vector<std::size_t> pivot_cols_;
};

inline bool is_zero(const std::vector<std::uint8_t>& v) {
    for (std::uint8_t x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace detail

inline std::size_t rank(const ExactMatrix& m, const FieldSpec& f = FieldSpec{}) {
    detail::Eliminator e(m.cols(), f);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<std::uint8_t> row = m.row(r);
        for (auto& x : row) x = f.reduce(x);
        e.add_row(std::move(row));
    }
    return e.rank();
}

inline bool in_span(const std::vector<std::uint8_t>& v, const ExactMatrix& s,
                    const FieldSpec& f = FieldSpec{}) {
    if (v.size() != s.cols()) throw std::invalid_argument("dimension mismatch");
    detail::Eliminator e(s.cols(), f);
    for (std::size_t r = 0; r < s.rows(); ++r) e.add_row(s.row(r));
    std::vector<std::uint8_t> w = v;
    for (auto& x : w) x = f.reduce(x);
    e.reduce_against_pivots(w);
    return detail::is_zero(w);
}

// Reduced row echelon form with the row transform recorded:
// transform * input == reduced, pivot columns in increasing order.
struct RowEchelon {
    ExactMatrix reduced;
    ExactMatrix transform;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

inline RowEchelon row_reduce(const ExactMatrix& m, const FieldSpec& f = FieldSpec{}) {
    RowEchelon out;
    out.reduced = m;
    out.transform = ExactMatrix::identity(m.rows());
    ExactMatrix& a = out.reduced;
    ExactMatrix& t = out.transform;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            a.at(r, c) = f.reduce(a.at(r, c));

    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t pivot = lead;
        while (pivot < a.rows() && a.at(pivot, c) == 0) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != lead) {
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a.at(pivot, j), a.at(lead, j));
            for (std::size_t j = 0; j < t.cols(); ++j)
                std::swap(t.at(pivot, j), t.at(lead, j));
        }
        std::uint8_t s = f.inv(a.at(lead, c));
        if (s != 1) {
            for (std::size_t j = 0; j < a.cols(); ++j) a.at(lead, j) = f.mul(a.at(lead, j), s);
            for (std::size_t j = 0; j < t.cols(); ++j) t.at(lead, j) = f.mul(t.at(lead, j), s);
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead) continue;
            std::uint8_t coeff = a.at(r, c);
            if (coeff == 0) continue;
            std::uint8_t mneg = f.neg(coeff);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a.at(r, j) = f.add(a.at(r, j), f.mul(mneg, a.at(lead, j)));
            for (std::size_t j = 0; j < t.cols(); ++j)
                t.at(r, j) = f.add(t.at(r, j), f.mul(mneg, t.at(lead, j)));
        }
        out.pivot_cols.push_back(c);
        ++lead;
    }
    return out;
}

// Expresses v as a combination of the RREF rows if possible; the returned
// coefficients are over the *original* rows of the reduced matrix.
inline std::optional<std::vector<std::uint8_t>> solve_against(const RowEchelon& e,
                                                              const std::vector<std::uint8_t>& v,
                                                              const FieldSpec& f) {
    if (v.size() != e.reduced.cols()) throw std::invalid_argument("dimension mismatch");
    std::vector<std::uint8_t> residual = v;
    for (auto& x : residual) x = f.reduce(x);
    std::vector<std::uint8_t> u(e.reduced.rows(), 0);
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        std::uint8_t coeff = residual[e.pivot_cols[i]];
        if (coeff == 0) continue;
        u[i] = coeff;
        std::uint8_t mneg = f.neg(coeff);
        const std::uint8_t* pr = e.reduced.row_ptr(i);
        for (std::size_t j = 0; j < residual.size(); ++j)
            residual[j] = f.add(residual[j], f.mul(mneg, pr[j]));
    }
    if (!detail::is_zero(residual)) return std::nullopt;
    return row_times_matrix(u, e.transform, f);
}

// One deterministic w with w * S == v, or nullopt when v is outside the row
// space of S. Free variables are fixed to zero.
inline std::optional<std::vector<std::uint8_t>> solve_left(const ExactMatrix& s,
                                                           const std::vector<std::uint8_t>& v,
                                                           const FieldSpec& f = FieldSpec{}) {
    RowEchelon e = row_reduce(s, f);
    return solve_against(e, v, f);
}

}  // namespace suicp
