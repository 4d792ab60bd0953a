#ifndef LAWRENCE_LATTICE_HPP
#define LAWRENCE_LATTICE_HPP

#include "lawrence/errors.hpp"
#include "lawrence/matrix.hpp"
#include "lawrence/vector.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace lawrence {

namespace detail {

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
inline std::tuple<Integer, Integer, Integer> ext_gcd(const Integer& a, const Integer& b) {
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (!r.is_zero()) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = std::move(r);
        r = std::move(tmp);
        tmp = old_s - q * s;
        old_s = std::move(s);
        s = std::move(tmp);
        tmp = old_t - q * t;
        old_t = std::move(t);
        t = std::move(tmp);
    }
    if (old_r.sign() < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

/// Integer row echelon form of `rows` (unimodular row operations only).
/// Entries above each pivot are reduced into [0, pivot). Returns pivot columns.
inline std::vector<std::size_t> echelonize(std::vector<IntVector>& rows, std::size_t cols,
                                           std::size_t col_limit) {
    std::vector<std::size_t> pivots;
    std::size_t top = 0;
    for (std::size_t c = 0; c < std::min(cols, col_limit) && top < rows.size(); ++c) {
        // Fold every row below `top` into the pivot row with gcd steps.
        for (std::size_t i = top + 1; i < rows.size(); ++i) {
            if (rows[i][c].is_zero()) continue;
            if (rows[top][c].is_zero()) {
                std::swap(rows[top], rows[i]);
                continue;
            }
            auto [g, s, t] = ext_gcd(rows[top][c], rows[i][c]);
            const Integer a = rows[top][c] / g;
            const Integer b = rows[i][c] / g;
            IntVector new_top(cols), new_i(cols);
            for (std::size_t k = 0; k < cols; ++k) {
                new_top[k] = s * rows[top][k] + t * rows[i][k];
                new_i[k] = a * rows[i][k] - b * rows[top][k];
            }
            rows[top] = std::move(new_top);
            rows[i] = std::move(new_i);
        }
        if (rows[top][c].is_zero()) continue;
        if (rows[top][c].sign() < 0) rows[top] = -rows[top];
        for (std::size_t i = 0; i < top; ++i) {
            if (rows[i][c].is_zero()) continue;
            const Integer q = floor_div(rows[i][c], rows[top][c]);
            if (!q.is_zero()) rows[i] -= q * rows[top];
        }
        pivots.push_back(c);
        ++top;
    }
    return pivots;
}

}  // namespace detail

/// Basis of the saturated lattice {x ∈ Z^n : m x = 0}, via unimodular column
/// operations on m. The result is in reduced row echelon form.
inline std::vector<IntVector> kernel_lattice_basis(const IntMatrix& m) {
    const std::size_t n = m.cols();
    const std::size_t d = m.rows();
    if (n == 0) throw precondition_error("matrix has no columns");
    // Rows of [m^T | I_n]; reducing the left block leaves kernel vectors on the right.
    std::vector<IntVector> rows(n, IntVector(d + n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < d; ++i) rows[j][i] = m(i, j);
        rows[j][d + j] = 1;
    }
    const auto pivots = detail::echelonize(rows, d + n, d);
    std::vector<IntVector> basis;
    for (std::size_t j = pivots.size(); j < n; ++j) {
        IntVector v(rows[j].begin() + static_cast<std::ptrdiff_t>(d), rows[j].end());
        basis.push_back(std::move(v));
    }
    if (!basis.empty()) detail::echelonize(basis, n, n);
    std::erase_if(basis, [](const IntVector& v) { return v.is_zero(); });
    return basis;
}

inline std::size_t rank_of(const IntMatrix& m) {
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return detail::echelonize(rows, m.cols(), m.cols()).size();
}

/// Nonnegative integer points x with m x = b.
struct Fiber {
    IntMatrix matrix;
    IntVector rhs;
    std::vector<IntVector> points;  // sorted, distinct
};

namespace detail {

/// Depth-first fiber search over small nonnegative matrices. Coordinates are
/// fixed in index order; a coordinate that is the last one touching some row
/// is forced by that row's residual.
class FiberSearch {
public:
    FiberSearch(const IntMatrix& m, const IntVector& b, std::vector<bool> allowed = {})
        : rows_(m.rows()), cols_(m.cols()), a_(rows_ * cols_), res_(rows_) {
        if (!m.is_nonnegative()) throw precondition_error("fiber matrix must be nonnegative");
        if (b.size() != rows_) throw dimension_error("fiber right-hand side has wrong length");
        allowed_ = allowed.empty() ? std::vector<bool>(cols_, true) : std::move(allowed);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!allowed_[j]) continue;
            bool zero = true;
            for (std::size_t i = 0; i < rows_; ++i) zero = zero && m(i, j).is_zero();
            if (zero) throw precondition_error("fiber matrix has a zero column");
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) a_[i * cols_ + j] = m(i, j).to_int64();
            res_[i] = b[i].to_int64();
            if (res_[i] < 0) throw precondition_error("negative fiber degree");
        }
        last_.assign(rows_, -1);
        first_.assign(rows_, static_cast<std::ptrdiff_t>(cols_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (allowed_[j] && a_[i * cols_ + j] > 0) {
                    last_[i] = static_cast<std::ptrdiff_t>(j);
                    first_[i] = std::min(first_[i], static_cast<std::ptrdiff_t>(j));
                }
        rows_ending_.assign(cols_, {});
        for (std::size_t i = 0; i < rows_; ++i)
            if (last_[i] >= 0) rows_ending_[static_cast<std::size_t>(last_[i])].push_back(i);
        col_rows_.assign(cols_, {});
        for (std::size_t j = 0; j < cols_; ++j)
            for (std::size_t i = 0; i < rows_; ++i)
                if (a_[i * cols_ + j] > 0) col_rows_[j].push_back(i);
        x_.assign(cols_, 0);
    }

    /// Calls `visit(x)` for each point until it returns false. Returns false
    /// if the visit was stopped early.
    bool run(const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
        for (std::size_t i = 0; i < rows_; ++i)
            if (last_[i] < 0 && res_[i] != 0) return true;  // row can never be met
        visit_ = &visit;
        return dfs(0);
    }

private:
    bool dfs(std::size_t j) {
        if (j == cols_) {
            for (auto r : res_)
                if (r != 0) return true;
            return (*visit_)(x_);
        }
        if (!allowed_[j] || col_rows_[j].empty()) {
            x_[j] = 0;
            return check_rows_end(j) ? dfs(j + 1) : true;
        }
        std::int64_t hi = INT64_MAX;
        for (auto i : col_rows_[j]) hi = std::min(hi, res_[i] / a_[i * cols_ + j]);
        std::int64_t lo = 0;
        // Rows that end here force the value.
        for (auto i : rows_ending_[j]) {
            const std::int64_t a = a_[i * cols_ + j];
            if (res_[i] % a != 0) return true;
            const std::int64_t forced = res_[i] / a;
            if (forced > hi || forced < lo) return true;
            lo = hi = forced;
        }
        for (std::int64_t v = hi; v >= lo; --v) {
            x_[j] = v;
            for (auto i : col_rows_[j]) res_[i] -= v * a_[i * cols_ + j];
            const bool go_on = dfs(j + 1);
            for (auto i : col_rows_[j]) res_[i] += v * a_[i * cols_ + j];
            if (!go_on) {
                x_[j] = 0;
                return false;
            }
        }
        x_[j] = 0;
        return true;
    }

    bool check_rows_end(std::size_t j) const {
        for (auto i : rows_ending_[j])
            if (res_[i] != 0) return false;
        return true;
    }

    std::size_t rows_, cols_;
    std::vector<std::int64_t> a_;
    std::vector<std::int64_t> res_;
    std::vector<bool> allowed_;
    std::vector<std::ptrdiff_t> last_, first_;
    std::vector<std::vector<std::size_t>> rows_ending_;
    std::vector<std::vector<std::size_t>> col_rows_;
    std::vector<std::int64_t> x_;
    const std::function<bool(const std::vector<std::int64_t>&)>* visit_ = nullptr;
};

inline IntVector to_int_vector(const std::vector<std::int64_t>& x) {
    IntVector v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i];
    return v;
}

}  // namespace detail

/// Visits fiber points in an unspecified but deterministic order; `visit`
/// returns false to stop. Returns false if stopped early.
inline bool for_each_fiber_point(const IntMatrix& m, const IntVector& b,
                                 const std::function<bool(const std::vector<std::int64_t>&)>& visit,
                                 std::vector<bool> allowed = {}) {
    detail::FiberSearch search(m, b, std::move(allowed));
    return search.run(visit);
}

/// Complete enumeration of {x ∈ N^n : m x = b}, sorted. Requires a
/// nonnegative matrix without zero columns so the fiber is finite.
inline Fiber fiber_enumerate(const IntMatrix& m, const IntVector& b,
                             std::size_t max_points = Caps{}.max_fiber_points) {
    Fiber f{m, b, {}};
    for_each_fiber_point(m, b, [&](const std::vector<std::int64_t>& x) {
        if (f.points.size() >= max_points)
            throw cap_exceeded("max-fiber-points",
                               "fiber of degree (" + b.str() + ") has more than " +
                                   std::to_string(max_points) + " points");
        f.points.push_back(detail::to_int_vector(x));
        return true;
    });
    std::sort(f.points.begin(), f.points.end());
    return f;
}

/// A pair (v, v') of nonzero kernel vectors summing to u.
struct Decomposition2 {
    IntVector first;
    IntVector second;
};

/// Searches for a conformal decomposition u = v + v' with v, v' nonzero in
/// ker(m). Exhaustive over v ⊑ u with row-range pruning.
inline std::optional<Decomposition2> has_conformal_decomposition(const IntVector& u,
                                                                 const IntMatrix& m) {
    if (u.size() != m.cols()) throw dimension_error("vector length does not match matrix");
    if (!m.annihilates(u)) throw precondition_error("vector is not in the kernel");
    if (u.is_zero()) throw precondition_error("zero vector");

    std::vector<std::size_t> supp;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero()) supp.push_back(i);
    const std::size_t d = m.rows();
    const std::size_t k = supp.size();

    // Work in |u| coordinates: v_i = sign(u_i) * t_i with 0 <= t_i <= |u_i|;
    // column i contributes sign(u_i) * m(:, i) * t_i.
    std::vector<std::vector<std::int64_t>> col(k, std::vector<std::int64_t>(d));
    std::vector<std::int64_t> cap(k);
    for (std::size_t s = 0; s < k; ++s) {
        const std::int64_t sg = u[supp[s]].sign();
        cap[s] = abs(u[supp[s]]).to_int64();
        for (std::size_t r = 0; r < d; ++r) col[s][r] = sg * m(r, supp[s]).to_int64();
    }
    // Suffix ranges of achievable row contributions.
    std::vector<std::vector<std::int64_t>> lo(k + 1, std::vector<std::int64_t>(d, 0));
    std::vector<std::vector<std::int64_t>> hi(k + 1, std::vector<std::int64_t>(d, 0));
    for (std::size_t s = k; s-- > 0;)
        for (std::size_t r = 0; r < d; ++r) {
            const std::int64_t c = col[s][r] * cap[s];
            lo[s][r] = lo[s + 1][r] + std::min<std::int64_t>(0, c);
            hi[s][r] = hi[s + 1][r] + std::max<std::int64_t>(0, c);
        }

    std::vector<std::int64_t> t(k, 0), acc(d, 0);
    std::int64_t chosen = 0, total = 0;
    for (auto c : cap) total += c;
    std::optional<Decomposition2> found;

    std::function<bool(std::size_t)> dfs = [&](std::size_t s) -> bool {
        for (std::size_t r = 0; r < d; ++r)
            if (acc[r] + lo[s][r] > 0 || acc[r] + hi[s][r] < 0) return false;
        if (s == k) {
            if (chosen == 0 || chosen == total) return false;
            IntVector v(u.size());
            for (std::size_t q = 0; q < k; ++q) v[supp[q]] = u[supp[q]].sign() * t[q];
            found = Decomposition2{v, u - v};
            return true;
        }
        for (std::int64_t x = 0; x <= cap[s]; ++x) {
            t[s] = x;
            chosen += x;
            for (std::size_t r = 0; r < d; ++r) acc[r] += col[s][r] * x;
            const bool hit = dfs(s + 1);
            for (std::size_t r = 0; r < d; ++r) acc[r] -= col[s][r] * x;
            chosen -= x;
            if (hit) return true;
        }
        t[s] = 0;
        return false;
    };
    dfs(0);
    return found;
}

/// Searches for a semi-conformal decomposition u = v + v' with v, v' nonzero
/// in ker(m) and v_i > 0 ⇒ v_i <= u_i. Candidate positive parts w ≤ u⁺ are
/// enumerated; for each, z runs over the fiber of m·w supported off supp(w)
/// and v = w − z. Exponential in ‖u⁺‖₁.
inline std::optional<Decomposition2> has_semiconformal_decomposition(const IntVector& u,
                                                                     const IntMatrix& m) {
    if (u.size() != m.cols()) throw dimension_error("vector length does not match matrix");
    if (!m.is_nonnegative() || m.has_zero_column())
        throw precondition_error("matrix must be nonnegative without zero columns");
    if (!m.annihilates(u)) throw precondition_error("vector is not in the kernel");
    if (u.is_zero()) throw precondition_error("zero vector");

    const IntVector up = positive_part(u);
    const IntVector un = negative_part(u);
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (up[i].sign() > 0) pos.push_back(i);

    IntVector w(u.size());
    std::optional<Decomposition2> found;
    std::function<bool(std::size_t, bool)> choose = [&](std::size_t s, bool nonzero) -> bool {
        if (s == pos.size()) {
            if (!nonzero) return false;
            std::vector<bool> allowed(u.size(), true);
            for (std::size_t i : pos)
                if (!w[i].is_zero()) allowed[i] = false;
            const IntVector deg = m * w;
            for_each_fiber_point(
                m, deg,
                [&](const std::vector<std::int64_t>& z) {
                    IntVector v = w;
                    for (std::size_t i = 0; i < z.size(); ++i) v[i] -= z[i];
                    if (v == u) return true;
                    found = Decomposition2{v, u - v};
                    return false;
                },
                allowed);
            return found.has_value();
        }
        const std::int64_t cap = up[pos[s]].to_int64();
        for (std::int64_t x = 0; x <= cap; ++x) {
            w[pos[s]] = x;
            if (choose(s + 1, nonzero || x > 0)) return true;
        }
        w[pos[s]] = 0;
        return false;
    };
    choose(0, false);
    (void)un;
    return found;
}

/// A nonnegative matrix without zero columns and the same integer kernel,
/// obtained by adding a multiple of a strictly positive row-space vector to
/// every row. Exists exactly when the kernel meets the nonnegative orthant
/// only at 0; the positive vector is searched among small combinations of
/// rows, so `nullopt` may also mean the search bound was too small.
inline std::optional<IntMatrix> nonnegative_equivalent(const IntMatrix& m, int coeff_bound = 3) {
    if (m.is_nonnegative() && !m.has_zero_column()) return m;
    const std::size_t d = m.rows();
    if (d == 0 || d > 6) return std::nullopt;
    std::vector<int> y(d, -coeff_bound);
    while (true) {
        IntVector c(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (std::size_t i = 0; i < d; ++i) c[j] += Integer(y[i]) * m(i, j);
        const bool positive =
            std::all_of(c.begin(), c.end(), [](const Integer& x) { return x.sign() > 0; });
        if (positive) {
            Integer shift = 0;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    // need m(i,j) + shift*c_j >= 0
                    if (m(i, j).sign() < 0) {
                        Integer need = (-m(i, j) + c[j] - 1) / c[j];
                        shift = std::max(shift, need);
                    }
                }
            IntMatrix out(d + 1, m.cols());
            for (std::size_t j = 0; j < m.cols(); ++j) out(0, j) = c[j];
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) out(i + 1, j) = m(i, j) + shift * c[j];
            return out;
        }
        std::size_t k = 0;
        while (k < d && y[k] == coeff_bound) y[k++] = -coeff_bound;
        if (k == d) return std::nullopt;
        ++y[k];
    }
}

}  // namespace lawrence

#endif
