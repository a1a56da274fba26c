#pragma once

// Dense Gaussian-elimination routines templated on the scalar backend.
// Sizes in this project are small (tens to a few hundred rows), so simple
// row operations with full materialization are the right tool.

#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ncbell/scalar.hpp"

namespace ncbell {

template <class S>
using Row = std::vector<S>;
template <class S>
using Matrix = std::vector<Row<S>>;

template <class S>
Matrix<S> identity_matrix(std::size_t n) {
    Matrix<S> m(n, Row<S>(n, S(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = S(1);
    return m;
}

// In-place reduced row echelon form; returns pivot column per pivot row.
template <class S>
std::vector<std::size_t> rref_inplace(Matrix<S>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = rows;
        if constexpr (ScalarOps<S>::exact) {
            for (std::size_t i = r; i < rows; ++i)
                if (!ScalarOps<S>::is_zero(m[i][c])) { pr = i; break; }
        } else {
            // partial pivoting for the float backend
            double best = 0;
            for (std::size_t i = r; i < rows; ++i) {
                double v = std::fabs(to_double(m[i][c]));
                if (v > best) { best = v; pr = i; }
            }
            if (best < ScalarOps<S>::eps) pr = rows;
        }
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        S pv = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] / pv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || ScalarOps<S>::is_zero(m[i][c])) continue;
            S f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class S>
std::size_t matrix_rank(Matrix<S> m) {
    return rref_inplace(m).size();
}

// Basis of the right null space {x : M x = 0}.
template <class S>
Matrix<S> null_space(Matrix<S> m) {
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    auto pivots = rref_inplace(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix<S> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        Row<S> v(cols, S(0));
        v[fc] = S(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve M x = b when a solution exists; nullopt if inconsistent.
// When the system is underdetermined, free variables are set to zero.
template <class S>
std::optional<Row<S>> solve_linear(Matrix<S> m, const Row<S>& b) {
    assert(m.size() == b.size());
    if (m.empty()) return Row<S>{};
    const std::size_t cols = m[0].size();
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    auto pivots = rref_inplace(m);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = 1 row
    Row<S> x(cols, S(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
    return x;
}

template <class S>
S dot(const Row<S>& a, const Row<S>& b) {
    assert(a.size() == b.size());
    S acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

// Scale a rational vector by a positive factor to coprime integers.
// Positive scaling only: rays and inequality functionals are orientation-sensitive.
inline void make_primitive(Row<Rational>& v) {
    mpz_class lcm_den(1), gcd_num(0);
    for (const auto& q : v) {
        mpz_class d = q.get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    }
    for (auto& q : v) q *= lcm_den;
    for (const auto& q : v) {
        mpz_class n = q.get_num();
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
    }
    if (gcd_num == 0) return;
    for (auto& q : v) {
        q /= gcd_num;
        q.canonicalize();
    }
}

// Positive-scale normalization for the other backends (dedup/canonical keys).
inline void normalize_ray(Row<Rational>& v) { make_primitive(v); }

inline void normalize_ray(Row<Golden>& v) {
    for (const auto& g : v) {
        if (!g.is_zero()) {
            Golden s = ScalarOps<Golden>::abs(g).inverse();
            for (auto& e : v) e *= s;
            return;
        }
    }
}

inline void normalize_ray(Row<double>& v) {
    double n2 = 0;
    for (double e : v) n2 += e * e;
    if (n2 <= 0) return;
    double s = 1.0 / std::sqrt(n2);
    for (auto& e : v) e *= s;
}

}  // namespace ncbell
