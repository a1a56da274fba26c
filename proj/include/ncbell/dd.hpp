#pragma once

// Double description method: extreme rays of a pointed polyhedral cone
// {z : A z >= 0}, by incremental halfspace insertion with the combinatorial
// adjacency test. Templated on the scalar backend; exact backends make the
// facet counts exact, the float backend serves custom shapes.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ncbell/errors.hpp"
#include "ncbell/exact_matrix.hpp"
#include "ncbell/scalar.hpp"

namespace ncbell {

namespace detail {

class TightSet {
  public:
    explicit TightSet(std::size_t nbits = 0) : words_((nbits + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    void append_bit(bool v) {}  // capacity handled by resize
    void resize(std::size_t nbits) { words_.resize((nbits + 63) / 64, 0); }
    static TightSet intersect(const TightSet& a, const TightSet& b) {
        TightSet r;
        r.words_.resize(std::max(a.words_.size(), b.words_.size()), 0);
        for (std::size_t i = 0; i < std::min(a.words_.size(), b.words_.size()); ++i)
            r.words_[i] = a.words_[i] & b.words_[i];
        return r;
    }
    // this subset-of other?
    bool subset_of(const TightSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            std::uint64_t ow = i < o.words_.size() ? o.words_[i] : 0;
            if ((w & ~ow) != 0) return false;
        }
        return true;
    }

  private:
    std::vector<std::uint64_t> words_;
};

}  // namespace detail

// Extreme rays of {z : A z >= 0}. Requires rank(A) == dim (pointed cone).
// Rays are returned normalized (positive scaling only) in deterministic order.
template <class S>
Matrix<S> dd_extreme_rays(const Matrix<S>& a) {
    if (a.empty()) throw SolverError("dd: empty constraint system");
    const std::size_t m = a.size(), n = a[0].size();

    // greedy full-rank initial subset
    std::vector<std::size_t> init;
    Matrix<S> probe;
    for (std::size_t i = 0; i < m && init.size() < n; ++i) {
        probe.push_back(a[i]);
        if (matrix_rank(probe) == init.size() + 1)
            init.push_back(i);
        else
            probe.pop_back();
    }
    if (init.size() != n) throw SolverError("dd: cone is not pointed (rank-deficient system)");

    // initial rays: columns of B^{-1} where B is the initial row block
    Matrix<S> aug(n, Row<S>(2 * n, S(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[init[i]][j];
        aug[i][n + i] = S(1);
    }
    rref_inplace(aug);
    Matrix<S> rays(n, Row<S>(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) rays[j][i] = aug[i][n + j];
        normalize_ray(rays[j]);
    }

    std::vector<detail::TightSet> tight(n, detail::TightSet(m));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (i != j) tight[j].set(init[i]);

    std::vector<bool> inserted(m, false);
    for (auto i : init) inserted[i] = true;

    for (std::size_t row = 0; row < m; ++row) {
        if (inserted[row]) continue;
        std::vector<S> vals;
        vals.reserve(rays.size());
        for (const auto& r : rays) vals.push_back(dot(a[row], r));

        std::vector<std::size_t> pos, neg, zer;
        for (std::size_t j = 0; j < rays.size(); ++j) {
            int s = ScalarOps<S>::sign(vals[j]);
            if (s > 0) pos.push_back(j);
            else if (s < 0) neg.push_back(j);
            else zer.push_back(j);
        }
        if (neg.empty()) {
            for (auto j : zer) tight[j].set(row);
            inserted[row] = true;
            continue;
        }

        Matrix<S> next_rays;
        std::vector<detail::TightSet> next_tight;
        for (auto j : pos) { next_rays.push_back(rays[j]); next_tight.push_back(tight[j]); }
        for (auto j : zer) {
            next_rays.push_back(rays[j]);
            auto t = tight[j];
            t.set(row);
            next_tight.push_back(t);
        }
        for (auto jp : pos) {
            for (auto jn : neg) {
                auto common = detail::TightSet::intersect(tight[jp], tight[jn]);
                bool adjacent = true;
                for (std::size_t jo = 0; jo < rays.size(); ++jo) {
                    if (jo == jp || jo == jn) continue;
                    if (common.subset_of(tight[jo])) { adjacent = false; break; }
                }
                if (!adjacent) continue;
                Row<S> comb(n);
                for (std::size_t c = 0; c < n; ++c)
                    comb[c] = vals[jp] * rays[jn][c] - vals[jn] * rays[jp][c];
                normalize_ray(comb);
                common.set(row);
                next_rays.push_back(std::move(comb));
                next_tight.push_back(std::move(common));
            }
        }
        rays = std::move(next_rays);
        tight = std::move(next_tight);
        inserted[row] = true;
    }

    // deterministic output order: lexicographic by sign/value
    std::vector<std::size_t> order(rays.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
        for (std::size_t c = 0; c < n; ++c) {
            int s = ScalarOps<S>::sign(rays[l][c] - rays[r][c]);
            if (s != 0) return s < 0;
        }
        return false;
    });
    Matrix<S> out;
    out.reserve(rays.size());
    for (auto i : order) out.push_back(std::move(rays[i]));
    return out;
}

}  // namespace ncbell
