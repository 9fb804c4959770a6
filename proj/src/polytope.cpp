#include "dwork/polytope.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace dwork {

LatticePolytope::LatticePolytope(unsigned r, std::set<Point> generators)
    : r_(r), gens_(std::move(generators)) {
    if (gens_.empty()) throw std::invalid_argument("polytope needs at least one generator");
    for (const auto& g : gens_)
        if (g.size() != r_) throw std::invalid_argument("generator dimension mismatch");
}

LatticePolytope::Point LatticePolytope::box_min() const {
    Point lo(r_, std::numeric_limits<int64_t>::max());
    for (const auto& g : gens_)
        for (unsigned k = 0; k < r_; ++k) lo[k] = std::min(lo[k], g[k]);
    return lo;
}

LatticePolytope::Point LatticePolytope::box_max() const {
    Point hi(r_, std::numeric_limits<int64_t>::min());
    for (const auto& g : gens_)
        for (unsigned k = 0; k < r_; ++k) hi[k] = std::max(hi[k], g[k]);
    return hi;
}

bool LatticePolytope::contains(const Point& x) const {
    if (x.size() != r_) throw std::invalid_argument("point dimension mismatch");
    if (r_ == 1) {
        auto lo = box_min(), hi = box_max();
        return lo[0] <= x[0] && x[0] <= hi[0];
    }
    return contains_lp(x);
}

// Phase-1 simplex over exact rationals: feasibility of
//   sum_i lambda_i v_i = x, sum_i lambda_i = 1, lambda >= 0.
// Bland's rule, so termination is guaranteed.
bool LatticePolytope::contains_lp(const Point& x) const {
    const size_t m = r_ + 1;                 // equality rows
    const size_t n = gens_.size();           // lambda columns
    // Tableau: columns = n structural + m artificial + rhs.
    std::vector<std::vector<mpq_class>> T(m, std::vector<mpq_class>(n + m + 1, 0));
    {
        size_t j = 0;
        for (const auto& g : gens_) {
            for (unsigned k = 0; k < r_; ++k) T[k][j] = static_cast<long>(g[k]);
            T[r_][j] = 1;
            ++j;
        }
    }
    for (unsigned k = 0; k < r_; ++k) T[k][n + m] = static_cast<long>(x[k]);
    T[r_][n + m] = 1;
    // Make rhs nonnegative, then install artificial basis.
    for (size_t i = 0; i < m; ++i) {
        if (T[i][n + m] < 0)
            for (auto& v : T[i]) v = -v;
        T[i][n + i] = 1;
    }
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = n + i;
    // Objective row: minimize sum of artificials; reduced costs.
    std::vector<mpq_class> obj(n + m + 1, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= n + m; ++j) obj[j] -= T[i][j];
    for (size_t i = 0; i < m; ++i) obj[n + i] = 0;

    while (true) {
        size_t enter = n + m;
        for (size_t j = 0; j < n + m; ++j) {
            if (obj[j] < 0) { enter = j; break; }  // Bland
        }
        if (enter == n + m) break;
        size_t leave = m;
        mpq_class best;
        for (size_t i = 0; i < m; ++i) {
            if (T[i][enter] > 0) {
                mpq_class ratio = T[i][n + m] / T[i][enter];
                if (leave == m || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
        }
        if (leave == m) break;  // unbounded cannot happen here
        // Pivot.
        mpq_class piv = T[leave][enter];
        for (auto& v : T[leave]) v /= piv;
        for (size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            mpq_class f = T[i][enter];
            for (size_t j = 0; j <= n + m; ++j) T[i][j] -= f * T[leave][j];
        }
        if (obj[enter] != 0) {
            mpq_class f = obj[enter];
            for (size_t j = 0; j <= n + m; ++j) obj[j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    // Feasible iff the artificial objective reaches zero.
    mpq_class total = 0;
    for (size_t i = 0; i < m; ++i)
        if (basis[i] >= n) total += T[i][n + m];
    return total == 0;
}

LatticePolytope newton_polytope_t(const LaurentPoly& a) {
    if (a.is_zero()) throw std::invalid_argument("zero polynomial has no Newton polytope");
    std::set<LatticePolytope::Point> gens;
    for (const auto& [e, c] : a.terms()) gens.insert(e.t);
    return LatticePolytope(a.t_vars(), std::move(gens));
}

LatticePolytope weighted_minkowski_sum(const std::vector<LatticePolytope>& polys,
                                       const std::vector<int64_t>& weights) {
    if (polys.empty() || polys.size() != weights.size())
        throw std::invalid_argument("polytope and weight lists must be nonempty and equal length");
    const unsigned r = polys[0].dim();
    for (const auto& P : polys)
        if (P.dim() != r) throw std::invalid_argument("polytope dimension mismatch");
    for (int64_t w : weights)
        if (w <= 0) throw std::invalid_argument("weights must be positive");
    std::set<LatticePolytope::Point> acc = {LatticePolytope::Point(r, 0)};
    for (size_t i = 0; i < polys.size(); ++i) {
        std::set<LatticePolytope::Point> next;
        for (const auto& a : acc) {
            for (const auto& g : polys[i].generators()) {
                LatticePolytope::Point s(r);
                for (unsigned k = 0; k < r; ++k) {
                    int64_t scaled, sum;
                    if (__builtin_mul_overflow(g[k], weights[i], &scaled) ||
                        __builtin_add_overflow(a[k], scaled, &sum))
                        throw std::overflow_error("Minkowski sum exponent overflow");
                    s[k] = sum;
                }
                next.insert(std::move(s));
            }
        }
        acc = std::move(next);
    }
    return LatticePolytope(r, std::move(acc));
}

bool polytope_lattice_intersection_trivial(const LatticePolytope& P, int64_t q) {
    if (q < 2) throw std::invalid_argument("lattice scale must be >= 2");
    const unsigned r = P.dim();
    LatticePolytope::Point origin(r, 0);
    if (!P.contains(origin)) return false;
    auto lo = P.box_min(), hi = P.box_max();
    std::vector<int64_t> mlo(r), mhi(r);
    for (unsigned k = 0; k < r; ++k) {
        // ceil(lo/q), floor(hi/q)
        mlo[k] = lo[k] >= 0 ? (lo[k] + q - 1) / q : -((-lo[k]) / q);
        mhi[k] = hi[k] >= 0 ? hi[k] / q : -((-hi[k] + q - 1) / q);
        if (mlo[k] > mhi[k]) return true;  // box holds no multiple of q
    }
    std::vector<int64_t> idx = mlo;
    while (true) {
        LatticePolytope::Point pt(r);
        bool is_origin = true;
        for (unsigned k = 0; k < r; ++k) {
            pt[k] = idx[k] * q;
            if (pt[k] != 0) is_origin = false;
        }
        if (!is_origin && P.contains(pt)) return false;
        unsigned k = 0;
        for (; k < r; ++k) {
            if (++idx[k] <= mhi[k]) break;
            idx[k] = mlo[k];
        }
        if (k == r) break;
    }
    return true;
}

std::pair<int, int> admissibility_failure(const std::vector<LaurentPoly>& tuple, uint64_t p) {
    if (tuple.empty()) throw std::invalid_argument("empty tuple");
    std::vector<LatticePolytope> N;
    N.reserve(tuple.size());
    for (const auto& f : tuple) N.push_back(newton_polytope_t(f));
    const int l = static_cast<int>(tuple.size());
    for (int i = 0; i < l; ++i) {
        for (int j = i; j < l; ++j) {
            std::vector<LatticePolytope> window(N.begin() + i, N.begin() + j + 1);
            std::vector<int64_t> weights;
            int64_t w = 1;
            for (int k = i; k <= j; ++k) {
                weights.push_back(w);
                if (__builtin_mul_overflow(w, static_cast<int64_t>(p), &w))
                    throw std::overflow_error("weight overflow in admissibility test");
            }
            LatticePolytope sum = weighted_minkowski_sum(window, weights);
            if (!polytope_lattice_intersection_trivial(sum, w)) return {i, j};
        }
    }
    return {-1, -1};
}

bool is_admissible_tuple(const std::vector<LaurentPoly>& tuple, uint64_t p) {
    return admissibility_failure(tuple, p) == std::pair<int, int>{-1, -1};
}

}  // namespace dwork
