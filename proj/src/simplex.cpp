#include "sigtoric/simplex.hpp"

#include <cstddef>

namespace sigtoric {

namespace {

// Phase-I tableau. Returns the artificial objective value (0 iff feasible)
// and leaves a basic feasible solution of the artificial problem in x.
struct PhaseOne {
    std::size_t m, n;
    std::vector<std::vector<Rational>> t; // (m+1) x (n+m+1)
    std::vector<std::size_t> basis;

    PhaseOne(const QMatrix& a, const std::vector<Rational>& b) : m(a.size()), n(m ? a[0].size() : 0) {
        t.assign(m + 1, std::vector<Rational>(n + m + 1, 0));
        for (std::size_t i = 0; i < m; ++i) {
            bool neg = b[i] < 0;
            for (std::size_t j = 0; j < n; ++j) t[i][j] = neg ? -a[i][j] : a[i][j];
            t[i][n + i] = 1;
            t[i][n + m] = neg ? -b[i] : b[i];
        }
        // objective: minimize sum of artificials -> reduced costs of x columns
        for (std::size_t j = 0; j <= n + m; ++j) {
            Rational s = 0;
            for (std::size_t i = 0; i < m; ++i) s += t[i][j];
            t[m][j] = -s;
        }
        for (std::size_t i = 0; i < m; ++i) t[m][n + i] = 0;
        basis.resize(m);
        for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
    }

    void run() {
        const std::size_t total = n + m;
        for (;;) {
            std::size_t e = total;
            for (std::size_t j = 0; j < total; ++j)
                if (t[m][j] < 0) { e = j; break; } // Bland: lowest index
            if (e == total) return;
            std::size_t l = m;
            Rational best;
            for (std::size_t i = 0; i < m; ++i) {
                if (t[i][e] <= 0) continue;
                Rational ratio = t[i][total] / t[i][e];
                if (l == m || ratio < best || (ratio == best && basis[i] < basis[l])) {
                    best = ratio;
                    l = i;
                }
            }
            if (l == m) return; // unbounded; cannot happen for phase-I
            pivot(l, e);
        }
    }

    void pivot(std::size_t l, std::size_t e) {
        Rational p = t[l][e];
        for (auto& v : t[l]) v /= p;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i == l || t[i][e] == 0) continue;
            Rational f = t[i][e];
            for (std::size_t j = 0; j < t[i].size(); ++j) t[i][j] -= f * t[l][j];
        }
        basis[l] = e;
    }

    bool feasible() const { return t[m][n + m] == 0; }

    std::vector<Rational> solution() const {
        std::vector<Rational> x(n, 0);
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < n) x[basis[i]] = t[i][n + m];
        return x;
    }
};

} // namespace

bool lp_feasible(const QMatrix& a, const std::vector<Rational>& b) {
    if (a.empty()) return true;
    PhaseOne p(a, b);
    p.run();
    return p.feasible();
}

std::optional<std::vector<Rational>> lp_solve_feasible(const QMatrix& a,
                                                       const std::vector<Rational>& b) {
    if (a.empty()) return std::vector<Rational>{};
    PhaseOne p(a, b);
    p.run();
    if (!p.feasible()) return std::nullopt;
    return p.solution();
}

bool in_convex_hull(const std::vector<std::vector<Int>>& points, const std::vector<Int>& v) {
    if (points.empty()) return false;
    std::size_t dim = v.size();
    QMatrix a(dim + 1, std::vector<Rational>(points.size()));
    std::vector<Rational> b(dim + 1);
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (std::size_t i = 0; i < dim; ++i) a[i][j] = Rational(points[j][i]);
        a[dim][j] = 1;
    }
    for (std::size_t i = 0; i < dim; ++i) b[i] = Rational(v[i]);
    b[dim] = 1;
    return lp_feasible(a, b);
}

bool in_cone(const std::vector<std::vector<Int>>& generators, const std::vector<Int>& v) {
    bool zero = true;
    for (const Int& x : v)
        if (x != 0) { zero = false; break; }
    if (zero) return true;
    if (generators.empty()) return false;
    std::size_t dim = v.size();
    QMatrix a(dim, std::vector<Rational>(generators.size()));
    std::vector<Rational> b(dim);
    for (std::size_t j = 0; j < generators.size(); ++j)
        for (std::size_t i = 0; i < dim; ++i) a[i][j] = Rational(generators[j][i]);
    for (std::size_t i = 0; i < dim; ++i) b[i] = Rational(v[i]);
    return lp_feasible(a, b);
}

std::vector<Int> positive_functional(const std::vector<std::vector<Int>>& generators) {
    if (generators.empty()) return {};
    std::size_t dim = generators[0].size();
    std::size_t m = generators.size();
    // phi . g - s_g = 1, phi = u - w with u, w, s >= 0
    QMatrix a(m, std::vector<Rational>(2 * dim + m, 0));
    std::vector<Rational> b(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            a[i][j] = Rational(generators[i][j]);
            a[i][dim + j] = -Rational(generators[i][j]);
        }
        a[i][2 * dim + i] = -1;
    }
    auto sol = lp_solve_feasible(a, b);
    if (!sol) return {};
    std::vector<Rational> phi(dim);
    Int denom_lcm = 1;
    for (std::size_t j = 0; j < dim; ++j) {
        phi[j] = (*sol)[j] - (*sol)[dim + j];
        Int den = boost::multiprecision::denominator(phi[j]);
        denom_lcm = boost::multiprecision::lcm(denom_lcm, den);
    }
    std::vector<Int> out(dim);
    for (std::size_t j = 0; j < dim; ++j)
        out[j] = boost::multiprecision::numerator(phi[j]) * (denom_lcm / boost::multiprecision::denominator(phi[j]));
    return out;
}

} // namespace sigtoric
