#include "sigtoric/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace sigtoric {

int rank(QMatrix m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int r = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

Rational determinant(QMatrix m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    if (m[0].size() != n) throw std::invalid_argument("determinant: matrix not square");
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv == n) return 0;
        if (piv != c) { std::swap(m[c], m[piv]); det = -det; }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

namespace {

// In-place Smith normal form, tracking the right transform when asked.
// Classic pivot-and-reduce; fine for the small matrices we feed it.
void snf_inplace(ZMatrix& a, ZMatrix* right) {
    std::size_t rows = a.size();
    if (rows == 0) return;
    std::size_t cols = a[0].size();
    if (right) {
        right->assign(cols, std::vector<Int>(cols, 0));
        for (std::size_t i = 0; i < cols; ++i) (*right)[i][i] = 1;
    }
    auto col_addmul = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t i = 0; i < rows; ++i) a[i][dst] += f * a[i][src];
        if (right)
            for (std::size_t i = 0; i < cols; ++i) (*right)[i][dst] += f * (*right)[i][src];
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
        if (right)
            for (std::size_t i = 0; i < cols; ++i) std::swap((*right)[i][x], (*right)[i][y]);
    };
    auto col_neg = [&](std::size_t x) {
        for (std::size_t i = 0; i < rows; ++i) a[i][x] = -a[i][x];
        if (right)
            for (std::size_t i = 0; i < cols; ++i) (*right)[i][x] = -(*right)[i][x];
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // find a pivot
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows && pi == rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0) { pi = i; pj = j; break; }
        if (pi == rows) break;
        std::swap(a[t], a[pi]);
        if (pj != t) col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) { std::swap(a[t], a[i]); clean = false; }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                col_addmul(j, t, -q);
                if (a[t][j] != 0) { col_swap(t, j); clean = false; }
            }
        }
        if (a[t][t] < 0) col_neg(t);
        ++t;
    }
}

} // namespace

std::vector<Int> smith_diagonal(ZMatrix a) {
    snf_inplace(a, nullptr);
    std::vector<Int> d;
    std::size_t n = std::min(a.size(), a.empty() ? std::size_t{0} : a[0].size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i][i] != 0) d.push_back(a[i][i]);
    return d;
}

ZMatrix saturated_row_basis(const ZMatrix& rows) {
    if (rows.empty()) return {};
    // SNF: U A V = D. Row space of A saturates to the lattice spanned by the
    // first r rows of V^{-1}... we instead use the transpose route:
    // saturation of rowspace(A) = (ker_Z of the integer kernel of A^T)^perp.
    // Simpler standard trick: saturation basis = first r rows of (V^T applied
    // to coordinates)? To stay elementary we do: compute SNF of A with the
    // right transform V (A V = U^{-1} D). Columns of V beyond rank r span
    // ker_Q(A) ∩ Z^n saturated; the saturation of rowspace(A) equals the
    // orthogonal-complement-free description {x : x ⊥ ker-basis}. We obtain a
    // basis of it as the integer kernel of that kernel matrix.
    ZMatrix a = rows;
    ZMatrix v;
    snf_inplace(a, &v);
    std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(a.size(), cols); ++i)
        if (a[i][i] != 0) ++r;
    // ker_Z(A) basis: columns r..cols-1 of V (A * v_col = 0 there).
    ZMatrix ker;
    for (std::size_t j = r; j < cols; ++j) {
        std::vector<Int> col(cols);
        for (std::size_t i = 0; i < cols; ++i) col[i] = v[i][j];
        ker.push_back(std::move(col));
    }
    if (ker.empty()) {
        // full row space: saturation is Z^cols
        ZMatrix basis(cols, std::vector<Int>(cols, 0));
        for (std::size_t i = 0; i < cols; ++i) basis[i][i] = 1;
        return basis;
    }
    // saturation = {x in Z^cols : ker * x = 0}; its basis is the integer
    // kernel of `ker`, computed the same way.
    ZMatrix k2 = ker;
    ZMatrix v2;
    snf_inplace(k2, &v2);
    std::size_t r2 = 0;
    for (std::size_t i = 0; i < std::min(k2.size(), cols); ++i)
        if (k2[i][i] != 0) ++r2;
    ZMatrix basis;
    for (std::size_t j = r2; j < cols; ++j) {
        std::vector<Int> row(cols);
        for (std::size_t i = 0; i < cols; ++i) row[i] = v2[i][j];
        basis.push_back(std::move(row));
    }
    return basis;
}

std::vector<Rational> coords_in_row_basis(const ZMatrix& basis,
                                          const std::vector<Int>& target) {
    // solve sum_i x_i basis[i] = target by elimination on the transpose
    std::size_t n = basis.size();
    if (n == 0) {
        for (const Int& t : target)
            if (t != 0) return {};
        return {};
    }
    std::size_t cols = basis[0].size();
    QMatrix aug(cols, std::vector<Rational>(n + 1));
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < n; ++i) aug[j][i] = Rational(basis[i][j]);
        aug[j][n] = Rational(target[j]);
    }
    std::vector<int> pivot_col(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < cols; ++c) {
        std::size_t piv = cols;
        for (std::size_t i = r; i < cols; ++i)
            if (aug[i][c] != 0) { piv = i; break; }
        if (piv == cols) continue;
        std::swap(aug[r], aug[piv]);
        for (std::size_t i = 0; i < cols; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            Rational f = aug[i][c] / aug[r][c];
            for (std::size_t j = c; j <= n; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivot_col[r] = static_cast<int>(c);
        ++r;
    }
    for (std::size_t i = r; i < cols; ++i)
        if (aug[i][n] != 0) return {}; // inconsistent: target outside span
    std::vector<Rational> x(n, 0);
    for (std::size_t i = 0; i < r; ++i)
        x[static_cast<std::size_t>(pivot_col[i])] = aug[i][n] / aug[i][pivot_col[i]];
    return x;
}

} // namespace sigtoric
