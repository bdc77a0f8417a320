#include "zariski/linalg.hpp"

#include <utility>

#include "zariski/errors.hpp"

namespace zariski::linalg {

namespace {

// Exact quotient; Bareiss guarantees divisibility at every step.
Int divexact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// One fraction-free elimination pass over an n x cols working array (cols may
// exceed n for augmented systems). Rows are swapped to find pivots; returns
// the permutation sign, or 0 if the matrix is singular.
int bareiss_eliminate(std::vector<IntVector>& m, std::size_t n, std::size_t cols) {
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j)
                m[i][j] = divexact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign;
}

std::vector<IntVector> to_rows(const IntMatrix& m) {
    std::vector<IntVector> rows(m.dim(), IntVector(m.dim()));
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

}  // namespace

Int det(const IntMatrix& m) {
    const std::size_t n = m.dim();
    if (n == 0) return 1;
    auto rows = to_rows(m);
    const int sign = bareiss_eliminate(rows, n, n);
    if (sign == 0 || rows[n - 1][n - 1] == 0) return 0;
    return sign * rows[n - 1][n - 1];
}

IntMatrix adjugate(const IntMatrix& m) {
    const std::size_t n = m.dim();
    IntMatrix adj(n);
    if (n == 0) return adj;
    if (n == 1) {
        adj.at(0, 0) = 1;
        return adj;
    }
    IntMatrix minor(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t mi = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::size_t mj = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(mi, mj) = m.at(r, c);
                    ++mj;
                }
                ++mi;
            }
            const Int cof = det(minor);
            adj.at(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    }
    return adj;
}

RatVector solve(const IntMatrix& s, const IntVector& b) {
    const std::size_t n = s.dim();
    if (b.size() != n) throw DimensionMismatch("solve: rhs length != matrix dim");
    if (n == 0) return {};

    std::vector<IntVector> m(n, IntVector(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = s.at(i, j);
        m[i][n] = b[i];
    }
    if (bareiss_eliminate(m, n, n + 1) == 0 || m[n - 1][n - 1] == 0)
        throw SingularMatrix("solve: det(S) = 0");

    RatVector x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rat acc(m[i][n]);
        for (std::size_t j = i + 1; j < n; ++j) acc -= Rat(m[i][j]) * x[j];
        x[i] = acc / Rat(m[i][i]);
    }
    return x;
}

std::vector<Int> leading_principal_minors(const IntMatrix& m) {
    const std::size_t n = m.dim();
    std::vector<Int> minors;
    minors.reserve(n);
    auto rows = to_rows(m);
    Int prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        // After k fraction-free steps without pivoting, rows[k][k] is the
        // (k+1)-th leading principal minor.
        minors.push_back(rows[k][k]);
        if (rows[k][k] == 0) break;
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                rows[i][j] = divexact(rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j], prev);
            rows[i][k] = 0;
        }
        prev = rows[k][k];
    }
    return minors;
}

bool is_negative_definite(const IntMatrix& s) {
    if (!s.is_symmetric())
        throw NotSymmetric("is_negative_definite: matrix not symmetric");
    const auto minors = leading_principal_minors(s);
    if (minors.size() < s.dim()) return false;  // hit a zero minor
    for (std::size_t j = 0; j < minors.size(); ++j) {
        const int want = (j % 2 == 0) ? -1 : 1;
        if (sgn(minors[j]) != want) return false;
    }
    return true;
}

Inertia signature(const IntMatrix& g) {
    if (!g.is_symmetric()) throw NotSymmetric("signature: matrix not symmetric");
    const std::size_t n = g.dim();
    std::vector<RatVector> a(n, RatVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(g.at(i, j));

    auto swap_sym = [&](std::size_t p, std::size_t q) {
        std::swap(a[p], a[q]);
        for (std::size_t t = 0; t < n; ++t) std::swap(a[t][p], a[t][q]);
    };
    auto add_sym = [&](std::size_t p, std::size_t q) {  // row/col p += row/col q
        for (std::size_t t = 0; t < n; ++t) a[p][t] += a[q][t];
        for (std::size_t t = 0; t < n; ++t) a[t][p] += a[t][q];
    };

    Inertia out;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][p].is_zero()) ++p;
        if (p == n) {
            // Zero diagonal block: a nonzero off-diagonal pair contributes a
            // hyperbolic plane; surface it on the diagonal by a congruence.
            bool found = false;
            for (std::size_t i = k; i < n && !found; ++i)
                for (std::size_t j = i + 1; j < n && !found; ++j)
                    if (!a[i][j].is_zero()) {
                        add_sym(i, j);
                        p = i;
                        found = true;
                    }
            if (!found) {
                out.zero += n - k;
                return out;
            }
        }
        if (p != k) swap_sym(p, k);
        const Rat pivot = a[k][k];
        (pivot.sign() > 0 ? out.positive : out.negative) += 1;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k].is_zero()) continue;
            const Rat f = a[i][k] / pivot;
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
            for (std::size_t j = 0; j < n; ++j) a[j][i] -= f * a[j][k];
        }
    }
    return out;
}

}  // namespace zariski::linalg
