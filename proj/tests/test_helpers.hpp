#pragma once

// Test-only oracles, independent of the library paths they check:
//  - divides_oracle: finds h with f*h = g by solving the linear system on
//    the coefficients of h (Gaussian elimination over the field)
//  - resultant_u: Res_V(f, g) as a polynomial in U via fraction-free
//    Bareiss elimination of the Sylvester matrix
//  - random polynomials from a seeded generator

#include <optional>
#include <random>
#include <vector>

#include <svcurve/bivar.hpp>

namespace testutil {

using namespace svcurve;

// Solve f*h = g for h within the degree box implied by deg(g) - deg(f).
inline std::optional<BivarPoly> divides_oracle(const BivarPoly& f, const BivarPoly& g) {
    if (g.is_zero()) return BivarPoly(f.field());
    const FieldPtr& F = f.field();
    int du = g.degree_u() - f.degree_u();
    int dv = g.degree_v() - f.degree_v();
    if (du < 0 || dv < 0) return std::nullopt;

    // unknowns: coefficients of h on the (du+1) x (dv+1) box
    int cols = (du + 1) * (dv + 1);
    int rows_u = g.degree_u() + 1, rows_v = g.degree_v() + 1;
    int rows = rows_u * rows_v;
    std::vector<std::vector<FieldElement>> M(rows, std::vector<FieldElement>(cols + 1, F->zero()));
    for (const auto& [mf, cf] : f.terms())
        for (int i = 0; i <= du; ++i)
            for (int j = 0; j <= dv; ++j) {
                int pi = mf.i + i, pj = mf.j + j;
                if (pi >= rows_u || pj >= rows_v) return std::nullopt;  // cannot match g
                M[pi * rows_v + pj][i * (dv + 1) + j] =
                    M[pi * rows_v + pj][i * (dv + 1) + j] + cf;
            }
    for (const auto& [mg, cg] : g.terms()) M[mg.i * rows_v + mg.j][cols] = cg;

    // Gaussian elimination with back-substitution
    std::vector<int> pivot_of_col(cols, -1);
    int rr = 0;
    for (int col = 0; col < cols && rr < rows; ++col) {
        int sel = -1;
        for (int i = rr; i < rows; ++i)
            if (!M[i][col].is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(M[rr], M[sel]);
        FieldElement inv = inverse(M[rr][col]);
        for (int j = col; j <= cols; ++j) M[rr][j] = M[rr][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == rr || M[i][col].is_zero()) continue;
            FieldElement c = M[i][col];
            for (int j = col; j <= cols; ++j) M[i][j] = M[i][j] - c * M[rr][j];
        }
        pivot_of_col[col] = rr;
        ++rr;
    }
    // consistency: no row 0 = nonzero
    for (int i = rr; i < rows; ++i)
        if (!M[i][cols].is_zero()) return std::nullopt;

    BivarPoly h(F);
    for (int col = 0; col < cols; ++col) {
        FieldElement v = pivot_of_col[col] >= 0 ? M[pivot_of_col[col]][cols] : F->zero();
        if (!v.is_zero()) h.add_term(col / (dv + 1), col % (dv + 1), v);
    }
    return (f * h == g) ? std::optional<BivarPoly>(h) : std::nullopt;
}

// Resultant of f and g with respect to the second variable: determinant of
// the Sylvester matrix over F[U], by fraction-free Bareiss elimination.
inline UnivarPoly resultant_v(const BivarPoly& f, const BivarPoly& g) {
    const FieldPtr& F = f.field();
    auto fc = f.v_coeffs(), gc = g.v_coeffs();
    int m = static_cast<int>(fc.size()) - 1, n = static_cast<int>(gc.size()) - 1;
    if (m < 0 || n < 0) return UnivarPoly(F);
    int N = m + n;
    if (N == 0) return UnivarPoly::one(F);
    std::vector<std::vector<UnivarPoly>> M(N, std::vector<UnivarPoly>(N, UnivarPoly(F)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) M[i][i + k] = fc[m - k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) M[n + i][i + k] = gc[n - k];

    int sign = 1;
    UnivarPoly prev = UnivarPoly::one(F);
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k].is_zero()) {
            int sel = -1;
            for (int i = k + 1; i < N; ++i)
                if (!M[i][k].is_zero()) {
                    sel = i;
                    break;
                }
            if (sel < 0) return UnivarPoly(F);  // singular: resultant 0
            std::swap(M[k], M[sel]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i)
            for (int j = k + 1; j < N; ++j) {
                UnivarPoly num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                auto [q, r] = num.divrem(prev);
                if (!r.is_zero()) throw std::logic_error("Bareiss division not exact");
                M[i][j] = q;
            }
        for (int i = k + 1; i < N; ++i) M[i][k] = UnivarPoly(F);
        prev = M[k][k];
    }
    UnivarPoly det = M[N - 1][N - 1];
    if (sign < 0) det = det.negated();
    return det;
}

inline BivarPoly random_poly(const FieldPtr& F, int max_deg, int terms, std::mt19937_64& rng) {
    BivarPoly p(F);
    std::uniform_int_distribution<int> de(0, max_deg);
    std::uniform_int_distribution<std::int64_t> dc(0, F->q() - 1);
    for (int t = 0; t < terms; ++t) {
        int i = de(rng), j = de(rng);
        if (i + j > max_deg) continue;
        p.add_term(i, j, F->element_at(dc(rng)));
    }
    return p;
}

}  // namespace testutil
