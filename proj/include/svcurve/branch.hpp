#pragma once

// Branch-level computations: local parametrizations at smooth points and at
// ordinary singular points (every branch there has order 1, so a per-tangent
// rotation followed by Hensel lifting covers all supported cases),
// intersection multiplicities as series valuations, rational-branch counts
// N_m, linear systems of lines/conics with their base loci, and order
// sequences via pivot elimination on the coefficient matrix.

#include <random>

#include "curve.hpp"

namespace svcurve {

struct Branch {
    ProjPoint center;  // over the branch's definition field
    Chart chart = Chart::affine_z;
    PowerSeries x, y;  // chart coordinates as series in the local parameter
    std::optional<FieldElement> slope;  // tangent v = slope*u; nullopt = axis u = 0
    int center_multiplicity = 1;

    const FieldPtr& field() const { return center.field(); }
    int precision() const { return std::min(x.precision(), y.precision()); }
};

inline int default_precision(const Curve& c) { return 2 * c.degree() + 4; }

namespace branchdetail {

// One branch for a given tangent direction of an ordinary (or smooth)
// center: rotate the direction off the expansion axis, divide out the
// multiplicity, Hensel-lift the resulting simple root.
inline Branch make_branch(const Curve& c, const ProjPoint& P,
                          const std::optional<FieldElement>& slope, int N) {
    const FieldPtr& F = P.field();
    Chart chart = P.chart();
    BivarPoly g = c.F().mapped(F).dehomogenize(chart);
    auto [u0, v0] = P.affine_coords();
    BivarPoly gt = g.translated(u0, v0);
    BivarPoly L = gt.lowest_form();
    int r = L.degree();
    if (r < 1) throw precondition_error("branch expansion at a point off the curve");

    Branch br;
    br.center = P;
    br.chart = chart;
    br.slope = slope;
    br.center_multiplicity = r;

    if (slope) {
        BivarPoly h = gt.substitute_v_slope(*slope).divided_by_u_power(r);
        PowerSeries w = hensel_expand(h, F->zero(), F->zero(), N);
        // u = t, v = t*(slope + w(t))
        PowerSeries t = PowerSeries::parameter(F, F->zero(), N);
        PowerSeries sv = PowerSeries::constant(F, *slope, N) + w;
        br.x = PowerSeries::constant(F, u0, N) + t;
        br.y = PowerSeries::constant(F, v0, N) + t * sv;
    } else {
        BivarPoly h = gt.substitute_u_axis().divided_by_u_power(r);
        PowerSeries w = hensel_expand(h, F->zero(), F->zero(), N);
        // u = t*w(t), v = t
        PowerSeries t = PowerSeries::parameter(F, F->zero(), N);
        br.x = PowerSeries::constant(F, u0, N) + t * w;
        br.y = PowerSeries::constant(F, v0, N) + t;
    }
    return br;
}

}  // namespace branchdetail

// Branches of the curve centered at P that are defined over P's field: one
// per tangent direction in that field. Ordinary centers only; anything else
// could carry branches of order > 1 and is refused.
inline std::vector<Branch> branches_at(const Curve& c, const ProjPoint& P, int N = 0) {
    if (N <= 0) N = default_precision(c);
    SingularPointInfo cone = tangent_cone(c, P);
    if (!cone.ordinary)
        throw unsupported_error(
            "unsupported: non-ordinary singular center (branch order > 1 possible)");
    std::vector<Branch> out;
    if (cone.axis_multiplicity == 1)
        out.push_back(branchdetail::make_branch(c, P, std::nullopt, N));
    for (const auto& [root, mult] : count_rational_roots(cone.slope_poly).roots)
        out.push_back(branchdetail::make_branch(c, P, root, N));
    return out;
}

// Valuation of h on the branch's parametrization. Affine input is read in
// the Z=1 chart and re-expressed in the branch's own chart.
inline int intersection_multiplicity(const Branch& br, const HomogPoly& h) {
    BivarPoly hd = h.mapped(br.field()).dehomogenize(br.chart);
    PowerSeries s = series_eval(hd, br.x, br.y);
    auto v = s.valuation();
    if (!v)
        throw precision_error("intersection multiplicity: series precision exhausted");
    return *v;
}

inline int intersection_multiplicity(const Branch& br, const BivarPoly& h_affine) {
    return intersection_multiplicity(br, homogenize(h_affine));
}

// N_m: smooth F_{q^m}-points of the plane curve each carry one rational
// branch; an F_{q^m}-rational ordinary singular point carries one branch
// per tangent direction in F_{q^m}. Refuses when any singular point within
// the certification bound is non-ordinary.
inline long long count_branches(const Curve& c, int m, int certification_bound = 2,
                                std::int64_t budget = 10000000) {
    if (m < 1) throw precondition_error("extension degree m must be >= 1");
    auto sing = find_singular_points(c, std::max(m, certification_bound), budget);
    for (const auto& s : sing)
        if (!s.ordinary)
            throw unsupported_error("count_branches: curve has a non-ordinary singularity");

    const FieldPtr& base = c.base_field();
    FieldPtr Fm = (m == 1) ? base : Field::extension(base, m);
    auto ch = curvedetail::chart_polys(c, Fm);
    curvedetail::ScanEvaluator affine(ch[0].g);

    long long count = 0;
    auto tally = [&](const ProjPoint& P) {
        if (curvedetail::is_singular_point(ch, P)) {
            SingularPointInfo cone = tangent_cone(c, P);
            if (!cone.ordinary)
                throw unsupported_error("count_branches: curve has a non-ordinary singularity");
            count += cone.rational_tangent_count;
        } else {
            count += 1;
        }
    };

    for (std::int64_t ia = 0; ia < Fm->q(); ++ia) {
        FieldElement a = Fm->element_at(ia);
        UnivarPoly ha = affine.specialize(a);
        for (std::int64_t ib = 0; ib < Fm->q(); ++ib) {
            FieldElement b = Fm->element_at(ib);
            if (!ha.eval(b).is_zero()) continue;
            tally(ProjPoint{a, b, Fm->one()});
        }
    }
    for (std::int64_t ia = 0; ia < Fm->q(); ++ia) {
        FieldElement a = Fm->element_at(ia);
        if (ch[1].g.eval(a, Fm->zero()).is_zero()) tally(ProjPoint{a, Fm->one(), Fm->zero()});
    }
    if (ch[2].g.eval(Fm->zero(), Fm->zero()).is_zero())
        tally(ProjPoint{Fm->one(), Fm->zero(), Fm->zero()});
    return count;
}

struct LinearSystem {
    int t = 0;                                           // degree of the members
    std::vector<HomogPoly> basis;                        // r+1 independent members
    std::vector<std::pair<ProjPoint, int>> base_points;  // (P_i, s_i)
    int r = 0;                                           // projective dimension
    int h = 0;                 // t(t+3)/2 - sum s_i(s_i+1)/2
    long long B_degree = 0;    // base locus degree on the curve
    long long n = 0;           // t*d - B_degree
    bool footnote_n_condition = false;  // q > (d-2)/2, reported only
};

namespace branchdetail {

inline std::vector<Mono3> system_monomials(int t) {
    // canonical presentation order; chosen so that coordinate base points
    // leave {Z^2, XY, XZ, YZ} and the affine basis {1, xy, x, y}
    if (t == 1) return {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    if (t == 2)
        return {{0, 0, 2}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {2, 0, 0}, {0, 2, 0}};
    throw unsupported_error("only linear systems of lines and conics are built");
}

// nullspace of the point-evaluation constraints, row-reduced for a
// deterministic basis
inline std::vector<HomogPoly> solve_system(const FieldPtr& F, int t,
                                           const std::vector<ProjPoint>& pts) {
    auto monos = system_monomials(t);
    std::size_t cols = monos.size();
    std::vector<std::vector<FieldElement>> rows;
    for (const auto& P : pts) {
        std::vector<FieldElement> row(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            HomogPoly mono(F, t);
            mono.add_term(monos[j].i, monos[j].j, monos[j].l, F->one());
            row[j] = mono.eval(F->embed(P.x), F->embed(P.y), F->embed(P.z));
        }
        rows.push_back(std::move(row));
    }
    // RREF
    std::vector<int> pivot_col;
    std::size_t rr = 0;
    for (std::size_t col = 0; col < cols && rr < rows.size(); ++col) {
        std::size_t sel = rr;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rr], rows[sel]);
        FieldElement inv = inverse(rows[rr][col]);
        for (auto& e : rows[rr]) e = e * inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rr || rows[i][col].is_zero()) continue;
            FieldElement c = rows[i][col];
            for (std::size_t j = 0; j < cols; ++j)
                rows[i][j] = rows[i][j] - c * rows[rr][j];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++rr;
    }
    std::vector<HomogPoly> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        bool is_pivot = false;
        for (int pc : pivot_col)
            if (pc == static_cast<int>(free)) is_pivot = true;
        if (is_pivot) continue;
        std::vector<FieldElement> v(cols, F->zero());
        v[free] = F->one();
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -rows[i][free];
        HomogPoly C(F, t);
        for (std::size_t j = 0; j < cols; ++j)
            if (!v[j].is_zero()) C.add_term(monos[j].i, monos[j].j, monos[j].l, v[j]);
        basis.push_back(std::move(C));
    }
    return basis;
}

// All geometric branches at an F_q-rational ordinary point: tangent
// directions are chased through extension fields until the whole cone
// splits.
inline std::vector<Branch> all_geometric_branches(const Curve& c, const ProjPoint& P, int N,
                                                  std::int64_t budget = 1000000) {
    SingularPointInfo cone = tangent_cone(c, P);
    if (!cone.ordinary)
        throw unsupported_error("unsupported: non-ordinary center");
    std::vector<Branch> out;
    if (cone.axis_multiplicity == 1)
        out.push_back(make_branch(c, P, std::nullopt, N));
    int needed = cone.slope_poly.degree();
    int found = 0;
    const FieldPtr& base = P.field();
    for (int e = 1; found < needed; ++e) {
        if (e > 1) {
            std::int64_t size = 1;
            for (int i = 0; i < e; ++i) {
                size *= base->q();
                if (size > budget)
                    throw budget_error("tangent directions require too large an extension field");
            }
        }
        FieldPtr Fe = (e == 1) ? base : Field::extension(base, e);
        UnivarPoly sigma_e(Fe);
        {
            std::vector<FieldElement> cs;
            for (const auto& co : cone.slope_poly.coeffs()) cs.push_back(Fe->embed(co));
            sigma_e = UnivarPoly(Fe, std::move(cs));
        }
        ProjPoint Pe = P.mapped(Fe);
        for (const auto& [root, mult] : count_rational_roots(sigma_e).roots) {
            // keep only roots of definition degree exactly e
            if (e > 1 && frobenius(root, base->q()) == root) continue;
            if (e > 2) {
                bool smaller = false;
                FieldElement img = frobenius(root, base->q());
                for (int i = 1; i < e; ++i) {
                    if (img == root) {
                        smaller = true;
                        break;
                    }
                    img = frobenius(img, base->q());
                }
                if (smaller) continue;
            }
            out.push_back(make_branch(c, Pe, root, N));
            ++found;
        }
    }
    return out;
}

// per-branch base-locus valuation: min intersection multiplicity over a
// basis of the system; members containing the curve (possible when t equals
// the curve degree) contribute +infinity and are skipped
inline int branch_base_valuation(const Branch& br, const std::vector<HomogPoly>& basis) {
    int v = -1;
    for (const auto& C : basis) {
        int i;
        try {
            i = intersection_multiplicity(br, C);
        } catch (const precision_error&) {
            continue;
        }
        if (v < 0 || i < v) v = i;
    }
    if (v < 0) throw precision_error("every system member vanishes on the branch");
    return v;
}

// rank of the linear parts of the basis members at P (all members vanish
// there); rank >= 2 certifies that no single line is tangent to every
// member
inline int gradient_rank_at(const std::vector<HomogPoly>& basis, const ProjPoint& P) {
    std::vector<std::pair<FieldElement, FieldElement>> grads;
    for (const auto& C : basis) {
        BivarPoly g = C.mapped(P.field()).dehomogenize(P.chart());
        auto [u0, v0] = P.affine_coords();
        BivarPoly t = g.translated(u0, v0);
        grads.emplace_back(t.coeff(1, 0), t.coeff(0, 1));
    }
    for (std::size_t i = 0; i < grads.size(); ++i)
        for (std::size_t j = i + 1; j < grads.size(); ++j) {
            FieldElement det = grads[i].first * grads[j].second - grads[i].second * grads[j].first;
            if (!det.is_zero()) return 2;
        }
    for (const auto& [gu, gv] : grads)
        if (!gu.is_zero() || !gv.is_zero()) return 1;
    return 0;
}

}  // namespace branchdetail

// Fills B_degree and n. At ordinary base points the valuations are computed
// branch by branch; when every pair of tangent lines of the members is
// independent the total is also forced to s_i * r_i (no shared tangents),
// which certifies non-ordinary base points without branch data.
inline void base_locus_degree(const Curve& c, LinearSystem& L) {
    long long B = 0;
    for (const auto& [P, s] : L.base_points) {
        if (s != 1)
            throw unsupported_error("base points with multiplicity > 1 are not supported");
        SingularPointInfo cone = tangent_cone(c, P);
        int grank = branchdetail::gradient_rank_at(L.basis, P);
        if (cone.ordinary) {
            long long Bi = 0;
            for (const auto& br :
                 branchdetail::all_geometric_branches(c, P, default_precision(c)))
                Bi += branchdetail::branch_base_valuation(br, L.basis);
            if (Bi < cone.multiplicity)
                throw error("base locus below the multiplicity floor");
            if (grank >= 2 && Bi != cone.multiplicity)
                throw error("base locus exceeds s_i*r_i with no shared tangent");
            B += Bi;
        } else if (grank >= 2) {
            B += cone.multiplicity;  // equality case: no line tangent to all members
        } else {
            throw unsupported_error(
                "base locus at a non-ordinary point with a possibly shared tangent");
        }
    }
    L.B_degree = B;
    L.n = static_cast<long long>(L.t) * c.degree() - B;
}

inline LinearSystem linear_system_through(const Curve& c, int t,
                                          const std::vector<ProjPoint>& pts) {
    if (t > c.degree())
        throw precondition_error("system degree must not exceed the curve degree");
    LinearSystem L;
    L.t = t;
    L.basis = branchdetail::solve_system(c.base_field(), t, pts);
    for (const auto& P : pts) L.base_points.emplace_back(P, 1);
    L.r = static_cast<int>(L.basis.size()) - 1;
    L.h = t * (t + 3) / 2 - static_cast<int>(pts.size());  // s_i = 1 throughout
    if (L.r < 0) throw precondition_error("empty linear system");
    base_locus_degree(c, L);
    L.footnote_n_condition = c.base_field()->q() > (c.degree() - 2) / 2;
    return L;
}

// The conic system through two distinct rational points: dimension 3, the
// key series for curves satisfying (H).
inline LinearSystem conic_system_through(const Curve& c, const ProjPoint& P1,
                                         const ProjPoint& P2) {
    if (P1 == P2) throw precondition_error("conic system needs two distinct points");
    LinearSystem L = linear_system_through(c, 2, {P1, P2});
    if (L.r != 3) throw precondition_error("degenerate configuration: conic system rank != 3");
    return L;
}

// complete system of all curves of degree t: base-point-free of degree t*d
inline LinearSystem complete_system(const Curve& c, int t) {
    if (t > c.degree())
        throw precondition_error("system degree must not exceed the curve degree");
    LinearSystem L;
    L.t = t;
    L.basis = branchdetail::solve_system(c.base_field(), t, {});
    L.r = static_cast<int>(L.basis.size()) - 1;
    L.h = t * (t + 3) / 2;
    L.B_degree = 0;
    L.n = static_cast<long long>(t) * c.degree();
    L.footnote_n_condition = c.base_field()->q() > (c.degree() - 2) / 2;
    return L;
}

// j-orders of the branch: pivot columns of the row echelon form of the
// basis-series coefficient matrix, after dividing out the base-locus
// contribution at the center.
inline std::vector<int> order_sequence_at(const Curve& c, const Branch& br0,
                                          const LinearSystem& L) {
    int cap = 16 * default_precision(c);
    Branch br = br0;
    while (true) {
        try {
            std::vector<PowerSeries> series;
            int vmin = -1;
            for (const auto& C : L.basis) {
                BivarPoly hd = C.mapped(br.field()).dehomogenize(br.chart);
                PowerSeries s = series_eval(hd, br.x, br.y);
                auto v = s.valuation();
                if (v && (vmin < 0 || *v < vmin)) vmin = *v;
                series.push_back(std::move(s));
            }
            if (vmin < 0) throw precision_error("order sequence: all basis series vanish");
            // divide out the base locus
            for (auto& s : series) s = s.shifted_down(vmin);

            int M = series.front().precision();
            std::vector<std::vector<FieldElement>> rows;
            for (const auto& s : series) rows.push_back(s.coeffs());
            std::vector<int> pivots;
            std::size_t rr = 0;
            for (int col = 0; col < M && rr < rows.size(); ++col) {
                std::size_t sel = rr;
                while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
                if (sel == rows.size()) continue;
                std::swap(rows[rr], rows[sel]);
                FieldElement inv = inverse(rows[rr][col]);
                for (int j = col; j < M; ++j) rows[rr][j] = rows[rr][j] * inv;
                for (std::size_t i = rr + 1; i < rows.size(); ++i) {
                    if (rows[i][col].is_zero()) continue;
                    FieldElement cc = rows[i][col];
                    for (int j = col; j < M; ++j) rows[i][j] = rows[i][j] - cc * rows[rr][j];
                }
                pivots.push_back(col);
                ++rr;
            }
            if (rr < rows.size()) throw precision_error("order sequence: rank deficit");
            return pivots;
        } catch (const precision_error&) {
            int next = 2 * br.precision();
            if (next > cap)
                throw precondition_error(
                    "order sequence: precision cap reached (dependent basis on branch?)");
            br = branchdetail::make_branch(c, br.center, br.slope, next);
        }
    }
}

struct GenericOrders {
    std::vector<int> orders;          // lexicographically smallest sampled sequence
    std::vector<int> extensions_used; // extension degrees whose pools were sampled
};

// Order sequence observed at `samples` random smooth points over each
// affordable F_{q^e}, e in `extensions`: the lexicographically smallest
// sequence seen. Empirical, in the sense that sampling correctly identifies
// the generic sequence with overwhelming probability but does not certify
// it. Sampling beyond F_{q^2} matters: on some curves every F_{q^2}-point
// is special for the conic system.
inline GenericOrders generic_order_sequence(const Curve& c, const LinearSystem& L, int samples,
                                            std::uint64_t seed = 0x5eedULL,
                                            std::vector<int> extensions = {2, 3},
                                            std::int64_t budget = 10000000) {
    if (samples <= 0) throw precondition_error("sample count must be positive");
    const FieldPtr& base = c.base_field();
    std::mt19937_64 rng(seed);
    GenericOrders out;
    for (int e : extensions) {
        std::int64_t scan = 1;
        bool affordable = true;
        for (int i = 0; i < 2 * e; ++i) {
            scan *= base->q();
            if (scan > budget) {
                affordable = false;
                break;
            }
        }
        if (!affordable) continue;
        FieldPtr Fe = (e == 1) ? base : Field::extension(base, e);
        auto ch = curvedetail::chart_polys(c, Fe);
        curvedetail::ScanEvaluator affine(ch[0].g);

        std::vector<ProjPoint> pool;
        for (std::int64_t ia = 0; ia < Fe->q(); ++ia) {
            FieldElement a = Fe->element_at(ia);
            UnivarPoly ha = affine.specialize(a);
            for (std::int64_t ib = 0; ib < Fe->q(); ++ib) {
                FieldElement b = Fe->element_at(ib);
                if (!ha.eval(b).is_zero()) continue;
                ProjPoint P{a, b, Fe->one()};
                if (!curvedetail::is_singular_point(ch, P)) pool.push_back(P);
            }
        }
        for (std::int64_t ia = 0; ia < Fe->q(); ++ia) {
            FieldElement a = Fe->element_at(ia);
            ProjPoint P{a, Fe->one(), Fe->zero()};
            if (ch[1].g.eval(a, Fe->zero()).is_zero() && !curvedetail::is_singular_point(ch, P))
                pool.push_back(P);
        }
        if (pool.empty()) continue;
        out.extensions_used.push_back(e);
        for (int i = 0; i < samples; ++i) {
            std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
            const ProjPoint& P = pool[dist(rng)];
            auto brs = branches_at(c, P);
            std::vector<int> js = order_sequence_at(c, brs.front(), L);
            if (out.orders.empty() || js < out.orders) out.orders = js;
        }
    }
    if (out.orders.empty())
        throw precondition_error("insufficient smooth points for order-sequence sampling");
    return out;
}

// The distinguished conic (ab-1)^q - a^q Y - b^q X + XY at an affine point
// (a, b) of the curve (X^q - X)(Y^q - Y) = 1; it lies in the span of
// {1, X, Y, XY} and meets the branch at (a, b) with multiplicity >= q.
inline BivarPoly am_osculating_conic(const Curve& am, const FieldElement& a,
                                     const FieldElement& b) {
    const FieldPtr& Fs = a.field();
    if (!am.f().mapped(Fs).eval(a, b).is_zero())
        throw precondition_error("osculating conic: (a, b) is not on the curve");
    std::int64_t q = am.base_field()->q();
    FieldElement ab1 = a * b - Fs->one();
    FieldElement cq = pow(ab1, static_cast<std::uint64_t>(q));
    FieldElement aq = pow(a, static_cast<std::uint64_t>(q));
    FieldElement bq = pow(b, static_cast<std::uint64_t>(q));
    BivarPoly g(Fs);
    g.add_term(0, 0, cq);
    g.add_term(0, 1, -aq);
    g.add_term(1, 0, -bq);
    g.add_term(1, 1, Fs->one());
    // XY + cX + dY + e splits into two lines exactly when e = c*d
    FieldElement c_ = g.coeff(1, 0), d_ = g.coeff(0, 1), e_ = g.coeff(0, 0);
    if (e_ == c_ * d_) throw error("osculating conic degenerated into two lines");
    return g;
}

}  // namespace svcurve
