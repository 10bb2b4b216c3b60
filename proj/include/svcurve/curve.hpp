#pragma once

// Global analysis of a plane projective curve over F_q: singular points and
// their tangent cones, ordinariness, hypothesis (H) detection, the genus
// bound from ordinary multiplicities, the X^mY^l normal-form test, the
// standard Cremona quadratic transformation and projective coordinate
// changes.
//
// Singularity search is an exhaustive scan of P^2(F_{q^s}) for s up to a
// caller-chosen bound, with a hard evaluation budget: past it the library
// refuses rather than truncating. The singularity criterion is affine
// (value and both partials vanish in every chart containing the point),
// which stays valid when p divides the degree.

#include <array>
#include <optional>
#include <tuple>
#include <vector>

#include "series.hpp"

namespace svcurve {

struct ProjPoint {
    FieldElement x, y, z;

    static ProjPoint make(const FieldElement& x, const FieldElement& y,
                          const FieldElement& z) {
        if (x.is_zero() && y.is_zero() && z.is_zero())
            throw precondition_error("(0:0:0) is not a projective point");
        FieldElement s;
        if (!z.is_zero())
            s = inverse(z);
        else if (!y.is_zero())
            s = inverse(y);
        else
            s = inverse(x);
        return ProjPoint{x * s, y * s, z * s};
    }

    const FieldPtr& field() const { return x.field(); }

    Chart chart() const {
        if (z.is_one()) return Chart::affine_z;
        if (y.is_one()) return Chart::affine_y;
        return Chart::affine_x;
    }

    // affine coordinates in the chart given by the normalization
    std::pair<FieldElement, FieldElement> affine_coords() const {
        switch (chart()) {
            case Chart::affine_z: return {x, y};
            case Chart::affine_y: return {x, z};
            default: return {y, z};
        }
    }

    ProjPoint mapped(const FieldPtr& target) const {
        return ProjPoint{target->embed(x), target->embed(y), target->embed(z)};
    }

    ProjPoint frobenius_image(std::int64_t q_base) const {
        return ProjPoint{svcurve::frobenius(x, q_base), svcurve::frobenius(y, q_base),
                         svcurve::frobenius(z, q_base)};
    }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

    std::string to_text() const {
        const Field& F = *field();
        return "(" + F.to_string(x) + ":" + F.to_string(y) + ":" + F.to_string(z) + ")";
    }
};

// deterministic total order; coordinate points sort before affine ones
inline bool point_less(const ProjPoint& a, const ProjPoint& b) {
    auto key = [](const ProjPoint& P) {
        const Field& F = *P.field();
        return std::make_tuple(F.index_of(P.z), F.index_of(P.y), F.index_of(P.x));
    };
    return key(a) < key(b);
}

struct SingularPointInfo {
    ProjPoint point;
    int multiplicity = 0;
    UnivarPoly slope_poly;     // sigma(s) = L(1, s) for the lowest form L(u, v)
    int axis_multiplicity = 0; // multiplicity of the chart axis u = 0 in the cone
    bool ordinary = false;
    int rational_tangent_count = 0;  // distinct directions over the point's field
    int definition_degree = 1;
    int orbit_size = 1;
};

struct HStatus {
    ProjPoint P1, P2;
    int r1 = 0, r2 = 0;
};

namespace curvedetail {

// Y-degree of gcd(A, B) in F_q(X)[Y], via a pseudo-remainder sequence with
// content stripping. Used only as a repeated-factor heuristic.
inline int gcd_degree_in_v(const BivarPoly& A0, const BivarPoly& B0) {
    auto strip = [](std::vector<UnivarPoly> v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
        if (v.empty()) return v;
        UnivarPoly g(v[0].field());
        for (const auto& c : v) {
            if (c.is_zero()) continue;
            g = g.is_zero() ? c.monic() : gcd(g, c);
            if (g.is_constant()) break;
        }
        if (!g.is_constant())
            for (auto& c : v) c = c.divrem(g).first;
        return v;
    };
    auto a = strip(A0.v_coeffs());
    auto b = strip(B0.v_coeffs());
    while (!b.empty()) {
        // pseudo-remainder of a by b
        while (a.size() >= b.size() && !a.empty()) {
            UnivarPoly lead = a.back();
            std::size_t off = a.size() - b.size();
            for (auto& c : a) c = c * b.back();
            for (std::size_t i = 0; i < b.size(); ++i)
                a[off + i] = a[off + i] - b[i] * lead;
            while (!a.empty() && a.back().is_zero()) a.pop_back();
        }
        std::swap(a, b);
        b = strip(std::move(b));
    }
    return static_cast<int>(a.size()) - 1;
}

}  // namespace curvedetail

class Curve {
public:
    explicit Curve(BivarPoly f) : f_(std::move(f)) {
        if (f_.is_zero() || f_.degree() < 1)
            throw precondition_error("curve equation must be nonconstant");
        F_ = homogenize(f_);
        d_ = F_.degree();
        check_no_repeated_factor();
    }

    static Curve from_homogeneous(const HomogPoly& F) {
        BivarPoly f = F.dehomogenize(Chart::affine_z);
        if (f.degree() != F.degree())
            throw unsupported_error("the line at infinity is a component of the curve");
        return Curve(std::move(f));
    }

    const BivarPoly& f() const { return f_; }
    const HomogPoly& F() const { return F_; }
    int degree() const { return d_; }
    const FieldPtr& base_field() const { return f_.field(); }

private:
    // Heuristic repeated-factor rejection: pseudo-gcd of f with a nonzero
    // partial, plus squarefree contents. Geometric irreducibility itself is
    // an assumption recorded by the reporting layer, never certified here.
    void check_no_repeated_factor() const {
        BivarPoly fu = f_.partial_u(), fv = f_.partial_v();
        if (fu.is_zero() && fv.is_zero())
            throw precondition_error("curve equation is a p-th power (repeated factor)");
        bool bad_v = !fv.is_zero() && curvedetail::gcd_degree_in_v(f_, fv) > 0;
        bool bad_u = !fu.is_zero() &&
                     curvedetail::gcd_degree_in_v(f_.swapped_vars(), fu.swapped_vars()) > 0;
        if ((fv.is_zero() || bad_v) && (fu.is_zero() || bad_u))
            throw precondition_error("curve equation has a repeated factor");
        UnivarPoly cu = f_.content_u();
        if (!cu.is_constant() && !is_squarefree(cu))
            throw precondition_error("curve equation has a repeated factor in X");
        UnivarPoly cv = f_.swapped_vars().content_u();
        if (!cv.is_constant() && !is_squarefree(cv))
            throw precondition_error("curve equation has a repeated factor in Y");
    }

    BivarPoly f_;
    HomogPoly F_;
    int d_ = 0;
};

// affine coordinates of P in an arbitrary chart containing it
inline std::pair<FieldElement, FieldElement> affine_coords_in_chart(const ProjPoint& P,
                                                                    Chart chart) {
    switch (chart) {
        case Chart::affine_z: {
            if (P.z.is_zero()) throw precondition_error("point not in chart Z=1");
            FieldElement s = inverse(P.z);
            return {P.x * s, P.y * s};
        }
        case Chart::affine_y: {
            if (P.y.is_zero()) throw precondition_error("point not in chart Y=1");
            FieldElement s = inverse(P.y);
            return {P.x * s, P.z * s};
        }
        default: {
            if (P.x.is_zero()) throw precondition_error("point not in chart X=1");
            FieldElement s = inverse(P.x);
            return {P.y * s, P.z * s};
        }
    }
}

inline int multiplicity_in_chart(const Curve& c, const ProjPoint& P, Chart chart) {
    BivarPoly g = c.F().mapped(P.field()).dehomogenize(chart);
    auto [u0, v0] = affine_coords_in_chart(P, chart);
    BivarPoly t = g.translated(u0, v0);
    return t.lowest_form().degree();  // 0 when P is off the curve
}

// Degree of the lowest nonzero form of the equation translated to P, in the
// chart of P's normalization. Off-curve points give 0.
inline int multiplicity(const Curve& c, const ProjPoint& P) {
    return multiplicity_in_chart(c, P, P.chart());
}

// Lowest form split into a slope polynomial plus the chart-axis line.
// Ordinary means the cone has `multiplicity` distinct lines.
inline SingularPointInfo tangent_cone(const Curve& c, const ProjPoint& P) {
    Chart chart = P.chart();
    BivarPoly g = c.F().mapped(P.field()).dehomogenize(chart);
    auto [u0, v0] = affine_coords_in_chart(P, chart);
    BivarPoly t = g.translated(u0, v0);
    BivarPoly L = t.lowest_form();
    int r = L.degree();
    if (r < 1) throw precondition_error("tangent_cone: point is not on the curve");

    const FieldPtr& F = P.field();
    // sigma(s) = L(1, s): coefficient of v^j becomes the degree-j coefficient
    std::vector<FieldElement> sig(r + 1, F->zero());
    for (const auto& [m, coef] : L.terms()) sig[m.j] = coef;
    UnivarPoly sigma(F, std::move(sig));

    SingularPointInfo info;
    info.point = P;
    info.multiplicity = r;
    info.slope_poly = sigma;
    info.axis_multiplicity = r - sigma.degree();
    info.ordinary = is_squarefree(sigma) && info.axis_multiplicity <= 1;
    info.rational_tangent_count =
        count_rational_roots(sigma).count + (info.axis_multiplicity >= 1 ? 1 : 0);
    return info;
}

namespace curvedetail {

// rows of V-coefficients precomputed once, then specialized per U-value so
// a full plane scan costs O(q * du * dv + q^2 * dv) instead of O(q^2 * du * dv)
class ScanEvaluator {
public:
    explicit ScanEvaluator(const BivarPoly& g) : field_(g.field()), rows_(g.v_coeffs()) {}

    UnivarPoly specialize(const FieldElement& a) const {
        std::vector<FieldElement> c(rows_.size(), field_->zero());
        for (std::size_t j = 0; j < rows_.size(); ++j) c[j] = rows_[j].eval(a);
        return UnivarPoly(field_, std::move(c));
    }

    FieldElement eval(const FieldElement& a, const FieldElement& b) const {
        FieldElement acc = field_->zero();
        for (std::size_t j = rows_.size(); j-- > 0;) acc = acc * b + rows_[j].eval(a);
        return acc;
    }

private:
    FieldPtr field_;
    std::vector<UnivarPoly> rows_;
};

struct ChartPolys {
    BivarPoly g, gu, gv;
};

inline std::array<ChartPolys, 3> chart_polys(const Curve& c, const FieldPtr& F) {
    HomogPoly Fm = c.F().mapped(F);
    std::array<ChartPolys, 3> out;
    const Chart charts[3] = {Chart::affine_z, Chart::affine_y, Chart::affine_x};
    for (int i = 0; i < 3; ++i) {
        BivarPoly g = Fm.dehomogenize(charts[i]);
        out[i] = ChartPolys{g, g.partial_u(), g.partial_v()};
    }
    return out;
}

inline bool is_singular_point(const std::array<ChartPolys, 3>& ch, const ProjPoint& P) {
    const Chart charts[3] = {Chart::affine_z, Chart::affine_y, Chart::affine_x};
    const FieldElement* coords[3] = {&P.z, &P.y, &P.x};
    for (int i = 0; i < 3; ++i) {
        if (coords[i]->is_zero()) continue;
        auto [u0, v0] = affine_coords_in_chart(P, charts[i]);
        if (!ch[i].g.eval(u0, v0).is_zero()) return false;  // off curve
        if (!ch[i].gu.eval(u0, v0).is_zero()) return false;
        if (!ch[i].gv.eval(u0, v0).is_zero()) return false;
    }
    return true;
}

}  // namespace curvedetail

// Exhaustive scan of P^2(F_{q^s}) for s <= s_max. Conjugate points are
// reported once, as the orbit representative minimal under point_less, with
// the orbit size recorded (the genus formula needs all geometric points).
inline std::vector<SingularPointInfo> find_singular_points(const Curve& c, int s_max,
                                                           std::int64_t budget = 10000000) {
    if (s_max < 1) throw precondition_error("extension bound must be >= 1");
    const FieldPtr& base = c.base_field();
    {
        // q^{2 s_max} point evaluations must stay within the budget
        long double total = 1;
        for (int i = 0; i < 2 * s_max; ++i) {
            total *= static_cast<long double>(base->q());
            if (total > static_cast<long double>(budget))
                throw budget_error("singularity scan exceeds the evaluation budget");
        }
    }

    std::vector<SingularPointInfo> out;
    for (int s = 1; s <= s_max; ++s) {
        FieldPtr Fs = (s == 1) ? base : Field::extension(base, s);
        auto ch = curvedetail::chart_polys(c, Fs);
        curvedetail::ScanEvaluator affine(ch[0].g);

        std::vector<ProjPoint> on_curve_singular;
        auto consider = [&](const ProjPoint& P) {
            if (curvedetail::is_singular_point(ch, P)) on_curve_singular.push_back(P);
        };

        for (std::int64_t ia = 0; ia < Fs->q(); ++ia) {
            FieldElement a = Fs->element_at(ia);
            UnivarPoly ha = affine.specialize(a);
            for (std::int64_t ib = 0; ib < Fs->q(); ++ib) {
                FieldElement b = Fs->element_at(ib);
                if (!ha.eval(b).is_zero()) continue;
                consider(ProjPoint{a, b, Fs->one()});
            }
        }
        for (std::int64_t ia = 0; ia < Fs->q(); ++ia) {
            FieldElement a = Fs->element_at(ia);
            ProjPoint P{a, Fs->one(), Fs->zero()};
            if (ch[1].g.eval(a, Fs->zero()).is_zero()) consider(P);
        }
        {
            ProjPoint P{Fs->one(), Fs->zero(), Fs->zero()};
            if (ch[2].g.eval(Fs->zero(), Fs->zero()).is_zero()) consider(P);
        }

        for (const ProjPoint& P : on_curve_singular) {
            // definition degree: orbit length under the q-Frobenius
            int s0 = 1;
            ProjPoint img = P.frobenius_image(base->q());
            while (!(img == P)) {
                img = img.frobenius_image(base->q());
                ++s0;
            }
            if (s0 != s) continue;  // found at its own minimal level
            // record only the minimal orbit representative
            ProjPoint rep = P;
            img = P.frobenius_image(base->q());
            bool minimal = true;
            for (int i = 1; i < s0; ++i) {
                if (point_less(img, rep)) {
                    minimal = false;
                    break;
                }
                img = img.frobenius_image(base->q());
            }
            if (!minimal) continue;
            SingularPointInfo info = tangent_cone(c, P);
            info.definition_degree = s;
            info.orbit_size = s0;
            out.push_back(std::move(info));
        }
    }

    // one field object per level, so same-degree points are comparable
    std::sort(out.begin(), out.end(), [](const SingularPointInfo& a, const SingularPointInfo& b) {
        if (a.definition_degree != b.definition_degree)
            return a.definition_degree < b.definition_degree;
        return point_less(a.point, b.point);
    });
    return out;
}

// First pair (in the deterministic point order) of F_q-rational singular
// points whose multiplicities sum to the degree.
inline std::optional<HStatus> check_hypothesis_H(int degree,
                                                 const std::vector<SingularPointInfo>& sing) {
    std::vector<const SingularPointInfo*> rational;
    for (const auto& s : sing)
        if (s.definition_degree == 1) rational.push_back(&s);
    std::sort(rational.begin(), rational.end(),
              [](const SingularPointInfo* a, const SingularPointInfo* b) {
                  return point_less(a->point, b->point);
              });
    for (std::size_t i = 0; i < rational.size(); ++i)
        for (std::size_t j = i + 1; j < rational.size(); ++j)
            if (rational[i]->multiplicity + rational[j]->multiplicity == degree)
                return HStatus{rational[i]->point, rational[j]->point,
                               rational[i]->multiplicity, rational[j]->multiplicity};
    return std::nullopt;
}

struct GenusBound {
    long long value = 0;
    bool all_ordinary = false;
};

inline GenusBound genus_bound(const Curve& c, const std::vector<SingularPointInfo>& sing) {
    long long d = c.degree();
    long long g = (d - 1) * (d - 2) / 2;
    bool ordinary = true;
    for (const auto& s : sing) {
        long long r = s.multiplicity;
        g -= s.orbit_size * r * (r - 1) / 2;
        if (!s.ordinary) ordinary = false;
    }
    if (g < 0)
        throw precondition_error(
            "negative genus bound: curve is reducible or singularity data is wrong");
    return GenusBound{g, ordinary};
}

struct CaracForm {
    bool holds = false;
    int m = 0, l = 0;
};

// Normal-form test: after scaling, f = X^m Y^l + g with deg g < m + l,
// deg_X g <= m and deg_Y g <= l. Equivalent to the coordinate points having
// multiplicities l and m summing to the degree.
inline CaracForm carac_form_check(const BivarPoly& f) {
    if (f.is_zero() || f.degree() < 1)
        throw precondition_error("normal-form check needs a nonconstant polynomial");
    int d = f.degree();
    BivarPoly top(f.field());
    for (const auto& [m, c] : f.terms())
        if (static_cast<int>(m.i + m.j) == d) top.add_term(m.i, m.j, c);
    if (top.terms().size() != 1) return {};
    auto [mono, coef] = top.leading_term();
    if (mono.i < 1 || mono.j < 1) return {};
    BivarPoly fn = f.scaled(inverse(coef));
    BivarPoly g = fn - BivarPoly::monomial(f.field(), mono.i, mono.j, f.field()->one());
    if (!g.is_zero() && (g.degree_u() > static_cast<int>(mono.i) ||
                         g.degree_v() > static_cast<int>(mono.j)))
        return {};
    return CaracForm{true, static_cast<int>(mono.i), static_cast<int>(mono.j)};
}

inline HomogPoly multiply(const HomogPoly& a, const HomogPoly& b) {
    HomogPoly r(a.field(), a.degree() + b.degree());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            r.add_term(ma.i + mb.i, ma.j + mb.j, ma.l + mb.l, ca * cb);
    return r;
}

// Standard quadratic transformation (X:Y:Z) -> (YZ:XZ:XY), with the maximal
// monomial factor stripped and the result normalized to a monic lex-leading
// coefficient. Requires (1:0:0), (0:1:0) on the curve and (0:0:1) off it;
// the output degree is 2d - r1 - r2.
inline HomogPoly cremona_transform(const HomogPoly& F) {
    const FieldPtr& K = F.field();
    FieldElement zero = K->zero(), one = K->one();
    auto value_at = [&](const FieldElement& a, const FieldElement& b, const FieldElement& c) {
        return F.eval(a, b, c);
    };
    if (!value_at(one, zero, zero).is_zero() || !value_at(zero, one, zero).is_zero())
        throw precondition_error("cremona_transform: (1:0:0) and (0:1:0) must lie on the curve");
    if (value_at(zero, zero, one).is_zero())
        throw precondition_error(
            "cremona_transform: (0:0:1) lies on the curve; apply projective_change first");

    Curve tmp = Curve::from_homogeneous(F);
    int r1 = multiplicity(tmp, ProjPoint::make(one, zero, zero));
    int r2 = multiplicity(tmp, ProjPoint::make(zero, one, zero));

    int d = F.degree();
    HomogPoly G(K, 2 * d);
    for (const auto& [m, c] : F.terms()) G.add_term(m.j + m.l, m.i + m.l, m.i + m.j, c);

    std::uint32_t alpha = ~0u, beta = ~0u, gamma = ~0u;
    for (const auto& [m, c] : G.terms()) {
        alpha = std::min(alpha, m.i);
        beta = std::min(beta, m.j);
        gamma = std::min(gamma, m.l);
    }
    HomogPoly H(K, 2 * d - static_cast<int>(alpha + beta + gamma));
    for (const auto& [m, c] : G.terms())
        H.add_term(m.i - alpha, m.j - beta, m.l - gamma, c);

    if (H.degree() != 2 * d - r1 - r2)
        throw error("cremona_transform: stripped degree does not match 2d - r1 - r2");

    FieldElement lc = H.terms().rbegin()->second;
    if (!lc.is_one()) {
        HomogPoly Hn(K, H.degree());
        FieldElement inv = inverse(lc);
        for (const auto& [m, c] : H.terms()) Hn.add_term(m.i, m.j, m.l, c * inv);
        return Hn;
    }
    return H;
}

struct Matrix3 {
    std::array<std::array<FieldElement, 3>, 3> m;

    static Matrix3 identity(const FieldPtr& F) {
        Matrix3 M;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) M.m[i][j] = (i == j) ? F->one() : F->zero();
        return M;
    }

    FieldElement det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }

    Matrix3 inverse_matrix() const {
        FieldElement D = det();
        if (D.is_zero()) throw precondition_error("singular projective transformation");
        FieldElement Di = inverse(D);
        Matrix3 A;
        auto cof = [&](int i, int j) {
            int i1 = (i + 1) % 3, i2 = (i + 2) % 3, j1 = (j + 1) % 3, j2 = (j + 2) % 3;
            return m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1];
        };
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) A.m[i][j] = cof(j, i) * Di;  // adjugate transpose
        return A;
    }

    ProjPoint apply(const ProjPoint& P) const {
        FieldElement nx = m[0][0] * P.x + m[0][1] * P.y + m[0][2] * P.z;
        FieldElement ny = m[1][0] * P.x + m[1][1] * P.y + m[1][2] * P.z;
        FieldElement nz = m[2][0] * P.x + m[2][1] * P.y + m[2][2] * P.z;
        return ProjPoint::make(nx, ny, nz);
    }
};

// F composed with M^{-1}: the new equation of the transformed curve, so the
// multiplicity at M*P equals the old multiplicity at P.
inline Curve projective_change(const Curve& c, const Matrix3& M) {
    Matrix3 inv = M.inverse_matrix();
    const FieldPtr& K = c.base_field();
    auto linear_form = [&](int row) {
        HomogPoly L(K, 1);
        L.add_term(1, 0, 0, inv.m[row][0]);
        L.add_term(0, 1, 0, inv.m[row][1]);
        L.add_term(0, 0, 1, inv.m[row][2]);
        return L;
    };
    HomogPoly L0 = linear_form(0), L1 = linear_form(1), L2 = linear_form(2);

    HomogPoly unit(K, 0);
    unit.add_term(0, 0, 0, K->one());
    auto powers = [&](const HomogPoly& L, int maxe) {
        std::vector<HomogPoly> p{unit};
        for (int e = 1; e <= maxe; ++e) p.push_back(multiply(p.back(), L));
        return p;
    };
    int d = c.degree();
    auto p0 = powers(L0, d), p1 = powers(L1, d), p2 = powers(L2, d);

    HomogPoly out(K, d);
    for (const auto& [m, coef] : c.F().terms()) {
        HomogPoly term = multiply(multiply(p0[m.i], p1[m.j]), p2[m.l]);
        for (const auto& [mm, cc] : term.terms()) out.add_term(mm.i, mm.j, mm.l, coef * cc);
    }
    return Curve::from_homogeneous(out);
}

struct CurveAnalysis {
    Curve curve;
    std::vector<SingularPointInfo> singular_points;
    std::optional<HStatus> h_status;
    long long genus = 0;
    bool genus_exact = false;
    bool all_ordinary = false;
    int ext_bound = 0;  // the scan bound actually used
};

inline CurveAnalysis analyze(const Curve& c, int s_max = 2,
                             std::int64_t budget = 10000000) {
    CurveAnalysis a{c, find_singular_points(c, s_max, budget), std::nullopt, 0, false, false, s_max};
    a.h_status = check_hypothesis_H(c.degree(), a.singular_points);
    GenusBound g = genus_bound(c, a.singular_points);
    a.genus = g.value;
    a.all_ordinary = g.all_ordinary;
    // exactness is conditional on the scan bound covering every geometric
    // singularity; the reporting layer records that assumption
    a.genus_exact = g.all_ordinary;
    return a;
}

}  // namespace svcurve
