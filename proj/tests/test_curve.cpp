#include <catch2/catch_amalgamated.hpp>

#include <svcurve/curve.hpp>
#include <svcurve/families.hpp>
#include <svcurve/parser.hpp>

#include "test_helpers.hpp"

using namespace svcurve;

namespace {

ProjPoint O1(const FieldPtr& F) { return ProjPoint::make(F->one(), F->zero(), F->zero()); }
ProjPoint O2(const FieldPtr& F) { return ProjPoint::make(F->zero(), F->one(), F->zero()); }

}  // namespace

TEST_CASE("curve construction rejects degenerate equations") {
    FieldPtr F5 = Field::create(5);
    CHECK_THROWS_AS(Curve(BivarPoly::constant(F5, F5->one())), precondition_error);
    CHECK_THROWS_AS(Curve(BivarPoly(F5)), precondition_error);
    // (X + Y)^2 has a repeated factor
    BivarPoly lin = BivarPoly::var_u(F5) + BivarPoly::var_v(F5);
    CHECK_THROWS_AS(Curve(lin * lin), precondition_error);
    // X^5 + Y^5 = (X + Y)^5
    BivarPoly pth = parse_poly("X^5 + Y^5", F5);
    CHECK_THROWS_AS(Curve(pth), precondition_error);
    // Y^5 - X is squarefree despite f_Y = 0
    CHECK_NOTHROW(Curve(parse_poly("Y^5 - X", F5)));
}

TEST_CASE("multiplicity at the distinguished points") {
    Curve am = artin_mumford_curve(5);
    const FieldPtr& F = am.base_field();
    CHECK(multiplicity(am, O1(F)) == 5);
    CHECK(multiplicity(am, O2(F)) == 5);
    CHECK(am.degree() == 10);

    Curve sx = product_sextic_curve(Field::create(13));
    CHECK(multiplicity(sx, O2(sx.base_field())) == 6);
    CHECK(multiplicity(sx, O1(sx.base_field())) == 6);

    FieldPtr F5 = Field::create(5);
    Curve par(parse_poly("Y - X^2", F5));
    CHECK(multiplicity(par, ProjPoint::make(F5->one(), F5->one(), F5->one())) == 1);
    // off-curve point
    CHECK(multiplicity(par, ProjPoint::make(F5->one(), F5->from_int(2), F5->one())) == 0);
}

TEST_CASE("multiplicity is chart-independent") {
    Curve sx = product_sextic_curve(Field::create(13));
    for (const auto& s : find_singular_points(sx, 1)) {
        int m0 = multiplicity(sx, s.point);
        const FieldElement* coords[3] = {&s.point.z, &s.point.y, &s.point.x};
        const Chart charts[3] = {Chart::affine_z, Chart::affine_y, Chart::affine_x};
        for (int i = 0; i < 3; ++i)
            if (!coords[i]->is_zero())
                CHECK(multiplicity_in_chart(sx, s.point, charts[i]) == m0);
    }
    // an affine rational point lying in all three charts
    FieldPtr F5 = Field::create(5);
    Curve node(parse_poly("Y^2 - X^2 - X^3", F5));
    ProjPoint P = ProjPoint::make(F5->from_int(3), F5->from_int(4), F5->one());
    REQUIRE(multiplicity(node, P) >= 1);  // 16 - 9 - 27 = -20 = 0 mod 5
    CHECK(multiplicity_in_chart(node, P, Chart::affine_x) == multiplicity(node, P));
    CHECK(multiplicity_in_chart(node, P, Chart::affine_y) == multiplicity(node, P));
}

TEST_CASE("tangent cones: node, cusp, and the q rational tangents at O1") {
    FieldPtr F5 = Field::create(5);
    Curve node(parse_poly("Y^2 - X^2 - X^3", F5));
    auto n = tangent_cone(node, ProjPoint::make(F5->zero(), F5->zero(), F5->one()));
    CHECK(n.multiplicity == 2);
    CHECK(n.ordinary);
    CHECK(n.rational_tangent_count == 2);  // Y = X and Y = -X

    Curve cusp(parse_poly("Y^2 - X^3", F5));
    auto cu = tangent_cone(cusp, ProjPoint::make(F5->zero(), F5->zero(), F5->one()));
    CHECK(cu.multiplicity == 2);
    CHECK_FALSE(cu.ordinary);  // cone Y^2

    Curve am = artin_mumford_curve(5);
    auto o1 = tangent_cone(am, O1(am.base_field()));
    CHECK(o1.multiplicity == 5);
    CHECK(o1.ordinary);
    CHECK(o1.rational_tangent_count == 5);
    auto o2 = tangent_cone(am, O2(am.base_field()));
    CHECK(o2.ordinary);
    CHECK(o2.rational_tangent_count == 5);
}

TEST_CASE("find_singular_points on the corpus") {
    // generalized Hurwitz X^4 Y^3 + X^3 + Y^4 over F_17: three triple points
    Curve hw = hurwitz_curve(Field::create(17), 4, 3);
    auto sings = find_singular_points(hw, 1);
    REQUIRE(sings.size() == 3);
    for (const auto& s : sings) CHECK(s.multiplicity == 3);

    Curve am = artin_mumford_curve(5);
    auto am_sings = find_singular_points(am, 2);
    REQUIRE(am_sings.size() == 2);
    for (const auto& s : am_sings) {
        CHECK(s.multiplicity == 5);
        CHECK(s.ordinary);
        CHECK(s.definition_degree == 1);
        CHECK(s.point.z.is_zero());
    }

    FieldPtr F5 = Field::create(5);
    Curve conic(parse_poly("X*Y - 1", F5));
    CHECK(find_singular_points(conic, 2).empty());

    // scan budget refusal
    CHECK_THROWS_AS(find_singular_points(am, 2, 100), budget_error);
}

TEST_CASE("hypothesis (H) detection") {
    Curve am = artin_mumford_curve(5);
    auto a = analyze(am, 2);
    REQUIRE(a.h_status.has_value());
    CHECK(a.h_status->r1 == 5);
    CHECK(a.h_status->r2 == 5);
    CHECK(a.h_status->P1 == O1(am.base_field()));
    CHECK(a.h_status->P2 == O2(am.base_field()));

    Curve sx = product_sextic_curve(Field::create(13));
    auto as = analyze(sx, 2);
    REQUIRE(as.h_status.has_value());
    CHECK(as.h_status->P1 == O1(sx.base_field()));
    CHECK(as.h_status->P2 == O2(sx.base_field()));
    CHECK(as.h_status->r1 == 6);
    CHECK(as.h_status->r2 == 6);

    // Hurwitz: 3 + 3 != 7
    Curve hw = hurwitz_curve(Field::create(17), 4, 3);
    CHECK_FALSE(analyze(hw, 1).h_status.has_value());
}

TEST_CASE("genus bounds match the published values") {
    Curve am = artin_mumford_curve(5);
    auto a = analyze(am, 2);
    CHECK(a.genus == 16);  // (q-1)^2
    CHECK(a.genus_exact);

    Curve hw = hurwitz_curve(Field::create(17), 4, 3);
    auto ah = analyze(hw, 1);
    CHECK(ah.genus == 6);

    Curve sx = product_sextic_curve(Field::create(13));
    auto as = analyze(sx, 2);
    CHECK(as.genus == 25);
    CHECK(as.genus_exact);
}

TEST_CASE("normal-form characterization") {
    Curve am = artin_mumford_curve(5);
    auto c = carac_form_check(am.f());
    CHECK(c.holds);
    CHECK(c.m == 5);
    CHECK(c.l == 5);

    FieldPtr F5 = Field::create(5);
    CHECK_FALSE(carac_form_check(parse_poly("X^3 + Y^3 + 1", F5)).holds);

    FieldPtr F17 = Field::create(17);
    CHECK_FALSE(carac_form_check(parse_poly("X^4*Y^3 + X^3 + Y^4", F17)).holds);

    // (b) <=> (c): coordinate multiplicities l and m summing to d
    std::vector<Curve> corpus;
    corpus.push_back(artin_mumford_curve(5));
    corpus.push_back(artin_mumford_curve(7));
    corpus.push_back(product_sextic_curve(Field::create(13)));
    corpus.push_back(hurwitz_curve(Field::create(17), 4, 3));
    for (const Curve& c2 : corpus) {
        auto form = carac_form_check(c2.f());
        const FieldPtr& F = c2.base_field();
        int l = multiplicity(c2, O1(F));
        int m = multiplicity(c2, O2(F));
        bool crit_c = (l >= 1 && m >= 1 && l + m == c2.degree());
        CHECK(form.holds == crit_c);
        if (form.holds) {
            CHECK(form.l == l);
            CHECK(form.m == m);
        }
    }
}

TEST_CASE("cremona transformation") {
    FieldPtr F5 = Field::create(5);
    // smooth conic XY - Z^2: fixed by the transformation
    BivarPoly conic = parse_poly("X*Y - 1", F5);
    HomogPoly C = homogenize(conic);
    HomogPoly out = cremona_transform(C);
    CHECK(out.degree() == 2);
    CHECK(out == C);
    CHECK(cremona_transform(out) == C);

    Curve am = artin_mumford_curve(5);
    HomogPoly am_out = cremona_transform(am.F());
    CHECK(am_out.degree() == 10);  // 2*2q - q - q = 2q
    Curve am_new = Curve::from_homogeneous(am_out);
    CHECK(multiplicity(am_new, O1(F5)) == 5);
    CHECK(multiplicity(am_new, O2(F5)) == 5);

    // (0:0:1) on the curve: refused
    CHECK_THROWS_AS(cremona_transform(homogenize(parse_poly("Y - X^2", F5))),
                    precondition_error);

    // degree law 2d - r1 - r2 on random valid normal-form curves
    std::mt19937_64 rng(424242);
    FieldPtr F7 = Field::create(7);
    int done = 0;
    for (int trial = 0; trial < 500 && done < 10; ++trial) {
        BivarPoly g = testutil::random_poly(F7, 3, 5, rng);
        if (g.is_zero() || g.coeff(0, 0).is_zero()) continue;
        if (g.degree_u() > 2 || g.degree_v() > 2) continue;
        BivarPoly f = BivarPoly::monomial(F7, 2, 2, F7->one()) + g;  // X^2 Y^2 + g
        HomogPoly Fh;
        int r1 = 0, r2 = 0, d = 0;
        try {
            Curve c2(f);
            d = c2.degree();
            r1 = multiplicity(c2, O1(F7));
            r2 = multiplicity(c2, O2(F7));
            if (r1 < 1 || r2 < 1) continue;
            Fh = cremona_transform(c2.F());
        } catch (const error&) {
            continue;
        }
        CHECK(Fh.degree() == 2 * d - r1 - r2);
        ++done;
    }
    CHECK(done == 10);
}

TEST_CASE("projective changes transport multiplicities") {
    Curve am = artin_mumford_curve(5);
    const FieldPtr& F = am.base_field();
    Matrix3 id = Matrix3::identity(F);
    CHECK(projective_change(am, id).f() == am.f());

    // swap X and Y: the equation is symmetric
    Matrix3 sw = Matrix3::identity(F);
    std::swap(sw.m[0], sw.m[1]);
    CHECK(projective_change(am, sw).f() == am.f());

    // move the node of Y^2 - X^2 - X^3 from the origin to (1:0:0)
    FieldPtr F5 = Field::create(5);
    Curve node(parse_poly("Y^2 - X^2 - X^3", F5));
    ProjPoint origin = ProjPoint::make(F5->zero(), F5->zero(), F5->one());
    REQUIRE(multiplicity(node, origin) == 2);
    Matrix3 M = Matrix3::identity(F5);
    std::swap(M.m[0], M.m[2]);  // exchange X and Z
    Curve moved = projective_change(node, M);
    CHECK(multiplicity(moved, O1(F5)) == 2);

    Matrix3 sing = Matrix3::identity(F5);
    sing.m[2][2] = F5->zero();
    CHECK_THROWS_AS(projective_change(node, sing), precondition_error);
}
