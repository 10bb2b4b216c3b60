#include <catch2/catch_amalgamated.hpp>

#include <svcurve/branch.hpp>
#include <svcurve/families.hpp>
#include <svcurve/parser.hpp>

#include "test_helpers.hpp"

using namespace svcurve;

namespace {

ProjPoint O1(const FieldPtr& F) { return ProjPoint::make(F->one(), F->zero(), F->zero()); }
ProjPoint O2(const FieldPtr& F) { return ProjPoint::make(F->zero(), F->one(), F->zero()); }

// residual of the chart equation on the branch parametrization
bool branch_on_curve(const Curve& c, const Branch& br) {
    BivarPoly g = c.F().mapped(br.field()).dehomogenize(br.chart);
    return series_eval(g, br.x, br.y).is_zero();
}

// valuation of the function (numerator form / denominator form) on a branch
int function_valuation(const Branch& br, const HomogPoly& num, const HomogPoly& den) {
    return intersection_multiplicity(br, num) - intersection_multiplicity(br, den);
}

}  // namespace

TEST_CASE("branches at nodes, smooth points and q-fold ordinary points") {
    FieldPtr F5 = Field::create(5);
    Curve node(parse_poly("Y^2 - X^2 - X^3", F5));
    auto nb = branches_at(node, ProjPoint::make(F5->zero(), F5->zero(), F5->one()));
    REQUIRE(nb.size() == 2);  // tangents Y = X and Y = -X
    for (const auto& br : nb) {
        CHECK(branch_on_curve(node, br));
        REQUIRE(br.slope.has_value());
    }
    CHECK((nb[0].slope->coeffs()[0] + nb[1].slope->coeffs()[0]) % 5 == 0);

    Curve am = artin_mumford_curve(5);
    auto b1 = branches_at(am, O1(am.base_field()));
    CHECK(b1.size() == 5);
    for (const auto& br : b1) CHECK(branch_on_curve(am, br));
    auto b2 = branches_at(am, O2(am.base_field()));
    CHECK(b2.size() == 5);

    Curve cusp(parse_poly("Y^2 - X^3", F5));
    CHECK_THROWS_AS(branches_at(cusp, ProjPoint::make(F5->zero(), F5->zero(), F5->one())),
                    unsupported_error);

    // smooth point with a vertical tangent: X = Y^2 at the origin
    Curve vert(parse_poly("X - Y^2", F5));
    auto vb = branches_at(vert, ProjPoint::make(F5->zero(), F5->zero(), F5->one()));
    REQUIRE(vb.size() == 1);
    CHECK_FALSE(vb[0].slope.has_value());  // axis tangent
    CHECK(branch_on_curve(vert, vb[0]));
}

TEST_CASE("intersection multiplicities on branches") {
    FieldPtr F5 = Field::create(5);
    Curve par(parse_poly("Y - X^2", F5));
    auto pb = branches_at(par, ProjPoint::make(F5->zero(), F5->zero(), F5->one()));
    REQUIRE(pb.size() == 1);
    // tangent line Y = 0 at a non-inflection smooth point
    CHECK(intersection_multiplicity(pb[0], parse_poly("Y", F5)) == 2);
    // a transversal line
    CHECK(intersection_multiplicity(pb[0], parse_poly("X", F5)) == 1);
    // the defining equation vanishes identically: precision exhausted
    CHECK_THROWS_AS(intersection_multiplicity(pb[0], par.f()), precision_error);
}

TEST_CASE("divisor of x - a on the Artin-Mumford curve") {
    std::int64_t q = 5;
    Curve am = artin_mumford_curve(q);
    const FieldPtr& F = am.base_field();
    FieldElement a = F->from_int(2);
    // homogeneous forms of the line X - aZ and the infinity line Z
    HomogPoly line(F, 1), zline(F, 1);
    line.add_term(1, 0, 0, F->one());
    line.add_term(0, 0, 1, -a);
    zline.add_term(0, 0, 1, F->one());

    // the q branches centered at O2; exactly one of them is P_a
    auto bO2 = branches_at(am, O2(F));
    REQUIRE(bO2.size() == static_cast<std::size_t>(q));
    long long line_total = 0;
    int zeros_of_function = 0;
    for (const auto& br : bO2) {
        line_total += intersection_multiplicity(br, line);
        int fv = function_valuation(br, line, zline);
        if (fv > 0) {
            CHECK(fv == q);  // v_{P_a}(x - a) = q
            ++zeros_of_function;
        } else {
            CHECK(fv == 0);
        }
    }
    CHECK(zeros_of_function == 1);
    // Bezout across the O2 branches: deg(line) * deg(curve) = 2q, all of it here
    CHECK(line_total == 2 * q);

    // q polar branches at O1, each a simple pole of x - a
    auto bO1 = branches_at(am, O1(F));
    REQUIRE(bO1.size() == static_cast<std::size_t>(q));
    for (const auto& br : bO1) CHECK(function_valuation(br, line, zline) == -1);
}

TEST_CASE("rational branch counts N_m") {
    Curve am = artin_mumford_curve(5);
    CHECK(count_branches(am, 1) == 10);
    CHECK(count_branches(am, 2) == 110);  // q^2(q-1) + 2q

    Curve sx = product_sextic_curve(Field::create(13));
    CHECK(count_branches(sx, 1) == 48);

    // non-ordinary singularities are refused
    Curve hw = hurwitz_curve(Field::create(17), 4, 3);
    CHECK_THROWS_AS(count_branches(hw, 1), unsupported_error);
    CHECK_THROWS_AS(count_branches(am, 0), precondition_error);
}

TEST_CASE("conic system through the two singular points") {
    Curve am = artin_mumford_curve(5);
    auto a = analyze(am, 2);
    REQUIRE(a.h_status.has_value());
    LinearSystem L = conic_system_through(am, a.h_status->P1, a.h_status->P2);
    CHECK(L.r == 3);
    CHECK(L.h == 3);
    CHECK(L.B_degree == 10);                 // 2q
    CHECK(L.n == 10);                        // 4q - 2q
    CHECK(L.footnote_n_condition == false);  // q = 5 <= (d-2)/2 = 4... reported only
    REQUIRE(L.basis.size() == 4);
    // canonical presentation: Z^2, XY, XZ, YZ i.e. affine {1, xy, x, y}
    CHECK(L.basis[0].dehomogenize(Chart::affine_z).to_text() == "1");
    CHECK(L.basis[1].dehomogenize(Chart::affine_z).to_text() == "X*Y");
    CHECK(L.basis[2].dehomogenize(Chart::affine_z).to_text() == "X");
    CHECK(L.basis[3].dehomogenize(Chart::affine_z).to_text() == "Y");

    CHECK_THROWS_AS(conic_system_through(am, a.h_status->P1, a.h_status->P1),
                    precondition_error);

    // two points on a smooth conic: each condition cuts the dimension by one
    FieldPtr F5 = Field::create(5);
    Curve conic(parse_poly("X*Y - 1", F5));
    ProjPoint P1 = ProjPoint::make(F5->one(), F5->one(), F5->one());
    ProjPoint P2 = ProjPoint::make(F5->from_int(2), F5->from_int(3), F5->one());
    LinearSystem Lc = conic_system_through(conic, P1, P2);
    CHECK(Lc.r == 3);
}

TEST_CASE("base locus at non-ordinary points via the no-shared-tangent criterion") {
    Curve hw = hurwitz_curve(Field::create(17), 4, 3);
    auto sings = find_singular_points(hw, 1);
    REQUIRE(sings.size() == 3);
    std::vector<ProjPoint> pts;
    for (const auto& s : sings) pts.push_back(s.point);
    LinearSystem L = linear_system_through(hw, 2, pts);
    CHECK(L.r == 2);
    CHECK(L.B_degree == 9);
    CHECK(L.n == 5);  // 2*7 - 9, the degree of the induced series

    // complete systems carry no base locus
    LinearSystem lines = complete_system(hw, 1);
    CHECK(lines.r == 2);
    CHECK(lines.n == 7);
    LinearSystem conics = complete_system(hw, 2);
    CHECK(conics.r == 5);
    CHECK(conics.n == 14);
}

TEST_CASE("order sequences at branches") {
    FieldPtr F5 = Field::create(5);
    Curve conic(parse_poly("X*Y - 1", F5));
    LinearSystem lines = complete_system(conic, 1);
    ProjPoint P = ProjPoint::make(F5->one(), F5->one(), F5->one());
    auto br = branches_at(conic, P);
    REQUIRE(br.size() == 1);
    CHECK(order_sequence_at(conic, br[0], lines) == std::vector<int>({0, 1, 2}));

    std::int64_t q = 5;
    Curve am = artin_mumford_curve(q);
    auto a = analyze(am, 2);
    LinearSystem L = conic_system_through(am, a.h_status->P1, a.h_status->P2);
    // every rational branch: j = (0, 1, q, q+1)
    for (const auto& P0 : {a.h_status->P1, a.h_status->P2})
        for (const auto& b : branches_at(am, P0))
            CHECK(order_sequence_at(am, b, L) ==
                  std::vector<int>({0, 1, static_cast<int>(q), static_cast<int>(q + 1)}));

    // a non-rational F_{q^2} point: j = (0, 1, 2, q)
    FieldPtr F25 = Field::extension(am.base_field(), 2);
    BivarPoly am25 = am.f().mapped(F25);
    bool found = false;
    for (std::int64_t i = 0; i < 25 && !found; ++i)
        for (std::int64_t j = 0; j < 25 && !found; ++j) {
            FieldElement aa = F25->element_at(i), bb = F25->element_at(j);
            if (!am25.eval(aa, bb).is_zero()) continue;
            ProjPoint Q{aa, bb, F25->one()};
            auto brq = branches_at(am, Q);
            REQUIRE(brq.size() == 1);
            CHECK(order_sequence_at(am, brq[0], L) == std::vector<int>({0, 1, 2, 5}));
            found = true;
        }
    CHECK(found);
}

TEST_CASE("generic order sequences by sampling") {
    std::int64_t q = 5;
    Curve am = artin_mumford_curve(q);
    auto a = analyze(am, 2);
    LinearSystem L = conic_system_through(am, a.h_status->P1, a.h_status->P2);
    CHECK(generic_order_sequence(am, L, 10) == std::vector<int>({0, 1, 2, 5}));

    // smooth plane cubic over F_13, line system: classical (0, 1, 2)
    FieldPtr F13 = Field::create(13);
    Curve cubic(parse_poly("Y^2 - X^3 + X", F13));
    LinearSystem lines = complete_system(cubic, 1);
    CHECK(generic_order_sequence(cubic, lines, 6) == std::vector<int>({0, 1, 2}));

    CHECK_THROWS_AS(generic_order_sequence(am, L, 0), precondition_error);
}

TEST_CASE("the distinguished conic at affine points") {
    std::int64_t q = 5;
    Curve am = artin_mumford_curve(q);
    FieldPtr F25 = Field::extension(am.base_field(), 2);
    BivarPoly am25 = am.f().mapped(F25);
    int checked = 0;
    for (std::int64_t i = 0; i < 25 && checked < 5; ++i)
        for (std::int64_t j = 0; j < 25 && checked < 5; ++j) {
            FieldElement aa = F25->element_at(i), bb = F25->element_at(j);
            if (!am25.eval(aa, bb).is_zero()) continue;
            BivarPoly g = am_osculating_conic(am, aa, bb);
            // lies in the affine span {1, X, Y, XY}
            CHECK(g.coeff(2, 0).is_zero());
            CHECK(g.coeff(0, 2).is_zero());
            CHECK(g.coeff(1, 1).is_one());
            // contact at the branch is at least q
            ProjPoint P{aa, bb, F25->one()};
            auto brs = branches_at(am, P);
            CHECK(intersection_multiplicity(brs[0], g) >= q);
            ++checked;
        }
    CHECK(checked == 5);

    FieldPtr F5 = am.base_field();
    CHECK_THROWS_AS(am_osculating_conic(am, F5->zero(), F5->zero()), precondition_error);
}

TEST_CASE("branch intersection sums match the resultant oracle") {
    // sum of branch multiplicities at the origin vs the valuation of
    // Res_V(f, h) at U = 0, for pairs where the origin is the only common
    // point above U = 0 and the leading V-coefficient of f is constant
    FieldPtr F7 = Field::create(7);
    std::mt19937_64 rng(31337);
    std::vector<std::string> curves = {"Y^2 - X^2 - X^3", "Y - X^2", "Y^2 - X^3 - X",
                                       "X*Y - X^3 - Y^3"};
    int done = 0;
    for (int trial = 0; trial < 400 && done < 20; ++trial) {
        const std::string& ct = curves[trial % curves.size()];
        BivarPoly f = parse_poly(ct, F7);
        BivarPoly h = testutil::random_poly(F7, 3, 4, rng);
        if (h.is_zero()) continue;
        h = h - BivarPoly::constant(F7, h.coeff(0, 0));  // force h(0,0) = 0
        if (h.is_zero()) continue;
        if (f.v_coeffs().back().degree() != 0) continue;
        UnivarPoly res = testutil::resultant_v(f, h);
        if (res.is_zero()) continue;  // common component
        // the only common root on U = 0 must be V = 0
        UnivarPoly f0(F7), h0(F7);
        {
            std::vector<FieldElement> c0, c1;
            for (const auto& r : f.v_coeffs()) c0.push_back(r.coeff(0));
            for (const auto& r : h.v_coeffs()) c1.push_back(r.coeff(0));
            f0 = UnivarPoly(F7, c0);
            h0 = UnivarPoly(F7, c1);
        }
        if (f0.is_zero() || h0.is_zero()) continue;
        UnivarPoly g = gcd(f0, h0);
        bool only_origin = true;
        for (int i = 0; i < g.degree(); ++i)
            if (!g.coeff(i).is_zero()) only_origin = false;
        if (!only_origin) continue;

        Curve c{f};
        ProjPoint origin = ProjPoint::make(F7->zero(), F7->zero(), F7->one());
        std::vector<Branch> brs;
        try {
            brs = branchdetail::all_geometric_branches(c, origin, default_precision(c));
        } catch (const unsupported_error&) {
            continue;
        }
        long long total = 0;
        bool skipped = false;
        for (const auto& br : brs) {
            try {
                total += intersection_multiplicity(br, h.mapped(br.field()));
            } catch (const precision_error&) {
                skipped = true;
            }
        }
        if (skipped) continue;
        int res_val = 0;
        while (res_val <= res.degree() && res.coeff(res_val).is_zero()) ++res_val;
        CHECK(total == res_val);
        ++done;
    }
    CHECK(done == 20);
}
