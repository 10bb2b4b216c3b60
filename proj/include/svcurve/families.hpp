#pragma once

// Named curve families used by the CLI and the verification suites.

#include "curve.hpp"
#include "parser.hpp"

namespace svcurve {

// factor a prime power q = p^k; rejects anything else
inline std::pair<std::int64_t, int> factor_prime_power(std::int64_t q) {
    if (q < 2) throw precondition_error("field size must be >= 2");
    std::int64_t p = q;
    for (std::int64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    int k = 0;
    std::int64_t t = q;
    while (t % p == 0) {
        t /= p;
        ++k;
    }
    if (t != 1) throw precondition_error("field size must be a prime power");
    return {p, k};
}

// (X^q - X)(Y^q - Y) = 1 over F_q
inline Curve artin_mumford_curve(std::int64_t q) {
    auto [p, k] = factor_prime_power(q);
    FieldPtr F = Field::create(p, k);
    BivarPoly xq = BivarPoly::monomial(F, static_cast<std::uint32_t>(q), 0, F->one()) -
                   BivarPoly::var_u(F);
    BivarPoly yq = BivarPoly::monomial(F, 0, static_cast<std::uint32_t>(q), F->one()) -
                   BivarPoly::var_v(F);
    return Curve(xq * yq - BivarPoly::constant(F, F->one()));
}

// X^n Y^l + X^l + Y^n = 0 over F_p, 1 <= l <= n
inline Curve hurwitz_curve(const FieldPtr& F, int n, int l) {
    if (l < 1 || n < l) throw precondition_error("hurwitz family needs 1 <= l <= n");
    BivarPoly f(F);
    f.add_term(n, l, F->one());
    f.add_term(l, 0, F->one());
    f.add_term(0, n, F->one());
    return Curve(f);
}

// X^6 Y^6 + X^6 + Y^6 - 3 = 0, by default over F_13
inline Curve product_sextic_curve(const FieldPtr& F) {
    return Curve(parse_poly("X^6*Y^6 + X^6 + Y^6 - 3", F));
}

}  // namespace svcurve
