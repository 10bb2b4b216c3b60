#pragma once

// Upper bounds for the number of rational branches: Hasse-Weil in both the
// Weil and Serre roundings, the Stohr-Voloch bound for a given Frobenius
// order sequence, its conic specialization for curves with two
// complementary singularities, the double-Frobenius refinement, and the
// bound-attainment identity of the (X^q-X)(Y^q-Y)=1 family.
//
// Everything is exact integer arithmetic; each bound is floored exactly
// once, at the end.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace svcurve {

using int128 = __int128;

inline long long floor_div(int128 num, int128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int128 q = num / den;
    if (num % den != 0 && num < 0) --q;
    return static_cast<long long>(q);
}

inline long long isqrt_floor(int128 n) {
    if (n < 0) throw precondition_error("isqrt of negative value");
    int128 r = 0, bit = int128(1) << 62;
    while (bit > n) bit >>= 2;
    while (bit != 0) {
        if (n >= r + bit) {
            n -= r + bit;
            r = (r >> 1) + bit;
        } else {
            r >>= 1;
        }
        bit >>= 2;
    }
    return static_cast<long long>(r);
}

struct HasseWeil {
    long long weil = 0;   // floor(q^m + 1 + 2g sqrt(q^m))
    long long serre = 0;  // q^m + 1 + g floor(2 sqrt(q^m))
};

inline HasseWeil hasse_weil(long long q_m, long long g) {
    if (g < 0) throw precondition_error("genus must be nonnegative");
    HasseWeil hw;
    hw.weil = q_m + 1 + isqrt_floor(int128(4) * g * g * q_m);
    hw.serre = q_m + 1 + g * isqrt_floor(int128(4) * q_m);
    return hw;
}

// floor(((nu_1+...+nu_{r-1})(2g-2) + (q^m + r) n) / r)
inline long long sv_bound(long long q_m, long long g, long long n, int r,
                          const std::vector<int>& nu) {
    if (static_cast<int>(nu.size()) != r || nu.empty() || nu[0] != 0)
        throw precondition_error("malformed Frobenius order sequence");
    for (std::size_t i = 1; i < nu.size(); ++i)
        if (nu[i] <= nu[i - 1]) throw precondition_error("order sequence must increase");
    long long s = 0;
    for (int v : nu) s += v;
    int128 num = int128(s) * (2 * g - 2) + int128(q_m + r) * n;
    return floor_div(num, r);
}

// floor(2 r1 r2 + (r1+r2)(q^m-3)/3), the conic-system bound under (H);
// agrees with sv_bound at g = r1 r2 - r1 - r2 + 1, n = d, r = 3.
inline long long svc_bound(long long q_m, long long r1, long long r2, long long d) {
    if (r1 + r2 != d) throw precondition_error("svc bound requires r1 + r2 = d");
    int128 num = int128(6) * r1 * r2 + int128(r1 + r2) * (q_m - 3);
    return floor_div(num, 3);
}

// floor((2 r1 r2 + (r1+r2) q (q^{m-1}+1) - (c1-cm-cm1) N1 - cm1 N_{m-1}) / cm)
inline long long abc_bound(long long q, int m, long long r1, long long r2, long long c1,
                           long long cm, long long cm1, long long N1, long long Nm1) {
    if (cm < 2) throw precondition_error("abc bound needs c_m >= 2");
    if (cm1 < q) throw precondition_error("abc bound needs c_{m-1} >= q");
    if (c1 < q + 4) throw precondition_error("abc bound needs c_1 >= q + 4");
    int128 qm1 = 1;
    for (int i = 0; i + 1 < m; ++i) qm1 *= q;
    int128 num = int128(2) * r1 * r2 + int128(r1 + r2) * q * (qm1 + 1) -
                 int128(c1 - cm - cm1) * N1 - int128(cm1) * Nm1;
    return floor_div(num, cm);
}

struct SvfSvcl {
    long long svf = 0;   // line system:  floor(r1 r2 + (r1+r2) q^m / 2)
    long long svcl = 0;  // full conics:  floor(4 r1 r2 + 2 (r1+r2)(q^m-5) / 5)
};

inline SvfSvcl svf_svcl_bounds(long long q_m, long long r1, long long r2) {
    SvfSvcl out;
    out.svf = floor_div(int128(2) * r1 * r2 + int128(r1 + r2) * q_m, 2);
    out.svcl = floor_div(int128(20) * r1 * r2 + int128(2) * (r1 + r2) * (q_m - 5), 5);
    return out;
}

struct ComparisonFlags {
    bool svc_beats_lines_and_conics = false;  // q^m > 6(r1 r2 - r1 - r2)/(r1+r2)
    bool abc_improves_svc = false;            // sufficient condition only (m = 2)
};

inline ComparisonFlags comparison_conditions(long long q_m, long long r1, long long r2,
                                             long long q, std::optional<long long> N1) {
    ComparisonFlags f;
    f.svc_beats_lines_and_conics =
        int128(q_m) * (r1 + r2) > int128(6) * (r1 * r2 - r1 - r2);
    if (N1) {
        // N_1 > (q(q+3)(r1+r2) - 6(r1 r2 - r1 - r2)) / (3(q+2))
        int128 lhs = int128(*N1) * 3 * (q + 2);
        int128 rhs = int128(q) * (q + 3) * (r1 + r2) - int128(6) * (r1 * r2 - r1 - r2);
        f.abc_improves_svc = lhs > rhs;
    }
    return f;
}

// right-hand side of the attainment identity:
// 2q((kappa_0+kappa_1)(q-2) + q^2 + q + 2), which is
// (kappa_0+kappa_1)(2g-2) + (q + q^2 + 2) n at g = (q-1)^2, n = 2q
inline long long bam_rhs(long long q, const std::vector<int>& kappa, long long g) {
    if (kappa.size() != 2) throw precondition_error("kappa sequence must have length 2");
    if (g != (q - 1) * (q - 1))
        throw precondition_error("attainment identity requires g = (q-1)^2");
    long long ks = kappa[0] + kappa[1];
    long long rhs = 2 * q * (ks * (q - 2) + q * q + q + 2);
    long long general = ks * (2 * g - 2) + (q + q * q + 2) * (2 * q);
    if (rhs != general) throw error("attainment identity rhs mismatch");
    return rhs;
}

// lhs = c1 N1 + c2 (N2 - N1); equality against the kappa = (0,1) rhs
inline bool bam_check(long long q, long long N1, long long N2, long long c1, long long c2) {
    long long lhs = c1 * N1 + c2 * (N2 - N1);
    return lhs == bam_rhs(q, {0, 1}, (q - 1) * (q - 1));
}

// c_1 >= q j_1 + (j_2 - kappa_0) + (j_3 - kappa_1) from the rational-branch
// order sequence; the caller passes the minimum j over rational branches
inline long long c1_from_orders(long long q, const std::vector<int>& j,
                                const std::vector<int>& kappa) {
    if (j.size() != 4 || kappa.size() != 2)
        throw precondition_error("c_1 derivation needs j of length 4 and kappa of length 2");
    if (kappa[0] > j[2] || kappa[1] > j[3])
        throw precondition_error("inconsistent sequences: kappa exceeds j");
    return q * j[1] + (j[2] - kappa[0]) + (j[3] - kappa[1]);
}

// Raw evaluator for the general two-Frobenius bound
//   (c1-cu-cm-cmu) N1 + cu Nu + cm Nm + cmu Nmu
//     <= (sum kappa)(2g-2) + (q^u + q^m + r - 1) n;
// no c-derivation is attempted beyond the instances above.
struct ABGeneral {
    long long lhs = 0, rhs = 0;
};

inline ABGeneral ab_general(long long q, int u, int m, int r, long long n, long long g,
                            const std::vector<int>& kappa, long long c1, long long cu,
                            long long cm, long long cmu, long long N1, long long Nu,
                            long long Nm, long long Nmu) {
    ABGeneral out;
    int128 qu = 1, qm = 1;
    for (int i = 0; i < u; ++i) qu *= q;
    for (int i = 0; i < m; ++i) qm *= q;
    long long ks = 0;
    for (int v : kappa) ks += v;
    out.lhs = static_cast<long long>(int128(c1 - cu - cm - cmu) * N1 + int128(cu) * Nu +
                                     int128(cm) * Nm + int128(cmu) * Nmu);
    out.rhs = static_cast<long long>(int128(ks) * (2 * g - 2) + (qu + qm + r - 1) * n);
    return out;
}

// Everything the reporting layer needs to print a bounds table.
struct BoundReport {
    long long q = 0;  // base field size
    int m = 1, u = 1;
    long long q_m = 0;
    long long g = 0;
    bool g_exact = false;
    long long d = 0;
    std::optional<long long> r1, r2;  // present under (H)
    long long n = 0;
    int r = 0;
    std::vector<int> nu, kappa;
    std::string nu_provenance, kappa_provenance;
    long long c1 = 0, cm = 0, cm1 = 0;
    std::optional<long long> hw_weil, hw_serre, sv, svc, abc, svf, svcl, bam;
    std::optional<bool> svc_dominates, abc_sufficient;
    std::vector<std::pair<int, long long>> known_counts;  // (m, N_m) inputs used
};

}  // namespace svcurve
