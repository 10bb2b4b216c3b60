#pragma once

// Truncated power series in t over a Field, with a tracked precision that
// is never overstated: an object of precision N represents a residue class
// mod t^N. hensel_expand lifts the branch of a bivariate polynomial at a
// point where the V-partial is a unit, doubling precision per Newton pass.

#include <algorithm>
#include <optional>
#include <vector>

#include "bivar.hpp"

namespace svcurve {

class PowerSeries {
public:
    PowerSeries() = default;
    PowerSeries(FieldPtr f, int precision)
        : field_(std::move(f)), c_(precision, field_->zero()) {
        if (precision <= 0) throw precondition_error("series precision must be positive");
    }
    PowerSeries(FieldPtr f, std::vector<FieldElement> coeffs)
        : field_(std::move(f)), c_(std::move(coeffs)) {
        if (c_.empty()) throw precondition_error("series precision must be positive");
    }

    const FieldPtr& field() const { return field_; }
    int precision() const { return static_cast<int>(c_.size()); }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    FieldElement coeff(int i) const {
        return i < precision() ? c_[i] : throw precondition_error("coefficient beyond precision");
    }

    static PowerSeries constant(const FieldPtr& f, const FieldElement& a, int prec) {
        PowerSeries s(f, prec);
        s.c_[0] = a;
        return s;
    }
    // a + t, the parameter series of a Hensel expansion
    static PowerSeries parameter(const FieldPtr& f, const FieldElement& a, int prec) {
        PowerSeries s(f, prec);
        s.c_[0] = a;
        if (prec > 1) s.c_[1] = f->one();
        return s;
    }

    PowerSeries truncated(int prec) const {
        if (prec > precision()) throw precondition_error("cannot raise series precision");
        PowerSeries s(field_, prec);
        std::copy(c_.begin(), c_.begin() + prec, s.c_.begin());
        return s;
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        int n = std::min(a.precision(), b.precision());
        PowerSeries r(a.field_, n);
        for (int i = 0; i < n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        int n = std::min(a.precision(), b.precision());
        PowerSeries r(a.field_, n);
        for (int i = 0; i < n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        int n = std::min(a.precision(), b.precision());
        PowerSeries r(a.field_, n);
        for (int i = 0; i < n; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; j + i < n; ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    PowerSeries scaled(const FieldElement& s) const {
        PowerSeries r(field_, precision());
        for (int i = 0; i < precision(); ++i) r.c_[i] = c_[i] * s;
        return r;
    }

    bool is_zero() const {  // zero to full precision
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    // first index with a nonzero coefficient; nullopt when the series
    // vanishes to full precision
    std::optional<int> valuation() const {
        for (int i = 0; i < precision(); ++i)
            if (!c_[i].is_zero()) return i;
        return std::nullopt;
    }

    // multiply by t^k; the result is known mod t^{N+k}
    PowerSeries shifted_up(int k) const {
        PowerSeries r(field_, precision() + k);
        for (int i = 0; i < precision(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    // exact division by t^k; requires the low k coefficients to vanish and
    // costs k units of precision
    PowerSeries shifted_down(int k) const {
        if (k == 0) return *this;
        if (precision() <= k) throw precondition_error("series precision exhausted by shift");
        for (int i = 0; i < k; ++i)
            if (!c_[i].is_zero()) throw precondition_error("division by t^k is not exact");
        PowerSeries r(field_, precision() - k);
        for (int i = k; i < precision(); ++i) r.c_[i - k] = c_[i];
        return r;
    }

    // multiplicative inverse; the constant term must be a unit
    PowerSeries inverted() const {
        if (c_[0].is_zero()) throw precondition_error("series inverse needs a unit constant term");
        int n = precision();
        PowerSeries r(field_, n);
        FieldElement u = inverse(c_[0]);
        r.c_[0] = u;
        for (int i = 1; i < n; ++i) {
            FieldElement s = field_->zero();
            for (int j = 1; j <= i; ++j) s = s + c_[j] * r.c_[i - j];
            r.c_[i] = -(u * s);
        }
        return r;
    }

private:
    FieldPtr field_;
    std::vector<FieldElement> c_;
};

inline PowerSeries eval_univar_at_series(const UnivarPoly& p, const PowerSeries& x) {
    PowerSeries acc = PowerSeries::constant(x.field(), x.field()->zero(), x.precision());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * x;
        acc = acc + PowerSeries::constant(x.field(), p.coeff(i), x.precision());
    }
    return acc;
}

// g(x(t), y(t)) truncated to the shared precision.
inline PowerSeries series_eval(const BivarPoly& g, const PowerSeries& x, const PowerSeries& y) {
    int n = std::min(x.precision(), y.precision());
    if (n <= 0) throw precondition_error("series precision must be positive");
    PowerSeries xs = x.truncated(n), ys = y.truncated(n);
    auto rows = g.v_coeffs();
    PowerSeries acc = PowerSeries::constant(xs.field(), xs.field()->zero(), n);
    for (int j = static_cast<int>(rows.size()) - 1; j >= 0; --j) {
        acc = acc * ys;
        acc = acc + eval_univar_at_series(rows[j], xs);
    }
    return acc;
}

// Unique series y(t) with y(0) = b and f(a + t, y(t)) = 0 mod t^N, for a
// point with f(a,b) = 0 and dF/dV(a,b) a unit. Newton iteration doubles the
// working precision each pass.
inline PowerSeries hensel_expand(const BivarPoly& f, const FieldElement& a,
                                 const FieldElement& b, int N) {
    if (N <= 0) throw precondition_error("expansion precision must be positive");
    const FieldPtr& F = f.field();
    if (!f.eval(a, b).is_zero())
        throw precondition_error("hensel_expand: point is not on the curve");
    BivarPoly fv = f.partial_v();
    if (fv.eval(a, b).is_zero())
        throw precondition_error("hensel_expand: dF/dV vanishes at the point (use branch splitting)");

    PowerSeries y = PowerSeries::constant(F, b, 1);
    int prec = 1;
    while (prec < N) {
        prec = std::min(2 * prec, N);
        // re-embed the current approximation at the new precision
        std::vector<FieldElement> c(prec, F->zero());
        for (int i = 0; i < y.precision(); ++i) c[i] = y.coeffs()[i];
        y = PowerSeries(F, std::move(c));
        PowerSeries x = PowerSeries::parameter(F, a, prec);
        PowerSeries val = series_eval(f, x, y);
        if (val.is_zero()) continue;
        PowerSeries der = series_eval(fv, x, y);
        y = y - val * der.inverted();
    }
    PowerSeries x = PowerSeries::parameter(F, a, N);
    if (!series_eval(f, x, y).is_zero())
        throw error("hensel_expand: Newton iteration failed to converge");
    return y;
}

}  // namespace svcurve
