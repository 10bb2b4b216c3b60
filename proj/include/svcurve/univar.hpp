#pragma once

// Dense univariate polynomials over a Field: the workhorse for tangent-cone
// slope polynomials, function-field denominators and the modulus-level
// plumbing. Coefficients are little-endian with no trailing zeros; the zero
// polynomial has an empty vector and degree() == -1.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gf.hpp"

namespace svcurve {

class UnivarPoly {
public:
    UnivarPoly() = default;
    explicit UnivarPoly(FieldPtr f) : field_(std::move(f)) {}
    UnivarPoly(FieldPtr f, std::vector<FieldElement> coeffs)
        : field_(std::move(f)), c_(std::move(coeffs)) {
        trim();
    }

    static UnivarPoly constant(const FieldPtr& f, const FieldElement& a) {
        UnivarPoly r(f);
        if (!a.is_zero()) r.c_ = {a};
        return r;
    }
    static UnivarPoly one(const FieldPtr& f) { return constant(f, f->one()); }
    // the monomial c * T^e
    static UnivarPoly monomial(const FieldPtr& f, const FieldElement& c, int e) {
        UnivarPoly r(f);
        if (!c.is_zero()) {
            r.c_.assign(e + 1, f->zero());
            r.c_[e] = c;
        }
        return r;
    }

    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<FieldElement>& coeffs() const { return c_; }

    FieldElement coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
        return c_[i];
    }
    const FieldElement& leading() const {
        if (c_.empty()) throw precondition_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_constant() const { return c_.size() <= 1; }

    FieldElement eval(const FieldElement& x) const {
        FieldElement acc = field_->zero();
        for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
        return acc;
    }

    UnivarPoly derivative() const {
        UnivarPoly r(field_);
        if (c_.size() < 2) return r;
        r.c_.resize(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.c_[i - 1] = field_->from_int(static_cast<std::int64_t>(i)) * c_[i];
        r.trim();
        return r;
    }

    // composition with T -> T + a (Taylor shift by Horner)
    UnivarPoly shift(const FieldElement& a) const {
        UnivarPoly r(field_);
        for (int i = degree(); i >= 0; --i) {
            r = r.mul_linear(a);
            r = r.add_constant(c_[i]);
        }
        return r;
    }

    UnivarPoly scaled(const FieldElement& s) const {
        UnivarPoly r(field_);
        if (s.is_zero()) return r;
        r.c_ = c_;
        for (auto& x : r.c_) x = x * s;
        return r;
    }

    UnivarPoly monic() const {
        if (is_zero()) throw precondition_error("monic(): zero polynomial");
        return scaled(inverse(leading()));
    }

    friend UnivarPoly operator+(const UnivarPoly& a, const UnivarPoly& b) {
        UnivarPoly r(a.field_ ? a.field_ : b.field_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), r.field_->zero());
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            FieldElement s = r.field_->zero();
            if (i < a.c_.size()) s = s + a.c_[i];
            if (i < b.c_.size()) s = s + b.c_[i];
            r.c_[i] = s;
        }
        r.trim();
        return r;
    }

    friend UnivarPoly operator-(const UnivarPoly& a, const UnivarPoly& b) {
        return a + b.negated();
    }

    UnivarPoly negated() const {
        UnivarPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
        UnivarPoly r(a.field_ ? a.field_ : b.field_);
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, r.field_->zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend bool operator==(const UnivarPoly& a, const UnivarPoly& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const UnivarPoly& a, const UnivarPoly& b) {
        return !(a == b);
    }

    // division with remainder; the divisor's leading coefficient is a unit
    std::pair<UnivarPoly, UnivarPoly> divrem(const UnivarPoly& d) const {
        if (d.is_zero()) throw precondition_error("division by zero polynomial");
        UnivarPoly q(field_), r = *this;
        FieldElement lcinv = inverse(d.leading());
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int shift = r.degree() - d.degree();
            FieldElement c = r.leading() * lcinv;
            q = q + monomial(field_, c, shift);
            r = r - d.mul_monomial(c, shift);
        }
        return {q, r};
    }

    UnivarPoly mul_monomial(const FieldElement& c, int e) const {
        UnivarPoly r(field_);
        if (is_zero() || c.is_zero()) return r;
        r.c_.assign(c_.size() + e, field_->zero());
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + e] = c_[i] * c;
        r.trim();
        return r;
    }

private:
    UnivarPoly mul_linear(const FieldElement& a) const {  // *this * (T + a)... used by shift
        UnivarPoly r(field_);
        if (is_zero()) return r;
        r.c_.assign(c_.size() + 1, field_->zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            r.c_[i + 1] = r.c_[i + 1] + c_[i];
            r.c_[i] = r.c_[i] + c_[i] * a;
        }
        r.trim();
        return r;
    }
    UnivarPoly add_constant(const FieldElement& a) const {
        UnivarPoly r = *this;
        if (r.c_.empty()) r.c_.push_back(r.field_->zero());
        r.c_[0] = r.c_[0] + a;
        r.trim();
        return r;
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldPtr field_;
    std::vector<FieldElement> c_;
};

inline UnivarPoly gcd(UnivarPoly a, UnivarPoly b) {
    while (!b.is_zero()) {
        UnivarPoly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

inline UnivarPoly powmod(const UnivarPoly& base, std::uint64_t e, const UnivarPoly& mod) {
    UnivarPoly acc = UnivarPoly::one(base.field());
    UnivarPoly b = base.divrem(mod).second;
    while (e > 0) {
        if (e & 1) acc = (acc * b).divrem(mod).second;
        b = (b * b).divrem(mod).second;
        e >>= 1;
    }
    return acc;
}

// Distinct roots of u in its coefficient field, found by exhaustive
// evaluation (desk-scale q), returned with multiplicities. The distinct
// count equals deg gcd(u, T^q - T).
struct RationalRoots {
    int count = 0;                                    // distinct roots
    std::vector<std::pair<FieldElement, int>> roots;  // (root, multiplicity)
};

inline RationalRoots count_rational_roots(const UnivarPoly& u) {
    if (u.is_zero()) throw precondition_error("root counting on zero polynomial");
    const FieldPtr& F = u.field();
    RationalRoots out;
    for (std::int64_t i = 0; i < F->q(); ++i) {
        FieldElement a = F->element_at(i);
        if (!u.eval(a).is_zero()) continue;
        // multiplicity by repeated exact division by (T - a)
        UnivarPoly lin(F, {-a, F->one()});
        UnivarPoly v = u;
        int mult = 0;
        while (true) {
            auto [q, r] = v.divrem(lin);
            if (!r.is_zero()) break;
            ++mult;
            v = q;
        }
        out.roots.emplace_back(a, mult);
    }
    out.count = static_cast<int>(out.roots.size());
    return out;
}

// Squarefree test via gcd with the formal derivative. A vanishing
// derivative (p-th power situation) counts as not squarefree.
inline bool is_squarefree(const UnivarPoly& u) {
    if (u.is_zero()) throw precondition_error("squarefree test on zero polynomial");
    if (u.is_constant()) return true;
    UnivarPoly d = u.derivative();
    if (d.is_zero()) return false;
    return gcd(u, d).is_constant();
}

}  // namespace svcurve
