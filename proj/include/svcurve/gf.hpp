#pragma once

// Exact arithmetic in prime fields F_p and extensions F_{p^k}.
//
// Elements are stored as length-k coefficient vectors of the polynomial
// representation modulo a monic irreducible, constant term first
// (little-endian). Fields are immutable after construction and shared via
// FieldPtr, so any operation may run concurrently on shared fields.
// Enumeration order is the odometer order of the coefficient vector
// (constant term is the fastest digit), and the automatic modulus search
// picks the first irreducible in that same order, so two runs agree
// bit-for-bit.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"

namespace svcurve {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class FieldElement {
public:
    FieldElement() = default;  // invalid placeholder, usable in containers

    const FieldPtr& field() const { return field_; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    bool valid() const { return field_ != nullptr; }
    bool is_zero() const;
    bool is_one() const;

private:
    friend class Field;
    friend FieldElement operator+(const FieldElement&, const FieldElement&);
    friend FieldElement operator-(const FieldElement&, const FieldElement&);
    friend FieldElement operator-(const FieldElement&);
    friend FieldElement operator*(const FieldElement&, const FieldElement&);
    FieldElement(FieldPtr f, std::vector<std::int64_t> c)
        : field_(std::move(f)), c_(std::move(c)) {}

    FieldPtr field_;
    std::vector<std::int64_t> c_;  // size k, residues in [0, p)
};

namespace gfdetail {

// Raw univariate helpers over Z/p used for the modulus search, before any
// Field object exists. Polynomials are little-endian int64 vectors with no
// trailing zeros.
using ZpPoly = std::vector<std::int64_t>;

inline void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    zp_trim(r);
    return r;
}

inline std::int64_t zp_inv_scalar(std::int64_t a, std::int64_t p) {
    // extended Euclid on integers
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw precondition_error("not invertible mod p");
    return ((t % p) + p) % p;
}

inline ZpPoly zp_mod(ZpPoly a, const ZpPoly& m, std::int64_t p) {
    // m need not be monic; its leading coefficient is inverted once
    zp_trim(a);
    if (m.empty()) throw precondition_error("zero modulus");
    std::int64_t lcinv = zp_inv_scalar(m.back(), p);
    while (a.size() >= m.size()) {
        std::int64_t c = a.back() * lcinv % p;
        std::size_t off = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[off + i] = ((a[off + i] - c * m[i]) % p + p) % p;
        zp_trim(a);
    }
    return a;
}

inline ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::int64_t p) {
    zp_trim(a);
    zp_trim(b);
    while (!b.empty()) {
        ZpPoly r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// T^e mod m, binary powering.
inline ZpPoly zp_pow_T(std::int64_t e, const ZpPoly& m, std::int64_t p) {
    ZpPoly base = zp_mod(ZpPoly{0, 1}, m, p);
    ZpPoly acc{1};
    while (e > 0) {
        if (e & 1) acc = zp_mod(zp_mul(acc, base, p), m, p);
        base = zp_mod(zp_mul(base, base, p), m, p);
        e >>= 1;
    }
    return acc;
}

// A monic polynomial of degree k >= 2 over F_p is irreducible iff it shares
// no factor with T^{p^j} - T for j = 1..k-1 (every factor of degree j
// divides that polynomial).
inline bool zp_irreducible(const ZpPoly& m, std::int64_t p) {
    int k = static_cast<int>(m.size()) - 1;
    if (k < 1) return false;
    if (k == 1) return true;
    std::int64_t pj = 1;
    for (int j = 1; j < k; ++j) {
        pj *= p;
        ZpPoly t = zp_pow_T(pj, m, p);  // T^{p^j} mod m
        if (t.size() < 2) t.resize(2, 0);
        t[1] = ((t[1] - 1) % p + p) % p;  // subtract T
        zp_trim(t);
        ZpPoly g = zp_gcd(m, t, p);
        if (g.size() > 1) return false;
        if (t.empty()) return false;  // T^{p^j} = T mod m with j < k
    }
    return true;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace gfdetail

class Field : public std::enable_shared_from_this<Field> {
public:
    // Prime field or extension with automatic (deterministic) modulus.
    static FieldPtr create(std::int64_t p, int k = 1) {
        return create_impl(p, k, nullptr);
    }

    // User-supplied modulus: little-endian, length k+1, monic. Coefficients
    // are reduced mod p; reducible moduli are rejected.
    static FieldPtr create(std::int64_t p, int k,
                           const std::vector<std::int64_t>& modulus) {
        return create_impl(p, k, &modulus);
    }

    // Degree-m extension of `base` containing it via a stored embedding of
    // the base generator. Represented single-level as F_p[T]/(M) of degree
    // m * base->k(), not as a tower.
    static FieldPtr extension(const FieldPtr& base, int m);

    std::int64_t p() const { return p_; }
    int k() const { return k_; }
    std::int64_t q() const { return q_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }
    const FieldPtr& base() const { return base_; }

    bool compatible(const Field& o) const {
        return this == &o || (p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_);
    }

    FieldElement zero() const { return element(std::vector<std::int64_t>(k_, 0)); }
    FieldElement one() const { return from_int(1); }

    FieldElement from_int(std::int64_t n) const {
        std::vector<std::int64_t> c(k_, 0);
        c[0] = ((n % p_) + p_) % p_;
        return element(std::move(c));
    }

    // Residue class of T; only meaningful for k > 1.
    FieldElement generator() const {
        if (k_ < 2) throw precondition_error("generator(): prime field has no T");
        std::vector<std::int64_t> c(k_, 0);
        c[1] = 1;
        return element(std::move(c));
    }

    // Odometer enumeration: element_at(i) has digits of i in base p,
    // constant term first.
    FieldElement element_at(std::int64_t index) const {
        std::vector<std::int64_t> c(k_, 0);
        for (int i = 0; i < k_; ++i) {
            c[i] = index % p_;
            index /= p_;
        }
        return element(std::move(c));
    }

    std::int64_t index_of(const FieldElement& a) const {
        std::int64_t idx = 0;
        for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + a.coeffs()[i];
        return idx;
    }

    FieldElement make(std::vector<std::int64_t> coeffs) const {
        if (static_cast<int>(coeffs.size()) != k_)
            throw precondition_error("coefficient vector has wrong length");
        for (auto& c : coeffs) c = ((c % p_) + p_) % p_;
        return element(std::move(coeffs));
    }

    // Ring homomorphism from the stored base subfield (or from a prime
    // field F_p, or identity). Throws when no embedding data exists.
    FieldElement embed(const FieldElement& a) const;

    std::string to_string(const FieldElement& a) const;

private:
    FieldElement element(std::vector<std::int64_t> c) const {
        return FieldElement(shared_from_this(), std::move(c));
    }

    static FieldPtr create_impl(std::int64_t p, int k,
                                const std::vector<std::int64_t>* modulus);

    friend FieldElement operator+(const FieldElement&, const FieldElement&);
    friend FieldElement operator-(const FieldElement&, const FieldElement&);
    friend FieldElement operator*(const FieldElement&, const FieldElement&);
    friend FieldElement operator-(const FieldElement&);
    friend FieldElement inverse(const FieldElement&);

    std::vector<std::int64_t> mul_raw(const std::vector<std::int64_t>& a,
                                      const std::vector<std::int64_t>& b) const {
        std::vector<std::int64_t> r(2 * k_ - 1, 0);
        for (int i = 0; i < k_; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < k_; ++j)
                r[i + j] = (r[i + j] + a[i] * b[j]) % p_;
        }
        // reduce by the monic modulus
        for (int d = 2 * k_ - 2; d >= k_; --d) {
            std::int64_t c = r[d];
            if (c == 0) continue;
            r[d] = 0;
            for (int t = 0; t < k_; ++t)
                r[d - k_ + t] = ((r[d - k_ + t] - c * modulus_[t]) % p_ + p_) % p_;
        }
        r.resize(k_);
        return r;
    }

    std::int64_t p_ = 0;
    int k_ = 0;
    std::int64_t q_ = 0;
    std::vector<std::int64_t> modulus_;  // size k+1, monic; {0,1} when k == 1
    FieldPtr base_;                      // optional embedding data
    std::vector<std::int64_t> base_gen_image_;  // image of base generator, size k
};

inline bool FieldElement::is_zero() const {
    for (auto c : c_)
        if (c != 0) return false;
    return true;
}

inline bool FieldElement::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

inline void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.valid() || !b.valid())
        throw precondition_error("operation on invalid field element");
    if (!a.field()->compatible(*b.field()))
        throw precondition_error("mixed-field arithmetic");
}

inline bool operator==(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    return a.coeffs() == b.coeffs();
}

inline bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
}

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    const Field& F = *a.field();
    std::vector<std::int64_t> c(F.k());
    for (int i = 0; i < F.k(); ++i)
        c[i] = (a.coeffs()[i] + b.coeffs()[i]) % F.p();
    return FieldElement(a.field(), std::move(c));
}

inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    const Field& F = *a.field();
    std::vector<std::int64_t> c(F.k());
    for (int i = 0; i < F.k(); ++i)
        c[i] = ((a.coeffs()[i] - b.coeffs()[i]) % F.p() + F.p()) % F.p();
    return FieldElement(a.field(), std::move(c));
}

inline FieldElement operator-(const FieldElement& a) {
    const Field& F = *a.field();
    std::vector<std::int64_t> c(F.k());
    for (int i = 0; i < F.k(); ++i)
        c[i] = (F.p() - a.coeffs()[i]) % F.p();
    return FieldElement(a.field(), std::move(c));
}

inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    return FieldElement(a.field(), a.field()->mul_raw(a.coeffs(), b.coeffs()));
}

inline FieldElement pow(const FieldElement& a, std::uint64_t e) {
    FieldElement acc = a.field()->one();
    FieldElement base = a;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

inline FieldElement inverse(const FieldElement& a) {
    if (a.is_zero()) throw precondition_error("inversion of zero");
    // a^(q-2); q is desk-scale so the log-q multiplication count is fine
    return pow(a, static_cast<std::uint64_t>(a.field()->q() - 2));
}

inline FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    return a * inverse(b);
}

// a^(q_base^r): the F_{q_base}-Frobenius applied r times. q_base must be a
// power of p (typically the cardinality of a designated base subfield).
inline FieldElement frobenius(const FieldElement& a, std::int64_t q_base, int r = 1) {
    if (r < 1) throw precondition_error("frobenius: r >= 1 required");
    FieldElement x = a;
    for (int i = 0; i < r; ++i) x = pow(x, static_cast<std::uint64_t>(q_base));
    return x;
}

inline FieldPtr Field::create_impl(std::int64_t p, int k,
                                   const std::vector<std::int64_t>* modulus) {
    if (!gfdetail::is_prime(p)) throw precondition_error("characteristic must be prime");
    if (k < 1) throw precondition_error("extension degree must be >= 1");
    std::int64_t q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > (std::int64_t{1} << 21))
            throw budget_error("field cardinality above desk-scale limit 2^20");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->k_ = k;
    f->q_ = q;

    if (k == 1) {
        f->modulus_ = {0, 1};  // identity placeholder T
        if (modulus && (modulus->size() != 2 || (*modulus)[1] != 1))
            throw precondition_error("prime field modulus must be the placeholder T");
        return f;
    }

    if (modulus) {
        if (static_cast<int>(modulus->size()) != k + 1)
            throw precondition_error("modulus degree must equal extension degree");
        std::vector<std::int64_t> m(k + 1);
        for (int i = 0; i <= k; ++i) m[i] = (((*modulus)[i] % p) + p) % p;
        if (m[k] != 1) throw precondition_error("modulus must be monic");
        if (!gfdetail::zp_irreducible(m, p))
            throw precondition_error("modulus is reducible over F_p");
        f->modulus_ = std::move(m);
        return f;
    }

    // deterministic search: first irreducible in odometer order of the
    // lower coefficients
    std::int64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
        std::vector<std::int64_t> m(k + 1, 0);
        std::int64_t v = idx;
        for (int i = 0; i < k; ++i) {
            m[i] = v % p;
            v /= p;
        }
        m[k] = 1;
        if (gfdetail::zp_irreducible(m, p)) {
            f->modulus_ = std::move(m);
            return f;
        }
    }
    throw error("no irreducible modulus found");  // unreachable for k >= 1
}

inline FieldPtr Field::extension(const FieldPtr& base, int m) {
    if (!base) throw precondition_error("null base field");
    if (m < 1) throw precondition_error("extension degree must be >= 1");
    if (m == 1) return base;
    FieldPtr created = create(base->p(), base->k() * m);
    auto f = std::const_pointer_cast<Field>(created);
    f->base_ = base;
    if (base->k() == 1) {
        f->base_gen_image_.clear();  // prime subfield: canonical embedding
        return created;
    }
    // find a root of the base modulus inside the new field (first in
    // enumeration order, hence deterministic)
    const auto& bm = base->modulus();
    for (std::int64_t idx = 0; idx < created->q(); ++idx) {
        FieldElement x = created->element_at(idx);
        FieldElement acc = created->zero();
        for (int i = static_cast<int>(bm.size()) - 1; i >= 0; --i)
            acc = acc * x + created->from_int(bm[i]);
        if (acc.is_zero()) {
            f->base_gen_image_ = x.coeffs();
            return created;
        }
    }
    throw error("no embedding root found");  // unreachable: k | k*m
}

inline FieldElement Field::embed(const FieldElement& a) const {
    if (!a.valid()) throw precondition_error("embedding of invalid element");
    const Field& src = *a.field();
    if (compatible(src)) return make(a.coeffs());
    if (src.k() == 1 && src.p() == p_) return from_int(a.coeffs()[0]);
    if (base_ && base_->compatible(src)) {
        if (src.k() == 1) return from_int(a.coeffs()[0]);
        FieldElement img = element(std::vector<std::int64_t>(base_gen_image_));
        FieldElement acc = zero();
        for (int i = src.k() - 1; i >= 0; --i)
            acc = acc * img + from_int(a.coeffs()[i]);
        return acc;
    }
    // chase one more level (tower built over an extension)
    if (base_ && base_->base_) {
        return embed(base_->embed(a));
    }
    throw precondition_error("incompatible fields: no embedding data");
}

inline std::string Field::to_string(const FieldElement& a) const {
    if (k_ == 1) return std::to_string(a.coeffs()[0]);
    std::string s;
    bool first = true;
    for (int i = 0; i < k_; ++i) {
        auto c = a.coeffs()[i];
        if (c == 0) continue;
        if (!first) s += "+";
        if (i == 0)
            s += std::to_string(c);
        else {
            if (c != 1) s += std::to_string(c) + "*";
            s += "w";
            if (i > 1) s += "^" + std::to_string(i);
        }
        first = false;
    }
    return first ? "0" : s;
}

// Total order used for deterministic tie-breaking: odometer index.
inline bool element_less(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    return a.field()->index_of(a) < b.field()->index_of(b);
}

}  // namespace svcurve
