#pragma once

// Sparse bivariate polynomials and homogeneous ternary forms over a Field.
//
// BivarPoly stores a map (i, j) -> coefficient for sum c_ij U^i V^j, where
// (U, V) name whichever affine chart is in play ((X,Y), (X,Z) or (Y,Z)).
// The monomial order is pure lex with the first variable dominant; this is
// the order used by `divides`, whose single-divisor division is canonical
// because leading coefficients over a field are units.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "univar.hpp"

namespace svcurve {

struct Mono {
    std::uint32_t i = 0, j = 0;
    friend bool operator<(const Mono& a, const Mono& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    }
    friend bool operator==(const Mono& a, const Mono& b) {
        return a.i == b.i && a.j == b.j;
    }
};

enum class Chart { affine_z, affine_y, affine_x };

inline const char* chart_name(Chart c) {
    switch (c) {
        case Chart::affine_z: return "Z=1";
        case Chart::affine_y: return "Y=1";
        default: return "X=1";
    }
}

class BivarPoly {
public:
    BivarPoly() = default;
    explicit BivarPoly(FieldPtr f) : field_(std::move(f)) {}

    static BivarPoly constant(const FieldPtr& f, const FieldElement& c) {
        BivarPoly r(f);
        r.add_term(0, 0, c);
        return r;
    }
    static BivarPoly monomial(const FieldPtr& f, std::uint32_t i, std::uint32_t j,
                              const FieldElement& c) {
        BivarPoly r(f);
        r.add_term(i, j, c);
        return r;
    }
    static BivarPoly var_u(const FieldPtr& f) { return monomial(f, 1, 0, f->one()); }
    static BivarPoly var_v(const FieldPtr& f) { return monomial(f, 0, 1, f->one()); }

    const FieldPtr& field() const { return field_; }
    const std::map<Mono, FieldElement>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    int degree() const {  // total degree; -1 for zero
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.i + m.j));
        return d;
    }
    int degree_u() const {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.i));
        return d;
    }
    int degree_v() const {
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.j));
        return d;
    }

    FieldElement coeff(std::uint32_t i, std::uint32_t j) const {
        auto it = t_.find(Mono{i, j});
        return it == t_.end() ? field_->zero() : it->second;
    }

    void add_term(std::uint32_t i, std::uint32_t j, const FieldElement& c) {
        if (c.is_zero()) return;
        Mono m{i, j};
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            FieldElement s = it->second + c;
            if (s.is_zero())
                t_.erase(it);
            else
                it->second = s;
        }
    }

    std::pair<Mono, FieldElement> leading_term() const {  // lex, first var dominant
        if (t_.empty()) throw precondition_error("leading term of zero polynomial");
        auto it = t_.rbegin();
        return {it->first, it->second};
    }

    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly r = a;
        if (!r.field_) r.field_ = b.field_;
        for (const auto& [m, c] : b.t_) r.add_term(m.i, m.j, c);
        return r;
    }
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly r = a;
        if (!r.field_) r.field_ = b.field_;
        for (const auto& [m, c] : b.t_) r.add_term(m.i, m.j, -c);
        return r;
    }
    BivarPoly negated() const {
        BivarPoly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly r(a.field_ ? a.field_ : b.field_);
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_)
                r.add_term(ma.i + mb.i, ma.j + mb.j, ca * cb);
        return r;
    }
    BivarPoly scaled(const FieldElement& s) const {
        BivarPoly r(field_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : t_) r.t_.emplace(m, c * s);
        return r;
    }
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const BivarPoly& a, const BivarPoly& b) { return !(a == b); }

    FieldElement eval(const FieldElement& x, const FieldElement& y) const {
        // Horner over v-coefficients; power table for the inner variable
        auto yc = v_coeffs();
        FieldElement acc = field_->zero();
        for (int j = static_cast<int>(yc.size()) - 1; j >= 0; --j)
            acc = acc * y + yc[j].eval(x);
        return acc;
    }

    BivarPoly partial_u() const {
        BivarPoly r(field_);
        for (const auto& [m, c] : t_) {
            if (m.i == 0) continue;
            r.add_term(m.i - 1, m.j, field_->from_int(m.i) * c);
        }
        return r;
    }
    BivarPoly partial_v() const {
        BivarPoly r(field_);
        for (const auto& [m, c] : t_) {
            if (m.j == 0) continue;
            r.add_term(m.i, m.j - 1, field_->from_int(m.j) * c);
        }
        return r;
    }

    // coefficients as polynomials in the first variable, indexed by the
    // second variable's exponent
    std::vector<UnivarPoly> v_coeffs() const {
        int dv = degree_v();
        std::vector<std::vector<FieldElement>> rows(dv + 1);
        int du = degree_u();
        for (auto& row : rows) row.assign(du + 1, field_->zero());
        for (const auto& [m, c] : t_) rows[m.j][m.i] = c;
        std::vector<UnivarPoly> out;
        out.reserve(rows.size());
        for (auto& row : rows) out.emplace_back(field_, std::move(row));
        return out;
    }

    static BivarPoly from_v_coeffs(const FieldPtr& f, const std::vector<UnivarPoly>& rows) {
        BivarPoly r(f);
        for (std::size_t j = 0; j < rows.size(); ++j)
            for (int i = 0; i <= rows[j].degree(); ++i)
                r.add_term(i, static_cast<std::uint32_t>(j), rows[j].coeff(i));
        return r;
    }

    // f(U + a, V + b)
    BivarPoly translated(const FieldElement& a, const FieldElement& b) const {
        auto rows = v_coeffs();
        for (auto& row : rows) row = row.shift(a);
        // Horner in V: acc = acc*(V+b) + row[j]
        std::vector<UnivarPoly> acc;
        for (int j = static_cast<int>(rows.size()) - 1; j >= 0; --j) {
            // multiply acc by (V + b)
            std::vector<UnivarPoly> next(acc.size() + 1, UnivarPoly(field_));
            for (std::size_t t = 0; t < acc.size(); ++t) {
                next[t + 1] = next[t + 1] + acc[t];
                next[t] = next[t] + acc[t].scaled(b);
            }
            acc = std::move(next);
            if (acc.empty()) acc.emplace_back(field_);
            acc[0] = acc[0] + rows[j];
        }
        return from_v_coeffs(field_, acc);
    }

    BivarPoly swapped_vars() const {
        BivarPoly r(field_);
        for (const auto& [m, c] : t_) r.add_term(m.j, m.i, c);
        return r;
    }

    // homogeneous part of lowest total degree; degree() of it is the
    // multiplicity at the origin
    BivarPoly lowest_form() const {
        int low = -1;
        for (const auto& [m, c] : t_) {
            int d = static_cast<int>(m.i + m.j);
            if (low < 0 || d < low) low = d;
        }
        BivarPoly r(field_);
        for (const auto& [m, c] : t_)
            if (static_cast<int>(m.i + m.j) == low) r.t_.emplace(m, c);
        return r;
    }

    // substitute V -> U * (s + W); result lives in variables (U, W)
    BivarPoly substitute_v_slope(const FieldElement& s) const {
        BivarPoly r(field_);
        BivarPoly lin(field_);  // s + W
        lin.add_term(0, 0, s);
        lin.add_term(0, 1, field_->one());
        std::vector<BivarPoly> pw{constant(field_, field_->one())};
        int dv = degree_v();
        for (int j = 1; j <= dv; ++j) pw.push_back(pw.back() * lin);
        for (const auto& [m, c] : t_) {
            for (const auto& [mm, cc] : pw[m.j].terms())
                r.add_term(m.i + m.j, mm.j, c * cc);
        }
        return r;
    }

    // substitute U -> V * W; result lives in variables (V, W)
    BivarPoly substitute_u_axis() const {
        BivarPoly r(field_);
        for (const auto& [m, c] : t_) r.add_term(m.i + m.j, m.i, c);
        return r;
    }

    // exact division by U^r (every monomial must have U-exponent >= r)
    BivarPoly divided_by_u_power(std::uint32_t r) const {
        BivarPoly out(field_);
        for (const auto& [m, c] : t_) {
            if (m.i < r) throw precondition_error("division by U^r is not exact");
            out.t_.emplace(Mono{m.i - r, m.j}, c);
        }
        return out;
    }

    BivarPoly mapped(const FieldPtr& target) const {
        BivarPoly r(target);
        for (const auto& [m, c] : t_) r.t_.emplace(m, target->embed(c));
        return r;
    }

    // gcd of the univariate V-coefficient polynomials (content w.r.t. U)
    UnivarPoly content_u() const {
        UnivarPoly g(field_);
        for (const auto& row : v_coeffs()) {
            if (row.is_zero()) continue;
            g = g.is_zero() ? row.monic() : gcd(g, row);
            if (g.is_constant()) break;
        }
        return g;
    }

    std::string to_text(const char* u = "X", const char* v = "Y") const;

private:
    FieldPtr field_;
    std::map<Mono, FieldElement> t_;
};

// Remainder of g under lex division by the single divisor f; divides(f, g)
// is true iff that remainder vanishes. Early exit on the first remainder
// term keeps the divisibility test cheap.
inline bool divides(const BivarPoly& f, const BivarPoly& g) {
    if (f.is_zero()) throw precondition_error("division by zero polynomial");
    if (g.is_zero()) return true;
    auto [lm, lc] = f.leading_term();
    FieldElement lcinv = inverse(lc);
    BivarPoly r = g;
    while (!r.is_zero()) {
        auto [m, c] = r.leading_term();
        if (m.i < lm.i || m.j < lm.j) return false;  // leading term survives
        BivarPoly q = BivarPoly::monomial(f.field(), m.i - lm.i, m.j - lm.j, c * lcinv);
        r = r - q * f;
    }
    return true;
}

struct Mono3 {
    std::uint32_t i = 0, j = 0, l = 0;  // X^i Y^j Z^l
    friend bool operator<(const Mono3& a, const Mono3& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.j != b.j) return a.j < b.j;
        return a.l < b.l;
    }
    friend bool operator==(const Mono3& a, const Mono3& b) {
        return a.i == b.i && a.j == b.j && a.l == b.l;
    }
};

class HomogPoly {
public:
    HomogPoly() = default;
    HomogPoly(FieldPtr f, int degree) : field_(std::move(f)), d_(degree) {}

    const FieldPtr& field() const { return field_; }
    int degree() const { return d_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Mono3, FieldElement>& terms() const { return t_; }

    void add_term(std::uint32_t i, std::uint32_t j, std::uint32_t l, const FieldElement& c) {
        if (c.is_zero()) return;
        if (static_cast<int>(i + j + l) != d_)
            throw precondition_error("monomial degree mismatch in homogeneous form");
        Mono3 m{i, j, l};
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            FieldElement s = it->second + c;
            if (s.is_zero())
                t_.erase(it);
            else
                it->second = s;
        }
    }

    FieldElement eval(const FieldElement& x, const FieldElement& y,
                      const FieldElement& z) const {
        // power tables keep the scan loops cheap
        const FieldPtr& F = field_;
        std::vector<FieldElement> px{F->one()}, py{F->one()}, pz{F->one()};
        auto need = [](std::vector<FieldElement>& t, const FieldElement& b, std::uint32_t e) {
            while (t.size() <= e) t.push_back(t.back() * b);
        };
        FieldElement acc = F->zero();
        for (const auto& [m, c] : t_) {
            need(px, x, m.i);
            need(py, y, m.j);
            need(pz, z, m.l);
            acc = acc + c * px[m.i] * py[m.j] * pz[m.l];
        }
        return acc;
    }

    BivarPoly dehomogenize(Chart chart) const {
        BivarPoly r(field_);
        for (const auto& [m, c] : t_) {
            switch (chart) {
                case Chart::affine_z: r.add_term(m.i, m.j, c); break;
                case Chart::affine_y: r.add_term(m.i, m.l, c); break;
                case Chart::affine_x: r.add_term(m.j, m.l, c); break;
            }
        }
        return r;
    }

    HomogPoly mapped(const FieldPtr& target) const {
        HomogPoly r(target, d_);
        for (const auto& [m, c] : t_) {
            FieldElement e = target->embed(c);
            if (!e.is_zero()) r.t_.emplace(m, e);
        }
        return r;
    }

    friend bool operator==(const HomogPoly& a, const HomogPoly& b) {
        return a.d_ == b.d_ && a.t_ == b.t_;
    }

    std::string to_text() const;

private:
    friend HomogPoly homogenize(const BivarPoly&);
    FieldPtr field_;
    int d_ = 0;
    std::map<Mono3, FieldElement> t_;
};

inline HomogPoly homogenize(const BivarPoly& f) {
    if (f.is_zero()) throw precondition_error("homogenization of the zero polynomial");
    int d = f.degree();
    HomogPoly F(f.field(), d);
    for (const auto& [m, c] : f.terms())
        F.add_term(m.i, m.j, static_cast<std::uint32_t>(d) - m.i - m.j, c);
    return F;
}

inline std::string format_coeff(const FieldElement& c) {
    const Field& F = *c.field();
    if (F.k() == 1) return std::to_string(c.coeffs()[0]);
    bool integral = true;
    for (std::size_t i = 1; i < c.coeffs().size(); ++i)
        if (c.coeffs()[i] != 0) integral = false;
    if (integral) return std::to_string(c.coeffs()[0]);
    return "(" + F.to_string(c) + ")";  // display only; not re-parseable
}

inline std::string BivarPoly::to_text(const char* u, const char* v) const {
    if (t_.empty()) return "0";
    std::string s;
    // lex descending so the leading term prints first
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!s.empty()) s += " + ";
        std::string part;
        std::string cs = format_coeff(c);
        if (cs != "1" || (m.i == 0 && m.j == 0)) part = cs;
        auto append_var = [&part](const char* name, std::uint32_t e) {
            if (e == 0) return;
            if (!part.empty()) part += "*";
            part += name;
            if (e > 1) part += "^" + std::to_string(e);
        };
        append_var(u, m.i);
        append_var(v, m.j);
        s += part;
    }
    return s;
}

inline std::string HomogPoly::to_text() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (!s.empty()) s += " + ";
        std::string part;
        std::string cs = format_coeff(c);
        if (cs != "1" || (m.i == 0 && m.j == 0 && m.l == 0)) part = cs;
        auto append_var = [&part](const char* name, std::uint32_t e) {
            if (e == 0) return;
            if (!part.empty()) part += "*";
            part += name;
            if (e > 1) part += "^" + std::to_string(e);
        };
        append_var("X", m.i);
        append_var("Y", m.j);
        append_var("Z", m.l);
        s += part;
    }
    return s;
}

}  // namespace svcurve
