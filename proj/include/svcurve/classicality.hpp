#pragma once

// Arithmetic in the function field F_q(x)[y]/(f), Hasse derivatives with
// respect to the separating variable x, and the two Frobenius order
// sequence tests: the single-Frobenius-row Wronskian determinant deciding
// the nu sequence and the two-row variant deciding kappa.
//
// Elements are kept as (numerator in y of degree < deg_Y f with F_q[x]
// coefficients) / (univariate denominator in x). Reduction modulo f is a
// pseudo-division that pushes powers of the leading Y-coefficient into the
// denominator; zero-testing is exact.
//
// Hasse derivative support is restricted to orders k < p, where
// D^(k) = (d/dx)^k / k!; larger orders would need divided-power machinery
// and are refused.
//
// A DerivationContext caches D^(k) y and is meant for single-threaded use.

#include <map>
#include <numeric>

#include "branch.hpp"

namespace svcurve {

// univariate rational function, normalized: monic denominator, coprime
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(UnivarPoly n) : num_(std::move(n)) {
        den_ = UnivarPoly::one(num_.field());
    }
    RatFunc(UnivarPoly n, UnivarPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw precondition_error("zero denominator");
        normalize();
    }

    const UnivarPoly& num() const { return num_; }
    const UnivarPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw precondition_error("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc negated() const {
        RatFunc r = *this;
        r.num_ = r.num_.negated();
        return r;
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = UnivarPoly::one(den_.field());
            return;
        }
        UnivarPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divrem(g).first;
            den_ = den_.divrem(g).first;
        }
        FieldElement lc = den_.leading();
        if (!lc.is_one()) {
            FieldElement inv = inverse(lc);
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    UnivarPoly num_, den_;
};

struct FFContext {
    Curve curve;
    std::vector<UnivarPoly> f_rows;  // Y-coefficients of f, as polys in X
    int deg_y = 0;
    UnivarPoly lead;  // leading Y-coefficient

    explicit FFContext(Curve c) : curve(std::move(c)) {
        f_rows = curve.f().v_coeffs();
        deg_y = static_cast<int>(f_rows.size()) - 1;
        lead = f_rows.back();
        if (deg_y < 1)
            throw precondition_error("curve equation must involve Y for function-field work");
    }

    const FieldPtr& field() const { return curve.base_field(); }
};

using FFContextPtr = std::shared_ptr<const FFContext>;

class FFElement {
public:
    FFElement() = default;
    FFElement(FFContextPtr ctx, std::vector<UnivarPoly> num, UnivarPoly den)
        : ctx_(std::move(ctx)), num_(std::move(num)), den_(std::move(den)) {
        reduce();
        normalize();
    }

    static FFElement from_poly(const FFContextPtr& ctx, const BivarPoly& p) {
        return FFElement(ctx, p.v_coeffs(), UnivarPoly::one(ctx->field()));
    }
    static FFElement zero(const FFContextPtr& ctx) {
        return from_poly(ctx, BivarPoly(ctx->field()));
    }
    static FFElement one(const FFContextPtr& ctx) {
        return from_poly(ctx, BivarPoly::constant(ctx->field(), ctx->field()->one()));
    }
    static FFElement x(const FFContextPtr& ctx) {
        return from_poly(ctx, BivarPoly::var_u(ctx->field()));
    }
    static FFElement y(const FFContextPtr& ctx) {
        return from_poly(ctx, BivarPoly::var_v(ctx->field()));
    }

    const FFContextPtr& ctx() const { return ctx_; }
    const std::vector<UnivarPoly>& num() const { return num_; }
    const UnivarPoly& den() const { return den_; }

    bool is_zero() const {
        for (const auto& c : num_)
            if (!c.is_zero()) return false;
        return true;
    }

    BivarPoly numerator_poly() const {
        return BivarPoly::from_v_coeffs(ctx_->field(), num_);
    }

    friend FFElement operator+(const FFElement& a, const FFElement& b) {
        a.check(b);
        std::size_t n = std::max(a.num_.size(), b.num_.size());
        std::vector<UnivarPoly> num(n, UnivarPoly(a.ctx_->field()));
        for (std::size_t i = 0; i < n; ++i) {
            if (i < a.num_.size()) num[i] = num[i] + a.num_[i] * b.den_;
            if (i < b.num_.size()) num[i] = num[i] + b.num_[i] * a.den_;
        }
        return FFElement(a.ctx_, std::move(num), a.den_ * b.den_);
    }
    friend FFElement operator-(const FFElement& a, const FFElement& b) {
        return a + b.negated();
    }
    FFElement negated() const {
        FFElement r = *this;
        for (auto& c : r.num_) c = c.negated();
        return r;
    }
    friend FFElement operator*(const FFElement& a, const FFElement& b) {
        a.check(b);
        if (a.is_zero() || b.is_zero()) return zero(a.ctx_);
        std::vector<UnivarPoly> num(a.num_.size() + b.num_.size() - 1,
                                    UnivarPoly(a.ctx_->field()));
        for (std::size_t i = 0; i < a.num_.size(); ++i) {
            if (a.num_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.num_.size(); ++j)
                num[i + j] = num[i + j] + a.num_[i] * b.num_[j];
        }
        return FFElement(a.ctx_, std::move(num), a.den_ * b.den_);
    }
    FFElement scaled(const FieldElement& s) const {
        FFElement r = *this;
        for (auto& c : r.num_) c = c.scaled(s);
        if (s.is_zero()) return zero(ctx_);
        return r;
    }

    friend bool operator==(const FFElement& a, const FFElement& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const FFElement& a, const FFElement& b) { return !(a == b); }

    // extended Euclid in F_q(X)[Y] against f; fails exactly when the
    // element is zero or f is not irreducible
    FFElement inverted() const {
        if (is_zero()) throw precondition_error("inversion of zero function-field element");
        const FieldPtr& F = ctx_->field();
        using YPoly = std::vector<RatFunc>;
        auto trim = [](YPoly& v) {
            while (!v.empty() && v.back().is_zero()) v.pop_back();
        };
        YPoly r0, r1, s0, s1;
        for (const auto& c : ctx_->f_rows) r0.push_back(RatFunc(c));
        for (const auto& c : num_) r1.push_back(RatFunc(c));
        trim(r0);
        trim(r1);
        s0 = {};
        s1 = {RatFunc(UnivarPoly::one(F))};
        while (r1.size() > 1) {
            // divide r0 by r1
            YPoly q;
            YPoly rem = r0;
            while (rem.size() >= r1.size()) {
                RatFunc c = rem.back() / r1.back();
                std::size_t off = rem.size() - r1.size();
                if (q.size() < off + 1) q.resize(off + 1, RatFunc(UnivarPoly(F)));
                q[off] = q[off] + c;
                for (std::size_t i = 0; i < r1.size(); ++i)
                    rem[off + i] = rem[off + i] - c * r1[i];
                rem.pop_back();
                trim(rem);
            }
            // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
            YPoly qs1(q.size() + s1.size(), RatFunc(UnivarPoly(F)));
            if (s1.empty()) qs1.clear();
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < s1.size(); ++j)
                    qs1[i + j] = qs1[i + j] + q[i] * s1[j];
            trim(qs1);
            YPoly ns1(std::max(s0.size(), qs1.size()), RatFunc(UnivarPoly(F)));
            for (std::size_t i = 0; i < ns1.size(); ++i) {
                if (i < s0.size()) ns1[i] = ns1[i] + s0[i];
                if (i < qs1.size()) ns1[i] = ns1[i] - qs1[i];
            }
            trim(ns1);
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(ns1);
            if (r1.empty())
                throw precondition_error(
                    "function-field inversion failed: curve equation is not irreducible");
        }
        // r1 is a nonzero constant (in Y): inverse = s1 / r1[0], then * den_
        RatFunc c0 = r1[0];
        std::vector<UnivarPoly> num(s1.size(), UnivarPoly(F));
        UnivarPoly den = UnivarPoly::one(F);
        // common denominator of s1 / c0
        RatFunc scale = RatFunc(UnivarPoly::one(F)) / c0;
        std::vector<RatFunc> parts;
        for (const auto& s : s1) parts.push_back(s * scale);
        for (const auto& part : parts) den = den * part.den();
        for (std::size_t i = 0; i < parts.size(); ++i) {
            UnivarPoly t = parts[i].num();
            for (std::size_t j = 0; j < parts.size(); ++j)
                if (j != i) t = t * parts[j].den();
            num[i] = t;
        }
        return FFElement(ctx_, std::move(num), std::move(den)) *
               FFElement(ctx_, {den_}, UnivarPoly::one(F));
    }

    friend FFElement operator/(const FFElement& a, const FFElement& b) {
        return a * b.inverted();
    }

    FFElement powed(std::uint64_t e) const {
        FFElement acc = one(ctx_);
        FFElement base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

private:
    void check(const FFElement& o) const {
        if (ctx_.get() != o.ctx_.get())
            throw precondition_error("function-field elements from different curves");
    }

    // pseudo-reduction mod f: cancel Y-degrees >= deg_y, pushing powers of
    // the leading Y-coefficient into the denominator
    void reduce() {
        int dy = ctx_->deg_y;
        while (static_cast<int>(num_.size()) > dy) {
            UnivarPoly top = num_.back();
            num_.pop_back();
            if (top.is_zero()) continue;
            std::size_t off = num_.size() - dy;
            for (auto& c : num_) c = c * ctx_->lead;
            den_ = den_ * ctx_->lead;
            for (int i = 0; i < dy; ++i)
                num_[off + i] = num_[off + i] - top * ctx_->f_rows[i];
        }
        while (!num_.empty() && num_.back().is_zero()) num_.pop_back();
    }

    void normalize() {
        if (is_zero()) {
            num_.clear();
            den_ = UnivarPoly::one(ctx_->field());
            return;
        }
        UnivarPoly g = den_;
        for (const auto& c : num_) {
            if (c.is_zero()) continue;
            g = gcd(g, c);
            if (g.is_constant()) break;
        }
        if (!g.is_constant()) {
            den_ = den_.divrem(g).first;
            for (auto& c : num_) c = c.divrem(g).first;
        }
        FieldElement lc = den_.leading();
        if (!lc.is_one()) {
            FieldElement inv = inverse(lc);
            den_ = den_.scaled(inv);
            for (auto& c : num_) c = c.scaled(inv);
        }
    }

    FFContextPtr ctx_;
    std::vector<UnivarPoly> num_;  // Y-coefficients, size <= deg_y
    UnivarPoly den_;
};

// canonical reduced representative of a raw rational expression in (x, y)
inline FFElement ff_reduce(const FFContextPtr& ctx, const BivarPoly& num,
                           const BivarPoly& den) {
    FFElement d = FFElement::from_poly(ctx, den);
    if (d.is_zero())
        throw precondition_error("denominator vanishes modulo the curve equation");
    return FFElement::from_poly(ctx, num) * d.inverted();
}

inline FFElement ff_reduce(const FFContextPtr& ctx, const BivarPoly& num) {
    return FFElement::from_poly(ctx, num);
}

// Derivation d/dx on the function field, extended by dy/dx = -f_X / f_Y.
// Construction refuses curves where x fails to be a separating variable
// (f_Y = 0). Caches D^(k) y; single-threaded use.
class DerivationContext {
public:
    explicit DerivationContext(const Curve& c) : ctx_(std::make_shared<FFContext>(c)) {
        BivarPoly fy = c.f().partial_v();
        if (fy.is_zero())
            throw unsupported_error(
                "x is not a separating variable (f_Y = 0); refusing derivation");
        BivarPoly fx = c.f().partial_u();
        FFElement fy_ff = FFElement::from_poly(ctx_, fy);
        y_prime_ = FFElement::from_poly(ctx_, fx).negated() * fy_ff.inverted();
        cache_[1] = y_prime_;
    }

    const FFContextPtr& ctx() const { return ctx_; }
    const Curve& curve() const { return ctx_->curve; }
    std::int64_t p() const { return ctx_->field()->p(); }

    FFElement x() const { return FFElement::x(ctx_); }
    FFElement y() const { return FFElement::y(ctx_); }
    FFElement one() const { return FFElement::one(ctx_); }
    const FFElement& d1y() const { return y_prime_; }

    // plain derivative d/dx
    FFElement derivative(const FFElement& e) const {
        const FieldPtr& F = ctx_->field();
        std::vector<UnivarPoly> dnum(e.num().size(), UnivarPoly(F));
        std::vector<UnivarPoly> ynum(e.num().size(), UnivarPoly(F));
        for (std::size_t j = 0; j < e.num().size(); ++j) {
            dnum[j] = e.num()[j].derivative();
            if (j + 1 < e.num().size())
                ynum[j] = e.num()[j + 1].scaled(F->from_int(static_cast<std::int64_t>(j + 1)));
        }
        if (!ynum.empty()) ynum.pop_back();
        UnivarPoly dden = e.den().derivative();
        // (N' D - N D') / D^2 + (dN/dy / D) * y'
        std::vector<UnivarPoly> part1(e.num().size(), UnivarPoly(F));
        for (std::size_t j = 0; j < e.num().size(); ++j)
            part1[j] = dnum[j] * e.den() - e.num()[j] * dden;
        FFElement t1(ctx_, std::move(part1), e.den() * e.den());
        FFElement t2(ctx_, std::move(ynum), e.den());
        return t1 + t2 * y_prime_;
    }

    // Hasse derivative D^(k) = (d/dx)^k / k!, valid for k < p
    FFElement hasse(const FFElement& e, int k) const {
        if (k == 0) return e;
        if (k < 0 || k >= p())
            throw unsupported_error("unsupported Hasse order in characteristic p");
        FFElement d = e;
        std::int64_t fact = 1;
        for (int i = 1; i <= k; ++i) {
            d = derivative(d);
            fact = fact * i % p();
        }
        return d.scaled(inverse(ctx_->field()->from_int(fact)));
    }

    // cached D^(k) y
    const FFElement& hasse_y(int k) {
        auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
        FFElement v = hasse(y(), k);
        return cache_.emplace(k, std::move(v)).first->second;
    }

private:
    FFContextPtr ctx_;
    FFElement y_prime_;
    std::map<int, FFElement> cache_;
};

inline FFElement hasse_derivative(const DerivationContext& ctx, const FFElement& e, int k) {
    return ctx.hasse(e, k);
}

namespace classdetail {

// recursive Laplace expansion along the first column, skipping structural
// zeros (the constant-1 basis member produces plenty)
inline FFElement determinant(std::vector<std::vector<FFElement>> M) {
    std::size_t n = M.size();
    if (n == 1) return M[0][0];
    FFElement acc = FFElement::zero(M[0][0].ctx());
    for (std::size_t i = 0; i < n; ++i) {
        if (M[i][0].is_zero()) continue;
        std::vector<std::vector<FFElement>> minor;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.emplace_back(M[r].begin() + 1, M[r].end());
        }
        FFElement term = M[i][0] * determinant(std::move(minor));
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// exact linear independence over the constants F_q: coefficient matrix of
// the cleared numerators, Gaussian rank
inline bool independent_over_constants(const std::vector<FFElement>& basis) {
    if (basis.empty()) return false;
    const FieldPtr& F = basis.front().ctx()->field();
    UnivarPoly common = UnivarPoly::one(F);
    for (const auto& e : basis) common = common * e.den();
    std::vector<BivarPoly> cleared;
    for (const auto& e : basis) {
        UnivarPoly scale = common.divrem(e.den()).first;
        BivarPoly p(F);
        for (std::size_t j = 0; j < e.num().size(); ++j) {
            UnivarPoly row = e.num()[j] * scale;
            for (int i = 0; i <= row.degree(); ++i)
                p.add_term(i, static_cast<std::uint32_t>(j), row.coeff(i));
        }
        cleared.push_back(std::move(p));
    }
    std::map<Mono, std::size_t> cols;
    for (const auto& p : cleared)
        for (const auto& [m, c] : p.terms())
            cols.emplace(m, cols.size());
    std::vector<std::vector<FieldElement>> rows(basis.size(),
                                                std::vector<FieldElement>(cols.size(), F->zero()));
    for (std::size_t i = 0; i < cleared.size(); ++i)
        for (const auto& [m, c] : cleared[i].terms()) rows[i][cols[m]] = c;
    // Gaussian rank
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols.size() && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        FieldElement inv = inverse(rows[rank][col]);
        for (std::size_t j = col; j < cols.size(); ++j) rows[rank][j] = rows[rank][j] * inv;
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][col].is_zero()) continue;
            FieldElement c = rows[i][col];
            for (std::size_t j = col; j < cols.size(); ++j)
                rows[i][j] = rows[i][j] - c * rows[rank][j];
        }
        ++rank;
    }
    return rank == rows.size();
}

// strictly increasing sequences of the given length with entries <= cap,
// streamed in lexicographic order
inline bool next_sequence(std::vector<int>& s, int cap) {
    int L = static_cast<int>(s.size());
    for (int i = L - 1; i >= 0; --i) {
        if (s[i] < cap - (L - 1 - i)) {
            ++s[i];
            for (int j = i + 1; j < L; ++j) s[j] = s[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace classdetail

struct FrobeniusOrders {
    bool classical = false;
    std::optional<std::vector<int>> orders;  // minimal sequence, when it exists below cap
    int searched_up_to = 0;
};

// Minimal (nu_0 < ... < nu_{r-1}) making the determinant with first row
// (f_i^{q^m}) and Hasse rows D^(nu_j) nonzero. Candidate orders run below
// min(p, cap+1); when the identity candidate (0..r-1) vanishes the curve is
// certainly non-classical even if the true sequence lies beyond reach.
inline FrobeniusOrders frobenius_order_sequence(DerivationContext& ctx,
                                                const std::vector<FFElement>& basis, int m,
                                                int cap = -1) {
    if (m < 1) throw precondition_error("Frobenius power m must be >= 1");
    int r = static_cast<int>(basis.size()) - 1;
    if (r < 1) throw precondition_error("basis must have at least two elements");
    if (!classdetail::independent_over_constants(basis))
        throw precondition_error("basis is linearly dependent over the constants");
    std::int64_t p = ctx.p();
    if (cap < 0 || cap > static_cast<int>(p) - 1) cap = static_cast<int>(p) - 1;

    std::uint64_t qm = 1;
    for (int i = 0; i < m; ++i) qm *= static_cast<std::uint64_t>(ctx.curve().base_field()->q());
    std::vector<FFElement> frob_row;
    for (const auto& e : basis) frob_row.push_back(e.powed(qm));

    std::map<int, std::vector<FFElement>> hasse_rows;
    auto row_for = [&](int k) -> const std::vector<FFElement>& {
        auto it = hasse_rows.find(k);
        if (it != hasse_rows.end()) return it->second;
        std::vector<FFElement> row;
        for (const auto& e : basis) row.push_back(ctx.hasse(e, k));
        return hasse_rows.emplace(k, std::move(row)).first->second;
    };

    FrobeniusOrders out;
    out.searched_up_to = cap;
    std::vector<int> seq(r);
    for (int i = 0; i < r; ++i) seq[i] = i;
    if (seq.back() > cap) throw unsupported_error("order cap below the classical sequence");
    bool first_candidate = true;
    bool identity_vanishes = false;
    do {
        std::vector<std::vector<FFElement>> M{frob_row};
        for (int k : seq) M.push_back(row_for(k));
        if (!classdetail::determinant(M).is_zero()) {
            out.orders = seq;
            out.classical = first_candidate;
            return out;
        }
        if (first_candidate) identity_vanishes = true;
        first_candidate = false;
    } while (classdetail::next_sequence(seq, cap));

    if (!identity_vanishes) throw error("order sequence search inconsistency");
    // non-classical for sure; the minimal sequence needs orders >= p
    out.classical = false;
    out.orders = std::nullopt;
    return out;
}

// Minimal (kappa_0 < ... < kappa_{r-2}) for the determinant with the two
// Frobenius rows (f_i^{q^m}), (f_i^{q^u}).
inline FrobeniusOrders double_frobenius_order_sequence(DerivationContext& ctx,
                                                       const std::vector<FFElement>& basis,
                                                       int u, int m, int cap = -1) {
    if (u < 1 || m <= u) throw precondition_error("need 0 < u < m");
    if (std::gcd(static_cast<long long>(u), static_cast<long long>(m)) != 1)
        throw precondition_error("u and m must be coprime");
    int r = static_cast<int>(basis.size()) - 1;
    if (r < 2) throw precondition_error("basis must have at least three elements");
    if (!classdetail::independent_over_constants(basis))
        throw precondition_error("basis is linearly dependent over the constants");
    std::int64_t p = ctx.p();
    if (cap < 0 || cap > static_cast<int>(p) - 1) cap = static_cast<int>(p) - 1;

    auto frob_row = [&](int power) {
        std::uint64_t qe = 1;
        for (int i = 0; i < power; ++i)
            qe *= static_cast<std::uint64_t>(ctx.curve().base_field()->q());
        std::vector<FFElement> row;
        for (const auto& e : basis) row.push_back(e.powed(qe));
        return row;
    };
    std::vector<FFElement> row_m = frob_row(m), row_u = frob_row(u);

    std::map<int, std::vector<FFElement>> hasse_rows;
    auto row_for = [&](int k) -> const std::vector<FFElement>& {
        auto it = hasse_rows.find(k);
        if (it != hasse_rows.end()) return it->second;
        std::vector<FFElement> row;
        for (const auto& e : basis) row.push_back(ctx.hasse(e, k));
        return hasse_rows.emplace(k, std::move(row)).first->second;
    };

    FrobeniusOrders out;
    out.searched_up_to = cap;
    std::vector<int> seq(r - 1);
    for (int i = 0; i < r - 1; ++i) seq[i] = i;
    if (seq.back() > cap) throw unsupported_error("order cap below the classical sequence");
    bool first_candidate = true;
    do {
        std::vector<std::vector<FFElement>> M{row_m, row_u};
        for (int k : seq) M.push_back(row_for(k));
        if (!classdetail::determinant(M).is_zero()) {
            out.orders = seq;
            out.classical = first_candidate;
            return out;
        }
        first_candidate = false;
    } while (classdetail::next_sequence(seq, cap));

    out.classical = false;
    out.orders = std::nullopt;
    return out;
}

// Divisibility instance deciding F_{q^r}-Frobenius non-classicality of the
// curve (X^q - X)(Y^q - Y) = 1 with respect to its conic system: true iff
// the degree-2q polynomial divides the q^{r-1} analogue.
inline bool am_divisibility_criterion(const FieldPtr& base, int r,
                                      std::int64_t degree_budget = 16384) {
    if (r < 1) throw precondition_error("Frobenius power r must be >= 1");
    std::int64_t q = base->q();
    std::int64_t Q = 1;
    for (int i = 0; i + 1 < r; ++i) {
        Q *= q;
        if (Q > degree_budget)
            throw budget_error("divisibility criterion: polynomial degree exceeds budget");
    }
    auto am_poly = [&](std::int64_t e) {
        BivarPoly xq = BivarPoly::monomial(base, static_cast<std::uint32_t>(e), 0, base->one()) -
                       BivarPoly::var_u(base);
        BivarPoly yq = BivarPoly::monomial(base, 0, static_cast<std::uint32_t>(e), base->one()) -
                       BivarPoly::var_v(base);
        return xq * yq - BivarPoly::constant(base, base->one());
    };
    return divides(am_poly(q), am_poly(Q));
}

}  // namespace svcurve
