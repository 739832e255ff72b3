#pragma once

#include "gradloci/polynomial.hpp"

namespace gradloci {

// ---- multivariate gcd over Q (primitive PRS) ----------------------------

// Exact division f / g; returns nullopt when g does not divide f.
inline std::optional<PolyQ> polyq_exact_div(const PolyQ& f, const PolyQ& g) {
    if (g.is_zero()) throw DomainError("division by zero polynomial");
    PolyQ rem = f;
    PolyQ quot(f.ring);
    // structural-lex is a term order, so plain leading-term cancellation
    // terminates and is exact iff g | f
    const Mono& glt = g.terms.front().first;
    const Rational& glc = g.terms.front().second;
    while (!rem.is_zero()) {
        const Mono& rlt = rem.terms.front().first;
        if (!mono_divides(glt, rlt)) return std::nullopt;
        Mono q = mono_div(rlt, glt);
        Rational c = rem.terms.front().second / glc;
        quot.terms.emplace_back(q, c);
        rem = poly_axpy(rem, Rational(-c), q, g);
    }
    quot.normalize();
    return quot;
}

inline PolyQ polyq_monic(const PolyQ& f, const TermOrder& ord) {
    if (f.is_zero()) return f;
    const auto& lt = poly_lt(f, ord);
    if (lt.second == 1) return f;
    Rational inv = Rational(1) / lt.second;
    return poly_mul_scalar(f, inv);
}

namespace detail {

inline PolyQ gcd_rec(const PolyQ& f, const PolyQ& g);

// gcd of the v-coefficients of f.
inline PolyQ content_wrt(const PolyQ& f, int v) {
    PolyQ c(f.ring);
    for (int d = 0; d <= poly_deg_in(f, v); ++d) {
        PolyQ cd = poly_coeff_of(f, v, d);
        if (cd.is_zero()) continue;
        c = c.is_zero() ? cd : gcd_rec(c, cd);
        if (c.is_constant()) break;
    }
    return c;
}

// Pseudo-remainder of f by g with respect to the symbol v.
inline PolyQ prem(PolyQ f, const PolyQ& g, int v) {
    int dg = poly_deg_in(g, v);
    PolyQ lcg = poly_coeff_of(g, v, dg);
    while (!f.is_zero()) {
        int df = poly_deg_in(f, v);
        if (df < dg) break;
        PolyQ lcf = poly_coeff_of(f, v, df);
        Mono shift = mono_one(f.terms[0].first.size());
        shift[static_cast<size_t>(v)] = df - dg;
        // f := lcg * f - lcf * v^(df-dg) * g
        PolyQ t1 = poly_mul(lcg, f);
        PolyQ t2 = poly_mul_term(poly_mul(lcf, g), shift, Rational(1));
        f = poly_sub(t1, t2);
    }
    return f;
}

inline PolyQ gcd_rec(const PolyQ& f, const PolyQ& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.is_constant() || g.is_constant()) return polyq_const(f.ring, Rational(1));
    // main symbol: highest position occurring in either
    auto sf = poly_support(f), sg = poly_support(g);
    int v = -1;
    for (int i = static_cast<int>(sf.size()); i-- > 0;)
        if (sf[static_cast<size_t>(i)] || sg[static_cast<size_t>(i)]) {
            v = i;
            break;
        }
    if (poly_deg_in(f, v) == 0 || poly_deg_in(g, v) == 0) {
        // v occurs in only one of them: gcd divides the contents
        PolyQ cf = poly_deg_in(f, v) == 0 ? f : content_wrt(f, v);
        PolyQ cg = poly_deg_in(g, v) == 0 ? g : content_wrt(g, v);
        return gcd_rec(cf, cg);
    }
    PolyQ cf = content_wrt(f, v);
    PolyQ cg = content_wrt(g, v);
    PolyQ pf = *polyq_exact_div(f, cf);
    PolyQ pg = *polyq_exact_div(g, cg);
    PolyQ cc = gcd_rec(cf, cg);
    // primitive PRS on the primitive parts
    PolyQ a = pf, b = pg;
    if (poly_deg_in(a, v) < poly_deg_in(b, v)) std::swap(a, b);
    while (!b.is_zero()) {
        PolyQ r = prem(a, b, v);
        a = b;
        if (r.is_zero()) {
            b = std::move(r);
        } else if (poly_deg_in(r, v) == 0) {
            // nonzero v-free remainder: the primitive parts are coprime
            a = polyq_const(f.ring, Rational(1));
            b = PolyQ(f.ring);
        } else {
            b = *polyq_exact_div(r, content_wrt(r, v));
        }
    }
    PolyQ pa = (poly_deg_in(a, v) == 0) ? polyq_const(f.ring, Rational(1))
                                        : *polyq_exact_div(a, content_wrt(a, v));
    return poly_mul(cc, pa);
}

}  // namespace detail

// Monic (w.r.t. degrevlex) gcd over Q[symbols].
inline PolyQ polyq_gcd(const PolyQ& f, const PolyQ& g) {
    PolyQ d = detail::gcd_rec(f, g);
    if (d.is_zero()) return d;
    return polyq_monic(d, TermOrder::degrevlex(*d.ring));
}

// ---- the fraction field of A --------------------------------------------

// Normalized fraction num/den of polynomials in the base parameters:
// gcd-reduced, denominator monic under degrevlex.  Structural equality
// is field equality.  Detached constants (no ring yet) live over the
// shared empty ring and adopt an operand's ring on first contact.
class RatFunc {
public:
    RatFunc() : RatFunc(0L) {}
    RatFunc(long v) { init_const(Rational(v)); }
    explicit RatFunc(const Rational& v) { init_const(v); }

    RatFunc(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFunc from_poly(PolyQ p) {
        RatFunc r;
        r.den_ = polyq_const(p.ring, Rational(1));
        r.num_ = std::move(p);
        return r;
    }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    const RingPtr& ring() const { return num_.ring; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.is_constant(); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = poly_neg(r.num_);
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        auto [x, y] = aligned(a, b);
        return RatFunc(poly_add(poly_mul(x.num_, y.den_), poly_mul(y.num_, x.den_)),
                       poly_mul(x.den_, y.den_));
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        auto [x, y] = aligned(a, b);
        return RatFunc(poly_mul(x.num_, y.num_), poly_mul(x.den_, y.den_));
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DomainError("division by zero rational function");
        auto [x, y] = aligned(a, b);
        return RatFunc(poly_mul(x.num_, y.den_), poly_mul(x.den_, y.num_));
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        auto [x, y] = aligned(a, b);
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str() const {
        if (is_polynomial()) return poly_to_string(num_);
        return "(" + poly_to_string(num_) + ")/(" + poly_to_string(den_) + ")";
    }

private:
    static const RingPtr& empty_ring() {
        static RingPtr r = RingSpec::make({}, {}, {});
        return r;
    }

    void init_const(const Rational& v) {
        num_ = polyq_const(empty_ring(), v);
        den_ = polyq_const(empty_ring(), Rational(1));
    }

    bool detached() const { return num_.ring->n() == 0; }

    RatFunc lifted(const RingPtr& target) const {
        RatFunc r;
        r.num_ = poly_map_to_ring(num_, target);
        r.den_ = poly_map_to_ring(den_, target);
        return r;
    }

    static std::pair<RatFunc, RatFunc> aligned(const RatFunc& a, const RatFunc& b) {
        if (a.detached() && !b.detached()) return {a.lifted(b.ring()), b};
        if (!a.detached() && b.detached()) return {a, b.lifted(a.ring())};
        if (*a.ring() != *b.ring()) throw InputError("rational functions over different rings");
        return {a, b};
    }

    void normalize() {
        if (den_.is_zero()) throw DomainError("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = polyq_const(den_.ring, Rational(1));
            return;
        }
        if (!num_.is_constant() && !den_.is_constant()) {
            PolyQ g = polyq_gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = *polyq_exact_div(num_, g);
                den_ = *polyq_exact_div(den_, g);
            }
        }
        TermOrder ord = TermOrder::degrevlex(*den_.ring);
        Rational lc = poly_lt(den_, ord).second;
        if (lc != 1) {
            Rational inv = Rational(1) / lc;
            num_ = poly_mul_scalar(num_, inv);
            den_ = poly_mul_scalar(den_, inv);
        }
    }

    PolyQ num_, den_;
};

template <>
struct CoeffOps<RatFunc> {
    static bool is_zero(const RatFunc& a) { return a.is_zero(); }
    static bool is_one(const RatFunc& a) { return a.is_one(); }
    static RatFunc neg(const RatFunc& a) { return -a; }
    static std::string str(const RatFunc& a) { return a.str(); }
    static int cmp(const RatFunc& a, const RatFunc& b) {
        int c = poly_cmp(a.num(), b.num());
        if (c) return c;
        return poly_cmp(a.den(), b.den());
    }
};

using PolyL = Poly<RatFunc>;  // polynomials over L = Frac(A)

// View a polynomial in A[X] as an element of L[X]: group terms by fiber
// exponents, parameter parts become coefficients.
inline PolyL to_fraction_field(const PolyQ& f, const RingPtr& base, const RingPtr& fiber) {
    const RingSpec& R = *f.ring;
    if (base->m() != R.m() || fiber->k() != R.k())
        throw InputError("base/fiber rings do not match polynomial ring");
    std::map<Mono, PolyQ> groups;
    for (const auto& t : f.terms) {
        Mono xm(static_cast<size_t>(R.k()));
        Mono am(static_cast<size_t>(R.m()));
        for (int i = 0; i < R.m(); ++i) am[static_cast<size_t>(i)] = t.first[static_cast<size_t>(i)];
        for (int j = 0; j < R.k(); ++j) xm[static_cast<size_t>(j)] = t.first[static_cast<size_t>(R.m() + j)];
        auto it = groups.find(xm);
        if (it == groups.end()) it = groups.emplace(std::move(xm), PolyQ(base)).first;
        it->second.terms.emplace_back(std::move(am), t.second);
    }
    PolyL out(fiber);
    for (auto& [xm, coeff] : groups) {
        coeff.normalize();
        if (coeff.is_zero()) continue;
        out.terms.emplace_back(xm, RatFunc::from_poly(std::move(coeff)));
    }
    out.normalize();
    return out;
}

}  // namespace gradloci
