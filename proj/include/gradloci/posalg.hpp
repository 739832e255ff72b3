#pragma once

#include "gradloci/matrix.hpp"

namespace gradloci {

// Validation failure for the positive A-algebra conditions, carrying a
// witness of the broken condition.
struct ValidationError : InputError {
    ValidationError(const std::string& what, std::string witness_)
        : InputError(what), witness(std::move(witness_)) {}
    std::string witness;
};

// R = P/I where P = A[x_1..x_k] is positively graded, I is W-homogeneous
// and I cap A = {0}.  Generators are kept sorted ascending by W-degree
// (stably), which makes the A-linear coefficient matrix block diagonal
// per degree stratum.
class PositiveAlgebra {
public:
    PositiveAlgebra(RingPtr ring, std::vector<PolyQ> sorted_gens, Ideal ideal)
        : ring_(std::move(ring)), gens_(std::move(sorted_gens)), ideal_(std::move(ideal)) {}

    const RingPtr& ring() const { return ring_; }
    const std::vector<PolyQ>& gens() const { return gens_; }
    const Ideal& ideal() const { return ideal_; }
    int m() const { return ring_->m(); }
    int k() const { return ring_->k(); }
    int n() const { return ring_->n(); }

private:
    RingPtr ring_;
    std::vector<PolyQ> gens_;
    Ideal ideal_;
};

// Checks the three positivity conditions and reports the first broken one
// with a witness:
//   (1) every fiber weight is positive (and k >= 1),
//   (2) every generator is W-homogeneous,
//   (3) I cap A = {0}.
// For W-homogeneous generators with positive fiber weights, a nonzero
// element of I cap A exists iff some generator has W-degree zero, i.e.
// lies in A; so (3) reduces to a degree check once (1) and (2) hold.
// `deep` additionally runs the elimination-based check.
inline PositiveAlgebra validate_positive_algebra(const RingPtr& ring, std::vector<PolyQ> gens,
                                                 bool deep = false,
                                                 const Budget& budget = Budget()) {
    if (ring->k() < 1) throw ValidationError("positive algebra needs at least one fiber variable", "");
    for (int j = 0; j < ring->k(); ++j)
        if (ring->var_weights()[static_cast<size_t>(j)] <= 0)
            throw ValidationError("fiber weight not positive",
                                  ring->vars()[static_cast<size_t>(j)]);
    std::vector<PolyQ> nonzero;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        if (!poly_is_homogeneous(g))
            throw ValidationError("generator is not W-homogeneous", poly_to_string(g));
        if (poly_w_degree(g) == 0)
            throw ValidationError("nonzero element of I cap A", poly_to_string(g));
        nonzero.push_back(std::move(g));
    }
    Ideal I(ring, nonzero);
    if (deep) {
        Ideal E = I.eliminate(ring->vars(), budget);
        if (!E.is_zero_ideal())
            throw ValidationError("nonzero element of I cap A",
                                  poly_to_string(E.gens().front()));
    }
    std::vector<PolyQ> sorted = nonzero;
    std::stable_sort(sorted.begin(), sorted.end(), [](const PolyQ& a, const PolyQ& b) {
        return poly_w_degree(a) < poly_w_degree(b);
    });
    return PositiveAlgebra(ring, std::move(sorted), std::move(I));
}

inline PositiveAlgebra validate_positive_algebra(const RingPtr& ring,
                                                 const std::vector<std::string>& gens,
                                                 bool deep = false) {
    return validate_positive_algebra(ring, parse_polys(gens, ring), deep);
}

// The A-linear part of f: writing f = f_0 + f_1 x_1 + ... + f_k x_k + g
// with f_i in A and g in <X>^2, returns f_1 x_1 + ... + f_k x_k.
inline PolyQ lin_A(const PolyQ& f) {
    const RingSpec& R = *f.ring;
    PolyQ out(f.ring);
    for (const auto& t : f.terms) {
        long xdeg = 0;
        for (int j = 0; j < R.k(); ++j) xdeg += t.first[static_cast<size_t>(R.m() + j)];
        if (xdeg == 1) out.terms.push_back(t);
    }
    out.normalize();
    return out;
}

// Coefficient of x_j in lin_A(f), an element of A.
inline PolyQ lin_A_coeff(const PolyQ& f, int j, const RingPtr& base) {
    const RingSpec& R = *f.ring;
    PolyQ out(base);
    for (const auto& t : f.terms) {
        long xdeg = 0;
        for (int jj = 0; jj < R.k(); ++jj) xdeg += t.first[static_cast<size_t>(R.m() + jj)];
        if (xdeg != 1 || t.first[static_cast<size_t>(R.m() + j)] != 1) continue;
        Mono m(static_cast<size_t>(R.m()));
        for (int i = 0; i < R.m(); ++i) m[static_cast<size_t>(i)] = t.first[static_cast<size_t>(i)];
        out.terms.emplace_back(std::move(m), t.second);
    }
    out.normalize();
    return out;
}

// L_A(G): row i holds the coefficients of lin_A(g_i) in x_1..x_k.
// Rows follow the degree-sorted generator order.
inline PolyMatrix lin_coeff_matrix(const PositiveAlgebra& PA) {
    RingPtr base = base_ring(*PA.ring());
    PolyMatrix M(base, PA.gens().size(), static_cast<size_t>(PA.k()));
    for (size_t i = 0; i < PA.gens().size(); ++i)
        for (int j = 0; j < PA.k(); ++j)
            M.at(i, static_cast<size_t>(j)) = lin_A_coeff(PA.gens()[i], j, base);
    return M;
}

// Generators of Lin_A(I) as an A-module: the A-linear parts of the
// generators (independent of the generating set by the module law).
inline std::vector<PolyQ> lin_A_module(const PositiveAlgebra& PA) {
    std::vector<PolyQ> out;
    for (const auto& g : PA.gens()) out.push_back(lin_A(g));
    return out;
}

// Degree strata of the coefficient matrix: rows grouped by generator
// degree, columns by matching variable weight.  For degree-sorted
// homogeneous generators this is the block-diagonal shape of L_A(G).
struct MatrixBlock {
    long degree;
    std::vector<size_t> row_idx;
    std::vector<size_t> col_idx;
    PolyMatrix block;
};

inline std::vector<MatrixBlock> lin_matrix_blocks(const PositiveAlgebra& PA) {
    PolyMatrix M = lin_coeff_matrix(PA);
    std::map<long, MatrixBlock> by_deg;
    for (size_t i = 0; i < PA.gens().size(); ++i) {
        long d = poly_w_degree(PA.gens()[i]);
        by_deg.try_emplace(d, MatrixBlock{d, {}, {}, PolyMatrix()});
        by_deg[d].row_idx.push_back(i);
    }
    for (int j = 0; j < PA.k(); ++j) {
        long w = PA.ring()->var_weights()[static_cast<size_t>(j)];
        auto it = by_deg.find(w);
        if (it != by_deg.end()) it->second.col_idx.push_back(static_cast<size_t>(j));
    }
    std::vector<MatrixBlock> out;
    for (auto& [d, b] : by_deg) {
        b.block = PolyMatrix(M.ring, b.row_idx.size(), b.col_idx.size());
        for (size_t i = 0; i < b.row_idx.size(); ++i)
            for (size_t j = 0; j < b.col_idx.size(); ++j)
                b.block.at(i, j) = M.at(b.row_idx[i], b.col_idx[j]);
        out.push_back(std::move(b));
    }
    return out;
}

// The fiber ideal I_Gamma in K[X].
inline Ideal fiber_ideal(const PositiveAlgebra& PA, const std::vector<Rational>& gamma) {
    RingPtr fib = fiber_ring(*PA.ring());
    std::vector<PolyQ> gens;
    for (const auto& g : PA.gens()) gens.push_back(specialize(g, gamma, fib));
    return Ideal(fib, std::move(gens));
}

// Krull dimension of L[X] / I L[X], L = Frac(A), computed by a Groebner
// basis over rational-function coefficients.
inline long generic_fiber_dimension(const PositiveAlgebra& PA, const Budget& budget = Budget()) {
    RingPtr base = base_ring(*PA.ring());
    RingPtr fib = fiber_ring(*PA.ring());
    std::vector<PolyL> gens;
    for (const auto& g : PA.gens()) gens.push_back(to_fraction_field(g, base, fib));
    TermOrder ord = TermOrder::wdegrevlex(*fib);
    auto gb = buchberger_reduced<RatFunc>(fib, gens, ord, budget);
    if (gb.empty()) return PA.k();
    if (gb.size() == 1 && gb[0].is_constant())
        throw DomainError("generic fiber ideal is the unit ideal (not a positive algebra?)");
    std::vector<uint64_t> supports;
    for (const auto& g : gb) {
        const Mono& lt = poly_lt(g, ord).first;
        uint64_t s = 0;
        for (size_t i = 0; i < lt.size(); ++i)
            if (lt[i] > 0) s |= 1ull << i;
        supports.push_back(s);
    }
    return dimension_of_monomial_supports(std::move(supports), PA.k());
}

// ---- connecting curves (weighted projective lines) -----------------------

// One parametrized segment: every ring symbol as a polynomial in t,
// with rational endpoints at t = 0 and t = 1.
struct CurveSegment {
    RingPtr tring;                 // Q[t]
    std::vector<PolyQ> coord;      // length n, symbol -> polynomial in t
    std::vector<Rational> at0, at1;

    std::vector<Rational> eval(const Rational& t) const {
        std::vector<Rational> p;
        p.reserve(coord.size());
        for (const auto& c : coord) p.push_back(polyq_eval(c, {t}));
        return p;
    }
};

struct ConnectingPath {
    std::vector<CurveSegment> segments;
};

struct PointNotOnVariety : DomainError {
    PointNotOnVariety(const std::string& what, std::string gen)
        : DomainError(what), failing_generator(std::move(gen)) {}
    std::string failing_generator;
};

inline void require_on_variety(const PositiveAlgebra& PA, const std::vector<Rational>& point) {
    for (const auto& g : PA.gens())
        if (!rat_is_zero(polyq_eval(g, point)))
            throw PointNotOnVariety("point does not satisfy the ideal", poly_to_string(g));
}

// The curve x_i -> pi_i t^{w_i} inside the fiber through Pi = (Gamma, pi),
// running from the zero point (t=0) to Pi (t=1).  Verifies that every
// generator vanishes identically in t under the substitution.
inline CurveSegment connecting_curve(const PositiveAlgebra& PA, const std::vector<Rational>& Pi) {
    const RingSpec& R = *PA.ring();
    if (static_cast<int>(Pi.size()) != R.n()) throw InputError("point has wrong length");
    require_on_variety(PA, Pi);
    RingPtr tring = RingSpec::make({}, {"t"}, {1});
    PolyQ t = polyq_var(tring, 0);
    CurveSegment seg;
    seg.tring = tring;
    seg.coord.reserve(static_cast<size_t>(R.n()));
    for (int i = 0; i < R.m(); ++i)
        seg.coord.push_back(polyq_const(tring, Pi[static_cast<size_t>(i)]));
    for (int j = 0; j < R.k(); ++j) {
        PolyQ tp = poly_pow(t, R.var_weights()[static_cast<size_t>(j)]);
        seg.coord.push_back(poly_mul_scalar(tp, Pi[static_cast<size_t>(R.m() + j)]));
    }
    for (const auto& g : PA.gens()) {
        PolyQ img = polyq_substitute_all(g, seg.coord, tring);
        if (!img.is_zero())
            throw PointNotOnVariety("curve substitution does not annihilate generator",
                                    poly_to_string(g));
    }
    seg.at0 = seg.eval(Rational(0));
    seg.at1 = seg.eval(Rational(1));
    return seg;
}

// Base-line segment inside the zero section from Gamma1 to Gamma2:
// t -> ((1-t) Gamma1 + t Gamma2, 0..0).  Always lies on Spec(R) since
// I is contained in <X>.
inline CurveSegment zero_section_segment(const PositiveAlgebra& PA,
                                         const std::vector<Rational>& g1,
                                         const std::vector<Rational>& g2) {
    const RingSpec& R = *PA.ring();
    if (static_cast<int>(g1.size()) != R.m() || static_cast<int>(g2.size()) != R.m())
        throw InputError("base point has wrong length");
    RingPtr tring = RingSpec::make({}, {"t"}, {1});
    PolyQ t = polyq_var(tring, 0);
    CurveSegment seg;
    seg.tring = tring;
    for (int i = 0; i < R.m(); ++i) {
        // (1-t) g1 + t g2 = g1 + (g2 - g1) t
        Rational slope = g2[static_cast<size_t>(i)] - g1[static_cast<size_t>(i)];
        PolyQ c = poly_add(polyq_const(tring, g1[static_cast<size_t>(i)]),
                           poly_mul_scalar(t, slope));
        seg.coord.push_back(std::move(c));
    }
    for (int j = 0; j < R.k(); ++j) seg.coord.push_back(PolyQ(tring));
    for (const auto& g : PA.gens()) {
        PolyQ img = polyq_substitute_all(g, seg.coord, tring);
        if (!img.is_zero())
            throw PointNotOnVariety("zero-section segment leaves the variety (I not in <X>?)",
                                    poly_to_string(g));
    }
    seg.at0 = seg.eval(Rational(0));
    seg.at1 = seg.eval(Rational(1));
    return seg;
}

inline CurveSegment reversed(CurveSegment seg) {
    // t -> 1-t
    PolyQ t = polyq_var(seg.tring, 0);
    PolyQ omt = poly_sub(polyq_const(seg.tring, Rational(1)), t);
    for (auto& c : seg.coord) c = poly_substitute(c, 0, omt);
    std::swap(seg.at0, seg.at1);
    return seg;
}

// Three-segment path Pi1 -> Gamma0(1) -> Gamma0(2) -> Pi2.  Degenerate
// cases collapse to fewer segments.
inline ConnectingPath connect_points(const PositiveAlgebra& PA, const std::vector<Rational>& Pi1,
                                     const std::vector<Rational>& Pi2) {
    const RingSpec& R = *PA.ring();
    ConnectingPath path;
    if (Pi1 == Pi2) {
        CurveSegment c = connecting_curve(PA, Pi1);
        // constant path at the point: substitute the point itself
        RingPtr tring = c.tring;
        CurveSegment stay;
        stay.tring = tring;
        for (int i = 0; i < R.n(); ++i)
            stay.coord.push_back(polyq_const(tring, Pi1[static_cast<size_t>(i)]));
        stay.at0 = stay.at1 = Pi1;
        path.segments.push_back(std::move(stay));
        return path;
    }
    auto gamma_of = [&](const std::vector<Rational>& p) {
        return std::vector<Rational>(p.begin(), p.begin() + R.m());
    };
    auto is_zero_point = [&](const std::vector<Rational>& p) {
        for (int j = 0; j < R.k(); ++j)
            if (!rat_is_zero(p[static_cast<size_t>(R.m() + j)])) return false;
        return true;
    };
    if (!is_zero_point(Pi1)) path.segments.push_back(reversed(connecting_curve(PA, Pi1)));
    if (gamma_of(Pi1) != gamma_of(Pi2))
        path.segments.push_back(zero_section_segment(PA, gamma_of(Pi1), gamma_of(Pi2)));
    if (!is_zero_point(Pi2)) path.segments.push_back(connecting_curve(PA, Pi2));
    return path;
}

inline bool path_is_continuous(const ConnectingPath& p) {
    for (size_t i = 0; i + 1 < p.segments.size(); ++i)
        if (p.segments[i].at1 != p.segments[i + 1].at0) return false;
    return true;
}

// ---- local numeric invariants --------------------------------------------

struct LocalInvariants {
    long rank_at_point;          // rk L_K(G_Gamma)
    long cot_dim_zero_point;     // n - rank
    long cot_dim_fiber_origin;   // k - rank
    long fiber_dim;              // d_{F_Gamma}
    long ecod_fiber;             // cot_dim_fiber_origin - fiber_dim
    std::optional<long> d_zero_point;  // supplied dimension of R at Gamma_0
    std::optional<long> ecod_zero_point;
};

inline LocalInvariants local_invariants(const PositiveAlgebra& PA,
                                        const std::vector<Rational>& gamma,
                                        std::optional<long> d_zero_point = std::nullopt,
                                        const Budget& budget = Budget()) {
    PolyMatrix L = lin_coeff_matrix(PA);
    long rk = rank(specialize_matrix(L, gamma));
    LocalInvariants inv{};
    inv.rank_at_point = rk;
    inv.cot_dim_zero_point = PA.n() - rk;
    inv.cot_dim_fiber_origin = PA.k() - rk;
    auto fd = fiber_ideal(PA, gamma).krull_dimension(budget);
    if (!fd) throw DomainError("fiber ideal is the unit ideal");
    inv.fiber_dim = *fd;
    inv.ecod_fiber = inv.cot_dim_fiber_origin - inv.fiber_dim;
    inv.d_zero_point = d_zero_point;
    if (d_zero_point) inv.ecod_zero_point = inv.cot_dim_zero_point - *d_zero_point;
    return inv;
}

}  // namespace gradloci
