#pragma once

#include "gradloci/cgs.hpp"

namespace gradloci {

// Signalled when the generic rank of the coefficient matrix exceeds
// n - d, which is impossible for an equidimensional spectrum.
struct NonEquidimensional : DomainError {
    explicit NonEquidimensional(const std::string& what) : DomainError(what) {}
};

struct VerificationError : InputError {
    VerificationError(const std::string& what, std::string witness_)
        : InputError(what), witness(std::move(witness_)) {}
    std::string witness;
};

// ---- zero section singularities ------------------------------------------

// Equidimensional case: Sing_0 = Z(J_{n-d}), the ideal of (n-d)-minors of
// the coefficient matrix.  The rank sanity check rk <= n-d is enforced.
inline Ideal sing0_equidimensional(const PositiveAlgebra& PA, long d,
                                   const Budget& budget = Budget()) {
    (void)budget;
    PolyMatrix L = lin_coeff_matrix(PA);
    long target = PA.n() - d;
    long rk = generic_rank(L);
    if (rk > target)
        throw NonEquidimensional("generic rank " + std::to_string(rk) + " exceeds n - d = " +
                                 std::to_string(target) + "; the spectrum is not equidimensional");
    return minors_ideal(L, target);
}

// rk L_K(G_Gamma) < n - d_{Gamma_0}
inline bool sing0_point_test(const PositiveAlgebra& PA, const std::vector<Rational>& gamma,
                             long d_zero_point) {
    PolyMatrix L = lin_coeff_matrix(PA);
    long rk = rank(specialize_matrix(L, gamma));
    return rk < PA.n() - d_zero_point;
}

// rk L_K(G_Gamma) < k - d_{F_Gamma}
inline bool singv_point_test(const PositiveAlgebra& PA, const std::vector<Rational>& gamma,
                             const Budget& budget = Budget()) {
    PolyMatrix L = lin_coeff_matrix(PA);
    long rk = rank(specialize_matrix(L, gamma));
    auto fd = fiber_ideal(PA, gamma).krull_dimension(budget);
    if (!fd) throw DomainError("fiber ideal is the unit ideal");
    return rk < PA.k() - *fd;
}

// ---- certified component data --------------------------------------------

struct Component {
    std::vector<PolyQ> prime_gens;  // full ring
    long dim;
};

struct ComponentData {
    std::vector<Component> components;
    std::optional<std::vector<PolyQ>> radical;  // generators of Rad(I), full ring
    bool reduced_asserted = false;
};

// Containment checks before any use: each p_i contains I; a supplied
// radical J satisfies I subseteq J, J subseteq each p_i, and every
// generator of J lies in Rad(I).
inline void verify_component_data(const PositiveAlgebra& PA, const ComponentData& cd,
                                  const Budget& budget = Budget()) {
    for (const auto& comp : cd.components) {
        Ideal Pi(PA.ring(), comp.prime_gens);
        for (const auto& g : PA.gens())
            if (!Pi.contains_poly(g, budget))
                throw VerificationError("component does not contain the ideal", poly_to_string(g));
    }
    if (cd.radical) {
        Ideal J(PA.ring(), *cd.radical);
        for (const auto& g : PA.gens())
            if (!J.contains_poly(g, budget))
                throw VerificationError("supplied radical does not contain the ideal",
                                        poly_to_string(g));
        for (const auto& f : *cd.radical) {
            if (!PA.ideal().radical_contains(f, budget))
                throw VerificationError("supplied radical generator is not in Rad(I)",
                                        poly_to_string(f));
            for (const auto& comp : cd.components) {
                Ideal Pi(PA.ring(), comp.prime_gens);
                if (!Pi.contains_poly(f, budget))
                    throw VerificationError("minimal prime does not contain the radical",
                                            poly_to_string(f));
            }
        }
    }
}

// Largest component dimension at the zero point over gamma.
inline std::optional<long> derive_d_zero_point(const ComponentData& cd,
                                               const std::vector<Rational>& gamma,
                                               const RingPtr& ring) {
    std::vector<Rational> point = gamma;
    for (int j = 0; j < ring->k(); ++j) point.push_back(Rational(0));
    std::optional<long> best;
    for (const auto& comp : cd.components) {
        bool on = true;
        for (const auto& p : comp.prime_gens)
            if (!rat_is_zero(polyq_eval(p, point))) {
                on = false;
                break;
            }
        if (on && (!best || comp.dim > *best)) best = comp.dim;
    }
    return best;
}

// Full Jacobian (all n symbols) of the component generators, evaluated on
// the zero section, plus the component's own zero-section equations.
inline Ideal component_sing_ideal(const PositiveAlgebra& PA, const Component& comp,
                                  const Budget& budget = Budget()) {
    const RingPtr& ring = PA.ring();
    RingPtr base = base_ring(*ring);
    size_t s = comp.prime_gens.size();
    PolyMatrix Jac0(base, s, static_cast<size_t>(PA.n()));
    for (size_t i = 0; i < s; ++i)
        for (int p = 0; p < PA.n(); ++p)
            Jac0.at(i, static_cast<size_t>(p)) =
                vars_to_zero(poly_derivative(comp.prime_gens[i], p), base);
    Ideal minors = minors_ideal(Jac0, PA.n() - comp.dim);
    std::vector<PolyQ> gens = minors.gens();
    for (const auto& p : comp.prime_gens) {
        PolyQ p0 = vars_to_zero(p, base);
        if (!p0.is_zero()) gens.push_back(std::move(p0));
    }
    (void)budget;
    return Ideal(base, std::move(gens));
}

// The general algorithm for the vanishing ideal of Sing_0(Theta):
//  (1) nilradical support n = (I : Rad I)  [skipped when R is reduced]
//  (2,3) per-component singular parts a_i via the point-rank criterion
//  (4) q = n cap the pairwise component intersections
//  (5) b = q with the fiber variables set to zero
//  (6) return a_1 cap ... cap a_l cap b
inline Ideal sing0_general(const PositiveAlgebra& PA, const ComponentData& cd,
                           const Budget& budget = Budget()) {
    if (!cd.radical && !cd.reduced_asserted)
        throw InputError("sing0_general needs a certified radical or the reduced assertion");
    verify_component_data(PA, cd, budget);
    const RingPtr& ring = PA.ring();
    RingPtr base = base_ring(*ring);

    Ideal nil_support = Ideal::unit(ring);
    if (cd.radical) nil_support = PA.ideal().quotient(Ideal(ring, *cd.radical), budget);

    std::vector<Ideal> parts;
    for (const auto& comp : cd.components) parts.push_back(component_sing_ideal(PA, comp, budget));

    Ideal q = nil_support;
    for (size_t i = 0; i < cd.components.size(); ++i)
        for (size_t j = i + 1; j < cd.components.size(); ++j) {
            std::vector<PolyQ> sum = cd.components[i].prime_gens;
            sum.insert(sum.end(), cd.components[j].prime_gens.begin(),
                       cd.components[j].prime_gens.end());
            q = q.intersect(Ideal(ring, sum), budget);
        }
    std::vector<PolyQ> bgens;
    for (const auto& g : q.gens()) {
        PolyQ g0 = vars_to_zero(g, base);
        if (!g0.is_zero()) bgens.push_back(std::move(g0));
    }
    Ideal result(base, bgens);
    if (q.is_zero_ideal() || bgens.empty()) result = Ideal::zero(base);
    for (const auto& a : parts) result = result.intersect(a, budget);
    return result;
}

// ---- fiber-wise loci -------------------------------------------------------

// Relative Jacobian minors: r x r minors of (d g_i / d x_j), fiber
// variables only, over the ring the generators live in.
inline Ideal jacobian_minors(const std::vector<PolyQ>& gens, const RingPtr& ring, long r) {
    if (r < 1) throw InputError("jacobian_minors: order must be >= 1");
    int m = ring->m(), k = ring->k();
    PolyMatrix J(ring, gens.size(), static_cast<size_t>(k));
    for (size_t i = 0; i < gens.size(); ++i)
        for (int j = 0; j < k; ++j) J.at(i, static_cast<size_t>(j)) = poly_derivative(gens[i], m + j);
    return minors_ideal(J, r);
}

inline Ideal jacobian_minors(const Ideal& I, long r) {
    return jacobian_minors(I.gens(), I.ring(), r);
}

// Sing_v(Theta) as a constructible set: strata S_d from a comprehensive
// Groebner system, closed pieces T_d from coefficient-matrix minors,
// and the union of T_d cap (S_d \ S_{d+1}).
struct SingVResult {
    ConstructibleSet set;
    GroebnerSystem system;
    std::vector<ConstructibleSet> strata_exact;  // fiber dimension exactly d, d = 0..k
};

inline SingVResult singv_set(const PositiveAlgebra& PA, const CgsOptions& opt = CgsOptions()) {
    RingPtr base = base_ring(*PA.ring());
    GroebnerSystem gs = comprehensive_gs(PA, opt);
    if (!gs.covering) throw BudgetExceeded("comprehensive system incomplete; enlarge the budget");
    int k = PA.k();
    // S_d = union of cells with fiber dimension >= d
    std::vector<ConstructibleSet> S(static_cast<size_t>(k) + 2, ConstructibleSet(base));
    for (int d = 0; d <= k + 1; ++d)
        for (const auto& cell : gs.cells)
            if (!cell.unit && cell.fiber_dim.value() >= d)
                S[static_cast<size_t>(d)].add_cell(cell.to_cell(base));

    PolyMatrix L = lin_coeff_matrix(PA);
    SingVResult out{ConstructibleSet(base), std::move(gs), {}};
    for (int d = 0; d <= k; ++d)
        out.strata_exact.push_back(set_difference(S[static_cast<size_t>(d)],
                                                  S[static_cast<size_t>(d) + 1], opt.budget));
    for (int d = 0; d < k; ++d) {
        Ideal minors = minors_ideal(L, k - d);
        ConstructibleSet T_d = ConstructibleSet::closed(base, minors.gens());
        ConstructibleSet piece =
            set_intersect(T_d, out.strata_exact[static_cast<size_t>(d)], opt.budget);
        out.set = set_union(out.set, piece);
    }
    return out;
}

// Sing_s(Theta): for every stratum U_d = T_d cap (S_d \ S_{d+1}) that is
// nonempty, run a comprehensive system for I + Jac_{k-d}(I) and collect
// the cells whose specialized singular locus has dimension >= 1
// (weighted homogeneity makes >= 1 equivalent to containing a point
// different from the fiber origin), restricted to the stratum.
inline ConstructibleSet sings_set(const PositiveAlgebra& PA, const CgsOptions& opt = CgsOptions()) {
    RingPtr base = base_ring(*PA.ring());
    SingVResult sv = singv_set(PA, opt);
    int k = PA.k();
    PolyMatrix L = lin_coeff_matrix(PA);
    ConstructibleSet result(base);
    for (int d = 0; d < k; ++d) {
        Ideal minors = minors_ideal(L, k - d);
        ConstructibleSet T_d = ConstructibleSet::closed(base, minors.gens());
        ConstructibleSet U_d =
            set_intersect(T_d, sv.strata_exact[static_cast<size_t>(d)], opt.budget);
        if (is_empty(U_d, opt.budget)) continue;
        std::vector<PolyQ> work = PA.gens();
        Ideal jac = jacobian_minors(PA.gens(), PA.ring(), k - d);
        for (const auto& g : jac.gens()) work.push_back(g);
        GroebnerSystem gs2 = comprehensive_gs_for(PA.ring(), work, opt);
        if (!gs2.covering)
            throw BudgetExceeded("comprehensive system incomplete; enlarge the budget");
        for (const auto& cell : gs2.cells) {
            if (cell.unit || cell.fiber_dim.value() < 1) continue;
            ConstructibleSet piece(base, {cell.to_cell(base)});
            result = set_union(result, set_intersect(piece, U_d, opt.budget));
        }
    }
    return result;
}

// Jacobian criterion at a fiber point, under the caller's assertion that
// the fiber is equidimensional of dimension d.
inline bool fiber_point_singular_test(const PositiveAlgebra& PA,
                                      const std::vector<Rational>& gamma,
                                      const std::vector<Rational>& pi, long d) {
    Ideal F = fiber_ideal(PA, gamma);
    const RingPtr& fib = F.ring();
    if (static_cast<int>(pi.size()) != PA.k()) throw InputError("fiber point has wrong length");
    for (const auto& g : F.gens())
        if (!rat_is_zero(polyq_eval(g, pi)))
            throw PointNotOnVariety("point is not on the fiber", poly_to_string(g));
    ScalarMatrix J(F.gens().size(), static_cast<size_t>(PA.k()));
    for (size_t i = 0; i < F.gens().size(); ++i)
        for (int j = 0; j < PA.k(); ++j)
            J.at(i, static_cast<size_t>(j)) = polyq_eval(poly_derivative(F.gens()[i], j), pi);
    return rank(std::move(J)) < PA.k() - d;
}

}  // namespace gradloci
