#pragma once

#include "gradloci/constructible.hpp"
#include "gradloci/posalg.hpp"

namespace gradloci {

// X-leading data of a polynomial under the fiber-over-base block order:
// the maximal fiber monomial and its coefficient in A.
struct XLead {
    Mono xmono;    // full-ring monomial, parameter part zeroed
    PolyQ coeff;   // element of the base ring
};

inline XLead x_lead(const PolyQ& g, const TermOrder& block_ord, const RingPtr& base) {
    const RingSpec& R = *g.ring;
    const auto& lt = poly_lt(g, block_ord);
    Mono xm = lt.first;
    for (int i = 0; i < R.m(); ++i) xm[static_cast<size_t>(i)] = 0;
    PolyQ coeff(base);
    for (const auto& t : g.terms) {
        bool same_x = true;
        for (int j = 0; j < R.k() && same_x; ++j)
            same_x = t.first[static_cast<size_t>(R.m() + j)] == xm[static_cast<size_t>(R.m() + j)];
        if (!same_x) continue;
        Mono am(static_cast<size_t>(R.m()));
        for (int i = 0; i < R.m(); ++i) am[static_cast<size_t>(i)] = t.first[static_cast<size_t>(i)];
        coeff.terms.emplace_back(std::move(am), t.second);
    }
    coeff.normalize();
    return XLead{std::move(xm), std::move(coeff)};
}

// One cell of a Groebner system: on {eqs = 0, all nonzeros != 0} the
// specialization of `basis` is a Groebner basis of the fiber ideal.
// `unit` cells have fiber ideal <1>.
struct GSCell {
    std::vector<PolyQ> eqs;       // base ring
    std::vector<PolyQ> nonzeros;  // base ring, conjunction of != 0
    std::vector<PolyQ> basis;     // full ring; empty for the zero ideal
    bool unit = false;
    std::optional<long> fiber_dim;  // from the X-leading terms; nullopt if unit

    Cell to_cell(const RingPtr& base) const {
        Cell c;
        c.eqs = eqs;
        if (nonzeros.empty()) {
            c.ineqs = {polyq_const(base, Rational(1))};
        } else {
            PolyQ prod = polyq_const(base, Rational(1));
            for (const auto& h : nonzeros) prod = poly_mul(prod, h);
            c.ineqs = {prod};
        }
        return c;
    }
};

struct GroebnerSystem {
    RingPtr ring;   // full ring
    RingPtr base;   // parameter ring
    std::vector<GSCell> cells;
    bool covering = true;
};

struct CgsOptions {
    bool force = false;       // lift the desk-scale m <= 3, k <= 4 guard
    Budget budget = Budget();
};

namespace detail {

class CgsWorker {
public:
    CgsWorker(RingPtr ring, std::vector<PolyQ> gens, const CgsOptions& opt)
        : ring_(std::move(ring)),
          base_(base_ring(*ring_)),
          gens_(std::move(gens)),
          ord_(TermOrder::block_fiber_first(*ring_)),
          opt_(opt) {}

    GroebnerSystem run() {
        GroebnerSystem out;
        out.ring = ring_;
        out.base = base_;
        try {
            rec({}, {}, out);
        } catch (const BudgetExceeded&) {
            out.covering = false;
        }
        return out;
    }

private:
    bool conj_cell_empty(const std::vector<PolyQ>& eqs, const std::vector<PolyQ>& nz) {
        Ideal E(base_, eqs);
        PolyQ prod = polyq_const(base_, Rational(1));
        for (const auto& h : nz) {
            if (E.radical_contains(h, opt_.budget)) return true;  // short-circuit
            prod = poly_mul(prod, h);
        }
        return E.radical_contains(prod, opt_.budget);
    }

    void rec(std::vector<PolyQ> eqs, std::vector<PolyQ> nz, GroebnerSystem& out) {
        if (conj_cell_empty(eqs, nz)) return;
        std::vector<PolyQ> work = gens_;
        for (const auto& e : eqs) work.push_back(poly_map_to_ring(e, ring_));
        auto G = buchberger_reduced<Rational>(ring_, work, ord_, opt_.budget);
        if (G.size() == 1 && G[0].is_constant()) {
            out.cells.push_back(GSCell{eqs, nz, {G[0]}, true, std::nullopt});
            return;
        }
        std::vector<PolyQ> Gr, Gx;
        for (const auto& g : G) {
            auto supp = poly_support(g);
            bool param_only = true;
            for (int j = 0; j < ring_->k() && param_only; ++j)
                param_only = supp[static_cast<size_t>(ring_->m() + j)] == 0;
            (param_only ? Gr : Gx).push_back(g);
        }
        // points of the cell where some element of Gr survives have unit
        // fiber ideal; split them off disjointly
        std::vector<PolyQ> accE = eqs;
        for (const auto& g : Gr) {
            PolyQ gb = vars_to_zero(g, base_);  // g is parameter-only
            std::vector<PolyQ> unit_nz = nz;
            unit_nz.push_back(gb);
            if (!conj_cell_empty(accE, unit_nz))
                out.cells.push_back(GSCell{accE, unit_nz,
                                           {polyq_const(ring_, Rational(1))}, true, std::nullopt});
            accE.push_back(gb);
        }
        // continue on V(Gr) with the same nonzero constraints
        std::vector<PolyQ> E2;
        for (const auto& g : Gr) E2.push_back(vars_to_zero(g, base_));
        for (const auto& e : eqs) E2.push_back(e);
        if (conj_cell_empty(E2, nz)) return;

        // undecided X-leading coefficients, lowest degree first
        std::vector<PolyQ> lcs;
        for (const auto& g : Gx) {
            PolyQ h = x_lead(g, ord_, base_).coeff;
            if (h.is_constant()) continue;  // never vanishes
            lcs.push_back(std::move(h));
        }
        std::sort(lcs.begin(), lcs.end(), [](const PolyQ& a, const PolyQ& b) {
            long da = poly_total_deg(a), db = poly_total_deg(b);
            if (da != db) return da < db;
            return poly_cmp(a, b) < 0;
        });
        lcs.erase(std::unique(lcs.begin(), lcs.end()), lcs.end());

        std::vector<PolyQ> nz2 = nz;
        for (const auto& h : lcs) {
            std::vector<PolyQ> zeroE = E2;
            zeroE.push_back(h);
            if (!conj_cell_empty(zeroE, nz2)) rec(zeroE, nz2, out);
            nz2.push_back(h);
            if (conj_cell_empty(E2, nz2)) return;
        }
        // all leading coefficients nonvanishing: the basis specializes
        GSCell cell;
        cell.eqs = E2;
        cell.nonzeros = nz2;
        cell.basis = Gx;
        cell.unit = false;
        cell.fiber_dim = fiber_dim_from_basis(Gx);
        out.cells.push_back(std::move(cell));
    }

    long fiber_dim_from_basis(const std::vector<PolyQ>& Gx) {
        if (Gx.empty()) return ring_->k();
        std::vector<uint64_t> supports;
        for (const auto& g : Gx) {
            Mono xm = x_lead(g, ord_, base_).xmono;
            uint64_t s = 0;
            for (int j = 0; j < ring_->k(); ++j)
                if (xm[static_cast<size_t>(ring_->m() + j)] > 0) s |= 1ull << j;
            supports.push_back(s);
        }
        return dimension_of_monomial_supports(std::move(supports), ring_->k());
    }

    RingPtr ring_, base_;
    std::vector<PolyQ> gens_;
    TermOrder ord_;
    CgsOptions opt_;
};

}  // namespace detail

// Comprehensive Groebner system for arbitrary generators in A[X].
inline GroebnerSystem comprehensive_gs_for(const RingPtr& ring, const std::vector<PolyQ>& gens,
                                           const CgsOptions& opt = CgsOptions()) {
    if (!opt.force && (ring->m() > 3 || ring->k() > 4))
        throw InputError("comprehensive system guarded to m <= 3, k <= 4 (set force to lift)");
    detail::CgsWorker w(ring, gens, opt);
    return w.run();
}

inline GroebnerSystem comprehensive_gs(const PositiveAlgebra& PA,
                                       const CgsOptions& opt = CgsOptions()) {
    return comprehensive_gs_for(PA.ring(), PA.gens(), opt);
}

// Specialize a Groebner-system basis at a cell point.
inline std::vector<PolyQ> specialize_basis(const GSCell& cell, const RingPtr& fiber,
                                           const std::vector<Rational>& gamma) {
    std::vector<PolyQ> out;
    for (const auto& g : cell.basis) out.push_back(specialize(g, gamma, fiber));
    return out;
}

}  // namespace gradloci
