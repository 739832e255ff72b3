#pragma once

#include "gradloci/posalg.hpp"

namespace gradloci {

// A finite divisor-closed set of monomials in n ambient variables,
// sorted ascending by degrevlex (the indexing convention all the c_{ij}
// bookkeeping depends on).
struct OrderIdeal {
    int nvars = 0;
    std::vector<std::string> var_names;
    std::vector<Mono> terms;  // t_1 .. t_mu, ascending degrevlex

    size_t mu() const { return terms.size(); }
};

inline std::vector<std::string> default_ambient_names(int n) {
    if (n <= 3) {
        std::vector<std::string> xyz{"x", "y", "z"};
        return {xyz.begin(), xyz.begin() + n};
    }
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

inline OrderIdeal validate_order_ideal(std::vector<Mono> terms, int nvars,
                                       std::vector<std::string> names = {}) {
    if (terms.empty()) throw InputError("order ideal must be nonempty");
    for (const auto& t : terms)
        if (static_cast<int>(t.size()) != nvars) throw InputError("exponent vector length mismatch");
    auto ambient = RingSpec::make({}, default_ambient_names(nvars),
                                  std::vector<long>(static_cast<size_t>(nvars), 1));
    TermOrder ord = TermOrder::degrevlex(*ambient);
    std::sort(terms.begin(), terms.end(),
              [&](const Mono& a, const Mono& b) { return ord.less(a, b); });
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    // divisor closure, witness reported
    std::set<Mono> have(terms.begin(), terms.end());
    for (const auto& t : terms)
        for (int r = 0; r < nvars; ++r) {
            if (t[static_cast<size_t>(r)] == 0) continue;
            Mono d = t;
            --d[static_cast<size_t>(r)];
            if (!have.count(d))
                throw InputError("order ideal is not divisor-closed: missing " +
                                 mono_to_string(d, *ambient) + " dividing " +
                                 mono_to_string(t, *ambient));
        }
    OrderIdeal O;
    O.nvars = nvars;
    O.var_names = names.empty() ? default_ambient_names(nvars) : std::move(names);
    O.terms = std::move(terms);
    return O;
}

// Border structure: the terms b_1..b_nu = (x_1 O u ... u x_n O) \ O,
// ascending degrevlex, plus the classification of every product x_r t_j.
struct BorderStructure {
    std::vector<Mono> border;  // b_1 .. b_nu
    struct ProductRef {
        bool inside;  // true: O, false: border
        size_t index;
    };
    std::vector<std::vector<ProductRef>> prod;  // [r][j] -> where x_r t_j lands

    size_t nu() const { return border.size(); }
};

inline BorderStructure border(const OrderIdeal& O) {
    auto ambient = RingSpec::make({}, default_ambient_names(O.nvars),
                                  std::vector<long>(static_cast<size_t>(O.nvars), 1));
    TermOrder ord = TermOrder::degrevlex(*ambient);
    std::set<Mono> inO(O.terms.begin(), O.terms.end());
    std::set<Mono> bset;
    for (int r = 0; r < O.nvars; ++r)
        for (const auto& t : O.terms) {
            Mono p = t;
            ++p[static_cast<size_t>(r)];
            if (!inO.count(p)) bset.insert(p);
        }
    BorderStructure B;
    B.border.assign(bset.begin(), bset.end());
    std::sort(B.border.begin(), B.border.end(),
              [&](const Mono& a, const Mono& b) { return ord.less(a, b); });
    std::map<Mono, size_t> bindex, oindex;
    for (size_t i = 0; i < B.border.size(); ++i) bindex[B.border[i]] = i;
    for (size_t i = 0; i < O.terms.size(); ++i) oindex[O.terms[i]] = i;
    B.prod.assign(static_cast<size_t>(O.nvars), {});
    for (int r = 0; r < O.nvars; ++r) {
        B.prod[static_cast<size_t>(r)].resize(O.mu());
        for (size_t j = 0; j < O.mu(); ++j) {
            Mono p = O.terms[j];
            ++p[static_cast<size_t>(r)];
            auto it = oindex.find(p);
            if (it != oindex.end())
                B.prod[static_cast<size_t>(r)][j] = {true, it->second};
            else
                B.prod[static_cast<size_t>(r)][j] = {false, bindex.at(p)};
        }
    }
    return B;
}

inline std::string c_name(size_t i, size_t j) {
    return "c[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

// Total arrow degrees deg(c_ij) = deg(b_j) - deg(t_i), row-major over
// the mu x nu grid.
inline std::vector<long> arrow_grading(const OrderIdeal& O, const BorderStructure& B) {
    std::vector<long> w;
    w.reserve(O.mu() * B.nu());
    for (size_t i = 0; i < O.mu(); ++i)
        for (size_t j = 0; j < B.nu(); ++j)
            w.push_back(mono_total_deg(B.border[j]) - mono_total_deg(O.terms[i]));
    return w;
}

inline bool is_maxdeg(const OrderIdeal& O, const BorderStructure& B) {
    for (long w : arrow_grading(O, B))
        if (w < 0) return false;
    return true;
}

// The border basis scheme data: the c-variable ring (weight-zero
// variables as parameters), the generic multiplication matrices, and the
// commutator ideal.
struct BBScheme {
    OrderIdeal O;
    BorderStructure B;
    RingPtr cring;                       // params = C_0, vars = C_+
    std::vector<long> weights_grid;      // mu x nu, row-major
    std::vector<std::vector<PolyQ>> mult;  // n matrices, mu x mu row-major
    std::vector<PolyQ> gens;             // commutator entries, deduplicated

    size_t mu() const { return O.mu(); }
    size_t nu() const { return B.nu(); }
    int cvar_index(size_t i, size_t j) const { return *cring->index_of(c_name(i, j)); }
};

// Entry rule for the generic multiplication matrix of x_r:
//   entry(i,j) = delta_{i,m}  if x_r t_j = t_m
//   entry(i,j) = c_{i,m}      if x_r t_j = b_m
inline std::vector<PolyQ> generic_mult_matrix(const BBScheme& S, int r) {
    size_t mu = S.mu();
    std::vector<PolyQ> A(mu * mu, PolyQ(S.cring));
    for (size_t j = 0; j < mu; ++j) {
        auto ref = S.B.prod[static_cast<size_t>(r)][j];
        if (ref.inside) {
            A[ref.index * mu + j] = polyq_const(S.cring, Rational(1));
        } else {
            for (size_t i = 0; i < mu; ++i)
                A[i * mu + j] = polyq_var(S.cring, S.cvar_index(i, ref.index));
        }
    }
    return A;
}

inline BBScheme build_bbscheme(const OrderIdeal& O) {
    BBScheme S;
    S.O = O;
    S.B = border(O);
    S.weights_grid = arrow_grading(S.O, S.B);
    size_t mu = S.O.mu(), nu = S.B.nu();
    std::vector<std::string> params, vars;
    std::vector<long> var_weights;
    for (size_t i = 0; i < mu; ++i)
        for (size_t j = 0; j < nu; ++j) {
            long w = S.weights_grid[i * nu + j];
            if (w == 0)
                params.push_back(c_name(i, j));
            else {
                vars.push_back(c_name(i, j));
                var_weights.push_back(w);
            }
        }
    S.cring = RingSpec::make(params, vars, var_weights);

    for (int r = 0; r < S.O.nvars; ++r) S.mult.push_back(generic_mult_matrix(S, r));

    // commutator entries A_i A_j - A_j A_i, i < j, zeros dropped,
    // duplicates removed structurally
    auto matmul = [&](const std::vector<PolyQ>& A, const std::vector<PolyQ>& B2) {
        std::vector<PolyQ> C(mu * mu, PolyQ(S.cring));
        for (size_t i = 0; i < mu; ++i)
            for (size_t l = 0; l < mu; ++l) {
                if (A[i * mu + l].is_zero()) continue;
                for (size_t j = 0; j < mu; ++j) {
                    if (B2[l * mu + j].is_zero()) continue;
                    C[i * mu + j] =
                        poly_add(C[i * mu + j], poly_mul(A[i * mu + l], B2[l * mu + j]));
                }
            }
        return C;
    };
    std::set<PolyQ, PolyLess<Rational>> seen;
    for (int i = 0; i < S.O.nvars; ++i)
        for (int j = i + 1; j < S.O.nvars; ++j) {
            auto AB = matmul(S.mult[static_cast<size_t>(i)], S.mult[static_cast<size_t>(j)]);
            auto BA = matmul(S.mult[static_cast<size_t>(j)], S.mult[static_cast<size_t>(i)]);
            for (size_t e = 0; e < mu * mu; ++e) {
                PolyQ d = poly_sub(AB[e], BA[e]);
                if (d.is_zero()) continue;
                if (seen.insert(d).second) S.gens.push_back(std::move(d));
            }
        }
    return S;
}

// Dimension of the span of the (standard-)degree-one parts of the
// generators at the origin.
inline long linear_span_dim_at_origin(const std::vector<PolyQ>& gens, const RingPtr& ring) {
    ScalarMatrix M(gens.size(), static_cast<size_t>(ring->n()));
    for (size_t i = 0; i < gens.size(); ++i)
        for (const auto& t : gens[i].terms)
            if (mono_total_deg(t.first) == 1)
                for (size_t p = 0; p < t.first.size(); ++p)
                    if (t.first[p] == 1) M.at(i, p) = t.second;
    return rank(std::move(M));
}

inline bool vanishes_at_origin(const std::vector<PolyQ>& gens) {
    for (const auto& g : gens)
        for (const auto& t : g.terms)
            if (mono_is_one(t.first)) return false;
    return true;
}

// ---- separating-tuple reembedding by iterated substitution ---------------

// Eliminates the given symbols from the generator list by repeatedly
// solving a generator of the form  c*z + h  (c a nonzero scalar, z absent
// from h) for z and substituting.  This computes the elimination ideal
// <gens> cap K[remaining] exactly when it succeeds; it throws when no
// solvable generator remains.  The tuples used here come with that
// guarantee by construction.
struct Reembedding {
    RingPtr yring;
    std::vector<PolyQ> gens;               // generators of the eliminated ideal
    std::vector<std::string> eliminated;   // in elimination order
};

inline Reembedding reembed_by_substitution(const RingPtr& ring, const std::vector<PolyQ>& gens,
                                           const std::vector<std::string>& z_names) {
    std::vector<int> zpos;
    std::vector<char> in_z(static_cast<size_t>(ring->n()), 0);
    for (const auto& nm : z_names) {
        auto idx = ring->index_of(nm);
        if (!idx) throw InputError("reembedding: unknown symbol " + nm);
        zpos.push_back(*idx);
        in_z[static_cast<size_t>(*idx)] = 1;
    }
    if (zpos.size() > 62) throw InputError("reembedding limited to 62 separating symbols");

    // Candidates: z is solvable from g when z occurs in g exactly once,
    // in a term c*z.  The cofactor h = -(g - c z)/c may reference other
    // separating symbols; those are the candidate's dependencies.
    struct Candidate {
        PolyQ repl;       // -(g - c z)/c, other Z symbols still inside
        uint64_t deps;    // separating symbols occurring in repl
    };
    std::map<int, int> zindex;  // ring position -> 0..|Z|-1
    for (size_t zi = 0; zi < zpos.size(); ++zi) zindex[zpos[zi]] = static_cast<int>(zi);
    std::vector<std::vector<Candidate>> cands(zpos.size());
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        for (size_t zi = 0; zi < zpos.size(); ++zi) {
            int p = zpos[zi];
            int hits = 0;
            Rational c(0);
            for (const auto& t : g.terms) {
                if (t.first[static_cast<size_t>(p)] == 0) continue;
                ++hits;
                if (t.first[static_cast<size_t>(p)] == 1 && mono_total_deg(t.first) == 1)
                    c = t.second;
                else
                    hits = 2;  // z multiplies something: not solvable here
                if (hits > 1) break;
            }
            if (hits != 1 || rat_is_zero(c)) continue;
            Mono zm = mono_one(static_cast<size_t>(ring->n()));
            zm[static_cast<size_t>(p)] = 1;
            PolyQ h = poly_sub(g, poly_term<Rational>(ring, zm, c));
            Rational scale = Rational(-1) / c;
            Candidate cand{poly_mul_scalar(h, scale), 0};
            auto supp = poly_support(cand.repl);
            for (size_t qi = 0; qi < zpos.size(); ++qi)
                if (supp[static_cast<size_t>(zpos[qi])]) cand.deps |= 1ull << qi;
            cands[zi].push_back(std::move(cand));
        }
    }
    for (auto& cl : cands)
        std::sort(cl.begin(), cl.end(), [](const Candidate& a, const Candidate& b) {
            return a.repl.size() < b.repl.size();
        });

    // Order the symbols so that every chosen cofactor references only
    // later symbols; backtracking over candidate choices with a memo of
    // failed prefixes.
    std::vector<int> order;       // z-indices in resolution order
    std::vector<int> choice(zpos.size(), -1);
    std::set<uint64_t> dead;
    std::function<bool(uint64_t)> search = [&](uint64_t chosen) -> bool {
        if (order.size() == zpos.size()) return true;
        if (dead.count(chosen)) return false;
        for (size_t zi = 0; zi < zpos.size(); ++zi) {
            if (chosen & (1ull << zi)) continue;
            for (size_t ci = 0; ci < cands[zi].size(); ++ci) {
                if (cands[zi][ci].deps & chosen) continue;  // references an earlier symbol
                order.push_back(static_cast<int>(zi));
                choice[zi] = static_cast<int>(ci);
                if (search(chosen | (1ull << zi))) return true;
                order.pop_back();
                choice[zi] = -1;
            }
        }
        dead.insert(chosen);
        return false;
    };
    if (!search(0))
        throw DomainError("reembedding: the tuple does not admit a triangular resolution "
                          "from the given generators");

    // Back-substitute from the last symbol; afterwards every replacement
    // is free of separating symbols.
    Reembedding out;
    std::map<int, PolyQ> resolved;  // ring position -> replacement
    for (size_t oi = zpos.size(); oi-- > 0;) {
        int zi = order[oi];
        PolyQ repl = cands[static_cast<size_t>(zi)][static_cast<size_t>(choice[zi])].repl;
        for (const auto& [p, r] : resolved)
            if (poly_deg_in(repl, p) > 0) repl = poly_substitute(repl, p, r);
        resolved.emplace(zpos[static_cast<size_t>(zi)], std::move(repl));
    }
    for (int zi : order) out.eliminated.push_back(ring->name(zpos[static_cast<size_t>(zi)]));
    auto substitute_resolved = [&](PolyQ f) {
        for (const auto& [p, repl] : resolved)
            if (poly_deg_in(f, p) > 0) f = poly_substitute(f, p, repl);
        return f;
    };

    // Phase 2: apply the substitution once to every generator; the images
    // of the consumed generators vanish.
    std::vector<std::string> nparams, nvars;
    std::vector<long> nweights;
    for (int i = 0; i < ring->m(); ++i)
        if (!in_z[static_cast<size_t>(i)]) nparams.push_back(ring->name(i));
    for (int j = 0; j < ring->k(); ++j) {
        int p = ring->m() + j;
        if (in_z[static_cast<size_t>(p)]) continue;
        nvars.push_back(ring->vars()[static_cast<size_t>(j)]);
        nweights.push_back(ring->var_weights()[static_cast<size_t>(j)]);
    }
    out.yring = RingSpec::make(nparams, nvars, nweights);
    std::set<PolyQ, PolyLess<Rational>> seen;
    for (const auto& g : gens) {
        PolyQ img = substitute_resolved(g);
        if (img.is_zero()) continue;
        PolyQ mapped = poly_map_to_ring(img, out.yring);
        if (seen.insert(mapped).second) out.gens.push_back(std::move(mapped));
    }
    return out;
}

}  // namespace gradloci
