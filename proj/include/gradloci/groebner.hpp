#pragma once

#include <optional>
#include <set>
#include <unordered_set>

#include "gradloci/polynomial.hpp"
#include "gradloci/rational.hpp"

namespace gradloci {

// Buchberger engine, generic over the coefficient field.  Terms are kept
// sorted descending under the active order while reducing; results are
// handed back as canonical polynomials.
//
// Pair selection follows the normal strategy (smallest lcm degree first,
// ties by lcm and generator indices), with Buchberger's coprimality and
// chain criteria.  Deterministic for fixed input.
template <class K>
class GBEngine {
public:
    using P = Poly<K>;
    using Term = typename P::Term;
    using TV = std::vector<Term>;

    GBEngine(RingPtr ring, TermOrder ord, Budget budget = Budget())
        : ring_(std::move(ring)), ord_(std::move(ord)), budget_(budget) {}

    // Reduced Groebner basis.  With `degree_cap`, S-pairs whose lcm
    // exceeds the W-degree cap are discarded and the basis is only valid
    // up to that degree (truncated flag reported via out-parameter).
    std::vector<P> reduced_basis(const std::vector<P>& gens,
                                 std::optional<long> degree_cap = std::nullopt,
                                 bool* truncated = nullptr) {
        if (truncated) *truncated = false;
        std::vector<TV> basis;
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            basis.push_back(make_monic(to_ordered(g)));
        }
        if (basis.empty()) return {};

        std::set<PairKey> queue;
        std::unordered_set<uint64_t> treated;
        auto pair_id = [](int i, int j) {
            return (static_cast<uint64_t>(i) << 32) | static_cast<uint32_t>(j);
        };
        auto push_pairs = [&](int j) {
            for (int i = 0; i < j; ++i) queue.insert(make_key(basis, i, j));
        };
        for (int j = 0; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

        long pairs = 0;
        while (!queue.empty()) {
            if (++pairs > budget_.max_pairs)
                throw BudgetExceeded("groebner: S-pair budget exceeded (" +
                                     std::to_string(budget_.max_pairs) + ")");
            PairKey pk = *queue.begin();
            queue.erase(queue.begin());
            int i = pk.i, j = pk.j;
            treated.insert(pair_id(i, j));

            const Mono& lti = basis[static_cast<size_t>(i)].front().first;
            const Mono& ltj = basis[static_cast<size_t>(j)].front().first;
            Mono lcm = mono_lcm(lti, ltj);
            if (degree_cap && ring_->w_deg(lcm) > *degree_cap) {
                if (truncated) *truncated = true;
                continue;
            }
            if (mono_mul(lti, ltj) == lcm) continue;  // coprime leading terms
            bool chained = false;
            for (int l = 0; l < static_cast<int>(basis.size()) && !chained; ++l) {
                if (l == i || l == j) continue;
                if (!mono_divides(basis[static_cast<size_t>(l)].front().first, lcm)) continue;
                uint64_t a = pair_id(std::min(i, l), std::max(i, l));
                uint64_t b = pair_id(std::min(j, l), std::max(j, l));
                if (treated.count(a) && treated.count(b)) chained = true;
            }
            if (chained) continue;

            TV s = s_poly(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)], lcm);
            TV rem = reduce_full(std::move(s), basis);
            if (rem.empty()) continue;
            basis.push_back(make_monic(std::move(rem)));
            if (static_cast<long>(basis.size()) > budget_.max_basis)
                throw BudgetExceeded("groebner: basis size budget exceeded");
            push_pairs(static_cast<int>(basis.size()) - 1);
            if (basis.back().front().first == mono_one(basis.back().front().first.size()))
                break;  // unit ideal, nothing more to learn
        }

        return inter_reduce(std::move(basis));
    }

    // Full normal form of f against a list of polynomials.
    P normal_form(const P& f, const std::vector<P>& gs) {
        std::vector<TV> basis;
        for (const auto& g : gs)
            if (!g.is_zero()) basis.push_back(to_ordered(g));
        TV rem = reduce_full(to_ordered(f), basis);
        return to_poly(std::move(rem));
    }

private:
    struct PairKey {
        long deg;
        Mono lcm;
        int i, j;
        bool operator<(const PairKey& o) const {
            if (deg != o.deg) return deg < o.deg;
            if (lcm != o.lcm) return lcm < o.lcm;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };

    PairKey make_key(const std::vector<TV>& basis, int i, int j) const {
        Mono lcm = mono_lcm(basis[static_cast<size_t>(i)].front().first,
                            basis[static_cast<size_t>(j)].front().first);
        return PairKey{mono_total_deg(lcm), std::move(lcm), i, j};
    }

    TV to_ordered(const P& p) const {
        TV t = p.terms;
        std::sort(t.begin(), t.end(),
                  [&](const Term& a, const Term& b) { return ord_.greater(a.first, b.first); });
        return t;
    }

    P to_poly(TV t) const {
        P p(ring_);
        p.terms = std::move(t);
        p.normalize();
        return p;
    }

    TV make_monic(TV f) const {
        if (f.empty()) return f;
        if (CoeffOps<K>::is_one(f.front().second)) return f;
        K inv = K(1) / f.front().second;
        for (auto& t : f) t.second = t.second * inv;
        return f;
    }

    // f[off..] + c * x^m * g, both inputs sorted descending under ord_.
    TV merge_axpy(const TV& f, size_t off, const K& c, const Mono& m, const TV& g) const {
        TV out;
        out.reserve(f.size() - off + g.size());
        size_t i = off, j = 0;
        while (i < f.size() && j < g.size()) {
            Mono gm = mono_mul(g[j].first, m);
            int cmp = ord_.cmp(f[i].first, gm);
            if (cmp == 0) {
                K v = f[i].second + c * g[j].second;
                if (!CoeffOps<K>::is_zero(v)) out.emplace_back(std::move(gm), std::move(v));
                ++i, ++j;
            } else if (cmp > 0) {
                out.push_back(f[i++]);
            } else {
                K v = c * g[j].second;
                out.emplace_back(std::move(gm), std::move(v));
                ++j;
            }
        }
        for (; i < f.size(); ++i) out.push_back(f[i]);
        for (; j < g.size(); ++j) {
            K v = c * g[j].second;
            out.emplace_back(mono_mul(g[j].first, m), std::move(v));
        }
        return out;
    }

    TV s_poly(const TV& f, const TV& g, const Mono& lcm) const {
        // lcm/lt(f) * f / lc(f)  -  lcm/lt(g) * g / lc(g)
        K cf = K(1) / f.front().second;
        K cg = CoeffOps<K>::neg(K(1) / g.front().second);
        Mono mf = mono_div(lcm, f.front().first);
        Mono mg = mono_div(lcm, g.front().first);
        TV left;
        left.reserve(f.size());
        for (const auto& t : f) {
            K v = t.second * cf;
            left.emplace_back(mono_mul(t.first, mf), std::move(v));
        }
        return merge_axpy(left, 0, cg, mg, g);
    }

    TV reduce_full(TV f, const std::vector<TV>& basis) {
        TV out;
        size_t off = 0;
        while (off < f.size()) {
            if (++steps_ > budget_.max_reduction_steps)
                throw BudgetExceeded("groebner: reduction step budget exceeded");
            const Mono& lt = f[off].first;
            const TV* red = nullptr;
            for (const auto& g : basis)
                if (mono_divides(g.front().first, lt)) {
                    red = &g;
                    break;
                }
            if (!red) {
                out.push_back(f[off++]);
                continue;
            }
            K c = CoeffOps<K>::neg(f[off].second / red->front().second);
            Mono m = mono_div(lt, red->front().first);
            f = merge_axpy(f, off, c, m, *red);
            off = 0;
        }
        return out;
    }

    std::vector<P> inter_reduce(std::vector<TV> basis) {
        // drop elements whose leading term is divisible by another's
        std::vector<char> keep(basis.size(), 1);
        for (size_t i = 0; i < basis.size(); ++i) {
            if (!keep[i]) continue;
            for (size_t j = 0; j < basis.size(); ++j) {
                if (i == j || !keep[j]) continue;
                const Mono& li = basis[i].front().first;
                const Mono& lj = basis[j].front().first;
                if (mono_divides(lj, li) && (li != lj || j < i)) {
                    keep[i] = 0;
                    break;
                }
            }
        }
        std::vector<TV> minimal;
        for (size_t i = 0; i < basis.size(); ++i)
            if (keep[i]) minimal.push_back(std::move(basis[i]));
        // tail-reduce each element against the others
        std::vector<P> out;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<TV> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            TV r = reduce_full(minimal[i], others);
            out.push_back(to_poly(make_monic(std::move(r))));
        }
        std::sort(out.begin(), out.end(), [&](const P& a, const P& b) {
            return ord_.less(poly_lt(a, ord_).first, poly_lt(b, ord_).first);
        });
        return out;
    }

    RingPtr ring_;
    TermOrder ord_;
    Budget budget_;
    long long steps_ = 0;
};

template <class K>
std::vector<Poly<K>> buchberger_reduced(const RingPtr& ring, const std::vector<Poly<K>>& gens,
                                        const TermOrder& ord, const Budget& budget = Budget(),
                                        std::optional<long> degree_cap = std::nullopt,
                                        bool* truncated = nullptr) {
    GBEngine<K> eng(ring, ord, budget);
    return eng.reduced_basis(gens, degree_cap, truncated);
}

template <class K>
Poly<K> normal_form(const Poly<K>& f, const std::vector<Poly<K>>& basis, const TermOrder& ord,
                    const Budget& budget = Budget()) {
    GBEngine<K> eng(f.ring, ord, budget);
    return eng.normal_form(f, basis);
}

// S-polynomial as a standalone operation (used by verification code).
template <class K>
Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g, const TermOrder& ord) {
    if (f.is_zero() || g.is_zero()) return Poly<K>(f.ring ? f.ring : g.ring);
    const auto& ltf = poly_lt(f, ord);
    const auto& ltg = poly_lt(g, ord);
    Mono lcm = mono_lcm(ltf.first, ltg.first);
    K cf = K(1) / ltf.second;
    K cg = K(1) / ltg.second;
    Poly<K> a = poly_mul_term(f, mono_div(lcm, ltf.first), cf);
    Poly<K> b = poly_mul_term(g, mono_div(lcm, ltg.first), cg);
    return poly_sub(a, b);
}

// Checks the Buchberger criterion: every S-polynomial reduces to zero.
template <class K>
bool is_groebner_basis(const std::vector<Poly<K>>& basis, const TermOrder& ord,
                       const Budget& budget = Budget()) {
    std::vector<Poly<K>> gs;
    for (const auto& g : basis)
        if (!g.is_zero()) gs.push_back(g);
    for (size_t i = 0; i < gs.size(); ++i)
        for (size_t j = i + 1; j < gs.size(); ++j) {
            Poly<K> s = s_polynomial(gs[i], gs[j], ord);
            if (!normal_form(s, gs, ord, budget).is_zero()) return false;
        }
    return true;
}

}  // namespace gradloci
