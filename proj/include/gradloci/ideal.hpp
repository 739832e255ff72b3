#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <unordered_map>

#include "gradloci/groebner.hpp"
#include "gradloci/parser.hpp"
#include "gradloci/ratfunc.hpp"

namespace gradloci {

struct GroebnerBasis {
    TermOrder order;
    std::vector<PolyQ> elements;
    bool reduced = true;
    bool truncated = false;
    std::optional<long> cap;
};

// Combinatorial Krull dimension of a monomial ideal given the supports of
// its minimal generators: the largest variable subset meeting no support.
inline int dimension_of_monomial_supports(std::vector<uint64_t> supports, int nvars) {
    if (nvars > 62) throw InputError("dimension computation limited to 62 symbols");
    for (uint64_t s : supports)
        if (s == 0) return -1;  // a unit among the leading terms: empty scheme
    std::sort(supports.begin(), supports.end());
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    std::unordered_map<uint64_t, int> memo;
    uint64_t all = nvars == 0 ? 0 : ((nvars == 64 ? ~0ull : ((1ull << nvars) - 1)));

    std::function<int(uint64_t)> rec = [&](uint64_t allowed) -> int {
        auto it = memo.find(allowed);
        if (it != memo.end()) return it->second;
        const uint64_t* blocker = nullptr;
        for (const auto& s : supports)
            if ((s & ~allowed) == 0) {
                blocker = &s;
                break;
            }
        int best;
        if (!blocker) {
            best = __builtin_popcountll(allowed);
        } else {
            best = 0;
            uint64_t bits = *blocker;
            while (bits) {
                uint64_t b = bits & (~bits + 1);
                bits ^= b;
                best = std::max(best, rec(allowed & ~b));
            }
        }
        memo.emplace(allowed, best);
        return best;
    };
    return rec(all);
}

// An ideal of the polynomial ring with a cache of reduced Groebner bases
// keyed by term order.  The cache is guarded by a mutex; all queries are
// otherwise read-only, and distinct ideals share no mutable state.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<PolyQ> gens) : ring_(std::move(ring)) {
        for (auto& g : gens)
            if (!g.is_zero()) gens_.push_back(std::move(g));
    }

    static Ideal zero(const RingPtr& r) { return Ideal(r, {}); }
    static Ideal unit(const RingPtr& r) { return Ideal(r, {polyq_const(r, Rational(1))}); }
    static Ideal of(const RingPtr& r, const std::vector<std::string>& texts) {
        return Ideal(r, parse_polys(texts, r));
    }

    Ideal(const Ideal& o) : ring_(o.ring_), gens_(o.gens_) {
        std::lock_guard<std::mutex> lk(o.mu_);
        cache_ = o.cache_;
    }
    Ideal& operator=(const Ideal& o) {
        if (this != &o) {
            ring_ = o.ring_;
            gens_ = o.gens_;
            std::lock_guard<std::mutex> lk(o.mu_);
            cache_ = o.cache_;
        }
        return *this;
    }
    Ideal(Ideal&& o) noexcept : ring_(std::move(o.ring_)), gens_(std::move(o.gens_)) {
        std::lock_guard<std::mutex> lk(o.mu_);
        cache_ = std::move(o.cache_);
    }
    Ideal& operator=(Ideal&& o) noexcept {
        if (this != &o) {
            ring_ = std::move(o.ring_);
            gens_ = std::move(o.gens_);
            std::lock_guard<std::mutex> lk(o.mu_);
            cache_ = std::move(o.cache_);
        }
        return *this;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<PolyQ>& gens() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    TermOrder default_order() const { return TermOrder::wdegrevlex(*ring_); }

    const GroebnerBasis& groebner(const TermOrder& ord, const Budget& budget = Budget(),
                                  std::optional<long> cap = std::nullopt) const {
        std::string key = ord.key();
        if (cap) key += ";cap=" + std::to_string(*cap);
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return *it->second;
        }
        bool truncated = false;
        auto elems = buchberger_reduced<Rational>(ring_, gens_, ord, budget, cap, &truncated);
        auto gb = std::make_shared<GroebnerBasis>(
            GroebnerBasis{ord, std::move(elems), true, truncated, cap});
        std::lock_guard<std::mutex> lk(mu_);
        auto [it, inserted] = cache_.emplace(key, std::move(gb));
        return *it->second;
    }

    const GroebnerBasis& groebner(const Budget& budget = Budget()) const {
        return groebner(default_order(), budget);
    }

    PolyQ nf(const PolyQ& f, const Budget& budget = Budget()) const {
        if (gens_.empty()) return f;
        const auto& gb = groebner(budget);
        return normal_form(f, gb.elements, gb.order, budget);
    }

    bool contains_poly(const PolyQ& f, const Budget& budget = Budget()) const {
        return nf(f, budget).is_zero();
    }

    // J subseteq this
    bool contains(const Ideal& J, const Budget& budget = Budget()) const {
        for (const auto& g : J.gens_)
            if (!contains_poly(g, budget)) return false;
        return true;
    }

    bool equals(const Ideal& J, const Budget& budget = Budget()) const {
        return contains(J, budget) && J.contains(*this, budget);
    }

    bool is_unit_ideal(const Budget& budget = Budget()) const {
        if (gens_.empty()) return false;
        const auto& gb = groebner(budget);
        return gb.elements.size() == 1 && gb.elements[0].is_constant();
    }

    // Generators of I cap Q[remaining symbols]; the result lives in the
    // ring with `drop_names` removed.
    Ideal eliminate(const std::vector<std::string>& drop_names,
                    const Budget& budget = Budget()) const {
        std::vector<int> drop;
        for (const auto& nm : drop_names) {
            auto idx = ring_->index_of(nm);
            if (!idx) throw InputError("eliminate: unknown symbol " + nm);
            drop.push_back(*idx);
        }
        std::vector<char> is_drop(static_cast<size_t>(ring_->n()), 0);
        for (int i : drop) is_drop[static_cast<size_t>(i)] = 1;

        std::vector<std::string> nparams, nvars;
        std::vector<long> nweights;
        for (int i = 0; i < ring_->m(); ++i)
            if (!is_drop[static_cast<size_t>(i)]) nparams.push_back(ring_->name(i));
        for (int j = 0; j < ring_->k(); ++j)
            if (!is_drop[static_cast<size_t>(ring_->m() + j)]) {
                nvars.push_back(ring_->vars()[static_cast<size_t>(j)]);
                nweights.push_back(ring_->var_weights()[static_cast<size_t>(j)]);
            }
        RingPtr target = RingSpec::make(nparams, nvars, nweights);
        if (drop.empty()) {
            std::vector<PolyQ> same;
            for (const auto& g : gens_) same.push_back(poly_map_to_ring(g, target));
            return Ideal(target, std::move(same));
        }

        const auto& gb = groebner(TermOrder::block_elim(*ring_, drop), budget);
        std::vector<PolyQ> kept;
        for (const auto& g : gb.elements) {
            auto supp = poly_support(g);
            bool uses = false;
            for (int i : drop)
                if (supp[static_cast<size_t>(i)]) {
                    uses = true;
                    break;
                }
            if (!uses) kept.push_back(poly_map_to_ring(g, target));
        }
        return Ideal(target, std::move(kept));
    }

    // I cap J via the auxiliary-variable construction t*I + (1-t)*J.
    Ideal intersect(const Ideal& J, const Budget& budget = Budget()) const {
        if (*ring_ != *J.ring_) throw InputError("intersect: different rings");
        if (is_zero_ideal() || J.is_zero_ideal()) return Ideal::zero(ring_);
        std::vector<std::string> vs = ring_->vars();
        std::vector<long> ws = ring_->var_weights();
        vs.push_back("@t");
        ws.push_back(1);
        RingPtr ext = RingSpec::make(ring_->params(), vs, ws);
        PolyQ t = polyq_var(ext, *ext->index_of("@t"));
        PolyQ one_minus_t = poly_sub(polyq_const(ext, Rational(1)), t);
        std::vector<PolyQ> gens;
        for (const auto& f : gens_) gens.push_back(poly_mul(t, poly_map_to_ring(f, ext)));
        for (const auto& g : J.gens_) gens.push_back(poly_mul(one_minus_t, poly_map_to_ring(g, ext)));
        Ideal aux(ext, std::move(gens));
        Ideal elim = aux.eliminate({"@t"}, budget);
        std::vector<PolyQ> back;
        for (const auto& f : elim.gens()) back.push_back(poly_map_to_ring(f, ring_));
        return Ideal(ring_, std::move(back));
    }

    // Ideal quotient (I : f) = (I cap <f>) / f.
    Ideal quotient(const PolyQ& f, const Budget& budget = Budget()) const {
        if (f.is_zero()) throw DomainError("ideal quotient by zero");
        Ideal fI(ring_, {f});
        Ideal inter = intersect(fI, budget);
        std::vector<PolyQ> qs;
        for (const auto& g : inter.gens()) {
            auto q = polyq_exact_div(g, f);
            if (!q) throw DomainError("quotient: generator not divisible (internal)");
            qs.push_back(std::move(*q));
        }
        if (qs.empty() && is_zero_ideal()) return Ideal::zero(ring_);
        return Ideal(ring_, std::move(qs));
    }

    // (I : J) = intersection of (I : g) over generators g of J.
    Ideal quotient(const Ideal& J, const Budget& budget = Budget()) const {
        if (J.is_zero_ideal()) return Ideal::unit(ring_);
        std::optional<Ideal> acc;
        for (const auto& g : J.gens_) {
            Ideal qi = quotient(g, budget);
            acc = acc ? acc->intersect(qi, budget) : qi;
        }
        return *acc;
    }

    // f in Rad(I), decided by the Rabinowitsch trick in an extended ring.
    bool radical_contains(const PolyQ& f, const Budget& budget = Budget()) const {
        if (f.is_zero()) return true;
        std::vector<std::string> vs = ring_->vars();
        std::vector<long> ws = ring_->var_weights();
        vs.push_back("@rab");
        ws.push_back(1);
        RingPtr ext = RingSpec::make(ring_->params(), vs, ws);
        std::vector<PolyQ> gens;
        for (const auto& g : gens_) gens.push_back(poly_map_to_ring(g, ext));
        PolyQ y = polyq_var(ext, *ext->index_of("@rab"));
        gens.push_back(poly_sub(polyq_const(ext, Rational(1)), poly_mul(y, poly_map_to_ring(f, ext))));
        auto gb = buchberger_reduced<Rational>(ext, gens, TermOrder::degrevlex(*ext), budget);
        return gb.size() == 1 && gb[0].is_constant();
    }

    // Krull dimension of the quotient ring; empty result for the unit
    // ideal (empty scheme), never a -1 sentinel.
    std::optional<long> krull_dimension(const Budget& budget = Budget()) const {
        if (gens_.empty()) return ring_->n();
        const auto& gb = groebner(budget);
        if (gb.elements.size() == 1 && gb.elements[0].is_constant()) return std::nullopt;
        std::vector<uint64_t> supports;
        for (const auto& g : gb.elements) {
            const Mono& lt = poly_lt(g, gb.order).first;
            uint64_t s = 0;
            for (size_t i = 0; i < lt.size(); ++i)
                if (lt[i] > 0) s |= 1ull << i;
            supports.push_back(s);
        }
        return dimension_of_monomial_supports(std::move(supports), ring_->n());
    }

private:
    RingPtr ring_;
    std::vector<PolyQ> gens_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, std::shared_ptr<const GroebnerBasis>> cache_;
};

// Substitute all fiber variables by zero; the result lives in the base ring.
inline PolyQ vars_to_zero(const PolyQ& f, const RingPtr& base) {
    PolyQ out(base);
    const RingSpec& R = *f.ring;
    for (const auto& t : f.terms) {
        bool pure = true;
        for (int j = 0; j < R.k() && pure; ++j)
            if (t.first[static_cast<size_t>(R.m() + j)] > 0) pure = false;
        if (!pure) continue;
        Mono m(static_cast<size_t>(R.m()));
        for (int i = 0; i < R.m(); ++i) m[static_cast<size_t>(i)] = t.first[static_cast<size_t>(i)];
        out.terms.emplace_back(std::move(m), t.second);
    }
    out.normalize();
    return out;
}

// Minimal homogeneous generating subtuple.  Forward pass: candidates
// ascending by W-degree, dropped when they lie in the ideal of the ones
// kept so far (decided by a degree-truncated basis, which is sound for
// homogeneous membership up to the cap).  A backward pass then removes
// elements that became redundant through later-kept ones; this matters
// because weight-zero parameters give infinite-dimensional graded pieces.
inline std::vector<PolyQ> minimal_homogeneous_generators(const RingPtr& ring,
                                                         const std::vector<PolyQ>& gens,
                                                         const Budget& budget = Budget()) {
    std::vector<PolyQ> sorted;
    for (const auto& g : gens)
        if (!g.is_zero()) sorted.push_back(g);
    for (const auto& g : sorted)
        if (!poly_is_homogeneous(g))
            throw InputError("minimal generators require homogeneous input");
    std::stable_sort(sorted.begin(), sorted.end(), [](const PolyQ& a, const PolyQ& b) {
        return poly_w_degree(a) < poly_w_degree(b);
    });
    TermOrder ord = TermOrder::wdegrevlex(*ring);
    auto member = [&](const PolyQ& g, const std::vector<PolyQ>& of) {
        if (of.empty()) return false;
        long d = poly_w_degree(g);
        auto gb = buchberger_reduced<Rational>(ring, of, ord, budget, d, nullptr);
        return normal_form(g, gb, ord, budget).is_zero();
    };
    std::vector<PolyQ> kept;
    for (const auto& g : sorted)
        if (!member(g, kept)) kept.push_back(g);
    // backward elimination
    for (size_t i = kept.size(); i-- > 0;) {
        std::vector<PolyQ> others;
        others.reserve(kept.size() - 1);
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        if (member(kept[i], others)) kept.erase(kept.begin() + static_cast<long>(i));
    }
    return kept;
}

}  // namespace gradloci
