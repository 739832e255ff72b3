#pragma once

#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "gradloci/rational.hpp"
#include "gradloci/ring.hpp"

namespace gradloci {

template <class K>
struct CoeffOps;  // is_zero/is_one/neg/str/cmp per coefficient field

template <>
struct CoeffOps<Rational> {
    static bool is_zero(const Rational& a) { return sgn(a) == 0; }
    static bool is_one(const Rational& a) { return a == 1; }
    static Rational neg(const Rational& a) { return -a; }
    static std::string str(const Rational& a) { return a.get_str(); }
    static int cmp(const Rational& a, const Rational& b) { return ::cmp(a, b); }
};

// Sparse multivariate polynomial over an exact coefficient field K.
// Terms are kept combined, free of zero coefficients, and sorted in
// descending exponent-lex order; this makes equality structural.
template <class K>
class Poly {
public:
    using Term = std::pair<Mono, K>;

    Poly() = default;
    explicit Poly(RingPtr r) : ring(std::move(r)) {}

    RingPtr ring;
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }

    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && mono_is_one(terms[0].first));
    }

    size_t size() const { return terms.size(); }

    bool operator==(const Poly& o) const { return terms == o.terms; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Canonicalize an arbitrary term list in place.
    void normalize() {
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.first > b.first; });
        size_t out = 0;
        for (size_t i = 0; i < terms.size();) {
            size_t j = i + 1;
            K acc = terms[i].second;
            while (j < terms.size() && terms[j].first == terms[i].first) {
                acc += terms[j].second;
                ++j;
            }
            if (!CoeffOps<K>::is_zero(acc)) {
                if (out != i) terms[out].first = std::move(terms[i].first);
                terms[out].second = std::move(acc);
                ++out;
            }
            i = j;
        }
        terms.resize(out);
    }
};

using PolyQ = Poly<Rational>;

template <class K>
Poly<K> poly_zero(const RingPtr& r) {
    return Poly<K>(r);
}

inline PolyQ polyq_zero(const RingPtr& r) { return PolyQ(r); }

template <class K>
Poly<K> poly_term(const RingPtr& r, Mono m, K c) {
    Poly<K> p(r);
    if (!CoeffOps<K>::is_zero(c)) p.terms.emplace_back(std::move(m), std::move(c));
    return p;
}

template <class K>
Poly<K> poly_const(const RingPtr& r, K c) {
    return poly_term<K>(r, mono_one(static_cast<size_t>(r->n())), std::move(c));
}

inline PolyQ polyq_const(const RingPtr& r, const Rational& c) { return poly_const<Rational>(r, c); }

inline PolyQ polyq_var(const RingPtr& r, int i) {
    Mono m = mono_one(static_cast<size_t>(r->n()));
    m[static_cast<size_t>(i)] = 1;
    return poly_term<Rational>(r, std::move(m), Rational(1));
}

template <class K>
Poly<K> poly_add(const Poly<K>& f, const Poly<K>& g) {
    Poly<K> r(f.ring ? f.ring : g.ring);
    r.terms.reserve(f.terms.size() + g.terms.size());
    size_t i = 0, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
        if (f.terms[i].first == g.terms[j].first) {
            K c = f.terms[i].second + g.terms[j].second;
            if (!CoeffOps<K>::is_zero(c)) r.terms.emplace_back(f.terms[i].first, std::move(c));
            ++i, ++j;
        } else if (f.terms[i].first > g.terms[j].first) {
            r.terms.push_back(f.terms[i++]);
        } else {
            r.terms.push_back(g.terms[j++]);
        }
    }
    for (; i < f.terms.size(); ++i) r.terms.push_back(f.terms[i]);
    for (; j < g.terms.size(); ++j) r.terms.push_back(g.terms[j]);
    return r;
}

template <class K>
Poly<K> poly_neg(const Poly<K>& f) {
    Poly<K> r(f.ring);
    r.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) r.terms.emplace_back(t.first, CoeffOps<K>::neg(t.second));
    return r;
}

template <class K>
Poly<K> poly_sub(const Poly<K>& f, const Poly<K>& g) {
    return poly_add(f, poly_neg(g));
}

// f + c * x^a * g, the workhorse of polynomial reduction.
template <class K>
Poly<K> poly_axpy(const Poly<K>& f, const K& c, const Mono& a, const Poly<K>& g) {
    Poly<K> r(f.ring ? f.ring : g.ring);
    r.terms.reserve(f.terms.size() + g.terms.size());
    size_t i = 0, j = 0;
    auto gmono = [&](size_t jj) { return mono_mul(g.terms[jj].first, a); };
    while (i < f.terms.size() && j < g.terms.size()) {
        Mono gm = gmono(j);
        if (f.terms[i].first == gm) {
            K v = f.terms[i].second + c * g.terms[j].second;
            if (!CoeffOps<K>::is_zero(v)) r.terms.emplace_back(std::move(gm), std::move(v));
            ++i, ++j;
        } else if (f.terms[i].first > gm) {
            r.terms.push_back(f.terms[i++]);
        } else {
            K v = c * g.terms[j].second;
            r.terms.emplace_back(std::move(gm), std::move(v));
            ++j;
        }
    }
    for (; i < f.terms.size(); ++i) r.terms.push_back(f.terms[i]);
    for (; j < g.terms.size(); ++j) {
        K v = c * g.terms[j].second;
        r.terms.emplace_back(gmono(j), std::move(v));
    }
    return r;
}

template <class K>
Poly<K> poly_mul_term(const Poly<K>& f, const Mono& m, const K& c) {
    Poly<K> r(f.ring);
    if (CoeffOps<K>::is_zero(c)) return r;
    r.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) {
        K v = t.second * c;
        if (!CoeffOps<K>::is_zero(v)) r.terms.emplace_back(mono_mul(t.first, m), std::move(v));
    }
    return r;
}

template <class K>
Poly<K> poly_mul_scalar(const Poly<K>& f, const K& c) {
    return poly_mul_term(f, mono_one(f.terms.empty() ? (f.ring ? f.ring->n() : 0) : f.terms[0].first.size()), c);
}

template <class K>
Poly<K> poly_mul(const Poly<K>& f, const Poly<K>& g) {
    Poly<K> r(f.ring ? f.ring : g.ring);
    if (f.is_zero() || g.is_zero()) return r;
    std::map<Mono, K> acc;
    for (const auto& ft : f.terms)
        for (const auto& gt : g.terms) {
            Mono m = mono_mul(ft.first, gt.first);
            K v = ft.second * gt.second;
            auto it = acc.find(m);
            if (it == acc.end())
                acc.emplace(std::move(m), std::move(v));
            else
                it->second += v;
        }
    r.terms.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
        if (!CoeffOps<K>::is_zero(it->second)) r.terms.emplace_back(it->first, it->second);
    return r;
}

template <class K>
Poly<K> poly_pow(const Poly<K>& f, long e) {
    if (e < 0) throw DomainError("negative polynomial power");
    Poly<K> r = poly_const<K>(f.ring, K(1));
    Poly<K> base = f;
    while (e > 0) {
        if (e & 1) r = poly_mul(r, base);
        e >>= 1;
        if (e) base = poly_mul(base, base);
    }
    return r;
}

template <class K>
Poly<K> operator+(const Poly<K>& a, const Poly<K>& b) { return poly_add(a, b); }
template <class K>
Poly<K> operator-(const Poly<K>& a, const Poly<K>& b) { return poly_sub(a, b); }
template <class K>
Poly<K> operator*(const Poly<K>& a, const Poly<K>& b) { return poly_mul(a, b); }
template <class K>
Poly<K> operator-(const Poly<K>& a) { return poly_neg(a); }

// Leading term with respect to an arbitrary order (linear scan).
template <class K>
const typename Poly<K>::Term& poly_lt(const Poly<K>& f, const TermOrder& ord) {
    if (f.is_zero()) throw DomainError("leading term of zero polynomial");
    size_t best = 0;
    for (size_t i = 1; i < f.terms.size(); ++i)
        if (ord.greater(f.terms[i].first, f.terms[best].first)) best = i;
    return f.terms[best];
}

template <class K>
long poly_total_deg(const Poly<K>& f) {
    long d = -1;
    for (const auto& t : f.terms) d = std::max(d, mono_total_deg(t.first));
    return d;
}

// All distinct W-degrees among the terms; empty for the zero polynomial.
template <class K>
std::set<long> poly_w_degrees(const Poly<K>& f) {
    std::set<long> ds;
    for (const auto& t : f.terms) ds.insert(f.ring->w_deg(t.first));
    return ds;
}

template <class K>
bool poly_is_homogeneous(const Poly<K>& f) {
    return poly_w_degrees(f).size() <= 1;
}

// W-degree of a nonzero homogeneous polynomial.
template <class K>
long poly_w_degree(const Poly<K>& f) {
    auto ds = poly_w_degrees(f);
    if (ds.empty()) throw DomainError("degree of the zero polynomial is undefined");
    if (ds.size() > 1) throw DomainError("polynomial is not W-homogeneous");
    return *ds.begin();
}

template <class K>
Poly<K> poly_derivative(const Poly<K>& f, int pos) {
    Poly<K> r(f.ring);
    for (const auto& t : f.terms) {
        int e = t.first[static_cast<size_t>(pos)];
        if (e == 0) continue;
        Mono m = t.first;
        m[static_cast<size_t>(pos)] = e - 1;
        K c = t.second * K(e);
        r.terms.emplace_back(std::move(m), std::move(c));
    }
    r.normalize();
    return r;
}

inline Rational polyq_eval(const PolyQ& f, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != f.ring->n())
        throw InputError("evaluation point has wrong length");
    Rational acc(0);
    for (const auto& t : f.terms) {
        Rational v = t.second;
        for (size_t i = 0; i < t.first.size(); ++i)
            for (int e = 0; e < t.first[i]; ++e) v *= point[i];
        acc += v;
    }
    return acc;
}

// Image under the evaluation a_i -> gamma_i, x_j -> x_j; lands in the
// fiber ring K[X].
inline PolyQ specialize(const PolyQ& f, const std::vector<Rational>& gamma,
                        const RingPtr& fiber) {
    const RingSpec& R = *f.ring;
    if (static_cast<int>(gamma.size()) != R.m()) throw InputError("point length != parameter count");
    if (fiber->k() != R.k()) throw InputError("fiber ring mismatch");
    PolyQ r(fiber);
    for (const auto& t : f.terms) {
        Rational v = t.second;
        for (int i = 0; i < R.m(); ++i)
            for (int e = 0; e < t.first[static_cast<size_t>(i)]; ++e) v *= gamma[static_cast<size_t>(i)];
        if (rat_is_zero(v)) continue;
        Mono m(static_cast<size_t>(R.k()));
        for (int j = 0; j < R.k(); ++j) m[static_cast<size_t>(j)] = t.first[static_cast<size_t>(R.m() + j)];
        r.terms.emplace_back(std::move(m), std::move(v));
    }
    r.normalize();
    return r;
}

// Substitute the symbol at `pos` by g (same ring).
template <class K>
Poly<K> poly_substitute(const Poly<K>& f, int pos, const Poly<K>& g) {
    std::map<int, Poly<K>> pows;  // g^e cache
    Poly<K> r(f.ring);
    std::vector<typename Poly<K>::Term> keep;
    for (const auto& t : f.terms) {
        int e = t.first[static_cast<size_t>(pos)];
        if (e == 0) {
            keep.push_back(t);
            continue;
        }
        auto it = pows.find(e);
        if (it == pows.end()) it = pows.emplace(e, poly_pow(g, e)).first;
        Mono m = t.first;
        m[static_cast<size_t>(pos)] = 0;
        r = poly_add(r, poly_mul_term(it->second, m, t.second));
    }
    Poly<K> kept(f.ring);
    kept.terms = std::move(keep);
    return poly_add(r, kept);
}

// Substitute every symbol by a polynomial over a target ring
// (used for curve parametrizations).
inline PolyQ polyq_substitute_all(const PolyQ& f, const std::vector<PolyQ>& images,
                                  const RingPtr& target) {
    if (static_cast<int>(images.size()) != f.ring->n())
        throw InputError("substitution image count mismatch");
    PolyQ acc(target);
    for (const auto& t : f.terms) {
        PolyQ v = polyq_const(target, t.second);
        for (size_t i = 0; i < t.first.size(); ++i)
            if (t.first[i] > 0) v = poly_mul(v, poly_pow(images[i], t.first[i]));
        acc = poly_add(acc, v);
    }
    return acc;
}

// Carry a polynomial into another ring by matching symbol names.
// Throws if a symbol actually used by f is missing from the target.
template <class K>
Poly<K> poly_map_to_ring(const Poly<K>& f, const RingPtr& target) {
    const RingSpec& S = *f.ring;
    std::vector<int> where(static_cast<size_t>(S.n()), -1);
    for (int i = 0; i < S.n(); ++i) {
        auto idx = target->index_of(S.name(i));
        where[static_cast<size_t>(i)] = idx ? *idx : -1;
    }
    Poly<K> r(target);
    for (const auto& t : f.terms) {
        Mono m(static_cast<size_t>(target->n()), 0);
        for (size_t i = 0; i < t.first.size(); ++i) {
            if (t.first[i] == 0) continue;
            if (where[i] < 0)
                throw InputError("symbol " + S.name(static_cast<int>(i)) + " not present in target ring");
            m[static_cast<size_t>(where[i])] = t.first[i];
        }
        r.terms.emplace_back(std::move(m), t.second);
    }
    r.normalize();
    return r;
}

template <class K>
std::vector<char> poly_support(const Poly<K>& f) {
    std::vector<char> s(f.ring ? static_cast<size_t>(f.ring->n()) : 0, 0);
    for (const auto& t : f.terms)
        for (size_t i = 0; i < t.first.size(); ++i)
            if (t.first[i] > 0) s[i] = 1;
    return s;
}

template <class K>
int poly_deg_in(const Poly<K>& f, int pos) {
    int d = 0;
    for (const auto& t : f.terms) d = std::max(d, t.first[static_cast<size_t>(pos)]);
    return d;
}

// Coefficient of v^d where v is the symbol at `pos` (a polynomial in the
// remaining symbols, same ring).
template <class K>
Poly<K> poly_coeff_of(const Poly<K>& f, int pos, int d) {
    Poly<K> r(f.ring);
    for (const auto& t : f.terms) {
        if (t.first[static_cast<size_t>(pos)] != d) continue;
        Mono m = t.first;
        m[static_cast<size_t>(pos)] = 0;
        r.terms.emplace_back(std::move(m), t.second);
    }
    r.normalize();
    return r;
}

// Total order on polynomials (arbitrary but fixed), for deduplication.
template <class K>
int poly_cmp(const Poly<K>& a, const Poly<K>& b) {
    size_t n = std::min(a.terms.size(), b.terms.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.terms[i].first != b.terms[i].first) return a.terms[i].first < b.terms[i].first ? -1 : 1;
        int c = CoeffOps<K>::cmp(a.terms[i].second, b.terms[i].second);
        if (c) return c;
    }
    if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size() ? -1 : 1;
    return 0;
}

template <class K>
struct PolyLess {
    bool operator()(const Poly<K>& a, const Poly<K>& b) const { return poly_cmp(a, b) < 0; }
};

// ---- printing ----------------------------------------------------------

inline std::string mono_to_string(const Mono& m, const RingSpec& r) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << "*";
        os << r.name(static_cast<int>(i));
        if (m[i] > 1) os << "^" << m[i];
        first = false;
    }
    return os.str();
}

// Canonical printer: terms descending under the given order (by default
// the ring's weighted graded order).
template <class K>
std::string poly_to_string(const Poly<K>& f, const TermOrder* ord = nullptr) {
    if (f.is_zero()) return "0";
    std::vector<typename Poly<K>::Term> ts = f.terms;
    TermOrder def = ord ? *ord : TermOrder::wdegrevlex(*f.ring);
    std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
        return def.greater(a.first, b.first);
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& t : ts) {
        std::string cs = CoeffOps<K>::str(t.second);
        bool neg = !cs.empty() && cs[0] == '-';
        std::string abs = neg ? cs.substr(1) : cs;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        std::string ms = mono_to_string(t.first, *f.ring);
        if (ms.empty())
            os << abs;
        else if (abs == "1")
            os << ms;
        else
            os << abs << "*" << ms;
        first = false;
    }
    return os.str();
}

}  // namespace gradloci
