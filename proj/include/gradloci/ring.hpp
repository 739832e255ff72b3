#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gradloci/common.hpp"

namespace gradloci {

// A monomial is its exponent vector over the owning ring's symbols,
// parameters first, then fiber variables.  The empty product is the
// all-zero vector.
using Mono = std::vector<int>;

inline Mono mono_one(size_t n) { return Mono(n, 0); }

inline bool mono_is_one(const Mono& a) {
    for (int e : a)
        if (e) return false;
    return true;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool mono_divides(const Mono& a, const Mono& b) {  // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Mono mono_div(const Mono& a, const Mono& b) {  // a / b, assumes b | a
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline Mono mono_gcd(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

inline long mono_total_deg(const Mono& a) {
    long d = 0;
    for (int e : a) d += e;
    return d;
}

inline bool mono_coprime(const Mono& a, const Mono& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

// The tower A = K[a_1..a_m] inside P = A[x_1..x_k] with a weight per
// fiber variable; parameters are weight zero.  Instances are immutable
// and shared by pointer between polynomials.
class RingSpec {
public:
    RingSpec(std::vector<std::string> params, std::vector<std::string> vars,
             std::vector<long> var_weights)
        : params_(std::move(params)), vars_(std::move(vars)), weights_(std::move(var_weights)) {
        if (weights_.size() != vars_.size())
            throw InputError("weight count does not match variable count");
        int idx = 0;
        for (const auto& s : params_) {
            if (!index_.emplace(s, idx++).second) throw InputError("duplicate ring symbol: " + s);
        }
        for (const auto& s : vars_) {
            if (!index_.emplace(s, idx++).second) throw InputError("duplicate ring symbol: " + s);
        }
        full_weights_.assign(n(), 0);
        for (int j = 0; j < k(); ++j) full_weights_[m() + j] = weights_[j];
    }

    static std::shared_ptr<const RingSpec> make(std::vector<std::string> params,
                                                std::vector<std::string> vars,
                                                std::vector<long> var_weights) {
        return std::make_shared<const RingSpec>(std::move(params), std::move(vars),
                                                std::move(var_weights));
    }

    int m() const { return static_cast<int>(params_.size()); }
    int k() const { return static_cast<int>(vars_.size()); }
    int n() const { return m() + k(); }

    bool is_param(int i) const { return i < m(); }
    bool is_var(int i) const { return i >= m(); }

    const std::vector<std::string>& params() const { return params_; }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<long>& var_weights() const { return weights_; }
    const std::vector<long>& full_weights() const { return full_weights_; }

    const std::string& name(int i) const {
        return i < m() ? params_[static_cast<size_t>(i)] : vars_[static_cast<size_t>(i - m())];
    }

    long weight(int i) const { return full_weights_[static_cast<size_t>(i)]; }

    std::optional<int> index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    long w_deg(const Mono& a) const {
        long d = 0;
        for (int i = 0; i < n(); ++i) d += full_weights_[static_cast<size_t>(i)] * a[static_cast<size_t>(i)];
        return d;
    }

    bool operator==(const RingSpec& o) const {
        return params_ == o.params_ && vars_ == o.vars_ && weights_ == o.weights_;
    }
    bool operator!=(const RingSpec& o) const { return !(*this == o); }

    std::string describe() const {
        std::ostringstream os;
        os << "Q[";
        for (int i = 0; i < m(); ++i) os << (i ? "," : "") << params_[static_cast<size_t>(i)];
        os << "][";
        for (int j = 0; j < k(); ++j) os << (j ? "," : "") << vars_[static_cast<size_t>(j)];
        os << "]";
        return os.str();
    }

private:
    std::vector<std::string> params_;
    std::vector<std::string> vars_;
    std::vector<long> weights_;
    std::vector<long> full_weights_;
    std::map<std::string, int> index_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

// The parameter ring A as a standalone RingSpec (k = 0).
inline RingPtr base_ring(const RingSpec& r) {
    return RingSpec::make(r.params(), {}, {});
}

// The fiber ring K[X] (m = 0), keeping the fiber weights.
inline RingPtr fiber_ring(const RingSpec& r) {
    return RingSpec::make({}, r.vars(), r.var_weights());
}

enum class OrderKind { Lex, DegRevLex, WDegRevLex, Block };

// A term order on the monomials of one ring.  Block orders compare the
// masked positions first (used for elimination and for parametric
// computations with the fiber block above the parameter block).
class TermOrder {
public:
    static TermOrder lex(const RingSpec& r) { return TermOrder(OrderKind::Lex, r.n()); }

    static TermOrder degrevlex(const RingSpec& r) { return TermOrder(OrderKind::DegRevLex, r.n()); }

    // The ring's default graded order: compare by W-degree, ties by
    // degrevlex on the full exponent vector.
    static TermOrder wdegrevlex(const RingSpec& r) {
        TermOrder t(OrderKind::WDegRevLex, r.n());
        t.weights_ = r.full_weights();
        return t;
    }

    // Elimination order: the positions in `drop` form the top block.
    static TermOrder block_elim(const RingSpec& r, const std::vector<int>& drop) {
        TermOrder t(OrderKind::Block, r.n());
        t.mask_.assign(static_cast<size_t>(r.n()), 0);
        for (int i : drop) t.mask_[static_cast<size_t>(i)] = 1;
        t.inner_first_ = OrderKind::DegRevLex;
        t.inner_rest_ = OrderKind::WDegRevLex;
        t.weights_ = r.full_weights();
        return t;
    }

    // Fiber variables dominate parameters; used by the parametric
    // Groebner machinery.
    static TermOrder block_fiber_first(const RingSpec& r) {
        TermOrder t(OrderKind::Block, r.n());
        t.mask_.assign(static_cast<size_t>(r.n()), 0);
        for (int i = r.m(); i < r.n(); ++i) t.mask_[static_cast<size_t>(i)] = 1;
        t.inner_first_ = OrderKind::WDegRevLex;
        t.inner_rest_ = OrderKind::DegRevLex;
        t.weights_ = r.full_weights();
        return t;
    }

    OrderKind kind() const { return kind_; }
    const std::vector<char>& mask() const { return mask_; }

    // Three-way compare: negative if a < b, 0 if equal, positive if a > b.
    int cmp(const Mono& a, const Mono& b) const {
        switch (kind_) {
            case OrderKind::Lex:
                return cmp_lex(a, b, nullptr);
            case OrderKind::DegRevLex:
                return cmp_drl(a, b, nullptr, nullptr);
            case OrderKind::WDegRevLex:
                return cmp_wdrl(a, b, nullptr);
            case OrderKind::Block: {
                int c = cmp_on(inner_first_, a, b, &mask_, true);
                if (c) return c;
                return cmp_on(inner_rest_, a, b, &mask_, false);
            }
        }
        return 0;
    }

    bool less(const Mono& a, const Mono& b) const { return cmp(a, b) < 0; }
    bool greater(const Mono& a, const Mono& b) const { return cmp(a, b) > 0; }

    // Stable cache key.
    std::string key() const {
        std::ostringstream os;
        switch (kind_) {
            case OrderKind::Lex: os << "lex"; break;
            case OrderKind::DegRevLex: os << "drl"; break;
            case OrderKind::WDegRevLex: os << "wdrl"; break;
            case OrderKind::Block: os << "block"; break;
        }
        if (kind_ == OrderKind::WDegRevLex || kind_ == OrderKind::Block) {
            os << ";w=";
            for (long w : weights_) os << w << ",";
        }
        if (kind_ == OrderKind::Block) {
            os << ";m=";
            for (char c : mask_) os << (c ? '1' : '0');
            os << ";i1=" << static_cast<int>(inner_first_) << ";i2=" << static_cast<int>(inner_rest_);
        }
        return os.str();
    }

private:
    TermOrder(OrderKind k, int n) : kind_(k), n_(n) {}

    // mask==nullptr: all positions.  in_mask selects which side of the mask.
    static int cmp_lex_masked(const Mono& a, const Mono& b, const std::vector<char>* mask,
                              bool in_mask) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (mask && (((*mask)[i] != 0) != in_mask)) continue;
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    int cmp_lex(const Mono& a, const Mono& b, const std::vector<char>* mask) const {
        return cmp_lex_masked(a, b, mask, true);
    }

    static long masked_deg(const Mono& a, const std::vector<char>* mask, bool in_mask,
                           const std::vector<long>* w) {
        long d = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            if (mask && (((*mask)[i] != 0) != in_mask)) continue;
            d += w ? (*w)[i] * a[i] : a[i];
        }
        return d;
    }

    static int cmp_revlex_tail(const Mono& a, const Mono& b, const std::vector<char>* mask,
                               bool in_mask) {
        for (size_t i = a.size(); i-- > 0;) {
            if (mask && (((*mask)[i] != 0) != in_mask)) continue;
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // bigger last exponent => smaller
        }
        return 0;
    }

    static int cmp_drl_masked(const Mono& a, const Mono& b, const std::vector<char>* mask,
                              bool in_mask) {
        long da = masked_deg(a, mask, in_mask, nullptr);
        long db = masked_deg(b, mask, in_mask, nullptr);
        if (da != db) return da < db ? -1 : 1;
        return cmp_revlex_tail(a, b, mask, in_mask);
    }

    int cmp_drl(const Mono& a, const Mono& b, const std::vector<char>* mask,
                const bool* in_mask) const {
        return cmp_drl_masked(a, b, mask, in_mask ? *in_mask : true);
    }

    int cmp_wdrl_masked(const Mono& a, const Mono& b, const std::vector<char>* mask,
                        bool in_mask) const {
        long da = masked_deg(a, mask, in_mask, &weights_);
        long db = masked_deg(b, mask, in_mask, &weights_);
        if (da != db) return da < db ? -1 : 1;
        return cmp_drl_masked(a, b, mask, in_mask);
    }

    int cmp_wdrl(const Mono& a, const Mono& b, const std::vector<char>* mask) const {
        return cmp_wdrl_masked(a, b, mask, true);
    }

    int cmp_on(OrderKind k, const Mono& a, const Mono& b, const std::vector<char>* mask,
               bool in_mask) const {
        switch (k) {
            case OrderKind::Lex: return cmp_lex_masked(a, b, mask, in_mask);
            case OrderKind::DegRevLex: return cmp_drl_masked(a, b, mask, in_mask);
            case OrderKind::WDegRevLex: return cmp_wdrl_masked(a, b, mask, in_mask);
            default: throw DomainError("nested block orders are not supported");
        }
    }

    OrderKind kind_;
    int n_;
    std::vector<long> weights_;
    std::vector<char> mask_;
    OrderKind inner_first_ = OrderKind::DegRevLex;
    OrderKind inner_rest_ = OrderKind::DegRevLex;
};

}  // namespace gradloci
