#pragma once

#include "gradloci/ideal.hpp"

namespace gradloci {

// One locally closed cell V(E) \ V(H) in the base space.  E and H
// generate ideals of the parameter ring; a point lies in the cell iff
// all of E vanishes and not all of H vanishes.  H = {1} removes nothing.
struct Cell {
    std::vector<PolyQ> eqs;
    std::vector<PolyQ> ineqs;
};

// Finite union of cells; emptiness is decided over the algebraic
// closure via radical membership.
class ConstructibleSet {
public:
    ConstructibleSet() = default;
    explicit ConstructibleSet(RingPtr ring) : ring_(std::move(ring)) {}
    ConstructibleSet(RingPtr ring, std::vector<Cell> cells)
        : ring_(std::move(ring)), cells_(std::move(cells)) {}

    static ConstructibleSet empty(const RingPtr& r) { return ConstructibleSet(r); }
    static ConstructibleSet full(const RingPtr& r) {
        return ConstructibleSet(r, {Cell{{}, {polyq_const(r, Rational(1))}}});
    }
    static ConstructibleSet closed(const RingPtr& r, std::vector<PolyQ> eqs) {
        return ConstructibleSet(r, {Cell{std::move(eqs), {polyq_const(r, Rational(1))}}});
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Cell>& cells() const { return cells_; }
    void add_cell(Cell c) { cells_.push_back(std::move(c)); }

    bool contains_point(const std::vector<Rational>& p) const {
        for (const auto& c : cells_) {
            bool eqs_ok = true;
            for (const auto& e : c.eqs)
                if (!rat_is_zero(polyq_eval(e, p))) {
                    eqs_ok = false;
                    break;
                }
            if (!eqs_ok) continue;
            for (const auto& h : c.ineqs)
                if (!rat_is_zero(polyq_eval(h, p))) return true;
        }
        return false;
    }

private:
    RingPtr ring_;
    std::vector<Cell> cells_;
};

namespace detail {

inline bool ideal_has_unit_gen(const std::vector<PolyQ>& gens) {
    for (const auto& g : gens)
        if (!g.is_zero() && g.is_constant()) return true;
    return false;
}

inline void sort_dedup(std::vector<PolyQ>& v) {
    std::sort(v.begin(), v.end(), PolyLess<Rational>());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Structural simplification; nullopt when the cell is plainly empty.
inline std::optional<Cell> normalize_cell(const RingPtr& ring, Cell c) {
    std::vector<PolyQ> eqs;
    for (auto& e : c.eqs) {
        if (e.is_zero()) continue;
        if (e.is_constant()) return std::nullopt;  // V(1) is empty
        eqs.push_back(std::move(e));
    }
    sort_dedup(eqs);
    std::vector<PolyQ> ineqs;
    bool whole = false;
    for (auto& h : c.ineqs) {
        if (h.is_zero()) continue;  // vanishes everywhere, removes nothing
        if (h.is_constant()) {
            whole = true;
            continue;
        }
        ineqs.push_back(std::move(h));
    }
    if (whole)
        ineqs = {polyq_const(ring, Rational(1))};
    else if (ineqs.empty())
        return std::nullopt;  // V(0) removes everything
    else
        sort_dedup(ineqs);
    return Cell{std::move(eqs), std::move(ineqs)};
}

}  // namespace detail

inline bool cell_is_empty(const RingPtr& ring, const Cell& c, const Budget& budget = Budget()) {
    auto n = detail::normalize_cell(ring, c);
    if (!n) return true;
    Ideal E(ring, n->eqs);
    for (const auto& h : n->ineqs)
        if (!E.radical_contains(h, budget)) return false;
    return true;
}

// Drop empty cells and duplicates.
inline ConstructibleSet pruned(const ConstructibleSet& S, const Budget& budget = Budget()) {
    ConstructibleSet out(S.ring());
    std::set<std::string> seen;
    for (const auto& c : S.cells()) {
        auto n = detail::normalize_cell(S.ring(), c);
        if (!n) continue;
        std::string key;
        for (const auto& e : n->eqs) key += poly_to_string(e) + ";";
        key += "|";
        for (const auto& h : n->ineqs) key += poly_to_string(h) + ";";
        if (!seen.insert(std::move(key)).second) continue;
        if (cell_is_empty(S.ring(), *n, budget)) continue;
        out.add_cell(std::move(*n));
    }
    return out;
}

inline bool is_empty(const ConstructibleSet& S, const Budget& budget = Budget()) {
    for (const auto& c : S.cells())
        if (!cell_is_empty(S.ring(), c, budget)) return false;
    return true;
}

inline ConstructibleSet set_union(const ConstructibleSet& S, const ConstructibleSet& T) {
    if (*S.ring() != *T.ring()) throw InputError("constructible union: ring mismatch");
    ConstructibleSet out(S.ring(), S.cells());
    for (const auto& c : T.cells()) out.add_cell(c);
    return out;
}

namespace detail {

// (V(E1)\V(H1)) cap (V(E2)\V(H2)) = V(E1+E2) \ V(H1 cap H2)
inline Cell cell_intersect(const RingPtr& ring, const Cell& a, const Cell& b,
                           const Budget& budget) {
    Cell out;
    out.eqs = a.eqs;
    out.eqs.insert(out.eqs.end(), b.eqs.begin(), b.eqs.end());
    if (ideal_has_unit_gen(a.ineqs)) {
        out.ineqs = b.ineqs;
    } else if (ideal_has_unit_gen(b.ineqs)) {
        out.ineqs = a.ineqs;
    } else if (a.ineqs == b.ineqs) {
        out.ineqs = a.ineqs;
    } else {
        Ideal inter = Ideal(ring, a.ineqs).intersect(Ideal(ring, b.ineqs), budget);
        out.ineqs = inter.gens();
    }
    if (out.ineqs.empty()) out.ineqs.push_back(PolyQ(ring));  // V(0): removes everything
    return out;
}

}  // namespace detail

inline ConstructibleSet set_intersect(const ConstructibleSet& S, const ConstructibleSet& T,
                                      const Budget& budget = Budget()) {
    if (*S.ring() != *T.ring()) throw InputError("constructible intersect: ring mismatch");
    ConstructibleSet out(S.ring());
    for (const auto& a : S.cells()) {
        auto na = detail::normalize_cell(S.ring(), a);
        if (!na) continue;
        for (const auto& b : T.cells()) {
            auto nb = detail::normalize_cell(S.ring(), b);
            if (!nb) continue;
            out.add_cell(detail::cell_intersect(S.ring(), *na, *nb, budget));
        }
    }
    return pruned(out, budget);
}

// Complement of one cell: (A^m \ V(E)) u V(H).
inline ConstructibleSet cell_complement(const RingPtr& ring, const Cell& c) {
    ConstructibleSet out(ring);
    for (const auto& e : c.eqs)
        if (!e.is_zero()) out.add_cell(Cell{{}, {e}});
    out.add_cell(Cell{c.ineqs, {polyq_const(ring, Rational(1))}});
    return out;
}

inline ConstructibleSet set_complement(const ConstructibleSet& S, const Budget& budget = Budget()) {
    ConstructibleSet acc = ConstructibleSet::full(S.ring());
    for (const auto& c : S.cells()) {
        acc = set_intersect(acc, cell_complement(S.ring(), c), budget);
        if (acc.cells().empty()) break;
    }
    return acc;
}

inline ConstructibleSet set_difference(const ConstructibleSet& S, const ConstructibleSet& T,
                                       const Budget& budget = Budget()) {
    return set_intersect(S, set_complement(T, budget), budget);
}

// Equality by double inclusion (no canonical form for constructible sets).
inline bool set_equal(const ConstructibleSet& S, const ConstructibleSet& T,
                      const Budget& budget = Budget()) {
    return is_empty(set_difference(S, T, budget), budget) &&
           is_empty(set_difference(T, S, budget), budget);
}

inline bool set_subset(const ConstructibleSet& S, const ConstructibleSet& T,
                       const Budget& budget = Budget()) {
    return is_empty(set_difference(S, T, budget), budget);
}

}  // namespace gradloci
