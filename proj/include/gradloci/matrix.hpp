#pragma once

#include "gradloci/ideal.hpp"

namespace gradloci {

// Matrix with entries in the parameter ring A.
struct PolyMatrix {
    RingPtr ring;  // the base ring the entries live in
    size_t rows = 0, cols = 0;
    std::vector<PolyQ> a;  // row-major

    PolyMatrix() = default;
    PolyMatrix(RingPtr r, size_t rr, size_t cc)
        : ring(std::move(r)), rows(rr), cols(cc), a(rr * cc, PolyQ(ring)) {
        for (auto& e : a) e.ring = ring;
    }

    PolyQ& at(size_t i, size_t j) { return a[i * cols + j]; }
    const PolyQ& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

struct ScalarMatrix {
    size_t rows = 0, cols = 0;
    std::vector<Rational> a;

    ScalarMatrix() = default;
    ScalarMatrix(size_t rr, size_t cc) : rows(rr), cols(cc), a(rr * cc, Rational(0)) {}
    Rational& at(size_t i, size_t j) { return a[i * cols + j]; }
    const Rational& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

inline PolyMatrix matrix_from_strings(const RingPtr& ring,
                                      const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return PolyMatrix(ring, 0, 0);
    PolyMatrix M(ring, rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != M.cols) throw InputError("ragged matrix rows");
        for (size_t j = 0; j < M.cols; ++j) M.at(i, j) = parse_poly(rows[i][j], ring);
    }
    return M;
}

inline PolyMatrix transpose(const PolyMatrix& M) {
    PolyMatrix T(M.ring, M.cols, M.rows);
    for (size_t i = 0; i < M.rows; ++i)
        for (size_t j = 0; j < M.cols; ++j) T.at(j, i) = M.at(i, j);
    return T;
}

inline PolyMatrix block_diag(const PolyMatrix& A, const PolyMatrix& B) {
    if (*A.ring != *B.ring) throw InputError("block_diag: ring mismatch");
    PolyMatrix M(A.ring, A.rows + B.rows, A.cols + B.cols);
    for (size_t i = 0; i < A.rows; ++i)
        for (size_t j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
    for (size_t i = 0; i < B.rows; ++i)
        for (size_t j = 0; j < B.cols; ++j) M.at(A.rows + i, A.cols + j) = B.at(i, j);
    return M;
}

namespace detail {

// Fraction-free Bareiss determinant; divisions are exact in the
// polynomial ring.  Cofactor expansion for very small sizes.
inline PolyQ det_cofactor(std::vector<PolyQ>& m, size_t n, const RingPtr& ring) {
    if (n == 1) return m[0];
    if (n == 2) return poly_sub(poly_mul(m[0], m[3]), poly_mul(m[1], m[2]));
    if (n == 3) {
        PolyQ d = poly_mul(m[0], poly_sub(poly_mul(m[4], m[8]), poly_mul(m[5], m[7])));
        d = poly_sub(d, poly_mul(m[1], poly_sub(poly_mul(m[3], m[8]), poly_mul(m[5], m[6]))));
        d = poly_add(d, poly_mul(m[2], poly_sub(poly_mul(m[3], m[7]), poly_mul(m[4], m[6]))));
        return d;
    }
    throw DomainError("det_cofactor only for n <= 3");
}

inline PolyQ det_bareiss(std::vector<PolyQ> m, size_t n, const RingPtr& ring) {
    PolyQ prev = polyq_const(ring, Rational(1));
    int sign = 1;
    for (size_t p = 0; p + 1 < n; ++p) {
        if (m[p * n + p].is_zero()) {
            size_t q = p + 1;
            while (q < n && m[q * n + p].is_zero()) ++q;
            if (q == n) return PolyQ(ring);  // singular
            for (size_t j = p; j < n; ++j) std::swap(m[p * n + j], m[q * n + j]);
            sign = -sign;
        }
        for (size_t i = p + 1; i < n; ++i) {
            for (size_t j = p + 1; j < n; ++j) {
                PolyQ t = poly_sub(poly_mul(m[i * n + j], m[p * n + p]),
                                   poly_mul(m[i * n + p], m[p * n + j]));
                auto q = polyq_exact_div(t, prev);
                if (!q) throw DomainError("bareiss: non-exact division (internal)");
                m[i * n + j] = std::move(*q);
            }
            m[i * n + p] = PolyQ(ring);
        }
        prev = m[p * n + p];
    }
    PolyQ d = m[(n - 1) * n + (n - 1)];
    return sign < 0 ? poly_neg(d) : d;
}

// Maximum bipartite matching on the structural nonzero pattern; a minor
// is identically zero when no full matching exists.
inline bool has_full_matching(const std::vector<char>& nz, size_t n) {
    std::vector<int> match_col(n, -1);
    std::vector<char> seen;
    std::function<bool(size_t)> aug = [&](size_t row) -> bool {
        for (size_t c = 0; c < n; ++c) {
            if (!nz[row * n + c] || seen[c]) continue;
            seen[c] = 1;
            if (match_col[c] < 0 || aug(static_cast<size_t>(match_col[c]))) {
                match_col[c] = static_cast<int>(row);
                return true;
            }
        }
        return false;
    };
    for (size_t r = 0; r < n; ++r) {
        seen.assign(n, 0);
        if (!aug(r)) return false;
    }
    return true;
}

}  // namespace detail

inline PolyQ minor_det(const PolyMatrix& M, const std::vector<size_t>& rows,
                       const std::vector<size_t>& cols) {
    size_t n = rows.size();
    std::vector<PolyQ> sub;
    sub.reserve(n * n);
    std::vector<char> nz(n * n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const PolyQ& e = M.at(rows[i], cols[j]);
            nz[i * n + j] = !e.is_zero();
            sub.push_back(e);
        }
    if (!detail::has_full_matching(nz, n)) return PolyQ(M.ring);
    if (n <= 3) return detail::det_cofactor(sub, n, M.ring);
    return detail::det_bareiss(std::move(sub), n, M.ring);
}

// All r x r minors of M as an ideal of A.  r = 0 gives the unit ideal by
// convention; r exceeding a dimension gives the zero ideal.  Minors are
// enumerated column-major lexicographically so generator lists are
// deterministic; zero minors are omitted.
inline Ideal minors_ideal(const PolyMatrix& M, long r) {
    if (r < 0) throw InputError("minors_ideal: negative size");
    if (r == 0) return Ideal::unit(M.ring);
    if (r > static_cast<long>(M.rows) || r > static_cast<long>(M.cols))
        return Ideal::zero(M.ring);

    std::vector<PolyQ> gens;
    std::vector<size_t> cols(static_cast<size_t>(r)), rows(static_cast<size_t>(r));
    auto next_subset = [](std::vector<size_t>& s, size_t limit) {
        size_t k = s.size();
        for (size_t i = k; i-- > 0;) {
            if (s[i] + (k - i) <= limit) {
                ++s[i];
                for (size_t j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    for (size_t i = 0; i < static_cast<size_t>(r); ++i) cols[i] = i;
    do {
        for (size_t i = 0; i < static_cast<size_t>(r); ++i) rows[i] = i;
        do {
            PolyQ d = minor_det(M, rows, cols);
            if (!d.is_zero()) gens.push_back(std::move(d));
        } while (next_subset(rows, M.rows - 1));
    } while (next_subset(cols, M.cols - 1));
    if (gens.empty()) return Ideal::zero(M.ring);
    return Ideal(M.ring, std::move(gens));
}

// Rank over Frac(A) by fraction-field Gaussian elimination with exact
// pivoting.
inline long generic_rank(const PolyMatrix& M) {
    if (M.rows == 0 || M.cols == 0) return 0;
    std::vector<RatFunc> g;
    g.reserve(M.rows * M.cols);
    for (const auto& e : M.a) g.push_back(RatFunc::from_poly(e));
    size_t rank = 0;
    for (size_t col = 0; col < M.cols && rank < M.rows; ++col) {
        size_t piv = rank;
        while (piv < M.rows && g[piv * M.cols + col].is_zero()) ++piv;
        if (piv == M.rows) continue;
        if (piv != rank)
            for (size_t j = 0; j < M.cols; ++j) std::swap(g[piv * M.cols + j], g[rank * M.cols + j]);
        RatFunc inv = RatFunc(1L) / g[rank * M.cols + col];
        for (size_t i = rank + 1; i < M.rows; ++i) {
            if (g[i * M.cols + col].is_zero()) continue;
            RatFunc f = g[i * M.cols + col] * inv;
            for (size_t j = col; j < M.cols; ++j)
                g[i * M.cols + j] = g[i * M.cols + j] - f * g[rank * M.cols + j];
        }
        ++rank;
    }
    return static_cast<long>(rank);
}

// Largest r such that some r x r minor is nonzero; the enumeration
// oracle used to cross-check generic_rank.
inline long generic_rank_by_minors(const PolyMatrix& M) {
    long hi = static_cast<long>(std::min(M.rows, M.cols));
    for (long r = hi; r >= 1; --r) {
        if (!minors_ideal(M, r).is_zero_ideal()) return r;
    }
    return 0;
}

inline ScalarMatrix specialize_matrix(const PolyMatrix& M, const std::vector<Rational>& gamma) {
    const RingSpec& R = *M.ring;
    if (static_cast<int>(gamma.size()) != R.m())
        throw InputError("specialize_matrix: point length != parameter count");
    std::vector<Rational> full(gamma);
    for (int j = 0; j < R.k(); ++j) full.push_back(Rational(0));
    ScalarMatrix S(M.rows, M.cols);
    for (size_t i = 0; i < M.rows; ++i)
        for (size_t j = 0; j < M.cols; ++j) S.at(i, j) = polyq_eval(M.at(i, j), full);
    return S;
}

inline bool is_zero_matrix(const ScalarMatrix& S) {
    for (const auto& v : S.a)
        if (!rat_is_zero(v)) return false;
    return true;
}

// Exact rank by rational Gaussian elimination.
inline long rank(ScalarMatrix S) {
    size_t rank_ = 0;
    for (size_t col = 0; col < S.cols && rank_ < S.rows; ++col) {
        // partial pivot on the largest |num|*|den| bound; with exact
        // arithmetic this is a growth heuristic, not a correctness issue
        size_t best = S.rows;
        for (size_t i = rank_; i < S.rows; ++i) {
            if (rat_is_zero(S.at(i, col))) continue;
            if (best == S.rows) best = i;
        }
        if (best == S.rows) continue;
        if (best != rank_)
            for (size_t j = 0; j < S.cols; ++j) std::swap(S.at(best, j), S.at(rank_, j));
        Rational inv = Rational(1) / S.at(rank_, col);
        for (size_t i = rank_ + 1; i < S.rows; ++i) {
            if (rat_is_zero(S.at(i, col))) continue;
            Rational f = S.at(i, col) * inv;
            for (size_t j = col; j < S.cols; ++j) S.at(i, j) -= f * S.at(rank_, j);
        }
        ++rank_;
    }
    return static_cast<long>(rank_);
}

}  // namespace gradloci
