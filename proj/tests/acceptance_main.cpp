// Acceptance suite: runs every acceptance criterion at its stated time
// limit and prints one pass/fail line per criterion.
//
// Criterion 8 is the long full-pipeline run; per its own definition a
// failure there downgrades to a skipped-stretch report instead of a
// suite failure.  Set GRADLOCI_SKIP_STRETCH=1 to skip it entirely.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "gradloci/fixtures.hpp"

using namespace gradloci;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    int id;
    std::string title;
    double limit_s;
    bool stretch = false;
};

struct Outcome {
    bool pass = true;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

void merge_fixture(Outcome& out, const FixtureReport& rep) {
    for (const auto& c : rep.checks)
        out.require(c.pass, rep.name + ": " + c.label + (c.note.empty() ? "" : " [" + c.note + "]"));
}

// ---- criterion 9: the property suites -------------------------------------

PolyQ random_poly(const RingPtr& r, std::mt19937_64& rng, int max_terms, int max_deg) {
    std::uniform_int_distribution<int> nt(1, max_terms);
    std::uniform_int_distribution<int> ed(0, max_deg);
    std::uniform_int_distribution<long> cd(-9, 9);
    PolyQ p(r);
    int t = nt(rng);
    for (int i = 0; i < t; ++i) {
        Mono m(static_cast<size_t>(r->n()), 0);
        int budget = ed(rng);
        for (int j = 0; j < r->n() && budget > 0; ++j) {
            std::uniform_int_distribution<int> e(0, budget);
            m[static_cast<size_t>(j)] = e(rng);
            budget -= m[static_cast<size_t>(j)];
        }
        p.terms.emplace_back(std::move(m), Rational(cd(rng)));
    }
    p.normalize();
    return p;
}

void property_groebner(Outcome& out) {
    std::mt19937_64 rng(90210);
    auto r3 = RingSpec::make({}, {"x", "y", "z"}, {1, 1, 1});
    TermOrder ord = TermOrder::degrevlex(*r3);
    for (int round = 0; round < 8; ++round) {
        std::vector<PolyQ> gens{random_poly(r3, rng, 3, 3), random_poly(r3, rng, 3, 3)};
        auto gb = buchberger_reduced<Rational>(r3, gens, ord);
        out.require(is_groebner_basis(gb, ord), "random basis fails the S-polynomial criterion");
        for (const auto& g : gens)
            out.require(normal_form(g, gb, ord).is_zero(), "input does not reduce to zero");
    }
    // every basis computed for the section-6 fixtures
    std::vector<Ideal> fixture_ideals;
    {
        auto r = RingSpec::make({"a"}, {"x", "y", "z"}, {2, 2, 1});
        fixture_ideals.push_back(Ideal::of(r, {"a*x + z^2", "a*y + z^2"}));
        auto r2 = RingSpec::make({"a", "b"}, {"x", "y"}, {1, 1});
        fixture_ideals.push_back(Ideal::of(r2, {"a*x", "b*y^2"}));
        auto r3b = RingSpec::make({"a"}, {"x", "y"}, {1, 1});
        fixture_ideals.push_back(Ideal::of(r3b, {"a*x", "a*y^2"}));
        fixture_ideals.push_back(Ideal::of(r3b, {"a*x", "a*y"}));
    }
    for (const auto& I : fixture_ideals) {
        for (const auto& o :
             {TermOrder::wdegrevlex(*I.ring()), TermOrder::lex(*I.ring()),
              TermOrder::block_fiber_first(*I.ring())}) {
            const auto& gb = I.groebner(o);
            out.require(is_groebner_basis(gb.elements, o),
                        "fixture basis fails the S-polynomial criterion");
        }
    }
}

void property_krull(Outcome& out) {
    std::mt19937_64 rng(808);
    int rounds = 0;
    for (int round = 0; round < 60; ++round) {
        std::uniform_int_distribution<int> nv(2, 10);
        int n = nv(rng);
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
        auto r = RingSpec::make({}, names, std::vector<long>(static_cast<size_t>(n), 1));
        std::uniform_int_distribution<int> cnt(1, 6), e(0, 2);
        std::vector<PolyQ> gens;
        std::vector<uint64_t> supports;
        for (int i = 0; i < cnt(rng); ++i) {
            Mono m(static_cast<size_t>(n), 0);
            bool nonzero = false;
            for (int j = 0; j < n; ++j) {
                m[static_cast<size_t>(j)] = e(rng) == 0 ? 1 : 0;
                nonzero |= m[static_cast<size_t>(j)] > 0;
            }
            if (!nonzero) m[0] = 1;
            uint64_t s = 0;
            for (int j = 0; j < n; ++j)
                if (m[static_cast<size_t>(j)]) s |= 1ull << j;
            supports.push_back(s);
            gens.push_back(poly_term<Rational>(r, std::move(m), Rational(1)));
        }
        int best = 0;
        for (uint64_t S = 0; S < (1ull << n); ++S) {
            bool ok = true;
            for (uint64_t sup : supports)
                if ((sup & ~S) == 0) {
                    ok = false;
                    break;
                }
            if (ok) best = std::max(best, __builtin_popcountll(S));
        }
        Ideal I(r, gens);
        out.require(I.krull_dimension().value() == best,
                    "combinatorial dimension disagrees with the subset oracle");
        ++rounds;
    }
    out.require(rounds >= 50, "not enough dimension-oracle rounds");
}

void property_matrices(Outcome& out) {
    auto r = RingSpec::make({"a", "b"}, {}, {});
    std::mt19937_64 rng(31415);
    std::uniform_int_distribution<int> dim(1, 4), pick(0, 5);
    std::uniform_int_distribution<long> val(-3, 3);
    const std::vector<std::string> entries{"0", "a", "b", "a+b", "a*b", "a^2-1"};
    int pairs = 0;
    for (int round = 0; round < 40; ++round) {
        size_t m = static_cast<size_t>(dim(rng)), n = static_cast<size_t>(dim(rng));
        PolyMatrix M(r, m, n);
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < n; ++j)
                M.at(i, j) = parse_poly(entries[static_cast<size_t>(pick(rng))], r);
        long rk = generic_rank(M);
        out.require(rk == generic_rank_by_minors(M), "rank disagrees with the minor oracle");
        for (int s = 0; s < 3; ++s) {
            std::vector<Rational> gamma{Rational(val(rng)), Rational(val(rng))};
            out.require(rank(specialize_matrix(M, gamma)) <= rk,
                        "specialization increased the rank");
            ++pairs;
        }
    }
    out.require(pairs >= 100, "not enough specialization pairs");
}

void property_sing_implication(Outcome& out) {
    struct Fx {
        PositiveAlgebra PA;
        ComponentData cd;
        int m;
    };
    std::vector<Fx> fxs;
    {
        auto r = RingSpec::make({"a", "b"}, {"x", "y"}, {1, 1});
        auto PA = validate_positive_algebra(r, std::vector<std::string>{"a*x", "b*y^2"});
        ComponentData cd;
        for (auto gens : {std::vector<std::string>{"a", "b"}, {"a", "y"}, {"x", "b"}, {"x", "y"}})
            cd.components.push_back({parse_polys(gens, r), 2});
        fxs.push_back({PA, cd, 2});
        fxs.push_back({PA, cd, 2});  // the section-6.6 and 6.10 readings share the algebra
    }
    {
        auto r = RingSpec::make({"a"}, {"x", "y", "z"}, {2, 2, 1});
        auto PA = validate_positive_algebra(r, std::vector<std::string>{"a*x + z^2", "a*y + z^2"});
        ComponentData cd;
        cd.components.push_back({parse_polys({"a", "z"}, r), 2});
        cd.components.push_back({parse_polys({"x - y", "a*x + z^2"}, r), 2});
        fxs.push_back({PA, cd, 1});
    }
    {
        auto r = RingSpec::make({"a"}, {"x", "y"}, {1, 1});
        ComponentData cd;
        cd.components.push_back({parse_polys({"x", "y"}, r), 1});
        cd.components.push_back({parse_polys({"a"}, r), 2});
        fxs.push_back({validate_positive_algebra(r, std::vector<std::string>{"a*x", "a*y^2"}), cd, 1});
        fxs.push_back({validate_positive_algebra(r, std::vector<std::string>{"a*x", "a*y"}), cd, 1});
    }
    for (const auto& fx : fxs) {
        int sampled = 0;
        std::vector<std::vector<Rational>> points;
        if (fx.m == 1) {
            for (int a = -16; a <= 16; ++a) points.push_back({Rational(a)});
        } else {
            for (int a = -3; a <= 3; ++a)
                for (int b = -3; b <= 3; ++b) points.push_back({Rational(a), Rational(b)});
        }
        for (const auto& p : points) {
            auto d0 = derive_d_zero_point(fx.cd, p, fx.PA.ring());
            out.require(d0.has_value(), "zero point misses every component");
            if (singv_point_test(fx.PA, p))
                out.require(sing0_point_test(fx.PA, p, *d0),
                            "vertex singular but zero point regular");
            ++sampled;
        }
        out.require(sampled >= 30, "not enough implication samples");
    }
}

void property_curves(Outcome& out) {
    std::vector<std::string> vars;
    for (int i = 1; i <= 12; ++i) vars.push_back("x" + std::to_string(i));
    auto r = RingSpec::make({"a1", "a2"}, vars, fixtures_data::curve12_weights());
    auto PA = validate_positive_algebra(r, fixtures_data::curve12_gens());
    auto rats = [](const std::vector<std::string>& v) {
        std::vector<Rational> o;
        for (const auto& s : v) o.push_back(rat_parse(s));
        return o;
    };
    auto Pi1 = rats(fixtures_data::curve12_pi1());
    auto Pi2 = rats(fixtures_data::curve12_pi2());
    ConnectingPath path = connect_points(PA, Pi1, Pi2);
    out.require(path.segments.size() == 3, "expected three segments");
    RingPtr tring = path.segments.front().tring;
    for (const auto& seg : path.segments)
        for (const auto& g : PA.gens())
            out.require(polyq_substitute_all(g, seg.coord, seg.tring).is_zero(),
                        "segment does not annihilate a generator");
    const CurveSegment& mid = path.segments[1];
    out.require(poly_to_string(mid.coord[0]) == "-t + 2" &&
                    poly_to_string(mid.coord[1]) == "3*t + 1",
                "middle segment differs from the printed base line");
    for (size_t i = 2; i < mid.coord.size(); ++i)
        out.require(mid.coord[i].is_zero(), "middle segment has nonzero fiber coordinates");
}

}  // namespace

int main() {
    std::setvbuf(stdout, nullptr, _IONBF, 0);
    bool skip_stretch = std::getenv("GRADLOCI_SKIP_STRETCH") != nullptr;
    FixtureOptions opt;

    std::vector<Criterion> criteria{
        {1, "section-5 examples: linear part, coefficient matrix, generic fiber", 1.0},
        {2, "rank below n-d puts the whole base in the zero-section locus", 1.0},
        {3, "two-component family: minors ideal, printed intersection, parametric strata", 10.0},
        {4, "general zero-section algorithm with certified components", 10.0},
        {5, "four-case family: classifications, both loci, strict chain", 60.0},
        {6, "length-4 scheme: 24 variables, stated weights, printed singular point", 60.0},
        {7, "length-5 schemes: minors radicals, rank 6, vanishing matrix, singular families",
         300.0},
        {8, "full pipelines: separating elimination, 15 minimal generators, matrix match",
         1800.0, true},
        {9, "property suites: bases, dimension, ranks, implication, connecting paths", 300.0},
    };

    int hard_failures = 0;
    for (const auto& cr : criteria) {
        Outcome out;
        auto t0 = Clock::now();
        if (cr.stretch && skip_stretch) {
            std::printf("[criterion %d] SKIPPED (stretch disabled) %s\n", cr.id,
                        cr.title.c_str());
            continue;
        }
        try {
            switch (cr.id) {
                case 1:
                    merge_fixture(out, run_fixture("ex5_lin0", opt));
                    merge_fixture(out, run_fixture("ex5_linmatrix", opt));
                    break;
                case 2:
                    merge_fixture(out, run_fixture("ex6_6", opt));
                    break;
                case 3:
                    merge_fixture(out, run_fixture("ex6_7", opt));
                    break;
                case 4:
                    merge_fixture(out, run_fixture("ex6_8", opt));
                    merge_fixture(out, run_fixture("ex6_9", opt));
                    break;
                case 5:
                    merge_fixture(out, run_fixture("ex6_10", opt));
                    break;
                case 6:
                    merge_fixture(out, run_fixture("ex7_2", opt));
                    break;
                case 7:
                    merge_fixture(out, run_fixture("ex7_3", opt));
                    merge_fixture(out, run_fixture("ex7_4", opt));
                    break;
                case 8:
                    merge_fixture(out, run_fixture("ex7_3_full", opt));
                    merge_fixture(out, run_fixture("ex7_4_full", opt));
                    break;
                case 9:
                    property_groebner(out);
                    property_krull(out);
                    property_matrices(out);
                    property_sing_implication(out);
                    property_curves(out);
                    merge_fixture(out, run_fixture("ex2_5", opt));
                    merge_fixture(out, run_fixture("ex4_6", opt));
                    merge_fixture(out, run_fixture("ex3_2", opt));
                    break;
            }
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        double el = std::chrono::duration<double>(Clock::now() - t0).count();
        bool in_time = el <= cr.limit_s;
        bool ok = out.pass && in_time;
        if (!in_time)
            out.failures.push_back("time limit exceeded: " + std::to_string(el) + "s > " +
                                   std::to_string(cr.limit_s) + "s");
        if (cr.stretch) {
            std::printf("[criterion %d] %s (%.1fs) %s\n", cr.id,
                        ok ? "PASS" : "SKIPPED-STRETCH (downgraded, not a suite failure)", el,
                        cr.title.c_str());
        } else {
            std::printf("[criterion %d] %s (%.1fs) %s\n", cr.id, ok ? "PASS" : "FAIL", el,
                        cr.title.c_str());
            if (!ok) ++hard_failures;
        }
        for (const auto& f : out.failures) std::printf("    - %s\n", f.c_str());
    }
    if (hard_failures)
        std::printf("acceptance: %d criterion(s) failed\n", hard_failures);
    else
        std::printf("acceptance: all enforced criteria passed\n");
    return hard_failures == 0 ? 0 : 1;
}
