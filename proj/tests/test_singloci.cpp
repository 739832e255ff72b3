#include <catch2/catch_amalgamated.hpp>

#include "gradloci/singloci.hpp"

using namespace gradloci;

namespace {

PositiveAlgebra ex66() {  // also the ring of 6.10
    auto r = RingSpec::make({"a", "b"}, {"x", "y"}, {1, 1});
    return validate_positive_algebra(r, std::vector<std::string>{"a*x", "b*y^2"});
}

PositiveAlgebra ex67() {
    auto r = RingSpec::make({"a"}, {"x", "y", "z"}, {2, 2, 1});
    return validate_positive_algebra(r, std::vector<std::string>{"a*x + z^2", "a*y + z^2"});
}

PositiveAlgebra ex68() {
    auto r = RingSpec::make({"a"}, {"x", "y"}, {1, 1});
    return validate_positive_algebra(r, std::vector<std::string>{"a*x", "a*y^2"});
}

PositiveAlgebra ex69() {
    auto r = RingSpec::make({"a"}, {"x", "y"}, {1, 1});
    return validate_positive_algebra(r, std::vector<std::string>{"a*x", "a*y"});
}

ComponentData comps_ex67(const RingPtr& r) {
    ComponentData cd;
    cd.components.push_back({parse_polys({"a", "z"}, r), 2});
    cd.components.push_back({parse_polys({"x - y", "a*x + z^2"}, r), 2});
    cd.reduced_asserted = false;
    return cd;
}

std::vector<std::vector<Rational>> grid2(int lo, int hi) {
    std::vector<std::vector<Rational>> pts;
    for (int a = lo; a <= hi; ++a)
        for (int b = lo; b <= hi; ++b) pts.push_back({Rational(a), Rational(b)});
    return pts;
}

}  // namespace

TEST_CASE("equidimensional zero-section locus, rank = n - d") {
    auto PA = ex67();
    Ideal J2 = sing0_equidimensional(PA, 2);
    RingPtr base = J2.ring();
    REQUIRE(J2.equals(Ideal::of(base, {"a^2"})));
}

TEST_CASE("equidimensional locus with rank < n - d covers the base") {
    auto PA = ex66();
    Ideal J2 = sing0_equidimensional(PA, 2);
    REQUIRE(J2.is_zero_ideal());  // Z(0) is the whole plane
    REQUIRE(generic_rank(lin_coeff_matrix(PA)) == 1);
}

TEST_CASE("rank above n - d raises the non-equidimensionality signal") {
    auto PA = ex69();
    REQUIRE(generic_rank(lin_coeff_matrix(PA)) == 2);
    REQUIRE_THROWS_AS(sing0_equidimensional(PA, 2), NonEquidimensional);
}

TEST_CASE("zero-point rank tests") {
    auto PA = ex67();
    REQUIRE(sing0_point_test(PA, {Rational(0)}, 2));        // rank 0 < 4 - 2
    REQUIRE_FALSE(sing0_point_test(PA, {Rational(1)}, 2));  // rank 2 = 4 - 2
}

TEST_CASE("component data verification") {
    auto PA = ex67();
    ComponentData cd = comps_ex67(PA.ring());
    REQUIRE_NOTHROW(verify_component_data(PA, cd));
    // a bad component is rejected with a witness
    ComponentData bad;
    bad.components.push_back({parse_polys({"x"}, PA.ring()), 2});
    REQUIRE_THROWS_AS(verify_component_data(PA, bad), VerificationError);
    // derive d_{Gamma_0}: both components pass through every zero point
    REQUIRE(derive_d_zero_point(cd, {Rational(5)}, PA.ring()).value() == 2);
}

TEST_CASE("general zero-section algorithm on the two-component line examples") {
    // ax, ay: reduced; components <x,y> (dim 1) and <a> (dim 2)
    auto PA = ex69();
    ComponentData cd;
    cd.components.push_back({parse_polys({"x", "y"}, PA.ring()), 1});
    cd.components.push_back({parse_polys({"a"}, PA.ring()), 2});
    cd.reduced_asserted = true;
    Ideal S = sing0_general(PA, cd);
    REQUIRE(S.equals(Ideal::of(S.ring(), {"a"})));  // vanishing ideal of {0}

    // ax, ay^2: non-reduced, radical <ax, ay> supplied; Sing_0 is the whole line
    auto PB = ex68();
    ComponentData cd2;
    cd2.components.push_back({parse_polys({"x", "y"}, PB.ring()), 1});
    cd2.components.push_back({parse_polys({"a"}, PB.ring()), 2});
    cd2.radical = parse_polys({"a*x", "a*y"}, PB.ring());
    Ideal S2 = sing0_general(PB, cd2);
    REQUIRE(S2.is_zero_ideal());

    // missing radical without the reduced assertion is an input error
    ComponentData cd3 = cd2;
    cd3.radical.reset();
    REQUIRE_THROWS_AS(sing0_general(PB, cd3), InputError);

    // a smooth irreducible case: empty locus
    auto r = RingSpec::make({"a"}, {"x", "y"}, {1, 1});
    auto PC = validate_positive_algebra(r, std::vector<std::string>{"x"});
    ComponentData cd4;
    cd4.components.push_back({parse_polys({"x"}, r), 2});
    cd4.reduced_asserted = true;
    REQUIRE(sing0_general(PC, cd4).is_unit_ideal());
}

TEST_CASE("vertex point tests across the four cases") {
    auto PA = ex66();
    // U: rank 1 < 2 - 0
    REQUIRE(singv_point_test(PA, {Rational(1), Rational(1)}));
    // V1: rank 0 < 2 - 1
    REQUIRE(singv_point_test(PA, {Rational(0), Rational(1)}));
    // V2: rank 1 = 2 - 1
    REQUIRE_FALSE(singv_point_test(PA, {Rational(1), Rational(0)}));
    // origin: rank 0 = 2 - 2
    REQUIRE_FALSE(singv_point_test(PA, {Rational(0), Rational(0)}));
}

TEST_CASE("four case classification via local invariants") {
    auto PA = ex66();
    struct Case {
        std::vector<Rational> gamma;
        long rank, fdim;
    };
    std::vector<Case> cases{{{Rational(1), Rational(1)}, 1, 0},
                            {{Rational(0), Rational(1)}, 0, 1},
                            {{Rational(1), Rational(0)}, 1, 1},
                            {{Rational(0), Rational(0)}, 0, 2}};
    for (const auto& c : cases) {
        auto inv = local_invariants(PA, c.gamma);
        REQUIRE(inv.rank_at_point == c.rank);
        REQUIRE(inv.fiber_dim == c.fdim);
    }
}

TEST_CASE("constructible vertex singular locus") {
    auto PA = ex66();
    SingVResult sv = singv_set(PA);
    RingPtr base = sv.set.ring();
    // expected {(a,b) : b != 0}
    ConstructibleSet expect(base, {Cell{{}, {parse_poly("b", base)}}});
    REQUIRE(set_equal(sv.set, expect));

    auto PB = ex67();
    SingVResult sv2 = singv_set(PB);
    ConstructibleSet origin = ConstructibleSet::closed(sv2.set.ring(),
                                                       {parse_poly("a", sv2.set.ring())});
    REQUIRE(set_equal(sv2.set, origin));

    auto r = RingSpec::make({"a"}, {"x", "y"}, {1, 1});
    auto PZ = validate_positive_algebra(r, std::vector<std::string>{"0"});
    REQUIRE(is_empty(singv_set(PZ).set));
}

TEST_CASE("relative jacobian minors") {
    auto fr = RingSpec::make({}, {"x", "y"}, {1, 1});
    Ideal I = Ideal::of(fr, {"y^2"});
    REQUIRE(jacobian_minors(I, 1).equals(Ideal::of(fr, {"2*y"})));
    Ideal I2 = Ideal::of(fr, {"x", "y^2"});
    REQUIRE(jacobian_minors(I2, 2).equals(Ideal::of(fr, {"2*y"})));
    REQUIRE(jacobian_minors(Ideal::zero(fr), 1).is_zero_ideal());
}

TEST_CASE("constructible singular-fiber locus") {
    auto PA = ex66();
    ConstructibleSet ss = sings_set(PA);
    RingPtr base = ss.ring();
    // V1 = {a = 0, b != 0}
    ConstructibleSet expect(base, {Cell{{parse_poly("a", base)}, {parse_poly("b", base)}}});
    REQUIRE(set_equal(ss, expect));

    auto PB = ex67();
    ConstructibleSet ss2 = sings_set(PB);
    ConstructibleSet origin = ConstructibleSet::closed(ss2.ring(), {parse_poly("a", ss2.ring())});
    REQUIRE(set_equal(ss2, origin));

    // family of smooth conics: no singular fibers
    auto r = RingSpec::make({"a"}, {"x", "y"}, {1, 1});
    auto PC = validate_positive_algebra(r, std::vector<std::string>{"x^2 + y^2"});
    REQUIRE(is_empty(sings_set(PC)));
}

TEST_CASE("strict inclusions of the three loci on the four-case example") {
    auto PA = ex66();
    RingPtr base = base_ring(*PA.ring());
    ConstructibleSet sing0 = ConstructibleSet::full(base);  // from the rank < n - d branch
    SingVResult sv = singv_set(PA);
    ConstructibleSet ss = sings_set(PA);
    REQUIRE(set_subset(ss, sv.set));
    REQUIRE(set_subset(sv.set, sing0));
    REQUIRE_FALSE(is_empty(set_difference(sv.set, ss)));
    REQUIRE_FALSE(is_empty(set_difference(sing0, sv.set)));
}

TEST_CASE("point implication: vertex singular implies zero point singular") {
    // sampled over a grid, using component-derived zero-point dimensions
    auto PA = ex66();
    ComponentData cd;
    for (auto gens : {std::vector<std::string>{"a", "b"}, {"a", "y"}, {"x", "b"}, {"x", "y"}})
        cd.components.push_back({parse_polys(gens, PA.ring()), 2});
    int checked = 0;
    for (const auto& p : grid2(-2, 2)) {
        auto d0 = derive_d_zero_point(cd, p, PA.ring());
        REQUIRE(d0.has_value());
        if (singv_point_test(PA, p)) REQUIRE(sing0_point_test(PA, p, *d0));
        ++checked;
    }
    REQUIRE(checked >= 25);

    auto PB = ex67();
    ComponentData cd2 = comps_ex67(PB.ring());
    for (int a = -15; a <= 15; ++a) {
        std::vector<Rational> p{Rational(a)};
        auto d0 = derive_d_zero_point(cd2, p, PB.ring());
        if (singv_point_test(PB, p)) REQUIRE(sing0_point_test(PB, p, d0.value()));
    }
}

TEST_CASE("set-valued and point-valued answers agree") {
    auto PA = ex66();
    SingVResult sv = singv_set(PA);
    ConstructibleSet ss = sings_set(PA);
    for (const auto& p : grid2(-2, 2)) {
        REQUIRE(sv.set.contains_point(p) == singv_point_test(PA, p));
        // Sing_s membership vs the fiber-point family: on this example the
        // fiber over V1 is K[x,y]/<y^2>, singular along the x-axis
        if (ss.contains_point(p)) {
            REQUIRE(rat_is_zero(p[0]));
            REQUIRE_FALSE(rat_is_zero(p[1]));
            // a non-origin singular fiber point: (x,y) = (1,0), fiber dim 1
            REQUIRE(fiber_point_singular_test(PA, p, {Rational(1), Rational(0)}, 1));
        }
    }
}

TEST_CASE("fiber point singular test validates its input") {
    auto PA = ex66();
    // (1,0) lies on the fiber over (0,1): ideal <y^2>
    REQUIRE(fiber_point_singular_test(PA, {Rational(0), Rational(1)}, {Rational(1), Rational(0)}, 1));
    // a smooth point of a smooth fiber: over V2 the fiber is <x>, take (0,1)
    REQUIRE_FALSE(
        fiber_point_singular_test(PA, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}, 1));
    // a point off the fiber is rejected
    REQUIRE_THROWS_AS(
        fiber_point_singular_test(PA, {Rational(1), Rational(1)}, {Rational(1), Rational(1)}, 0),
        PointNotOnVariety);
}

TEST_CASE("thm 6.1(a) rank bound at sampled points") {
    auto PA = ex67();
    ComponentData cd = comps_ex67(PA.ring());
    PolyMatrix L = lin_coeff_matrix(PA);
    for (int a = -10; a <= 10; ++a) {
        std::vector<Rational> p{Rational(a)};
        long rk = rank(specialize_matrix(L, p));
        auto d0 = derive_d_zero_point(cd, p, PA.ring());
        REQUIRE(rk <= PA.n() - d0.value());
    }
}

TEST_CASE("fiber-dimension strata reproduce the four-case partition") {
    auto PA = ex66();
    SingVResult sv = singv_set(PA);
    RingPtr base = sv.set.ring();
    auto C = [&](const char* s) { return parse_poly(s, base); };
    // dimension 0 exactly: both parameters nonzero
    ConstructibleSet U(base, {Cell{{}, {C("a*b")}}});
    REQUIRE(set_equal(sv.strata_exact[0], U));
    // dimension 1 exactly: exactly one parameter zero
    ConstructibleSet V(base, {Cell{{C("a")}, {C("b")}}, Cell{{C("b")}, {C("a")}}});
    REQUIRE(set_equal(sv.strata_exact[1], V));
    // dimension 2 exactly: the origin
    ConstructibleSet O = ConstructibleSet::closed(base, {C("a"), C("b")});
    REQUIRE(set_equal(sv.strata_exact[2], O));
}
