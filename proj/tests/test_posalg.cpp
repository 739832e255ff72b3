#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gradloci/posalg.hpp"

using namespace gradloci;

namespace {

// Ex 3.2 data: Q[a1,a2][x1..x12], W = (2,2,3,3,1,1,2,2,1,1,2,2)
RingPtr ex32_ring() {
    std::vector<std::string> vars;
    for (int i = 1; i <= 12; ++i) vars.push_back("x" + std::to_string(i));
    return RingSpec::make({"a1", "a2"}, vars, {2, 2, 3, 3, 1, 1, 2, 2, 1, 1, 2, 2});
}

std::vector<std::string> ex32_gens() {
    return {"x3 - a1*x4 - x2*x9 + x1*x5",
            "x7 - a1*x8 - x6*x10",
            "x12 - a2*x11 - x6*x9",
            "x2*x6 - x2*x9 + x1*x5",
            "x8 - x2 - a2*x7 - x5*x6",
            "x11 - x2 - a1*x12 - x9*x10 - x9^2"};
}

std::vector<Rational> rat_vec(std::initializer_list<long> xs) {
    std::vector<Rational> v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

}  // namespace

TEST_CASE("validation accepts the 12-variable curve example") {
    auto PA = validate_positive_algebra(ex32_ring(), ex32_gens(), /*deep=*/true);
    REQUIRE(PA.m() == 2);
    REQUIRE(PA.k() == 12);
    REQUIRE(PA.gens().size() == 6);
}

TEST_CASE("validation failures carry witnesses") {
    auto r = RingSpec::make({"a"}, {"x"}, {1});
    try {
        validate_positive_algebra(r, std::vector<std::string>{"a"});
        FAIL("expected validation error");
    } catch (const ValidationError& e) {
        REQUIRE(e.witness == "a");
    }
    auto r0 = RingSpec::make({"a"}, {"x", "y"}, {1, 0});
    REQUIRE_THROWS_AS(validate_positive_algebra(r0, std::vector<std::string>{"a*x"}),
                      ValidationError);
    REQUIRE_THROWS_AS(validate_positive_algebra(r, std::vector<std::string>{"x + x^2"}),
                      ValidationError);
}

TEST_CASE("A-linear parts") {
    auto r = RingSpec::make({"a"}, {"x1", "x2", "x3"}, {1, 1, 1});
    PolyQ f = parse_poly("a - a*x1 + x2 + a^2*x2 + a^2*x1^2 - x3^2", r);
    REQUIRE(lin_A(f) == parse_poly("-a*x1 + x2 + a^2*x2", r));
    REQUIRE(poly_to_string(lin_A(f)) == "a^2*x2 - a*x1 + x2");
    REQUIRE(lin_A(parse_poly("a^3 + a", r)).is_zero());
    REQUIRE(lin_A(parse_poly("x1*x2 + a*x3^2", r)).is_zero());
}

TEST_CASE("coefficient matrix of the weighted line example") {
    auto r = RingSpec::make({"a"}, {"x", "y", "z"}, {1, 2, 2});
    auto PA = validate_positive_algebra(r, std::vector<std::string>{"y - a*y + a^2*z - x^2"});
    PolyMatrix L = lin_coeff_matrix(PA);
    REQUIRE(L.rows == 1);
    REQUIRE(L.cols == 3);
    auto base = L.ring;
    // declared column order (x, y, z): (0, 1-a, a^2)
    REQUIRE(L.at(0, 0).is_zero());
    REQUIRE(L.at(0, 1) == parse_poly("1 - a", base));
    REQUIRE(L.at(0, 2) == parse_poly("a^2", base));
    REQUIRE(generic_rank(L) == 1);
    REQUIRE(generic_fiber_dimension(PA) == 2);
}

TEST_CASE("coefficient matrix of ax, by^2") {
    auto r = RingSpec::make({"a", "b"}, {"x", "y"}, {1, 1});
    auto PA = validate_positive_algebra(r, std::vector<std::string>{"a*x", "b*y^2"});
    PolyMatrix L = lin_coeff_matrix(PA);
    auto base = L.ring;
    REQUIRE(L.at(0, 0) == parse_poly("a", base));
    REQUIRE(L.at(0, 1).is_zero());
    REQUIRE(L.at(1, 0).is_zero());
    REQUIRE(L.at(1, 1).is_zero());
    // all generators in <X>^2 gives the zero matrix
    auto PA2 = validate_positive_algebra(r, std::vector<std::string>{"x*y", "b*y^2"});
    REQUIRE(generic_rank(lin_coeff_matrix(PA2)) == 0);
}

TEST_CASE("lin_A_module examples") {
    auto r = RingSpec::make({"a", "b"}, {"x", "y"}, {1, 1});
    auto PA = validate_positive_algebra(r, std::vector<std::string>{"a*x + b*y"});
    auto mod = lin_A_module(PA);
    REQUIRE(mod.size() == 1);
    REQUIRE(mod[0] == parse_poly("a*x + b*y", r));

    auto PB = validate_positive_algebra(r, std::vector<std::string>{"a*x", "a*y^2"});
    auto modb = lin_A_module(PB);
    REQUIRE(modb[0] == parse_poly("a*x", r));
    REQUIRE(modb[1].is_zero());
}

TEST_CASE("fiber ideals") {
    auto r = RingSpec::make({"a", "b"}, {"x", "y"}, {1, 1});
    auto PA = validate_positive_algebra(r, std::vector<std::string>{"a*x", "b*y^2"});
    Ideal F11 = fiber_ideal(PA, {Rational(1), Rational(1)});
    REQUIRE(F11.equals(Ideal::of(F11.ring(), {"x", "y^2"})));
    REQUIRE(F11.krull_dimension().value() == 0);
    Ideal F00 = fiber_ideal(PA, {Rational(0), Rational(0)});
    REQUIRE(F00.is_zero_ideal());
    REQUIRE(F00.krull_dimension().value() == 2);
}

TEST_CASE("generic fiber dimensions") {
    auto r = RingSpec::make({"a"}, {"x", "y", "z"}, {2, 2, 1});
    auto PA = validate_positive_algebra(r, std::vector<std::string>{"a*x + z^2", "a*y + z^2"});
    REQUIRE(generic_fiber_dimension(PA) == 1);
    auto PB = validate_positive_algebra(r, std::vector<std::string>{"0", "a*x"});
    REQUIRE(generic_fiber_dimension(PB) == 2);
    auto PZ = validate_positive_algebra(RingSpec::make({"a"}, {"x", "y"}, {1, 1}),
                                        std::vector<std::string>{"0"});
    REQUIRE(generic_fiber_dimension(PZ) == 2);
}

TEST_CASE("connecting curves on the 12-variable example") {
    auto PA = validate_positive_algebra(ex32_ring(), ex32_gens());
    // Pi1 = (2, 1, 1/2, 3, 5, 1, -6, 1, 3, 0, 0, 3, -3, -3)
    std::vector<Rational> Pi1{Rational(2),  Rational(1), rat_make(1, 2), Rational(3),
                              Rational(5),  Rational(1), Rational(-6),  Rational(1),
                              Rational(3),  Rational(0), Rational(0),   Rational(3),
                              Rational(-3), Rational(-3)};
    std::vector<Rational> Pi2{Rational(1), Rational(4), Rational(7), Rational(-9),
                              Rational(2), Rational(2), Rational(0), Rational(0),
                              Rational(3), Rational(3), Rational(0), Rational(0),
                              Rational(3), Rational(12)};
    CurveSegment c1 = connecting_curve(PA, Pi1);
    REQUIRE(c1.at1 == Pi1);
    REQUIRE(c1.at0 == rat_vec({2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));

    ConnectingPath path = connect_points(PA, Pi1, Pi2);
    REQUIRE(path.segments.size() == 3);
    REQUIRE(path_is_continuous(path));
    REQUIRE(path.segments.front().at0 == Pi1);
    REQUIRE(path.segments.back().at1 == Pi2);
    // the middle segment is the printed line (2-t, 1+3t, 0..0)
    const CurveSegment& mid = path.segments[1];
    REQUIRE(poly_to_string(mid.coord[0]) == "-t + 2");
    REQUIRE(poly_to_string(mid.coord[1]) == "3*t + 1");
    for (size_t i = 2; i < mid.coord.size(); ++i) REQUIRE(mid.coord[i].is_zero());

    // a point off the variety is rejected with the failing generator
    std::vector<Rational> bad = Pi1;
    bad[2] += 1;
    REQUIRE_THROWS_AS(connecting_curve(PA, bad), PointNotOnVariety);
}

TEST_CASE("degenerate connecting paths") {
    auto r = RingSpec::make({"a"}, {"x", "y"}, {1, 2});
    auto PA = validate_positive_algebra(r, std::vector<std::string>{"a*y - x^2"});
    // constant path
    std::vector<Rational> P{Rational(1), Rational(2), Rational(4)};
    ConnectingPath same = connect_points(PA, P, P);
    REQUIRE(same.segments.size() == 1);
    REQUIRE(same.segments[0].at0 == P);
    REQUIRE(same.segments[0].at1 == P);
    // two zero points: single base-line segment
    std::vector<Rational> Z1{Rational(0), Rational(0), Rational(0)};
    std::vector<Rational> Z2{Rational(5), Rational(0), Rational(0)};
    ConnectingPath base = connect_points(PA, Z1, Z2);
    REQUIRE(base.segments.size() == 1);
    REQUIRE(base.segments[0].at0 == Z1);
    REQUIRE(base.segments[0].at1 == Z2);
}

TEST_CASE("local invariants of ax+by at the origin") {
    auto r = RingSpec::make({"a", "b"}, {"x", "y"}, {1, 1});
    auto PA = validate_positive_algebra(r, std::vector<std::string>{"a*x + b*y"});
    auto inv = local_invariants(PA, {Rational(0), Rational(0)}, 3);
    REQUIRE(inv.fiber_dim == 2);
    REQUIRE(inv.ecod_zero_point.value() == 1);
    REQUIRE(inv.ecod_fiber == 0);  // the fiber origin is smooth
    // d_F = ecod(R_Gamma0) + d_Gamma0 - m
    REQUIRE(inv.fiber_dim == inv.ecod_zero_point.value() + inv.d_zero_point.value() - PA.m());
    // Prop 4.2 equality (2): cot dims differ by m
    REQUIRE(inv.cot_dim_fiber_origin == inv.cot_dim_zero_point - PA.m());
}

TEST_CASE("local invariants: smooth and trivial cases") {
    auto r = RingSpec::make({"a", "b"}, {"x", "y"}, {1, 1});
    auto PA = validate_positive_algebra(r, std::vector<std::string>{"a*x", "b*y^2"});
    // Ex 6.10 case 4: ranks give ecod(R_F) = 0 at the origin
    auto inv4 = local_invariants(PA, {Rational(0), Rational(0)});
    REQUIRE(inv4.rank_at_point == 0);
    REQUIRE(inv4.fiber_dim == 2);
    REQUIRE(inv4.ecod_fiber == 0);
    auto PZ = validate_positive_algebra(r, std::vector<std::string>{"0"});
    auto invz = local_invariants(PZ, {Rational(1), Rational(2)}, 4);
    REQUIRE(invz.ecod_fiber == 0);
    REQUIRE(invz.ecod_zero_point.value() == 0);
}

TEST_CASE("rank stability under redundant generators (module law)") {
    auto r = RingSpec::make({"a", "b"}, {"x", "y", "z"}, {1, 1, 2});
    auto PA = validate_positive_algebra(
        r, std::vector<std::string>{"a*x + b*y", "b*x - a*y", "a*z - x^2"});
    PolyMatrix L = lin_coeff_matrix(PA);
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<long> c(-5, 5);
    int samples = 0;
    for (int round = 0; round < 20; ++round) {
        // random A-combination of the generators, appended
        PolyQ ha = parse_poly("a", r), hb = parse_poly("b", r);
        PolyQ comb(r);
        // degree-compatible combination: scalar multiples keep homogeneity
        comb = poly_add(poly_mul_scalar(PA.gens()[0], Rational(c(rng))),
                        poly_mul_scalar(PA.gens()[1], Rational(c(rng))));
        if (comb.is_zero()) continue;
        std::vector<PolyQ> gens2 = {PA.gens()[0], PA.gens()[1], PA.gens()[2], comb};
        auto PA2 = validate_positive_algebra(r, gens2);
        PolyMatrix L2 = lin_coeff_matrix(PA2);
        std::vector<Rational> gamma{Rational(c(rng)), Rational(c(rng))};
        REQUIRE(rank(specialize_matrix(L, gamma)) == rank(specialize_matrix(L2, gamma)));
        ++samples;
    }
    REQUIRE(samples >= 15);
}

TEST_CASE("specialize-then-lin equals lin-then-specialize") {
    auto r = RingSpec::make({"a", "b"}, {"x", "y", "z"}, {1, 1, 2});
    auto PA = validate_positive_algebra(
        r, std::vector<std::string>{"a*x + b*y", "b*x - a*y", "a*z - x^2"});
    PolyMatrix L = lin_coeff_matrix(PA);
    RingPtr fib = fiber_ring(*r);
    std::mt19937_64 rng(1618);
    std::uniform_int_distribution<long> c(-4, 4);
    for (int round = 0; round < 20; ++round) {
        std::vector<Rational> gamma{Rational(c(rng)), Rational(c(rng))};
        ScalarMatrix S = specialize_matrix(L, gamma);
        for (size_t i = 0; i < PA.gens().size(); ++i) {
            PolyQ fg = specialize(PA.gens()[i], gamma, fib);
            // linear-in-X part of the specialized generator
            for (int j = 0; j < PA.k(); ++j) {
                Mono xj(static_cast<size_t>(PA.k()), 0);
                xj[static_cast<size_t>(j)] = 1;
                Rational coeff(0);
                for (const auto& t : fg.terms)
                    if (t.first == xj) coeff = t.second;
                REQUIRE(coeff == S.at(i, static_cast<size_t>(j)));
            }
        }
    }
}

TEST_CASE("fundamental inequality: fiber ecod bounded by zero-point ecod") {
    // 0 <= ecod(R_F) <= ecod(R_Gamma0) at sampled base points, with the
    // zero-point dimension taken from component data
    struct Fx {
        PositiveAlgebra PA;
        std::vector<std::pair<std::vector<std::string>, long>> comps;
    };
    auto r1 = RingSpec::make({"a", "b"}, {"x", "y"}, {1, 1});
    auto r2 = RingSpec::make({"a"}, {"x", "y", "z"}, {2, 2, 1});
    std::vector<Fx> fxs{
        {validate_positive_algebra(r1, std::vector<std::string>{"a*x", "b*y^2"}),
         {{{"a", "b"}, 2}, {{"a", "y"}, 2}, {{"x", "b"}, 2}, {{"x", "y"}, 2}}},
        {validate_positive_algebra(r2, std::vector<std::string>{"a*x + z^2", "a*y + z^2"}),
         {{{"a", "z"}, 2}, {{"x - y", "a*x + z^2"}, 2}}}};
    for (const auto& fx : fxs) {
        std::vector<std::vector<Rational>> points;
        if (fx.PA.m() == 1)
            for (int a = -5; a <= 5; ++a) points.push_back({Rational(a)});
        else
            for (int a = -2; a <= 2; ++a)
                for (int b = -2; b <= 2; ++b) points.push_back({Rational(a), Rational(b)});
        for (const auto& p : points) {
            // d_{Gamma_0} = max component dimension through the zero point
            std::vector<Rational> zp = p;
            for (int j = 0; j < fx.PA.k(); ++j) zp.push_back(Rational(0));
            std::optional<long> d0;
            for (const auto& [gens, d] : fx.comps) {
                bool on = true;
                for (const auto& s : gens)
                    on &= rat_is_zero(polyq_eval(parse_poly(s, fx.PA.ring()), zp));
                if (on && (!d0 || d > *d0)) d0 = d;
            }
            REQUIRE(d0.has_value());
            auto inv = local_invariants(fx.PA, p, d0);
            REQUIRE(inv.ecod_fiber >= 0);
            REQUIRE(inv.ecod_fiber <= inv.ecod_zero_point.value());
        }
    }
}
