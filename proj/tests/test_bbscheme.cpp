#include <catch2/catch_amalgamated.hpp>

#include "gradloci/bbscheme.hpp"

using namespace gradloci;

namespace {

Mono M(std::initializer_list<int> e) { return Mono(e); }

OrderIdeal O_1xyz() {
    return validate_order_ideal({M({0, 0, 0}), M({1, 0, 0}), M({0, 1, 0}), M({0, 0, 1})}, 3);
}
OrderIdeal O_1xyzz2() {
    return validate_order_ideal(
        {M({0, 0, 0}), M({1, 0, 0}), M({0, 1, 0}), M({0, 0, 1}), M({0, 0, 2})}, 3);
}
OrderIdeal O_1xyzxy() {
    return validate_order_ideal(
        {M({0, 0, 0}), M({1, 0, 0}), M({0, 1, 0}), M({0, 0, 1}), M({1, 1, 0})}, 3);
}

std::string mono_str(const Mono& m) {
    auto amb = RingSpec::make({}, default_ambient_names(static_cast<int>(m.size())),
                              std::vector<long>(m.size(), 1));
    return mono_to_string(m, *amb);
}

}  // namespace

TEST_CASE("order ideal validation") {
    OrderIdeal O = O_1xyzz2();
    REQUIRE(O.mu() == 5);
    // sorted ascending degrevlex: 1 < z < y < x < z^2
    REQUIRE(O.terms[0] == M({0, 0, 0}));
    REQUIRE(O.terms[1] == M({0, 0, 1}));
    REQUIRE(O.terms[2] == M({0, 1, 0}));
    REQUIRE(O.terms[3] == M({1, 0, 0}));
    REQUIRE(O.terms[4] == M({0, 0, 2}));

    REQUIRE_THROWS_AS(validate_order_ideal({M({1, 0})}, 2), InputError);
    OrderIdeal triv = validate_order_ideal({M({0})}, 1);
    REQUIRE(triv.mu() == 1);
}

TEST_CASE("border of the length-5 order ideals") {
    BorderStructure B = border(O_1xyzz2());
    REQUIRE(B.nu() == 8);
    std::vector<std::string> want{"y*z", "x*z", "y^2", "x*y", "x^2", "z^3", "y*z^2", "x*z^2"};
    for (size_t j = 0; j < 8; ++j) REQUIRE(mono_str(B.border[j]) == want[j]);

    // the product-of-two-variables case: with t5 = xy the printed border
    BorderStructure B2 = border(O_1xyzxy());
    REQUIRE(B2.nu() == 8);
    std::vector<std::string> want2{"z^2", "y*z", "x*z", "y^2", "x^2", "x*y*z", "x*y^2", "x^2*y"};
    for (size_t j = 0; j < 8; ++j) REQUIRE(mono_str(B2.border[j]) == want2[j]);

    // with t5 = yz the set differs (the two cases are isomorphic, not equal)
    OrderIdeal Oyz = validate_order_ideal(
        {M({0, 0, 0}), M({1, 0, 0}), M({0, 1, 0}), M({0, 0, 1}), M({0, 1, 1})}, 3);
    BorderStructure Byz = border(Oyz);
    REQUIRE(Byz.nu() == 8);
    std::vector<std::string> want3{"z^2", "x*z", "y^2", "x*y", "x^2", "y*z^2", "y^2*z", "x*y*z"};
    for (size_t j = 0; j < 8; ++j) REQUIRE(mono_str(Byz.border[j]) == want3[j]);

    BorderStructure Bmin = border(validate_order_ideal({M({0, 0})}, 2));
    REQUIRE(Bmin.nu() == 2);
    REQUIRE(mono_str(Bmin.border[0]) == "y");
    REQUIRE(mono_str(Bmin.border[1]) == "x");
}

TEST_CASE("generic multiplication matrix in one variable") {
    OrderIdeal O = validate_order_ideal({M({0}), M({1})}, 1);
    BBScheme S = build_bbscheme(O);
    REQUIRE(S.mu() == 2);
    REQUIRE(S.nu() == 1);
    const auto& A = S.mult[0];
    // columns: x*1 = x = t2 -> unit column e_2; x*x = x^2 = b_1 -> (c11, c21)
    REQUIRE(A[0 * 2 + 0].is_zero());
    REQUIRE(A[1 * 2 + 0] == parse_poly("1", S.cring));
    REQUIRE(A[0 * 2 + 1] == parse_poly("c[1,1]", S.cring));
    REQUIRE(A[1 * 2 + 1] == parse_poly("c[2,1]", S.cring));
    // single variable: no commutators
    REQUIRE(S.gens.empty());
}

TEST_CASE("interior products give unit-vector columns") {
    BBScheme S = build_bbscheme(O_1xyzz2());
    // multiplication by z maps t2 = z to t5 = z^2
    const auto& A3 = S.mult[2];
    size_t mu = 5;
    REQUIRE(A3[4 * mu + 1] == parse_poly("1", S.cring));
    for (size_t i = 0; i < mu; ++i)
        if (i != 4) REQUIRE(A3[i * mu + 1].is_zero());
}

TEST_CASE("commutator ideals of the spacial length-5 schemes have 60 generators") {
    BBScheme S1 = build_bbscheme(O_1xyzz2());
    REQUIRE(S1.mu() * S1.nu() == 40);
    REQUIRE(S1.gens.size() == 60);
    BBScheme S2 = build_bbscheme(O_1xyzxy());
    REQUIRE(S2.gens.size() == 60);
    for (const auto& g : S1.gens) REQUIRE(poly_is_homogeneous(g));
    for (const auto& g : S2.gens) REQUIRE(poly_is_homogeneous(g));
    REQUIRE(vanishes_at_origin(S1.gens));
    REQUIRE(vanishes_at_origin(S2.gens));
}

TEST_CASE("arrow grading values") {
    OrderIdeal O = O_1xyz();
    BorderStructure B = border(O);
    auto w = arrow_grading(O, B);
    REQUIRE(w.size() == 24);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 6; ++j) REQUIRE(w[i * 6 + j] == (i == 0 ? 2 : 1));
    REQUIRE(is_maxdeg(O, B));

    OrderIdeal Oz = O_1xyzz2();
    BorderStructure Bz = border(Oz);
    auto wz = arrow_grading(Oz, Bz);
    std::vector<long> printed{2, 2, 2, 2, 2, 3, 3, 3, 1, 1, 1, 1, 1, 2, 2, 2, 1, 1, 1, 1,
                              1, 2, 2, 2, 1, 1, 1, 1, 1, 2, 2, 2, 0, 0, 0, 0, 0, 1, 1, 1};
    REQUIRE(std::vector<long>(wz.begin(), wz.end()) == printed);
    REQUIRE(is_maxdeg(Oz, Bz));
    BBScheme Sz = build_bbscheme(Oz);
    REQUIRE(Sz.cring->params() ==
            std::vector<std::string>{"c[5,1]", "c[5,2]", "c[5,3]", "c[5,4]", "c[5,5]"});

    // a non-MaxDeg order ideal: {1, x, x^2, x^3} in two variables
    OrderIdeal Obad =
        validate_order_ideal({M({0, 0}), M({1, 0}), M({2, 0}), M({3, 0})}, 2);
    BorderStructure Bbad = border(Obad);
    REQUIRE_FALSE(is_maxdeg(Obad, Bbad));
}

TEST_CASE("positive algebra view of a border basis scheme") {
    BBScheme S = build_bbscheme(O_1xyzz2());
    auto PA = validate_positive_algebra(S.cring, S.gens);
    REQUIRE(PA.m() == 5);
    REQUIRE(PA.k() == 35);
    REQUIRE(PA.gens().size() == 60);
}

TEST_CASE("base intersection is zero for a small scheme with parameters") {
    // O = {1, x, y, x^2} in the plane has weight-zero c's
    OrderIdeal O = validate_order_ideal({M({0, 0}), M({1, 0}), M({0, 1}), M({2, 0})}, 2);
    BBScheme S = build_bbscheme(O);
    REQUIRE(S.cring->m() == 2);
    Ideal I(S.cring, S.gens);
    Ideal E = I.eliminate(S.cring->vars());
    REQUIRE(E.is_zero_ideal());
}

TEST_CASE("reembedding by substitution") {
    auto r = RingSpec::make({}, {"x", "y", "z"}, {1, 1, 2});
    std::vector<PolyQ> gens = parse_polys({"z - x^2", "y*z - x^3"}, r);
    Reembedding re = reembed_by_substitution(r, gens, {"z"});
    REQUIRE(re.yring->vars() == std::vector<std::string>{"x", "y"});
    REQUIRE(re.gens.size() == 1);
    REQUIRE(re.gens[0] == parse_poly("x^2*y - x^3", re.yring));

    std::vector<PolyQ> stuck = parse_polys({"z^2 - x"}, r);
    REQUIRE_THROWS_AS(reembed_by_substitution(r, stuck, {"z"}), DomainError);
}

TEST_CASE("reembedding computes the elimination ideal") {
    auto r = RingSpec::make({}, {"x", "y", "z", "w"}, {1, 1, 1, 1});
    std::vector<PolyQ> gens = parse_polys(
        {"w - x*y", "z - x - y", "w^2 - z*x + y^3", "x^2*w - y*z"}, r);
    Reembedding re = reembed_by_substitution(r, gens, {"w", "z"});
    Ideal via_gb = Ideal(r, gens).eliminate({"w", "z"});
    Ideal via_subst(re.yring, re.gens);
    REQUIRE(via_subst.equals(via_gb));
}
