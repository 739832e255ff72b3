#pragma once

#include <string>
#include <vector>

namespace gradloci::fixtures_data {

// ---- the 12-variable connecting-curve example ----------------------------

inline const std::vector<std::string>& curve12_gens() {
    static const std::vector<std::string> g{
        "x3 - a1*x4 - x2*x9 + x1*x5",
        "x7 - a1*x8 - x6*x10",
        "x12 - a2*x11 - x6*x9",
        "x2*x6 - x2*x9 + x1*x5",
        "x8 - x2 - a2*x7 - x5*x6",
        "x11 - x2 - a1*x12 - x9*x10 - x9^2"};
    return g;
}

inline const std::vector<long>& curve12_weights() {
    static const std::vector<long> w{2, 2, 3, 3, 1, 1, 2, 2, 1, 1, 2, 2};
    return w;
}

// (a1, a2, x1..x12)
inline const std::vector<std::string>& curve12_pi1() {
    static const std::vector<std::string> p{"2", "1", "1/2", "3",  "5", "1", "-6",
                                            "1", "3", "0",   "0",  "3", "-3", "-3"};
    return p;
}

inline const std::vector<std::string>& curve12_pi2() {
    static const std::vector<std::string> p{"1", "4", "7", "-9", "2", "2", "0",
                                            "0", "3", "3", "0",  "0", "3", "12"};
    return p;
}

// ---- the spacial length-4 scheme ------------------------------------------

// coordinates c[1,1]..c[1,6], c[2,1]..c[2,6], c[3,1]..., c[4,1]..c[4,6]
inline const std::vector<long>& scheme1xyz_point() {
    static const std::vector<long> p{-1, -1, -1, -1, -1, -1, 2, 1, 1, 0, 0, 0,
                                     0,  1,  0,  2,  1,  0,  0, 0, 1, 0, 1, 2};
    return p;
}

// ---- the length-5 scheme with t5 = z^2 ------------------------------------

inline const std::vector<std::string>& z2_separating_tuple() {
    static const std::vector<std::string> z{
        "c[1,1]", "c[1,2]", "c[1,3]", "c[1,4]", "c[1,5]", "c[1,6]", "c[1,7]",
        "c[1,8]", "c[2,1]", "c[2,2]", "c[2,3]", "c[2,4]", "c[2,5]", "c[2,7]",
        "c[2,8]", "c[3,7]", "c[3,8]", "c[4,7]", "c[4,8]"};
    return z;
}

inline const std::vector<std::string>& z2_prime_gens() {
    static const std::vector<std::string> p{
        "c[5,3] - c[5,1]^2", "c[5,4] - c[5,1]*c[5,2]", "c[5,5] - c[5,2]^2"};
    return p;
}

// The printed transpose of the first coefficient block (13 x 3).
inline const std::vector<std::vector<std::string>>& z2_block1_transposed() {
    static const std::vector<std::vector<std::string>> m{
        {"0", "-c[5,1]*c[5,2] + c[5,4]", "-c[5,1]^2*c[5,2] + c[5,2]*c[5,3]"},
        {"c[5,2]*c[5,3] - c[5,1]*c[5,4]", "c[5,1]^2 - c[5,3]", "c[5,1]^3 - c[5,1]*c[5,3]"},
        {"0", "0", "-c[5,1]*c[5,2] + c[5,4]"},
        {"-c[5,1]*c[5,2] + c[5,4]", "0", "c[5,1]^2 - c[5,3]"},
        {"c[5,1]^2 - c[5,3]", "0", "0"},
        {"0", "-c[5,2]^2 + c[5,5]", "-c[5,1]*c[5,2]^2 + c[5,2]*c[5,4]"},
        {"c[5,2]*c[5,4] - c[5,1]*c[5,5]", "c[5,1]*c[5,2] - c[5,4]",
         "c[5,1]^2*c[5,2] - c[5,1]*c[5,4]"},
        {"0", "0", "-c[5,2]^2 + c[5,5]"},
        {"-c[5,2]^2 + c[5,5]", "0", "c[5,1]*c[5,2] - c[5,4]"},
        {"c[5,1]*c[5,2] - c[5,4]", "0", "0"},
        {"-c[5,2]*c[5,4] + c[5,1]*c[5,5]", "0", "-c[5,2]*c[5,3] + c[5,1]*c[5,4]"},
        {"c[5,2]^2 - c[5,5]", "0", "c[5,1]*c[5,2] - c[5,4]"},
        {"-c[5,1]*c[5,2] + c[5,4]", "0", "-c[5,1]^2 + c[5,3]"}};
    return m;
}

// The printed second coefficient block (9 x 3).
inline const std::vector<std::vector<std::string>>& z2_block2() {
    static const std::vector<std::vector<std::string>> m{
        {"0", "0", "c[5,2]^2 - c[5,5]"},
        {"0", "c[5,2]^2 - c[5,5]", "0"},
        {"0", "0", "-c[5,1]*c[5,2] + c[5,4]"},
        {"0", "-c[5,1]*c[5,2] + c[5,4]", "0"},
        {"0", "0", "c[5,1]^2 - c[5,3]"},
        {"0", "-c[5,1]^2 + c[5,3]", "0"},
        {"-c[5,2]^2 + c[5,5]", "0", "c[5,2]^3 - c[5,2]*c[5,5]"},
        {"c[5,1]*c[5,2] - c[5,4]", "c[5,2]*c[5,3] - c[5,1]*c[5,4]",
         "-c[5,1]*c[5,2]^2 + c[5,2]*c[5,4]"},
        {"c[5,1]^2 - c[5,3]", "0", "-c[5,1]^2*c[5,2] + c[5,2]*c[5,3]"}};
    return m;
}

// Singular fiber family over Z(p): values for the reembedded fiber
// coordinates (c[2,6], c[3,1..6], c[4,1..6], c[5,6..8]) in terms of
// (d1..d6).
struct Z2FamilyEntry {
    const char* name;
    long d_index;  // 1..6, 0 for constant zero
    long factor;
};

inline const std::vector<Z2FamilyEntry>& z2_family() {
    static const std::vector<Z2FamilyEntry> f{
        {"c[2,6]", 1, 1}, {"c[3,1]", 4, 1}, {"c[3,2]", 0, 0}, {"c[3,3]", 5, 2},
        {"c[3,4]", 6, 1}, {"c[3,5]", 0, 0}, {"c[3,6]", 2, 1}, {"c[4,1]", 0, 0},
        {"c[4,2]", 4, 1}, {"c[4,3]", 0, 0}, {"c[4,4]", 5, 1}, {"c[4,5]", 6, 2},
        {"c[4,6]", 3, 1}, {"c[5,6]", 4, 1}, {"c[5,7]", 5, 1}, {"c[5,8]", 6, 1}};
    return f;
}

// ---- the length-5 scheme with t5 = yz --------------------------------------

// The printed tuple lists c[4,6]; the reembedded coordinate set and the
// singular family both keep c[4,6], so the separating tuple uses c[4,7].
inline const std::vector<std::string>& yz_separating_tuple() {
    static const std::vector<std::string> z{
        "c[1,1]", "c[1,2]", "c[1,3]", "c[1,4]", "c[1,5]", "c[1,6]", "c[1,7]",
        "c[1,8]", "c[2,1]", "c[2,2]", "c[2,4]", "c[2,5]", "c[2,6]", "c[2,8]",
        "c[3,3]", "c[3,6]", "c[3,8]", "c[4,7]", "c[4,8]"};
    return z;
}

inline const std::vector<std::string>& yz_prime_gens() {
    static const std::vector<std::string> p{
        "c[5,2] - c[5,1]*c[5,4]", "c[5,5] - c[5,1]*c[5,4]^2", "c[5,1]*c[5,3] - 1"};
    return p;
}

// Family over Z(p): (c[2,3], c[2,7], c[3,1], c[3,2], c[3,4], c[3,5],
// c[3,7], c[4,1..5], c[4,6], c[5,6..8]) = (0, d1, 0,0,0,0, d2, 0..0, d3, 0,0,0)
inline const std::vector<Z2FamilyEntry>& yz_family() {
    static const std::vector<Z2FamilyEntry> f{
        {"c[2,3]", 0, 0}, {"c[2,7]", 1, 1}, {"c[3,1]", 0, 0}, {"c[3,2]", 0, 0},
        {"c[3,4]", 0, 0}, {"c[3,5]", 0, 0}, {"c[3,7]", 2, 1}, {"c[4,1]", 0, 0},
        {"c[4,2]", 0, 0}, {"c[4,3]", 0, 0}, {"c[4,4]", 0, 0}, {"c[4,5]", 0, 0},
        {"c[4,6]", 3, 1}, {"c[5,6]", 0, 0}, {"c[5,7]", 0, 0}, {"c[5,8]", 0, 0}};
    return f;
}

}  // namespace gradloci::fixtures_data
