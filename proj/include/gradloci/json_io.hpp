#pragma once

#include <json.hpp>

#include "gradloci/bbscheme.hpp"
#include "gradloci/singloci.hpp"

namespace gradloci {

using json = nlohmann::json;

// Problem descriptor: ring data plus optional certified side inputs.
struct Descriptor {
    RingPtr ring;
    std::vector<std::string> generator_texts;
    std::optional<ComponentData> components;
    std::optional<long> dim;            // asserted dimension of R
    bool equidimensional = false;
    std::vector<std::vector<Rational>> points;       // base or full points
    std::optional<OrderIdeal> order_ideal;
    std::vector<std::string> z_tuple;
    std::optional<long> fiber_dim;      // asserted fiber dimension for point tests

    PositiveAlgebra algebra(bool deep = false) const {
        return validate_positive_algebra(ring, generator_texts, deep);
    }
};

inline std::vector<Rational> rat_vector(const json& arr) {
    std::vector<Rational> out;
    for (const auto& v : arr) {
        if (v.is_number_integer())
            out.push_back(Rational(static_cast<long>(v.get<long long>())));
        else if (v.is_string())
            out.push_back(rat_parse(v.get<std::string>()));
        else
            throw InputError("point coordinates must be integers or rational strings");
    }
    return out;
}

inline Descriptor descriptor_from_json(const json& j) {
    Descriptor d;
    std::vector<std::string> params, vars;
    std::vector<long> weights;
    if (j.contains("params"))
        for (const auto& p : j.at("params")) params.push_back(p.get<std::string>());
    if (j.contains("vars"))
        for (const auto& v : j.at("vars")) vars.push_back(v.get<std::string>());
    if (j.contains("weights"))
        for (const auto& w : j.at("weights")) weights.push_back(w.get<long>());
    if (!vars.empty()) d.ring = RingSpec::make(params, vars, weights);
    if (j.contains("generators"))
        for (const auto& g : j.at("generators")) d.generator_texts.push_back(g.get<std::string>());
    if (j.contains("components") || j.contains("radical") || j.contains("reduced")) {
        ComponentData cd;
        if (j.contains("components"))
            for (const auto& c : j.at("components")) {
                Component comp;
                for (const auto& g : c.at("prime_gens"))
                    comp.prime_gens.push_back(parse_poly(g.get<std::string>(), d.ring));
                comp.dim = c.at("dim").get<long>();
                cd.components.push_back(std::move(comp));
            }
        if (j.contains("radical")) {
            std::vector<PolyQ> rad;
            for (const auto& g : j.at("radical"))
                rad.push_back(parse_poly(g.get<std::string>(), d.ring));
            cd.radical = std::move(rad);
        }
        cd.reduced_asserted = j.value("reduced", false);
        d.components = std::move(cd);
    }
    if (j.contains("dim")) d.dim = j.at("dim").get<long>();
    d.equidimensional = j.value("equidimensional", false);
    if (j.contains("fiber_dim")) d.fiber_dim = j.at("fiber_dim").get<long>();
    if (j.contains("points"))
        for (const auto& p : j.at("points")) d.points.push_back(rat_vector(p));
    if (j.contains("order_ideal")) {
        std::vector<Mono> terms;
        int nv = j.contains("ambient_vars") ? j.at("ambient_vars").get<int>() : -1;
        for (const auto& t : j.at("order_ideal")) {
            Mono m;
            for (const auto& e : t) m.push_back(e.get<int>());
            if (nv < 0) nv = static_cast<int>(m.size());
            terms.push_back(std::move(m));
        }
        d.order_ideal = validate_order_ideal(terms, nv);
    }
    if (j.contains("z_tuple"))
        for (const auto& z : j.at("z_tuple")) d.z_tuple.push_back(z.get<std::string>());
    return d;
}

inline json ring_to_json(const RingSpec& r) {
    json j;
    j["params"] = r.params();
    j["vars"] = r.vars();
    j["weights"] = r.var_weights();
    return j;
}

inline json ideal_to_json(const Ideal& I) {
    json j = json::array();
    for (const auto& g : I.gens()) j.push_back(poly_to_string(g));
    return j;
}

inline json cset_to_json(const ConstructibleSet& S) {
    json cells = json::array();
    for (const auto& c : S.cells()) {
        json cell;
        cell["equations"] = json::array();
        for (const auto& e : c.eqs) cell["equations"].push_back(poly_to_string(e));
        cell["inequations"] = json::array();
        for (const auto& h : c.ineqs) cell["inequations"].push_back(poly_to_string(h));
        cells.push_back(std::move(cell));
    }
    return json{{"cells", cells}};
}

inline ConstructibleSet cset_from_json(const json& j, const RingPtr& ring) {
    ConstructibleSet S(ring);
    for (const auto& c : j.at("cells")) {
        Cell cell;
        for (const auto& e : c.at("equations")) cell.eqs.push_back(parse_poly(e, ring));
        for (const auto& h : c.at("inequations")) cell.ineqs.push_back(parse_poly(h, ring));
        S.add_cell(std::move(cell));
    }
    return S;
}

inline json matrix_to_json(const PolyMatrix& M) {
    json rows = json::array();
    for (size_t i = 0; i < M.rows; ++i) {
        json row = json::array();
        for (size_t j = 0; j < M.cols; ++j) row.push_back(poly_to_string(M.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string digest_of(const json& j) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a(j.dump())));
    return buf;
}

}  // namespace gradloci
