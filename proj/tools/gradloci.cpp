// Command-line driver: build border basis schemes, run the singular-locus
// analyses on problem descriptors, and execute the built-in example suite.
//
// Exit codes: 0 pass, 1 assertion failure, 2 input error, 3 budget exceeded.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "gradloci/fixtures.hpp"

using namespace gradloci;
using Clock = std::chrono::steady_clock;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return j;
}

Budget budget_from(long pairs) {
    Budget b;
    if (const char* env = std::getenv("GRADLOCI_BUDGET")) pairs = std::atol(env);
    if (pairs > 0) b.max_pairs = pairs;
    return b;
}

struct ReportBuilder {
    json j;
    Clock::time_point t0 = Clock::now();

    ReportBuilder(const std::string& command, const json& inputs) {
        j["command"] = command;
        j["inputs_digest"] = digest_of(inputs);
        j["budget_notes"] = json::array();
    }
    json finish() {
        j["elapsed_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        return j;
    }
};

void emit(const json& report, bool as_json) {
    if (as_json) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::cout << report.at("command").get<std::string>() << " ["
              << report.at("inputs_digest").get<std::string>() << "]\n";
    std::cout << report.at("results").dump(2) << "\n";
}

int cmd_bbs(const std::string& file, bool as_json, long budget_pairs, bool verbose) {
    json input = load_json(file);
    Descriptor d = descriptor_from_json(input);
    if (!d.order_ideal) throw InputError("descriptor has no order_ideal");
    ReportBuilder rb("bbs", input);
    BBScheme S = build_bbscheme(*d.order_ideal);
    json res;
    res["mu"] = S.mu();
    res["nu"] = S.nu();
    res["variables"] = S.mu() * S.nu();
    res["arrow_weights"] = S.weights_grid;
    res["maxdeg"] = is_maxdeg(S.O, S.B);
    res["generator_count"] = S.gens.size();
    res["weight_zero_block"] = S.cring->params();
    res["positive_block_size"] = S.cring->k();
    if (verbose) {
        json gens = json::array();
        for (const auto& g : S.gens) gens.push_back(poly_to_string(g));
        res["generators"] = gens;
    }
    if (!d.z_tuple.empty()) {
        Reembedding re = reembed_by_substitution(S.cring, S.gens, d.z_tuple);
        res["reembedded_symbols"] = re.yring->n();
        res["reembedded_generator_count"] = re.gens.size();
        if (verbose) {
            json gens = json::array();
            for (const auto& g : re.gens) gens.push_back(poly_to_string(g));
            res["reembedded_generators"] = gens;
        }
    }
    rb.j["results"] = std::move(res);
    emit(rb.finish(), as_json);
    return 0;
}

int cmd_analyze(const std::string& file, const std::string& mode, bool as_json,
                long budget_pairs, bool verbose) {
    json input = load_json(file);
    Descriptor d = descriptor_from_json(input);
    Budget budget = budget_from(budget_pairs);
    ReportBuilder rb("analyze/" + mode, input);
    json res;
    PositiveAlgebra PA = d.algebra();
    RingPtr base = base_ring(*PA.ring());
    if (mode == "lin-matrix") {
        PolyMatrix L = lin_coeff_matrix(PA);
        res["matrix"] = matrix_to_json(L);
        res["generic_rank"] = generic_rank(L);
        try {
            Budget fiber_budget = budget;
            if (PA.k() > 6 && budget_pairs <= 0) fiber_budget.max_pairs = 20000;
            res["generic_fiber_dimension"] = generic_fiber_dimension(PA, fiber_budget);
        } catch (const BudgetExceeded& e) {
            rb.j["budget_notes"].push_back(std::string("generic fiber dimension skipped: ") +
                                           e.what());
        }
        json blocks = json::array();
        for (const auto& b : lin_matrix_blocks(PA))
            blocks.push_back(json{{"degree", b.degree},
                                  {"rows", b.block.rows},
                                  {"cols", b.block.cols},
                                  {"matrix", matrix_to_json(b.block)}});
        res["blocks"] = std::move(blocks);
    } else if (mode == "sing0") {
        if (d.equidimensional) {
            if (!d.dim) throw InputError("equidimensional mode needs \"dim\"");
            Ideal J = sing0_equidimensional(PA, *d.dim, budget);
            res["theorem"] = "zero-section locus, equidimensional case";
            res["vanishing_ideal"] = ideal_to_json(J);
            res["whole_base"] = J.is_zero_ideal();
        } else if (d.components) {
            Ideal J = sing0_general(PA, *d.components, budget);
            res["theorem"] = "zero-section locus, general case";
            res["vanishing_ideal"] = ideal_to_json(J);
            res["whole_base"] = J.is_zero_ideal();
            res["empty"] = J.is_unit_ideal(budget);
        } else {
            throw InputError("sing0 needs either equidimensional+dim or component data");
        }
    } else if (mode == "singv") {
        CgsOptions copt;
        copt.budget = budget;
        copt.force = true;
        SingVResult sv = singv_set(PA, copt);
        res["theorem"] = "fiber vertex singularities";
        res["set"] = cset_to_json(sv.set);
        res["empty"] = is_empty(sv.set, budget);
        if (verbose) {
            json cells = json::array();
            for (const auto& c : sv.system.cells) {
                json jc;
                jc["unit"] = c.unit;
                if (c.fiber_dim) jc["fiber_dim"] = *c.fiber_dim;
                json eqs = json::array(), nzs = json::array(), bas = json::array();
                for (const auto& e : c.eqs) eqs.push_back(poly_to_string(e));
                for (const auto& h : c.nonzeros) nzs.push_back(poly_to_string(h));
                for (const auto& g : c.basis) bas.push_back(poly_to_string(g));
                jc["equations"] = eqs;
                jc["nonzero"] = nzs;
                jc["basis"] = bas;
                cells.push_back(std::move(jc));
            }
            res["groebner_system"] = std::move(cells);
        }
    } else if (mode == "sings") {
        CgsOptions copt;
        copt.budget = budget;
        copt.force = true;
        ConstructibleSet ss = sings_set(PA, copt);
        res["theorem"] = "singular fibers";
        res["set"] = cset_to_json(ss);
        res["empty"] = is_empty(ss, budget);
    } else if (mode == "point") {
        json points = json::array();
        for (const auto& p : d.points) {
            json jp;
            json coords = json::array();
            for (const auto& v : p) coords.push_back(rat_to_string(v));
            jp["point"] = coords;
            if (static_cast<int>(p.size()) == PA.m()) {
                jp["vertex_singular"] = singv_point_test(PA, p, budget);
                std::optional<long> d0 = d.dim;
                if (d.components) {
                    auto derived = derive_d_zero_point(*d.components, p, PA.ring());
                    if (derived) d0 = derived;
                }
                if (d0) jp["zero_point_singular"] = sing0_point_test(PA, p, *d0);
                auto inv = local_invariants(PA, p, d0, budget);
                jp["rank"] = inv.rank_at_point;
                jp["fiber_dim"] = inv.fiber_dim;
                jp["ecod_fiber"] = inv.ecod_fiber;
                if (inv.ecod_zero_point) jp["ecod_zero_point"] = *inv.ecod_zero_point;
            } else if (static_cast<int>(p.size()) == PA.n()) {
                std::vector<Rational> gamma(p.begin(), p.begin() + PA.m());
                std::vector<Rational> pi(p.begin() + PA.m(), p.end());
                if (!d.fiber_dim)
                    throw InputError("full-point singularity test needs \"fiber_dim\"");
                jp["fiber_point_singular"] =
                    fiber_point_singular_test(PA, gamma, pi, *d.fiber_dim);
            } else {
                throw InputError("point length matches neither the base nor the full ring");
            }
            points.push_back(std::move(jp));
        }
        res["points"] = std::move(points);
    } else if (mode == "curve") {
        if (d.points.size() < 2) throw InputError("curve mode needs two points");
        ConnectingPath path = connect_points(PA, d.points[0], d.points[1]);
        json segs = json::array();
        for (const auto& s : path.segments) {
            json js;
            json coords = json::array();
            for (const auto& c : s.coord) coords.push_back(poly_to_string(c));
            js["parametrization"] = coords;
            json a0 = json::array(), a1 = json::array();
            for (const auto& v : s.at0) a0.push_back(rat_to_string(v));
            for (const auto& v : s.at1) a1.push_back(rat_to_string(v));
            js["at0"] = a0;
            js["at1"] = a1;
            segs.push_back(std::move(js));
        }
        res["segments"] = std::move(segs);
        res["continuous"] = path_is_continuous(path);
    } else if (mode == "invariants") {
        json points = json::array();
        for (const auto& p : d.points) {
            std::optional<long> d0 = d.dim;
            if (d.components) {
                auto derived = derive_d_zero_point(*d.components, p, PA.ring());
                if (derived) d0 = derived;
            }
            auto inv = local_invariants(PA, p, d0, budget);
            json jp;
            jp["rank"] = inv.rank_at_point;
            jp["cot_dim_zero_point"] = inv.cot_dim_zero_point;
            jp["cot_dim_fiber_origin"] = inv.cot_dim_fiber_origin;
            jp["fiber_dim"] = inv.fiber_dim;
            jp["ecod_fiber"] = inv.ecod_fiber;
            if (inv.ecod_zero_point) jp["ecod_zero_point"] = *inv.ecod_zero_point;
            points.push_back(std::move(jp));
        }
        res["points"] = std::move(points);
    } else {
        throw InputError("unknown analysis mode: " + mode);
    }
    rb.j["results"] = std::move(res);
    emit(rb.finish(), as_json);
    return 0;
}

int cmd_fixtures(const std::string& name, bool as_json, long budget_pairs, bool stretch) {
    FixtureOptions opt;
    opt.budget = budget_from(budget_pairs);
    std::vector<std::string> todo;
    if (name == "all") {
        todo = fixture_names();
        if (stretch)
            for (const auto& s : stretch_fixture_names()) todo.push_back(s);
    } else {
        todo.push_back(name);
    }
    bool all_ok = true;
    json out = json::array();
    for (const auto& fx : todo) {
        FixtureReport rep = run_fixture(fx, opt);
        all_ok &= rep.all_pass();
        if (as_json) {
            out.push_back(fixture_report_to_json(rep));
        } else {
            std::cout << "== " << rep.name << (rep.all_pass() ? "  PASS" : "  FAIL") << "  ("
                      << rep.elapsed_s << "s)\n";
            for (const auto& c : rep.checks) {
                std::cout << "   " << (c.pass ? "[ok]   " : "[FAIL] ") << c.label << "\n";
                if (!c.note.empty()) std::cout << "          note: " << c.note << "\n";
            }
        }
    }
    if (as_json) std::cout << out.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact singular-locus computations for positively graded algebras "
                 "over polynomial base rings"};
    app.require_subcommand(1);

    std::string file, mode = "lin-matrix", fixture = "all";
    bool as_json = false, verbose = false, stretch = false;
    long budget = 0;

    auto* bbs = app.add_subcommand("bbs", "build a border basis scheme from an order ideal");
    bbs->add_option("file", file, "order-ideal descriptor (JSON)")->required();
    bbs->add_flag("--json", as_json, "emit the full JSON report");
    bbs->add_flag("--verbose", verbose, "include generator lists");
    bbs->add_option("--budget", budget, "S-pair budget override");

    auto* an = app.add_subcommand("analyze", "run an analysis on a problem descriptor");
    an->add_option("file", file, "problem descriptor (JSON)")->required();
    an->add_option("--mode", mode,
                   "lin-matrix | sing0 | singv | sings | point | curve | invariants");
    an->add_flag("--json", as_json, "emit the full JSON report");
    an->add_flag("--verbose", verbose, "include intermediate data");
    an->add_option("--budget", budget, "S-pair budget override");

    auto* fx = app.add_subcommand("fixtures", "run the built-in example suite");
    fx->add_option("name", fixture, "fixture name or 'all'");
    fx->add_flag("--json", as_json, "emit JSON reports");
    fx->add_flag("--stretch", stretch, "include the long-running full pipelines");
    fx->add_option("--budget", budget, "S-pair budget override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bbs->parsed()) return cmd_bbs(file, as_json, budget, verbose);
        if (an->parsed()) return cmd_analyze(file, mode, as_json, budget, verbose);
        if (fx->parsed()) return cmd_fixtures(fixture, as_json, budget, stretch);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
