// Command line front end: build rings from spec strings, emit graphs and
// invariant reports, reproduce the reference figures, and run the check
// suite over the default ring families.
//
// Exit codes: 0 success / all checks pass, 1 check failures, 2 usage or
// ring-spec errors.

#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zdg/checks.hpp"
#include "zdg/emit.hpp"
#include "zdg/invariants.hpp"
#include "zdg/ringspec.hpp"
#include "zdg/zdgraph.hpp"

namespace {

using namespace zdg;

ZdGraph build_variant(const StarRing& sr, GraphVariant variant) {
    switch (variant) {
        case GraphVariant::Gamma: return gamma(sr.ring());
        case GraphVariant::GammaBar: return gamma_bar(sr.ring());
        case GraphVariant::GammaStar: return gamma_star(sr);
        case GraphVariant::GammaPrime: return gamma_prime(sr);
    }
    throw std::logic_error("unreachable");
}

StarRing build_checked(const std::string& spec, long long max_ring_order) {
    StarRing sr = build_star_ring(spec);
    if (sr.order() > max_ring_order)
        throw OrderCapExceededError(
            "ring order " + std::to_string(sr.order()) + " exceeds --max-ring-order " +
            std::to_string(max_ring_order) + "; raise the flag to proceed");
    return sr;
}

GraphVariant parse_variant(const std::string& name) {
    auto v = variant_from_name(name);
    if (!v)
        throw CLI::ValidationError("--variant",
                                   "expected gamma, gamma-bar, gamma-star, or gamma-prime");
    return *v;
}

int cmd_graph(const std::string& spec, const std::string& variant_name,
              const std::string& out, long long max_ring_order) {
    StarRing sr = build_checked(spec, max_ring_order);
    ZdGraph g = build_variant(sr, parse_variant(variant_name));
    if (out == "dot")
        std::cout << to_dot(sr, g);
    else if (out == "json")
        std::cout << graph_json(sr, g).dump(2) << "\n";
    else if (out == "edges")
        std::cout << edges_text(sr, g);
    else
        throw CLI::ValidationError("--out", "expected dot, json, or edges");
    return 0;
}

int cmd_invariants(const std::string& spec, const std::string& variant_name,
                   long long max_ring_order) {
    StarRing sr = build_checked(spec, max_ring_order);
    ZdGraph g = build_variant(sr, parse_variant(variant_name));
    std::cout << report_json(sr, g, compute_invariants(g.graph)).dump(2) << "\n";
    return 0;
}

std::vector<std::string> parse_suite(const std::string& suite) {
    std::vector<std::string> ids;
    if (suite == "all") {
        for (const auto& check : check_catalog()) ids.push_back(check.id);
        return ids;
    }
    std::stringstream ss(suite);
    for (std::string id; std::getline(ss, id, ',');) {
        if (!find_check(id))
            throw CLI::ValidationError("--suite", "unknown check id '" + id +
                                                      "' (use all or T01..T13)");
        ids.push_back(id);
    }
    return ids;
}

int cmd_verify(const std::string& suite, int max_order, bool as_json, bool verbose) {
    std::vector<std::string> ids = parse_suite(suite);
    FamilyOptions options;
    options.max_order = max_order;
    options.zn_max = std::min(200, max_order);
    SuiteRun run = run_suite(ids, options);

    if (as_json) {
        nlohmann::ordered_json j;
        j["suite"] = ids;
        j["max_order"] = max_order;
        auto& results = j["results"] = nlohmann::ordered_json::array();
        for (const CheckResult& r : run.results) {
            nlohmann::ordered_json entry;
            entry["check"] = r.check_id;
            entry["ring"] = r.ring;
            entry["status"] = status_name(r.status);
            entry["witness"] = r.witness;
            results.push_back(std::move(entry));
        }
        j["summary"] = {{"pass", run.pass},
                        {"fail", run.fail},
                        {"vacuous", run.vacuous},
                        {"skipped", run.skipped},
                        {"dead_checks", run.dead_checks}};
        std::cout << j.dump(2) << "\n";
        return run.ok() ? 0 : 1;
    }

    std::map<std::string, std::array<int, 4>> per_check;  // pass, fail, vacuous, skipped
    for (const CheckResult& r : run.results) {
        auto& tally = per_check[r.check_id];
        switch (r.status) {
            case CheckStatus::Pass: ++tally[0]; break;
            case CheckStatus::Fail: ++tally[1]; break;
            case CheckStatus::Vacuous: ++tally[2]; break;
            case CheckStatus::Skipped: ++tally[3]; break;
        }
        if (verbose || r.status == CheckStatus::Fail)
            std::cout << r.check_id << " " << status_name(r.status) << " " << r.ring
                      << (r.witness.empty() ? "" : " -- " + r.witness) << "\n";
    }
    for (const auto& [id, tally] : per_check) {
        const TheoremCheck* check = find_check(id);
        std::cout << id << " (" << check->title << "): " << tally[0] << " pass, " << tally[1]
                  << " fail, " << tally[2] << " vacuous, " << tally[3] << " skipped\n";
    }
    for (const std::string& id : run.dead_checks)
        std::cout << "warning: " << id << " was vacuous on every ring in the family\n";
    std::cout << (run.ok() ? "suite: PASS" : "suite: FAIL") << " (" << run.pass << " pass, "
              << run.fail << " fail, " << run.vacuous << " vacuous, " << run.skipped
              << " skipped)\n";
    return run.ok() ? 0 : 1;
}

int cmd_figure(const std::string& name) {
    static const std::map<std::string, std::pair<const char*, GraphVariant>> figures = {
        {"fig1a", {"Z8", GraphVariant::GammaStar}},
        {"fig1b", {"Z8", GraphVariant::GammaPrime}},
        {"fig-gamma-bar-m2z2", {"M2(Z2)@transpose", GraphVariant::GammaBar}},
        {"fig-gamma-prime-m2z2", {"M2(Z2)@transpose", GraphVariant::GammaPrime}},
        {"fig-gamma-star-m2z2", {"M2(Z2)@transpose", GraphVariant::GammaStar}},
        {"fig-z3z3", {"Z3xZ3@swap", GraphVariant::GammaPrime}},
    };
    auto it = figures.find(name);
    if (it == figures.end()) {
        std::ostringstream known;
        for (const auto& [key, value] : figures) known << " " << key;
        throw CLI::ValidationError("figure", "unknown figure '" + name + "'; expected one of" +
                                                 known.str());
    }
    StarRing sr = build_star_ring(it->second.first);
    std::cout << to_dot(sr, build_variant(sr, it->second.second));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite *-rings and their zero-divisor graphs"};
    app.require_subcommand(1);

    std::string spec, variant = "gamma-prime", out = "dot", suite = "all", figure_name;
    long long max_ring_order = 4096;
    int max_order = 256;
    bool as_json = false, verbose = false;

    CLI::App* graph_cmd = app.add_subcommand("graph", "emit a zero-divisor graph");
    graph_cmd->add_option("spec", spec, "ring spec, e.g. Z8 or M2(Z3)@transpose")->required();
    graph_cmd->add_option("--variant", variant, "gamma|gamma-bar|gamma-star|gamma-prime");
    graph_cmd->add_option("--out", out, "dot|json|edges");
    graph_cmd->add_option("--max-ring-order", max_ring_order, "largest ring order to accept");

    CLI::App* inv_cmd = app.add_subcommand("invariants", "compute the invariant report");
    inv_cmd->add_option("spec", spec, "ring spec")->required();
    inv_cmd->add_option("--variant", variant, "gamma|gamma-bar|gamma-star|gamma-prime");
    inv_cmd->add_option("--max-ring-order", max_ring_order, "largest ring order to accept");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run checks over the ring families");
    verify_cmd->add_option("--suite", suite, "all or comma-separated T01..T13");
    verify_cmd->add_option("--max-order", max_order, "largest family ring order");
    verify_cmd->add_flag("--json", as_json, "emit structured results");
    verify_cmd->add_flag("--verbose", verbose, "print every result line");

    CLI::App* figure_cmd = app.add_subcommand("figure", "reproduce a reference figure as DOT");
    figure_cmd->add_option("name", figure_name, "fig1a|fig1b|fig-gamma-bar-m2z2|"
                                                "fig-gamma-prime-m2z2|fig-gamma-star-m2z2|fig-z3z3")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (graph_cmd->parsed()) return cmd_graph(spec, variant, out, max_ring_order);
        if (inv_cmd->parsed()) return cmd_invariants(spec, variant, max_ring_order);
        if (verify_cmd->parsed()) return cmd_verify(suite, max_order, as_json, verbose);
        if (figure_cmd->parsed()) return cmd_figure(figure_name);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
