// golay486: build, verify and export the 486-vertex graphs of the ternary Golay code.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "golay486/codes.hpp"
#include "golay486/constructions.hpp"
#include "golay486/diagram.hpp"
#include "golay486/report.hpp"

namespace {

using namespace golay486;
namespace cn = golay486::constructions;

constexpr int kExitPass = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitEnvironment = 2;

const std::vector<std::string> kSelectors{"gamma", "delta", "upsilon", "sigma", "lambda"};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw DataError("write failed for " + path);
}

cn::OrbitalContext load_context(const std::string& gens) {
    return gens.empty() ? cn::load_orbital_context() : cn::load_orbital_context(read_file(gens));
}

permaction::GroupAction load_action(const std::string& gens) {
    const std::string text = gens.empty() ? std::string(cn::bundled_generators()) : read_file(gens);
    std::vector<permaction::Permutation> perms;
    for (auto& n : permaction::parse_generator_file(text, cn::kActionDegree)) perms.push_back(std::move(n.permutation));
    return permaction::GroupAction(cn::kActionDegree, std::move(perms));
}

graph::Graph select_graph(const std::string& which, const std::string& gens) {
    if (which == "gamma") return cn::build_gamma();
    const auto ctx = load_context(gens);
    if (which == "delta") return cn::build_from_orbitals(ctx, cn::OrbitalModel::Delta).graph;
    if (which == "upsilon") return cn::build_from_orbitals(ctx, cn::OrbitalModel::Upsilon).graph;
    if (which == "sigma") return cn::build_from_orbitals(ctx, cn::OrbitalModel::Sigma).graph;
    return cn::build_from_orbitals(ctx, cn::OrbitalHalfGraph::Lambda).graph;
}

std::string orbit_diagram(const std::string& which, const std::string& gens) {
    const auto ctx = load_context(gens);
    auto ids_for = [&](const std::vector<std::size_t>& lengths) {
        std::vector<std::size_t> ids;
        for (auto len : lengths) {
            const auto id = ctx.id_for_length(len);
            ids.push_back(id);
            if (ctx.decomposition.paired(id) != id) ids.push_back(ctx.decomposition.paired(id));
        }
        return ids;
    };
    std::vector<std::size_t> lengths;
    bool half = false;
    if (which == "gamma") {
        lengths = cn::suborbit_lengths(cn::OrbitalHalfGraph::GammaHalf);
        half = true;
    } else if (which == "lambda") {
        lengths = cn::suborbit_lengths(cn::OrbitalHalfGraph::Lambda);
        half = true;
    } else if (which == "delta") {
        lengths = cn::suborbit_lengths(cn::OrbitalModel::Delta);
    } else if (which == "upsilon") {
        lengths = cn::suborbit_lengths(cn::OrbitalModel::Upsilon);
    } else {
        lengths = cn::suborbit_lengths(cn::OrbitalModel::Sigma);
    }
    const auto ids = ids_for(lengths);
    const auto g = permaction::orbital_union_graph(ctx.decomposition, ids);
    auto matrix = permaction::collapsed_matrix(g, ctx.decomposition);
    if (half) {
        // Half graphs live on the coset half; keep its suborbits only.
        std::vector<bool> in_half(cn::kActionDegree, false);
        for (auto v : ctx.coset_half) in_half[v] = true;
        std::vector<std::size_t> keep;
        for (std::size_t id = 0; id < ctx.decomposition.rank(); ++id) {
            if (in_half[ctx.decomposition.suborbit(id).front()]) keep.push_back(id);
        }
        matrix = diagram::restrict_suborbits(matrix, keep);
    }
    return diagram::orbit_diagram_dot(matrix, which);
}

std::string edge_list(const graph::Graph& g) {
    std::string out;
    for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

codes::LinearCode select_code(const std::string& name) {
    if (name == "golay") return codes::golay_code();
    if (name == "shortened") return codes::shorten(codes::golay_code(), 0);
    return codes::code_from_text(read_file(name));
}

std::set<std::string> split_list(const std::string& s) {
    std::set<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.insert(item);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ternary Golay code graphs on 486 vertices"};
    app.require_subcommand(1);

    std::string gens;
    std::uint64_t seed = permaction::kDefaultSeed;

    auto* verify = app.add_subcommand("verify", "Run every claim and report verdicts");
    std::string skip;
    std::string json_path;
    std::uint64_t budget = graph::IsomorphismOptions{}.refinement_budget;
    verify->add_option("--gens", gens, "Generator file (default: bundled)");
    verify->add_option("--seed", seed, "Seed for the randomized Schreier-Sims phase");
    verify->add_option("--skip", skip, "Comma-separated claim groups to skip");
    verify->add_option("--json", json_path, "Write the JSON report here");
    verify->add_option("--budget", budget, "Isomorphism refinement budget");

    auto* diag = app.add_subcommand("diagram", "Emit a DOT diagram");
    std::string diag_which;
    std::string kind = "distance";
    std::string diag_out;
    diag->add_option("graph", diag_which, "Graph selector")->required()->check(CLI::IsMember(kSelectors));
    diag->add_option("--kind", kind, "distance or orbit")->check(CLI::IsMember({"distance", "orbit"}));
    diag->add_option("--out", diag_out, "Output path (default: stdout)");
    diag->add_option("--gens", gens, "Generator file (default: bundled)");

    auto* exp = app.add_subcommand("export", "Write a graph as graph6 or an edge list");
    std::string exp_which;
    std::string format = "graph6";
    std::string exp_out;
    exp->add_option("graph", exp_which, "Graph selector")->required()->check(CLI::IsMember(kSelectors));
    exp->add_option("--format", format, "graph6 or edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));
    exp->add_option("--out", exp_out, "Output path (default: stdout)");
    exp->add_option("--gens", gens, "Generator file (default: bundled)");

    auto* code = app.add_subcommand("code", "Code parameters, weights and cosets");
    std::string code_action;
    std::string code_name = "golay";
    code->add_option("action", code_action, "info, wd or cosets")->required()->check(CLI::IsMember({"info", "wd", "cosets"}));
    code->add_option("--code", code_name, "golay, shortened, or a code file");

    auto* group = app.add_subcommand("group", "Order, orbitals and union scan of the action");
    std::string group_action;
    group->add_option("action", group_action, "order, orbitals or scan")
        ->required()
        ->check(CLI::IsMember({"order", "orbitals", "scan"}));
    group->add_option("--gens", gens, "Generator file (default: bundled)");
    group->add_option("--seed", seed, "Seed for the randomized Schreier-Sims phase");

    auto* scan = app.add_subcommand("scan", "Distance-regular orbital unions");
    scan->add_option("--gens", gens, "Generator file (default: bundled)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            report::VerifyOptions options;
            if (!gens.empty()) options.generator_path = gens;
            options.seed = seed;
            options.skip = split_list(skip);
            options.isomorphism.refinement_budget = budget;
            const auto r = report::verify_all(options);
            std::cout << report::to_text(r);
            if (!json_path.empty()) write_output(json_path, report::to_json(r) + "\n");
            if (const auto failed = r.first_failure()) {
                std::cerr << "claim failed: " << *failed << "\n";
                return kExitClaimFailure;
            }
            return kExitPass;
        }
        if (diag->parsed()) {
            std::string dot;
            if (kind == "distance") {
                const auto array = graph::is_distance_regular(select_graph(diag_which, gens));
                if (!array) throw StructureError(diag_which + " is not distance-regular");
                dot = diagram::distance_diagram_dot(*array, diag_which);
            } else {
                dot = orbit_diagram(diag_which, gens);
            }
            write_output(diag_out, dot);
            return kExitPass;
        }
        if (exp->parsed()) {
            const auto g = select_graph(exp_which, gens);
            write_output(exp_out, format == "graph6" ? graph::graph6_encode(g) + "\n" : edge_list(g));
            return kExitPass;
        }
        if (code->parsed()) {
            const auto c = select_code(code_name);
            if (code_action == "info") {
                std::cout << "length " << c.length() << "\ndimension " << c.dimension() << "\n";
                if (c.dimension() > 0) {
                    const auto d = codes::minimum_distance(c);
                    std::cout << "minimum distance " << d << "\nperfect " << (codes::is_perfect(c, (d - 1) / 2) ? "yes" : "no")
                              << "\n";
                }
            } else if (code_action == "wd") {
                std::cout << codes::weight_distribution(c).to_string() << "\n";
            } else {
                const codes::CosetTable table(c);
                std::cout << "cosets " << table.coset_count() << "\ncovering radius " << table.covering_radius() << "\n";
                if (c == codes::golay_code()) {
                    const auto shapes = codes::classify_cosets(c);
                    for (std::size_t i = 0; i < codes::kCosetShapeCount; ++i) {
                        std::cout << codes::to_string(static_cast<codes::CosetShape>(i)) << " " << shapes.counts[i] << "\n";
                    }
                }
            }
            return kExitPass;
        }
        if (group->parsed() || scan->parsed()) {
            const std::string action_name = scan->parsed() ? "scan" : group_action;
            const auto action = load_action(gens);
            if (action_name == "order") {
                std::cout << permaction::group_order(action, seed) << "\n";
                return kExitPass;
            }
            const auto d = permaction::orbitals(action, 0);
            if (action_name == "orbitals") {
                std::cout << "rank " << d.rank() << "\n";
                for (std::size_t id = 0; id < d.rank(); ++id) {
                    std::cout << id << " size " << d.suborbit(id).size() << " paired " << d.paired(id) << "\n";
                }
                return kExitPass;
            }
            for (const auto& u : permaction::scan_orbital_unions(d)) {
                std::cout << u.array.to_string() << "  orbitals";
                for (auto id : u.ids) std::cout << " " << id;
                std::cout << "\n";
            }
            return kExitPass;
        }
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEnvironment;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEnvironment;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitClaimFailure;
    }
    return kExitPass;
}
