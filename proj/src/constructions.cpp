#include "golay486/constructions.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace golay486::constructions {

using gf3::Vector;

namespace {

codes::WeightDistribution make_distribution(std::initializer_list<std::uint64_t> counts) {
    return codes::WeightDistribution{std::vector<std::uint64_t>(counts)};
}

std::vector<Vertex> range(Vertex from, Vertex to) {
    std::vector<Vertex> out;
    for (Vertex v = from; v < to; ++v) out.push_back(v);
    return out;
}

std::string histogram_string(const std::map<std::size_t, std::size_t>& h) {
    std::string out;
    for (const auto& [degree, count] : h) {
        if (!out.empty()) out += ", ";
        out += std::to_string(count) + "x" + std::to_string(degree);
    }
    return out.empty() ? "none" : out;
}

}  // namespace

const char* to_string(SubspaceType type) { return type == SubspaceType::TypeI ? "I" : "II"; }

const char* to_string(Provenance p) { return p == Provenance::Orbital ? "orbital" : "coordinate"; }

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Skipped: return "SKIPPED";
    }
    return "?";
}

const codes::WeightDistribution& type_one_distribution() {
    static const auto wd =
        make_distribution({1, 10, 70, 420, 1770, 4992, 9822, 13980, 14160, 9440, 3680, 704});
    return wd;
}

const codes::WeightDistribution& type_two_distribution() {
    static const auto wd =
        make_distribution({1, 4, 76, 456, 1716, 4956, 9912, 13944, 14214, 9314, 3776, 680});
    return wd;
}

std::size_t FlatFamily::count(SubspaceType type) const {
    return static_cast<std::size_t>(std::count(types.begin(), types.end(), type));
}

FlatFamily classify_types() {
    const auto golay = codes::golay_code();
    const auto hyperplanes = gf3::intermediate_hyperplanes(golay.generator(), Vector::unit(golay.length(), 0));

    FlatFamily family;
    family.hyperplanes_containing_code = hyperplanes.total_classes;
    family.hyperplanes_containing_e0 = hyperplanes.excluded_count;
    family.subspaces = hyperplanes.kept;
    for (std::size_t s = 0; s < family.subspaces.size(); ++s) {
        auto wd = codes::weight_distribution(family.subspaces[s].basis);
        if (wd == type_one_distribution()) {
            family.types.push_back(SubspaceType::TypeI);
        } else if (wd == type_two_distribution()) {
            family.types.push_back(SubspaceType::TypeII);
        } else {
            throw DataError("classify_types: subspace " + std::to_string(s) + " has unmatched distribution " +
                            wd.to_string());
        }
        family.distributions.push_back(std::move(wd));
        for (gf3::Element t = 0; t < 3; ++t) family.flats.push_back({s, t});
    }
    return family;
}

Graph build_gamma() { return codes::coset_graph(codes::golay_code()); }

LabeledModel build_sigma_coordinate(const FlatFamily& family) {
    const codes::CosetTable table(codes::golay_code());
    const auto cosets = static_cast<Vertex>(table.coset_count());
    std::vector<graph::Edge> edges;
    for (Vertex y = 0; y < cosets; ++y) {
        const Vector& rep = table.leader(y);
        for (std::size_t f = 0; f < family.flats.size(); ++f) {
            const Flat& flat = family.flats[f];
            if (gf3::dot(family.subspaces[flat.subspace].functional, rep) == flat.translate) {
                edges.emplace_back(y, cosets + static_cast<Vertex>(f));
            }
        }
    }
    const auto total = cosets + static_cast<Vertex>(family.flats.size());
    return {Graph::from_edges(total, edges), range(0, cosets), range(cosets, total), Provenance::Coordinate};
}

LabeledModel build_sigma_coordinate() { return build_sigma_coordinate(classify_types()); }

Graph build_std_ag(std::size_t dimension) {
    if (dimension < 2 || dimension > 7) throw ResourceError("build_std_ag: dimension must be between 2 and 7");
    std::vector<Vector> functionals;
    for (auto& f : gf3::canonical_functionals(dimension)) {
        if (f[0] != 0) functionals.push_back(std::move(f));
    }
    std::size_t points = 1;
    for (std::size_t i = 0; i < dimension; ++i) points *= 3;

    std::vector<graph::Edge> edges;
    for (std::size_t p = 0; p < points; ++p) {
        Vector x(dimension);
        std::size_t code = p;
        for (std::size_t i = dimension; i-- > 0;) {
            x.set(i, static_cast<gf3::Element>(code % 3));
            code /= 3;
        }
        for (std::size_t f = 0; f < functionals.size(); ++f) {
            const auto t = gf3::dot(functionals[f], x);
            edges.emplace_back(static_cast<Vertex>(p), static_cast<Vertex>(points + 3 * f + t));
        }
    }
    return Graph::from_edges(points + 3 * functionals.size(), edges);
}

Graph build_lambda_coordinate() {
    const codes::CosetTable table(codes::golay_code());
    const auto n = static_cast<Vertex>(table.coset_count());
    std::vector<graph::Edge> edges;
    for (Vertex y = 0; y < n; ++y) {
        for (Vertex z = y + 1; z < n; ++z) {
            const Vector rep = table.representative(gf3::vec_sub(table.leader(y), table.leader(z)));
            if (gf3::hamming_weight(rep) == 1 && rep[0] == 0) edges.emplace_back(y, z);
        }
    }
    return Graph::from_edges(n, edges);
}

std::size_t OrbitalContext::id_for_length(std::size_t length) const {
    std::size_t found = 0;
    std::size_t matches = 0;
    for (std::size_t id = 0; id < decomposition.rank(); ++id) {
        if (decomposition.suborbit(id).size() == length) {
            found = id;
            ++matches;
        }
    }
    if (matches != 1) {
        throw StructureError("orbital models: " + std::to_string(matches) + " suborbits of length " +
                             std::to_string(length));
    }
    return found;
}

OrbitalContext load_orbital_context(std::string_view generator_text) {
    std::vector<permaction::Permutation> gens;
    for (auto& named : permaction::parse_generator_file(generator_text, kActionDegree)) {
        gens.push_back(std::move(named.permutation));
    }
    permaction::GroupAction action(kActionDegree, std::move(gens));
    auto decomposition = permaction::orbitals(action, 0);

    OrbitalContext ctx{std::move(action), std::move(decomposition), {}, {}, {}};
    for (std::size_t id = 0; id < ctx.decomposition.rank(); ++id) {
        ctx.id_of_length[ctx.decomposition.suborbit(id).size()] = id;
    }
    const std::size_t delta_id = ctx.id_for_length(45);
    const std::vector<std::size_t> ids{delta_id};
    const auto delta = permaction::orbital_union_graph(ctx.decomposition, ids);
    const auto side = graph::bipartition(delta);
    if (!side) throw StructureError("orbital models: the 45-suborbit graph is not connected and bipartite");
    for (Vertex v = 0; v < kActionDegree; ++v) ((*side)[v] == 0 ? ctx.coset_half : ctx.flat_half).push_back(v);
    return ctx;
}

std::vector<std::size_t> suborbit_lengths(OrbitalModel which) {
    switch (which) {
        case OrbitalModel::Delta: return {45};
        case OrbitalModel::Upsilon: return {20, 36};
        case OrbitalModel::Sigma: return {36, 45};
    }
    return {};
}

std::vector<std::size_t> suborbit_lengths(OrbitalHalfGraph which) {
    return which == OrbitalHalfGraph::Lambda ? std::vector<std::size_t>{20} : std::vector<std::size_t>{2, 20};
}

namespace {

std::vector<std::size_t> ids_for(const OrbitalContext& ctx, const std::vector<std::size_t>& lengths) {
    std::vector<std::size_t> ids;
    for (auto len : lengths) {
        const auto id = ctx.id_for_length(len);
        ids.push_back(id);
        if (!ctx.decomposition.is_self_paired(id)) ids.push_back(ctx.decomposition.paired(id));
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

}  // namespace

LabeledModel build_from_orbitals(const OrbitalContext& ctx, OrbitalModel which) {
    const auto ids = ids_for(ctx, suborbit_lengths(which));
    return {permaction::orbital_union_graph(ctx.decomposition, ids), ctx.coset_half, ctx.flat_half,
            Provenance::Orbital};
}

graph::InducedSubgraph build_from_orbitals(const OrbitalContext& ctx, OrbitalHalfGraph which) {
    const auto ids = ids_for(ctx, suborbit_lengths(which));
    const auto full = permaction::orbital_union_graph(ctx.decomposition, ids);
    return graph::induced_subgraph(full, ctx.coset_half);
}

BlockReport verify_koolen_riebeek_blocks(const OrbitalContext& ctx) {
    const auto delta = build_from_orbitals(ctx, OrbitalModel::Delta);
    const auto gamma_half = build_from_orbitals(ctx, OrbitalHalfGraph::GammaHalf);

    std::vector<std::uint32_t> local(kActionDegree, graph::kUnreachable);
    for (std::size_t i = 0; i < gamma_half.label_map.size(); ++i) local[gamma_half.label_map[i]] = static_cast<std::uint32_t>(i);

    BlockReport report;
    for (Vertex f : delta.half_b) {
        ++report.blocks;
        const auto block = delta.graph.neighbors(f);
        if (block.size() == 45) ++report.blocks_of_size_45;
        bool coclique = true;
        for (std::size_t i = 0; i < block.size() && coclique; ++i) {
            for (std::size_t j = i + 1; j < block.size() && coclique; ++j) {
                const auto a = local[block[i]];
                const auto b = local[block[j]];
                if (a == graph::kUnreachable || b == graph::kUnreachable) {
                    coclique = false;
                    if (report.counterexamples.size() < 5) {
                        report.counterexamples.push_back("block of " + std::to_string(f + 1) +
                                                         " leaves the coset half");
                    }
                } else if (gamma_half.graph.has_edge(a, b)) {
                    coclique = false;
                    if (report.counterexamples.size() < 5) {
                        report.counterexamples.push_back("block of " + std::to_string(f + 1) + " contains edge " +
                                                         std::to_string(block[i] + 1) + "-" +
                                                         std::to_string(block[j] + 1));
                    }
                }
            }
        }
        if (coclique) ++report.cocliques;
    }

    const auto halves = graph::bipartite_halves(delta.graph);
    const bool coset_first = halves.first_vertices == gamma_half.label_map;
    const Graph& halved = coset_first ? halves.first : halves.second;
    report.halved_equals_complement =
        (coset_first || halves.second_vertices == gamma_half.label_map) && halved == graph::complement(gamma_half.graph);
    if (!report.halved_equals_complement && report.counterexamples.size() < 5) {
        report.counterexamples.push_back("halved graph differs from the complement of the (2+20) graph");
    }
    return report;
}

std::vector<Claim> cross_verify(const OrbitalContext& ctx, const CrossVerifyOptions& options) {
    using Clock = std::chrono::steady_clock;
    std::vector<Claim> claims;

    auto iso_claim = [&](std::string id, std::string description, const Graph& a, const Graph& b) {
        Claim c{std::move(id), std::move(description), "isomorphic", "", Verdict::Skipped, 0.0};
        if (!options.run_isomorphism) {
            c.observed = "skipped";
        } else {
            const auto start = Clock::now();
            const auto result = graph::are_isomorphic(a, b, options.isomorphism);
            c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
            const bool certified = result && graph::is_isomorphism(a, b, result.mapping);
            c.observed = std::string(graph::to_string(result.verdict)) + " (" +
                         std::to_string(result.refinement_steps) + " refinement steps)";
            c.verdict = certified ? Verdict::Pass : Verdict::Fail;
        }
        claims.push_back(std::move(c));
    };
    auto srg_claim = [&](std::string id, std::string description, const Graph& g, graph::SrgParameters expected) {
        const auto start = Clock::now();
        const auto observed = graph::srg_parameters(g);
        Claim c{std::move(id), std::move(description), expected.to_string(),
                observed ? observed->to_string() : "not strongly regular",
                observed == expected ? Verdict::Pass : Verdict::Fail, 0.0};
        c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        claims.push_back(std::move(c));
    };

    const auto sigma_orbital = build_from_orbitals(ctx, OrbitalModel::Sigma);
    const auto sigma_coordinate = build_sigma_coordinate();
    const auto std_ag = build_std_ag(5);
    const auto lambda_orbital = build_from_orbitals(ctx, OrbitalHalfGraph::Lambda);
    const auto lambda_coordinate = build_lambda_coordinate();
    const auto shortened = codes::coset_graph(codes::shorten(codes::golay_code(), 0));
    const auto upsilon = build_from_orbitals(ctx, OrbitalModel::Upsilon);

    iso_claim("iso.sigma.orbital-coordinate", "orbital Sigma is isomorphic to the coordinate Sigma",
              sigma_orbital.graph, sigma_coordinate.graph);
    iso_claim("iso.sigma.coordinate-ag5", "coordinate Sigma is isomorphic to the AG(5,3) net graph",
              sigma_coordinate.graph, std_ag);
    iso_claim("iso.lambda.orbital-coordinate", "orbital Lambda is isomorphic to the coordinate Lambda",
              lambda_orbital.graph, lambda_coordinate);
    iso_claim("iso.lambda.coordinate-shortened", "coordinate Lambda is isomorphic to the shortened-code coset graph",
              lambda_coordinate, shortened);
    srg_claim("fold.upsilon", "folded orbital Upsilon is strongly regular", graph::antipodal_fold(upsilon.graph).folded,
              {162, 56, 10, 24});
    srg_claim("fold.lambda", "folded orbital Lambda is strongly regular",
              graph::antipodal_fold(lambda_orbital.graph).folded, {81, 20, 1, 6});
    return claims;
}

IncidenceExperiment literal_incidence_experiment(const FlatFamily& family, IncidenceRule rule) {
    const codes::CosetTable table(codes::golay_code());
    const auto cosets = static_cast<Vertex>(table.coset_count());
    std::vector<graph::Edge> edges;
    for (Vertex y = 0; y < cosets; ++y) {
        const Vector& rep = table.leader(y);
        for (std::size_t f = 0; f < family.flats.size(); ++f) {
            const Flat& flat = family.flats[f];
            if (family.types[flat.subspace] != SubspaceType::TypeI) continue;
            if (gf3::dot(family.subspaces[flat.subspace].functional, rep) == flat.translate) {
                edges.emplace_back(y, cosets + static_cast<Vertex>(f));
            }
        }
    }

    IncidenceExperiment out;
    out.rule = rule;
    out.graph = Graph::from_edges(cosets + family.flats.size(), edges);
    for (Vertex y = 0; y < cosets; ++y) ++out.coset_degrees[out.graph.degree(y)];
    for (std::size_t f = 0; f < family.flats.size(); ++f) {
        const auto degree = out.graph.degree(cosets + static_cast<Vertex>(f));
        ++out.flat_degrees[degree];
        ++out.flat_degrees_by_type[family.types[family.flats[f].subspace]][degree];
    }
    std::map<std::size_t, std::size_t> all = out.coset_degrees;
    for (const auto& [d, n] : out.flat_degrees) all[d] += n;
    out.regular = all.size() == 1;
    out.connected = graph::is_connected(out.graph);
    if (out.connected) out.array = graph::is_distance_regular(out.graph);

    std::ostringstream s;
    s << "coset degrees: " << histogram_string(out.coset_degrees)
      << "; flat degrees (Type I): " << histogram_string(out.flat_degrees_by_type[SubspaceType::TypeI])
      << "; flat degrees (Type II): " << histogram_string(out.flat_degrees_by_type[SubspaceType::TypeII])
      << "; regular: " << (out.regular ? "yes" : "no") << "; connected: " << (out.connected ? "yes" : "no")
      << "; distance-regular: " << (out.array ? out.array->to_string() : "no");
    out.summary = s.str();
    return out;
}

}  // namespace golay486::constructions
