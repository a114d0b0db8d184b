#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "golay486/diagram.hpp"
#include "golay486/report.hpp"

using namespace golay486;
using namespace golay486::report;

namespace {

const VerificationReport& full_report() {
    static const VerificationReport r = verify_all();
    return r;
}

const Claim& find(const VerificationReport& r, std::string_view id) {
    for (const auto& c : r.claims)
        if (c.id == id) return c;
    FAIL("missing claim " << id);
    throw;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

// Minimal structural reader for the DOT subset the diagrams use.
struct Dot {
    std::map<std::string, std::string> node_labels;
    std::vector<std::tuple<std::string, std::string, std::string>> edges;  // tail, head, attributes
};

Dot read_dot(const std::string& text) {
    static const std::regex header(R"re(^graph "[^"]*" \{$)re");
    static const std::regex node(R"re(^  (\w+) \[label="([^"]*)"\];$)re");
    static const std::regex edge(R"re(^  (\w+) -- (\w+) \[([^\]]*)\];$)re");
    static const std::regex setting(R"re(^  (rankdir=LR|node \[shape=circle\]);$)re");
    std::istringstream in(text);
    std::string line;
    REQUIRE(std::getline(in, line));
    REQUIRE(std::regex_match(line, header));
    Dot dot;
    bool closed = false;
    while (std::getline(in, line)) {
        std::smatch m;
        REQUIRE_FALSE(closed);
        if (line == "}") {
            closed = true;
        } else if (std::regex_match(line, m, node)) {
            dot.node_labels[m[1]] = m[2];
        } else if (std::regex_match(line, m, edge)) {
            REQUIRE(dot.node_labels.contains(m[1]));
            REQUIRE(dot.node_labels.contains(m[2]));
            dot.edges.emplace_back(m[1], m[2], m[3]);
        } else {
            REQUIRE(std::regex_match(line, setting));
        }
    }
    CHECK(closed);
    return dot;
}

std::vector<std::string> labels_in_order(const Dot& dot, char prefix) {
    std::vector<std::string> out;
    for (std::size_t i = 0;; ++i) {
        auto it = dot.node_labels.find(std::string(1, prefix) + std::to_string(i));
        if (it == dot.node_labels.end()) return out;
        out.push_back(it->second);
    }
}

}  // namespace

TEST_CASE("full verification") {
    const auto& r = full_report();
    CHECK(r.schema_version == kSchemaVersion);
    CHECK(r.claims.size() == 30);
    CHECK(r.count(Verdict::Skipped) == 0);
    // Only the type count disagrees with the expected 45/36 split.
    CHECK(r.count(Verdict::Fail) == 1);
    CHECK(r.first_failure() == "flats.types");
    CHECK(find(r, "flats.types").observed == "I=36 II=45");
    CHECK_FALSE(r.all_passed());
    CHECK_FALSE(r.overall);
    for (const auto& id : {"code.golay", "gamma.srg", "group.order", "scan.arrays", "model.delta", "blocks.halved",
                           "iso.sigma.coordinate-ag5", "fold.lambda", "experiment.incidence"}) {
        CHECK(find(r, id).verdict == Verdict::Pass);
    }
    std::set<std::string> stages;
    for (const auto& t : r.timings) stages.insert(t.stage);
    CHECK(stages.contains("cross"));
}

TEST_CASE("claim ids are unique and grouped") {
    std::set<std::string> ids;
    const auto& groups = claim_groups();
    for (const auto& c : full_report().claims) {
        CHECK(ids.insert(c.id).second);
        const auto group = c.id.substr(0, c.id.find('.'));
        CHECK(std::find(groups.begin(), groups.end(), group) != groups.end());
    }
}

TEST_CASE("json round trip") {
    const auto& r = full_report();
    const auto back = from_json(to_json(r));
    CHECK(back.claims == r.claims);
    CHECK(back.timings == r.timings);
    CHECK(back.overall == r.overall);
    CHECK(to_json(back) == to_json(r));
    CHECK_THROWS_AS(from_json("{"), ParseError);
    CHECK_THROWS_AS(from_json(R"({"schema_version": 2, "claims": [], "timings": [], "overall": true})"), ParseError);
    CHECK_THROWS_AS(from_json(R"({"schema_version": 1})"), ParseError);
}

TEST_CASE("text report") {
    const auto text = to_text(full_report());
    CHECK(text.find("flats.types") != std::string::npos);
    CHECK(text.find("overall: FAIL (29 passed, 1 failed, 0 skipped)") != std::string::npos);
}

TEST_CASE("skipping groups") {
    VerifyOptions options;
    options.skip = {"flats", "iso", "scan"};
    const auto r = verify_all(options);
    CHECK(r.all_passed());
    CHECK(r.overall);
    CHECK(r.count(Verdict::Fail) == 0);
    for (const auto& c : r.claims) {
        const auto group = c.id.substr(0, c.id.find('.'));
        CHECK((c.verdict == Verdict::Skipped) == options.skip.contains(group));
    }
    options.skip = {"nonsense"};
    CHECK_THROWS_AS(verify_all(options), InputError);
}

TEST_CASE("generator file failures are environment errors") {
    VerifyOptions options;
    options.generator_path = (std::filesystem::temp_directory_path() / "golay486-missing.txt").string();
    std::filesystem::remove(*options.generator_path);
    CHECK_THROWS_AS(verify_all(options), DataError);
    options.generator_path = temp_file("golay486-corrupt.txt", "a := (1,2,\n").string();
    CHECK_THROWS_AS(verify_all(options), ParseError);
}

TEST_CASE("distance diagrams") {
    const auto delta = read_dot(diagram::distance_diagram_dot(graph::IntersectionArray::parse("{45,44,36,5; 1,9,40,45}")));
    CHECK(labels_in_order(delta, 'd') == std::vector<std::string>{"1", "45", "220", "198", "22"});
    CHECK(delta.edges.size() == 4);
    CHECK(std::get<2>(delta.edges[1]) == R"(taillabel="44", headlabel="9")");

    const auto upsilon =
        read_dot(diagram::distance_diagram_dot(graph::IntersectionArray::parse("{56,45,16,1; 1,8,45,56}")));
    // a_1 = 10, a_2 = 3, a_3 = 10: three loops and four steps.
    CHECK(upsilon.edges.size() == 7);
    CHECK(std::get<0>(upsilon.edges[0]) == "d1");
    CHECK(std::get<2>(upsilon.edges[0]) == R"(label="10")");
}

TEST_CASE("orbit diagrams") {
    const auto ctx = constructions::load_orbital_context();
    const auto upsilon = constructions::build_from_orbitals(ctx, constructions::OrbitalModel::Upsilon);
    const auto m = permaction::collapsed_matrix(upsilon.graph, ctx.decomposition);
    const auto dot = read_dot(diagram::orbit_diagram_dot(m, "upsilon"));
    CHECK(dot.node_labels.size() == 9);

    std::vector<std::size_t> half;
    for (std::size_t id = 0; id < ctx.decomposition.rank(); ++id) {
        if (std::binary_search(ctx.coset_half.begin(), ctx.coset_half.end(), ctx.decomposition.suborbit(id).front()))
            half.push_back(id);
    }
    std::vector<std::size_t> lambda_ids{ctx.id_for_length(20)};
    const auto lambda = permaction::collapsed_matrix(permaction::orbital_union_graph(ctx.decomposition, lambda_ids),
                                                     ctx.decomposition);
    const auto small = read_dot(diagram::orbit_diagram_dot(diagram::restrict_suborbits(lambda, half), "lambda"));
    CHECK(labels_in_order(small, 's') == std::vector<std::string>{"1", "2", "20", "40", "180"});
    CHECK_THROWS_AS(diagram::restrict_suborbits(lambda, {99}), InputError);
    permaction::CollapsedMatrix ragged{{1, 2}, {{0, 1}}};
    CHECK_THROWS_AS(diagram::orbit_diagram_dot(ragged), DimensionError);
}
