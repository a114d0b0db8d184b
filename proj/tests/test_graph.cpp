#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "golay486/graph.hpp"
#include "golay486/isomorphism.hpp"
#include "support/oracles.hpp"

using namespace golay486;
using namespace golay486::graph;

namespace {

// graph6 written straight from the format description.
std::string naive_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    std::vector<int> bits;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) bits.push_back(g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)));
    while (bits.size() % 6) bits.push_back(0);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = v * 2 + bits[k + b];
        out.push_back(static_cast<char>(v + 63));
    }
    return out;
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<Vertex> p(a.vertex_count());
    std::iota(p.begin(), p.end(), Vertex{0});
    do {
        if (is_isomorphism(a, b, p)) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace

TEST_CASE("construction") {
    const std::vector<Edge> edges{{0, 1}, {1, 0}, {1, 2}};
    const auto g = Graph::from_edges(3, edges);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), InputError);
    const std::vector<Edge> far{{0, 3}};
    CHECK_THROWS_AS(Graph::from_edges(3, far), InputError);
}

TEST_CASE("distances agree with Floyd-Warshall") {
    for (const auto& g : oracle::small_family()) {
        const auto d = oracle::floyd_warshall(g);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            const auto bfs = bfs_distances(g, v);
            for (Vertex w = 0; w < g.vertex_count(); ++w) {
                const auto expect = d[v][w] == oracle::kInf ? kUnreachable : static_cast<std::uint32_t>(d[v][w]);
                CHECK(bfs[w] == expect);
            }
        }
    }
}

TEST_CASE("distance-regularity agrees with pair counting on small graphs") {
    std::size_t regular = 0;
    for (const auto& g : oracle::small_family()) {
        if (!is_connected(g)) {
            CHECK_THROWS_AS(is_distance_regular(g), StructureError);
            continue;
        }
        const auto got = is_distance_regular(g);
        const auto expect = oracle::drg_by_pair_counting(g);
        REQUIRE(got.has_value() == expect.has_value());
        if (got) {
            ++regular;
            CHECK(got->b == expect->b);
            CHECK(got->c == expect->c);
            CHECK(got->vertex_count() == g.vertex_count());
        }
    }
    CHECK(regular >= 25);
}

TEST_CASE("known arrays") {
    const auto petersen = is_distance_regular(oracle::generalized_petersen(5, 2));
    REQUIRE(petersen);
    CHECK(petersen->to_string() == "{3,2; 1,1}");
    const auto cube = is_distance_regular(oracle::generalized_petersen(4, 1));
    REQUIRE(cube);
    CHECK(cube->to_string() == "{3,2,1; 1,2,3}");
    CHECK(cube->is_bipartite());
    CHECK(cube->is_antipodal());
    CHECK(cube->antipodal_class_size() == 2);
    CHECK_FALSE(is_distance_regular(oracle::path(4)));
    CHECK_FALSE(is_distance_regular(oracle::generalized_petersen(5, 1)));
}

TEST_CASE("intersection array arithmetic") {
    const auto a = IntersectionArray::parse("{45,44,36,5; 1,9,40,45}");
    CHECK(a.class_sizes() == std::vector<std::size_t>{1, 45, 220, 198, 22});
    CHECK(a.vertex_count() == 486);
    CHECK(a.is_bipartite());
    CHECK_FALSE(a.is_antipodal());
    const auto l = IntersectionArray::parse("{20,18,4,1;1,2,18,20}");
    CHECK(l.class_sizes() == std::vector<std::size_t>{1, 20, 180, 40, 2});
    CHECK(l.is_antipodal());
    CHECK(l.antipodal_class_size() == 3);
    const auto u = IntersectionArray::parse("{56,45,16,1; 1,8,45,56}");
    CHECK(u.antipodal_class_size() == 3);
    CHECK_FALSE(u.is_bipartite());
    const auto s = IntersectionArray::parse("{81,80,54,1; 1,27,80,81}");
    CHECK(s.is_bipartite());
    CHECK(s.is_antipodal());
    CHECK(IntersectionArray::parse(a.to_string()) == a);
    CHECK_THROWS_AS(IntersectionArray::parse("{3,2; 1}"), ParseError);
    CHECK_THROWS_AS(IntersectionArray::parse("{3,2; 1,1} x"), ParseError);
    CHECK_THROWS_AS((IntersectionArray{{3, 2}, {2, 1}}.validate()), InputError);
    CHECK_FALSE((IntersectionArray{{5, 2}, {1, 3}}.is_feasible()));
}

TEST_CASE("strongly regular parameters") {
    const auto p = srg_parameters(oracle::generalized_petersen(5, 2));
    REQUIRE(p);
    CHECK(*p == SrgParameters{10, 3, 0, 1});
    CHECK(p->satisfies_counting_identity());
    CHECK(p->to_string() == "(10,3,0,1)");
    CHECK(*srg_parameters(complement(oracle::generalized_petersen(5, 2))) == SrgParameters{10, 6, 3, 4});
    CHECK_FALSE(srg_parameters(oracle::cycle(6)));
    CHECK_FALSE(srg_parameters(oracle::complete(5)));
}

TEST_CASE("complement is an involution") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) {
        const auto g = oracle::random_graph(9, 0.4, rng);
        const auto c = complement(g);
        CHECK(c.edge_count() + g.edge_count() == 36);
        CHECK(complement(c) == g);
    }
}

TEST_CASE("bipartite halves of the cube") {
    const auto h = bipartite_halves(oracle::generalized_petersen(4, 1));
    CHECK(h.first_vertices.size() == 4);
    CHECK(h.first.edge_count() == 6);
    CHECK(h.second.edge_count() == 6);
    CHECK(h.first_vertices.front() == 0);
    CHECK_THROWS_AS(bipartite_halves(oracle::cycle(5)), StructureError);
}

TEST_CASE("antipodal folds") {
    const auto f = antipodal_fold(oracle::cycle(6));
    CHECK(f.classes.size() == 3);
    CHECK(f.classes[0] == std::vector<Vertex>{0, 3});
    CHECK(f.folded == oracle::complete(3));
    const auto cube = antipodal_fold(oracle::generalized_petersen(4, 1));
    CHECK(brute_isomorphic(cube.folded, oracle::complete(4)));
    CHECK_THROWS_AS(antipodal_fold(oracle::generalized_petersen(5, 2)), StructureError);
}

TEST_CASE("induced subgraph keeps labels") {
    const auto g = oracle::cycle(6);
    const std::vector<Vertex> keep{4, 0, 5};
    const auto s = induced_subgraph(g, keep);
    CHECK(s.label_map == std::vector<Vertex>{0, 4, 5});
    CHECK(s.graph.edge_count() == 2);
    CHECK(s.graph.has_edge(0, 2));
    CHECK(s.graph.has_edge(1, 2));
}

TEST_CASE("spectrum from the intersection matrix") {
    auto near = [](const std::vector<double>& got, const std::vector<double>& expect) {
        if (got.size() != expect.size()) return false;
        for (std::size_t i = 0; i < got.size(); ++i)
            if (std::abs(got[i] - expect[i]) > 1e-9) return false;
        return true;
    };
    CHECK(near(intersection_spectrum(IntersectionArray::parse("{3,2; 1,1}")), {3, 1, -2}));
    CHECK(near(intersection_spectrum(IntersectionArray::parse("{2,1,1; 1,1,2}")), {2, 1, -1, -2}));
    CHECK(near(intersection_spectrum(IntersectionArray::parse("{22,20; 1,2}")), {22, 4, -5}));
}

TEST_CASE("graph6 known strings") {
    CHECK(graph6_encode(oracle::complete(3)) == "Bw");
    CHECK(graph6_encode(Graph(1)) == "@");
    CHECK(graph6_encode(Graph(0)) == "?");
    CHECK(graph6_decode("Bw") == oracle::complete(3));
    CHECK(graph6_decode(">>graph6<<Bw\n") == oracle::complete(3));
}

TEST_CASE("graph6 agrees with a naive encoder and round-trips") {
    std::mt19937_64 rng(2);
    for (std::size_t n : {2u, 5u, 12u, 62u, 63u, 100u, 243u}) {
        const auto g = oracle::random_graph(n, 0.3, rng);
        const auto text = graph6_encode(g);
        CHECK(text == naive_graph6(g));
        CHECK(graph6_decode(text) == g);
    }
}

TEST_CASE("graph6 errors carry offsets") {
    auto offset = [](std::string_view text) -> std::size_t {
        try {
            graph6_decode(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        return 999;
    };
    CHECK(offset("") == 0);
    CHECK(offset("B") == 1);
    CHECK(offset("B!") == 1);
    CHECK(offset("Bx") == 1);  // padding bits set
    CHECK(offset("Bww") == 2);
}

TEST_CASE("isomorphism agrees with brute force on small graphs") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 4 + static_cast<std::size_t>(trial % 4);
        const auto a = oracle::random_graph(n, 0.5, rng);
        const auto b = trial % 2 ? oracle::relabel(a, random_permutation(n, rng)) : oracle::random_graph(n, 0.5, rng);
        const auto r = are_isomorphic(a, b);
        REQUIRE(r.verdict != IsomorphismVerdict::BudgetExhausted);
        CHECK(static_cast<bool>(r) == brute_isomorphic(a, b));
        if (r) CHECK(is_isomorphism(a, b, r.mapping));
    }
}

TEST_CASE("isomorphism on regular graphs that refinement cannot split") {
    CHECK(are_isomorphic(oracle::cycle(6), oracle::relabel(oracle::cycle(6), {3, 1, 5, 0, 2, 4})));
    const std::vector<Edge> triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
    const auto r = are_isomorphic(oracle::cycle(6), Graph::from_edges(6, triangles));
    CHECK(r.verdict == IsomorphismVerdict::NonIsomorphic);
    CHECK(are_isomorphic(oracle::generalized_petersen(5, 2), oracle::generalized_petersen(5, 1)).verdict ==
          IsomorphismVerdict::NonIsomorphic);
    std::mt19937_64 rng(8);
    const auto p = oracle::generalized_petersen(5, 2);
    const auto q = oracle::relabel(p, random_permutation(10, rng));
    const auto r2 = are_isomorphic(p, q);
    REQUIRE(r2);
    CHECK(is_isomorphism(p, q, r2.mapping));
}

TEST_CASE("isomorphism budget") {
    IsomorphismOptions tight;
    tight.refinement_budget = 1;
    const auto r = are_isomorphic(oracle::generalized_petersen(5, 2), oracle::generalized_petersen(5, 2), tight);
    CHECK(r.verdict == IsomorphismVerdict::BudgetExhausted);
    CHECK_FALSE(r);
    CHECK(std::string(to_string(r.verdict)) == "budget-exhausted");
}

TEST_CASE("is_isomorphism rejects non-bijections") {
    const auto g = oracle::cycle(4);
    CHECK_FALSE(is_isomorphism(g, g, {0, 0, 1, 2}));
    CHECK_FALSE(is_isomorphism(g, g, {0, 1, 2}));
    CHECK_FALSE(is_isomorphism(g, g, {0, 2, 1, 3}));
    CHECK(is_isomorphism(g, g, {1, 2, 3, 0}));
}
