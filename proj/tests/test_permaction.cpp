#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "golay486/constructions.hpp"
#include "golay486/permaction.hpp"
#include "support/oracles.hpp"

using namespace golay486;
using namespace golay486::permaction;

namespace {

std::size_t parse_offset(std::string_view text, std::size_t degree) {
    try {
        parse_cycles(text, degree);
    } catch (const ParseError& e) {
        return e.position();
    }
    return 999;
}

std::vector<std::vector<std::uint32_t>> raw(const std::vector<Permutation>& gens) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& g : gens) out.emplace_back(g.images().begin(), g.images().end());
    return out;
}

std::vector<Permutation> bundled() {
    std::vector<Permutation> out;
    for (auto& n : parse_generator_file(constructions::bundled_generators(), 486)) out.push_back(n.permutation);
    return out;
}

BigInt lcm_of(const std::vector<std::size_t>& lengths) {
    BigInt l = 1;
    for (auto len : lengths) l = l / boost::multiprecision::gcd(l, BigInt(len)) * len;
    return l;
}

Permutation random_element(const std::vector<Permutation>& gens, std::mt19937_64& rng, int length = 30) {
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    auto p = Permutation::identity(gens.front().degree());
    for (int i = 0; i < length; ++i) p = compose(p, gens[pick(rng)]);
    return p;
}

}  // namespace

TEST_CASE("parse and print cycles") {
    const auto p = parse_cycles("(1,2,3)(4,5)", 6);
    CHECK(p(0) == 1);
    CHECK(p(2) == 0);
    CHECK(p(3) == 4);
    CHECK(p(5) == 5);
    CHECK(to_cycle_string(p) == "(1,2,3)(4,5)");
    CHECK(parse_cycles(to_cycle_string(p), 6) == p);
    CHECK(parse_cycles(" ( 1 , 2 )\\\\\n (3,4);", 4) == parse_cycles("(1,2)(3,4)", 4));
    CHECK(parse_cycles("", 3).is_identity());
    CHECK(to_cycle_string(Permutation::identity(3)) == "()");
}

TEST_CASE("parse errors report offsets") {
    CHECK(parse_offset("(1,2,1)", 5) == 5);
    CHECK(parse_offset("(1,6)", 5) == 3);
    CHECK(parse_offset("(0,1)", 5) == 1);
    CHECK(parse_offset("(1,2", 5) == 4);
    CHECK(parse_offset("(1,2) x", 5) == 6);
    CHECK(parse_offset("(1,2); (3,4)", 5) == 7);
    CHECK(parse_offset("(1;2)", 5) == 2);
}

TEST_CASE("composition is left to right") {
    const auto p = parse_cycles("(1,2)", 3);
    const auto q = parse_cycles("(2,3)", 3);
    CHECK(to_cycle_string(compose(p, q)) == "(1,3,2)");
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK_THROWS_AS(compose(p, Permutation::identity(4)), DimensionError);
    CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), InputError);
}

TEST_CASE("cycle type and order") {
    const auto p = parse_cycles("(1,2,3)(4,5)", 7);
    CHECK(cycle_type(p) == std::vector<std::size_t>{3, 2, 1, 1});
    CHECK(order_of(p) == 6);
    for (const auto& g : bundled()) CHECK(order_of(g) == lcm_of(cycle_type(g)));
}

TEST_CASE("generator file") {
    const auto gens = parse_generator_file(constructions::bundled_generators(), 486);
    REQUIRE(gens.size() == 3);
    CHECK(gens[0].name == "a");
    CHECK(gens[1].name == "b");
    CHECK(gens[2].name == "c");
    for (const auto& g : gens) CHECK(g.permutation.degree() == 486);

    const std::string text = "x := (1,2)\ny := (1,\n 9)";
    try {
        parse_generator_file(text, 5);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == text.find('9'));
    }
    CHECK_THROWS_AS(parse_generator_file("(1,2)", 5), ParseError);
    CHECK_THROWS_AS(parse_generator_file("x := (1,2)\nx := (2,3)", 5), ParseError);
}

TEST_CASE("orbits") {
    const GroupAction a(6, {parse_cycles("(1,2,3)", 6), parse_cycles("(4,5)", 6)});
    CHECK(orbit(a, 1) == std::vector<Point>{0, 1, 2});
    CHECK(orbit(a, 5) == std::vector<Point>{5});
    CHECK_FALSE(is_transitive(a));
    CHECK_THROWS_AS(orbitals(a), StructureError);
    CHECK(is_transitive(GroupAction(486, bundled())));
}

TEST_CASE("schreier-sims agrees with enumeration on small groups") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 4 + static_cast<std::size_t>(trial % 4);
        std::vector<Permutation> gens;
        for (int g = 0; g < 1 + trial % 3; ++g) {
            std::vector<Point> images(n);
            std::iota(images.begin(), images.end(), Point{0});
            // Mostly small-support permutations, so proper subgroups occur.
            std::shuffle(images.begin(), images.begin() + static_cast<long>(2 + (trial + g) % (n - 1)), rng);
            gens.emplace_back(images);
        }
        const GroupAction action(n, gens);
        const auto expected = oracle::enumerate_group(raw(gens), n).size();
        for (std::uint64_t seed : {1u, 2u, 99u}) CHECK(group_order(action, seed) == expected);
    }
}

TEST_CASE("schreier-sims on known groups") {
    const GroupAction s5(5, {parse_cycles("(1,2)", 5), parse_cycles("(1,2,3,4,5)", 5)});
    CHECK(group_order(s5) == 120);
    const GroupAction d5(5, {parse_cycles("(1,2,3,4,5)", 5), parse_cycles("(2,5)(3,4)", 5)});
    CHECK(group_order(d5) == 10);
    const GroupAction a4(4, {parse_cycles("(1,2,3)", 4), parse_cycles("(2,3,4)", 4)});
    const auto chain = schreier_sims(a4);
    CHECK(chain.order() == 12);
    CHECK(chain.contains(parse_cycles("(1,2)(3,4)", 4)));
    CHECK_FALSE(chain.contains(parse_cycles("(1,2)", 4)));
    CHECK(group_order(GroupAction(3, {})) == 1);
}

TEST_CASE("bundled action order against a deterministic oracle") {
    const auto gens = bundled();
    const oracle::NaiveSchreierSims naive(raw(gens), 486);
    BigInt naive_order = 1;
    for (auto s : naive.orbit_sizes()) naive_order *= s;
    CHECK(naive_order == 349920);

    const GroupAction action(486, gens);
    for (std::uint64_t seed : {1u, 7u, 12345u}) {
        const auto chain = schreier_sims(action, seed);
        CHECK(chain.order() == 349920);
        CHECK(chain.levels().front().orbit.size() == 486);
        std::mt19937_64 rng(seed);
        for (const auto& g : gens) CHECK(chain.contains(g));
        for (int i = 0; i < 10; ++i) CHECK(chain.contains(random_element(gens, rng)));
    }
}

TEST_CASE("orbital decomposition of the bundled action") {
    const GroupAction action(486, bundled());
    const auto d = orbitals(action, 0);
    CHECK(d.rank() == 9);
    CHECK(d.suborbit_sizes() == std::vector<std::size_t>{1, 2, 20, 36, 40, 45, 72, 90, 180});
    CHECK(d.suborbit(0) == std::vector<Point>{0});

    // Partition properties: size-summing, transpose-closed, and invariant.
    const auto sizes = d.suborbit_sizes();
    CHECK(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}) == 486);
    std::vector<std::size_t> pairs(d.rank(), 0);
    for (Point x = 0; x < 486; ++x) {
        for (Point y = 0; y < 486; ++y) {
            const auto id = d.id(x, y);
            ++pairs[id];
            CHECK(d.id(y, x) == d.paired(id));
        }
    }
    for (std::size_t i = 0; i < d.rank(); ++i) CHECK(pairs[i] == 486 * sizes[i]);
    for (const auto& g : action.generators()) {
        for (Point x = 0; x < 486; x += 17) {
            for (Point y = 0; y < 486; ++y) CHECK(d.id(g(x), g(y)) == d.id(x, y));
        }
    }
}

TEST_CASE("orbitals of a small action with unpaired orbitals") {
    const GroupAction c5(5, {parse_cycles("(1,2,3,4,5)", 5)});
    const auto d = orbitals(c5);
    CHECK(d.rank() == 5);
    CHECK(d.paired(1) == 4);
    CHECK_FALSE(d.is_self_paired(1));
    const std::vector<std::size_t> one{1};
    CHECK_THROWS_AS(orbital_union_graph(d, one), InputError);
    const std::vector<std::size_t> diagonal{0};
    CHECK_THROWS_AS(orbital_union_graph(d, diagonal), InputError);

    std::set<std::string> arrays;
    for (const auto& u : scan_orbital_unions(d)) arrays.insert(u.array.to_string());
    CHECK(arrays == std::set<std::string>{"{2,1; 1,1}", "{4; 1}"});
}

TEST_CASE("scan of the bundled action") {
    const GroupAction action(486, bundled());
    std::set<std::string> arrays;
    for (const auto& u : scan_orbital_unions(orbitals(action))) arrays.insert(u.array.to_string());
    const std::set<std::string> expected{"{485; 1}",
                                         "{243,242; 1,243}",
                                         "{483,2; 1,483}",
                                         "{45,44,36,5; 1,9,40,45}",
                                         "{56,45,16,1; 1,8,45,56}",
                                         "{81,80,54,1; 1,27,80,81}"};
    CHECK(arrays == expected);

    // Invariant under reordering the generators and moving the base point.
    auto gens = bundled();
    std::reverse(gens.begin(), gens.end());
    std::set<std::string> again;
    for (const auto& u : scan_orbital_unions(orbitals(GroupAction(486, gens), 7))) again.insert(u.array.to_string());
    CHECK(again == expected);
}

TEST_CASE("edge orbits and collapsed matrices") {
    const GroupAction action(486, bundled());
    const auto d = orbitals(action);
    for (std::size_t id = 1; id < d.rank(); ++id) {
        const std::vector<graph::Edge> seed{{0, d.suborbit(id).front()}};
        const auto g = edge_orbit_graph(action, seed);
        const std::vector<std::size_t> ids{id};
        CHECK(g == orbital_union_graph(d, ids));
        CHECK(verify_invariance(action, g));

        const auto m = collapsed_matrix(g, d);
        for (std::size_t i = 0; i < d.rank(); ++i) {
            std::size_t row = 0;
            for (std::size_t j = 0; j < d.rank(); ++j) {
                row += m.entries[i][j];
                // Double counting of edges between suborbits i and j.
                CHECK(m.entries[i][j] * m.suborbit_sizes[i] == m.entries[j][i] * m.suborbit_sizes[j]);
            }
            CHECK(row == d.suborbit(id).size());
        }
    }
    const std::vector<graph::Edge> bad{{0, 0}};
    CHECK_THROWS_AS(edge_orbit_graph(action, bad), InputError);
    const std::vector<graph::Edge> one_edge{{0, 1}};
    CHECK_THROWS_AS(collapsed_matrix(graph::Graph::from_edges(486, one_edge), d), StructureError);
    CHECK_FALSE(verify_invariance(action, graph::Graph::from_edges(486, one_edge)));
}
