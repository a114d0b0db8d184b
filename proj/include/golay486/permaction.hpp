#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "golay486/error.hpp"
#include "golay486/graph.hpp"

// Permutations, permutation-group actions and their orbitals.
namespace golay486::permaction {

using Point = std::uint32_t;
using BigInt = boost::multiprecision::cpp_int;

/// A bijection of 0..n-1. External text uses 1-based points.
class Permutation {
public:
    Permutation() = default;
    /// Throws InputError unless `images` is a bijection of 0..size-1.
    explicit Permutation(std::vector<Point> images);
    static Permutation identity(std::size_t degree);

    std::size_t degree() const noexcept { return images_.size(); }
    Point operator()(Point p) const noexcept { return images_[p]; }
    std::span<const Point> images() const noexcept { return images_; }
    bool is_identity() const noexcept;
    /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
    std::vector<std::vector<Point>> cycles() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<Point> images_;
};

/// Left-to-right product: apply p, then q.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// Lengths of all cycles including fixed points, descending.
std::vector<std::size_t> cycle_type(const Permutation& p);
/// lcm of the cycle lengths.
BigInt order_of(const Permutation& p);

/// Parses a product of disjoint cycles of 1-based points, e.g. "(1,2,3)(4,5)".
///
/// Whitespace, newlines and LaTeX "\\" line breaks may appear between tokens, and
/// the text may end in ';', '.' or '}'. Unmentioned points are fixed. Repeated or
/// out-of-range points and malformed tokens throw ParseError with the byte offset.
Permutation parse_cycles(std::string_view text, std::size_t degree);
/// 1-based cycle notation; "()" for the identity.
std::string to_cycle_string(const Permutation& p);

struct NamedPermutation {
    std::string name;
    Permutation permutation;
};

/// A sequence of assignments "name := <cycles>", each possibly spanning lines.
/// ParseError offsets refer to the whole text.
std::vector<NamedPermutation> parse_generator_file(std::string_view text, std::size_t degree);

class GroupAction {
public:
    /// All generators must have the given degree.
    GroupAction(std::size_t degree, std::vector<Permutation> generators);

    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }

private:
    std::size_t degree_;
    std::vector<Permutation> generators_;
};

/// Closure of {point} under the generators, ascending.
std::vector<Point> orbit(const GroupAction& action, Point point);
bool is_transitive(const GroupAction& action);

inline constexpr std::uint64_t kDefaultSeed = 1;

/// Base and strong generating set, with explicit transversals.
class StabilizerChain {
public:
    struct Level {
        Point base_point = 0;
        std::vector<Permutation> strong_generators;
        /// transversal_index[x] indexes `transversal` for orbit points, -1 elsewhere.
        std::vector<std::int32_t> transversal_index;
        /// transversal[i] maps base_point to orbit[i].
        std::vector<Permutation> transversal;
        std::vector<Point> orbit;
    };

    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Level>& levels() const noexcept { return levels_; }
    std::vector<Point> base() const;
    BigInt order() const;
    bool contains(const Permutation& p) const;

private:
    friend StabilizerChain schreier_sims(const GroupAction& action, std::uint64_t seed);

    std::size_t degree_ = 0;
    std::vector<Level> levels_;
};

/// Random Schreier-Sims followed by a deterministic completion pass that sifts every
/// Schreier generator at every level; the result is exact for any seed.
StabilizerChain schreier_sims(const GroupAction& action, std::uint64_t seed = kDefaultSeed);
BigInt group_order(const GroupAction& action, std::uint64_t seed = kDefaultSeed);

/// Orbits of the action on ordered pairs, numbered relative to a base point.
///
/// Id 0 is the diagonal. The others are ordered by suborbit size, then by the
/// smallest point of the suborbit.
class OrbitalDecomposition {
public:
    std::size_t degree() const noexcept { return degree_; }
    Point base() const noexcept { return base_; }
    std::size_t rank() const noexcept { return suborbits_.size(); }
    std::uint32_t id(Point x, Point y) const noexcept { return pair_class_[static_cast<std::size_t>(x) * degree_ + y]; }
    /// Points y with (base, y) in orbital `id`, ascending.
    const std::vector<Point>& suborbit(std::size_t id) const { return suborbits_.at(id); }
    std::vector<std::size_t> suborbit_sizes() const;
    /// Id of the transposed orbital.
    std::size_t paired(std::size_t id) const { return pairing_.at(id); }
    bool is_self_paired(std::size_t id) const { return pairing_.at(id) == id; }

private:
    friend OrbitalDecomposition orbitals(const GroupAction& action, Point base);

    std::size_t degree_ = 0;
    Point base_ = 0;
    std::vector<std::uint32_t> pair_class_;
    std::vector<std::vector<Point>> suborbits_;
    std::vector<std::size_t> pairing_;
};

/// Throws StructureError for an intransitive action.
OrbitalDecomposition orbitals(const GroupAction& action, Point base = 0);

/// Undirected graph whose edges are the images of the seed pairs under the group.
graph::Graph edge_orbit_graph(const GroupAction& action, std::span<const graph::Edge> seeds);

/// Edges are the pairs in the chosen orbitals. The selection must be closed under
/// pairing and must not contain the diagonal, else InputError.
graph::Graph orbital_union_graph(const OrbitalDecomposition& decomposition, std::span<const std::size_t> ids);

struct OrbitalUnion {
    std::vector<std::size_t> ids;
    graph::IntersectionArray array;
};

inline constexpr std::size_t kMaxScanRank = 24;

/// Every nonempty pairing-closed union of nontrivial orbitals that gives a connected
/// distance-regular graph, in ascending order of the union's bit mask.
std::vector<OrbitalUnion> scan_orbital_unions(const OrbitalDecomposition& decomposition);

struct CollapsedMatrix {
    std::vector<std::size_t> suborbit_sizes;
    /// entries[i][j]: neighbours in suborbit j of any vertex of suborbit i.
    std::vector<std::vector<std::size_t>> entries;
};

/// Throws StructureError if the graph is not a union of orbitals, or names two
/// vertices of one suborbit with different neighbour counts.
CollapsedMatrix collapsed_matrix(const graph::Graph& g, const OrbitalDecomposition& decomposition);

/// Whether every generator maps every edge to an edge.
bool verify_invariance(const GroupAction& action, const graph::Graph& g);

}  // namespace golay486::permaction
