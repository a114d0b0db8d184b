#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "golay486/error.hpp"

namespace golay486::graph {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Undirected simple graph on vertices 0..n-1.
///
/// Adjacency is held twice: sorted neighbour lists for traversal and a packed bit
/// matrix for intersection counts. Both are immutable after construction.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n);

    /// Duplicate edges (in either orientation) collapse to one. Loops and
    /// out-of-range endpoints throw InputError.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::span<const Vertex> neighbors(Vertex v) const noexcept { return adjacency_[v]; }
    std::size_t degree(Vertex v) const noexcept { return adjacency_[v].size(); }
    bool has_edge(Vertex u, Vertex v) const noexcept {
        return (bits_[u * words_ + (v >> 6)] >> (v & 63U)) & 1U;
    }

    std::size_t words_per_row() const noexcept { return words_; }
    std::span<const std::uint64_t> adjacency_bits(Vertex v) const noexcept {
        return {bits_.data() + v * words_, words_};
    }

    /// Every edge once as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::uint64_t> bits_;
    std::size_t words_ = 0;
    std::size_t edge_count_ = 0;
};

/// {b_0, ..., b_{d-1}; c_1, ..., c_d}.
struct IntersectionArray {
    std::vector<std::size_t> b;
    std::vector<std::size_t> c;

    std::size_t diameter() const noexcept { return b.size(); }
    std::size_t valency() const noexcept { return b.empty() ? 0 : b.front(); }
    /// b_i with the convention b_d = 0.
    std::size_t b_at(std::size_t i) const noexcept { return i < b.size() ? b[i] : 0; }
    /// c_i with the convention c_0 = 0.
    std::size_t c_at(std::size_t i) const noexcept { return i == 0 ? 0 : c[i - 1]; }
    /// a_i = k - b_i - c_i; negative values are reported by validate().
    long long a_at(std::size_t i) const noexcept {
        return static_cast<long long>(valency()) - static_cast<long long>(b_at(i)) -
               static_cast<long long>(c_at(i));
    }

    /// Throws InputError when c_1 != 1, some entry is zero, some a_i < 0, or
    /// the class sizes k_i are not integral.
    void validate() const;
    bool is_feasible() const noexcept;

    /// Sizes k_0..k_d via k_{i+1} = k_i b_i / c_{i+1}.
    std::vector<std::size_t> class_sizes() const;
    std::size_t vertex_count() const;

    bool is_bipartite() const noexcept;
    /// b_i = c_{d-i} for every i other than floor(d/2).
    bool is_antipodal() const noexcept;
    /// 1 + k_d.
    std::size_t antipodal_class_size() const;

    /// "{45,44,36,5; 1,9,40,45}".
    std::string to_string() const;
    /// Accepts the to_string() format, whitespace-insensitive.
    static IntersectionArray parse(std::string_view text);

    friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
    friend auto operator<=>(const IntersectionArray&, const IntersectionArray&) = default;
};

struct SrgParameters {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t lambda = 0;
    std::size_t mu = 0;

    /// k(k - lambda - 1) = (n - k - 1) mu.
    bool satisfies_counting_identity() const noexcept {
        return k * (k - lambda - 1) == (n - k - 1) * mu;
    }
    std::string to_string() const;

    friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

/// Shortest-path distances from source; kUnreachable for other components.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);
bool is_connected(const Graph& g);
/// Largest finite distance from v.
std::size_t eccentricity(const Graph& g, Vertex v);

/// The intersection array when g is distance-regular, otherwise empty.
/// Throws StructureError on a disconnected graph.
std::optional<IntersectionArray> is_distance_regular(const Graph& g);

/// (n, k, lambda, mu) when g is a connected distance-regular graph of diameter 2.
std::optional<SrgParameters> srg_parameters(const Graph& g);

Graph complement(const Graph& g);

/// Two-colouring from vertex 0 when g is connected and bipartite.
std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g);

struct BipartiteHalves {
    Graph first;
    Graph second;
    /// Original labels of the vertices of `first` (the class of vertex 0) and `second`, ascending.
    std::vector<Vertex> first_vertices;
    std::vector<Vertex> second_vertices;
};

/// Distance-2 graph of a connected bipartite graph, split along the bipartition.
BipartiteHalves bipartite_halves(const Graph& g);

struct Folding {
    Graph folded;
    /// Antipodal classes, each ascending, ordered by smallest member.
    std::vector<std::vector<Vertex>> classes;
    /// class_of[v] is the index of v's class.
    std::vector<std::size_t> class_of;
};

/// Quotient of a distance-regular graph on the classes of the relation "distance 0 or d".
Folding antipodal_fold(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    /// label_map[i] is the original label of local vertex i.
    std::vector<Vertex> label_map;
};

/// Local labels follow the ascending order of the chosen vertices.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Eigenvalues of the tridiagonal intersection matrix, descending.
std::vector<double> intersection_spectrum(const IntersectionArray& array);

// graph6, without the optional ">>graph6<<" header.
std::string graph6_encode(const Graph& g);
/// Accepts an optional header and a trailing newline. Throws ParseError with the byte offset.
Graph graph6_decode(std::string_view text);

}  // namespace golay486::graph
