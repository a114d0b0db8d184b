#include "golay486/graph.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

namespace golay486::graph {

namespace {

std::size_t popcount_and(std::span<const std::uint64_t> a, const std::vector<std::uint64_t>& b) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
    return total;
}

// Distance layers from `source` as bitsets; layers[i] holds the vertices at distance i.
struct Layers {
    std::vector<std::uint32_t> distance;
    std::vector<std::vector<std::uint64_t>> bits;
};

Layers distance_layers(const Graph& g, Vertex source) {
    Layers l;
    l.distance = bfs_distances(g, source);
    const std::size_t words = g.words_per_row();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto d = l.distance[v];
        if (d == kUnreachable) continue;
        if (l.bits.size() <= d) l.bits.resize(d + 1, std::vector<std::uint64_t>(words, 0));
        l.bits[d][v >> 6] |= std::uint64_t{1} << (v & 63U);
    }
    return l;
}

}  // namespace

Graph::Graph(std::size_t n) : adjacency_(n), words_((n + 63) / 64) { bits_.assign(n * words_, 0); }

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw InputError("graph: edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        }
        if (u == v) throw InputError("graph: loop at vertex " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& adj = g.adjacency_[v];
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
        for (Vertex w : adj) g.bits_[v * g.words_ + (w >> 6)] |= std::uint64_t{1} << (w & 63U);
        g.edge_count_ += adj.size();
    }
    g.edge_count_ /= 2;
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

void IntersectionArray::validate() const {
    if (b.size() != c.size()) throw InputError("intersection array: b and c differ in length");
    if (b.empty()) return;
    if (c.front() != 1) throw InputError("intersection array: c_1 must be 1");
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] == 0 || c[i] == 0) throw InputError("intersection array: entries must be positive");
    }
    for (std::size_t i = 0; i <= diameter(); ++i) {
        if (a_at(i) < 0) throw InputError("intersection array: a_" + std::to_string(i) + " is negative");
    }
    std::size_t k = 1;
    for (std::size_t i = 0; i < diameter(); ++i) {
        if ((k * b[i]) % c[i] != 0) throw InputError("intersection array: class sizes are not integral");
        k = k * b[i] / c[i];
    }
}

bool IntersectionArray::is_feasible() const noexcept {
    try {
        validate();
        return true;
    } catch (const InputError&) {
        return false;
    }
}

std::vector<std::size_t> IntersectionArray::class_sizes() const {
    validate();
    std::vector<std::size_t> k{1};
    for (std::size_t i = 0; i < diameter(); ++i) k.push_back(k.back() * b[i] / c[i]);
    return k;
}

std::size_t IntersectionArray::vertex_count() const {
    const auto k = class_sizes();
    return std::accumulate(k.begin(), k.end(), std::size_t{0});
}

bool IntersectionArray::is_bipartite() const noexcept {
    for (std::size_t i = 0; i <= diameter(); ++i) {
        if (a_at(i) != 0) return false;
    }
    return true;
}

bool IntersectionArray::is_antipodal() const noexcept {
    const std::size_t d = diameter();
    if (d < 2) return false;
    for (std::size_t i = 0; i < d; ++i) {
        if (i == d / 2) continue;
        if (b[i] != c_at(d - i)) return false;
    }
    return true;
}

std::size_t IntersectionArray::antipodal_class_size() const { return 1 + class_sizes().back(); }

std::string IntersectionArray::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < b.size(); ++i) out += (i ? "," : "") + std::to_string(b[i]);
    out += "; ";
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
    out += "}";
    return out;
}

IntersectionArray IntersectionArray::parse(std::string_view text) {
    IntersectionArray out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char ch) {
        skip();
        if (pos >= text.size() || text[pos] != ch) {
            throw ParseError(std::string("intersection array: expected '") + ch + "'", pos);
        }
        ++pos;
    };
    auto number_list = [&](std::vector<std::size_t>& into, char terminator) {
        while (true) {
            skip();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
                throw ParseError("intersection array: expected a number", pos);
            }
            std::size_t value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + static_cast<std::size_t>(text[pos++] - '0');
            }
            into.push_back(value);
            skip();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            expect(terminator);
            return;
        }
    };
    expect('{');
    number_list(out.b, ';');
    number_list(out.c, '}');
    skip();
    if (pos != text.size()) throw ParseError("intersection array: trailing characters", pos);
    if (out.b.size() != out.c.size()) throw ParseError("intersection array: b and c differ in length", 0);
    return out;
}

std::string SrgParameters::to_string() const {
    return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," +
           std::to_string(mu) + ")";
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
    std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
    if (source >= g.vertex_count()) throw InputError("bfs_distances: source out of range");
    std::vector<Vertex> queue{source};
    queue.reserve(g.vertex_count());
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] != kUnreachable) continue;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    const auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](auto x) { return x == kUnreachable; });
}

std::size_t eccentricity(const Graph& g, Vertex v) {
    std::size_t e = 0;
    for (auto d : bfs_distances(g, v)) {
        if (d != kUnreachable) e = std::max<std::size_t>(e, d);
    }
    return e;
}

std::optional<IntersectionArray> is_distance_regular(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) throw StructureError("is_distance_regular: empty graph");
    if (!is_connected(g)) throw StructureError("is_distance_regular: graph is disconnected");

    // Candidate array from vertex 0.
    const Layers base = distance_layers(g, 0);
    const std::size_t d = base.bits.size() - 1;
    IntersectionArray array;
    std::vector<std::size_t> a_expected(d + 1, 0);
    for (std::size_t i = 0; i <= d; ++i) {
        Vertex w = 0;
        while (base.distance[w] != i) ++w;
        const auto nb = g.adjacency_bits(w);
        if (i > 0) array.c.push_back(popcount_and(nb, base.bits[i - 1]));
        if (i < d) array.b.push_back(popcount_and(nb, base.bits[i + 1]));
        a_expected[i] = popcount_and(nb, base.bits[i]);
    }

    // Every ordered pair must reproduce the candidate.
    for (Vertex u = 0; u < n; ++u) {
        const Layers l = (u == 0) ? base : distance_layers(g, u);
        if (l.bits.size() != d + 1) return std::nullopt;
        for (Vertex w = 0; w < n; ++w) {
            const std::size_t i = l.distance[w];
            const auto nb = g.adjacency_bits(w);
            if (i > 0 && popcount_and(nb, l.bits[i - 1]) != array.c[i - 1]) return std::nullopt;
            if (i < d && popcount_and(nb, l.bits[i + 1]) != array.b[i]) return std::nullopt;
            if (popcount_and(nb, l.bits[i]) != a_expected[i]) return std::nullopt;
        }
    }
    return array;
}

std::optional<SrgParameters> srg_parameters(const Graph& g) {
    if (g.vertex_count() == 0 || !is_connected(g)) return std::nullopt;
    const auto array = is_distance_regular(g);
    if (!array || array->diameter() != 2) return std::nullopt;
    const std::size_t k = array->valency();
    return SrgParameters{g.vertex_count(), k, k - array->b[1] - 1, array->c[1]};
}

Graph complement(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(n * (n - (n > 0 ? 1 : 0)) / 2 - g.edge_count());
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

std::optional<std::vector<std::uint8_t>> bipartition(const Graph& g) {
    if (!is_connected(g)) return std::nullopt;
    const auto dist = bfs_distances(g, 0);
    std::vector<std::uint8_t> side(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) side[v] = static_cast<std::uint8_t>(dist[v] & 1U);
    for (const auto& [u, v] : g.edges()) {
        if (side[u] == side[v]) return std::nullopt;
    }
    return side;
}

BipartiteHalves bipartite_halves(const Graph& g) {
    if (g.vertex_count() == 0 || !is_connected(g)) throw StructureError("bipartite_halves: graph is disconnected");
    const auto side = bipartition(g);
    if (!side) throw StructureError("bipartite_halves: graph is not bipartite");

    BipartiteHalves out;
    std::vector<std::size_t> local(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto& members = (*side)[v] == 0 ? out.first_vertices : out.second_vertices;
        local[v] = members.size();
        members.push_back(v);
    }
    std::vector<Edge> first_edges;
    std::vector<Edge> second_edges;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        // Distance-2 neighbours: neighbours of neighbours, excluding u itself.
        std::vector<Vertex> two;
        for (Vertex w : g.neighbors(u)) {
            for (Vertex x : g.neighbors(w)) {
                if (x > u) two.push_back(x);
            }
        }
        std::sort(two.begin(), two.end());
        two.erase(std::unique(two.begin(), two.end()), two.end());
        auto& into = (*side)[u] == 0 ? first_edges : second_edges;
        for (Vertex x : two) {
            into.emplace_back(static_cast<Vertex>(local[u]), static_cast<Vertex>(local[x]));
        }
    }
    out.first = Graph::from_edges(out.first_vertices.size(), first_edges);
    out.second = Graph::from_edges(out.second_vertices.size(), second_edges);
    return out;
}

Folding antipodal_fold(const Graph& g) {
    const auto array = is_distance_regular(g);
    if (!array) throw StructureError("antipodal_fold: graph is not distance-regular");
    const std::size_t n = g.vertex_count();
    const std::size_t d = array->diameter();

    std::vector<std::vector<Vertex>> related(n);
    for (Vertex u = 0; u < n; ++u) {
        const auto dist = bfs_distances(g, u);
        for (Vertex v = 0; v < n; ++v) {
            if (dist[v] == 0 || dist[v] == d) related[u].push_back(v);
        }
    }
    auto violation = [&](Vertex x, Vertex y, Vertex z) {
        return StructureError("antipodal_fold: distance-" + std::to_string(d) + " relation is not transitive: " +
                              std::to_string(x) + "~" + std::to_string(y) + "~" + std::to_string(z) + " but not " +
                              std::to_string(x) + "~" + std::to_string(z));
    };
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v : related[u]) {
            if (related[v] == related[u]) continue;
            for (Vertex w : related[v]) {
                if (!std::binary_search(related[u].begin(), related[u].end(), w)) throw violation(u, v, w);
            }
            for (Vertex x : related[u]) {
                if (!std::binary_search(related[v].begin(), related[v].end(), x)) throw violation(v, u, x);
            }
        }
    }

    Folding out;
    out.class_of.assign(n, static_cast<std::size_t>(-1));
    for (Vertex u = 0; u < n; ++u) {
        if (out.class_of[u] != static_cast<std::size_t>(-1)) continue;
        for (Vertex v : related[u]) out.class_of[v] = out.classes.size();
        out.classes.push_back(related[u]);
    }
    for (const auto& cls : out.classes) {
        if (cls.size() != out.classes.front().size()) throw StructureError("antipodal_fold: classes differ in size");
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        if (out.class_of[u] != out.class_of[v]) {
            edges.emplace_back(static_cast<Vertex>(out.class_of[u]), static_cast<Vertex>(out.class_of[v]));
        }
    }
    out.folded = Graph::from_edges(out.classes.size(), edges);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    InducedSubgraph out;
    out.label_map.assign(vertices.begin(), vertices.end());
    std::sort(out.label_map.begin(), out.label_map.end());
    out.label_map.erase(std::unique(out.label_map.begin(), out.label_map.end()), out.label_map.end());
    std::vector<std::uint32_t> local(g.vertex_count(), kUnreachable);
    for (std::size_t i = 0; i < out.label_map.size(); ++i) {
        const Vertex v = out.label_map[i];
        if (v >= g.vertex_count()) throw InputError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
        local[v] = static_cast<std::uint32_t>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < out.label_map.size(); ++i) {
        for (Vertex w : g.neighbors(out.label_map[i])) {
            if (local[w] != kUnreachable && local[w] > i) edges.emplace_back(static_cast<Vertex>(i), local[w]);
        }
    }
    out.graph = Graph::from_edges(out.label_map.size(), edges);
    return out;
}

std::vector<double> intersection_spectrum(const IntersectionArray& array) {
    array.validate();
    const std::size_t d = array.diameter();
    // The tridiagonal matrix (c_i, a_i, b_i) is similar to the symmetric one with
    // off-diagonal sqrt(b_i c_{i+1}).
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d + 1), static_cast<Eigen::Index>(d + 1));
    for (std::size_t i = 0; i <= d; ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        t(ii, ii) = static_cast<double>(array.a_at(i));
        if (i < d) {
            const double off = std::sqrt(static_cast<double>(array.b[i]) * static_cast<double>(array.c[i]));
            t(ii, ii + 1) = off;
            t(ii + 1, ii) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(t, Eigen::EigenvaluesOnly);
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace golay486::graph
