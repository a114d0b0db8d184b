#include "golay486/permaction.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "golay486/graph.hpp"

namespace golay486::permaction {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

}  // namespace

std::vector<std::size_t> OrbitalDecomposition::suborbit_sizes() const {
    std::vector<std::size_t> sizes;
    for (const auto& s : suborbits_) sizes.push_back(s.size());
    return sizes;
}

OrbitalDecomposition orbitals(const GroupAction& action, Point base) {
    const std::size_t n = action.degree();
    if (base >= n) throw InputError("orbitals: base point out of range");
    if (!is_transitive(action)) throw StructureError("orbitals: action is not transitive");

    // Breadth-first closure on ordered pairs, flattened as x*n + y. Transitivity puts a
    // pair (base, y) in every orbital, so seeding from the base row covers all pairs.
    std::vector<std::uint32_t> raw(n * n, kUnassigned);
    std::vector<std::vector<Point>> suborbits;
    std::vector<std::size_t> queue;
    for (Point y = 0; y < n; ++y) {
        if (raw[base * n + y] != kUnassigned) continue;
        const auto id = static_cast<std::uint32_t>(suborbits.size());
        suborbits.emplace_back();
        queue.assign(1, base * n + y);
        raw[base * n + y] = id;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t pair = queue[head];
            const auto x0 = static_cast<Point>(pair / n);
            const auto y0 = static_cast<Point>(pair % n);
            if (x0 == base) suborbits[id].push_back(y0);
            for (const auto& g : action.generators()) {
                const std::size_t image = static_cast<std::size_t>(g(x0)) * n + g(y0);
                if (raw[image] == kUnassigned) {
                    raw[image] = id;
                    queue.push_back(image);
                }
            }
        }
    }

    // Renumber: diagonal first, then by (suborbit size, smallest point).
    std::vector<std::size_t> order(suborbits.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (auto& s : suborbits) std::sort(s.begin(), s.end());
    const std::uint32_t diagonal = raw[base * n + base];
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if ((a == diagonal) != (b == diagonal)) return a == diagonal;
        if (suborbits[a].size() != suborbits[b].size()) return suborbits[a].size() < suborbits[b].size();
        return suborbits[a].front() < suborbits[b].front();
    });
    std::vector<std::uint32_t> relabel(suborbits.size());
    for (std::size_t i = 0; i < order.size(); ++i) relabel[order[i]] = static_cast<std::uint32_t>(i);

    OrbitalDecomposition out;
    out.degree_ = n;
    out.base_ = base;
    out.pair_class_.resize(n * n);
    for (std::size_t p = 0; p < n * n; ++p) out.pair_class_[p] = relabel[raw[p]];
    for (std::size_t i = 0; i < order.size(); ++i) out.suborbits_.push_back(std::move(suborbits[order[i]]));
    for (std::size_t i = 0; i < out.suborbits_.size(); ++i) {
        const Point y = out.suborbits_[i].front();
        out.pairing_.push_back(out.id(y, base));
    }
    return out;
}

graph::Graph edge_orbit_graph(const GroupAction& action, std::span<const graph::Edge> seeds) {
    const std::size_t n = action.degree();
    std::vector<bool> seen(n * n, false);
    std::vector<graph::Edge> queue;
    for (const auto& [u, v] : seeds) {
        if (u >= n || v >= n) throw InputError("edge_orbit_graph: seed pair out of range");
        if (u == v) throw InputError("edge_orbit_graph: seed pair is a loop");
        if (seen[u * n + v]) continue;
        seen[u * n + v] = seen[v * n + u] = true;
        queue.emplace_back(u, v);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto [u, v] = queue[head];
        for (const auto& g : action.generators()) {
            const Point a = g(u);
            const Point b = g(v);
            if (seen[a * n + b]) continue;
            seen[a * n + b] = seen[b * n + a] = true;
            queue.emplace_back(a, b);
        }
    }
    return graph::Graph::from_edges(n, queue);
}

graph::Graph orbital_union_graph(const OrbitalDecomposition& d, std::span<const std::size_t> ids) {
    std::vector<bool> chosen(d.rank(), false);
    for (auto id : ids) {
        if (id >= d.rank()) throw InputError("orbital_union_graph: unknown orbital id " + std::to_string(id));
        if (id == 0) throw InputError("orbital_union_graph: the diagonal orbital cannot be an edge set");
        chosen[id] = true;
    }
    for (auto id : ids) {
        if (!chosen[d.paired(id)]) {
            throw InputError("orbital_union_graph: orbital " + std::to_string(id) + " is selected without its pair " +
                             std::to_string(d.paired(id)));
        }
    }
    const std::size_t n = d.degree();
    std::vector<graph::Edge> edges;
    for (Point x = 0; x < n; ++x) {
        for (Point y = x + 1; y < n; ++y) {
            if (chosen[d.id(x, y)]) edges.emplace_back(x, y);
        }
    }
    return graph::Graph::from_edges(n, edges);
}

std::vector<OrbitalUnion> scan_orbital_unions(const OrbitalDecomposition& d) {
    if (d.rank() > kMaxScanRank) {
        throw ResourceError("scan_orbital_unions: rank " + std::to_string(d.rank()) + " exceeds " +
                            std::to_string(kMaxScanRank));
    }
    // Units of selection: self-paired orbitals alone, the others with their pair.
    std::vector<std::vector<std::size_t>> units;
    for (std::size_t id = 1; id < d.rank(); ++id) {
        const std::size_t p = d.paired(id);
        if (p == id) {
            units.push_back({id});
        } else if (id < p) {
            units.push_back({id, p});
        }
    }
    std::vector<OrbitalUnion> out;
    const std::uint64_t masks = std::uint64_t{1} << units.size();
    for (std::uint64_t mask = 1; mask < masks; ++mask) {
        std::vector<std::size_t> ids;
        for (std::size_t u = 0; u < units.size(); ++u) {
            if ((mask >> u) & 1U) ids.insert(ids.end(), units[u].begin(), units[u].end());
        }
        std::sort(ids.begin(), ids.end());
        const auto g = orbital_union_graph(d, ids);
        if (!graph::is_connected(g)) continue;
        if (auto array = graph::is_distance_regular(g)) out.push_back({std::move(ids), std::move(*array)});
    }
    return out;
}

CollapsedMatrix collapsed_matrix(const graph::Graph& g, const OrbitalDecomposition& d) {
    const std::size_t n = d.degree();
    if (g.vertex_count() != n) throw InputError("collapsed_matrix: vertex count differs from action degree");
    const std::size_t r = d.rank();

    // Each orbital must be entirely inside or entirely outside the edge set.
    std::vector<int> status(r, -1);
    std::vector<graph::Edge> witness(r);
    for (Point x = 0; x < n; ++x) {
        for (Point y = 0; y < n; ++y) {
            const auto id = d.id(x, y);
            const int edge = g.has_edge(x, y) ? 1 : 0;
            if (status[id] < 0) {
                status[id] = edge;
                witness[id] = {x, y};
            } else if (status[id] != edge) {
                throw StructureError("collapsed_matrix: graph is not a union of orbitals; pairs (" +
                                     std::to_string(witness[id].first) + "," + std::to_string(witness[id].second) +
                                     ") and (" + std::to_string(x) + "," + std::to_string(y) + ") differ");
            }
        }
    }

    CollapsedMatrix out;
    out.suborbit_sizes = d.suborbit_sizes();
    out.entries.assign(r, std::vector<std::size_t>(r, 0));
    std::vector<std::size_t> part(n);
    for (std::size_t i = 0; i < r; ++i) {
        for (Point y : d.suborbit(i)) part[y] = i;
    }
    std::vector<Point> first_of(r, graph::kUnreachable);
    for (Point x = 0; x < n; ++x) {
        std::vector<std::size_t> counts(r, 0);
        for (auto w : g.neighbors(x)) ++counts[part[w]];
        const std::size_t i = part[x];
        if (first_of[i] == graph::kUnreachable) {
            first_of[i] = x;
            out.entries[i] = std::move(counts);
        } else if (counts != out.entries[i]) {
            throw StructureError("collapsed_matrix: vertices " + std::to_string(first_of[i]) + " and " +
                                 std::to_string(x) + " of suborbit " + std::to_string(i) +
                                 " have different neighbour counts");
        }
    }
    return out;
}

bool verify_invariance(const GroupAction& action, const graph::Graph& g) {
    if (g.vertex_count() != action.degree()) return false;
    for (const auto& [u, v] : g.edges()) {
        for (const auto& p : action.generators()) {
            if (!g.has_edge(p(u), p(v))) return false;
        }
    }
    return true;
}

}  // namespace golay486::permaction
