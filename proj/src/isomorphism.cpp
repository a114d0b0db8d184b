#include "golay486/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace golay486::graph {

namespace {

struct BudgetExhausted {};

struct Coloring {
    std::vector<std::uint32_t> first;
    std::vector<std::uint32_t> second;
    std::uint32_t colors = 0;
};

class Search {
public:
    Search(const Graph& g1, const Graph& g2, const IsomorphismOptions& options)
        : g1_(g1), g2_(g2), n_(g1.vertex_count()), options_(options) {}

    IsomorphismResult run() {
        IsomorphismResult result;
        Coloring start;
        start.first.assign(n_, 0);
        start.second.assign(n_, 0);
        start.colors = n_ > 0 ? 1 : 0;
        bool found = false;
        try {
            found = descend(std::move(start));
        } catch (const BudgetExhausted&) {
            result.verdict = IsomorphismVerdict::BudgetExhausted;
            result.refinement_steps = steps_;
            result.search_nodes = nodes_;
            return result;
        }
        result.verdict = found ? IsomorphismVerdict::Isomorphic : IsomorphismVerdict::NonIsomorphic;
        if (found) result.mapping = std::move(mapping_);
        result.refinement_steps = steps_;
        result.search_nodes = nodes_;
        return result;
    }

private:
    // One pass recolours every vertex by (colour, sorted neighbour colours). Returns
    // false when the two graphs disagree on some colour-class size.
    bool refine(Coloring& c) {
        std::vector<std::vector<std::uint32_t>> signatures(2 * n_);
        while (true) {
            if (++steps_ > options_.refinement_budget) throw BudgetExhausted{};
            for (std::size_t side = 0; side < 2; ++side) {
                const Graph& g = side == 0 ? g1_ : g2_;
                const auto& colour = side == 0 ? c.first : c.second;
                for (Vertex v = 0; v < n_; ++v) {
                    auto& sig = signatures[side * n_ + v];
                    sig.clear();
                    sig.push_back(colour[v]);
                    for (Vertex w : g.neighbors(v)) sig.push_back(colour[w]);
                    std::sort(sig.begin() + 1, sig.end());
                }
            }
            std::vector<std::uint32_t> order(2 * n_);
            std::iota(order.begin(), order.end(), 0U);
            std::sort(order.begin(), order.end(),
                      [&](std::uint32_t a, std::uint32_t b) { return signatures[a] < signatures[b]; });

            std::vector<std::uint32_t> fresh(2 * n_);
            std::vector<std::int64_t> balance;
            std::uint32_t next = 0;
            for (std::size_t i = 0; i < order.size(); ++i) {
                if (i > 0 && signatures[order[i]] != signatures[order[i - 1]]) ++next;
                fresh[order[i]] = next;
                if (balance.size() <= next) balance.push_back(0);
                balance[next] += order[i] < n_ ? 1 : -1;
            }
            if (std::any_of(balance.begin(), balance.end(), [](std::int64_t b) { return b != 0; })) return false;

            const std::uint32_t count = n_ > 0 ? next + 1 : 0;
            std::copy(fresh.begin(), fresh.begin() + static_cast<std::ptrdiff_t>(n_), c.first.begin());
            std::copy(fresh.begin() + static_cast<std::ptrdiff_t>(n_), fresh.end(), c.second.begin());
            if (count == c.colors) return true;
            c.colors = count;
        }
    }

    bool descend(Coloring c) {
        ++nodes_;
        if (!refine(c)) return false;
        if (c.colors == n_) {
            std::vector<Vertex> by_colour(n_);
            for (Vertex v = 0; v < n_; ++v) by_colour[c.second[v]] = v;
            std::vector<Vertex> mapping(n_);
            for (Vertex v = 0; v < n_; ++v) mapping[v] = by_colour[c.first[v]];
            if (!is_isomorphism(g1_, g2_, mapping)) return false;
            mapping_ = std::move(mapping);
            return true;
        }

        // Lowest colour with more than one member.
        std::vector<std::uint32_t> sizes(c.colors, 0);
        for (auto col : c.first) ++sizes[col];
        std::uint32_t target = 0;
        while (sizes[target] < 2) ++target;
        Vertex chosen = 0;
        while (c.first[chosen] != target) ++chosen;

        for (Vertex candidate = 0; candidate < n_; ++candidate) {
            if (c.second[candidate] != target) continue;
            Coloring child = c;
            child.first[chosen] = c.colors;
            child.second[candidate] = c.colors;
            child.colors = c.colors + 1;
            if (descend(std::move(child))) return true;
        }
        return false;
    }

    const Graph& g1_;
    const Graph& g2_;
    std::size_t n_;
    IsomorphismOptions options_;
    std::uint64_t steps_ = 0;
    std::uint64_t nodes_ = 0;
    std::vector<Vertex> mapping_;
};

}  // namespace

const char* to_string(IsomorphismVerdict verdict) {
    switch (verdict) {
        case IsomorphismVerdict::Isomorphic: return "isomorphic";
        case IsomorphismVerdict::NonIsomorphic: return "non-isomorphic";
        case IsomorphismVerdict::BudgetExhausted: return "budget-exhausted";
    }
    return "?";
}

bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<Vertex>& mapping) {
    const std::size_t n = g1.vertex_count();
    if (g2.vertex_count() != n || mapping.size() != n || g1.edge_count() != g2.edge_count()) return false;
    std::vector<bool> hit(n, false);
    for (Vertex v : mapping) {
        if (v >= n || hit[v]) return false;
        hit[v] = true;
    }
    // Equal edge counts and an injective edge map make the map onto.
    for (const auto& [u, v] : g1.edges()) {
        if (!g2.has_edge(mapping[u], mapping[v])) return false;
    }
    return true;
}

IsomorphismResult are_isomorphic(const Graph& g1, const Graph& g2, const IsomorphismOptions& options) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return {};
    return Search(g1, g2, options).run();
}

}  // namespace golay486::graph
