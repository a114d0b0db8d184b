#pragma once

#include <cstdint>
#include <vector>

#include "golay486/graph.hpp"

namespace golay486::graph {

struct IsomorphismOptions {
    /// Maximum number of refinement passes before the search gives up. One pass
    /// recolours every vertex of both graphs once.
    std::uint64_t refinement_budget = 10'000'000;
};

enum class IsomorphismVerdict { Isomorphic, NonIsomorphic, BudgetExhausted };

const char* to_string(IsomorphismVerdict verdict);

struct IsomorphismResult {
    IsomorphismVerdict verdict = IsomorphismVerdict::NonIsomorphic;
    /// mapping[v] is the image in the second graph of vertex v of the first; set only when Isomorphic.
    std::vector<Vertex> mapping;
    std::uint64_t refinement_steps = 0;
    std::uint64_t search_nodes = 0;

    explicit operator bool() const noexcept { return verdict == IsomorphismVerdict::Isomorphic; }
};

/// Individualization-refinement search for an isomorphism g1 -> g2.
///
/// Both graphs are colour-refined in lockstep with a shared colour naming, so a
/// refinement step that produces different colour-class sizes prunes the branch.
/// Target cell is the lowest non-singleton colour; branches are tried in ascending
/// vertex order. A mapping is returned only after is_isomorphism() accepts it.
IsomorphismResult are_isomorphic(const Graph& g1, const Graph& g2, const IsomorphismOptions& options = {});

/// Checks that `mapping` is a bijection carrying the edges of g1 exactly onto those of g2.
bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<Vertex>& mapping);

}  // namespace golay486::graph
