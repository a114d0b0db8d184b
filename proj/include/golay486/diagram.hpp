#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "golay486/graph.hpp"
#include "golay486/permaction.hpp"

// Graphviz DOT text for distance-distribution and orbit diagrams.
namespace golay486::diagram {

/// One node per distance class labelled k_i. Consecutive classes are joined by an edge
/// with taillabel b_i and headlabel c_{i+1}; a_i > 0 is drawn as a labelled loop.
std::string distance_diagram_dot(const graph::IntersectionArray& array, std::string_view name = "distance");

/// One node per suborbit labelled with its size. Suborbits i < j with B[i][j] > 0 are
/// joined by an edge with taillabel B[i][j] and headlabel B[j][i]; B[i][i] > 0 is a loop.
std::string orbit_diagram_dot(const permaction::CollapsedMatrix& matrix, std::string_view name = "orbit");

/// Keeps the listed suborbits (in the given order) and drops the rest.
permaction::CollapsedMatrix restrict_suborbits(const permaction::CollapsedMatrix& matrix,
                                               const std::vector<std::size_t>& keep);

}  // namespace golay486::diagram
