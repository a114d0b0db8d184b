#include "golay486/diagram.hpp"

#include <sstream>

namespace golay486::diagram {

namespace {

// DOT identifiers must not start with a digit unless numeric; quote everything.
std::string quoted(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::string distance_diagram_dot(const graph::IntersectionArray& array, std::string_view name) {
    const auto k = array.class_sizes();
    const std::size_t d = array.diameter();
    std::ostringstream s;
    s << "graph " << quoted(name) << " {\n";
    s << "  rankdir=LR;\n";
    s << "  node [shape=circle];\n";
    for (std::size_t i = 0; i <= d; ++i) s << "  d" << i << " [label=\"" << k[i] << "\"];\n";
    for (std::size_t i = 0; i <= d; ++i) {
        if (array.a_at(i) > 0) s << "  d" << i << " -- d" << i << " [label=\"" << array.a_at(i) << "\"];\n";
    }
    for (std::size_t i = 0; i < d; ++i) {
        s << "  d" << i << " -- d" << i + 1 << " [taillabel=\"" << array.b_at(i) << "\", headlabel=\""
          << array.c_at(i + 1) << "\"];\n";
    }
    s << "}\n";
    return s.str();
}

std::string orbit_diagram_dot(const permaction::CollapsedMatrix& matrix, std::string_view name) {
    const std::size_t r = matrix.suborbit_sizes.size();
    if (matrix.entries.size() != r) throw DimensionError("orbit_diagram_dot: matrix shape differs from suborbit count");
    std::ostringstream s;
    s << "graph " << quoted(name) << " {\n";
    s << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < r; ++i) s << "  s" << i << " [label=\"" << matrix.suborbit_sizes[i] << "\"];\n";
    for (std::size_t i = 0; i < r; ++i) {
        if (matrix.entries[i].size() != r) throw DimensionError("orbit_diagram_dot: ragged matrix");
        if (matrix.entries[i][i] > 0) s << "  s" << i << " -- s" << i << " [label=\"" << matrix.entries[i][i] << "\"];\n";
        for (std::size_t j = i + 1; j < r; ++j) {
            if (matrix.entries[i][j] == 0 && matrix.entries[j][i] == 0) continue;
            s << "  s" << i << " -- s" << j << " [taillabel=\"" << matrix.entries[i][j] << "\", headlabel=\""
              << matrix.entries[j][i] << "\"];\n";
        }
    }
    s << "}\n";
    return s.str();
}

permaction::CollapsedMatrix restrict_suborbits(const permaction::CollapsedMatrix& matrix,
                                               const std::vector<std::size_t>& keep) {
    permaction::CollapsedMatrix out;
    for (auto i : keep) {
        if (i >= matrix.suborbit_sizes.size()) throw InputError("restrict_suborbits: suborbit out of range");
        out.suborbit_sizes.push_back(matrix.suborbit_sizes[i]);
        std::vector<std::size_t> row;
        for (auto j : keep) row.push_back(matrix.entries[i][j]);
        out.entries.push_back(std::move(row));
    }
    return out;
}

}  // namespace golay486::diagram
