#include "golay486/graph.hpp"

namespace golay486::graph {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::uint64_t kMaxVertices = 68719476735ULL;  // 2^36 - 1

void append_size(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    const std::uint64_t n = g.vertex_count();
    if (n > kMaxVertices) throw InputError("graph6: too many vertices");
    std::string out;
    append_size(out, n);
    // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    unsigned acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph graph6_decode(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
    std::size_t end = text.size();
    while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r')) --end;

    auto sextet = [&](std::size_t at) -> unsigned {
        if (at >= end) throw ParseError("graph6: unexpected end of input", at);
        const auto ch = static_cast<unsigned char>(text[at]);
        if (ch < 63 || ch > 126) throw ParseError("graph6: byte outside the printable range 63..126", at);
        return ch - 63U;
    };

    std::uint64_t n = 0;
    if (pos >= end) throw ParseError("graph6: empty input", pos);
    if (text[pos] != '~') {
        n = sextet(pos++);
    } else if (pos + 1 < end && text[pos + 1] == '~') {
        pos += 2;
        for (int i = 0; i < 6; ++i) n = (n << 6) | sextet(pos++);
    } else {
        pos += 1;
        for (int i = 0; i < 3; ++i) n = (n << 6) | sextet(pos++);
    }

    const std::uint64_t bit_count = n * (n > 0 ? n - 1 : 0) / 2;
    const std::uint64_t byte_count = (bit_count + 5) / 6;
    if (end - pos != byte_count) {
        throw ParseError("graph6: expected " + std::to_string(byte_count) + " data bytes, found " +
                             std::to_string(end - pos),
                         std::min(end, pos + static_cast<std::size_t>(byte_count)));
    }

    std::vector<Edge> edges;
    std::uint64_t bit = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            const unsigned value = sextet(pos + static_cast<std::size_t>(bit / 6));
            if ((value >> (5 - bit % 6)) & 1U) edges.emplace_back(i, j);
        }
    }
    if (bit % 6 != 0) {
        const std::size_t last = pos + static_cast<std::size_t>(bit / 6);
        const unsigned mask = (1U << (6 - bit % 6)) - 1;
        if (sextet(last) & mask) throw ParseError("graph6: nonzero padding bits", last);
    }
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

}  // namespace golay486::graph
