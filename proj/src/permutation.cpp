#include "golay486/permaction.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>

namespace golay486::permaction {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
        if (p >= images_.size() || seen[p]) throw InputError("permutation: images are not a bijection");
        seen[p] = true;
    }
}

Permutation Permutation::identity(std::size_t degree) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(degree(), false);
    for (Point start = 0; start < degree(); ++start) {
        if (seen[start] || images_[start] == start) continue;
        std::vector<Point> cycle;
        for (Point p = start; !seen[p]; p = images_[p]) {
            seen[p] = true;
            cycle.push_back(p);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw DimensionError("compose: degree mismatch");
    std::vector<Point> images(p.degree());
    for (Point x = 0; x < p.degree(); ++x) images[x] = q(p(x));
    return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
    std::vector<Point> images(p.degree());
    for (Point x = 0; x < p.degree(); ++x) images[p(x)] = x;
    return Permutation(std::move(images));
}

std::vector<std::size_t> cycle_type(const Permutation& p) {
    std::vector<std::size_t> lengths;
    std::size_t moved = 0;
    for (const auto& c : p.cycles()) {
        lengths.push_back(c.size());
        moved += c.size();
    }
    lengths.insert(lengths.end(), p.degree() - moved, 1);
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return lengths;
}

BigInt order_of(const Permutation& p) {
    BigInt order = 1;
    for (const auto& c : p.cycles()) {
        const BigInt len = c.size();
        order = order / boost::multiprecision::gcd(order, len) * len;
    }
    return order;
}

namespace {

bool is_blank(char ch) { return std::isspace(static_cast<unsigned char>(ch)) || ch == '\\'; }

bool is_terminator(char ch) { return ch == ';' || ch == '.' || ch == '}'; }

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> used(degree, false);
    std::size_t pos = 0;

    auto skip = [&] {
        while (pos < text.size() && is_blank(text[pos])) ++pos;
    };
    auto read_point = [&]() -> Point {
        skip();
        const std::size_t start = pos;
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw ParseError("cycles: expected a point number", pos);
        }
        std::uint64_t value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + static_cast<std::uint64_t>(text[pos++] - '0');
            if (value > degree) throw ParseError("cycles: point exceeds degree " + std::to_string(degree), start);
        }
        if (value == 0) throw ParseError("cycles: points are numbered from 1", start);
        const auto point = static_cast<Point>(value - 1);
        if (used[point]) throw ParseError("cycles: point " + std::to_string(value) + " repeated", start);
        used[point] = true;
        return point;
    };

    while (true) {
        skip();
        if (pos >= text.size()) break;
        if (is_terminator(text[pos])) {
            // Trailing punctuation only.
            while (pos < text.size() && (is_terminator(text[pos]) || is_blank(text[pos]))) ++pos;
            if (pos != text.size()) throw ParseError("cycles: unexpected text after terminator", pos);
            break;
        }
        if (text[pos] != '(') throw ParseError("cycles: expected '('", pos);
        ++pos;
        std::vector<Point> cycle{read_point()};
        while (true) {
            skip();
            if (pos >= text.size()) throw ParseError("cycles: unterminated cycle", pos);
            if (text[pos] == ')') {
                ++pos;
                break;
            }
            if (text[pos] != ',') throw ParseError("cycles: expected ',' or ')'", pos);
            ++pos;
            cycle.push_back(read_point());
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    return Permutation(std::move(images));
}

std::string to_cycle_string(const Permutation& p) {
    const auto cs = p.cycles();
    if (cs.empty()) return "()";
    std::string out;
    for (const auto& c : cs) {
        out.push_back('(');
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(c[i] + 1);
        }
        out.push_back(')');
    }
    return out;
}

std::vector<NamedPermutation> parse_generator_file(std::string_view text, std::size_t degree) {
    struct Pending {
        std::string name;
        std::size_t body_start;
        std::size_t body_end;
    };
    std::vector<Pending> pending;

    std::size_t line_start = 0;
    while (line_start < text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        const std::string_view line = text.substr(line_start, line_end - line_start);

        // An assignment line starts with an identifier followed by ":=".
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        const std::size_t name_start = i;
        while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_')) ++i;
        std::size_t j = i;
        while (j < line.size() && std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        const bool assignment = i > name_start && !std::isdigit(static_cast<unsigned char>(line[name_start])) &&
                                line.substr(j, 2) == ":=";
        if (assignment) {
            if (!pending.empty()) pending.back().body_end = line_start;
            pending.push_back({std::string(line.substr(name_start, i - name_start)), line_start + j + 2, text.size()});
        } else if (pending.empty()) {
            for (std::size_t k = 0; k < line.size(); ++k) {
                if (!is_blank(line[k])) throw ParseError("generators: expected 'name :='", line_start + k);
            }
        }
        line_start = line_end + 1;
    }
    if (pending.empty()) throw ParseError("generators: no assignments found", 0);

    std::vector<NamedPermutation> out;
    for (const auto& p : pending) {
        for (const auto& existing : out) {
            if (existing.name == p.name) throw ParseError("generators: '" + p.name + "' assigned twice", p.body_start);
        }
        try {
            out.push_back({p.name, parse_cycles(text.substr(p.body_start, p.body_end - p.body_start), degree)});
        } catch (const ParseError& e) {
            const std::string what = e.what();
            const std::string message = what.substr(0, what.rfind(" (at offset"));
            throw ParseError("generator " + p.name + ": " + message, p.body_start + e.position());
        }
    }
    return out;
}

GroupAction::GroupAction(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
    for (const auto& g : generators_) {
        if (g.degree() != degree_) throw DimensionError("group action: generator degree differs from action degree");
    }
}

std::vector<Point> orbit(const GroupAction& action, Point point) {
    if (point >= action.degree()) throw InputError("orbit: point out of range");
    std::vector<bool> seen(action.degree(), false);
    std::vector<Point> queue{point};
    seen[point] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& g : action.generators()) {
            const Point y = g(queue[head]);
            if (!seen[y]) {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

bool is_transitive(const GroupAction& action) {
    return action.degree() == 0 || orbit(action, 0).size() == action.degree();
}

}  // namespace golay486::permaction
