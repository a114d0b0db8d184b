#include "golay486/codes.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

namespace golay486::codes {

using gf3::Element;
using gf3::Matrix;
using gf3::Vector;

namespace {

std::size_t pow3(std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= 3;
    return r;
}

// All vectors of the given length and weight, lexicographically sorted.
std::vector<Vector> vectors_of_weight(std::size_t length, std::size_t weight) {
    std::vector<Vector> out;
    if (weight > length) return out;
    std::vector<std::size_t> support(weight);
    for (std::size_t i = 0; i < weight; ++i) support[i] = i;
    const std::size_t patterns = std::size_t{1} << weight;
    while (true) {
        for (std::size_t mask = 0; mask < patterns; ++mask) {
            Vector v(length);
            for (std::size_t j = 0; j < weight; ++j) v.set(support[j], ((mask >> j) & 1U) ? 2 : 1);
            out.push_back(std::move(v));
        }
        // Next combination.
        std::size_t j = weight;
        while (j > 0 && support[j - 1] == length - weight + (j - 1)) --j;
        if (j == 0) break;
        ++support[j - 1];
        for (std::size_t t = j; t < weight; ++t) support[t] = support[t - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

WeightDistribution packed_distribution(const Matrix& basis, const Vector& shift) {
    const std::size_t n = basis.col_count();
    const std::size_t k = basis.row_count();
    std::vector<gf3::PackedVector> rows;
    rows.reserve(k);
    for (const auto& r : basis.rows()) rows.push_back(gf3::pack(r));

    WeightDistribution wd;
    wd.counts.assign(n + 1, 0);
    gf3::PackedVector current = gf3::pack(shift);
    std::vector<Element> coeff(k, 0);
    const std::size_t total = pow3(k);
    ++wd.counts[gf3::packed_weight(current)];
    for (std::size_t step = 1; step < total; ++step) {
        std::size_t d = k;
        while (d-- > 0) {
            current = gf3::packed_add(current, rows[d]);
            coeff[d] = gf3::add(coeff[d], 1);
            if (coeff[d] != 0) break;
        }
        ++wd.counts[gf3::packed_weight(current)];
    }
    return wd;
}

}  // namespace

LinearCode::LinearCode(Matrix generator, Matrix parity_check)
    : generator_(std::move(generator)), parity_check_(std::move(parity_check)) {}

LinearCode LinearCode::from_generator(const Matrix& generator) {
    Matrix basis = gf3::row_space_basis(generator);
    Matrix check = gf3::null_space(basis);
    return LinearCode(std::move(basis), std::move(check));
}

LinearCode LinearCode::zero_code(std::size_t length) { return from_generator(Matrix(0, length)); }

LinearCode LinearCode::full_space(std::size_t length) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < length; ++i) rows.push_back(Vector::unit(length, i));
    return from_generator(Matrix(std::move(rows), length));
}

Vector LinearCode::syndrome(const Vector& v) const {
    if (v.size() != length()) throw DimensionError("syndrome: vector length differs from code length");
    return gf3::apply(parity_check_, v);
}

bool LinearCode::contains(const Vector& v) const { return syndrome(v).is_zero(); }

std::string to_text(const LinearCode& code) {
    return std::to_string(code.length()) + " " + std::to_string(code.dimension()) + "\n" +
           gf3::to_text(code.generator());
}

LinearCode code_from_text(std::string_view text) {
    const auto eol = text.find('\n');
    const std::string header(text.substr(0, eol));
    std::istringstream in(header);
    std::size_t n = 0;
    std::size_t k = 0;
    if (!(in >> n >> k)) throw ParseError("code: expected header 'n k'", 0);
    const std::size_t body_start = eol == std::string_view::npos ? text.size() : eol + 1;
    Matrix g;
    try {
        g = gf3::matrix_from_text(text.substr(body_start), n);
    } catch (const ParseError& e) {
        throw ParseError(std::string("code: ") + e.what(), body_start + e.position());
    }
    if (g.col_count() != n || g.row_count() != k) {
        throw ParseError("code: generator shape does not match header", body_start);
    }
    auto code = LinearCode::from_generator(g);
    if (code.dimension() != k) throw ParseError("code: generator rows are dependent", body_start);
    return code;
}

std::uint64_t WeightDistribution::total() const noexcept {
    std::uint64_t t = 0;
    for (auto c : counts) t += c;
    return t;
}

std::string WeightDistribution::to_string() const {
    std::string out;
    for (std::size_t w = 0; w < counts.size(); ++w) {
        if (counts[w] == 0) continue;
        if (!out.empty()) out.push_back(' ');
        out += std::to_string(w) + "^" + std::to_string(counts[w]);
    }
    return out;
}

WeightDistribution weight_distribution(const Matrix& basis) {
    return weight_distribution(basis, Vector(basis.col_count()));
}

WeightDistribution weight_distribution(const Matrix& basis, const Vector& shift) {
    if (shift.size() != basis.col_count()) throw DimensionError("weight_distribution: shift length mismatch");
    if (gf3::rank(basis) != basis.row_count()) throw InputError("weight_distribution: basis rows are dependent");
    if (basis.col_count() <= gf3::kMaxPackedLength) return packed_distribution(basis, shift);
    return weight_distribution_reference(basis, shift);
}

WeightDistribution weight_distribution(const LinearCode& code) { return weight_distribution(code.generator()); }

WeightDistribution weight_distribution_reference(const Matrix& basis, const Vector& shift) {
    WeightDistribution wd;
    wd.counts.assign(basis.col_count() + 1, 0);
    for (const auto& v : gf3::enumerate_subspace(basis)) ++wd.counts[gf3::hamming_weight(gf3::vec_add(v, shift))];
    return wd;
}

Vector golay_generator_row() {
    constexpr std::string_view signs = "-+-+++---+-";
    Vector row(signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) row.set(i, signs[i] == '+' ? 1 : 2);
    return row;
}

LinearCode golay_code() {
    const Vector first = golay_generator_row();
    const std::size_t n = first.size();
    std::vector<Vector> rows;
    for (std::size_t shift = 0; shift < n; ++shift) {
        Vector r(n);
        for (std::size_t i = 0; i < n; ++i) r.set((i + shift) % n, first[i]);
        rows.push_back(std::move(r));
    }
    return LinearCode::from_generator(Matrix(std::move(rows), n));
}

std::size_t minimum_distance(const LinearCode& code) {
    if (code.dimension() == 0) throw InputError("minimum_distance: undefined for the zero code");
    const auto wd = weight_distribution(code);
    for (std::size_t w = 1; w < wd.counts.size(); ++w) {
        if (wd.counts[w] != 0) return w;
    }
    throw DataError("minimum_distance: no nonzero codeword found");
}

std::uint64_t sphere_size(std::size_t length, std::size_t radius) {
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(length, i)
    std::uint64_t twos = 1;
    for (std::size_t i = 0; i <= std::min(radius, length); ++i) {
        total += binom * twos;
        binom = binom * (length - i) / (i + 1);
        twos *= 2;
    }
    return total;
}

bool is_perfect(const LinearCode& code, std::size_t radius) {
    if (code.redundancy() > 40) throw ResourceError("is_perfect: redundancy too large for exact arithmetic");
    return sphere_size(code.length(), radius) == pow3(code.redundancy());
}

LinearCode shorten(const LinearCode& code, std::size_t position) {
    if (position >= code.length()) throw InputError("shorten: position out of range");
    std::vector<Vector> rows = code.generator().rows();
    // Keep the subcode vanishing at `position`: eliminate that column with one pivot row.
    auto pivot = std::find_if(rows.begin(), rows.end(), [&](const Vector& r) { return r[position] != 0; });
    if (pivot != rows.end()) {
        const Vector p = gf3::vec_scale(gf3::inv((*pivot)[position]), *pivot);
        rows.erase(pivot);
        for (auto& r : rows) {
            if (r[position] != 0) r = gf3::vec_sub(r, gf3::vec_scale(r[position], p));
        }
    }
    Matrix sub(std::move(rows), code.length());
    return LinearCode::from_generator(gf3::delete_column(sub, position));
}

LinearCode truncate(const LinearCode& code, std::size_t position) {
    if (position >= code.length()) throw InputError("truncate: position out of range");
    return LinearCode::from_generator(gf3::delete_column(code.generator(), position));
}

CosetTable::CosetTable(LinearCode code, std::size_t max_redundancy) : code_(std::move(code)) {
    const std::size_t r = code_.redundancy();
    if (r > max_redundancy) {
        throw ResourceError("coset table: " + std::to_string(pow3(r)) + " cosets exceed the bound 3^" +
                            std::to_string(max_redundancy));
    }
    const std::size_t total = pow3(r);
    std::vector<std::optional<Vector>> found(total);
    std::size_t claimed = 0;
    for (std::size_t w = 0; w <= code_.length() && claimed < total; ++w) {
        for (auto& v : vectors_of_weight(code_.length(), w)) {
            const std::size_t idx = index_of(v);
            if (found[idx]) continue;
            found[idx] = std::move(v);
            covering_radius_ = w;
            if (++claimed == total) break;
        }
    }
    leaders_.reserve(total);
    for (auto& f : found) leaders_.push_back(std::move(*f));
}

std::size_t CosetTable::index_of_syndrome(const Vector& syndrome) const {
    std::size_t idx = 0;
    for (Element e : syndrome.entries()) idx = idx * 3 + e;
    return idx;
}

std::size_t CosetTable::index_of(const Vector& v) const { return index_of_syndrome(code_.syndrome(v)); }

Vector CosetTable::syndrome_of_index(std::size_t index) const {
    const std::size_t r = code_.redundancy();
    Vector s(r);
    for (std::size_t i = r; i-- > 0;) {
        s.set(i, static_cast<Element>(index % 3));
        index /= 3;
    }
    return s;
}

Vector canonical_representative(const LinearCode& code, const Vector& v) {
    return CosetTable(code).representative(v);
}

const char* to_string(CosetShape shape) {
    switch (shape) {
        case CosetShape::Zero: return "0";
        case CosetShape::UnitFirst: return "+-e0";
        case CosetShape::UnitOther: return "+-ei (i!=0)";
        case CosetShape::FirstAndOther: return "+-e0+-ei (i!=0)";
        case CosetShape::TwoOther: return "+-ei+-ej (0<i<j)";
    }
    return "?";
}

CosetClassification classify_cosets(const LinearCode& code) {
    if (!(code == golay_code())) throw UnsupportedError("classify_cosets: only the ternary Golay code is supported");
    CosetTable table(code);
    CosetClassification out;
    out.shape_of.reserve(table.coset_count());
    for (std::size_t i = 0; i < table.coset_count(); ++i) {
        const Vector& rep = table.leader(i);
        const std::size_t w = gf3::hamming_weight(rep);
        CosetShape shape{};
        if (w == 0) {
            shape = CosetShape::Zero;
        } else if (w == 1) {
            shape = rep[0] != 0 ? CosetShape::UnitFirst : CosetShape::UnitOther;
        } else if (w == 2) {
            shape = rep[0] != 0 ? CosetShape::FirstAndOther : CosetShape::TwoOther;
        } else {
            throw DataError("classify_cosets: leader of weight " + std::to_string(w));
        }
        out.shape_of.push_back(shape);
        ++out.counts[static_cast<std::size_t>(shape)];
    }
    return out;
}

graph::Graph coset_graph(const LinearCode& code, std::size_t max_redundancy) {
    const std::size_t r = code.redundancy();
    if (r > max_redundancy) {
        throw ResourceError("coset_graph: 3^" + std::to_string(r) + " vertices exceed the bound 3^" +
                            std::to_string(max_redundancy));
    }
    const std::size_t n = code.length();
    const std::size_t total = pow3(r);

    // Syndromes of the unit vectors are the columns of the parity-check matrix.
    std::vector<std::vector<Element>> deltas;
    for (std::size_t i = 0; i < n; ++i) {
        for (Element c : {Element{1}, Element{2}}) {
            std::vector<Element> col(r);
            for (std::size_t j = 0; j < r; ++j) col[j] = gf3::mul(c, code.parity_check()(j, i));
            deltas.push_back(std::move(col));
        }
    }

    std::vector<graph::Edge> edges;
    edges.reserve(total * deltas.size() / 2);
    std::vector<Element> digits(r);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t x = idx;
        for (std::size_t j = r; j-- > 0;) {
            digits[j] = static_cast<Element>(x % 3);
            x /= 3;
        }
        for (const auto& d : deltas) {
            std::size_t other = 0;
            for (std::size_t j = 0; j < r; ++j) other = other * 3 + gf3::add(digits[j], d[j]);
            if (other > idx) edges.emplace_back(static_cast<graph::Vertex>(idx), static_cast<graph::Vertex>(other));
        }
    }
    return graph::Graph::from_edges(total, edges);
}

}  // namespace golay486::codes
