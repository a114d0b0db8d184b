#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "golay486/gf3.hpp"
#include "golay486/graph.hpp"

// Ternary linear codes and their coset structure.
namespace golay486::codes {

class LinearCode {
public:
    /// The row space of `generator`; rows need not be independent.
    static LinearCode from_generator(const gf3::Matrix& generator);
    static LinearCode zero_code(std::size_t length);
    static LinearCode full_space(std::size_t length);

    std::size_t length() const noexcept { return generator_.col_count(); }
    std::size_t dimension() const noexcept { return generator_.row_count(); }
    std::size_t redundancy() const noexcept { return length() - dimension(); }

    /// Reduced row-echelon basis, k x n.
    const gf3::Matrix& generator() const noexcept { return generator_; }
    /// Reduced basis of the dual code, (n-k) x n. Codewords are exactly its kernel.
    const gf3::Matrix& parity_check() const noexcept { return parity_check_; }

    gf3::Vector syndrome(const gf3::Vector& v) const;
    bool contains(const gf3::Vector& v) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.generator_ == b.generator_; }

private:
    LinearCode(gf3::Matrix generator, gf3::Matrix parity_check);

    gf3::Matrix generator_;
    gf3::Matrix parity_check_;
};

/// Serialized as a header line "n k" followed by the generator in gf3 text format.
std::string to_text(const LinearCode& code);
LinearCode code_from_text(std::string_view text);

struct WeightDistribution {
    /// counts[w] = number of vectors of Hamming weight w, w = 0..n.
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const noexcept;
    /// Exponent notation over nonzero counts: "0^1 5^132 6^132 ...".
    std::string to_string() const;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

/// Tally over the span of `basis` (independent rows). Uses the packed path for n <= 64.
WeightDistribution weight_distribution(const gf3::Matrix& basis);
/// Tally over the coset shift + span(basis).
WeightDistribution weight_distribution(const gf3::Matrix& basis, const gf3::Vector& shift);
WeightDistribution weight_distribution(const LinearCode& code);
/// Byte-per-entry enumeration; kept as an independent route for cross-checks.
WeightDistribution weight_distribution_reference(const gf3::Matrix& basis, const gf3::Vector& shift);

/// The sign pattern -+-+++---+- with '+' -> 1, '-' -> 2.
gf3::Vector golay_generator_row();
/// Span of the 11 cyclic shifts of golay_generator_row().
LinearCode golay_code();

/// Smallest nonzero weight. Throws InputError on a zero-dimensional code.
std::size_t minimum_distance(const LinearCode& code);

/// Whether the radius-e Hamming spheres tile GF(3)^n: sum_{i<=e} C(n,i) 2^i = 3^(n-k).
bool is_perfect(const LinearCode& code, std::size_t radius);
/// The sphere volume sum_{i<=e} C(n,i) 2^i.
std::uint64_t sphere_size(std::size_t length, std::size_t radius);

/// Codewords vanishing at `position`, with that coordinate removed.
LinearCode shorten(const LinearCode& code, std::size_t position);
/// Every codeword with `position` removed.
LinearCode truncate(const LinearCode& code, std::size_t position);

inline constexpr std::size_t kDefaultMaxRedundancy = 12;

/// Cosets of a code indexed by syndrome, with minimum-weight leaders.
///
/// Syndrome digits are read most-significant first, so index order is lexicographic
/// in the syndrome. Leaders are found by scanning weights 0, 1, 2, ... in
/// lexicographic order and stopping once every syndrome is claimed; for a perfect
/// code this stops at the packing radius.
class CosetTable {
public:
    explicit CosetTable(LinearCode code, std::size_t max_redundancy = kDefaultMaxRedundancy);

    const LinearCode& code() const noexcept { return code_; }
    std::size_t coset_count() const noexcept { return leaders_.size(); }
    std::size_t index_of(const gf3::Vector& v) const;
    const gf3::Vector& leader(std::size_t index) const { return leaders_.at(index); }
    gf3::Vector representative(const gf3::Vector& v) const { return leaders_[index_of(v)]; }
    /// Digits of the syndrome with the given index.
    gf3::Vector syndrome_of_index(std::size_t index) const;
    std::size_t index_of_syndrome(const gf3::Vector& syndrome) const;
    /// Largest leader weight.
    std::size_t covering_radius() const noexcept { return covering_radius_; }

private:
    LinearCode code_;
    std::vector<gf3::Vector> leaders_;
    std::size_t covering_radius_ = 0;
};

/// Minimum-weight vector of v + code, ties broken lexicographically.
gf3::Vector canonical_representative(const LinearCode& code, const gf3::Vector& v);

enum class CosetShape : std::uint8_t {
    Zero,          ///< 0
    UnitFirst,     ///< +-e_0
    UnitOther,     ///< +-e_i, i != 0
    FirstAndOther, ///< +-e_0 +- e_i, i != 0
    TwoOther,      ///< +-e_i +- e_j, 0 < i < j
};

inline constexpr std::size_t kCosetShapeCount = 5;

const char* to_string(CosetShape shape);

struct CosetClassification {
    /// Indexed by CosetShape.
    std::array<std::size_t, kCosetShapeCount> counts{};
    /// Shape of the coset with each syndrome index.
    std::vector<CosetShape> shape_of;
};

/// Throws UnsupportedError unless `code` is the ternary Golay code.
CosetClassification classify_cosets(const LinearCode& code);

/// Vertices are cosets in syndrome order; cosets of u and u +- e_i are adjacent.
/// Throws ResourceError when n - k exceeds max_redundancy.
graph::Graph coset_graph(const LinearCode& code, std::size_t max_redundancy = kDefaultMaxRedundancy);

}  // namespace golay486::codes
