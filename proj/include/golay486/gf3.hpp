#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "golay486/error.hpp"

// Exact linear algebra over the field with three elements.
namespace golay486::gf3 {

/// A field element, always one of 0, 1, 2.
using Element = std::uint8_t;

constexpr Element add(Element a, Element b) noexcept { return static_cast<Element>((a + b) % 3); }
constexpr Element neg(Element a) noexcept { return static_cast<Element>((3 - a) % 3); }
constexpr Element mul(Element a, Element b) noexcept { return static_cast<Element>((a * b) % 3); }
// 1 and 2 are their own inverses.
constexpr Element inv(Element a) noexcept { return a; }

class Vector {
public:
    Vector() = default;
    /// Zero vector of the given length.
    explicit Vector(std::size_t length) : entries_(length, 0) {}
    /// Throws InputError if any entry is outside {0,1,2}.
    explicit Vector(std::vector<Element> entries);
    Vector(std::initializer_list<int> entries);

    static Vector unit(std::size_t length, std::size_t index, Element value = 1);

    std::size_t size() const noexcept { return entries_.size(); }
    Element operator[](std::size_t i) const noexcept { return entries_[i]; }
    void set(std::size_t i, Element value);
    std::span<const Element> entries() const noexcept { return entries_; }
    bool is_zero() const noexcept;

    friend bool operator==(const Vector&, const Vector&) = default;
    /// Lexicographic with 0 < 1 < 2.
    friend auto operator<=>(const Vector&, const Vector&) = default;

private:
    std::vector<Element> entries_;
};

Vector vec_add(const Vector& u, const Vector& v);
Vector vec_sub(const Vector& u, const Vector& v);
Vector vec_neg(const Vector& v);
Vector vec_scale(Element c, const Vector& v);
Element dot(const Vector& u, const Vector& v);
std::size_t hamming_weight(const Vector& v);

/// Digits without separators, e.g. "21211122212".
std::string to_string(const Vector& v);
Vector vector_from_string(std::string_view digits);

/// Scales v so that its first nonzero entry is 1. The zero vector is returned unchanged.
Vector canonical_scaling(const Vector& v);

class Matrix {
public:
    Matrix() = default;
    /// Zero matrix.
    Matrix(std::size_t rows, std::size_t cols);
    /// Every row must have length `cols`; `cols` is explicit so that empty matrices keep their width.
    Matrix(std::vector<Vector> rows, std::size_t cols);
    explicit Matrix(std::vector<Vector> rows);

    std::size_t row_count() const noexcept { return rows_.size(); }
    std::size_t col_count() const noexcept { return cols_; }
    const Vector& row(std::size_t i) const noexcept { return rows_[i]; }
    const std::vector<Vector>& rows() const noexcept { return rows_; }
    Element operator()(std::size_t r, std::size_t c) const noexcept { return rows_[r][c]; }

    void append_row(Vector row);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::vector<Vector> rows_;
    std::size_t cols_ = 0;
};

struct RowReduction {
    /// Same shape as the input; zero rows collected at the bottom.
    Matrix matrix;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

RowReduction rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// The nonzero rows of rref(m): a reduced basis of the row space.
Matrix row_space_basis(const Matrix& m);
bool same_row_space(const Matrix& a, const Matrix& b);

/// Coefficients `x` with x·basis = v, if v lies in the row space. `basis` must have independent rows.
std::optional<Vector> solve_combination(const Matrix& basis, const Vector& v);
bool in_row_space(const Matrix& m, const Vector& v);

/// Reduced basis of { x : m·x = 0 }.
Matrix null_space(const Matrix& m);
/// m·v, a vector of length m.row_count().
Vector apply(const Matrix& m, const Vector& v);
Matrix delete_column(const Matrix& m, std::size_t column);
Matrix transpose(const Matrix& m);

/// One row per line, digits 0/1/2 and no separators.
std::string to_text(const Matrix& m);
/// Inverse of to_text. Blank lines are ignored; `cols` is needed only when there are no rows.
Matrix matrix_from_text(std::string_view text, std::size_t cols = 0);

/// All 3^k combinations of the k basis rows, in lexicographic order of the coefficient
/// vectors (first coefficient most significant). Throws InputError on a dependent basis.
std::vector<Vector> enumerate_subspace(const Matrix& basis);

/// Two-bit-plane packing for vectors of length at most 64. Bit i of `ones` is set when
/// entry i is 1; bit i of `twos` when it is 2.
struct PackedVector {
    std::uint64_t ones = 0;
    std::uint64_t twos = 0;

    friend bool operator==(const PackedVector&, const PackedVector&) = default;
};

inline constexpr std::size_t kMaxPackedLength = 64;

PackedVector pack(const Vector& v);
Vector unpack(PackedVector p, std::size_t length);

constexpr PackedVector packed_add(PackedVector a, PackedVector b) noexcept {
    const std::uint64_t t = (a.ones | b.twos) ^ (a.twos | b.ones);
    return {(a.twos | b.twos) ^ t, (a.ones | b.ones) ^ t};
}
constexpr PackedVector packed_neg(PackedVector a) noexcept { return {a.twos, a.ones}; }
inline std::size_t packed_weight(PackedVector a) noexcept {
    return static_cast<std::size_t>(__builtin_popcountll(a.ones | a.twos));
}

/// A hyperplane together with the functional whose kernel it is.
struct Hyperplane {
    /// Scaled so the first nonzero coefficient is 1; the unique key of the hyperplane.
    Vector functional;
    /// Reduced basis, (n-1) x n.
    Matrix basis;
};

struct HyperplaneEnumeration {
    /// Hyperplanes containing the subspace and avoiding the excluded vector, sorted by functional.
    std::vector<Hyperplane> kept;
    /// Number of hyperplanes containing the subspace.
    std::size_t total_classes = 0;
    /// How many of those contain the excluded vector.
    std::size_t excluded_count = 0;
};

/// Every hyperplane U of GF(3)^n with span(sub_basis) <= U and excluded not in U.
/// Enumerates nonzero functionals on the quotient up to scalar.
HyperplaneEnumeration intermediate_hyperplanes(const Matrix& sub_basis, const Vector& excluded);

/// Nonzero vectors of GF(3)^dim whose first nonzero entry is 1, lexicographically ordered.
std::vector<Vector> canonical_functionals(std::size_t dim);

}  // namespace golay486::gf3
