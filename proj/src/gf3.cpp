#include "golay486/gf3.hpp"

#include <algorithm>
#include <utility>

namespace golay486::gf3 {

namespace {

void require_same_length(const Vector& u, const Vector& v, const char* op) {
    if (u.size() != v.size()) {
        throw DimensionError(std::string(op) + ": length mismatch " + std::to_string(u.size()) +
                             " vs " + std::to_string(v.size()));
    }
}

Element checked_element(int value) {
    if (value < 0 || value > 2) {
        throw InputError("gf3: entry " + std::to_string(value) + " is not in {0,1,2}");
    }
    return static_cast<Element>(value);
}

}  // namespace

Vector::Vector(std::vector<Element> entries) : entries_(std::move(entries)) {
    for (Element e : entries_) checked_element(e);
}

Vector::Vector(std::initializer_list<int> entries) {
    entries_.reserve(entries.size());
    for (int e : entries) entries_.push_back(checked_element(e));
}

Vector Vector::unit(std::size_t length, std::size_t index, Element value) {
    if (index >= length) throw InputError("gf3: unit index out of range");
    Vector v(length);
    v.set(index, value);
    return v;
}

void Vector::set(std::size_t i, Element value) {
    if (i >= entries_.size()) throw InputError("gf3: index out of range");
    entries_[i] = checked_element(value);
}

bool Vector::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](Element e) { return e == 0; });
}

Vector vec_add(const Vector& u, const Vector& v) {
    require_same_length(u, v, "vec_add");
    std::vector<Element> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = add(u[i], v[i]);
    return Vector(std::move(out));
}

Vector vec_sub(const Vector& u, const Vector& v) {
    require_same_length(u, v, "vec_sub");
    std::vector<Element> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) out[i] = add(u[i], neg(v[i]));
    return Vector(std::move(out));
}

Vector vec_neg(const Vector& v) { return vec_scale(2, v); }

Vector vec_scale(Element c, const Vector& v) {
    checked_element(c);
    std::vector<Element> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = mul(c, v[i]);
    return Vector(std::move(out));
}

Element dot(const Vector& u, const Vector& v) {
    require_same_length(u, v, "dot");
    unsigned acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) acc += static_cast<unsigned>(u[i]) * v[i];
    return static_cast<Element>(acc % 3);
}

std::size_t hamming_weight(const Vector& v) {
    auto e = v.entries();
    return static_cast<std::size_t>(std::count_if(e.begin(), e.end(), [](Element x) { return x != 0; }));
}

std::string to_string(const Vector& v) {
    std::string s;
    s.reserve(v.size());
    for (Element e : v.entries()) s.push_back(static_cast<char>('0' + e));
    return s;
}

Vector vector_from_string(std::string_view digits) {
    std::vector<Element> out;
    out.reserve(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const char ch = digits[i];
        if (ch < '0' || ch > '2') throw ParseError("gf3: expected digit 0, 1 or 2", i);
        out.push_back(static_cast<Element>(ch - '0'));
    }
    return Vector(std::move(out));
}

Vector canonical_scaling(const Vector& v) {
    for (Element e : v.entries()) {
        if (e != 0) return e == 1 ? v : vec_scale(inv(e), v);
    }
    return v;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows, Vector(cols)), cols_(cols) {}

Matrix::Matrix(std::vector<Vector> rows, std::size_t cols) : rows_(std::move(rows)), cols_(cols) {
    for (const auto& r : rows_) {
        if (r.size() != cols_) throw DimensionError("gf3: matrix rows must share the column count");
    }
}

Matrix::Matrix(std::vector<Vector> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    *this = Matrix(std::move(rows), cols);
}

void Matrix::append_row(Vector row) {
    if (rows_.empty() && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw DimensionError("gf3: appended row has wrong length");
    rows_.push_back(std::move(row));
}

RowReduction rref(const Matrix& m) {
    const std::size_t rows = m.row_count();
    const std::size_t cols = m.col_count();
    std::vector<std::vector<Element>> a(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        auto e = m.row(r).entries();
        a[r].assign(e.begin(), e.end());
    }

    RowReduction out;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t r = pivot_row;
        while (r < rows && a[r][c] == 0) ++r;
        if (r == rows) continue;
        std::swap(a[r], a[pivot_row]);
        const Element scale = inv(a[pivot_row][c]);
        for (auto& x : a[pivot_row]) x = mul(x, scale);
        for (std::size_t other = 0; other < rows; ++other) {
            if (other == pivot_row || a[other][c] == 0) continue;
            const Element f = neg(a[other][c]);
            for (std::size_t j = 0; j < cols; ++j) a[other][j] = add(a[other][j], mul(f, a[pivot_row][j]));
        }
        out.pivot_columns.push_back(c);
        ++pivot_row;
    }
    out.rank = pivot_row;

    std::vector<Vector> reduced;
    reduced.reserve(rows);
    for (auto& row : a) reduced.emplace_back(std::move(row));
    out.matrix = Matrix(std::move(reduced), cols);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix row_space_basis(const Matrix& m) {
    auto red = rref(m);
    std::vector<Vector> rows(red.matrix.rows().begin(), red.matrix.rows().begin() + static_cast<std::ptrdiff_t>(red.rank));
    return Matrix(std::move(rows), m.col_count());
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    if (a.col_count() != b.col_count()) return false;
    return row_space_basis(a) == row_space_basis(b);
}

std::optional<Vector> solve_combination(const Matrix& basis, const Vector& v) {
    if (v.size() != basis.col_count()) throw DimensionError("solve_combination: length mismatch");
    const std::size_t k = basis.row_count();
    const std::size_t n = basis.col_count();
    if (gf3::rank(basis) != k) throw InputError("solve_combination: basis rows are dependent");
    // Reduce the augmented system [basis^T | v]; independence puts the pivots at 0..k-1.
    std::vector<Vector> rows;
    rows.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector r(k + 1);
        for (std::size_t i = 0; i < k; ++i) r.set(i, basis(i, j));
        r.set(k, v[j]);
        rows.push_back(std::move(r));
    }
    auto red = rref(Matrix(std::move(rows), k + 1));
    if (!red.pivot_columns.empty() && red.pivot_columns.back() == k) return std::nullopt;
    Vector x(k);
    for (std::size_t r = 0; r < red.rank; ++r) x.set(red.pivot_columns[r], red.matrix(r, k));
    return x;
}

bool in_row_space(const Matrix& m, const Vector& v) {
    const std::size_t before = rank(m);
    Matrix extended = m;
    extended.append_row(v);
    return rank(extended) == before;
}

Matrix null_space(const Matrix& m) {
    const std::size_t n = m.col_count();
    auto red = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : red.pivot_columns) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector x(n);
        x.set(free, 1);
        for (std::size_t r = 0; r < red.rank; ++r) x.set(red.pivot_columns[r], neg(red.matrix(r, free)));
        basis.push_back(std::move(x));
    }
    return row_space_basis(Matrix(std::move(basis), n));
}

Vector apply(const Matrix& m, const Vector& v) {
    if (v.size() != m.col_count()) throw DimensionError("apply: length mismatch");
    Vector out(m.row_count());
    for (std::size_t r = 0; r < m.row_count(); ++r) out.set(r, dot(m.row(r), v));
    return out;
}

Matrix delete_column(const Matrix& m, std::size_t column) {
    if (column >= m.col_count()) throw InputError("delete_column: index out of range");
    std::vector<Vector> rows;
    rows.reserve(m.row_count());
    for (const auto& r : m.rows()) {
        std::vector<Element> e(r.entries().begin(), r.entries().end());
        e.erase(e.begin() + static_cast<std::ptrdiff_t>(column));
        rows.emplace_back(std::move(e));
    }
    return Matrix(std::move(rows), m.col_count() - 1);
}

Matrix transpose(const Matrix& m) {
    std::vector<Vector> rows;
    for (std::size_t c = 0; c < m.col_count(); ++c) {
        Vector r(m.row_count());
        for (std::size_t i = 0; i < m.row_count(); ++i) r.set(i, m(i, c));
        rows.push_back(std::move(r));
    }
    return Matrix(std::move(rows), m.row_count());
}

std::string to_text(const Matrix& m) {
    std::string out;
    for (const auto& r : m.rows()) {
        out += to_string(r);
        out.push_back('\n');
    }
    return out;
}

Matrix matrix_from_text(std::string_view text, std::size_t cols) {
    std::vector<Vector> rows;
    std::size_t pos = 0;
    std::size_t width = cols;
    bool width_known = cols != 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) {
            std::vector<Element> e;
            for (std::size_t i = 0; i < line.size(); ++i) {
                const char ch = line[i];
                if (ch < '0' || ch > '2') throw ParseError("matrix: expected digit 0, 1 or 2", pos + i);
                e.push_back(static_cast<Element>(ch - '0'));
            }
            if (!width_known) {
                width = e.size();
                width_known = true;
            } else if (e.size() != width) {
                throw ParseError("matrix: row length " + std::to_string(e.size()) + " differs from " +
                                     std::to_string(width),
                                 pos);
            }
            rows.emplace_back(std::move(e));
        }
        if (end == text.size()) break;
        pos = end + 1;
    }
    return Matrix(std::move(rows), width);
}

std::vector<Vector> enumerate_subspace(const Matrix& basis) {
    const std::size_t k = basis.row_count();
    if (rank(basis) != k) throw InputError("enumerate_subspace: basis rows are dependent");
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 3;

    std::vector<Vector> out;
    out.reserve(total);
    std::vector<Element> coeff(k, 0);
    Vector current(basis.col_count());
    out.push_back(current);
    // Ternary odometer, last coefficient fastest. Every digit change is a +1 step,
    // including the wrap 2 -> 0, so each changed digit adds its basis row once.
    for (std::size_t step = 1; step < total; ++step) {
        std::size_t d = k;
        while (d-- > 0) {
            current = vec_add(current, basis.row(d));
            coeff[d] = add(coeff[d], 1);
            if (coeff[d] != 0) break;
        }
        out.push_back(current);
    }
    return out;
}

PackedVector pack(const Vector& v) {
    if (v.size() > kMaxPackedLength) throw DimensionError("pack: vector longer than 64");
    PackedVector p;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 1) p.ones |= std::uint64_t{1} << i;
        if (v[i] == 2) p.twos |= std::uint64_t{1} << i;
    }
    return p;
}

Vector unpack(PackedVector p, std::size_t length) {
    Vector v(length);
    for (std::size_t i = 0; i < length; ++i) {
        if ((p.ones >> i) & 1U) v.set(i, 1);
        if ((p.twos >> i) & 1U) v.set(i, 2);
    }
    return v;
}

std::vector<Vector> canonical_functionals(std::size_t dim) {
    std::vector<Vector> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) total *= 3;
    for (std::size_t code = 1; code < total; ++code) {
        Vector v(dim);
        std::size_t x = code;
        for (std::size_t i = dim; i-- > 0;) {
            v.set(i, static_cast<Element>(x % 3));
            x /= 3;
        }
        if (canonical_scaling(v) == v) out.push_back(std::move(v));
    }
    return out;
}

HyperplaneEnumeration intermediate_hyperplanes(const Matrix& sub_basis, const Vector& excluded) {
    const std::size_t n = sub_basis.col_count();
    if (excluded.size() != n) throw InputError("intermediate_hyperplanes: excluded vector has wrong length");
    if (rank(sub_basis) != sub_basis.row_count()) {
        throw InputError("intermediate_hyperplanes: subspace basis rows are dependent");
    }
    if (in_row_space(sub_basis, excluded)) {
        throw InputError("intermediate_hyperplanes: excluded vector lies in the subspace");
    }

    // Functionals vanishing on the subspace are the row space of its annihilator.
    const Matrix annihilator = null_space(sub_basis);
    HyperplaneEnumeration out;
    for (const auto& y : canonical_functionals(annihilator.row_count())) {
        Vector phi(n);
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (y[i] != 0) phi = vec_add(phi, vec_scale(y[i], annihilator.row(i)));
        }
        phi = canonical_scaling(phi);
        ++out.total_classes;
        if (dot(phi, excluded) == 0) {
            ++out.excluded_count;
            continue;
        }
        out.kept.push_back({phi, null_space(Matrix({phi}, n))});
    }
    std::sort(out.kept.begin(), out.kept.end(),
              [](const Hyperplane& a, const Hyperplane& b) { return a.functional < b.functional; });
    return out;
}

}  // namespace golay486::gf3
