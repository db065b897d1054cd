#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "polyneigh/errors.hpp"
#include "polyneigh/rational.hpp"

namespace polyneigh {

using Matrix = std::vector<std::vector<Rational>>;

namespace detail {

inline void check_rectangular(const Matrix& m) {
    if (m.empty())
        raise(ErrorKind::empty_input, "matrix has no rows");
    for (const auto& row : m)
        if (row.size() != m.front().size())
            raise(ErrorKind::mixed_dimensions, "matrix rows have different lengths");
}

// Gaussian elimination in place. Partial pivoting picks the entry of largest
// absolute value in the current column; any nonzero pivot is exact, the
// choice only bounds intermediate numerator/denominator growth.
// Returns the pivot column of each eliminated row.
inline std::vector<std::size_t> eliminate(Matrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t best = row;
        Rational best_abs = abs(m[best][col]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            Rational a = abs(m[r][col]);
            if (a > best_abs) {
                best_abs = a;
                best = r;
            }
        }
        if (best_abs == 0)
            continue;
        std::swap(m[row], m[best]);
        const Rational pivot = m[row][col];
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            const Rational factor = m[r][col] / pivot;
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= factor * m[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

} // namespace detail

/// Exact rank via rational Gaussian elimination.
inline int rank(Matrix m) {
    detail::check_rectangular(m);
    return static_cast<int>(detail::eliminate(m).size());
}

/// Dimension of the affine hull of a nonempty point list; 0 for a single
/// point, ambient dimension for a full-dimensional set.
inline int affine_dim(const std::vector<Point>& points) {
    if (points.empty())
        raise(ErrorKind::empty_input, "affine_dim of empty point list");
    const std::size_t dim = points.front().size();
    for (const auto& p : points)
        if (p.size() != dim)
            raise(ErrorKind::mixed_dimensions, "points with different coordinate lengths");
    if (points.size() == 1)
        return 0;
    Matrix diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Rational> row(dim);
        for (std::size_t c = 0; c < dim; ++c)
            row[c] = points[i][c] - points[0][c];
        diffs.push_back(std::move(row));
    }
    return rank(std::move(diffs));
}

/// A facet-defining inequality normal·x <= offset with jointly primitive
/// integer coefficients (gcd of all normal entries and the offset is 1).
struct Hyperplane {
    std::vector<Integer> normal;
    Integer offset;

    /// normal·x - offset; negative strictly inside, zero on the plane.
    Rational evaluate(const Point& x) const {
        if (x.size() != normal.size())
            raise(ErrorKind::mixed_dimensions, "point/hyperplane dimension mismatch");
        Rational acc = 0;
        for (std::size_t i = 0; i < normal.size(); ++i)
            acc += Rational(normal[i]) * x[i];
        return acc - Rational(offset);
    }

    bool contains(const Point& x) const { return evaluate(x) == 0; }

    Hyperplane flipped() const {
        Hyperplane h = *this;
        for (auto& c : h.normal)
            c = -c;
        h.offset = -h.offset;
        return h;
    }

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
    friend bool operator<(const Hyperplane& a, const Hyperplane& b) {
        if (a.normal != b.normal)
            return a.normal < b.normal;
        return a.offset < b.offset;
    }
};

namespace detail {

// Scales a rational vector to jointly primitive integers, keeping direction.
inline std::vector<Integer> to_primitive(const std::vector<Rational>& v) {
    Integer lcm_den = 1;
    for (const auto& x : v)
        lcm_den = lcm(lcm_den, denominator(x));
    std::vector<Integer> ints(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
        g = gcd(g, ints[i]);
    }
    if (g > 1)
        for (auto& x : ints)
            x /= g;
    return ints;
}

// The one-dimensional kernel of a matrix, or nullopt when the nullity is
// not exactly 1.
inline std::optional<std::vector<Rational>> kernel_vector(Matrix m) {
    const std::size_t cols = m.front().size();
    const auto pivot_cols = eliminate(m);
    if (pivot_cols.size() + 1 != cols)
        return std::nullopt;
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols)
        is_pivot[c] = true;
    std::size_t free_col = 0;
    while (free_col < cols && is_pivot[free_col])
        ++free_col;
    std::vector<Rational> kernel(cols, Rational(0));
    kernel[free_col] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
        const std::size_t pc = pivot_cols[r];
        kernel[pc] = -m[r][free_col] / m[r][pc];
    }
    return kernel;
}

} // namespace detail

/// Hyperplane spanned by a point list whose affine hull has codimension 1.
/// Canonical up to orientation: the first nonzero normal entry is positive.
/// Throws degenerate_input when the points do not span a hyperplane.
inline Hyperplane spanning_hyperplane(const std::vector<Point>& points) {
    if (points.empty())
        raise(ErrorKind::empty_input, "no points given");
    const std::size_t dim = points.front().size();
    Matrix homogeneous;
    homogeneous.reserve(points.size());
    for (const auto& p : points) {
        if (p.size() != dim)
            raise(ErrorKind::mixed_dimensions, "points with different coordinate lengths");
        std::vector<Rational> row = p;
        row.push_back(Rational(-1));
        homogeneous.push_back(std::move(row));
    }
    auto kernel = detail::kernel_vector(std::move(homogeneous));
    if (!kernel)
        raise(ErrorKind::degenerate_input, "points do not span a hyperplane");
    auto coeffs = detail::to_primitive(*kernel);
    Hyperplane h{std::vector<Integer>(coeffs.begin(), coeffs.end() - 1), coeffs.back()};
    for (const auto& c : h.normal) {
        if (c == 0)
            continue;
        if (c < 0)
            h = h.flipped();
        break;
    }
    return h;
}

/// Hyperplane through `points`, oriented so `inside` strictly satisfies
/// normal·x <= offset. Errors: degenerate_input when the points are affinely
/// dependent (or fail to span a hyperplane), on_hyperplane when `inside`
/// lies on the computed plane.
inline Hyperplane hyperplane_through(const std::vector<Point>& points, const Point& inside) {
    Hyperplane h = spanning_hyperplane(points);
    const Rational side = h.evaluate(inside);
    if (side == 0)
        raise(ErrorKind::on_hyperplane, "inside point lies on the hyperplane");
    return side < 0 ? h : h.flipped();
}

} // namespace polyneigh
