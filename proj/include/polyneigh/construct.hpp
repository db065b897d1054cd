#pragma once

#include <string>
#include <vector>

#include "polyneigh/bounds_util.hpp"
#include "polyneigh/errors.hpp"
#include "polyneigh/polytope.hpp"

namespace polyneigh {

/// Cyclic polytope C(d, n): hull of (t, t^2, ..., t^d) at t = 1..n.
/// Integer parameters keep the canonical facet output stable; any strictly
/// increasing parameter choice gives the same combinatorics.
inline Polytope cyclic(int d, int n) {
    if (d < 2 || n <= d)
        raise(ErrorKind::bad_range, "cyclic needs n > d >= 2");
    std::vector<Point> vertices;
    vertices.reserve(static_cast<std::size_t>(n));
    for (int t = 1; t <= n; ++t) {
        Point p(static_cast<std::size_t>(d));
        Integer power = 1;
        for (int c = 0; c < d; ++c) {
            power *= t;
            p[static_cast<std::size_t>(c)] = Rational(power);
        }
        vertices.push_back(std::move(p));
    }
    return make_polytope(d, std::move(vertices),
                         "cyclic(" + std::to_string(d) + "," + std::to_string(n) + ")");
}

/// r-fold pyramid: the base embedded at height 0 in r extra coordinates,
/// one apex at each new unit point. Adds r vertices and r facets.
inline Polytope pyramid(const Polytope& base, int r) {
    if (r < 1)
        raise(ErrorKind::bad_range, "pyramid needs r >= 1");
    const int d = base.ambient_dim + r;
    std::vector<Point> vertices;
    vertices.reserve(base.vertices.size() + static_cast<std::size_t>(r));
    for (const auto& v : base.vertices) {
        Point p = v;
        p.resize(static_cast<std::size_t>(d), Rational(0));
        vertices.push_back(std::move(p));
    }
    for (int j = 0; j < r; ++j) {
        Point apex(static_cast<std::size_t>(d), Rational(0));
        apex[static_cast<std::size_t>(base.ambient_dim + j)] = 1;
        vertices.push_back(std::move(apex));
    }
    std::string label = "pyr";
    if (r > 1)
        label += "^" + std::to_string(r);
    label += "(" + base.label.value_or("?") + ")";
    return make_polytope(d, std::move(vertices), label);
}

/// Join of two polytopes: copies of a and b in skew affine subspaces of
/// R^{da+db+1}, points (x, 0, 0) and (0, y, 1). Vertex and facet counts add.
inline Polytope join(const Polytope& a, const Polytope& b) {
    const int d = a.ambient_dim + b.ambient_dim + 1;
    std::vector<Point> vertices;
    vertices.reserve(a.vertices.size() + b.vertices.size());
    for (const auto& x : a.vertices) {
        Point p = x;
        p.resize(static_cast<std::size_t>(d), Rational(0));
        vertices.push_back(std::move(p));
    }
    for (const auto& y : b.vertices) {
        Point p(static_cast<std::size_t>(a.ambient_dim), Rational(0));
        p.insert(p.end(), y.begin(), y.end());
        p.push_back(Rational(1));
        vertices.push_back(std::move(p));
    }
    return make_polytope(d, std::move(vertices),
                         "join(" + a.label.value_or("?") + "," + b.label.value_or("?") + ")");
}

enum class ExampleName { P46, P58, P59, P610 };

inline ExampleName example_from_string(const std::string& name) {
    if (name == "P46")
        return ExampleName::P46;
    if (name == "P58")
        return ExampleName::P58;
    if (name == "P59")
        return ExampleName::P59;
    if (name == "P610")
        return ExampleName::P610;
    raise(ErrorKind::unknown_example, "unknown example name: '" + name + "'");
}

/// The four 0/1-polytopes with the minimal known facet counts for their
/// (dimension, vertex count) pairs: P4,6 (f=9), P5,8 (f=12), P5,9 (f=16),
/// P6,10 (f=14).
inline Polytope example(ExampleName name) {
    auto build = [](int d, const std::vector<std::vector<int>>& rows, std::string label) {
        std::vector<Point> vertices;
        vertices.reserve(rows.size());
        for (const auto& row : rows) {
            Point p;
            p.reserve(row.size());
            for (int x : row)
                p.push_back(Rational(x));
            vertices.push_back(std::move(p));
        }
        return make_polytope(d, std::move(vertices), std::move(label));
    };
    switch (name) {
    case ExampleName::P46:
        return build(4,
                     {{0, 0, 0, 0},
                      {0, 0, 0, 1},
                      {0, 0, 1, 0},
                      {0, 1, 0, 0},
                      {1, 0, 0, 1},
                      {1, 1, 1, 0}},
                     "P4,6");
    case ExampleName::P58:
        return build(5,
                     {{0, 0, 0, 0, 0},
                      {0, 0, 0, 0, 1},
                      {0, 0, 0, 1, 0},
                      {0, 0, 1, 0, 0},
                      {0, 1, 0, 0, 1},
                      {0, 1, 1, 1, 0},
                      {1, 0, 0, 1, 0},
                      {1, 0, 1, 0, 1}},
                     "P5,8");
    case ExampleName::P59:
        return build(5,
                     {{0, 0, 0, 0, 0},
                      {0, 0, 0, 0, 1},
                      {0, 0, 0, 1, 0},
                      {0, 0, 1, 0, 1},
                      {0, 1, 0, 1, 0},
                      {0, 1, 1, 0, 0},
                      {1, 0, 0, 1, 1},
                      {1, 0, 1, 0, 0},
                      {1, 1, 0, 0, 0}},
                     "P5,9");
    case ExampleName::P610:
        return build(6,
                     {{0, 0, 0, 0, 0, 0},
                      {0, 0, 0, 0, 0, 1},
                      {0, 0, 0, 0, 1, 0},
                      {0, 0, 0, 1, 0, 0},
                      {0, 0, 1, 0, 0, 0},
                      {0, 1, 0, 0, 0, 0},
                      {1, 0, 0, 0, 1, 1},
                      {1, 0, 1, 1, 0, 0},
                      {1, 1, 0, 1, 0, 1},
                      {1, 1, 1, 0, 1, 0}},
                     "P6,10");
    }
    raise(ErrorKind::unknown_example, "unknown example");
}

/// Predicted parameters of the recursive join family: P_n^0 a 2-neighborly
/// 4-polytope with n vertices, P_n^{m+1} = P_n^m * P_n^m.
struct JoinFamilyCounts {
    long long n = 0;
    long long m = 0;
    long long d = 0;
    long long f0 = 0;
    long long f_facets = 0;

    friend bool operator==(const JoinFamilyCounts&, const JoinFamilyCounts&) = default;
};

/// Facet count of the (d-4)-fold pyramid over a cyclic 4-polytope with
/// v-d+4 vertices: (v+4-d)(v+1-d)/2 + d - 4.
inline long long pyramid_over_cyclic_counts(int d, int v) {
    if (d < 5 || v < d + 2)
        raise(ErrorKind::bad_range, "pyramid_over_cyclic_counts needs d >= 5, v >= d+2");
    return static_cast<long long>(v + 4 - d) * (v + 1 - d) / 2 + d - 4;
}

inline JoinFamilyCounts join_family_counts(long long n, long long m) {
    if (n < 5 || m < 0 || m > 55)
        raise(ErrorKind::bad_range, "join_family_counts needs n >= 5, 0 <= m <= 55");
    JoinFamilyCounts out;
    out.n = n;
    out.m = m;
    const long long scale = 1LL << m;
    out.d = 5 * scale - 1;
    out.f0 = to_count(Integer(scale) * n, "join family f0");
    out.f_facets = m == 0 ? to_count(Integer(n) * (n - 3) / 2, "join family facets")
                          : to_count(Integer(scale / 2) * n * (n - 3), "join family facets");
    return out;
}

} // namespace polyneigh
