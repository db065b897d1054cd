#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyneigh/errors.hpp"
#include "polyneigh/linalg.hpp"
#include "polyneigh/rational.hpp"

namespace polyneigh {

/// A full-dimensional polytope given by its vertex coordinates. Shape checks
/// (coordinate lengths, nonemptiness) happen here; the geometric invariants
/// (distinct vertices, full dimension, no redundant points) are enforced by
/// enumerate_facets, which is the first operation that can decide them.
struct Polytope {
    int ambient_dim = 0;
    std::vector<Point> vertices;
    std::optional<std::string> label;

    Point centroid() const {
        Point c(static_cast<std::size_t>(ambient_dim), Rational(0));
        for (const auto& v : vertices)
            for (std::size_t i = 0; i < c.size(); ++i)
                c[i] += v[i];
        const Rational n{static_cast<long long>(vertices.size())};
        for (auto& x : c)
            x /= n;
        return c;
    }
};

inline Polytope make_polytope(int ambient_dim, std::vector<Point> vertices,
                              std::optional<std::string> label = std::nullopt) {
    if (ambient_dim < 1)
        raise(ErrorKind::bad_range, "ambient dimension must be >= 1");
    if (vertices.empty())
        raise(ErrorKind::empty_input, "polytope needs at least one vertex");
    for (const auto& v : vertices)
        if (static_cast<int>(v.size()) != ambient_dim)
            raise(ErrorKind::mixed_dimensions, "vertex length differs from ambient dimension");
    return Polytope{ambient_dim, std::move(vertices), std::move(label)};
}

} // namespace polyneigh
