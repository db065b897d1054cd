#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include "polyneigh/errors.hpp"
#include "polyneigh/linalg.hpp"
#include "polyneigh/polytope.hpp"

namespace polyneigh {

enum class Algorithm { oracle, incremental };

/// One facet: the defining inequality plus the sorted indices of the
/// vertices that satisfy it with equality.
struct Facet {
    Hyperplane plane;
    std::vector<int> vertex_indices;

    friend bool operator==(const Facet&, const Facet&) = default;
};

/// The complete facet list of a polytope, in canonical order: lexicographic
/// by sorted incident index set, ties broken by hyperplane comparison.
struct FacetSet {
    int ambient_dim = 0;
    int n_vertices = 0;
    std::vector<Facet> facets;

    friend bool operator==(const FacetSet&, const FacetSet&) = default;
};

namespace detail {

inline std::vector<Point> select(const std::vector<Point>& pts, const std::vector<int>& idx) {
    std::vector<Point> out;
    out.reserve(idx.size());
    for (int i : idx)
        out.push_back(pts[static_cast<std::size_t>(i)]);
    return out;
}

// Orients a candidate hyperplane so every point satisfies normal·x <= offset.
// Returns the incident index set, or nullopt when points lie strictly on
// both sides (not a supporting hyperplane).
inline std::optional<std::vector<int>> support_incidence(Hyperplane& plane,
                                                         const std::vector<Point>& pts) {
    std::vector<int> incident;
    bool has_pos = false, has_neg = false;
    std::vector<signed char> side(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Rational v = plane.evaluate(pts[i]);
        side[i] = v == 0 ? 0 : (v > 0 ? 1 : -1);
        has_pos |= side[i] > 0;
        has_neg |= side[i] < 0;
        if (has_pos && has_neg)
            return std::nullopt;
    }
    if (has_pos)
        plane = plane.flipped();
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (side[i] == 0)
            incident.push_back(static_cast<int>(i));
    return incident;
}

inline void check_duplicates(const Polytope& p) {
    std::set<Point> seen;
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        if (!seen.insert(p.vertices[i]).second)
            raise(ErrorKind::duplicate_vertex, "vertex " + std::to_string(i) + " duplicates an earlier one",
                  static_cast<long long>(i));
}

// Every input point must be a vertex of the hull: the smallest face
// containing it (intersection of the incident sets of all facets through
// it) has to be the point alone.
inline void check_all_points_are_vertices(const std::map<Hyperplane, std::vector<int>>& facets,
                                          std::size_t n_points) {
    for (std::size_t i = 0; i < n_points; ++i) {
        std::vector<int> meet;
        bool first = true;
        for (const auto& [plane, incident] : facets) {
            if (!std::binary_search(incident.begin(), incident.end(), static_cast<int>(i)))
                continue;
            if (first) {
                meet = incident;
                first = false;
            } else {
                std::vector<int> tmp;
                std::set_intersection(meet.begin(), meet.end(), incident.begin(), incident.end(),
                                      std::back_inserter(tmp));
                meet.swap(tmp);
            }
        }
        if (first || meet.size() != 1)
            raise(ErrorKind::redundant_point,
                  "input point " + std::to_string(i) + " is not a vertex of the hull",
                  static_cast<long long>(i));
    }
}

inline FacetSet canonicalize(std::map<Hyperplane, std::vector<int>> found, const Polytope& p) {
    check_all_points_are_vertices(found, p.vertices.size());
    FacetSet fs{p.ambient_dim, static_cast<int>(p.vertices.size()), {}};
    fs.facets.reserve(found.size());
    for (auto& [plane, incident] : found)
        fs.facets.push_back(Facet{plane, std::move(incident)});
    std::sort(fs.facets.begin(), fs.facets.end(), [](const Facet& a, const Facet& b) {
        if (a.vertex_indices != b.vertex_indices)
            return a.vertex_indices < b.vertex_indices;
        return a.plane < b.plane;
    });
    return fs;
}

// All d-subsets of 0..n-1 in lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        c[static_cast<std::size_t>(i)] = i;
    while (true) {
        out.push_back(c);
        int i = d - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - d + i)
            --i;
        if (i < 0)
            break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

inline int resolve_threads(int threads, std::size_t work_items) {
    if (threads <= 0) {
        unsigned hw = std::thread::hardware_concurrency();
        threads = hw == 0 ? 1 : static_cast<int>(hw);
    }
    threads = std::min<int>(threads, 8);
    threads = std::min<int>(threads, static_cast<int>(std::max<std::size_t>(work_items / 16, 1)));
    return std::max(threads, 1);
}

// Brute force over all C(v, d) vertex subsets: a subset spanning a
// hyperplane contributes a facet iff all vertices lie weakly on one side.
// Duplicate discoveries of the same facet dedupe via the canonical plane.
inline std::map<Hyperplane, std::vector<int>> oracle_facets(const Polytope& p, int threads) {
    const int n = static_cast<int>(p.vertices.size());
    const int d = p.ambient_dim;
    const auto cands = subsets(n, d);
    const int workers = resolve_threads(threads, cands.size());

    auto scan = [&](std::size_t begin, std::size_t end,
                    std::map<Hyperplane, std::vector<int>>& local) {
        for (std::size_t ci = begin; ci < end; ++ci) {
            const auto pts = select(p.vertices, cands[ci]);
            if (affine_dim(pts) != d - 1)
                continue;
            Hyperplane plane = spanning_hyperplane(pts);
            auto incident = support_incidence(plane, p.vertices);
            if (!incident)
                continue;
            local.emplace(std::move(plane), std::move(*incident));
        }
    };

    std::map<Hyperplane, std::vector<int>> found;
    if (workers == 1) {
        scan(0, cands.size(), found);
        return found;
    }
    std::vector<std::map<Hyperplane, std::vector<int>>> locals(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    const std::size_t chunk = (cands.size() + static_cast<std::size_t>(workers) - 1) /
                              static_cast<std::size_t>(workers);
    for (int t = 0; t < workers; ++t) {
        const std::size_t begin = static_cast<std::size_t>(t) * chunk;
        const std::size_t end = std::min(cands.size(), begin + chunk);
        if (begin >= end)
            break;
        pool.emplace_back(scan, begin, end, std::ref(locals[static_cast<std::size_t>(t)]));
    }
    for (auto& th : pool)
        th.join();
    for (auto& local : locals)
        found.merge(local);
    return found;
}

// Beneath-beyond insertion. Maintains the facet list of the hull of the
// points seen so far; new facets come from horizon ridges (intersections of
// a visible facet with a non-visible one) coned over the new point.
inline std::map<Hyperplane, std::vector<int>> incremental_facets(const Polytope& p) {
    const int d = p.ambient_dim;
    const auto& pts = p.vertices;
    const int n = static_cast<int>(pts.size());

    // Seed with d+1 affinely independent points.
    std::vector<int> seed;
    std::vector<Point> seed_pts;
    for (int i = 0; i < n && static_cast<int>(seed.size()) < d + 1; ++i) {
        seed_pts.push_back(pts[static_cast<std::size_t>(i)]);
        if (affine_dim(seed_pts) == static_cast<int>(seed.size()))
            seed.push_back(i);
        else
            seed_pts.pop_back();
    }

    std::vector<int> active = seed;
    std::sort(active.begin(), active.end());
    auto recompute = [&](const Hyperplane& plane,
                         const std::vector<int>& indices) -> std::optional<std::vector<int>> {
        Hyperplane h = plane;
        std::vector<int> incident;
        bool has_pos = false;
        for (int i : indices) {
            const Rational v = h.evaluate(pts[static_cast<std::size_t>(i)]);
            if (v == 0)
                incident.push_back(i);
            else if (v > 0)
                has_pos = true;
        }
        if (has_pos)
            return std::nullopt;
        return incident;
    };

    std::map<Hyperplane, std::vector<int>> facets;
    for (std::size_t omit = 0; omit < seed.size(); ++omit) {
        std::vector<Point> face_pts;
        for (std::size_t i = 0; i < seed.size(); ++i)
            if (i != omit)
                face_pts.push_back(pts[static_cast<std::size_t>(seed[i])]);
        Hyperplane plane =
            hyperplane_through(face_pts, pts[static_cast<std::size_t>(seed[omit])]);
        auto incident = recompute(plane, active);
        facets.emplace(std::move(plane), std::move(*incident));
    }

    for (int q = 0; q < n; ++q) {
        if (std::binary_search(active.begin(), active.end(), q))
            continue;
        const Point& x = pts[static_cast<std::size_t>(q)];
        std::vector<std::pair<Hyperplane, std::vector<int>>> visible, other;
        for (auto& [plane, incident] : facets) {
            if (plane.evaluate(x) > 0)
                visible.emplace_back(plane, incident);
            else
                other.emplace_back(plane, incident);
        }
        std::vector<int> now = active;
        now.insert(std::lower_bound(now.begin(), now.end(), q), q);
        if (visible.empty()) {
            // q lies in the current hull; incident sets only need refreshing.
            std::map<Hyperplane, std::vector<int>> next;
            for (auto& [plane, incident] : facets)
                next.emplace(plane, *recompute(plane, now));
            facets.swap(next);
            active.swap(now);
            continue;
        }

        std::map<Hyperplane, std::vector<int>> next;
        for (auto& [plane, incident] : other)
            next.emplace(plane, *recompute(plane, now));
        for (const auto& [vplane, vinc] : visible) {
            for (const auto& [oplane, oinc] : other) {
                std::vector<int> ridge;
                std::set_intersection(vinc.begin(), vinc.end(), oinc.begin(), oinc.end(),
                                      std::back_inserter(ridge));
                std::vector<Point> ridge_pts;
                if (d == 1) {
                    // Horizon of a segment is the empty face; the new facet is q alone.
                    if (!ridge.empty())
                        continue;
                } else {
                    if (ridge.empty())
                        continue;
                    ridge_pts = select(pts, ridge);
                    if (affine_dim(ridge_pts) != d - 2)
                        continue;
                }
                ridge_pts.push_back(x);
                if (affine_dim(ridge_pts) != d - 1)
                    continue;
                Hyperplane plane = spanning_hyperplane(ridge_pts);
                auto incident = support_incidence(plane, select(pts, now));
                if (!incident)
                    continue;
                std::vector<int> mapped;
                mapped.reserve(incident->size());
                for (int rel : *incident)
                    mapped.push_back(now[static_cast<std::size_t>(rel)]);
                next.emplace(std::move(plane), std::move(mapped));
            }
        }
        facets.swap(next);
        active.swap(now);
    }
    return facets;
}

} // namespace detail

/// Enumerates all facets of a full-dimensional polytope. The result is
/// canonical and identical for both algorithms; `threads` caps the oracle's
/// internal parallelism (0 = auto).
inline FacetSet enumerate_facets(const Polytope& p, Algorithm algorithm = Algorithm::oracle,
                                 int threads = 0) {
    detail::check_duplicates(p);
    const int dim = affine_dim(p.vertices);
    if (dim != p.ambient_dim)
        raise(ErrorKind::not_full_dimensional,
              "affine dimension " + std::to_string(dim) + " below ambient dimension " +
                  std::to_string(p.ambient_dim));
    auto found = algorithm == Algorithm::oracle ? detail::oracle_facets(p, threads)
                                                : detail::incremental_facets(p);
    return detail::canonicalize(std::move(found), p);
}

/// Facet-by-vertex boolean incidence matrix; entry (i, j) is true iff
/// vertex j lies on facet i.
inline std::vector<std::vector<bool>> incidence_matrix(const FacetSet& fs, int n_vertices) {
    std::vector<std::vector<bool>> m(fs.facets.size(),
                                     std::vector<bool>(static_cast<std::size_t>(n_vertices), false));
    for (std::size_t i = 0; i < fs.facets.size(); ++i)
        for (int j : fs.facets[i].vertex_indices) {
            if (j < 0 || j >= n_vertices)
                raise(ErrorKind::index_out_of_range,
                      "facet vertex index " + std::to_string(j) + " out of range", j);
            m[i][static_cast<std::size_t>(j)] = true;
        }
    return m;
}

} // namespace polyneigh
