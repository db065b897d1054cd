#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

#include "polyneigh/errors.hpp"
#include "polyneigh/hull.hpp"

namespace polyneigh {

/// All proper nonempty faces grouped by dimension, as sorted vertex-index
/// sets. f_vector[j] = number of j-faces, j = 0..dim-1.
struct FaceStructure {
    int dim = 0;
    std::vector<std::vector<std::vector<int>>> by_dim;
    std::vector<long long> f_vector;
};

namespace detail {

inline void check_indices(const std::vector<int>& s, int n_vertices) {
    for (int i : s)
        if (i < 0 || i >= n_vertices)
            raise(ErrorKind::index_out_of_range, "vertex index " + std::to_string(i) + " out of range",
                  i);
}

} // namespace detail

/// Vertex set of the smallest face containing `s`: the intersection of the
/// incident sets of all facets containing s, or all vertices when no facet
/// does (the smallest such face is the polytope itself).
inline std::vector<int> closure(std::vector<int> s, const FacetSet& fs) {
    detail::check_indices(s, fs.n_vertices);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<int> meet;
    bool first = true;
    for (const auto& facet : fs.facets) {
        if (!std::includes(facet.vertex_indices.begin(), facet.vertex_indices.end(), s.begin(),
                           s.end()))
            continue;
        if (first) {
            meet = facet.vertex_indices;
            first = false;
        } else {
            std::vector<int> tmp;
            std::set_intersection(meet.begin(), meet.end(), facet.vertex_indices.begin(),
                                  facet.vertex_indices.end(), std::back_inserter(tmp));
            meet.swap(tmp);
        }
    }
    if (first) {
        meet.resize(static_cast<std::size_t>(fs.n_vertices));
        for (int i = 0; i < fs.n_vertices; ++i)
            meet[static_cast<std::size_t>(i)] = i;
    }
    return meet;
}

/// Every proper nonempty face, computed as the intersection closure of the
/// facet incident sets and graded by the affine dimension of the face's
/// vertex coordinates.
inline FaceStructure all_faces(const FacetSet& fs, const Polytope& p) {
    const int d = fs.ambient_dim;
    std::set<std::vector<int>> known;
    std::deque<std::vector<int>> queue;
    for (const auto& facet : fs.facets)
        if (known.insert(facet.vertex_indices).second)
            queue.push_back(facet.vertex_indices);
    while (!queue.empty()) {
        std::vector<int> face = std::move(queue.front());
        queue.pop_front();
        for (const auto& facet : fs.facets) {
            std::vector<int> meet;
            std::set_intersection(face.begin(), face.end(), facet.vertex_indices.begin(),
                                  facet.vertex_indices.end(), std::back_inserter(meet));
            if (meet.empty() || known.count(meet))
                continue;
            known.insert(meet);
            queue.push_back(std::move(meet));
        }
    }

    FaceStructure out;
    out.dim = d;
    out.by_dim.assign(static_cast<std::size_t>(d), {});
    for (const auto& face : known) {
        const int fdim = affine_dim(detail::select(p.vertices, face));
        out.by_dim[static_cast<std::size_t>(fdim)].push_back(face);
    }
    out.f_vector.resize(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        auto& level = out.by_dim[static_cast<std::size_t>(j)];
        std::sort(level.begin(), level.end());
        out.f_vector[static_cast<std::size_t>(j)] = static_cast<long long>(level.size());
    }
    return out;
}

inline std::vector<long long> f_vector(const FacetSet& fs, const Polytope& p) {
    return all_faces(fs, p).f_vector;
}

/// Number of facets incident with the given vertex.
inline int facets_at_vertex(const FacetSet& fs, int vertex) {
    if (vertex < 0 || vertex >= fs.n_vertices)
        raise(ErrorKind::index_out_of_range, "vertex index " + std::to_string(vertex) + " out of range",
              vertex);
    int count = 0;
    for (const auto& facet : fs.facets)
        count += std::binary_search(facet.vertex_indices.begin(), facet.vertex_indices.end(), vertex)
                     ? 1
                     : 0;
    return count;
}

struct IncidenceCheckRow {
    int i = 0;
    long long lhs = 0; // (d-i+1) * f_{i-1}
    long long rhs = 0; // (i+1) * f_i
    bool holds = false;
};

/// For each 0 < i <= m, compares (d-i+1) f_{i-1} against (i+1) f_i. The
/// caller is responsible for m-simpliciality of the structure.
inline std::vector<IncidenceCheckRow> check_incidence_inequality(const FaceStructure& fs, int d,
                                                                 int m) {
    if (m <= 0 || m > d - 1)
        raise(ErrorKind::bad_range, "m must satisfy 0 < m <= d-1");
    std::vector<IncidenceCheckRow> rows;
    for (int i = 1; i <= m; ++i) {
        IncidenceCheckRow row;
        row.i = i;
        row.lhs = static_cast<long long>(d - i + 1) * fs.f_vector[static_cast<std::size_t>(i - 1)];
        row.rhs = static_cast<long long>(i + 1) * fs.f_vector[static_cast<std::size_t>(i)];
        row.holds = row.lhs <= row.rhs;
        rows.push_back(row);
    }
    return rows;
}

struct SimplexBoundCheck {
    long long f_m = 0;
    long long f_dm1 = 0; // f_{d-m-1}
    bool holds = false;
};

/// Compares f_m against f_{d-m-1}; requires m >= d/2 (and an m-simplicial
/// structure, checked by the caller).
inline SimplexBoundCheck check_simplex_bound(const FaceStructure& fs, int d, int m) {
    if (2 * m < d || m > d - 1)
        raise(ErrorKind::bad_range, "m must satisfy d/2 <= m <= d-1");
    SimplexBoundCheck out;
    out.f_m = fs.f_vector[static_cast<std::size_t>(m)];
    out.f_dm1 = fs.f_vector[static_cast<std::size_t>(d - m - 1)];
    out.holds = out.f_m >= out.f_dm1;
    return out;
}

} // namespace polyneigh
