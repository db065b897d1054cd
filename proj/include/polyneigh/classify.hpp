#pragma once

#include <algorithm>
#include <vector>

#include "polyneigh/bounds_util.hpp"
#include "polyneigh/faces.hpp"

namespace polyneigh {

/// Summary of the combinatorial classification of one polytope.
struct ClassificationReport {
    int max_neighborly_k = 0;
    int simplicial_upto_m = 0;
    int simple_upto_m = 0;
    bool is_dual_2neighborly = false;
};

namespace detail {

// S is the vertex set of a proper face iff some facet contains it and the
// intersection of all facets containing it adds no further vertex.
inline bool is_proper_face_vertex_set(const std::vector<int>& sorted_s, const FacetSet& fs) {
    std::vector<int> meet;
    bool first = true;
    for (const auto& facet : fs.facets) {
        if (!std::includes(facet.vertex_indices.begin(), facet.vertex_indices.end(),
                           sorted_s.begin(), sorted_s.end()))
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
        if (meet.size() == sorted_s.size())
            return true;
    }
    return !first && meet == sorted_s;
}

template <typename Fn>
inline bool all_k_subsets(int n, int k, Fn&& accept) {
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        c[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!accept(c))
            return false;
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return true;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace detail

/// True iff every k-subset of the vertices is the vertex set of a proper
/// face, i.e. its closure adds nothing.
inline bool is_k_neighborly(const FaceStructure&, const FacetSet& fs, int k) {
    if (k < 1 || k > fs.n_vertices)
        raise(ErrorKind::bad_range, "k must be in 1..f_0");
    return detail::all_k_subsets(fs.n_vertices, k, [&](const std::vector<int>& s) {
        return detail::is_proper_face_vertex_set(s, fs);
    });
}

/// Largest k with is_k_neighborly true. A d-simplex reports d: every proper
/// vertex subset spans a face, and the full set does not count.
inline int max_neighborliness(const FaceStructure& fstruct, const FacetSet& fs) {
    int best = 0;
    for (int k = 1; k <= fs.n_vertices; ++k) {
        if (!is_k_neighborly(fstruct, fs, k))
            break; // monotone: once false, larger k stays false
        best = k;
    }
    return best;
}

/// True iff every j-face with j <= m has exactly j+1 vertices.
inline bool is_m_simplicial(const FaceStructure& fstruct, int m) {
    if (m < 0 || m > fstruct.dim - 1)
        raise(ErrorKind::bad_range, "m must be in 0..d-1");
    for (int j = 0; j <= m; ++j)
        for (const auto& face : fstruct.by_dim[static_cast<std::size_t>(j)])
            if (static_cast<int>(face.size()) != j + 1)
                return false;
    return true;
}

/// True iff every (d-1-m)-face lies in exactly m+1 facets.
inline bool is_m_simple(const FaceStructure& fstruct, const FacetSet& fs, int m) {
    const int d = fstruct.dim;
    if (m < 0 || m > d - 1)
        raise(ErrorKind::bad_range, "m must be in 0..d-1");
    for (const auto& face : fstruct.by_dim[static_cast<std::size_t>(d - 1 - m)]) {
        int containing = 0;
        for (const auto& facet : fs.facets)
            containing += std::includes(facet.vertex_indices.begin(), facet.vertex_indices.end(),
                                        face.begin(), face.end())
                              ? 1
                              : 0;
        if (containing != m + 1)
            return false;
    }
    return true;
}

/// Facet indices incident to each vertex (the transpose of the
/// facet-by-vertex incidence matrix, packaged row-per-vertex).
inline std::vector<std::vector<int>> dual_incidence(const FacetSet& fs) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(fs.n_vertices));
    for (std::size_t f = 0; f < fs.facets.size(); ++f)
        for (int v : fs.facets[f].vertex_indices)
            rows[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
    return rows;
}

/// True iff every pair of facets meets in a ridge: f_{d-2} = C(f_{d-1}, 2).
inline bool is_dual_2neighborly(const FaceStructure& fstruct, const FacetSet& fs) {
    const int d = fstruct.dim;
    const long long n_facets = static_cast<long long>(fs.facets.size());
    const Integer pairs = binomial(n_facets, 2);
    if (d == 1)
        return pairs == 1; // the two endpoints meet in the empty face
    return Integer(fstruct.f_vector[static_cast<std::size_t>(d - 2)]) == pairs;
}

inline ClassificationReport classify(const FaceStructure& fstruct, const FacetSet& fs) {
    ClassificationReport report;
    report.max_neighborly_k = max_neighborliness(fstruct, fs);
    const int d = fstruct.dim;
    report.simplicial_upto_m = 0;
    for (int m = 0; m <= d - 1 && is_m_simplicial(fstruct, m); ++m)
        report.simplicial_upto_m = m;
    report.simple_upto_m = 0;
    for (int m = 0; m <= d - 1 && is_m_simple(fstruct, fs, m); ++m)
        report.simple_upto_m = m;
    report.is_dual_2neighborly = is_dual_2neighborly(fstruct, fs);
    return report;
}

} // namespace polyneigh
