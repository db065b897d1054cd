#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "polyneigh/classify.hpp"
#include "polyneigh/errors.hpp"
#include "polyneigh/faces.hpp"
#include "polyneigh/hull.hpp"
#include "polyneigh/polytope.hpp"

namespace polyneigh {

using nlohmann::json;

// All arbitrary-precision values travel as strings; JSON numbers are used
// only where values are plain counts. Key order (alphabetical) and the
// 2-space indentation below are part of the byte-stable output contract.

inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

inline json polytope_to_json(const Polytope& p) {
    json j;
    j["ambient_dim"] = p.ambient_dim;
    if (p.label)
        j["label"] = *p.label;
    json rows = json::array();
    for (const auto& v : p.vertices) {
        json row = json::array();
        for (const auto& x : v)
            row.push_back(to_string(x));
        rows.push_back(std::move(row));
    }
    j["vertices"] = std::move(rows);
    return j;
}

inline Polytope polytope_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("vertices") ||
        !j["ambient_dim"].is_number_integer() || !j["vertices"].is_array())
        raise(ErrorKind::parse_error, "polytope JSON needs ambient_dim and vertices");
    std::optional<std::string> label;
    if (j.contains("label")) {
        if (!j["label"].is_string())
            raise(ErrorKind::parse_error, "polytope label must be a string");
        label = j["label"].get<std::string>();
    }
    std::vector<Point> vertices;
    for (const auto& row : j["vertices"]) {
        if (!row.is_array())
            raise(ErrorKind::parse_error, "vertex rows must be arrays of rational strings");
        Point p;
        p.reserve(row.size());
        for (const auto& x : row) {
            if (!x.is_string())
                raise(ErrorKind::parse_error, "coordinates must be rational strings");
            p.push_back(parse_rational(x.get<std::string>()));
        }
        vertices.push_back(std::move(p));
    }
    return make_polytope(j["ambient_dim"].get<int>(), std::move(vertices), std::move(label));
}

inline json facetset_to_json(const FacetSet& fs) {
    json facets = json::array();
    for (const auto& facet : fs.facets) {
        json f;
        json normal = json::array();
        for (const auto& c : facet.plane.normal)
            normal.push_back(to_string(c));
        f["normal"] = std::move(normal);
        f["offset"] = to_string(facet.plane.offset);
        f["vertices"] = facet.vertex_indices;
        facets.push_back(std::move(f));
    }
    return json{{"facets", std::move(facets)}};
}

inline FacetSet facetset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        raise(ErrorKind::parse_error, "facet set JSON needs a facets array");
    FacetSet fs;
    int max_index = -1;
    for (const auto& f : j["facets"]) {
        if (!f.is_object() || !f.contains("normal") || !f.contains("offset") ||
            !f.contains("vertices"))
            raise(ErrorKind::parse_error, "facet entries need normal, offset and vertices");
        Facet facet;
        for (const auto& c : f["normal"]) {
            if (!c.is_string())
                raise(ErrorKind::parse_error, "facet normals must be integer strings");
            facet.plane.normal.push_back(parse_integer(c.get<std::string>()));
        }
        if (!f["offset"].is_string())
            raise(ErrorKind::parse_error, "facet offset must be an integer string");
        facet.plane.offset = parse_integer(f["offset"].get<std::string>());
        for (const auto& v : f["vertices"]) {
            if (!v.is_number_integer())
                raise(ErrorKind::parse_error, "facet vertices must be integers");
            facet.vertex_indices.push_back(v.get<int>());
            max_index = std::max(max_index, facet.vertex_indices.back());
        }
        if (!std::is_sorted(facet.vertex_indices.begin(), facet.vertex_indices.end()))
            raise(ErrorKind::parse_error, "facet vertex indices must be sorted");
        fs.ambient_dim = static_cast<int>(facet.plane.normal.size());
        fs.facets.push_back(std::move(facet));
    }
    fs.n_vertices = max_index + 1;
    return fs;
}

inline json facestructure_to_json(const FaceStructure& fstruct) {
    json faces = json::object();
    for (int jdim = 0; jdim < fstruct.dim; ++jdim)
        faces[std::to_string(jdim)] = fstruct.by_dim[static_cast<std::size_t>(jdim)];
    return json{{"dim", fstruct.dim}, {"f_vector", fstruct.f_vector}, {"faces", std::move(faces)}};
}

inline json classification_to_json(const ClassificationReport& report) {
    return json{{"max_neighborly_k", report.max_neighborly_k},
                {"simplicial_upto_m", report.simplicial_upto_m},
                {"simple_upto_m", report.simple_upto_m},
                {"is_dual_2neighborly", report.is_dual_2neighborly}};
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(ErrorKind::parse_error, "cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        raise(ErrorKind::parse_error, "invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        raise(ErrorKind::parse_error, "cannot open file for writing: " + path);
    out << text;
}

} // namespace polyneigh
