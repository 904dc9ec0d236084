#pragma once

#include "meshcal/geometry.hpp"

#include <array>
#include <filesystem>
#include <string>
#include <vector>

namespace meshcal {

struct Mesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces; // 0-based vertex indices
    std::string body_model;                // tag matched against weight artifacts

    int vertex_count() const { return static_cast<int>(vertices.size()); }
};

// Empty iff all vertices finite and all face indices in [0, N).
std::vector<std::string> validate(const Mesh& mesh);

// Wavefront OBJ, v/f lines only. The loader accepts "f a/b/c ..." forms and
// takes the vertex index; the writer emits plain "v x y z" / "f i j k" with
// round-trip double formatting. Throws ParseError / SchemaError / IoError.
Mesh load_obj(const std::filesystem::path& path);
void save_obj(const Mesh& mesh, const std::filesystem::path& path);

} // namespace meshcal
