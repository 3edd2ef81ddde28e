#pragma once

#include <filesystem>

#include "touchloc/geometry.hpp"

namespace touchloc {

enum class MeshFormat { Auto, Obj, Stl, Off };

// Loads a triangle mesh (units mm). OBJ uses v/f records only; STL may be
// binary or ASCII (vertices deduplicated exactly); OFF is the plain variant.
// Degenerate triangles are dropped with a counted warning. Parse failures
// throw IoError with a line (text) or byte (binary) offset; an empty result
// throws GeometryError.
TriangleMesh load_mesh(const std::filesystem::path& path,
                       MeshFormat format = MeshFormat::Auto);

void write_obj(const TriangleMesh& mesh, const std::filesystem::path& path);
void write_stl_binary(const TriangleMesh& mesh,
                      const std::filesystem::path& path);
void write_off(const TriangleMesh& mesh, const std::filesystem::path& path);

}  // namespace touchloc
