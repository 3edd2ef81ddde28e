#include "touchloc/mesh_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstring>
#include <sstream>
#include <unordered_map>

#include "touchloc/errors.hpp"
#include "touchloc/io_util.hpp"

namespace touchloc {

namespace {

std::string lower_ext(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return char(std::tolower(c)); });
  return ext;
}

[[noreturn]] void parse_fail(const std::filesystem::path& path,
                             std::size_t line, const std::string& what) {
  throw IoError(path.string() + ":" + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& tok, const std::filesystem::path& path,
                    std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    parse_fail(path, line, "bad number '" + tok + "'");
  }
}

long parse_long(const std::string& tok, const std::filesystem::path& path,
                std::size_t line) {
  try {
    std::size_t used = 0;
    const long v = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    parse_fail(path, line, "bad index '" + tok + "'");
  }
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

TriangleMesh load_obj(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  TriangleMesh mesh;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks[0] == "v") {
      if (toks.size() < 4) parse_fail(path, lineno, "vertex needs 3 coords");
      mesh.vertices.emplace_back(parse_double(toks[1], path, lineno),
                                 parse_double(toks[2], path, lineno),
                                 parse_double(toks[3], path, lineno));
    } else if (toks[0] == "f") {
      if (toks.size() < 4) parse_fail(path, lineno, "face needs >= 3 indices");
      std::vector<std::int32_t> idx;
      for (std::size_t k = 1; k < toks.size(); ++k) {
        // "i", "i/t", "i/t/n", "i//n": the vertex index is before the slash.
        std::string head = toks[k].substr(0, toks[k].find('/'));
        long v = parse_long(head, path, lineno);
        if (v < 0) v += long(mesh.vertices.size()) + 1;  // relative index
        if (v < 1 || v > long(mesh.vertices.size()))
          parse_fail(path, lineno, "face index out of range");
        idx.push_back(std::int32_t(v - 1));
      }
      for (std::size_t k = 2; k < idx.size(); ++k)
        mesh.triangles.push_back({idx[0], idx[k - 1], idx[k]});
    }
    // Other records (vn, vt, o, g, s, usemtl, mtllib) are ignored.
  }
  return mesh;
}

TriangleMesh load_off(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto next_content_line = [&]() -> std::vector<std::string> {
    while (std::getline(in, line)) {
      ++lineno;
      const auto toks = split_ws(line);
      if (toks.empty() || toks[0][0] == '#') continue;
      return toks;
    }
    parse_fail(path, lineno, "unexpected end of OFF file");
  };

  auto header = next_content_line();
  if (header[0] != "OFF") parse_fail(path, lineno, "missing OFF header");
  std::vector<std::string> counts =
      header.size() >= 4 ? std::vector<std::string>(header.begin() + 1,
                                                    header.end())
                         : next_content_line();
  if (counts.size() < 2) parse_fail(path, lineno, "bad OFF counts");
  const long nv = parse_long(counts[0], path, lineno);
  const long nf = parse_long(counts[1], path, lineno);
  if (nv < 0 || nf < 0) parse_fail(path, lineno, "negative OFF counts");

  TriangleMesh mesh;
  mesh.vertices.reserve(std::size_t(nv));
  for (long i = 0; i < nv; ++i) {
    const auto toks = next_content_line();
    if (toks.size() < 3) parse_fail(path, lineno, "vertex needs 3 coords");
    mesh.vertices.emplace_back(parse_double(toks[0], path, lineno),
                               parse_double(toks[1], path, lineno),
                               parse_double(toks[2], path, lineno));
  }
  for (long i = 0; i < nf; ++i) {
    const auto toks = next_content_line();
    const long k = parse_long(toks[0], path, lineno);
    if (k < 3 || std::size_t(k) + 1 > toks.size())
      parse_fail(path, lineno, "bad face record");
    std::vector<std::int32_t> idx;
    for (long j = 0; j < k; ++j) {
      const long v = parse_long(toks[std::size_t(j) + 1], path, lineno);
      if (v < 0 || v >= nv) parse_fail(path, lineno, "face index out of range");
      idx.push_back(std::int32_t(v));
    }
    for (std::size_t j = 2; j < idx.size(); ++j)
      mesh.triangles.push_back({idx[0], idx[j - 1], idx[j]});
  }
  return mesh;
}

struct VertexKey {
  float x, y, z;
  bool operator==(const VertexKey&) const = default;
};
struct VertexKeyHash {
  std::size_t operator()(const VertexKey& k) const {
    return std::size_t(fnv1a(&k, sizeof(k)));
  }
};

class VertexDedup {
 public:
  explicit VertexDedup(TriangleMesh& mesh) : mesh_(mesh) {}

  std::int32_t add(float x, float y, float z) {
    const VertexKey key{x, y, z};
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    const std::int32_t idx = std::int32_t(mesh_.vertices.size());
    mesh_.vertices.emplace_back(double(x), double(y), double(z));
    index_.emplace(key, idx);
    return idx;
  }

 private:
  TriangleMesh& mesh_;
  std::unordered_map<VertexKey, std::int32_t, VertexKeyHash> index_;
};

TriangleMesh load_stl_ascii(const std::filesystem::path& path,
                            const std::string& text) {
  TriangleMesh mesh;
  VertexDedup dedup(mesh);
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::int32_t> facet;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "vertex") {
      if (toks.size() < 4) parse_fail(path, lineno, "vertex needs 3 coords");
      facet.push_back(dedup.add(float(parse_double(toks[1], path, lineno)),
                                float(parse_double(toks[2], path, lineno)),
                                float(parse_double(toks[3], path, lineno))));
    } else if (toks[0] == "endfacet") {
      if (facet.size() != 3)
        parse_fail(path, lineno, "facet does not have exactly 3 vertices");
      mesh.triangles.push_back({facet[0], facet[1], facet[2]});
      facet.clear();
    }
  }
  if (!facet.empty()) parse_fail(path, lineno, "unterminated facet");
  return mesh;
}

TriangleMesh load_stl_binary(const std::filesystem::path& path,
                             const std::vector<std::uint8_t>& data) {
  if (data.size() < 84)
    throw IoError(path.string() + ": byte 0: binary STL shorter than header");
  std::uint32_t count = 0;
  std::memcpy(&count, data.data() + 80, 4);
  const std::size_t expected = 84 + std::size_t(count) * 50;
  if (data.size() < expected)
    throw IoError(path.string() + ": byte " + std::to_string(data.size()) +
                  ": binary STL truncated (expected " +
                  std::to_string(expected) + " bytes)");
  TriangleMesh mesh;
  VertexDedup dedup(mesh);
  for (std::uint32_t t = 0; t < count; ++t) {
    const std::uint8_t* rec = data.data() + 84 + std::size_t(t) * 50;
    float coords[9];
    std::memcpy(coords, rec + 12, 36);  // skip the normal
    std::array<std::int32_t, 3> tri{};
    for (int k = 0; k < 3; ++k)
      tri[std::size_t(k)] =
          dedup.add(coords[3 * k], coords[3 * k + 1], coords[3 * k + 2]);
    mesh.triangles.push_back(tri);
  }
  return mesh;
}

TriangleMesh load_stl(const std::filesystem::path& path) {
  const auto data = read_file(path);
  const std::string head(data.begin(),
                         data.begin() + std::min<std::size_t>(data.size(), 512));
  const bool ascii = head.rfind("solid", 0) == 0 &&
                     head.find("facet") != std::string::npos;
  if (ascii)
    return load_stl_ascii(path, std::string(data.begin(), data.end()));
  return load_stl_binary(path, data);
}

}  // namespace

TriangleMesh load_mesh(const std::filesystem::path& path, MeshFormat format) {
  if (format == MeshFormat::Auto) {
    const std::string ext = lower_ext(path);
    if (ext == ".obj") format = MeshFormat::Obj;
    else if (ext == ".stl") format = MeshFormat::Stl;
    else if (ext == ".off") format = MeshFormat::Off;
    else throw IoError("cannot infer mesh format from '" + path.string() + "'");
  }
  TriangleMesh mesh;
  switch (format) {
    case MeshFormat::Obj: mesh = load_obj(path); break;
    case MeshFormat::Stl: mesh = load_stl(path); break;
    case MeshFormat::Off: mesh = load_off(path); break;
    case MeshFormat::Auto: break;
  }
  if (mesh.vertices.empty() || mesh.triangles.empty())
    throw GeometryError(path.string() + ": empty mesh");
  sanitize_mesh(mesh, path.string());
  return mesh;
}

void write_obj(const TriangleMesh& mesh, const std::filesystem::path& path) {
  std::string out;
  out.reserve(mesh.vertices.size() * 40 + mesh.triangles.size() * 20);
  for (const auto& v : mesh.vertices)
    out += strfmt("v %.9g %.9g %.9g\n", v.x(), v.y(), v.z());
  for (const auto& t : mesh.triangles)
    out += strfmt("f %d %d %d\n", t[0] + 1, t[1] + 1, t[2] + 1);
  write_file_atomic(path, out);
}

void write_stl_binary(const TriangleMesh& mesh,
                      const std::filesystem::path& path) {
  std::vector<std::uint8_t> out;
  out.resize(80, 0);
  put_u32(out, std::uint32_t(mesh.triangles.size()));
  for (const auto& t : mesh.triangles) {
    const Eigen::Vector3d& a = mesh.vertices[std::size_t(t[0])];
    const Eigen::Vector3d& b = mesh.vertices[std::size_t(t[1])];
    const Eigen::Vector3d& c = mesh.vertices[std::size_t(t[2])];
    Eigen::Vector3d n = (b - a).cross(c - a);
    const double len = n.norm();
    if (len > 0) n /= len;
    for (const auto* v : {&n, &a, &b, &c})
      for (int k = 0; k < 3; ++k) put_f32(out, float((*v)(k)));
    out.push_back(0);
    out.push_back(0);
  }
  write_file_atomic(path, out.data(), out.size());
}

void write_off(const TriangleMesh& mesh, const std::filesystem::path& path) {
  std::string out = "OFF\n";
  out += strfmt("%zu %zu 0\n", mesh.vertices.size(), mesh.triangles.size());
  for (const auto& v : mesh.vertices)
    out += strfmt("%.9g %.9g %.9g\n", v.x(), v.y(), v.z());
  for (const auto& t : mesh.triangles)
    out += strfmt("3 %d %d %d\n", t[0], t[1], t[2]);
  write_file_atomic(path, out);
}

}  // namespace touchloc
