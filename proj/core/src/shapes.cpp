#include "touchloc/shapes.hpp"

#include <cmath>
#include <map>

namespace touchloc {

namespace {

void add_box(TriangleMesh& mesh, const Eigen::Vector3d& lo,
             const Eigen::Vector3d& hi) {
  const std::int32_t base = std::int32_t(mesh.vertices.size());
  for (int i = 0; i < 8; ++i) {
    mesh.vertices.emplace_back(i & 1 ? hi.x() : lo.x(),
                               i & 2 ? hi.y() : lo.y(),
                               i & 4 ? hi.z() : lo.z());
  }
  // 12 triangles, outward CCW.
  static const std::int32_t f[12][3] = {
      {0, 2, 1}, {1, 2, 3},  // z = lo
      {4, 5, 6}, {5, 7, 6},  // z = hi
      {0, 1, 4}, {1, 5, 4},  // y = lo
      {2, 6, 3}, {3, 6, 7},  // y = hi
      {0, 4, 2}, {2, 4, 6},  // x = lo
      {1, 3, 5}, {3, 7, 5},  // x = hi
  };
  for (const auto& tri : f)
    mesh.triangles.push_back({base + tri[0], base + tri[1], base + tri[2]});
}

}  // namespace

TriangleMesh make_box(const Eigen::Vector3d& size,
                      const Eigen::Vector3d& center) {
  TriangleMesh mesh;
  add_box(mesh, center - size / 2.0, center + size / 2.0);
  return mesh;
}

TriangleMesh make_icosphere(double radius, int subdivisions,
                            const Eigen::Vector3d& center) {
  TriangleMesh mesh;
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  const double s = 1.0 / std::sqrt(1.0 + t * t);
  auto add = [&](double x, double y, double z) {
    mesh.vertices.emplace_back(Eigen::Vector3d(x, y, z) * s);
  };
  add(-1, t, 0); add(1, t, 0); add(-1, -t, 0); add(1, -t, 0);
  add(0, -1, t); add(0, 1, t); add(0, -1, -t); add(0, 1, -t);
  add(t, 0, -1); add(t, 0, 1); add(-t, 0, -1); add(-t, 0, 1);
  mesh.triangles = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  for (int level = 0; level < subdivisions; ++level) {
    std::map<std::pair<std::int32_t, std::int32_t>, std::int32_t> midpoints;
    auto midpoint = [&](std::int32_t a, std::int32_t b) {
      const auto key = std::minmax(a, b);
      auto it = midpoints.find(key);
      if (it != midpoints.end()) return it->second;
      const Eigen::Vector3d m =
          (mesh.vertices[std::size_t(a)] + mesh.vertices[std::size_t(b)])
              .normalized();
      const std::int32_t idx = std::int32_t(mesh.vertices.size());
      mesh.vertices.push_back(m);
      midpoints.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<std::int32_t, 3>> next;
    next.reserve(mesh.triangles.size() * 4);
    for (const auto& tri : mesh.triangles) {
      const std::int32_t ab = midpoint(tri[0], tri[1]);
      const std::int32_t bc = midpoint(tri[1], tri[2]);
      const std::int32_t ca = midpoint(tri[2], tri[0]);
      next.push_back({tri[0], ab, ca});
      next.push_back({tri[1], bc, ab});
      next.push_back({tri[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    mesh.triangles = std::move(next);
  }

  for (auto& v : mesh.vertices) v = v * radius + center;
  return mesh;
}

TriangleMesh make_ellipsoid(const Eigen::Vector3d& semi_axes, int subdivisions,
                            const Eigen::Vector3d& center) {
  TriangleMesh mesh = make_icosphere(1.0, subdivisions);
  for (auto& v : mesh.vertices) v = v.cwiseProduct(semi_axes) + center;
  return mesh;
}

TriangleMesh make_plate(double size_x, double size_y, double thickness,
                        const Eigen::Vector3d& center) {
  return make_box({size_x, size_y, thickness}, center);
}

TriangleMesh make_pin(double a, double b, double c, int subdivisions) {
  TriangleMesh mesh = make_icosphere(1.0, subdivisions);
  for (auto& v : mesh.vertices) {
    const Eigen::Vector3d u = v;  // unit sphere point
    // Taper toward -z breaks the z-flip symmetries, the lateral bump breaks
    // the remaining 180-degree turn about z.
    const double taper = 1.0 + 0.25 * u.z();
    const double bump =
        1.0 + 0.18 * std::exp(-8.0 * ((u - Eigen::Vector3d(1, 0, 0)).squaredNorm()));
    Eigen::Vector3d p(u.x() * a * taper * bump, u.y() * b * taper,
                      u.z() * c);
    v = p;
  }
  return mesh;
}

TriangleMesh make_domino(const DominoDims& d) {
  TriangleMesh mesh;
  add_box(mesh, {-d.plate_x / 2, -d.plate_y / 2, 0.0},
          {d.plate_x / 2, d.plate_y / 2, d.plate_z});
  add_box(mesh, {d.fin_x0, -d.fin_y / 2, d.plate_z},
          {d.fin_x1, d.fin_y / 2, d.fin_top});
  return mesh;
}

}  // namespace touchloc
