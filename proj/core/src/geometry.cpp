#include "touchloc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "touchloc/errors.hpp"
#include "touchloc/io_util.hpp"
#include "touchloc/log.hpp"

namespace touchloc {

Pose Pose::from_quaternion(double qw, double qx, double qy, double qz,
                           const Eigen::Vector3d& translation) {
  const double norm = std::sqrt(qw * qw + qx * qx + qy * qy + qz * qz);
  if (norm < 1e-9)
    throw GeometryError("degenerate quaternion (norm < 1e-9)");
  const double w = qw / norm, x = qx / norm, y = qy / norm, z = qz / norm;
  Pose p;
  p.rotation << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z),
      2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  p.translation = translation;
  return p;
}

Eigen::Vector4d Pose::to_quaternion() const {
  const Eigen::Matrix3d& m = rotation;
  const double trace = m(0, 0) + m(1, 1) + m(2, 2);
  double w, x, y, z;
  if (trace > 0.0) {
    double s = std::sqrt(trace + 1.0) * 2.0;
    w = 0.25 * s;
    x = (m(2, 1) - m(1, 2)) / s;
    y = (m(0, 2) - m(2, 0)) / s;
    z = (m(1, 0) - m(0, 1)) / s;
  } else if (m(0, 0) > m(1, 1) && m(0, 0) > m(2, 2)) {
    double s = std::sqrt(1.0 + m(0, 0) - m(1, 1) - m(2, 2)) * 2.0;
    w = (m(2, 1) - m(1, 2)) / s;
    x = 0.25 * s;
    y = (m(0, 1) + m(1, 0)) / s;
    z = (m(0, 2) + m(2, 0)) / s;
  } else if (m(1, 1) > m(2, 2)) {
    double s = std::sqrt(1.0 + m(1, 1) - m(0, 0) - m(2, 2)) * 2.0;
    w = (m(0, 2) - m(2, 0)) / s;
    x = (m(0, 1) + m(1, 0)) / s;
    y = 0.25 * s;
    z = (m(1, 2) + m(2, 1)) / s;
  } else {
    double s = std::sqrt(1.0 + m(2, 2) - m(0, 0) - m(1, 1)) * 2.0;
    w = (m(1, 0) - m(0, 1)) / s;
    x = (m(0, 2) + m(2, 0)) / s;
    y = (m(1, 2) + m(2, 1)) / s;
    z = 0.25 * s;
  }
  Eigen::Vector4d q(w, x, y, z);
  q.normalize();
  if (q(0) < 0.0) q = -q;
  return q;
}

Eigen::Matrix3d orthonormalized(const Eigen::Matrix3d& m) {
  Eigen::Matrix3d r;
  r.col(0) = m.col(0).normalized();
  r.col(1) = (m.col(1) - r.col(0) * r.col(0).dot(m.col(1))).normalized();
  r.col(2) = r.col(0).cross(r.col(1));
  return r;
}

bool is_rotation(const Eigen::Matrix3d& m, double tol) {
  return (m.transpose() * m - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <=
             tol * 10 &&
         std::abs(m.determinant() - 1.0) <= tol * 10;
}

Pose compose(const Pose& a, const Pose& b) {
  Pose out;
  out.rotation = a.rotation * b.rotation;
  out.translation = a.rotation * b.translation + a.translation;
  // Long composition chains drift; re-orthonormalize when det leaves 1e-9.
  if (std::abs(out.rotation.determinant() - 1.0) > 1e-9)
    out.rotation = orthonormalized(out.rotation);
  return out;
}

Pose invert(const Pose& p) {
  Pose out;
  out.rotation = p.rotation.transpose();
  out.translation = -(out.rotation * p.translation);
  return out;
}

Eigen::Vector3d apply(const Pose& p, const Eigen::Vector3d& point) {
  return p.rotation * point + p.translation;
}

PointCloud apply(const Pose& p, const PointCloud& cloud) {
  PointCloud out;
  out.points = (p.rotation * cloud.points).colwise() + p.translation;
  return out;
}

Eigen::Matrix3d axis_angle_rotation(const Eigen::Vector3d& axis,
                                    double angle_rad) {
  const double n = axis.norm();
  if (n < 1e-15) return Eigen::Matrix3d::Identity();
  const Eigen::Vector3d u = axis / n;
  const double c = std::cos(angle_rad), s = std::sin(angle_rad);
  Eigen::Matrix3d k;
  k << 0, -u.z(), u.y(), u.z(), 0, -u.x(), -u.y(), u.x(), 0;
  return Eigen::Matrix3d::Identity() * c + s * k +
         (1.0 - c) * (u * u.transpose());
}

Eigen::Matrix3d align_rotation(const Eigen::Vector3d& from,
                               const Eigen::Vector3d& to) {
  const double dot = std::clamp(from.dot(to), -1.0, 1.0);
  if (dot > 1.0 - 1e-12) return Eigen::Matrix3d::Identity();
  if (dot < -1.0 + 1e-12) {
    // Antipodal: rotate pi about any axis orthogonal to `from`.
    Eigen::Vector3d ortho = from.cross(Eigen::Vector3d::UnitX());
    if (ortho.squaredNorm() < 1e-12)
      ortho = from.cross(Eigen::Vector3d::UnitY());
    return axis_angle_rotation(ortho, M_PI);
  }
  return axis_angle_rotation(from.cross(to), std::acos(dot));
}

double TriangleMesh::triangle_area(std::size_t t) const {
  const auto& tri = triangles[t];
  const Eigen::Vector3d& a = vertices[std::size_t(tri[0])];
  const Eigen::Vector3d& b = vertices[std::size_t(tri[1])];
  const Eigen::Vector3d& c = vertices[std::size_t(tri[2])];
  return 0.5 * (b - a).cross(c - a).norm();
}

double TriangleMesh::surface_area() const {
  double sum = 0.0;
  for (std::size_t t = 0; t < triangles.size(); ++t) sum += triangle_area(t);
  return sum;
}

Eigen::Vector3d TriangleMesh::bounding_radius_center() const {
  Eigen::Vector3d c = Eigen::Vector3d::Zero();
  for (const auto& v : vertices) c += v;
  if (!vertices.empty()) c /= double(vertices.size());
  return c;
}

double TriangleMesh::bounding_radius() const {
  const Eigen::Vector3d c = bounding_radius_center();
  double r = 0.0;
  for (const auto& v : vertices) r = std::max(r, (v - c).norm());
  return r;
}

void sanitize_mesh(TriangleMesh& mesh, const std::string& origin) {
  const std::int64_t nv = std::int64_t(mesh.vertices.size());
  std::vector<std::array<std::int32_t, 3>> kept;
  kept.reserve(mesh.triangles.size());
  int dropped = 0;
  for (const auto& tri : mesh.triangles) {
    for (int k = 0; k < 3; ++k) {
      if (tri[k] < 0 || tri[k] >= nv)
        throw GeometryError(origin + ": triangle index " +
                            std::to_string(tri[k]) + " out of range");
    }
    const Eigen::Vector3d& a = mesh.vertices[std::size_t(tri[0])];
    const Eigen::Vector3d& b = mesh.vertices[std::size_t(tri[1])];
    const Eigen::Vector3d& c = mesh.vertices[std::size_t(tri[2])];
    const double area = 0.5 * (b - a).cross(c - a).norm();
    if (area <= 1e-12) {
      ++dropped;
      continue;
    }
    kept.push_back(tri);
  }
  mesh.triangles = std::move(kept);
  mesh.dropped_degenerates += dropped;
  if (dropped > 0)
    log_warn(origin, ": dropped ", dropped, " degenerate triangle(s)");
  if (mesh.vertices.empty() || mesh.triangles.empty())
    throw GeometryError(origin + ": mesh has no usable triangles");
}

PointCloud sample_surface(const TriangleMesh& mesh, std::size_t n,
                          std::uint64_t seed) {
  if (mesh.triangles.empty()) throw GeometryError("sample_surface: empty mesh");
  if (n == 0) throw GeometryError("sample_surface: n must be >= 1");

  std::vector<double> cumulative(mesh.triangles.size());
  double total = 0.0;
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    total += mesh.triangle_area(t);
    cumulative[t] = total;
  }
  if (total <= 0.0) throw GeometryError("sample_surface: zero surface area");

  Rng rng(derive_seed(seed, 0x5a3917e5ULL));
  Eigen::Matrix3Xd points(3, Eigen::Index(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double pick = rng.uniform() * total;
    const auto it =
        std::lower_bound(cumulative.begin(), cumulative.end(), pick);
    const std::size_t t = std::min<std::size_t>(
        std::size_t(it - cumulative.begin()), mesh.triangles.size() - 1);
    const auto& tri = mesh.triangles[t];
    const Eigen::Vector3d& a = mesh.vertices[std::size_t(tri[0])];
    const Eigen::Vector3d& b = mesh.vertices[std::size_t(tri[1])];
    const Eigen::Vector3d& c = mesh.vertices[std::size_t(tri[2])];
    const double r1 = std::sqrt(rng.uniform());
    const double r2 = rng.uniform();
    points.col(Eigen::Index(i)) =
        (1.0 - r1) * a + r1 * (1.0 - r2) * b + r1 * r2 * c;
  }
  return PointCloud(std::move(points));
}

std::string to_xyz(const PointCloud& cloud) {
  std::string out;
  out.reserve(std::size_t(cloud.size()) * 48);
  for (Eigen::Index i = 0; i < cloud.size(); ++i) {
    out += strfmt("%.9g %.9g %.9g\n", cloud.points(0, i), cloud.points(1, i),
                  cloud.points(2, i));
  }
  return out;
}

void write_xyz(const PointCloud& cloud, const std::filesystem::path& path) {
  write_file_atomic(path, to_xyz(cloud));
}

Eigen::Vector3d sample_cap_direction(Rng& rng, const Eigen::Vector3d& axis,
                                     double angle_rad) {
  const double cos_min = std::cos(std::min(angle_rad, M_PI));
  const double z = rng.uniform(cos_min, 1.0);
  const double a = rng.uniform(0.0, 2.0 * M_PI);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const Eigen::Vector3d local(r * std::cos(a), r * std::sin(a), z);
  return align_rotation(Eigen::Vector3d::UnitZ(), axis.normalized()) * local;
}

std::vector<Eigen::Vector3d> fibonacci_cap(const Eigen::Vector3d& axis,
                                           double angle_rad, int n) {
  // Golden-angle spiral with z uniform over the cap: near-uniform area
  // coverage for both the full sphere and restricted caps.
  std::vector<Eigen::Vector3d> dirs;
  dirs.reserve(std::size_t(std::max(0, n)));
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  const double cos_min = std::cos(std::min(angle_rad, M_PI));
  const Eigen::Matrix3d basis =
      align_rotation(Eigen::Vector3d::UnitZ(), axis.normalized());
  for (int i = 0; i < n; ++i) {
    const double f = n > 1 ? (double(i) + 0.5) / double(n) : 0.5;
    const double z = 1.0 - f * (1.0 - cos_min);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double theta = golden * double(i);
    dirs.push_back(basis * Eigen::Vector3d(r * std::cos(theta),
                                           r * std::sin(theta), z));
  }
  return dirs;
}

}  // namespace touchloc
