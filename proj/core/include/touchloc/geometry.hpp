#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "touchloc/rng.hpp"

namespace touchloc {

// Rigid transform: p -> rotation * p + translation. Units are millimeters
// throughout the project; there is no unit autodetection.
struct Pose {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static Pose identity() { return {}; }

  // Builds a pose from a (w, x, y, z) quaternion; the quaternion is
  // normalized on ingestion. Throws GeometryError for near-zero norm.
  static Pose from_quaternion(double qw, double qx, double qy, double qz,
                              const Eigen::Vector3d& translation =
                                  Eigen::Vector3d::Zero());

  // Returns (w, x, y, z) with w >= 0.
  Eigen::Vector4d to_quaternion() const;
};

Pose compose(const Pose& a, const Pose& b);  // (a ∘ b)(p) = a(b(p))
Pose invert(const Pose& p);

Eigen::Vector3d apply(const Pose& p, const Eigen::Vector3d& point);

// Rotation about a (not necessarily unit) axis by angle in radians.
Eigen::Matrix3d axis_angle_rotation(const Eigen::Vector3d& axis,
                                    double angle_rad);

// Minimal rotation taking unit vector `from` onto unit vector `to`.
Eigen::Matrix3d align_rotation(const Eigen::Vector3d& from,
                               const Eigen::Vector3d& to);

// Re-orthonormalizes via Gram-Schmidt; used when |det - 1| drifts past 1e-9.
Eigen::Matrix3d orthonormalized(const Eigen::Matrix3d& m);

bool is_rotation(const Eigen::Matrix3d& m, double tol = 1e-9);

struct PointCloud {
  Eigen::Matrix3Xd points;  // columns are points, mm

  PointCloud() : points(3, 0) {}
  explicit PointCloud(Eigen::Matrix3Xd p) : points(std::move(p)) {}

  Eigen::Index size() const { return points.cols(); }
  Eigen::Vector3d operator[](Eigen::Index i) const { return points.col(i); }
};

PointCloud apply(const Pose& p, const PointCloud& cloud);

struct TriangleMesh {
  std::vector<Eigen::Vector3d> vertices;              // mm
  std::vector<std::array<std::int32_t, 3>> triangles;  // CCW indices
  int dropped_degenerates = 0;  // slivers removed at load time

  std::size_t vertex_count() const { return vertices.size(); }
  std::size_t triangle_count() const { return triangles.size(); }

  double triangle_area(std::size_t t) const;
  double surface_area() const;
  Eigen::Vector3d bounding_radius_center() const;
  double bounding_radius() const;  // max vertex distance from centroid
};

// Validates indices and removes triangles with area <= 1e-12 mm^2 (counted in
// dropped_degenerates, logged as a warning). Throws GeometryError for
// out-of-range indices or an empty result.
void sanitize_mesh(TriangleMesh& mesh, const std::string& origin);

// Area-uniform surface sampling: triangle chosen proportionally to area,
// uniform barycentric point within. Deterministic for a fixed seed.
PointCloud sample_surface(const TriangleMesh& mesh, std::size_t n,
                          std::uint64_t seed);

// XYZ text export: one "x y z" line per point, mm, 9 significant digits.
std::string to_xyz(const PointCloud& cloud);
void write_xyz(const PointCloud& cloud, const std::filesystem::path& path);

// Uniform direction within the spherical cap of half-angle `angle_rad`
// around `axis` (the full sphere for angle_rad >= pi).
Eigen::Vector3d sample_cap_direction(Rng& rng, const Eigen::Vector3d& axis,
                                     double angle_rad);

// Fibonacci lattice of `n` near-uniform directions on the spherical cap of
// half-angle `angle_rad` around `axis`. angle_rad >= pi gives the full
// sphere.
std::vector<Eigen::Vector3d> fibonacci_cap(const Eigen::Vector3d& axis,
                                           double angle_rad, int n);

}  // namespace touchloc
