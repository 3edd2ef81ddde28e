#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "touchloc/geometry.hpp"

namespace touchloc {

struct MaskImage {
  int width = 0, height = 0;
  std::vector<std::uint8_t> on;  // row-major, 1 = active

  bool at(int u, int v) const {
    return on[std::size_t(v) * std::size_t(width) + std::size_t(u)] != 0;
  }
  std::size_t count() const;
};

// Virtual pinhole tactile sensor. The camera sits at the origin looking +z;
// the sensing surface is the rectangle |x| <= extent_x, |y| <= extent_y on
// the plane z = d. Objects at depth within [d, d + delta_d] are in contact.
struct SensorModel {
  double fx = 291.5, fy = 289.0;  // focal lengths, px
  double cx = 235.0, cy = 235.0;  // principal point, px
  int width = 470, height = 470;  // resolution, px
  double d = 25.0;                // camera-to-sensor-plane distance, mm
  double delta_d = 2.0;           // contact depth threshold, mm
  double extent_x = 0.0, extent_y = 0.0;  // half-widths at z = d, mm
  std::optional<MaskImage> region_mask;   // optional active-region mask

  // The default values above reproduce the reference sensor; extents default
  // to the view frustum footprint at z = d.
  static SensorModel paper_default();

  // Same physical sensor sampled at a different resolution. Intrinsics are
  // rescaled with the pixel-as-point convention:
  //   fx' = fx / s,  cx' = (cx + 0.5) / s - 0.5,  s = width / new_width.
  SensorModel rescaled(int new_width, int new_height) const;

  // Ray through pixel (u, v): direction ((u-cx)/fx, (v-cy)/fy, 1), so the
  // ray parameter equals the z-coordinate.
  Eigen::Vector3d pixel_ray(double u, double v) const {
    return {(u - cx) / fx, (v - cy) / fy, 1.0};
  }

  // Projects a 3D point (z > 0) to continuous pixel coordinates.
  Eigen::Vector2d project(const Eigen::Vector3d& p) const {
    return {fx * p.x() / p.z() + cx, fy * p.y() / p.z() + cy};
  }

  bool in_window(double x, double y) const {
    return std::abs(x) <= extent_x && std::abs(y) <= extent_y;
  }

  void validate() const;  // throws ConfigError on bad parameters
};

struct DepthImage {
  static constexpr double kNoHit = std::numeric_limits<double>::infinity();

  int width = 0, height = 0;
  std::vector<double> depth;  // z of nearest hit, mm; kNoHit if miss

  double at(int u, int v) const {
    return depth[std::size_t(v) * std::size_t(width) + std::size_t(u)];
  }
  double min_finite() const;
};

// Clamped penetration image. value = min(depth - d, delta_d) in [0, delta_d];
// pixels that miss or lie beyond d + delta_d carry delta_d (no contact).
struct ContactShape {
  int width = 0, height = 0;
  double delta_d = 2.0;
  std::vector<float> values;  // row-major, mm

  float at(int u, int v) const {
    return values[std::size_t(v) * std::size_t(width) + std::size_t(u)];
  }
  bool is_contact(std::size_t i) const {
    return values[i] < float(delta_d);
  }
  std::size_t contact_count() const;

  static ContactShape no_contact(int width, int height, double delta_d);
};

MaskImage to_mask(const ContactShape& cs);

// Area-mean downsampling with exact fractional box coverage. Requires
// new_width <= cs.width and new_height <= cs.height.
ContactShape downsample_area_mean(const ContactShape& cs, int new_width,
                                  int new_height);

// Fractional-coverage downsample of a binary mask to size*size, flattened
// row-major into [0,1] values.
Eigen::VectorXd mask_coverage_vector(const MaskImage& mask, int size);

// Back-projects contact pixels only: ((u-cx)/fx, (v-cy)/fy, 1) * (d + value).
// Throws GeometryError if the shape has no contact pixels. The sensor must
// match the shape resolution.
PointCloud to_pointcloud(const ContactShape& cs, const SensorModel& sensor);

// PGM quantization used for storage: q = round(value / delta_d * 65535).
std::uint16_t quantize_value(float value_mm, double delta_d);
float dequantize_value(std::uint16_t q, double delta_d);

}  // namespace touchloc
