#include "touchloc/sensor.hpp"

#include <algorithm>
#include <cmath>

#include "touchloc/errors.hpp"

namespace touchloc {

std::size_t MaskImage::count() const {
  std::size_t n = 0;
  for (const auto v : on) n += (v != 0);
  return n;
}

SensorModel SensorModel::paper_default() {
  SensorModel s;
  s.extent_x = 0.5 * s.width / s.fx * s.d;
  s.extent_y = 0.5 * s.height / s.fy * s.d;
  return s;
}

SensorModel SensorModel::rescaled(int new_width, int new_height) const {
  SensorModel out = *this;
  const double sx = double(width) / double(new_width);
  const double sy = double(height) / double(new_height);
  out.fx = fx / sx;
  out.fy = fy / sy;
  out.cx = (cx + 0.5) / sx - 0.5;
  out.cy = (cy + 0.5) / sy - 0.5;
  out.width = new_width;
  out.height = new_height;
  out.region_mask.reset();  // masks are resolution-specific
  return out;
}

void SensorModel::validate() const {
  if (!(fx > 0) || !(fy > 0)) throw ConfigError("sensor: fx, fy must be > 0");
  if (!(d > 0)) throw ConfigError("sensor: d must be > 0");
  if (!(delta_d > 0)) throw ConfigError("sensor: delta_d must be > 0");
  if (width < 1 || height < 1)
    throw ConfigError("sensor: resolution must be >= 1");
  if (!(extent_x > 0) || !(extent_y > 0))
    throw ConfigError("sensor: extents must be > 0");
  if (region_mask &&
      (region_mask->width != width || region_mask->height != height))
    throw ConfigError("sensor: region mask resolution mismatch");
}

double DepthImage::min_finite() const {
  double m = kNoHit;
  for (const double v : depth) m = std::min(m, v);
  return m;
}

std::size_t ContactShape::contact_count() const {
  std::size_t n = 0;
  const float limit = float(delta_d);
  for (const float v : values) n += (v < limit);
  return n;
}

ContactShape ContactShape::no_contact(int width, int height, double delta_d) {
  ContactShape cs;
  cs.width = width;
  cs.height = height;
  cs.delta_d = delta_d;
  cs.values.assign(std::size_t(width) * std::size_t(height), float(delta_d));
  return cs;
}

MaskImage to_mask(const ContactShape& cs) {
  MaskImage mask;
  mask.width = cs.width;
  mask.height = cs.height;
  mask.on.resize(cs.values.size());
  const float limit = float(cs.delta_d);
  for (std::size_t i = 0; i < cs.values.size(); ++i)
    mask.on[i] = cs.values[i] < limit ? 1 : 0;
  return mask;
}

namespace {

// Decomposes [0, n_src) into n_dst fractional boxes of width n_src/n_dst and
// returns, for box i, the (first_index, weights) covering it.
struct BoxSpan {
  int first;
  std::vector<double> weights;  // sums to n_src/n_dst
};

std::vector<BoxSpan> fractional_boxes(int n_src, int n_dst) {
  std::vector<BoxSpan> spans(std::size_t(n_dst));
  const double scale = double(n_src) / double(n_dst);
  for (int i = 0; i < n_dst; ++i) {
    const double lo = i * scale;
    const double hi = (i + 1) * scale;
    const int first = int(std::floor(lo));
    const int last = std::min(n_src - 1, int(std::ceil(hi)) - 1);
    BoxSpan span;
    span.first = first;
    for (int s = first; s <= last; ++s) {
      const double cover =
          std::min(hi, double(s) + 1.0) - std::max(lo, double(s));
      if (cover > 0) span.weights.push_back(cover);
    }
    spans[std::size_t(i)] = std::move(span);
  }
  return spans;
}

}  // namespace

ContactShape downsample_area_mean(const ContactShape& cs, int new_width,
                                  int new_height) {
  if (new_width > cs.width || new_height > cs.height || new_width < 1 ||
      new_height < 1)
    throw ConfigError("downsample_area_mean: bad target resolution");
  if (new_width == cs.width && new_height == cs.height) return cs;

  const auto cols = fractional_boxes(cs.width, new_width);
  const auto rows = fractional_boxes(cs.height, new_height);

  ContactShape out;
  out.width = new_width;
  out.height = new_height;
  out.delta_d = cs.delta_d;
  out.values.resize(std::size_t(new_width) * std::size_t(new_height));

  const double area = (double(cs.width) / new_width) *
                      (double(cs.height) / new_height);
  for (int y = 0; y < new_height; ++y) {
    const auto& ry = rows[std::size_t(y)];
    for (int x = 0; x < new_width; ++x) {
      const auto& rx = cols[std::size_t(x)];
      double acc = 0.0;
      for (std::size_t j = 0; j < ry.weights.size(); ++j) {
        const std::size_t src_row = std::size_t(ry.first) + j;
        const float* row = cs.values.data() + src_row * std::size_t(cs.width);
        double line = 0.0;
        for (std::size_t i = 0; i < rx.weights.size(); ++i)
          line += rx.weights[i] *
                  double(row[std::size_t(rx.first) + i]);
        acc += ry.weights[j] * line;
      }
      out.values[std::size_t(y) * std::size_t(new_width) + std::size_t(x)] =
          float(acc / area);
    }
  }
  return out;
}

Eigen::VectorXd mask_coverage_vector(const MaskImage& mask, int size) {
  const auto cols = fractional_boxes(mask.width, size);
  const auto rows = fractional_boxes(mask.height, size);
  const double area = (double(mask.width) / size) *
                      (double(mask.height) / size);
  Eigen::VectorXd out(size * size);
  for (int y = 0; y < size; ++y) {
    const auto& ry = rows[std::size_t(y)];
    for (int x = 0; x < size; ++x) {
      const auto& rx = cols[std::size_t(x)];
      double acc = 0.0;
      for (std::size_t j = 0; j < ry.weights.size(); ++j) {
        const std::size_t src_row = std::size_t(ry.first) + j;
        const std::uint8_t* row =
            mask.on.data() + src_row * std::size_t(mask.width);
        double line = 0.0;
        for (std::size_t i = 0; i < rx.weights.size(); ++i)
          line += rx.weights[i] * double(row[std::size_t(rx.first) + i]);
        acc += ry.weights[j] * line;
      }
      out(y * size + x) = acc / area;
    }
  }
  return out;
}

PointCloud to_pointcloud(const ContactShape& cs, const SensorModel& sensor) {
  if (cs.width != sensor.width || cs.height != sensor.height)
    throw ConfigError("to_pointcloud: sensor resolution does not match shape");
  const std::size_t n = cs.contact_count();
  if (n == 0) throw GeometryError("to_pointcloud: shape has no contact pixels");

  Eigen::Matrix3Xd points(3, Eigen::Index(n));
  Eigen::Index k = 0;
  const float limit = float(cs.delta_d);
  for (int v = 0; v < cs.height; ++v) {
    for (int u = 0; u < cs.width; ++u) {
      const float value = cs.at(u, v);
      if (value >= limit) continue;
      const double z = sensor.d + double(value);
      points.col(k++) = sensor.pixel_ray(double(u), double(v)) * z;
    }
  }
  return PointCloud(std::move(points));
}

std::uint16_t quantize_value(float value_mm, double delta_d) {
  const double q = std::round(double(value_mm) / delta_d * 65535.0);
  return std::uint16_t(std::clamp(q, 0.0, 65535.0));
}

float dequantize_value(std::uint16_t q, double delta_d) {
  return float(double(q) / 65535.0 * delta_d);
}

}  // namespace touchloc
