#pragma once

#include "touchloc/geometry.hpp"

namespace touchloc {

// Procedural meshes (mm). Used by the examples, fixtures and tests.

// Axis-aligned box centered at `center` with full side lengths `size`.
TriangleMesh make_box(const Eigen::Vector3d& size,
                      const Eigen::Vector3d& center = Eigen::Vector3d::Zero());

// Icosphere: 20 * 4^subdivisions triangles, vertices exactly at radius r.
TriangleMesh make_icosphere(double radius, int subdivisions,
                            const Eigen::Vector3d& center =
                                Eigen::Vector3d::Zero());

// Icosphere scaled per axis; vertices exactly on the ellipsoid.
TriangleMesh make_ellipsoid(const Eigen::Vector3d& semi_axes, int subdivisions,
                            const Eigen::Vector3d& center =
                                Eigen::Vector3d::Zero());

// Thin rectangular plate (two-sided use is fine; it is a closed box of
// thickness `thickness`) centered at `center`, normal +z.
TriangleMesh make_plate(double size_x, double size_y, double thickness,
                        const Eigen::Vector3d& center =
                            Eigen::Vector3d::Zero());

// An asymmetric pin-like fixture: an ellipsoid with a z-taper and a lateral
// bump, so that no nontrivial rotation maps it onto itself. Roughly
// 2a x 2b x 2c mm.
TriangleMesh make_pin(double a = 7.0, double b = 5.0, double c = 4.0,
                      int subdivisions = 4);

// A plate with an off-center fin on top. The flat bottom is symmetric under a
// 180-degree turn about the vertical center axis while the fin is not, so
// bottom contact shapes are pairwise ambiguous and a second (top) contact
// disambiguates. Bottom face at z=0, fin top at z=fin_top.
struct DominoDims {
  double plate_x = 20.0, plate_y = 12.0, plate_z = 4.0;
  double fin_x0 = 3.0, fin_x1 = 7.0;
  double fin_y = 2.0;
  double fin_top = 12.0;
};
TriangleMesh make_domino(const DominoDims& dims = {});

}  // namespace touchloc
