#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hartogs/domains.hpp"

namespace hartogs {

/// Open box in log-modulus coordinates; lo entries may be -infinity.
struct LogBox {
  std::vector<double> lo;
  std::vector<double> hi;

  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(std::span<const double> p, double tol = 1e-9) const;
};

struct LogRegion {
  std::vector<LogBox> boxes;

  bool contains(std::span<const double> p, double tol = 1e-9) const;
};

/// Half-plane a.x <= c with |a| = 1.
struct Halfplane {
  double a1, a2, c;
};

/// Convex hull of a 2-D log region, presented by half-planes. Unbounded
/// (-infinity) directions enter as recession directions, never as clipped
/// samples.
struct LogHull {
  std::vector<Halfplane> halfplanes;           // sorted by normal angle
  std::vector<std::array<double, 2>> vertices; // generator corners
  bool recede_x1 = false;                      // -e1 recession direction
  bool recede_x2 = false;

  bool contains(double x1, double x2, double tol = 1e-9) const;
  bool is_box(double tol = 1e-9) const;
};

LogHull hull_from_generators(std::vector<std::array<double, 2>> vertices,
                             bool recede_x1, bool recede_x2);

/// Log image of the two-box Hartogs cover (dim 2 only).
LogRegion log_image(const HartogsFigure& h);

LogHull log_convex_hull(const LogRegion& r);

struct SteinCertificate {
  bool is_stein = false;  // always false for proper Hartogs figures
  /// Radii of a boundary point to which every function extends; one entry per
  /// coordinate (X factors first, then Y factors).
  std::vector<Rational> extension_point;
  /// Smallest Reinhardt box whose log image contains the hull.
  ReinhardtBoxDomain envelope;
  bool envelope_is_box = false;  // true iff the hull itself is a box
  LogHull hull;
  /// Point inside the hull but outside the log image (strict containment
  /// witness).
  std::optional<std::array<double, 2>> witness;
};

SteinCertificate stein_certificate(const HartogsFigure& h);

/// Smallest Reinhardt box containing the figure (any dimension); coincides
/// with X x Y since X0 c X and Y0 c Y.
ReinhardtBoxDomain envelope_box(const HartogsFigure& h);

}  // namespace hartogs
