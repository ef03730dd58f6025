#include "hartogs/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hartogs {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTol = 1e-9;

double log_radius(const Radius& r) {
  return r.infinite ? kInf : std::log(to_double(r.value));
}

LogBox log_box_of(const ReinhardtBoxDomain& d) {
  LogBox b;
  for (const Factor1D& f : d.factors) {
    b.lo.push_back(f.kind == Factor1D::Kind::Disc ? -kInf
                                                  : log_radius(f.inner));
    b.hi.push_back(log_radius(f.outer));
  }
  return b;
}

}  // namespace

bool LogBox::contains(std::span<const double> p, double tol) const {
  for (int i = 0; i < dim(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (p[idx] < lo[idx] - tol || p[idx] > hi[idx] + tol) return false;
  }
  return true;
}

bool LogRegion::contains(std::span<const double> p, double tol) const {
  return std::any_of(boxes.begin(), boxes.end(),
                     [&](const LogBox& b) { return b.contains(p, tol); });
}

bool LogHull::contains(double x1, double x2, double tol) const {
  return std::all_of(halfplanes.begin(), halfplanes.end(),
                     [&](const Halfplane& h) {
                       return h.a1 * x1 + h.a2 * x2 <= h.c + tol;
                     });
}

bool LogHull::is_box(double tol) const {
  return std::all_of(halfplanes.begin(), halfplanes.end(),
                     [&](const Halfplane& h) {
                       return std::abs(h.a1) < tol || std::abs(h.a2) < tol;
                     });
}

namespace {

// Andrew monotone chain, CCW order.
std::vector<std::array<double, 2>> convex_polygon(
    std::vector<std::array<double, 2>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const auto& a, const auto& b) {
                          return std::abs(a[0] - b[0]) < 1e-12 &&
                                 std::abs(a[1] - b[1]) < 1e-12;
                        }),
            pts.end());
  if (pts.size() <= 2) return pts;
  const auto cross = [](const auto& o, const auto& a, const auto& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<std::array<double, 2>> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 1e-12) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 1e-12) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

LogHull hull_from_generators(std::vector<std::array<double, 2>> vertices,
                             bool recede_x1, bool recede_x2) {
  LogHull out;
  out.recede_x1 = recede_x1;
  out.recede_x2 = recede_x2;

  std::vector<std::array<double, 2>> poly = convex_polygon(std::move(vertices));
  out.vertices = poly;
  if (poly.empty()) throw ValidationError("hull of empty vertex set");

  const auto valid = [&](double a1, double a2) {
    if (recede_x1 && a1 < -kTol) return false;  // must allow direction -e1
    if (recede_x2 && a2 < -kTol) return false;
    return true;
  };

  std::vector<Halfplane> cand;
  if (poly.size() >= 2) {
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
      if (m == 2 && i == 1) continue;  // segment handled once, both sides
      const auto& p = poly[i];
      const auto& q = poly[(i + 1) % m];
      double dx = q[0] - p[0], dy = q[1] - p[1];
      double len = std::hypot(dx, dy);
      if (len < 1e-12) continue;
      // Outward normal for CCW orientation.
      double a1 = dy / len, a2 = -dx / len;
      cand.push_back({a1, a2, a1 * p[0] + a2 * p[1]});
      if (m == 2) {
        cand.push_back({-a1, -a2, -(a1 * p[0] + a2 * p[1])});
      }
    }
  }
  // Axis-aligned supports induced by recession directions or flat sides.
  const std::array<std::array<double, 2>, 4> axes = {
      {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}}};
  for (const auto& a : axes) {
    double c = -kInf;
    for (const auto& v : poly) c = std::max(c, a[0] * v[0] + a[1] * v[1]);
    cand.push_back({a[0], a[1], c});
  }

  // Keep valid facets: a facet must be tight for two generators, where the
  // recession rays count as generators tight for perpendicular normals.
  std::vector<Halfplane> kept;
  for (const Halfplane& h : cand) {
    if (!valid(h.a1, h.a2)) continue;
    bool support = true;
    int tight = 0;
    for (const auto& v : poly) {
      double s = h.a1 * v[0] + h.a2 * v[1];
      if (s > h.c + kTol) support = false;
      if (s >= h.c - kTol) ++tight;
    }
    if (!support) continue;
    if (recede_x1 && std::abs(h.a1) < kTol) ++tight;
    if (recede_x2 && std::abs(h.a2) < kTol) ++tight;
    if (tight < 2) continue;
    kept.push_back(h);
  }
  // Deduplicate by normal direction, sort by angle.
  std::sort(kept.begin(), kept.end(), [](const Halfplane& x, const Halfplane& y) {
    double ax = std::atan2(x.a2, x.a1), ay = std::atan2(y.a2, y.a1);
    return ax < ay;
  });
  for (const Halfplane& h : kept) {
    bool dup = std::any_of(out.halfplanes.begin(), out.halfplanes.end(),
                           [&](const Halfplane& seen) {
                             return std::abs(seen.a1 - h.a1) < kTol &&
                                    std::abs(seen.a2 - h.a2) < kTol;
                           });
    if (!dup) out.halfplanes.push_back(h);
  }
  if (out.halfplanes.empty()) {
    throw ValidationError("hull has no supporting half-planes");
  }
  return out;
}

LogRegion log_image(const HartogsFigure& h) {
  h.check_valid();
  if (h.X.dim() != 1 || h.Y.dim() != 1) {
    throw UnsupportedError("log image requires 1-D factors");
  }
  for (const ReinhardtBoxDomain* d : {&h.X, &h.Y}) {
    if (d->factors[0].outer.infinite) {
      throw ValidationError("log image requires bounded outer factors");
    }
  }
  LogRegion r;
  LogBox u1;  // log X0 x log Y
  LogBox lx0 = log_box_of(h.X0), lx = log_box_of(h.X);
  LogBox ly0 = log_box_of(h.Y0), ly = log_box_of(h.Y);
  u1.lo = {lx0.lo[0], ly.lo[0]};
  u1.hi = {lx0.hi[0], ly.hi[0]};
  LogBox u2;  // log X x log Y0
  u2.lo = {lx.lo[0], ly0.lo[0]};
  u2.hi = {lx.hi[0], ly0.hi[0]};
  r.boxes = {u1, u2};
  return r;
}

LogHull log_convex_hull(const LogRegion& r) {
  if (r.boxes.empty()) throw ValidationError("hull of empty region");
  bool rx = false, ry = false;
  std::vector<std::array<double, 2>> corners;
  for (const LogBox& b : r.boxes) {
    if (b.dim() != 2) throw UnsupportedError("hull supports 2-D regions only");
    if (std::isinf(b.lo[0])) rx = true;
    if (std::isinf(b.lo[1])) ry = true;
    std::vector<double> xs, ys;
    if (!std::isinf(b.lo[0])) xs.push_back(b.lo[0]);
    xs.push_back(b.hi[0]);
    if (!std::isinf(b.lo[1])) ys.push_back(b.lo[1]);
    ys.push_back(b.hi[1]);
    for (double x : xs) {
      for (double y : ys) corners.push_back({x, y});
    }
  }
  return hull_from_generators(std::move(corners), rx, ry);
}

ReinhardtBoxDomain envelope_box(const HartogsFigure& h) {
  h.check_valid();
  return ReinhardtBoxDomain::product(h.X, h.Y);
}

namespace {

// Largest boundary circle of the inner factor lying strictly inside the
// outer factor; this is the circle across which extension is certified.
Rational critical_radius(const Factor1D& inner, const Factor1D& outer) {
  std::vector<Radius> candidates;
  if (inner.kind == Factor1D::Kind::Annulus) {
    candidates.push_back(inner.outer);
    candidates.push_back(inner.inner);
  } else {
    candidates.push_back(inner.outer);
  }
  for (const Radius& c : candidates) {
    if (c.infinite) continue;
    bool interior = c < outer.outer;
    if (outer.kind == Factor1D::Kind::Annulus) {
      interior = interior && outer.inner < c;
    }
    if (interior) return c.value;
  }
  throw ValidationError("no boundary circle of the inner factor is interior");
}

}  // namespace

SteinCertificate stein_certificate(const HartogsFigure& h) {
  h.check_valid();
  SteinCertificate cert;
  cert.is_stein = false;
  for (int i = 0; i < h.X.dim(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    cert.extension_point.push_back(
        critical_radius(h.X0.factors[idx], h.X.factors[idx]));
  }
  for (int i = 0; i < h.Y.dim(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    cert.extension_point.push_back(
        critical_radius(h.Y0.factors[idx], h.Y.factors[idx]));
  }
  cert.envelope = envelope_box(h);

  if (h.X.dim() == 1 && h.Y.dim() == 1) {
    LogRegion img = log_image(h);
    cert.hull = log_convex_hull(img);
    cert.envelope_is_box = cert.hull.is_box();

    // Witness search: points just outside the inner boundaries, then a grid.
    std::vector<std::array<double, 2>> candidates;
    const double d = 1e-3;
    std::vector<double> xs, ys;
    for (const LogBox& b : img.boxes) {
      for (double v : {b.lo[0], b.hi[0]}) {
        if (!std::isinf(v)) {
          xs.push_back(v - d);
          xs.push_back(v + d);
        }
      }
      for (double v : {b.lo[1], b.hi[1]}) {
        if (!std::isinf(v)) {
          ys.push_back(v - d);
          ys.push_back(v + d);
        }
      }
    }
    double xmax = std::max(img.boxes[0].hi[0], img.boxes[1].hi[0]);
    double ymax = std::max(img.boxes[0].hi[1], img.boxes[1].hi[1]);
    for (int i = 1; i <= 60; ++i) {
      xs.push_back(xmax - 0.05 * i);
      ys.push_back(ymax - 0.05 * i);
    }
    for (double x : xs) {
      for (double y : ys) {
        candidates.push_back({x, y});
      }
    }
    const double margin = 1e-6;
    for (const auto& p : candidates) {
      bool in_hull = true;
      for (const Halfplane& hp : cert.hull.halfplanes) {
        if (hp.a1 * p[0] + hp.a2 * p[1] > hp.c - margin) {
          in_hull = false;
          break;
        }
      }
      if (in_hull && !img.contains(p, margin)) {
        cert.witness = p;
        break;
      }
    }
  }
  return cert;
}

}  // namespace hartogs
