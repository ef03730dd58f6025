#pragma once

#include <string>
#include <vector>

#include "hartogs/errors.hpp"
#include "hartogs/lattice.hpp"
#include "hartogs/rational.hpp"

namespace hartogs {

/// Positive exact rational radius, or +infinity.
struct Radius {
  bool infinite = false;
  Rational value = Rational(1);  // meaningful only when finite

  static Radius finite(Rational v);
  static Radius inf();

  friend bool operator==(const Radius&, const Radius&) = default;
};

bool operator<(const Radius& a, const Radius& b);
bool operator<=(const Radius& a, const Radius& b);
std::string to_string(const Radius& r);

/// One-dimensional Reinhardt factor: an open disc {|z| < R} or an open
/// annulus {r < |z| < R}. Boundary circles are excluded.
struct Factor1D {
  enum class Kind { Disc, Annulus };

  Kind kind = Kind::Disc;
  Radius inner;  // annulus only; finite and positive
  Radius outer;

  static Factor1D disc(Radius outer);
  static Factor1D annulus(Radius inner, Radius outer);

  bool contains_origin() const { return kind == Kind::Disc; }

  friend bool operator==(const Factor1D&, const Factor1D&) = default;
};

std::string to_string(const Factor1D& f);

/// Product of 1-D factors, one per coordinate.
struct ReinhardtBoxDomain {
  std::vector<Factor1D> factors;

  int dim() const { return static_cast<int>(factors.size()); }
  void check_valid() const;

  static ReinhardtBoxDomain product(const ReinhardtBoxDomain& a,
                                    const ReinhardtBoxDomain& b);

  friend bool operator==(const ReinhardtBoxDomain&,
                         const ReinhardtBoxDomain&) = default;
};

std::string to_string(const ReinhardtBoxDomain& d);

/// H = (X x Y0) u (X0 x Y) with X0 properly contained in X and Y0 in Y.
struct HartogsFigure {
  ReinhardtBoxDomain X;
  ReinhardtBoxDomain X0;
  ReinhardtBoxDomain Y;
  ReinhardtBoxDomain Y0;

  int dim() const { return X.dim() + Y.dim(); }
  void check_valid() const;
};

/// A spectrum together with a Reinhardt domain on which every series with
/// exponents in the spectrum converges.
struct LaurentModel {
  Spectrum spectrum;
  ReinhardtBoxDomain convergence;

  bool empty() const { return spectrum.empty(); }
  void check_valid() const;

  friend bool operator==(const LaurentModel&, const LaurentModel&) = default;
};

/// Factorwise containment of open Reinhardt box domains.
bool contains(const ReinhardtBoxDomain& inner, const ReinhardtBoxDomain& outer);
bool contains(const Factor1D& inner, const Factor1D& outer);

/// Exponents of the monomials holomorphic on d: per factor, N for a disc and
/// Z for an annulus.
Spectrum spectrum_of(const ReinhardtBoxDomain& d);

struct HartogsCover {
  ReinhardtBoxDomain U1;   // X0 x Y
  ReinhardtBoxDomain U2;   // X x Y0
  ReinhardtBoxDomain U12;  // X0 x Y0
};

HartogsCover hartogs_cover(const HartogsFigure& h);

/// Largest Reinhardt box on which every monomial of the (single) box
/// converges wherever its restriction to `base` does: nonnegative boxes fill
/// in the inner disc, negative boxes push the outer radius to infinity.
ReinhardtBoxDomain natural_domain(const LatticeBox& box,
                                  const ReinhardtBoxDomain& base);
ReinhardtBoxDomain natural_domain(const Spectrum& single_box,
                                  const ReinhardtBoxDomain& base);

}  // namespace hartogs
