#include "hartogs/domains.hpp"

namespace hartogs {

Radius Radius::finite(Rational v) {
  if (v <= Rational(0)) throw ValidationError("radius must be positive");
  return Radius{false, v};
}

Radius Radius::inf() { return Radius{true, Rational(1)}; }

bool operator<(const Radius& a, const Radius& b) {
  if (a.infinite) return false;
  if (b.infinite) return true;
  return a.value < b.value;
}

bool operator<=(const Radius& a, const Radius& b) { return !(b < a); }

std::string to_string(const Radius& r) {
  return r.infinite ? "inf" : to_string(r.value);
}

Factor1D Factor1D::disc(Radius outer) {
  return Factor1D{Kind::Disc, Radius::finite(Rational(1)), outer};
}

Factor1D Factor1D::annulus(Radius inner, Radius outer) {
  if (inner.infinite) throw ValidationError("annulus inner radius must be finite");
  if (!(inner < outer)) throw ValidationError("annulus requires inner < outer");
  return Factor1D{Kind::Annulus, inner, outer};
}

std::string to_string(const Factor1D& f) {
  if (f.kind == Factor1D::Kind::Disc) return "disc(" + to_string(f.outer) + ")";
  return "annulus(" + to_string(f.inner) + "," + to_string(f.outer) + ")";
}

void ReinhardtBoxDomain::check_valid() const {
  if (factors.empty()) throw ValidationError("domain needs at least one factor");
  for (const Factor1D& f : factors) {
    if (f.kind == Factor1D::Kind::Annulus && !(f.inner < f.outer)) {
      throw ValidationError("annulus requires inner < outer");
    }
  }
}

ReinhardtBoxDomain ReinhardtBoxDomain::product(const ReinhardtBoxDomain& a,
                                               const ReinhardtBoxDomain& b) {
  ReinhardtBoxDomain p;
  p.factors = a.factors;
  p.factors.insert(p.factors.end(), b.factors.begin(), b.factors.end());
  return p;
}

std::string to_string(const ReinhardtBoxDomain& d) {
  std::string s;
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    if (i) s += " x ";
    s += to_string(d.factors[i]);
  }
  return s;
}

void HartogsFigure::check_valid() const {
  X.check_valid();
  X0.check_valid();
  Y.check_valid();
  Y0.check_valid();
  if (X.dim() != X0.dim() || Y.dim() != Y0.dim()) {
    throw DimensionError("figure factor dimensions mismatch");
  }
  if (!contains(X0, X) || X0 == X) {
    throw ValidationError("X0 must be properly contained in X");
  }
  if (!contains(Y0, Y) || Y0 == Y) {
    throw ValidationError("Y0 must be properly contained in Y");
  }
}

void LaurentModel::check_valid() const {
  convergence.check_valid();
  if (spectrum.dim() != convergence.dim()) {
    throw DimensionError("model spectrum/convergence dimension mismatch");
  }
  // Negative powers are not locally bounded at an interior origin.
  for (const LatticeBox& b : spectrum.boxes()) {
    for (int i = 0; i < spectrum.dim(); ++i) {
      if (convergence.factors[static_cast<std::size_t>(i)].contains_origin() &&
          b.iv[static_cast<std::size_t>(i)].lo < ExtInt(0)) {
        throw ValidationError("negative exponent on a disc factor");
      }
    }
  }
}

bool contains(const Factor1D& inner, const Factor1D& outer) {
  using K = Factor1D::Kind;
  if (inner.kind == K::Disc && outer.kind == K::Disc) {
    return inner.outer <= outer.outer;
  }
  if (inner.kind == K::Disc && outer.kind == K::Annulus) {
    return false;  // the origin is not in an annulus
  }
  if (inner.kind == K::Annulus && outer.kind == K::Disc) {
    return inner.outer <= outer.outer;
  }
  return outer.inner <= inner.inner && inner.outer <= outer.outer;
}

bool contains(const ReinhardtBoxDomain& inner,
              const ReinhardtBoxDomain& outer) {
  if (inner.dim() != outer.dim()) {
    throw DimensionError("containment dimension mismatch");
  }
  for (int i = 0; i < inner.dim(); ++i) {
    if (!contains(inner.factors[static_cast<std::size_t>(i)],
                  outer.factors[static_cast<std::size_t>(i)])) {
      return false;
    }
  }
  return true;
}

Spectrum spectrum_of(const ReinhardtBoxDomain& d) {
  LatticeBox b;
  b.iv.reserve(d.factors.size());
  for (const Factor1D& f : d.factors) {
    if (f.kind == Factor1D::Kind::Disc) {
      b.iv.push_back({ExtInt(0), ExtInt::pos_inf()});
    } else {
      b.iv.push_back({ExtInt::neg_inf(), ExtInt::pos_inf()});
    }
  }
  return Spectrum::from_boxes(d.dim(), {b});
}

HartogsCover hartogs_cover(const HartogsFigure& h) {
  h.check_valid();
  return HartogsCover{ReinhardtBoxDomain::product(h.X0, h.Y),
                      ReinhardtBoxDomain::product(h.X, h.Y0),
                      ReinhardtBoxDomain::product(h.X0, h.Y0)};
}

ReinhardtBoxDomain natural_domain(const LatticeBox& box,
                                  const ReinhardtBoxDomain& base) {
  if (box.dim() != base.dim()) {
    throw DimensionError("box/base dimension mismatch");
  }
  ReinhardtBoxDomain out;
  out.factors.reserve(base.factors.size());
  for (int i = 0; i < base.dim(); ++i) {
    const Interval& iv = box.iv[static_cast<std::size_t>(i)];
    const Factor1D& f = base.factors[static_cast<std::size_t>(i)];
    if (iv.lo >= ExtInt(0)) {
      out.factors.push_back(Factor1D::disc(f.outer));
    } else if (iv.hi <= ExtInt(-1)) {
      if (f.kind == Factor1D::Kind::Disc) {
        throw ValidationError("negative exponents on a disc factor");
      }
      out.factors.push_back(Factor1D::annulus(f.inner, Radius::inf()));
    } else {
      out.factors.push_back(f);
    }
  }
  return out;
}

ReinhardtBoxDomain natural_domain(const Spectrum& s,
                                  const ReinhardtBoxDomain& base) {
  if (s.boxes().size() != 1) {
    throw ValidationError("natural_domain expects a single-box spectrum");
  }
  return natural_domain(s.boxes()[0], base);
}

}  // namespace hartogs
