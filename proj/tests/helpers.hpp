#pragma once

#include <random>
#include <set>
#include <vector>

#include "hartogs/cech.hpp"
#include "hartogs/domains.hpp"

namespace hartogs::testing {

inline ReinhardtBoxDomain disc1(long long n, long long d = 1) {
  return ReinhardtBoxDomain{{Factor1D::disc(Radius::finite(Rational(n, d)))}};
}

inline ReinhardtBoxDomain ann1(Rational r, Rational R) {
  return ReinhardtBoxDomain{
      {Factor1D::annulus(Radius::finite(r), Radius::finite(R))}};
}

inline ReinhardtBoxDomain ann1(long long rn, long long rd, long long Rn,
                               long long Rd) {
  return ann1(Rational(rn, rd), Rational(Rn, Rd));
}

// The four example figures with r1 = r2 = 1/2, R = 3/4.
inline HartogsFigure figure_h0() {
  return {disc1(1), disc1(1, 2), disc1(1), disc1(1, 2)};
}
inline HartogsFigure figure_h1() {
  return {disc1(1), ann1(1, 2, 1, 1), disc1(1), disc1(1, 2)};
}
inline HartogsFigure figure_h2() {
  return {disc1(1), ann1(1, 2, 1, 1), disc1(1), ann1(1, 2, 1, 1)};
}
inline HartogsFigure figure_h3() {
  return {disc1(1), ann1(1, 2, 1, 1), disc1(1), ann1(1, 2, 3, 4)};
}

inline Rational random_rational(std::mt19937_64& rng, Rational lo,
                                Rational hi) {
  std::uniform_int_distribution<long long> den(2, 24);
  long long d = den(rng);
  long long nlo = lo.numerator() * d / lo.denominator() + 1;
  long long nhi = (hi.numerator() * d - 1) / hi.denominator();
  if (nhi < nlo) return (lo + hi) / 2;
  std::uniform_int_distribution<long long> num(nlo, nhi);
  return Rational(num(rng), d);
}

// A (Z0, Z) pair of 1-D factors with a known classification, both sitting in
// the unit disc; kind: 0 runge-discs, 1 split, 2 quasi-split, 3 runge-annuli.
inline std::pair<ReinhardtBoxDomain, ReinhardtBoxDomain> random_pair(
    std::mt19937_64& rng, int kind) {
  Rational one(1);
  switch (kind) {
    case 0: {
      Rational r = random_rational(rng, Rational(1, 10), Rational(9, 10));
      return {disc1(r.numerator(), r.denominator()), disc1(1)};
    }
    case 1: {
      Rational r = random_rational(rng, Rational(1, 10), Rational(9, 10));
      return {ann1(r, one), disc1(1)};
    }
    case 2: {
      Rational r = random_rational(rng, Rational(1, 10), Rational(1, 2));
      Rational R = random_rational(rng, r + Rational(1, 50), Rational(19, 20));
      if (!(r < R)) R = (r + one) / 2;
      return {ann1(r, R), disc1(1)};
    }
    default: {
      Rational r = random_rational(rng, Rational(1, 10), Rational(1, 3));
      Rational R = random_rational(rng, Rational(2, 3), Rational(9, 10));
      return {ann1((r + one) / 4, (R + one) / 2), ann1(r, one)};
    }
  }
}

// Random figure whose cohomology is determined by the decision table: at
// least one side split, or at least one side Runge.
inline HartogsFigure random_supported_figure(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  int kx = kind(rng), ky = kind(rng);
  if (kx == 2 && ky == 2) kx = 1;  // two quasi-split sides are undecidable
  auto [x0, x] = random_pair(rng, kx);
  auto [y0, y] = random_pair(rng, ky);
  return {x, x0, y, y0};
}

inline std::set<std::vector<long long>> point_set(
    const std::vector<std::vector<long long>>& pts) {
  return {pts.begin(), pts.end()};
}

}  // namespace hartogs::testing
