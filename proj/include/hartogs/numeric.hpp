#pragma once

#include <complex>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "hartogs/errors.hpp"

namespace hartogs {

using Complex = std::complex<double>;

/// Finite Laurent polynomial in n variables.
struct LaurentPolynomial {
  int dim = 1;
  std::map<std::vector<long long>, Complex> coeffs;  // sorted exponents

  Complex eval(std::span<const Complex> z) const;
};

/// Equispaced-angle product torus; exact quadrature for Laurent polynomials
/// with per-axis exponent magnitude below nodes/2.
struct TorusSpec {
  std::vector<double> radii;
  int nodes = 64;  // power of two, >= 4

  void check_valid() const;
};

using SampledFunction = std::function<Complex(std::span<const Complex>)>;

/// Torus mean of f(z) z^{-alpha}; the Laurent coefficient c_alpha(f).
Complex torus_coefficient(const SampledFunction& f,
                          std::span<const long long> alpha,
                          const TorusSpec& t);

/// Relative discrepancy of c_alpha computed on two different tori.
double coefficient_consistency(const SampledFunction& f,
                               std::span<const long long> alpha,
                               const TorusSpec& t1, const TorusSpec& t2);

struct DecayResult {
  std::vector<double> errors;  // sup-norm error per requested degree
  double fitted_ratio = 0.0;   // geometric ratio fitted to the errors
};

/// Sup-norm errors of Taylor partial sums of `target` on the circle of
/// radius rho, for each degree in `degrees`; the errors of a function
/// holomorphic past radius s decay like (rho/s)^N.
DecayResult density_decay(const std::function<Complex(Complex)>& target,
                          std::span<const Complex> taylor, double rho,
                          std::span<const int> degrees,
                          int circle_samples = 4096);

struct ObstructionResult {
  double bound = 0.0;        // certified lower bound on the sup-distance
  double sampled_sup = 0.0;  // directly sampled sup-distance
};

/// Residue-functional lower bound on sup_{|z|=rho} |z^{-k} - candidate|:
/// the coefficient functional c_{-k} kills every function holomorphic on a
/// disc, so |c_{-k}(z^{-k} - candidate)| / rho^k = rho^{-k} bounds the
/// distance from below, independently of the candidate.
ObstructionResult obstruction_bound(
    int k, double rho, const std::function<Complex(Complex)>& candidate,
    int circle_samples = 4096);

}  // namespace hartogs
