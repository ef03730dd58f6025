#include "hartogs/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hartogs {

namespace {

Complex int_pow(Complex base, long long e) {
  if (e < 0) {
    base = 1.0 / base;
    e = -e;
  }
  Complex r = 1.0;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

Complex LaurentPolynomial::eval(std::span<const Complex> z) const {
  if (static_cast<int>(z.size()) != dim) {
    throw DimensionError("evaluation point dimension mismatch");
  }
  Complex sum = 0.0;
  for (const auto& [alpha, c] : coeffs) {
    Complex term = c;
    for (int i = 0; i < dim; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      long long e = alpha[idx];
      if (e < 0 && z[idx] == Complex(0.0)) {
        throw ValidationError("negative power evaluated at zero coordinate");
      }
      term *= int_pow(z[idx], e);
    }
    sum += term;
  }
  return sum;
}

void TorusSpec::check_valid() const {
  if (radii.empty()) throw ValidationError("torus needs at least one radius");
  for (double r : radii) {
    if (!(r > 0.0)) throw ValidationError("torus radii must be positive");
  }
  if (nodes < 4 || (nodes & (nodes - 1)) != 0) {
    throw ValidationError("node count must be a power of two >= 4");
  }
}

Complex torus_coefficient(const SampledFunction& f,
                          std::span<const long long> alpha,
                          const TorusSpec& t) {
  t.check_valid();
  const int n = static_cast<int>(t.radii.size());
  if (static_cast<int>(alpha.size()) != n) {
    throw DimensionError("exponent dimension mismatch");
  }
  const int N = t.nodes;
  const double step = 2.0 * std::numbers::pi / N;

  std::vector<int> k(static_cast<std::size_t>(n), 0);
  std::vector<Complex> z(static_cast<std::size_t>(n));
  Complex acc = 0.0;
  while (true) {
    Complex weight = 1.0;
    for (int i = 0; i < n; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      double th = step * k[idx];
      z[idx] = std::polar(t.radii[idx], th);
      weight *= std::polar(std::pow(t.radii[idx],
                                    -static_cast<double>(alpha[idx])),
                           -static_cast<double>(alpha[idx]) * th);
    }
    acc += f(z) * weight;
    int i = n - 1;
    while (i >= 0 && k[static_cast<std::size_t>(i)] == N - 1) {
      k[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++k[static_cast<std::size_t>(i)];
  }
  return acc / std::pow(static_cast<double>(N), n);
}

double coefficient_consistency(const SampledFunction& f,
                               std::span<const long long> alpha,
                               const TorusSpec& t1, const TorusSpec& t2) {
  Complex c1 = torus_coefficient(f, alpha, t1);
  Complex c2 = torus_coefficient(f, alpha, t2);
  return std::abs(c1 - c2) / (1.0 + std::abs(c1));
}

DecayResult density_decay(const std::function<Complex(Complex)>& target,
                          std::span<const Complex> taylor, double rho,
                          std::span<const int> degrees, int circle_samples) {
  if (!(rho > 0.0)) throw ValidationError("rho must be positive");
  DecayResult out;
  const double step = 2.0 * std::numbers::pi / circle_samples;
  for (int deg : degrees) {
    double sup = 0.0;
    for (int s = 0; s < circle_samples; ++s) {
      Complex z = std::polar(rho, step * s);
      Complex partial = 0.0;
      Complex zp = 1.0;
      for (int j = 0; j <= deg && j < static_cast<int>(taylor.size()); ++j) {
        partial += taylor[static_cast<std::size_t>(j)] * zp;
        zp *= z;
      }
      sup = std::max(sup, std::abs(target(z) - partial));
    }
    out.errors.push_back(sup);
  }
  // Least-squares geometric fit on log(error) vs degree.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (std::size_t i = 0; i < out.errors.size(); ++i) {
    if (out.errors[i] < 1e-15) continue;
    double x = degrees[i];
    double y = std::log(out.errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++cnt;
  }
  if (cnt >= 2) {
    double denom = cnt * sxx - sx * sx;
    if (std::abs(denom) > 1e-12) {
      out.fitted_ratio = std::exp((cnt * sxy - sx * sy) / denom);
    }
  }
  return out;
}

ObstructionResult obstruction_bound(
    int k, double rho, const std::function<Complex(Complex)>& candidate,
    int circle_samples) {
  if (k < 1) throw ValidationError("k must be positive");
  if (!(rho > 0.0)) throw ValidationError("rho must be positive");
  ObstructionResult out;
  const double step = 2.0 * std::numbers::pi / circle_samples;
  Complex c = 0.0;
  for (int s = 0; s < circle_samples; ++s) {
    Complex z = std::polar(rho, step * s);
    Complex g = std::pow(z, -static_cast<double>(k)) - candidate(z);
    out.sampled_sup = std::max(out.sampled_sup, std::abs(g));
    c += g * std::pow(z, static_cast<double>(k));
  }
  c /= static_cast<double>(circle_samples);
  out.bound = std::abs(c) / std::pow(rho, k);
  return out;
}

}  // namespace hartogs
