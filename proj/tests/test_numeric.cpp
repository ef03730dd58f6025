#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "hartogs/numeric.hpp"

using namespace hartogs;

namespace {

LaurentPolynomial random_poly(std::mt19937_64& rng, int dim, int range,
                              int terms) {
  std::uniform_int_distribution<long long> e(-range, range);
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  LaurentPolynomial p;
  p.dim = dim;
  for (int t = 0; t < terms; ++t) {
    std::vector<long long> a;
    for (int i = 0; i < dim; ++i) a.push_back(e(rng));
    p.coeffs[a] = Complex(c(rng), c(rng));
  }
  return p;
}

SampledFunction sampler(const LaurentPolynomial& p) {
  return [p](std::span<const Complex> z) { return p.eval(z); };
}

// Degree-n least-squares polynomial fit to samples of f on |z| = rho,
// via the normal equations in the monomial basis (adequate at these sizes).
std::vector<Complex> least_squares_poly(
    const std::function<Complex(Complex)>& f, double rho, int degree,
    int samples = 256) {
  const int n = degree + 1;
  std::vector<std::vector<Complex>> A(n, std::vector<Complex>(n, 0.0));
  std::vector<Complex> b(n, 0.0);
  for (int s = 0; s < samples; ++s) {
    Complex z = std::polar(rho, 2.0 * std::numbers::pi * s / samples);
    std::vector<Complex> pw(n);
    pw[0] = 1.0;
    for (int j = 1; j < n; ++j) pw[j] = pw[j - 1] * z;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) A[i][j] += std::conj(pw[i]) * pw[j];
      b[i] += std::conj(pw[i]) * f(z);
    }
  }
  // Gaussian elimination with partial pivoting.
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
    std::swap(A[col], A[piv]);
    std::swap(b[col], b[piv]);
    for (int r = col + 1; r < n; ++r) {
      Complex m = A[r][col] / A[col][col];
      for (int j = col; j < n; ++j) A[r][j] -= m * A[col][j];
      b[r] -= m * b[col];
    }
  }
  std::vector<Complex> x(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    Complex s = b[r];
    for (int j = r + 1; j < n; ++j) s -= A[r][j] * x[j];
    x[r] = s / A[r][r];
  }
  return x;
}

}  // namespace

TEST_CASE("Laurent polynomial evaluation") {
  LaurentPolynomial p1{1, {{{-1}, 1.0}}};
  Complex z2[] = {Complex(2.0, 0.0)};
  CHECK(std::abs(p1.eval(z2) - Complex(0.5)) < 1e-15);

  LaurentPolynomial p2{2, {{{1, 1}, 1.0}}};
  Complex zi[] = {Complex(0.0, 1.0), Complex(0.0, 1.0)};
  CHECK(std::abs(p2.eval(zi) - Complex(-1.0)) < 1e-12);

  LaurentPolynomial p3{1, {{{-1}, 1.0}, {{2}, 3.0}}};
  CHECK(std::abs(p3.eval(z2) - Complex(12.5)) < 1e-12);

  Complex z0[] = {Complex(0.0)};
  CHECK_THROWS_AS(p1.eval(z0), ValidationError);
  CHECK_THROWS_AS(p2.eval(z2), DimensionError);
}

TEST_CASE("torus spec validation") {
  CHECK_THROWS_AS((TorusSpec{{0.5}, 3}.check_valid()), ValidationError);
  CHECK_THROWS_AS((TorusSpec{{0.5}, 12}.check_valid()), ValidationError);
  CHECK_THROWS_AS((TorusSpec{{-0.5}, 16}.check_valid()), ValidationError);
  CHECK_NOTHROW((TorusSpec{{0.5, 0.7}, 64}.check_valid()));
}

TEST_CASE("character orthogonality") {
  TorusSpec t{{0.7, 0.7}, 64};
  LaurentPolynomial mono{2, {{{3, -2}, 1.0}}};
  long long same[] = {3, -2};
  CHECK(std::abs(torus_coefficient(sampler(mono), same, t) - Complex(1.0)) <
        1e-12);
  long long other[] = {2, -2};
  CHECK(std::abs(torus_coefficient(sampler(mono), other, t)) < 1e-14);
  long long far[] = {-3, 2};
  CHECK(std::abs(torus_coefficient(sampler(mono), far, t)) < 1e-14);
}

TEST_CASE("random coefficient recovery at 1e-10 relative") {
  std::mt19937_64 rng(4242);
  TorusSpec t{{0.7, 0.7}, 64};
  for (int it = 0; it < 40; ++it) {
    LaurentPolynomial p = random_poly(rng, 2, 8, 12);
    auto f = sampler(p);
    for (const auto& [alpha, c] : p.coeffs) {
      Complex got = torus_coefficient(f, alpha, t);
      REQUIRE(std::abs(got - c) <= 1e-10 * (1.0 + std::abs(c)));
    }
  }
}

TEST_CASE("doubling the node count is stable") {
  std::mt19937_64 rng(17);
  LaurentPolynomial p = random_poly(rng, 2, 8, 10);
  auto f = sampler(p);
  TorusSpec t1{{0.6, 0.8}, 64};
  TorusSpec t2{{0.6, 0.8}, 128};
  for (const auto& [alpha, c] : p.coeffs) {
    Complex a = torus_coefficient(f, alpha, t1);
    Complex b = torus_coefficient(f, alpha, t2);
    REQUIRE(std::abs(a - b) < 1e-12 * (1.0 + std::abs(a)));
  }
}

TEST_CASE("coefficient consistency across tori") {
  // The coefficient of z1^{-1} z2 is torus-independent; radii chosen inside
  // the overlap and inside one side of the cover of the first example figure.
  LaurentPolynomial p{2, {{{-1, 1}, 1.0}}};
  auto f = sampler(p);
  long long alpha[] = {-1, 1};
  TorusSpec t1{{0.6, 0.3}, 64};
  TorusSpec t2{{0.6, 0.9}, 64};
  CHECK(coefficient_consistency(f, alpha, t1, t2) < 1e-10);

  std::mt19937_64 rng(23);
  LaurentPolynomial q = random_poly(rng, 2, 6, 8);
  auto g = sampler(q);
  long long beta[] = {2, -3};
  CHECK(coefficient_consistency(g, beta, TorusSpec{{0.5, 0.5}, 64},
                                TorusSpec{{0.8, 0.4}, 128}) < 1e-10);

  long long outside[] = {11, 0};
  CHECK(coefficient_consistency(f, outside, t1, t2) < 1e-12);
}

TEST_CASE("partial-sum decay measures the density ratio") {
  std::vector<int> degrees = {4, 8, 12, 16, 20, 24};

  auto geometric = [](double s) {
    return [s](Complex z) { return 1.0 / (s - z); };
  };
  auto taylor_of = [](double s, int n) {
    std::vector<Complex> c;
    double v = 1.0 / s;
    for (int j = 0; j <= n; ++j) {
      c.push_back(v);
      v /= s;
    }
    return c;
  };

  auto c6 = taylor_of(0.6, 40);
  DecayResult d1 = density_decay(geometric(0.6), c6, 0.4, degrees);
  CHECK(std::abs(d1.fitted_ratio - 2.0 / 3.0) < 0.05);
  for (std::size_t i = 0; i + 1 < d1.errors.size(); ++i)
    CHECK(d1.errors[i + 1] < d1.errors[i]);

  auto c9 = taylor_of(0.9, 40);
  DecayResult d2 = density_decay(geometric(0.9), c9, 0.3, degrees);
  CHECK(std::abs(d2.fitted_ratio - 1.0 / 3.0) < 0.05);

  // A polynomial target is reproduced exactly past its degree.
  std::vector<Complex> poly = {1.0, 2.0, 0.0, -1.0};
  auto ptarget = [](Complex z) {
    return 1.0 + 2.0 * z - z * z * z;
  };
  DecayResult d3 = density_decay(ptarget, poly, 0.5, degrees);
  for (double e : d3.errors) CHECK(e < 1e-12);
}

TEST_CASE("density ratios across many configurations") {
  std::vector<int> degrees = {6, 10, 14, 18, 22};
  std::vector<std::pair<double, double>> configs = {
      {0.2, 0.5}, {0.3, 0.5}, {0.2, 0.6}, {0.4, 0.6}, {0.3, 0.7},
      {0.5, 0.7}, {0.2, 0.8}, {0.4, 0.8}, {0.6, 0.9}, {0.3, 0.9},
      {0.5, 0.95}, {0.45, 0.75}};
  for (auto [rho, s] : configs) {
    std::vector<Complex> taylor;
    double v = 1.0 / s;
    for (int j = 0; j <= 60; ++j) {
      taylor.push_back(v);
      v /= s;
    }
    double sc = s;
    DecayResult d = density_decay([sc](Complex z) { return 1.0 / (sc - z); },
                                  taylor, rho, degrees);
    REQUIRE(std::abs(d.fitted_ratio - rho / s) < 0.05);
  }
}

TEST_CASE("residue functional bounds the distance from below") {
  ObstructionResult r1 = obstruction_bound(1, 0.75, [](Complex) {
    return Complex(0.0);
  });
  CHECK(r1.bound == doctest::Approx(4.0 / 3.0).epsilon(1e-10));
  CHECK(r1.sampled_sup == doctest::Approx(4.0 / 3.0).epsilon(1e-10));

  ObstructionResult r2 = obstruction_bound(2, 0.5, [](Complex) {
    return Complex(0.0);
  });
  CHECK(r2.bound == doctest::Approx(4.0).epsilon(1e-10));
  CHECK(r2.sampled_sup == doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("obstruction holds against least-squares polynomial candidates") {
  const double rho = 0.75;
  auto target = [](Complex z) { return 1.0 / z; };
  for (int degree : {5, 20, 50}) {
    std::vector<Complex> c = least_squares_poly(target, rho, degree);
    auto candidate = [c](Complex z) {
      Complex acc = 0.0, zp = 1.0;
      for (const Complex& cj : c) {
        acc += cj * zp;
        zp *= z;
      }
      return acc;
    };
    ObstructionResult r = obstruction_bound(1, rho, candidate);
    // The functional bound is candidate-independent and certifies 4/3.
    REQUIRE(r.bound == doctest::Approx(4.0 / 3.0).epsilon(1e-8));
    REQUIRE(r.sampled_sup >= 4.0 / 3.0 - 1e-6);
    REQUIRE(r.bound <= r.sampled_sup + 1e-9);
  }
}

TEST_CASE("random polynomial candidates never beat the functional bound") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int it = 0; it < 20; ++it) {
    std::vector<Complex> c;
    for (int j = 0; j < 8; ++j) c.push_back(Complex(u(rng), u(rng)));
    auto candidate = [c](Complex z) {
      Complex acc = 0.0, zp = 1.0;
      for (const Complex& cj : c) {
        acc += cj * zp;
        zp *= z;
      }
      return acc;
    };
    ObstructionResult r = obstruction_bound(1, 0.75, candidate);
    REQUIRE(r.sampled_sup >= 4.0 / 3.0 - 1e-6);
    REQUIRE(r.bound <= r.sampled_sup + 1e-9);
  }
}
