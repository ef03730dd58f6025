#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hartogs/errors.hpp"

namespace hartogs {

/// Integer extended with the two infinities. Total order: -inf < k < +inf.
class ExtInt {
 public:
  constexpr ExtInt() : ExtInt(0LL) {}
  constexpr ExtInt(long long v) : kind_(Kind::Finite), v_(v) {}

  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }

  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }

  long long value() const;

  /// Successor; infinities are fixed points.
  ExtInt succ() const;
  /// Predecessor; infinities are fixed points.
  ExtInt pred() const;

  friend constexpr auto operator<=>(const ExtInt&, const ExtInt&) = default;

 private:
  enum class Kind : std::uint8_t { NegInf = 0, Finite = 1, PosInf = 2 };
  constexpr explicit ExtInt(Kind k) : kind_(k), v_(0) {}

  Kind kind_;
  long long v_;
};

std::string to_string(const ExtInt& e);

/// Closed integer interval [lo, hi]; empty when hi < lo.
struct Interval {
  ExtInt lo;
  ExtInt hi;

  bool empty() const { return hi < lo; }
  bool contains(long long x) const { return lo <= ExtInt(x) && ExtInt(x) <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }

  friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

/// Axis-aligned box in Z^n. Endpoints may be infinite, but lo != +inf and
/// hi != -inf in a valid box.
struct LatticeBox {
  std::vector<Interval> iv;

  int dim() const { return static_cast<int>(iv.size()); }
  bool empty() const;
  bool contains(std::span<const long long> p) const;
  void check_valid() const;

  friend bool operator==(const LatticeBox&, const LatticeBox&) = default;
};

/// Region of Z^n held as a canonical finite union of disjoint boxes.
///
/// Canonical form: boxes pairwise disjoint, none empty, sorted
/// lexicographically by (lo-vector, hi-vector). Two spectra are equal as sets
/// iff their box lists are identical.
class Spectrum {
 public:
  explicit Spectrum(int dim);

  /// Builds the canonical union of the given boxes.
  static Spectrum from_boxes(int dim, std::vector<LatticeBox> boxes);
  static Spectrum full(int dim);
  /// Cartesian product (concatenated coordinates).
  static Spectrum product(const Spectrum& a, const Spectrum& b);

  int dim() const { return dim_; }
  const std::vector<LatticeBox>& boxes() const { return boxes_; }
  bool empty() const { return boxes_.empty(); }

  bool contains(std::span<const long long> p) const;
  bool subset_of(const Spectrum& other) const;

  /// Coordinate permutation: coordinate i of the result reads coordinate
  /// perm[i] of this spectrum.
  Spectrum permuted(std::span<const int> perm) const;

  /// Points of the spectrum with all |coordinates| <= W, lexicographic order.
  std::vector<std::vector<long long>> enumerate_window(int W) const;
  /// Restriction to the box [-W, W]^n.
  Spectrum window(int W) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  int dim_;
  std::vector<LatticeBox> boxes_;
};

/// Identity on spectra (they are canonical by construction); the raw-input
/// entry point is Spectrum::from_boxes.
Spectrum canonicalize(const Spectrum& s);

Spectrum intersect(const Spectrum& a, const Spectrum& b);
Spectrum unite(const Spectrum& a, const Spectrum& b);
Spectrum difference(const Spectrum& a, const Spectrum& b);

}  // namespace hartogs
