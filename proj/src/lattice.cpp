#include "hartogs/lattice.hpp"

#include <algorithm>
#include <set>

namespace hartogs {

long long ExtInt::value() const {
  if (!is_finite()) throw Error("ExtInt::value on infinite value");
  return v_;
}

ExtInt ExtInt::succ() const {
  if (!is_finite()) return *this;
  return ExtInt(v_ + 1);
}

ExtInt ExtInt::pred() const {
  if (!is_finite()) return *this;
  return ExtInt(v_ - 1);
}

std::string to_string(const ExtInt& e) {
  if (e.is_neg_inf()) return "-inf";
  if (e.is_pos_inf()) return "inf";
  return std::to_string(e.value());
}

bool LatticeBox::empty() const {
  return std::any_of(iv.begin(), iv.end(),
                     [](const Interval& i) { return i.empty(); });
}

bool LatticeBox::contains(std::span<const long long> p) const {
  if (static_cast<int>(p.size()) != dim()) {
    throw DimensionError("point/box dimension mismatch");
  }
  for (int i = 0; i < dim(); ++i) {
    if (!iv[i].contains(p[i])) return false;
  }
  return true;
}

void LatticeBox::check_valid() const {
  for (const Interval& i : iv) {
    if (i.lo.is_pos_inf() || i.hi.is_neg_inf()) {
      throw ValidationError("lattice box endpoint out of range");
    }
    if (i.empty()) throw ValidationError("empty lattice box interval");
  }
}

namespace {

using IntervalRow = std::vector<Interval>;

bool box_less(const IntervalRow& a, const IntervalRow& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].lo != b[i].lo) return a[i].lo < b[i].lo;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].hi != b[i].hi) return a[i].hi < b[i].hi;
  }
  return false;
}

// Recursive canonicalization: decompose along the first axis at interval
// endpoints, canonicalize the fibers, and merge adjacent equal fibers.
std::vector<IntervalRow> canon(std::vector<IntervalRow> boxes, int n) {
  std::erase_if(boxes, [](const IntervalRow& b) {
    return std::any_of(b.begin(), b.end(),
                       [](const Interval& i) { return i.empty(); });
  });
  if (boxes.empty()) return {};

  std::vector<IntervalRow> out;
  if (n == 1) {
    std::vector<Interval> ivs;
    ivs.reserve(boxes.size());
    for (const auto& b : boxes) ivs.push_back(b[0]);
    std::sort(ivs.begin(), ivs.end());
    Interval cur = ivs[0];
    for (std::size_t i = 1; i < ivs.size(); ++i) {
      if (ivs[i].lo <= cur.hi.succ()) {
        cur.hi = std::max(cur.hi, ivs[i].hi);
      } else {
        out.push_back({cur});
        cur = ivs[i];
      }
    }
    out.push_back({cur});
    return out;
  }

  std::set<long long> cuts;
  for (const auto& b : boxes) {
    if (b[0].lo.is_finite()) cuts.insert(b[0].lo.value());
    if (b[0].hi.is_finite()) cuts.insert(b[0].hi.value() + 1);
  }
  std::vector<Interval> elems;
  ExtInt prev = ExtInt::neg_inf();
  for (long long c : cuts) {
    Interval e{prev, ExtInt(c - 1)};
    if (!e.empty()) elems.push_back(e);
    prev = ExtInt(c);
  }
  elems.push_back({prev, ExtInt::pos_inf()});

  std::vector<std::pair<Interval, std::vector<IntervalRow>>> slabs;
  for (const Interval& e : elems) {
    std::vector<IntervalRow> tails;
    for (const auto& b : boxes) {
      if (b[0].contains(e)) tails.emplace_back(b.begin() + 1, b.end());
    }
    std::vector<IntervalRow> fiber = canon(std::move(tails), n - 1);
    if (!slabs.empty() && slabs.back().second == fiber) {
      slabs.back().first.hi = e.hi;
    } else {
      slabs.emplace_back(e, std::move(fiber));
    }
  }
  for (const auto& [slab, fiber] : slabs) {
    for (const IntervalRow& f : fiber) {
      IntervalRow row;
      row.reserve(static_cast<std::size_t>(n));
      row.push_back(slab);
      row.insert(row.end(), f.begin(), f.end());
      out.push_back(std::move(row));
    }
  }
  std::sort(out.begin(), out.end(), box_less);
  return out;
}

}  // namespace

Spectrum::Spectrum(int dim) : dim_(dim) {
  if (dim < 1) throw ValidationError("spectrum dimension must be >= 1");
}

Spectrum Spectrum::from_boxes(int dim, std::vector<LatticeBox> boxes) {
  Spectrum s(dim);
  std::vector<IntervalRow> rows;
  rows.reserve(boxes.size());
  for (LatticeBox& b : boxes) {
    if (b.dim() != dim) throw DimensionError("box/spectrum dimension mismatch");
    for (const Interval& i : b.iv) {
      if (i.lo.is_pos_inf() || i.hi.is_neg_inf()) {
        throw ValidationError("lattice box endpoint out of range");
      }
    }
    rows.push_back(std::move(b.iv));
  }
  for (IntervalRow& r : canon(std::move(rows), dim)) {
    s.boxes_.push_back(LatticeBox{std::move(r)});
  }
  return s;
}

Spectrum Spectrum::full(int dim) {
  LatticeBox b;
  b.iv.assign(static_cast<std::size_t>(dim),
              Interval{ExtInt::neg_inf(), ExtInt::pos_inf()});
  return from_boxes(dim, {b});
}

Spectrum Spectrum::product(const Spectrum& a, const Spectrum& b) {
  std::vector<LatticeBox> boxes;
  for (const LatticeBox& x : a.boxes_) {
    for (const LatticeBox& y : b.boxes_) {
      LatticeBox p;
      p.iv = x.iv;
      p.iv.insert(p.iv.end(), y.iv.begin(), y.iv.end());
      boxes.push_back(std::move(p));
    }
  }
  return from_boxes(a.dim_ + b.dim_, std::move(boxes));
}

bool Spectrum::contains(std::span<const long long> p) const {
  return std::any_of(boxes_.begin(), boxes_.end(),
                     [&](const LatticeBox& b) { return b.contains(p); });
}

bool Spectrum::subset_of(const Spectrum& other) const {
  return difference(*this, other).empty();
}

Spectrum Spectrum::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != dim_) {
    throw DimensionError("permutation size mismatch");
  }
  std::vector<LatticeBox> boxes;
  boxes.reserve(boxes_.size());
  for (const LatticeBox& b : boxes_) {
    LatticeBox q;
    q.iv.resize(b.iv.size());
    for (int i = 0; i < dim_; ++i) q.iv[static_cast<std::size_t>(i)] = b.iv[static_cast<std::size_t>(perm[i])];
    boxes.push_back(std::move(q));
  }
  return from_boxes(dim_, std::move(boxes));
}

std::vector<std::vector<long long>> Spectrum::enumerate_window(int W) const {
  if (W < 1) throw ValidationError("window must be >= 1");
  std::vector<std::vector<long long>> pts;
  std::vector<long long> p(static_cast<std::size_t>(dim_), -W);
  while (true) {
    if (contains(p)) pts.push_back(p);
    int i = dim_ - 1;
    while (i >= 0 && p[static_cast<std::size_t>(i)] == W) {
      p[static_cast<std::size_t>(i)] = -W;
      --i;
    }
    if (i < 0) break;
    ++p[static_cast<std::size_t>(i)];
  }
  return pts;
}

Spectrum Spectrum::window(int W) const {
  LatticeBox w;
  w.iv.assign(static_cast<std::size_t>(dim_), Interval{ExtInt(-W), ExtInt(W)});
  return intersect(*this, from_boxes(dim_, {w}));
}

Spectrum canonicalize(const Spectrum& s) { return s; }

Spectrum intersect(const Spectrum& a, const Spectrum& b) {
  if (a.dim() != b.dim()) throw DimensionError("spectrum dimension mismatch");
  std::vector<LatticeBox> boxes;
  for (const LatticeBox& x : a.boxes()) {
    for (const LatticeBox& y : b.boxes()) {
      LatticeBox c;
      c.iv.resize(x.iv.size());
      bool ok = true;
      for (std::size_t i = 0; i < x.iv.size(); ++i) {
        c.iv[i] = {std::max(x.iv[i].lo, y.iv[i].lo),
                   std::min(x.iv[i].hi, y.iv[i].hi)};
        if (c.iv[i].empty()) {
          ok = false;
          break;
        }
      }
      if (ok) boxes.push_back(std::move(c));
    }
  }
  return Spectrum::from_boxes(a.dim(), std::move(boxes));
}

Spectrum unite(const Spectrum& a, const Spectrum& b) {
  if (a.dim() != b.dim()) throw DimensionError("spectrum dimension mismatch");
  std::vector<LatticeBox> boxes = a.boxes();
  boxes.insert(boxes.end(), b.boxes().begin(), b.boxes().end());
  return Spectrum::from_boxes(a.dim(), std::move(boxes));
}

namespace {

// Pieces of A not meeting B, via per-axis slab splitting.
void subtract_box(const LatticeBox& A, const LatticeBox& B,
                  std::vector<LatticeBox>& out) {
  for (std::size_t i = 0; i < A.iv.size(); ++i) {
    Interval meet{std::max(A.iv[i].lo, B.iv[i].lo),
                  std::min(A.iv[i].hi, B.iv[i].hi)};
    if (meet.empty()) {
      out.push_back(A);
      return;
    }
  }
  LatticeBox rest = A;
  for (std::size_t i = 0; i < A.iv.size(); ++i) {
    if (B.iv[i].lo > rest.iv[i].lo) {
      LatticeBox left = rest;
      left.iv[i].hi = B.iv[i].lo.pred();
      out.push_back(std::move(left));
    }
    if (B.iv[i].hi < rest.iv[i].hi) {
      LatticeBox right = rest;
      right.iv[i].lo = B.iv[i].hi.succ();
      out.push_back(std::move(right));
    }
    rest.iv[i].lo = std::max(rest.iv[i].lo, B.iv[i].lo);
    rest.iv[i].hi = std::min(rest.iv[i].hi, B.iv[i].hi);
  }
}

}  // namespace

Spectrum difference(const Spectrum& a, const Spectrum& b) {
  if (a.dim() != b.dim()) throw DimensionError("spectrum dimension mismatch");
  std::vector<LatticeBox> cur = a.boxes();
  for (const LatticeBox& bb : b.boxes()) {
    std::vector<LatticeBox> next;
    for (const LatticeBox& ab : cur) subtract_box(ab, bb, next);
    cur = std::move(next);
  }
  return Spectrum::from_boxes(a.dim(), std::move(cur));
}

}  // namespace hartogs
