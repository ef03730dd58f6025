#include "hartogs/cech.hpp"

#include <algorithm>

#include "hartogs/envelope.hpp"

namespace hartogs {

std::string to_string(CohomClass c) {
  switch (c) {
    case CohomClass::Zero: return "zero";
    case CohomClass::Indiscrete: return "indiscrete";
    case CohomClass::Hausdorff: return "hausdorff";
    case CohomClass::Mixed: return "mixed";
  }
  return "?";
}

std::string to_string(Cardinality c) {
  return c == Cardinality::Zero ? "zero" : "uncountable";
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

LaurentModel tensor(const LaurentModel& a, const LaurentModel& b) {
  return LaurentModel{Spectrum::product(a.spectrum, b.spectrum),
                      ReinhardtBoxDomain::product(a.convergence, b.convergence)};
}

LaurentModel full_model(const ReinhardtBoxDomain& d) {
  return LaurentModel{spectrum_of(d), d};
}

/// Moves the trailing `tail` coordinates to the front.
LaurentModel swap_blocks(const LaurentModel& m, int lead, int tail) {
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(lead + tail));
  for (int i = 0; i < tail; ++i) perm.push_back(lead + i);
  for (int i = 0; i < lead; ++i) perm.push_back(i);
  LaurentModel out{m.spectrum.permuted(perm), {}};
  out.convergence.factors.reserve(m.convergence.factors.size());
  for (int i : perm) {
    out.convergence.factors.push_back(
        m.convergence.factors[static_cast<std::size_t>(i)]);
  }
  return out;
}

void add_pair_rule(CohomologyReport& r, const char* side, const PairClass& pc) {
  r.justification.push_back(
      {pc.witness_rule, std::string("(") + side + "0," + side + ") is " +
                            to_string(pc.tag),
       std::string("factor pair on the ") + side + " side classified as " +
           to_string(pc.tag)});
}

CohomologyReport cohomology01(const HartogsFigure& h) {
  CohomologyReport r;
  r.p = 0;
  r.q = 1;

  PairClass cx = classify(h.X0, h.X);
  PairClass cy = classify(h.Y0, h.Y);
  if (cx.tag == PairTag::Unsupported) {
    throw UnsupportedError("pair (X0,X) unsupported: " + cx.detail);
  }
  if (cy.tag == PairTag::Unsupported) {
    throw UnsupportedError("pair (Y0,Y) unsupported: " + cy.detail);
  }

  // The split pair must come first; swapping the roles transposes the two
  // coordinate blocks of every model, undone at the end.
  bool swapped = false;
  const ReinhardtBoxDomain* Y = &h.Y;
  const ReinhardtBoxDomain* Y0 = &h.Y0;
  if (cx.tag != PairTag::Split && cy.tag == PairTag::Split) {
    std::swap(cx, cy);
    Y = &h.X;
    Y0 = &h.X0;
    swapped = true;
  }
  add_pair_rule(r, swapped ? "Y" : "X", cx);
  add_pair_rule(r, swapped ? "X" : "Y", cy);

  if (cx.tag == PairTag::Split) {
    const LaurentModel& Qx = *cx.complement;
    if (cy.tag == PairTag::Runge) {
      r.cls = CohomClass::Indiscrete;
      r.indiscrete = {tensor(Qx, full_model(*Y0)),
                      tensor(Qx, full_model(*Y))};
      r.justification.push_back(
          {"R-SPLIT-RUNGE",
           "H01 = (Q tensor O(Y0)) / (Q tensor O(Y))|",
           "split tensor Runge: dense denominator, indiscrete quotient of "
           "uncountable dimension"});
    } else if (cy.tag == PairTag::Split) {
      r.cls = CohomClass::Hausdorff;
      r.reduced = tensor(Qx, *cy.complement);
      r.justification.push_back(
          {"R-SPLIT-SPLIT", "H01 = Q(X0,X) tensor Q(Y0,Y)",
           "two split pairs: Hausdorff cohomology modeled by the product of "
           "the complement spaces"});
    } else {  // QuasiSplit
      r.cls = CohomClass::Mixed;
      r.reduced = tensor(Qx, *cy.complement);
      r.indiscrete = {tensor(Qx, *cy.closure_of_restriction),
                      tensor(Qx, full_model(*Y))};
      r.justification.push_back(
          {"R-SPLIT-QSPLIT",
           "H01 = (Q tensor Qr) + (Q tensor closure O(Y)|Y0) / (Q tensor "
           "O(Y))|",
           "split tensor quasi-split: nonzero Hausdorff part plus an "
           "indiscrete dense-quotient part"});
    }
  } else if (cx.tag == PairTag::Runge || cy.tag == PairTag::Runge) {
    r.cls = CohomClass::Indiscrete;
    r.justification.push_back(
        {"R-RUNGE-ANY",
         "exact cochains dense in closed cochains; nonzero since H is not "
         "Stein and its factors are planar products",
         "a Runge pair and no split pair: indiscrete cohomology of "
         "uncountable dimension; no finer quotient model is determined"});
  } else {
    throw UnsupportedError(
        "no decision rule for pair classes " + to_string(cx.tag) + " / " +
        to_string(cy.tag));
  }

  if (swapped) {
    const int lead = h.Y.dim();
    const int tail = h.X.dim();
    if (r.reduced) *r.reduced = swap_blocks(*r.reduced, lead, tail);
    if (r.indiscrete) {
      r.indiscrete->first = swap_blocks(r.indiscrete->first, lead, tail);
      r.indiscrete->second = swap_blocks(r.indiscrete->second, lead, tail);
    }
  }
  r.cardinality = Cardinality::Uncountable;
  return r;
}

}  // namespace

CohomologyReport cohomology(const HartogsFigure& h, int p, int q) {
  h.check_valid();
  const int N = h.dim();
  if (q < 0) throw ValidationError("q must be nonnegative");
  if (p < 0 || p > N) throw ValidationError("p out of range");

  if (q > 1) {
    CohomologyReport r;
    r.p = p;
    r.q = q;
    r.cls = CohomClass::Zero;
    r.cardinality = Cardinality::Zero;
    r.multiplicity = binomial(N, p);
    r.justification.push_back(
        {"R-VANISH", "two-element Stein cover has no q-cochains for q > 1",
         "cohomology vanishes in degree q > 1"});
    return r;
  }
  if (q == 0) {
    CohomologyReport r;
    r.p = p;
    r.q = 0;
    r.cls = CohomClass::Hausdorff;
    r.cardinality = Cardinality::Uncountable;
    r.multiplicity = binomial(N, p);
    ReinhardtBoxDomain env = envelope_box(h);
    r.reduced = LaurentModel{spectrum_of(env), env};
    r.justification.push_back(
        {"R-H0", "O(H) = O(envelope): every function extends",
         "informational: global sections form the Frechet space of functions "
         "on the envelope"});
    return r;
  }

  CohomologyReport r = cohomology01(h);
  r.p = p;
  r.multiplicity = binomial(N, p);
  if (p > 0) {
    r.justification.push_back(
        {"R-MULT", "H(p,1) = C(N,p) copies of H(0,1)",
         "holomorphic p-forms split as " + std::to_string(r.multiplicity) +
             " copies of the functions sheaf"});
  }
  return r;
}

Spectrum graded_reduced_spectrum(const HartogsFigure& h, int W) {
  h.check_valid();
  if (W < 1) throw ValidationError("window must be >= 1");
  const int n = h.dim();
  const int m = h.X.dim();

  // Direct per-factor boundedness: a monomial lives on the domain iff no
  // disc factor carries a negative exponent.
  const auto ok = [&](const std::vector<const Factor1D*>& fs,
                      std::span<const long long> a) {
    for (int i = 0; i < n; ++i) {
      if (fs[static_cast<std::size_t>(i)]->kind == Factor1D::Kind::Disc &&
          a[static_cast<std::size_t>(i)] < 0) {
        return false;
      }
    }
    return true;
  };
  std::vector<const Factor1D*> u1, u2, u12;
  for (int i = 0; i < m; ++i) {
    u1.push_back(&h.X0.factors[static_cast<std::size_t>(i)]);
    u2.push_back(&h.X.factors[static_cast<std::size_t>(i)]);
    u12.push_back(&h.X0.factors[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < h.Y.dim(); ++i) {
    u1.push_back(&h.Y.factors[static_cast<std::size_t>(i)]);
    u2.push_back(&h.Y0.factors[static_cast<std::size_t>(i)]);
    u12.push_back(&h.Y0.factors[static_cast<std::size_t>(i)]);
  }

  std::vector<LatticeBox> points;
  std::vector<long long> a(static_cast<std::size_t>(n), -W);
  while (true) {
    if (ok(u12, a) && !ok(u1, a) && !ok(u2, a)) {
      LatticeBox b;
      for (long long v : a) b.iv.push_back({ExtInt(v), ExtInt(v)});
      points.push_back(std::move(b));
    }
    int i = n - 1;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == W) {
      a[static_cast<std::size_t>(i)] = -W;
      --i;
    }
    if (i < 0) break;
    ++a[static_cast<std::size_t>(i)];
  }
  return Spectrum::from_boxes(n, std::move(points));
}

std::vector<JustificationEntry> justification_trail(
    const CohomologyReport& report) {
  return report.justification;
}

}  // namespace hartogs
