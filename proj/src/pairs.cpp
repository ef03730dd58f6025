#include "hartogs/pairs.hpp"

#include <algorithm>

namespace hartogs {

std::string to_string(PairTag t) {
  switch (t) {
    case PairTag::Runge: return "runge";
    case PairTag::Split: return "split";
    case PairTag::QuasiSplit: return "quasi-split";
    case PairTag::Unsupported: return "unsupported";
  }
  return "?";
}

namespace {

Spectrum negative_axis() {
  LatticeBox b;
  b.iv.push_back({ExtInt::neg_inf(), ExtInt(-1)});
  return Spectrum::from_boxes(1, {b});
}

ReinhardtBoxDomain single(const Factor1D& f) {
  return ReinhardtBoxDomain{{f}};
}

void check_pre(const ReinhardtBoxDomain& Z0, const ReinhardtBoxDomain& Z) {
  Z0.check_valid();
  Z.check_valid();
  if (!contains(Z0, Z)) throw ValidationError("pair requires Z0 contained in Z");
  if (Z0 == Z) throw ValidationError("pair requires Z0 != Z");
}

}  // namespace

PairClass classify_pair(const ReinhardtBoxDomain& Z0,
                        const ReinhardtBoxDomain& Z) {
  check_pre(Z0, Z);
  if (Z0.dim() != 1) {
    throw ValidationError("classify_pair handles 1-D pairs only");
  }
  const Factor1D& f0 = Z0.factors[0];
  const Factor1D& f = Z.factors[0];
  using K = Factor1D::Kind;

  PairClass pc;
  if (f0.kind == K::Disc && f.kind == K::Disc) {
    // Polynomials are dense in both discs.
    pc.tag = PairTag::Runge;
    pc.witness_rule = "P-RUNGE-DISCS";
    pc.closure_of_restriction = LaurentModel{spectrum_of(Z0), Z0};
    return pc;
  }
  if (f0.kind == K::Annulus && f.kind == K::Disc) {
    LaurentModel complement{
        negative_axis(),
        single(Factor1D::annulus(f0.inner, Radius::inf()))};
    LaurentModel closure{spectrum_of(Z), single(Factor1D::disc(f0.outer))};
    if (f0.outer == f.outer) {
      pc.tag = PairTag::Split;
      pc.witness_rule = "P-SPLIT-ANNULUS-DISC";
    } else {
      // Factor through the intermediate disc of radius f0.outer: the pair
      // (annulus, that disc) is split and (that disc, Z) is Runge.
      pc.tag = PairTag::QuasiSplit;
      pc.witness_rule = "P-QSPLIT-ANNULUS-DISC";
    }
    pc.complement = std::move(complement);
    pc.closure_of_restriction = std::move(closure);
    return pc;
  }
  if (f0.kind == K::Annulus && f.kind == K::Annulus) {
    // Laurent polynomials are dense in both annuli.
    pc.tag = PairTag::Runge;
    pc.witness_rule = "P-RUNGE-ANNULI";
    pc.closure_of_restriction = LaurentModel{spectrum_of(Z0), Z0};
    return pc;
  }
  // Disc inside annulus cannot pass the containment precondition.
  pc.tag = PairTag::Unsupported;
  pc.detail = "no rule for this factor shape combination";
  return pc;
}

PairClass classify_product_pair(const ReinhardtBoxDomain& Z0,
                                const ReinhardtBoxDomain& Z) {
  check_pre(Z0, Z);
  if (Z0.dim() == 1) return classify_pair(Z0, Z);

  enum class Rel { Equal, Runge, Split, QuasiSplit, Unsupported };
  std::vector<Rel> rels;
  std::vector<PairClass> parts;
  for (int i = 0; i < Z0.dim(); ++i) {
    ReinhardtBoxDomain a = single(Z0.factors[static_cast<std::size_t>(i)]);
    ReinhardtBoxDomain b = single(Z.factors[static_cast<std::size_t>(i)]);
    if (a == b) {
      rels.push_back(Rel::Equal);
      parts.emplace_back();
      continue;
    }
    PairClass p = classify_pair(a, b);
    switch (p.tag) {
      case PairTag::Runge: rels.push_back(Rel::Runge); break;
      case PairTag::Split: rels.push_back(Rel::Split); break;
      case PairTag::QuasiSplit: rels.push_back(Rel::QuasiSplit); break;
      default: rels.push_back(Rel::Unsupported); break;
    }
    parts.push_back(std::move(p));
  }

  const auto count = [&](Rel r) {
    return std::count(rels.begin(), rels.end(), r);
  };
  PairClass pc;
  if (count(Rel::Unsupported) > 0 || count(Rel::QuasiSplit) > 0 ||
      (count(Rel::Runge) > 0 && count(Rel::Split) > 0)) {
    pc.tag = PairTag::Unsupported;
    pc.detail = "mixed factor classifications in product pair";
    return pc;
  }
  if (count(Rel::Runge) > 0) {
    pc.tag = PairTag::Runge;
    pc.witness_rule = "P-PRODUCT-RUNGE";
    pc.closure_of_restriction = LaurentModel{spectrum_of(Z0), Z0};
    return pc;
  }
  // All proper factors split, the rest equal.
  Spectrum comp_spec(1);
  ReinhardtBoxDomain comp_conv;
  bool first = true;
  for (int i = 0; i < Z0.dim(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    Spectrum fs(1);
    Factor1D fc = Z0.factors[idx];
    if (rels[idx] == Rel::Split) {
      fs = parts[idx].complement->spectrum;
      fc = parts[idx].complement->convergence.factors[0];
    } else {
      fs = spectrum_of(single(Z0.factors[idx]));
    }
    comp_spec = first ? fs : Spectrum::product(comp_spec, fs);
    comp_conv.factors.push_back(fc);
    first = false;
  }
  pc.tag = PairTag::Split;
  pc.witness_rule = "P-PRODUCT-SPLIT";
  pc.complement = LaurentModel{std::move(comp_spec), std::move(comp_conv)};
  pc.closure_of_restriction = LaurentModel{spectrum_of(Z), Z};
  return pc;
}

PairClass classify(const ReinhardtBoxDomain& Z0, const ReinhardtBoxDomain& Z) {
  return Z0.dim() == 1 ? classify_pair(Z0, Z) : classify_product_pair(Z0, Z);
}

}  // namespace hartogs
