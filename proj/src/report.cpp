#include "hartogs/report.hpp"

#include <cmath>
#include <cstdio>

namespace hartogs {

namespace {

// 12 significant digits for log-space floats.
Json round12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return Json::parse(buf, nullptr, false).is_discarded() ? Json(v)
                                                         : Json::parse(buf);
}

}  // namespace

Json to_json(const Radius& r) { return to_string(r); }

Json to_json(const Factor1D& f) {
  Json j;
  if (f.kind == Factor1D::Kind::Disc) {
    j["kind"] = "disc";
    j["outer"] = to_json(f.outer);
  } else {
    j["kind"] = "annulus";
    j["inner"] = to_json(f.inner);
    j["outer"] = to_json(f.outer);
  }
  return j;
}

Json to_json(const ReinhardtBoxDomain& d) {
  Json j = Json::array();
  for (const Factor1D& f : d.factors) j.push_back(to_json(f));
  return j;
}

Json to_json(const Spectrum& s) {
  Json boxes = Json::array();
  for (const LatticeBox& b : s.boxes()) {
    Json lo = Json::array(), hi = Json::array();
    for (const Interval& iv : b.iv) {
      lo.push_back(to_string(iv.lo));
      hi.push_back(to_string(iv.hi));
    }
    boxes.push_back(Json{{"lo", lo}, {"hi", hi}});
  }
  return Json{{"dim", s.dim()}, {"boxes", boxes}};
}

Json to_json(const LaurentModel& m) {
  return Json{{"spectrum", to_json(m.spectrum)},
              {"convergence", to_json(m.convergence)}};
}

Json to_json(const PairClass& p) {
  Json j;
  j["tag"] = to_string(p.tag);
  j["witness_rule"] = p.witness_rule;
  if (p.complement) j["complement"] = to_json(*p.complement);
  if (p.closure_of_restriction) {
    j["closure_of_restriction"] = to_json(*p.closure_of_restriction);
  }
  if (!p.detail.empty()) j["detail"] = p.detail;
  return j;
}

Json to_json(const CohomologyReport& r) {
  Json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["class"] = to_string(r.cls);
  j["cardinality"] = to_string(r.cardinality);
  j["multiplicity"] = r.multiplicity;
  if (r.reduced) j["reduced"] = to_json(*r.reduced);
  if (r.indiscrete) {
    j["indiscrete"] = Json{{"numerator", to_json(r.indiscrete->first)},
                           {"denominator", to_json(r.indiscrete->second)}};
  }
  Json trail = Json::array();
  for (const JustificationEntry& e : r.justification) {
    trail.push_back(
        Json{{"rule", e.rule}, {"anchor", e.anchor}, {"statement", e.statement}});
  }
  j["justification"] = trail;
  return j;
}

Json to_json(const SteinCertificate& c) {
  Json j;
  j["is_stein"] = c.is_stein;
  Json ep = Json::array();
  for (const Rational& r : c.extension_point) ep.push_back(to_string(r));
  j["extension_point"] = ep;
  j["envelope"] = to_json(c.envelope);
  j["envelope_is_box"] = c.envelope_is_box;
  Json hps = Json::array();
  for (const Halfplane& h : c.hull.halfplanes) {
    hps.push_back(Json{{"a", Json::array({round12(h.a1), round12(h.a2)})},
                       {"c", round12(h.c)}});
  }
  j["hull_halfplanes"] = hps;
  if (c.witness) {
    j["witness"] =
        Json::array({round12((*c.witness)[0]), round12((*c.witness)[1])});
  }
  return j;
}

}  // namespace hartogs
