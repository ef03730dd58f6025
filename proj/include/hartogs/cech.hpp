#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hartogs/domains.hpp"
#include "hartogs/pairs.hpp"

namespace hartogs {

enum class CohomClass { Zero, Indiscrete, Hausdorff, Mixed };
enum class Cardinality { Zero, Uncountable };

std::string to_string(CohomClass c);
std::string to_string(Cardinality c);

struct JustificationEntry {
  std::string rule;       // e.g. "R-SPLIT-SPLIT"
  std::string anchor;     // the formula or fact the rule encodes
  std::string statement;  // one-line human-readable form
};

/// Result of the decision engine for one bidegree (p, q).
///
/// The indiscrete part, when present, is reported as a dense-quotient
/// presentation: a numerator model and the denominator model it is divided
/// by (the quotient itself carries the indiscrete topology and has no
/// elementwise model).
struct CohomologyReport {
  int p = 0;
  int q = 0;
  CohomClass cls = CohomClass::Zero;
  Cardinality cardinality = Cardinality::Zero;
  long long multiplicity = 1;  // binomial(dim H, p)
  std::optional<LaurentModel> reduced;
  std::optional<std::pair<LaurentModel, LaurentModel>> indiscrete;
  std::vector<JustificationEntry> justification;
};

long long binomial(int n, int k);

CohomologyReport cohomology(const HartogsFigure& h, int p, int q);

/// Independent graded oracle: monomials holomorphic on U12 but on neither
/// U1 nor U2, enumerated over the window [-W, W]^n by direct per-factor
/// boundedness tests (no spectrum algebra, no decision table).
Spectrum graded_reduced_spectrum(const HartogsFigure& h, int W);

std::vector<JustificationEntry> justification_trail(
    const CohomologyReport& report);

}  // namespace hartogs
