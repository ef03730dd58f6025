#pragma once

#include <optional>
#include <string>

#include "hartogs/domains.hpp"

namespace hartogs {

enum class PairTag { Runge, Split, QuasiSplit, Unsupported };

std::string to_string(PairTag t);

/// Classification of a Stein pair (Z0, Z) of Reinhardt box domains.
///
/// - Runge: restrictions are dense; closure_of_restriction is the full model
///   of O(Z0).
/// - Split: O(Z)|_{Z0} is closed with closed complement `complement`.
/// - QuasiSplit: neither dense nor closed; `complement` models the complement
///   of the closure, `closure_of_restriction` the closure itself (same
///   spectrum as O(Z), strictly smaller convergence domain than Z).
struct PairClass {
  PairTag tag = PairTag::Unsupported;
  std::optional<LaurentModel> complement;
  std::optional<LaurentModel> closure_of_restriction;
  std::string witness_rule;
  std::string detail;  // explanation for Unsupported
};

/// Decision table for 1-D pairs. Requires contains(Z0, Z) and Z0 != Z.
PairClass classify_pair(const ReinhardtBoxDomain& Z0,
                        const ReinhardtBoxDomain& Z);

/// Factorwise tensorization: all factors Runge-or-equal gives Runge, all
/// Split-or-equal gives Split with the product complement model; any other
/// mix is Unsupported.
PairClass classify_product_pair(const ReinhardtBoxDomain& Z0,
                                const ReinhardtBoxDomain& Z);

/// Dispatches on dimension.
PairClass classify(const ReinhardtBoxDomain& Z0, const ReinhardtBoxDomain& Z);

}  // namespace hartogs
