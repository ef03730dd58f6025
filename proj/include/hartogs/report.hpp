#pragma once

#include <json.hpp>

#include "hartogs/cech.hpp"
#include "hartogs/envelope.hpp"
#include "hartogs/pairs.hpp"

namespace hartogs {

using Json = nlohmann::ordered_json;

// Radii serialize as exact fraction strings ("1/2", "inf"); log-space
// numbers as doubles. Spectra serialize as box lists with "-inf"/"inf"
// endpoint sentinels.
Json to_json(const Radius& r);
Json to_json(const Factor1D& f);
Json to_json(const ReinhardtBoxDomain& d);
Json to_json(const Spectrum& s);
Json to_json(const LaurentModel& m);
Json to_json(const PairClass& p);
Json to_json(const CohomologyReport& r);
Json to_json(const SteinCertificate& c);

}  // namespace hartogs
