#pragma once

// JSON forms of the library's results. Arbitrary-precision integers are
// written as decimal strings.

#include <json.hpp>

#include "omega/dio/family.hpp"
#include "omega/dio/lab.hpp"
#include "omega/dyadic.hpp"
#include "omega/halting.hpp"
#include "omega/machine.hpp"
#include "omega/omega.hpp"
#include "omega/reductions.hpp"

namespace omega {

using Json = nlohmann::ordered_json;

Json to_json(const Program& p);
Json to_json(const RunOutcome& r);
Json to_json(const PassOutcome& r);
Json to_json(const HaltingVerdict& v);
Json to_json(const DyadicRational& d);
Json to_json(const DyadicInterval& i);
Json to_json(const OmegaBits& b);
Json to_json(const FlipCensus& f);
Json to_json(const TauBits& t);
Json to_json(const OracleLog& log);
/// {"k", "q", "bits", "query_count"} plus "queries" when with_log is set.
Json to_json(const ReductionResult& r, bool with_log);
Json to_json(const BaseDigits& r, bool with_log);

namespace dio {
Json to_json(const Family& f);
Json to_json(const SolutionSet& s, const Family& f);
Json to_json(const ParityCensus& c);
Json to_json(const FinitudeCensus& c);
}  // namespace dio

}  // namespace omega
