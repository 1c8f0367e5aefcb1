#pragma once

#include <string_view>

#include <json.hpp>

#include "braidlab/adjacency.hpp"
#include "braidlab/closure.hpp"
#include "braidlab/cobordism.hpp"
#include "braidlab/piecewise.hpp"

namespace braidlab {

/// Keys keep insertion order so output follows the documented schemas.
using Json = nlohmann::ordered_json;

/// "p/q", also for integers ("3/1").
Json as_json(const Rational& r);
/// {"exponent": coefficient}; coefficients beyond 64 bits become strings.
Json as_json(const LaurentPoly& p);
Json as_json(const PiecewiseLinear& f);
Json as_json(const BraidWord& w);
Json as_json(const BraidMove& mv);
Json as_json(const ClosureFingerprint& fp);
Json as_json(const DistanceResult& d);
Json as_json(const TorusClaim& c);
Json as_json(const AdjacencyCertificate& cert);
Json as_json(const Verdict& v);

/// Certificate file layout: one top-level field or step per line.
std::string certificate_text(const AdjacencyCertificate& cert);

/// The readers throw ParseError on any structural problem.
BraidWord word_from_json(const Json& j);
BraidMove move_from_json(const Json& j);
TorusClaim claim_from_json(const Json& j);
AdjacencyCertificate certificate_from_json(const Json& j);
AdjacencyCertificate parse_certificate(std::string_view text);

}  // namespace braidlab
