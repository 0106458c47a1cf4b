#pragma once

// JSON encodings of the library's value types. Rationals are written as
// strings ("-81/8") so that nothing is lost; on input plain JSON integers
// are accepted too.

#include <json.hpp>

#include "twist8/cocycle/lemmas.hpp"
#include "twist8/cocycle/sign_action.hpp"
#include "twist8/congruence/report.hpp"
#include "twist8/elliptic/curve.hpp"
#include "twist8/elliptic/reduction.hpp"
#include "twist8/search/sweep.hpp"
#include "twist8/twists/oracle.hpp"
#include "twist8/twists/system.hpp"

namespace twist8 {

using Json = nlohmann::ordered_json;

/// Thrown for malformed documents.
struct JsonFormatError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Json encode(const Rational& x);
Json encode(const Curve& c);
Json encode(const X8Point& p);
Json encode(const ReductionInfo& r);
Json encode(const TwistSystem& s);
Json encode(const CongruenceRow& r);
Json encode(const ValuationNote& n);
Json encode(const CongruenceReport& r);
Json encode(const ResidueMatrix& m);
Json encode(const GroupLemmaReport& r);
Json encode(const SignActionRow& r);
Json encode(const SignActionReport& r);
Json encode(const OracleReport& r);
Json encode(const SweepHit& h);

Rational decode_rational(const Json& j);
Curve decode_curve(const Json& j);
X8Point decode_point(const Json& j);
ReductionInfo decode_reduction(const Json& j);
TwistSystem decode_system(const Json& j);
CongruenceRow decode_row(const Json& j);
ValuationNote decode_note(const Json& j);
CongruenceReport decode_report(const Json& j);
ResidueMatrix decode_matrix(const Json& j);
GroupLemmaReport decode_lemma_report(const Json& j);

/// Reads a Curve document from a file; throws JsonFormatError.
Curve read_curve_file(const std::string& path);

}  // namespace twist8
