#pragma once

// JSON encodings of the library types.  Parsing errors surface as
// Error(ParseError) with the offending key in the message.

#include <json.hpp>

#include "schurpath/identities.hpp"
#include "schurpath/lattice_path.hpp"
#include "schurpath/overlay.hpp"
#include "schurpath/partition.hpp"
#include "schurpath/polynomial.hpp"
#include "schurpath/tableau.hpp"

namespace schurpath {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const SkewShape& s);
Json to_json(const StripSpec& s);
Json to_json(const Tableau& t);
Json to_json(const PathFamily& f);
Json to_json(const Overlay& ov);
Json to_json(const Polynomial& p);
Json to_json(const Term& t);  ///< [shapeA, shapeB], or null for a zero term
Json to_json(const Identity& id);
Json to_json(const BoundaryPoint& p, int top);  ///< [x, level]
Json to_json(const BicolouredPath& b, int top);
/// `timing` adds elapsed_ms, which is not reproducible between runs.
Json to_json(const VerificationReport& r, bool timing = false);

Partition partition_from_json(const Json& j);
SkewShape skew_shape_from_json(const Json& j);
StripSpec strip_from_json(const Json& j);
Tableau tableau_from_json(const Json& j);
PathFamily path_family_from_json(const Json& j);
Overlay overlay_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);

std::string_view to_string(VerificationMethod m);

}  // namespace schurpath
