#pragma once

// JSON encodings for the command line tool and reports. Scalars and
// rationals are written as canonical text; matrix entries as integers when
// they are integral.

#include <string>
#include <vector>

#include "json.hpp"

#include "hnq/grid.hpp"
#include "hnq/ladder.hpp"
#include "hnq/suites.hpp"
#include "hnq/zigzag.hpp"

namespace hnq {

using Json = nlohmann::ordered_json;

/// {"vertices":[..], "edges":[{"src","tgt","label"}], "family":{..}}. The
/// family entry is optional on input; when present the quiver is rebuilt
/// from it and compared with the listed vertices and edges.
Json to_json(const Quiver& q);
QuiverPtr quiver_from_json(const Json& j);

/// {"quiver", "field", "spaces":{vertex:dim}, "maps":{label:[[row]..]}}.
/// Matrices are target x source.
Json to_json(const Representation& v);
Representation representation_from_json(const Json& j);

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

/// {vertex: "value"}.
Json to_json(const CentralCharge& alpha, const Quiver& q);
CentralCharge charge_from_json(const Json& j, const Quiver& q);

/// [{"slope", "dimvec":{vertex:n}}] in descending slope order.
Json to_json(const HNType& hn, const Quiver& q);
HNType hn_type_from_json(const Json& j, const Quiver& q);

Json to_json(const Barcode& b);
Barcode barcode_from_json(const Json& j);

Json to_json(const Rectangle& r);
Rectangle rectangle_from_json(const Json& j);
Json to_json(const RectangleMultiset& m);
RectangleMultiset rectangles_from_json(const Json& j);

Json to_json(const LadderIndec& i);
LadderIndec ladder_indec_from_json(const Json& j);
Json to_json(const LadderMultiset& m);
LadderMultiset ladder_multiset_from_json(const Json& j);

/// [{"k", "S":[vertex..], "charge":{..}, "lambda":[{"k","lambda"}..]}].
Json charge_family_json(int length);

Json to_json(const InfeasibilityReport& r);
Json to_json(const SuiteReport& r);

}  // namespace hnq
