#pragma once

#include <json.hpp>

#include <string>

#include "semiq/an.hpp"
#include "semiq/quiver.hpp"
#include "semiq/regular.hpp"
#include "semiq/repcore.hpp"
#include "semiq/siring.hpp"
#include "semiq/slice.hpp"
#include "semiq/types.hpp"

namespace semiq {

using Json = nlohmann::ordered_json;

// {"vertices": ["1","2",...], "arrows": [["1","2"], ...]}; arrow endpoints
// are vertex labels. All format violations raise InputError.
Quiver quiver_from_json(const Json& j);
Quiver load_quiver(const std::string& path);
Json quiver_to_json(const Quiver& q);

// "1,2,3" -> dimension vector; expected < 0 skips the length check.
DimVector parse_dim_csv(const std::string& text, int expected);

Json dim_to_json(const DimVector& v);
DimVector dim_from_json(const Json& j);

// {"dims":[...],"maps":[[row-major integers],...]}, arrows in quiver order.
Representation rep_from_json(const Quiver& q, const Json& j);
Json rep_to_json(const Representation& r);
Representation load_rep(const Quiver& q, const std::string& path);

Json decomposition_to_json(const Decomposition& d, const DimVector& delta);
Json regular_to_json(const RegularStructure& rs);
Json canonical_to_json(const CanonicalDecomp& cd);
Json an_to_json(const AnDecomposition& d);
Json ring_to_json(const RingReport& r);

}  // namespace semiq
