#pragma once

#include <json.hpp>

#include "kfrob/kring.hpp"

namespace kfrob {

// {"factors":[n...],"l":l|null,"k":k|null,
//  "terms":[{"idx":[i...],"chi":c,"num":...,"den":...}]}
// num/den are JSON integers when they fit in 64 bits, decimal strings
// otherwise.  Terms are emitted in basis order, so equal elements serialize
// to identical bytes.
nlohmann::json to_json(const KElement& x);
nlohmann::json to_json(const RingDescriptor& ring);

KElement kelement_from_json(const nlohmann::json& j);
RingDescriptor ring_from_json(const nlohmann::json& j);

}  // namespace kfrob
