#pragma once

#include <json.hpp>

#include "swdeg/equivariant.hpp"
#include "swdeg/verify.hpp"

namespace swdeg {

// Integer coefficients are serialized as decimal strings (they outgrow any
// fixed-width JSON number); the parsers accept strings or plain numbers.

nlohmann::json group_to_json(const Group& group);
/// Abelian groups only: a tabled group cannot be reconstructed from its
/// name/order summary.
Group group_from_json(const nlohmann::json& j);

nlohmann::json pin2_to_json(const Pin2Elem& p);
Pin2Elem pin2_from_json(const nlohmann::json& j);

nlohmann::json equiv_to_json(const EquivElem& x);
EquivElem equiv_from_json(const nlohmann::json& j);

nlohmann::json vr_to_json(const VirtualRep& v);
VirtualRep vr_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

}  // namespace swdeg
