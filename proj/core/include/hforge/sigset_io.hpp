#pragma once

#include <string>

#include "hforge/finite_group.hpp"
#include "hforge/signatures.hpp"

namespace hforge {

/// Carrier specs: "abelian:a1,a2,..." (abelian_group with those orders) or
/// any builder expression accepted by parse_group_expression.
FiniteGroup group_from_spec(const std::string& spec);

/// JSON object {carrier, basis, blocks: [{index, coeffs}]}; basis entries and
/// coefficients are element-indexed, so a load/save round trip is exact.
std::string signature_set_to_json(const SignatureSet& s, const std::string& carrier_spec);

struct LoadedSignatureSet {
  std::string carrier_spec;
  SignatureSet set;
};
/// Parses and verifies every block. Throws Error(parse) or Error(verification).
LoadedSignatureSet signature_set_from_json(const std::string& text);

}  // namespace hforge
