#pragma once

#include <json.hpp>

#include "qreg/codes.hpp"
#include "qreg/designs.hpp"
#include "qreg/regularity.hpp"

namespace qreg {

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using nlohmann::json;

// QuadNum <-> 5-tuple of integers (a_num, a_den, b_num, b_den, D).
json quadnum_to_json(const QuadNum& q);
QuadNum quadnum_from_json(const json& j);

json gram_to_json(const GramSet& x);
GramSet gram_from_json(const json& j);

json scheme_to_json(const AssociationScheme& s);
/// Rebuilds and re-verifies from the relation table; recorded valencies
/// must match the recomputed ones.
AssociationScheme scheme_from_json(const json& j);

json design_to_json(const SymmetricDesign& d);
/// Re-verifies; recorded (k, lambda) must match.
SymmetricDesign design_from_json(const json& j);

json lsd_to_json(const LinkedSystem& sys);
LinkedSystem lsd_from_json(const json& j);

json mub_to_json(const MUBSet& m);
MUBSet mub_from_json(const json& j);

json cc_to_json(const CoherentConfiguration& cc);
CoherentConfiguration cc_from_json(const json& j);

json regularity_report_to_json(const RegularityReport& r, bool include_tensor = false);

/// FNV-1a hash over the canonical tensor serialization.
std::string tensor_digest(const RegularityReport& r);

void write_code_file(const BinaryCode& c, const std::string& path);
BinaryCode read_code_file(const std::string& path);

json read_json_file(const std::string& path);
void write_json_file(const json& j, const std::string& path);

}  // namespace qreg
