#ifndef HCOVER_JSON_IO_HPP
#define HCOVER_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "hcover/covering.hpp"

namespace hcover {

// All reals are serialized as decimal strings with 17 significant digits;
// rationals as integer pairs.
std::string format_real(double v);
double parse_real(const nlohmann::json& j);

nlohmann::json polytope_to_json(const PolytopeV& poly);
PolytopeV polytope_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const CoveringCertificate& cert);
// Reconstructs q_centers from (lift_kind, m, k); the stored center list
// must match the regenerated count.
CoveringCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const DecompositionResult& d);
nlohmann::json verification_to_json(const VerificationReport& r);
nlohmann::json bound_report_to_json(const BoundReport& r);

}  // namespace hcover

#endif
