#pragma once

#include <nlohmann/json.hpp>

#include "sfill/fill.hpp"
#include "sfill/hamiltonian.hpp"
#include "sfill/oracle.hpp"

namespace sfill {

using Json = nlohmann::ordered_json;

constexpr int kCertificateSchema = 1;

Json chain_to_json(const Chain& c);
Chain chain_from_json(const Json& j);

// The digest covers the canonical text of target and filling.
std::string certificate_digest(const FillCertificate& c);
Json certificate_to_json(const FillCertificate& c);
// Parses and re-checks; throws std::runtime_error on a bad document or digest.
FillCertificate certificate_from_json(const Json& j);

Json hamiltonian_to_json(const HamiltonianResult& h);
Json max_cycle_to_json(const MaxCycleResult& r);
Json verify_report_to_json(const VerifyReport& r);
Json collapse_report_to_json(const CollapseReport& r);
// Census summary without the per-cycle tables or timings.
Json census_summary_to_json(const CensusReport& r);

}  // namespace sfill
