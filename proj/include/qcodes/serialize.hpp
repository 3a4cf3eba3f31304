#ifndef QCODES_SERIALIZE_HPP
#define QCODES_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "qcodes/cyclotomic.hpp"
#include "qcodes/duadic_sync.hpp"
#include "qcodes/linear_code.hpp"
#include "qcodes/poly_code.hpp"
#include "qcodes/quantum_params.hpp"

namespace qcodes {

using Json = nlohmann::ordered_json;

Json field_to_json(const Field& f);
Json coset_family_to_json(const CosetFamily& fam);
std::string coset_family_to_csv(const CosetFamily& fam);
Json code_to_json(const LinearCode& c);
/// `construct` payload: the code plus its provenance block.
Json construct_to_json(const TowerContext& ctx, const CosetSelection& sel);
Json duality_report_to_json(const TowerContext& ctx, const DualityReport& report);
Json mindist_to_json(const TowerContext& ctx, const CosetSelection& sel, const LinearCode& code,
                     const DistanceResult& enumerated, std::uint64_t samples, std::uint64_t seed,
                     std::uint64_t sampled_min, std::uint64_t bound);
Json quantum_params_to_json(const QuantumParams& qp);
Json quantum_table_to_json(const TowerContext& ctx, const std::vector<TableRow>& rows);
std::string quantum_table_to_csv(const TowerContext& ctx, const std::vector<TableRow>& rows);
Json sync_params_to_json(const SyncParams& sp);
Json duadic_system_to_json(const DuadicSystem& sys);

/// Canonical single-line rendering used for file output: stable key order,
/// two-space indentation, trailing newline.
std::string render_json(const Json& j);

}  // namespace qcodes

#endif
