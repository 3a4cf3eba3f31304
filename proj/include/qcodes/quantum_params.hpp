#ifndef QCODES_QUANTUM_PARAMS_HPP
#define QCODES_QUANTUM_PARAMS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qcodes/poly_code.hpp"

namespace qcodes {

/// [[n, k, >= d]] over the `base`-ary quantum alphabet, with an auditable
/// construction trail.
struct QuantumParams {
    std::uint64_t base = 0;
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::uint64_t d = 0;  // lower bound on the minimum distance
    std::vector<std::string> provenance;
};

/// [[n, 2k - n, >= d]] over F_l from a Hermitian dual-containing [n, k, d]
/// code over F_{l^2}. Callers attest dual-containment; 2k < n is rejected.
QuantumParams hermitian_construction(std::uint64_t n, std::uint64_t k, std::uint64_t d,
                                     std::uint64_t q);

/// The full formula triple for a selection S, cross-checked against the
/// matrix route: rank of the built code, matrix-level Hermitian
/// dual-containment, and the distance bound must all agree with the
/// formulas. Requires the Hermitian coset condition.
QuantumParams main_theorem_params(const TowerContext& ctx, const CosetSelection& sel);

enum class Rule { subcode, lengthen, puncture, distance_drop };

const char* rule_name(Rule r);
Rule rule_from_name(const std::string& name);

QuantumParams propagate(QuantumParams qp, Rule rule);

struct TableRow {
    std::uint64_t cutoff = 0;
    QuantumParams params;
};

/// All valid rows for a context: every cutoff in A (ascending) whose
/// selection passes the Hermitian condition with nonnegative k, each row
/// carrying the matrix cross-checks of main_theorem_params.
std::vector<TableRow> table_search(const TowerContext& ctx);

}  // namespace qcodes

#endif
