#ifndef QCODES_REPRODUCE_HPP
#define QCODES_REPRODUCE_HPP

#include <string>

#include "qcodes/serialize.hpp"

namespace qcodes {

struct ReproduceResult {
    std::string table;
    std::size_t rows = 0;
    std::size_t mismatches = 0;
    Json details;  // array, one entry per golden row
};

/// Recomputes a golden table ("I", "III" or "IV") from scratch and compares
/// row by row. Table I runs the full formula/matrix cross-checked search,
/// III replays propagation rules, IV rebuilds the duadic factor system for
/// (31, 2) and derives every (k1, k) pair through the general route, with
/// the multiplicity-constraint flag recorded per row.
ReproduceResult reproduce_table(const std::string& table_id);

std::string reproduce_to_csv(const ReproduceResult& r);
Json reproduce_to_json(const ReproduceResult& r);

}  // namespace qcodes

#endif
