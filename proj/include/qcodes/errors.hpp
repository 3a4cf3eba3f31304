#ifndef QCODES_ERRORS_HPP
#define QCODES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcodes {

/// Error categories surfaced by the library. Each maps 1:1 to a status code
/// in the C API (see qcodes.h).
enum class Errc {
    ok = 0,
    invalid_modulus,
    invalid_degree,
    division_by_zero,
    field_mismatch,
    invalid_subfield,
    zero_has_no_order,
    not_coprime,
    invalid_cutoff,
    not_a_square,
    shape_error,
    not_a_divisor,
    repeated_roots,
    empty_code,
    empty_selection,
    unsupported_order,
    invalid_representative,
    invalid_index,
    negative_dimension,
    not_dual_containing,
    invalid_propagation,
    unsupported,
    not_minus_one_mod_8,
    zero_constant_term,
    not_nested,
    invalid_multiplicities,
    not_complement_splitting,
    invalid_argument,
    budget_exceeded,
    construction_inconsistency,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

// Internal invariant that must hold if the construction is correct. Violations
// signal a bug, never bad user input.
inline void ensure_consistent(bool cond, const std::string& msg) {
    if (!cond) fail(Errc::construction_inconsistency, msg);
}

}  // namespace qcodes

#endif
