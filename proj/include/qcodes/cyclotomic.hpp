#ifndef QCODES_CYCLOTOMIC_HPP
#define QCODES_CYCLOTOMIC_HPP

#include <cstdint>
#include <vector>

#include "qcodes/errors.hpp"

namespace qcodes {

/// Smallest t >= 1 with q^t = 1 (mod m). Requires gcd(q, m) = 1, m >= 2.
std::uint64_t ord_mod(std::uint64_t q, std::uint64_t m);

/// The q-cyclotomic cosets modulo m: C_a = {a q^j mod m}. Cosets are keyed by
/// their maximum element and listed in ascending order of that
/// representative; members are sorted ascending. A collects the
/// representatives of the cosets of full size t = ord_m(q) (empty in the
/// degenerate case t = 1, where no coset has size p^b with b >= 1).
struct CosetFamily {
    std::uint64_t q = 0;
    std::uint64_t m = 0;
    std::uint64_t t = 0;
    std::vector<std::vector<std::uint64_t>> cosets;
    std::vector<std::uint64_t> reps;  // max of each coset, aligned with `cosets`
    std::vector<std::uint64_t> A;     // reps of full cosets, ascending

    /// Union of all full cosets (the paper's fraktur-A), sorted.
    std::vector<std::uint64_t> full_union() const;
    /// Index into `cosets` of the coset containing v.
    std::size_t coset_index_of(std::uint64_t v) const;
};

CosetFamily coset_family(std::uint64_t q, std::uint64_t m);

/// A union S of full cosets, tracked with its representatives and maximum
/// element c. Reconstructed from a cutoff as all full cosets whose maximum
/// is <= c; the cutoff must itself be a full-coset representative.
struct CosetSelection {
    const CosetFamily* family = nullptr;
    std::vector<std::uint64_t> reps;     // ascending
    std::vector<std::uint64_t> members;  // sorted union
    std::uint64_t c = 0;                 // max(members)

    bool empty() const { return members.empty(); }
};

CosetSelection selection_from_cutoff(const CosetFamily& family, std::uint64_t cutoff);
/// Selection from an explicit member set; must be exactly a union of full
/// cosets of the family.
CosetSelection selection_from_members(const CosetFamily& family,
                                      const std::vector<std::uint64_t>& members);

/// {m - i mod m : i in S}.
std::vector<std::uint64_t> negate_set(const std::vector<std::uint64_t>& s, std::uint64_t m);
/// {l*i mod m : i in S}; requires gcd(l, m) = 1.
std::vector<std::uint64_t> scale_set(const std::vector<std::uint64_t>& s, std::uint64_t l,
                                     std::uint64_t m);

/// Dual-containment criterion for the Hermitian construction:
/// S union neg(pe * S) covers the union of all full cosets. pe must be the
/// square root of the family's q.
bool hermitian_condition(const CosetSelection& s, std::uint64_t pe);

}  // namespace qcodes

#endif
