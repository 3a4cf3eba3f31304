#ifndef QCODES_DUADIC_SYNC_HPP
#define QCODES_DUADIC_SYNC_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "qcodes/gf2x.hpp"
#include "qcodes/linear_code.hpp"

namespace qcodes {

/// Smallest g >= 2 that is a primitive root mod p and satisfies
/// g^{p-1} != 1 (mod p^2), hence a primitive root mod p^n for every n.
/// The returned value is verified by direct order computation mod p^n.
std::uint64_t primitive_root_mod_prime_power(std::uint64_t p, std::uint32_t n);

/// Quadratic-residue splitting of the units mod p^m at every level m <= n:
/// S_{m0} = <g_m^2>, S_{m1} = g_m S_{m0}. Requires p == 7 (mod 8), which
/// puts 2 in S_{m0}.
struct DuadicLevel {
    std::uint32_t m = 0;
    std::uint64_t modulus = 0;  // p^m
    std::vector<std::uint64_t> s0, s1;  // sorted
};

struct DuadicSplitting {
    std::uint64_t p = 0;
    std::uint32_t n = 0;
    std::uint64_t g = 0;
    std::vector<DuadicLevel> levels;  // m = 1 .. n
};

DuadicSplitting duadic_splitting(std::uint64_t p, std::uint32_t n);

/// One irreducible binary factor of x^{p^n} - 1: the minimal polynomial over
/// F_2 of omega^i for the 2-cyclotomic coset of i mod p^n. `level` is the m
/// with root order p^m (0 for the coset {0}, i.e. the factor x - 1).
struct CycFactor {
    std::uint32_t level = 0;
    std::vector<std::uint64_t> coset;  // sorted, mod p^n
    Gf2Poly poly;
    std::uint64_t order = 0;  // polynomial order = p^level, verified two ways
};

/// The full factor system for (p, n): the splitting, the big binary field
/// F_{2^T} with T = ord_{p^n}(2), a fixed root of unity omega of order p^n,
/// and every irreducible factor of x^{p^n} - 1 with coefficients asserted
/// into F_2. Factors are grouped by level and ordered by their minimum coset
/// element.
class DuadicSystem {
  public:
    DuadicSystem(std::uint64_t p, std::uint32_t n);

    std::uint64_t p() const { return p_; }
    std::uint32_t n() const { return n_; }
    std::uint64_t length() const { return pn_; }
    const DuadicSplitting& splitting() const { return split_; }
    std::uint32_t field_degree() const { return field_->degree(); }
    const std::vector<CycFactor>& factors() const { return factors_; }
    /// ord_{p^m}(2).
    std::uint64_t level_order(std::uint32_t m) const { return level_ord_[m]; }
    /// Number of irreducible factors of d_{m0} (= of d_{m1}).
    std::uint64_t level_factor_count(std::uint32_t m) const;

    /// d_{m,which}: the product of the level-m factors whose cosets lie in
    /// the scaled splitting side; degree p^{m-1}(p-1)/2, binary by
    /// construction (asserted).
    Gf2Poly duadic_generator(std::uint32_t m, int which) const;
    /// The j-th (0-based, min-coset-element order) irreducible factor of
    /// d_{m0}.
    const CycFactor& side0_factor(std::uint32_t m, std::uint64_t j) const;

    /// (x - 1) * prod_m d_{m0} * prod_m d_{m1} == x^{p^n} - 1, bit-exact.
    bool factorization_identity_holds() const;

    /// lcm of the orders of the known irreducible factors dividing f;
    /// requires f to be a product of distinct system factors (times 1).
    std::uint64_t poly_order_lcm(const Gf2Poly& f) const;

  private:
    std::uint64_t p_, pn_;
    std::uint32_t n_;
    DuadicSplitting split_;
    std::unique_ptr<Gf2Field> field_;
    Gf2Poly omega_;
    std::vector<CycFactor> factors_;
    std::vector<std::uint64_t> level_ord_;  // index m in 0..n
};

/// ord(f) via the definition, testing divisors of a known multiple of the
/// order (here always available: p^n). f(0) must be 1.
std::uint64_t poly_order_direct(const Gf2Poly& f, std::uint64_t known_multiple);
/// ord(f) by iterating x^k mod f up to `cap`; for callers without a known
/// multiple. Throws BudgetExceeded past the cap.
std::uint64_t poly_order_bruteforce(const Gf2Poly& f, std::uint64_t cap);

/// Parameters of the quantum synchronizable code family built from a
/// dual-containing cyclic code <h> and a containing code <g>, g | h.
/// Tolerances a_l + a_r range below ord(h/g).
struct SyncParams {
    std::uint64_t base_length = 0;  // classical/quantum block length n
    std::uint64_t k1 = 0;           // dim <h>
    std::uint64_t k2 = 0;           // dim <g>
    std::uint64_t k = 0;            // 2*k1 - n
    std::uint64_t tolerance_cap = 0;             // ord(h/g)
    std::optional<std::uint64_t> d1, d2;         // exact distances when enumerable
    std::optional<std::uint64_t> phase_bound;    // floor((d1-1)/2)
    std::optional<std::uint64_t> bit_bound;      // floor((d2-1)/2)
    std::uint64_t al = 0, ar = 0;                // chosen misalignment pair
    std::vector<std::string> provenance;
};

/// General route: validates g | h | x^n - 1, matrix-level Euclidean
/// dual-containment of <h>, computes ord(h/g) (cross-checked against the
/// lcm route when a DuadicSystem is supplied), and evaluates exact distances
/// only when the enumeration fits `distance_budget`.
SyncParams sync_params_general(std::uint64_t n_len, const Gf2Poly& g, const Gf2Poly& h,
                               const DuadicSystem* system = nullptr,
                               std::uint64_t distance_budget = 1u << 20);

/// Multiplicity route: f1 = prefix products of u_i side-0 factors per level,
/// f2 likewise with v. Constraints exactly as stated: 1 <= u_n <= count_n,
/// 0 <= u_l <= count_l, sum_{l<n} u_l >= 1 (vacuous for n = 1), v_n < u_n,
/// v_l <= u_l, sum v_l >= 1. The resulting k is cross-checked against
/// p^n - 2 sum u_i t_i.
SyncParams sync_family(const DuadicSystem& sys, const std::vector<std::uint64_t>& u,
                       const std::vector<std::uint64_t>& v);

/// Prefix product of the first counts[m-1] side-0 factors at each level m.
Gf2Poly prefix_factor_product(const DuadicSystem& sys, const std::vector<std::uint64_t>& counts);

/// Smallest d with d^2 - d + 1 >= p^n, after asserting the complement
/// splitting -S_{m0} = S_{m1} at every level.
std::uint64_t duadic_distance_bound(std::uint64_t p, std::uint32_t n);

}  // namespace qcodes

#endif
