#ifndef QCODES_POLY_CODE_HPP
#define QCODES_POLY_CODE_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "qcodes/cyclotomic.hpp"
#include "qcodes/field.hpp"
#include "qcodes/linear_code.hpp"

namespace qcodes {

/// Everything fixed by a choice of (q, m) with ord_m(q) = p^b: the ambient
/// field F_{q^t}, the base field F_q with its embedding, the order-m root of
/// unity omega, the normal element gamma of F_{q^s}/F_q, the coset family,
/// and the n evaluation points (as exponents of omega).
///
/// Construction is deterministic; contexts are immutable and safe to share
/// across threads.
struct TowerContext {
    std::uint64_t q = 0;
    std::uint64_t m = 0;
    std::uint32_t p = 0;   // characteristic
    std::uint32_t a = 0;   // q = p^a
    std::uint32_t b = 0;   // t = p^b
    std::uint64_t t = 0;   // ord_m(q)
    std::uint64_t s = 0;   // t / p
    std::uint64_t n = 0;   // (m - gcd(m, q^s - 1)) / p
    std::uint64_t subfield_gcd = 0;  // gcd(m, q^s - 1)

    const Field* ambient = nullptr;  // F_{p^{a t}}
    const Field* base = nullptr;     // standalone F_q
    std::unique_ptr<SubfieldEmbedding> embed;  // base -> ambient
    Elt omega = 0;  // order m
    Elt gamma = 0;  // normal element of F_{q^s}/F_q inside ambient

    CosetFamily family;
    std::vector<std::uint64_t> eval_exponents;  // e_i: beta_i = omega^{e_i}
    std::vector<Elt> omega_pow;                 // omega^0 .. omega^{m-1}

    CosetSelection select_cutoff(std::uint64_t c) const {
        return selection_from_cutoff(family, c);
    }
};

TowerContext make_context(std::uint64_t q, std::uint64_t m);

/// The t-term polynomial sum_j gamma^{q^{j+shift}} x^{q^j rep mod m},
/// exponents reduced mod m (valid on m-th roots of unity). Degree equals rep.
struct EvalPolynomial {
    std::uint64_t rep = 0;
    std::uint64_t shift = 0;
    std::vector<std::pair<Elt, std::uint64_t>> terms;  // (coefficient, exponent)
};

EvalPolynomial build_eval_poly(const TowerContext& ctx, std::uint64_t rep, std::uint64_t shift);
/// Evaluation at omega^{exponent}; result lies in the ambient field.
Elt eval_at_exponent(const TowerContext& ctx, const EvalPolynomial& poly, std::uint64_t exponent);

/// The [n, |S|/p] code over F_q spanned by the evaluations of all e_{a,k}
/// with a in S's representatives and 0 <= k < s. Every entry is checked to
/// be Frobenius-fixed before coercion into base-field coordinates, and the
/// final rank is checked against |S|/p.
LinearCode build_code(const TowerContext& ctx, const CosetSelection& sel);

/// ceil((m + 1 - c) / p) where c = max(S).
std::uint64_t distance_bound(const TowerContext& ctx, const CosetSelection& sel);

enum class DualMode { euclidean, hermitian };

struct DualityReport {
    DualMode mode;
    bool pass = false;
    std::size_t dim_code = 0;
    std::size_t dim_dual = 0;
    bool gram_zero = false;
    std::vector<std::uint64_t> dual_selection;  // the proposition's R
};

/// Builds C(R) by the dual-set rule (R = frak-A minus the negated S, scaled
/// by l first in Hermitian mode) and compares it with the matrix-level dual
/// of C(S); also verifies the Gram products vanish exactly.
DualityReport verify_duality(const TowerContext& ctx, const CosetSelection& sel, DualMode mode);

}  // namespace qcodes

#endif
