#ifndef QCODES_FIELD_HPP
#define QCODES_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "qcodes/errors.hpp"

namespace qcodes {

/// Field element, encoded as the integer sum coeffs[i] * p^i over the power
/// basis of the residue of x. Zero is 0, the multiplicative identity is 1,
/// and for extension fields the residue of x itself is the code p.
using Elt = std::uint32_t;

/// F_{p^d} with a canonical (deterministically chosen) primitive defining
/// polynomial. Instances are interned: Field::get(p, d) always returns the
/// same immutable object, so concurrent use needs no synchronization.
///
/// The defining polynomial is the first monic degree-d polynomial over F_p,
/// scanned in ascending order of the integer code sum coeff[i] * p^i, that
/// is irreducible and whose residue of x generates the multiplicative group.
/// (For F_8 and F_256 this lands on the classic primitive trinomial
/// x^3 + x + 1 and pentanomial x^8 + x^4 + x^3 + x^2 + 1.)
class Field {
  public:
    static const Field& get(std::uint32_t p, std::uint32_t d);

    std::uint32_t p() const { return p_; }
    std::uint32_t d() const { return d_; }
    std::uint64_t q() const { return q_; }
    /// d+1 coefficients, ascending degree, leading coefficient 1.
    const std::vector<std::uint32_t>& defining_poly() const { return poly_; }
    /// Residue of x (a generator of the multiplicative group by construction).
    Elt generator() const { return gen_; }

    Elt add(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
    Elt mul(Elt a, Elt b) const {
        if (a == 0 || b == 0) return 0;
        std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return alog_[s];
    }
    Elt inv(Elt a) const {
        require(a != 0, Errc::division_by_zero, "inverse of zero");
        return alog_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    Elt pow(Elt a, std::uint64_t e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        std::uint64_t le = (e % (q_ - 1)) * log_[a] % (q_ - 1);
        return alog_[le];
    }

    /// x^{q0} where q0 is a power of p. A homomorphism of the whole field.
    Elt frobenius(Elt a, std::uint64_t q0) const;
    /// Smallest n >= 1 with a^n = 1; divides q - 1.
    std::uint64_t element_order(Elt a) const;
    /// True iff a lies in the subfield of size q0 = p^j, j | d.
    bool in_subfield(Elt a, std::uint64_t q0) const;

    /// Discrete log base generator(); a must be nonzero.
    std::uint64_t log(Elt a) const {
        require(a != 0, Errc::division_by_zero, "log of zero");
        return log_[a];
    }
    Elt exp(std::uint64_t e) const { return alog_[e % (q_ - 1)]; }

    std::vector<std::uint32_t> coeffs(Elt a) const;
    Elt from_coeffs(const std::vector<std::uint32_t>& c) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

  private:
    Field(std::uint32_t p, std::uint32_t d);

    std::uint32_t p_, d_;
    std::uint64_t q_;
    std::vector<std::uint32_t> poly_;
    Elt gen_;
    std::vector<Elt> alog_;          // alog_[k] = generator^k, k in [0, q-1)
    std::vector<std::uint32_t> log_; // inverse of alog_ (log_[0] unused)
    std::vector<Elt> add_table_;     // full q x q table when q is small and p > 2
    std::vector<std::pair<std::uint64_t, unsigned>> order_factors_;  // factorization of q-1
};

/// Canonical primitive element of the subfield of size q0 inside `ambient`.
Elt subfield_generator(const Field& ambient, std::uint64_t q0);

/// Normal element gamma of F_{q0^s} over F_{q0}, both viewed inside `ambient`:
/// the conjugates gamma^{q0^i}, i < s, form an F_{q0}-basis of F_{q0^s}.
/// Deterministic: candidates are scanned as powers of the canonical primitive
/// element of F_{q0^s}; each is accepted via an s x s rank test of its
/// conjugates expressed in F_{q0}-coordinates. s = 1 returns 1.
Elt find_normal_element(std::uint64_t q0, std::uint32_t s, const Field& ambient);

/// F_{q0^s}-coordinates machinery shared by the normal-element search and the
/// evaluation-code builder: expresses elements of the subfield F_{q0^s} of
/// `ambient` in the fixed basis {beta^i : i < s}, beta the canonical primitive
/// element of F_{q0^s}, with coordinates in the subfield F_{q0}.
class SubfieldCoords {
  public:
    SubfieldCoords(const Field& ambient, std::uint64_t q0, std::uint32_t s);
    /// Coordinates (as ambient codes lying in F_{q0}) of z in F_{q0^s}.
    std::vector<Elt> coords(Elt z) const;
    const Field& ambient() const { return amb_; }

  private:
    const Field& amb_;
    std::uint64_t q0_;
    std::uint32_t s_, a_;                 // q0 = p^a
    std::vector<Elt> basis_;              // h^j * beta^i products, ambient codes
    std::vector<std::uint32_t> solve_;    // F_p coordinate matrix, row-major
    std::uint32_t rows_ = 0, cols_ = 0;
    std::vector<Elt> fq_basis_;           // {h^j : j < a}, h primitive in F_{q0}
};

/// Identification of a standalone Field::get(p, a) with the subfield of the
/// same size inside an ambient extension. The embedding sends the residue of
/// x to the smallest (by code) root of the standalone defining polynomial.
class SubfieldEmbedding {
  public:
    SubfieldEmbedding(const Field& sub, const Field& ambient);
    const Field& sub() const { return sub_; }
    const Field& ambient() const { return amb_; }
    Elt to_ambient(Elt a) const { return up_[a]; }
    /// Inverse map; `a` must actually lie in the embedded subfield.
    Elt to_sub(Elt a) const;

  private:
    const Field& sub_;
    const Field& amb_;
    std::vector<Elt> up_;                     // size q
    std::vector<std::pair<Elt, Elt>> down_;   // sorted by ambient code
};

}  // namespace qcodes

#endif
