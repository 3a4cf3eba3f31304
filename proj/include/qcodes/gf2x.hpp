#ifndef QCODES_GF2X_HPP
#define QCODES_GF2X_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qcodes/errors.hpp"
#include "qcodes/numeric.hpp"

namespace qcodes {

/// Polynomial over F_2, bit-packed little-endian: bit i is the coefficient
/// of x^i (so the constant term is the least significant bit, matching the
/// hex wire encoding).
class Gf2Poly {
  public:
    Gf2Poly() = default;
    static Gf2Poly zero() { return {}; }
    static Gf2Poly one();
    static Gf2Poly x();
    /// x^n + 1 (== x^n - 1 over F_2).
    static Gf2Poly xn_minus_1(std::uint64_t n);
    static Gf2Poly from_hex(const std::string& hex);
    static Gf2Poly from_coeff_bits(const std::vector<std::uint8_t>& bits);

    bool is_zero() const { return words_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long long degree() const;
    bool coeff(std::uint64_t i) const;
    void set_coeff(std::uint64_t i, bool v);
    std::uint64_t weight() const;

    Gf2Poly operator+(const Gf2Poly& o) const;  // == subtraction
    Gf2Poly operator*(const Gf2Poly& o) const;
    Gf2Poly operator<<(std::uint64_t k) const;
    /// Quotient and remainder by a nonzero divisor.
    std::pair<Gf2Poly, Gf2Poly> divmod(const Gf2Poly& d) const;
    Gf2Poly operator%(const Gf2Poly& d) const { return divmod(d).second; }
    Gf2Poly operator/(const Gf2Poly& d) const { return divmod(d).first; }
    bool operator==(const Gf2Poly& o) const { return words_ == o.words_; }
    bool operator!=(const Gf2Poly& o) const { return words_ != o.words_; }

    static Gf2Poly gcd(Gf2Poly a, Gf2Poly b);
    /// x^e mod f, word-sized exponent.
    static Gf2Poly x_powmod(std::uint64_t e, const Gf2Poly& f);
    bool is_irreducible() const;

    std::string to_hex() const;
    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    void trim();
    std::vector<std::uint64_t> words_;
};

/// F_{2^T} = F_2[x]/(f), with f the first irreducible monic polynomial of
/// degree T in ascending lexicographic coefficient order (constant term
/// compared first). Elements are reduced Gf2Poly values. Unlike the small
/// table-driven Field kernel this one scales to the degrees duadic codes
/// need (T = 155 for p = 31, n = 2); its modulus is irreducible but not
/// certified primitive, which none of its uses require.
class Gf2Field {
  public:
    explicit Gf2Field(std::uint32_t degree);

    std::uint32_t degree() const { return t_; }
    const Gf2Poly& modulus() const { return mod_; }

    Gf2Poly mul(const Gf2Poly& a, const Gf2Poly& b) const { return (a * b) % mod_; }
    Gf2Poly pow(Gf2Poly a, std::uint64_t e) const;
    Gf2Poly pow_big(Gf2Poly a, const BigUint& e) const;

    /// Deterministic element of multiplicative order exactly `order`
    /// (requires order | 2^T - 1): scans candidates in code order and maps
    /// each through the cofactor exponent.
    Gf2Poly element_of_order(std::uint64_t order) const;

  private:
    std::uint32_t t_;
    Gf2Poly mod_;
};

}  // namespace qcodes

#endif
