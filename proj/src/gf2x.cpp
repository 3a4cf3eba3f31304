#include "qcodes/gf2x.hpp"

#include <algorithm>

namespace qcodes {

void Gf2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::one() {
    Gf2Poly r;
    r.words_ = {1};
    return r;
}

Gf2Poly Gf2Poly::x() {
    Gf2Poly r;
    r.words_ = {2};
    return r;
}

Gf2Poly Gf2Poly::xn_minus_1(std::uint64_t n) {
    Gf2Poly r;
    r.set_coeff(0, true);
    r.set_coeff(n, true);
    return r;
}

Gf2Poly Gf2Poly::from_hex(const std::string& hex) {
    Gf2Poly r;
    for (char ch : hex) {
        int v;
        if (ch >= '0' && ch <= '9') v = ch - '0';
        else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F') v = ch - 'A' + 10;
        else fail(Errc::invalid_argument, "bad hex digit in polynomial");
        // shift left 4 bits, add nibble
        std::uint64_t carry = static_cast<std::uint64_t>(v);
        for (auto& w : r.words_) {
            std::uint64_t nw = (w << 4) | carry;
            carry = w >> 60;
            w = nw;
        }
        if (carry) r.words_.push_back(carry);
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::from_coeff_bits(const std::vector<std::uint8_t>& bits) {
    Gf2Poly r;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) r.set_coeff(i, true);
    return r;
}

long long Gf2Poly::degree() const {
    if (words_.empty()) return -1;
    std::uint64_t top = words_.back();
    int b = 63;
    while (!(top & (1ULL << b))) --b;
    return static_cast<long long>((words_.size() - 1) * 64 + b);
}

bool Gf2Poly::coeff(std::uint64_t i) const {
    std::size_t w = i / 64;
    return w < words_.size() && ((words_[w] >> (i % 64)) & 1);
}

void Gf2Poly::set_coeff(std::uint64_t i, bool v) {
    std::size_t w = i / 64;
    if (w >= words_.size()) {
        if (!v) return;
        words_.resize(w + 1, 0);
    }
    if (v) words_[w] |= 1ULL << (i % 64);
    else words_[w] &= ~(1ULL << (i % 64));
    trim();
}

std::uint64_t Gf2Poly::weight() const {
    std::uint64_t w = 0;
    for (auto x : words_) w += static_cast<std::uint64_t>(__builtin_popcountll(x));
    return w;
}

Gf2Poly Gf2Poly::operator+(const Gf2Poly& o) const {
    Gf2Poly r;
    r.words_.resize(std::max(words_.size(), o.words_.size()), 0);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] ^= words_[i];
    for (std::size_t i = 0; i < o.words_.size(); ++i) r.words_[i] ^= o.words_[i];
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::operator<<(std::uint64_t k) const {
    if (is_zero()) return {};
    Gf2Poly r;
    std::size_t wshift = k / 64;
    unsigned bshift = k % 64;
    r.words_.assign(words_.size() + wshift + 1, 0);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        r.words_[i + wshift] |= words_[i] << bshift;
        if (bshift) r.words_[i + wshift + 1] |= words_[i] >> (64 - bshift);
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::operator*(const Gf2Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    const Gf2Poly& small = degree() <= o.degree() ? *this : o;
    const Gf2Poly& large = degree() <= o.degree() ? o : *this;
    Gf2Poly r;
    r.words_.assign(words_.size() + o.words_.size() + 1, 0);
    std::uint64_t dsmall = static_cast<std::uint64_t>(small.degree());
    for (std::uint64_t i = 0; i <= dsmall; ++i) {
        if (!small.coeff(i)) continue;
        std::size_t wshift = i / 64;
        unsigned bshift = i % 64;
        for (std::size_t j = 0; j < large.words_.size(); ++j) {
            r.words_[j + wshift] ^= large.words_[j] << bshift;
            if (bshift) r.words_[j + wshift + 1] ^= large.words_[j] >> (64 - bshift);
        }
    }
    r.trim();
    return r;
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(const Gf2Poly& d) const {
    require(!d.is_zero(), Errc::division_by_zero, "polynomial division by zero");
    Gf2Poly rem = *this, quot;
    long long dd = d.degree();
    while (rem.degree() >= dd) {
        std::uint64_t shift = static_cast<std::uint64_t>(rem.degree() - dd);
        quot.set_coeff(shift, true);
        rem = rem + (d << shift);
    }
    return {quot, rem};
}

Gf2Poly Gf2Poly::gcd(Gf2Poly a, Gf2Poly b) {
    while (!b.is_zero()) {
        Gf2Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Gf2Poly Gf2Poly::x_powmod(std::uint64_t e, const Gf2Poly& f) {
    Gf2Poly result = one() % f, base = x() % f;
    while (e) {
        if (e & 1) result = (result * base) % f;
        base = (base * base) % f;
        e >>= 1;
    }
    return result;
}

bool Gf2Poly::is_irreducible() const {
    long long deg = degree();
    if (deg <= 0) return false;
    if (deg == 1) return true;
    if (!coeff(0)) return false;
    std::uint64_t d = static_cast<std::uint64_t>(deg);
    // iterated Frobenius: x^{2^i} mod f
    std::vector<Gf2Poly> frob{x() % *this};
    for (std::uint64_t i = 1; i <= d; ++i) {
        Gf2Poly s = (frob.back() * frob.back()) % *this;
        frob.push_back(std::move(s));
    }
    if (frob[d] != x() % *this) return false;
    for (auto [r, e] : factorize(d)) {
        (void)e;
        Gf2Poly diff = frob[d / r] + x();
        if (gcd(*this, diff).degree() != 0) return false;
    }
    return true;
}

std::string Gf2Poly::to_hex() const {
    if (is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (std::size_t i = words_.size(); i-- > 0;) {
        for (int nib = 15; nib >= 0; --nib) {
            unsigned v = static_cast<unsigned>((words_[i] >> (nib * 4)) & 0xf);
            if (leading && v == 0) continue;
            leading = false;
            out.push_back("0123456789abcdef"[v]);
        }
    }
    return out;
}

Gf2Field::Gf2Field(std::uint32_t degree) : t_(degree) {
    require(degree >= 1, Errc::invalid_degree, "degree must be >= 1");
    // Ascending integer-code scan, same ordering as the small-field kernel.
    // The constant term must be 1 (else x divides), so the counter fills the
    // interior coefficients c_1..c_{T-1} from the low end.
    if (degree == 1) {
        mod_ = Gf2Poly::from_hex("3");  // x + 1
        return;
    }
    for (std::uint64_t counter = 0;; ++counter) {
        Gf2Poly f;
        f.set_coeff(0, true);
        f.set_coeff(degree, true);
        for (std::uint32_t i = 1; i < degree; ++i)
            if ((counter >> (i - 1)) & 1) f.set_coeff(i, true);
        if (f.is_irreducible()) {
            mod_ = f;
            return;
        }
        ensure_consistent(counter < (1ULL << std::min<std::uint32_t>(degree - 1, 40)),
                          "no irreducible polynomial found in scan range");
    }
}

Gf2Poly Gf2Field::pow(Gf2Poly a, std::uint64_t e) const {
    Gf2Poly r = Gf2Poly::one();
    a = a % mod_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Gf2Poly Gf2Field::pow_big(Gf2Poly a, const BigUint& e) const {
    Gf2Poly r = Gf2Poly::one();
    a = a % mod_;
    unsigned bits = e.bit_length();
    for (unsigned i = bits; i-- > 0;) {
        r = mul(r, r);
        if (e.bit(i)) r = mul(r, a);
    }
    return r;
}

Gf2Poly Gf2Field::element_of_order(std::uint64_t order) const {
    auto factors = factorize(order);
    BigUint cofactor = BigUint::pow2_minus_1(t_);
    // (2^T - 1) / order; remainder must vanish or the order does not divide
    // the group order.
    std::uint64_t rem = cofactor.div_u64(order);
    require(rem == 0, Errc::invalid_argument,
            "requested order does not divide 2^T - 1");
    for (std::uint64_t code = 2;; ++code) {
        Gf2Poly z;
        std::uint64_t c = code;
        std::uint64_t i = 0;
        while (c) {
            if (c & 1) z.set_coeff(i, true);
            c >>= 1;
            ++i;
        }
        Gf2Poly cand = pow_big(z, cofactor);
        // exact order check: cand^order = 1 automatically; require
        // cand^{order/r} != 1 for each prime r | order.
        if (cand == Gf2Poly::one()) continue;
        bool exact = true;
        for (auto [r, e] : factors) {
            (void)e;
            if (pow(cand, order / r) == Gf2Poly::one()) {
                exact = false;
                break;
            }
        }
        if (exact) return cand;
        ensure_consistent(code < 1000000, "element-of-order scan exhausted");
    }
}

}  // namespace qcodes
