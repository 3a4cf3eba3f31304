#include "qcodes/duadic_sync.hpp"

#include <algorithm>
#include <numeric>

#include "qcodes/cyclotomic.hpp"
#include "qcodes/numeric.hpp"

namespace qcodes {

namespace {

std::uint64_t order_mod(std::uint64_t g, std::uint64_t modulus, std::uint64_t group_order) {
    // order of g in (Z/modulus)^*, peeling prime factors of group_order
    std::uint64_t n = group_order;
    for (auto [r, e] : factorize(group_order)) {
        (void)e;
        while (n % r == 0 && powmod_u64(g, n / r, modulus) == 1) n /= r;
    }
    return n;
}

}  // namespace

std::uint64_t primitive_root_mod_prime_power(std::uint64_t p, std::uint32_t n) {
    require(p != 2, Errc::unsupported, "p = 2 has no primitive-root machinery here");
    require(is_prime_u64(p), Errc::invalid_modulus, std::to_string(p) + " is not prime");
    require(n >= 1, Errc::invalid_argument, "exponent must be >= 1");
    for (std::uint64_t g = 2; g < p; ++g) {
        if (order_mod(g, p, p - 1) != p - 1) continue;
        if (powmod_u64(g, p - 1, p * p) == 1) continue;
        // verify directly at the requested level
        std::uint64_t pn = 1;
        for (std::uint32_t i = 0; i < n; ++i) pn *= p;
        std::uint64_t phi = pn / p * (p - 1);
        ensure_consistent(order_mod(g, pn, phi) == phi, "lifted primitive root lost primitivity");
        return g;
    }
    fail(Errc::construction_inconsistency, "no primitive root found (impossible for odd prime)");
}

DuadicSplitting duadic_splitting(std::uint64_t p, std::uint32_t n) {
    require(p % 8 == 7, Errc::not_minus_one_mod_8,
            "p = " + std::to_string(p) + " is not -1 mod 8, so 2 would not land in S_0");
    DuadicSplitting out;
    out.p = p;
    out.n = n;
    out.g = primitive_root_mod_prime_power(p, n);
    std::uint64_t modulus = 1;
    for (std::uint32_t m = 1; m <= n; ++m) {
        modulus *= p;
        DuadicLevel level;
        level.m = m;
        level.modulus = modulus;
        std::uint64_t gm = out.g % modulus;
        std::uint64_t g2 = mulmod_u64(gm, gm, modulus);
        std::uint64_t x = 1;
        do {
            level.s0.push_back(x);
            x = mulmod_u64(x, g2, modulus);
        } while (x != 1);
        for (auto v : level.s0) level.s1.push_back(mulmod_u64(v, gm, modulus));
        std::sort(level.s0.begin(), level.s0.end());
        std::sort(level.s1.begin(), level.s1.end());

        std::uint64_t phi = modulus / p * (p - 1);
        ensure_consistent(level.s0.size() == phi / 2 && level.s1.size() == phi / 2,
                          "splitting sides have wrong sizes");
        std::vector<std::uint64_t> both = level.s0;
        both.insert(both.end(), level.s1.begin(), level.s1.end());
        std::sort(both.begin(), both.end());
        ensure_consistent(std::adjacent_find(both.begin(), both.end()) == both.end(),
                          "splitting sides intersect");
        ensure_consistent(std::binary_search(level.s0.begin(), level.s0.end(), 2ULL),
                          "2 is not in S_{m0}");
        out.levels.push_back(std::move(level));
    }
    return out;
}

DuadicSystem::DuadicSystem(std::uint64_t p, std::uint32_t n) : p_(p), n_(n) {
    split_ = duadic_splitting(p, n);
    pn_ = 1;
    for (std::uint32_t i = 0; i < n; ++i) pn_ *= p;

    level_ord_.assign(n + 1, 1);
    std::uint64_t modulus = 1;
    for (std::uint32_t m = 1; m <= n; ++m) {
        modulus *= p;
        level_ord_[m] = ord_mod(2, modulus);
    }
    std::uint32_t T = static_cast<std::uint32_t>(level_ord_[n]);
    field_ = std::make_unique<Gf2Field>(T);
    omega_ = field_->element_of_order(pn_);

    // 2-cyclotomic cosets mod p^n, then a minimal polynomial per coset,
    // multiplied out over F_{2^T} and asserted binary.
    std::vector<char> seen(pn_, 0);
    std::vector<CycFactor> raw;
    for (std::uint64_t a = 0; a < pn_; ++a) {
        if (seen[a]) continue;
        CycFactor fac;
        std::uint64_t x = a;
        do {
            seen[x] = 1;
            fac.coset.push_back(x);
            x = mulmod_u64(x, 2, pn_);
        } while (x != a);
        std::sort(fac.coset.begin(), fac.coset.end());
        // level: n - v_p(a), with a = 0 mapping to level 0 (factor x - 1)
        std::uint32_t level = 0;
        if (a != 0) {
            std::uint64_t v = fac.coset.front();
            level = n_;
            while (v % p_ == 0) {
                v /= p_;
                --level;
            }
        }
        fac.level = level;
        raw.push_back(std::move(fac));
    }
    std::sort(raw.begin(), raw.end(), [](const CycFactor& x, const CycFactor& y) {
        if (x.level != y.level) return x.level < y.level;
        return x.coset.front() < y.coset.front();
    });

    for (auto& fac : raw) {
        // product over the coset of (x - omega^j) with coefficients in F_{2^T}
        std::vector<Gf2Poly> coeffs{Gf2Poly::one()};
        for (std::uint64_t j : fac.coset) {
            Gf2Poly root = field_->pow(omega_, j);
            std::vector<Gf2Poly> next(coeffs.size() + 1);
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                next[i + 1] = next[i + 1] + coeffs[i];
                next[i] = next[i] + field_->mul(coeffs[i], root);  // char 2: -root == root
            }
            coeffs = std::move(next);
        }
        Gf2Poly bits;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            long long deg = coeffs[i].degree();
            ensure_consistent(deg <= 0, "cyclotomic factor has a coefficient outside F_2");
            if (deg == 0) bits.set_coeff(i, true);
        }
        ensure_consistent(static_cast<std::uint64_t>(bits.degree()) == fac.coset.size(),
                          "factor degree differs from coset size");
        fac.poly = std::move(bits);

        // order, two ways: direct divisor scan of p^n, and the root order
        // p^level; they must agree.
        std::uint64_t direct = poly_order_direct(fac.poly, pn_);
        std::uint64_t via_root = 1;
        for (std::uint32_t i = 0; i < fac.level; ++i) via_root *= p_;
        ensure_consistent(direct == via_root, "factor order routes disagree");
        fac.order = direct;
        factors_.push_back(std::move(fac));
    }
}

std::uint64_t DuadicSystem::level_factor_count(std::uint32_t m) const {
    require(m >= 1 && m <= n_, Errc::invalid_index, "level out of range");
    // p^{m-1}(p-1) / (2 t_m)
    std::uint64_t phi = 1;
    for (std::uint32_t i = 0; i + 1 < m; ++i) phi *= p_;
    phi *= p_ - 1;
    return phi / (2 * level_ord_[m]);
}

Gf2Poly DuadicSystem::duadic_generator(std::uint32_t m, int which) const {
    require(m >= 1 && m <= n_, Errc::invalid_index, "level out of range");
    require(which == 0 || which == 1, Errc::invalid_index, "side must be 0 or 1");
    const DuadicLevel& level = split_.levels[m - 1];
    const auto& side = which == 0 ? level.s0 : level.s1;
    // scale into Z_{p^n}: roots are omega^{p^{n-m} i}
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < n_ - m; ++i) scale *= p_;
    std::vector<std::uint64_t> scaled;
    for (auto v : side) scaled.push_back(v * scale);
    std::sort(scaled.begin(), scaled.end());

    Gf2Poly prod = Gf2Poly::one();
    std::uint64_t covered = 0;
    for (const auto& fac : factors_) {
        if (fac.level != m) continue;
        if (!std::binary_search(scaled.begin(), scaled.end(), fac.coset.front())) continue;
        for (auto v : fac.coset)
            ensure_consistent(std::binary_search(scaled.begin(), scaled.end(), v),
                              "factor coset leaks outside the splitting side");
        prod = prod * fac.poly;
        covered += fac.coset.size();
    }
    ensure_consistent(covered == scaled.size(), "splitting side not covered by whole cosets");
    ensure_consistent(static_cast<std::uint64_t>(prod.degree()) == scaled.size(),
                      "duadic generator degree mismatch");
    return prod;
}

const CycFactor& DuadicSystem::side0_factor(std::uint32_t m, std::uint64_t j) const {
    require(m >= 1 && m <= n_, Errc::invalid_index, "level out of range");
    const DuadicLevel& level = split_.levels[m - 1];
    std::uint64_t scale = 1;
    for (std::uint32_t i = 0; i < n_ - m; ++i) scale *= p_;
    std::uint64_t count = 0;
    for (const auto& fac : factors_) {
        if (fac.level != m) continue;
        std::uint64_t unscaled = fac.coset.front() / scale;
        if (fac.coset.front() % scale != 0 ||
            !std::binary_search(level.s0.begin(), level.s0.end(), unscaled))
            continue;
        if (count == j) return fac;
        ++count;
    }
    fail(Errc::invalid_index, "side-0 factor index out of range");
}

bool DuadicSystem::factorization_identity_holds() const {
    Gf2Poly prod = Gf2Poly::one() + Gf2Poly::x();  // x - 1 over F_2
    for (std::uint32_t m = 1; m <= n_; ++m) {
        prod = prod * duadic_generator(m, 0);
        prod = prod * duadic_generator(m, 1);
    }
    return prod == Gf2Poly::xn_minus_1(pn_);
}

std::uint64_t DuadicSystem::poly_order_lcm(const Gf2Poly& f) const {
    Gf2Poly rest = f;
    std::uint64_t acc = 1;
    for (const auto& fac : factors_) {
        auto [q, r] = rest.divmod(fac.poly);
        if (r.is_zero()) {
            rest = q;
            acc = std::lcm(acc, fac.order);
        }
    }
    require(rest == Gf2Poly::one(), Errc::invalid_argument,
            "polynomial is not a product of distinct system factors");
    return acc;
}

std::uint64_t poly_order_direct(const Gf2Poly& f, std::uint64_t known_multiple) {
    require(f.coeff(0), Errc::zero_constant_term, "order needs f(0) = 1");
    if (f.degree() == 0) return 1;
    for (std::uint64_t d : divisors_sorted(known_multiple)) {
        if (Gf2Poly::x_powmod(d, f) == Gf2Poly::one()) return d;
    }
    fail(Errc::not_a_divisor,
         "polynomial order does not divide " + std::to_string(known_multiple));
}

std::uint64_t poly_order_bruteforce(const Gf2Poly& f, std::uint64_t cap) {
    require(f.coeff(0), Errc::zero_constant_term, "order needs f(0) = 1");
    if (f.degree() == 0) return 1;
    Gf2Poly x = Gf2Poly::x() % f, cur = x;
    for (std::uint64_t k = 1; k <= cap; ++k) {
        if (cur == Gf2Poly::one()) return k;
        cur = (cur * x) % f;
    }
    fail(Errc::budget_exceeded, "order exceeds cap " + std::to_string(cap));
}

namespace {

LinearCode linear_from_gf2_genpoly(std::uint64_t n_len, const Gf2Poly& g) {
    const Field& f2 = Field::get(2, 1);
    std::uint64_t deg = static_cast<std::uint64_t>(g.degree());
    std::uint64_t dim = n_len - deg;
    Matrix m(f2, dim, n_len);
    for (std::uint64_t r = 0; r < dim; ++r)
        for (std::uint64_t j = 0; j <= deg; ++j)
            if (g.coeff(j)) m.at(r, r + j) = 1;
    return LinearCode::from_matrix(std::move(m));
}

}  // namespace

SyncParams sync_params_general(std::uint64_t n_len, const Gf2Poly& g, const Gf2Poly& h,
                               const DuadicSystem* system, std::uint64_t distance_budget) {
    require(!g.is_zero() && !h.is_zero(), Errc::invalid_argument, "zero generator polynomial");
    Gf2Poly xn1 = Gf2Poly::xn_minus_1(n_len);
    require((xn1 % h).is_zero(), Errc::not_nested, "h does not divide x^n - 1");
    require((h % g).is_zero(), Errc::not_nested, "g does not divide h");

    SyncParams out;
    out.base_length = n_len;
    out.k1 = n_len - static_cast<std::uint64_t>(h.degree());
    out.k2 = n_len - static_cast<std::uint64_t>(g.degree());
    require(2 * out.k1 >= n_len, Errc::not_dual_containing,
            "deg(h) too large: 2k1 < n, <h> cannot contain its dual");

    LinearCode ch = linear_from_gf2_genpoly(n_len, h);
    ensure_consistent(ch.k() == out.k1, "cyclic code rank mismatch");
    LinearCode dual = euclidean_dual(ch);
    require(is_subcode(dual, ch), Errc::not_dual_containing,
            "<h> fails matrix-level Euclidean dual-containment");

    Gf2Poly f = h / g;
    out.tolerance_cap = poly_order_direct(f, n_len);
    if (system != nullptr) {
        std::uint64_t via_lcm = system->poly_order_lcm(f);
        ensure_consistent(via_lcm == out.tolerance_cap, "order routes disagree on h/g");
    }
    out.provenance.push_back("h deg " + std::to_string(h.degree()) + ", g deg " +
                             std::to_string(g.degree()) + ", ord(h/g) = " +
                             std::to_string(out.tolerance_cap));

    out.k = 2 * out.k1 - n_len;

    // distances only when the projective enumeration fits the budget
    auto try_distance = [&](const Gf2Poly& gen) -> std::optional<std::uint64_t> {
        std::uint64_t dim = n_len - static_cast<std::uint64_t>(gen.degree());
        if (dim == 0 || dim >= 63 || ((1ULL << dim) - 1) > distance_budget) return std::nullopt;
        LinearCode code = linear_from_gf2_genpoly(n_len, gen);
        DistanceResult r = min_distance(code, distance_budget);
        if (!r.exact) return std::nullopt;
        return r.weight;
    };
    out.d1 = try_distance(h);
    out.d2 = try_distance(g);
    if (out.d1) out.phase_bound = (*out.d1 - 1) / 2;
    if (out.d2) out.bit_bound = (*out.d2 - 1) / 2;
    return out;
}

Gf2Poly prefix_factor_product(const DuadicSystem& sys, const std::vector<std::uint64_t>& counts) {
    require(counts.size() == sys.n(), Errc::invalid_multiplicities,
            "need one multiplicity per level");
    Gf2Poly prod = Gf2Poly::one();
    for (std::uint32_t m = 1; m <= sys.n(); ++m) {
        std::uint64_t want = counts[m - 1];
        require(want <= sys.level_factor_count(m), Errc::invalid_multiplicities,
                "multiplicity exceeds the factor count at level " + std::to_string(m));
        for (std::uint64_t j = 0; j < want; ++j) prod = prod * sys.side0_factor(m, j).poly;
    }
    return prod;
}

SyncParams sync_family(const DuadicSystem& sys, const std::vector<std::uint64_t>& u,
                       const std::vector<std::uint64_t>& v) {
    std::uint32_t n = sys.n();
    require(u.size() == n && v.size() == n, Errc::invalid_multiplicities,
            "u and v need one entry per level");
    require(u[n - 1] >= 1, Errc::invalid_multiplicities, "u_n must be >= 1");
    for (std::uint32_t m = 1; m <= n; ++m)
        require(u[m - 1] <= sys.level_factor_count(m), Errc::invalid_multiplicities,
                "u exceeds the factor count at level " + std::to_string(m));
    if (n >= 2) {
        std::uint64_t low_sum = 0;
        for (std::uint32_t m = 1; m < n; ++m) low_sum += u[m - 1];
        require(low_sum >= 1, Errc::invalid_multiplicities,
                "sum of u over levels below n must be >= 1");
    }
    require(v[n - 1] < u[n - 1], Errc::invalid_multiplicities, "v_n must be < u_n");
    std::uint64_t v_sum = 0;
    for (std::uint32_t m = 1; m <= n; ++m) {
        require(v[m - 1] <= u[m - 1], Errc::invalid_multiplicities, "v must be <= u per level");
        v_sum += v[m - 1];
    }
    require(v_sum >= 1, Errc::invalid_multiplicities, "sum of v must be >= 1");

    Gf2Poly f1 = prefix_factor_product(sys, u);
    Gf2Poly f2 = prefix_factor_product(sys, v);
    SyncParams out = sync_params_general(sys.length(), f2, f1, &sys);

    // formula cross-check: k = p^n - 2 sum u_i t_i
    std::uint64_t deg_sum = 0;
    for (std::uint32_t m = 1; m <= n; ++m) deg_sum += u[m - 1] * sys.level_order(m);
    ensure_consistent(out.k == sys.length() - 2 * deg_sum,
                      "multiplicity formula disagrees with the general route");
    out.provenance.push_back("multiplicity route p=" + std::to_string(sys.p()) +
                             " n=" + std::to_string(n));
    return out;
}

std::uint64_t duadic_distance_bound(std::uint64_t p, std::uint32_t n) {
    DuadicSplitting split = duadic_splitting(p, n);
    for (const auto& level : split.levels) {
        std::vector<std::uint64_t> neg = negate_set(level.s0, level.modulus);
        require(neg == level.s1, Errc::not_complement_splitting,
                "-S_{m0} != S_{m1} at level " + std::to_string(level.m));
    }
    std::uint64_t pn = 1;
    for (std::uint32_t i = 0; i < n; ++i) pn *= p;
    std::uint64_t d = 1;
    while (d * d - d + 1 < pn) ++d;
    return d;
}

}  // namespace qcodes
