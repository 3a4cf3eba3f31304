#include "qcodes/poly_code.hpp"

#include <algorithm>
#include <numeric>

#include "qcodes/numeric.hpp"

namespace qcodes {

TowerContext make_context(std::uint64_t q, std::uint64_t m) {
    TowerContext ctx;
    ctx.q = q;
    ctx.m = m;
    require(m >= 2, Errc::invalid_modulus, "modulus must be >= 2");
    require(std::gcd(q, m) == 1, Errc::not_coprime, "gcd(q, m) != 1");
    auto [p, a] = prime_power_decompose(q, Errc::invalid_modulus, "q");
    ctx.p = static_cast<std::uint32_t>(p);
    ctx.a = a;

    ctx.t = ord_mod(q, m);
    std::uint64_t tt = ctx.t;
    std::uint32_t b = 0;
    while (tt % p == 0) {
        tt /= p;
        ++b;
    }
    require(tt == 1 && b >= 1, Errc::unsupported_order,
            "ord_m(q) = " + std::to_string(ctx.t) + " is not a positive power of " +
                std::to_string(p));
    ctx.b = b;
    ctx.s = ctx.t / p;

    std::uint64_t qs = 1;
    for (std::uint64_t i = 0; i < ctx.s; ++i) qs *= q;
    ctx.subfield_gcd = std::gcd(m, qs - 1);
    ensure_consistent((m - ctx.subfield_gcd) % p == 0, "length formula not divisible by p");
    ctx.n = (m - ctx.subfield_gcd) / p;

    ctx.ambient = &Field::get(ctx.p, ctx.a * static_cast<std::uint32_t>(ctx.t));
    ctx.base = &Field::get(ctx.p, ctx.a);
    ctx.embed = std::make_unique<SubfieldEmbedding>(*ctx.base, *ctx.ambient);

    ensure_consistent((ctx.ambient->q() - 1) % m == 0, "m does not divide q^t - 1");
    ctx.omega = ctx.ambient->exp((ctx.ambient->q() - 1) / m);
    ensure_consistent(ctx.ambient->element_order(ctx.omega) == m, "omega order mismatch");
    ctx.gamma = find_normal_element(q, static_cast<std::uint32_t>(ctx.s), *ctx.ambient);
    ensure_consistent(ctx.ambient->in_subfield(ctx.gamma, qs), "gamma outside F_{q^s}");

    ctx.family = coset_family(q, m);

    ctx.omega_pow.resize(m);
    Elt cur = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        ctx.omega_pow[i] = cur;
        cur = ctx.ambient->mul(cur, ctx.omega);
    }

    // Evaluation points: orbit minima of exponents under multiplication by
    // q^s, excluding exponents whose root of unity lies in F_{q^s}.
    std::uint64_t mult = powmod_u64(qs % m, 1, m);
    std::uint64_t excl_stride = m / ctx.subfield_gcd;  // omega^e in F_{q^s} iff stride | e
    std::vector<char> seen(m, 0);
    for (std::uint64_t e = 0; e < m; ++e) {
        if (seen[e] || e % excl_stride == 0) continue;
        std::uint64_t x = e, mn = e;
        do {
            seen[x] = 1;
            mn = std::min(mn, x);
            x = mulmod_u64(x, mult, m);
        } while (x != e);
        ctx.eval_exponents.push_back(mn);
    }
    std::sort(ctx.eval_exponents.begin(), ctx.eval_exponents.end());
    ensure_consistent(ctx.eval_exponents.size() == ctx.n,
                      "evaluation point count disagrees with the length formula");
    return ctx;
}

EvalPolynomial build_eval_poly(const TowerContext& ctx, std::uint64_t rep, std::uint64_t shift) {
    require(std::binary_search(ctx.family.A.begin(), ctx.family.A.end(), rep),
            Errc::invalid_representative,
            std::to_string(rep) + " is not a full-coset representative");
    require(shift < ctx.s, Errc::invalid_index, "shift index out of range");
    EvalPolynomial poly;
    poly.rep = rep;
    poly.shift = shift;
    const Field& F = *ctx.ambient;
    std::uint64_t exp_q = 1;  // q^j mod m, built incrementally
    for (std::uint64_t j = 0; j < ctx.t; ++j) {
        // gamma^{q^{j+shift}}: exponents of gamma stay small (q^{j+shift}
        // <= q^{t+s}), fine for 64-bit pow
        std::uint64_t gexp = 1;
        for (std::uint64_t i = 0; i < j + shift; ++i) gexp *= ctx.q;
        Elt coeff = F.pow(ctx.gamma, gexp);
        std::uint64_t xexp = mulmod_u64(rep % ctx.m, exp_q, ctx.m);
        poly.terms.emplace_back(coeff, xexp);
        exp_q = mulmod_u64(exp_q, ctx.q % ctx.m, ctx.m);
    }
    // Degree-equals-rep invariant: reduced exponents are distinct (the coset
    // has full size) and their maximum is the representative.
    std::vector<std::uint64_t> exps;
    for (auto& [cf, xe] : poly.terms) exps.push_back(xe);
    std::sort(exps.begin(), exps.end());
    ensure_consistent(std::adjacent_find(exps.begin(), exps.end()) == exps.end(),
                      "evaluation polynomial has colliding exponents");
    ensure_consistent(exps.back() == rep, "evaluation polynomial degree differs from rep");
    return poly;
}

Elt eval_at_exponent(const TowerContext& ctx, const EvalPolynomial& poly, std::uint64_t exponent) {
    const Field& F = *ctx.ambient;
    Elt acc = 0;
    for (const auto& [coeff, xexp] : poly.terms) {
        std::uint64_t point_exp = mulmod_u64(exponent % ctx.m, xexp, ctx.m);
        acc = F.add(acc, F.mul(coeff, ctx.omega_pow[point_exp]));
    }
    return acc;
}

LinearCode build_code(const TowerContext& ctx, const CosetSelection& sel) {
    require(sel.family == &ctx.family, Errc::field_mismatch,
            "selection belongs to a different context");
    const Field& F = *ctx.ambient;
    std::vector<std::vector<Elt>> rows;
    for (std::uint64_t rep : sel.reps) {
        for (std::uint64_t shift = 0; shift < ctx.s; ++shift) {
            EvalPolynomial poly = build_eval_poly(ctx, rep, shift);
            std::vector<Elt> row(ctx.n);
            for (std::size_t i = 0; i < ctx.eval_exponents.size(); ++i) {
                Elt v = eval_at_exponent(ctx, poly, ctx.eval_exponents[i]);
                // Frobenius fixed-point assertion before coercion to F_q
                ensure_consistent(F.pow(v, ctx.q) == v,
                                  "evaluation not fixed by the q-power Frobenius");
                row[i] = ctx.embed->to_sub(v);
            }
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) return LinearCode(*ctx.base, ctx.n);
    LinearCode code = LinearCode::from_rows(*ctx.base, rows);
    ensure_consistent(code.k() * ctx.p == sel.members.size(),
                      "code rank differs from |S|/p");
    return code;
}

std::uint64_t distance_bound(const TowerContext& ctx, const CosetSelection& sel) {
    require(!sel.empty(), Errc::empty_selection, "distance bound needs a nonempty selection");
    return ceil_div(ctx.m + 1 - sel.c, ctx.p);
}

DualityReport verify_duality(const TowerContext& ctx, const CosetSelection& sel, DualMode mode) {
    DualityReport report;
    report.mode = mode;

    std::vector<std::uint64_t> twisted = sel.members;
    if (mode == DualMode::hermitian) {
        std::uint64_t l = 1;
        require(ctx.a % 2 == 0, Errc::not_a_square,
                "Hermitian duality needs q to be a perfect square");
        for (std::uint32_t i = 0; i < ctx.a / 2; ++i) l *= ctx.p;
        twisted = scale_set(twisted, l, ctx.m);
    }
    std::vector<std::uint64_t> barred = negate_set(twisted, ctx.m);
    std::vector<std::uint64_t> frak = ctx.family.full_union();
    std::vector<std::uint64_t> r_members;
    std::set_difference(frak.begin(), frak.end(), barred.begin(), barred.end(),
                        std::back_inserter(r_members));
    CosetSelection r_sel = selection_from_members(ctx.family, r_members);
    report.dual_selection = r_members;

    LinearCode cs = build_code(ctx, sel);
    LinearCode cr = build_code(ctx, r_sel);
    LinearCode dual =
        mode == DualMode::euclidean ? euclidean_dual(cs) : hermitian_dual(cs);
    report.dim_code = cs.k();
    report.dim_dual = dual.k();
    report.gram_zero = mode == DualMode::euclidean ? gram_is_zero_euclidean(cs, dual)
                                                   : gram_is_zero_hermitian(dual, cs);
    report.pass = (dual == cr) && report.gram_zero &&
                  (report.dim_code + report.dim_dual == ctx.n);
    return report;
}

}  // namespace qcodes
