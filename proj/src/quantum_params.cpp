#include "qcodes/quantum_params.hpp"

#include <algorithm>

#include "qcodes/numeric.hpp"

namespace qcodes {

QuantumParams hermitian_construction(std::uint64_t n, std::uint64_t k, std::uint64_t d,
                                     std::uint64_t q) {
    std::uint64_t l = 1;
    while (l * l < q) ++l;
    require(l * l == q, Errc::not_a_square,
            "classical field size " + std::to_string(q) + " is not a perfect square");
    require(k <= n, Errc::invalid_argument, "dimension exceeds length");
    require(2 * k >= n, Errc::negative_dimension,
            "2k - n < 0: code too small to be dual-containing");
    QuantumParams qp;
    qp.base = l;
    qp.n = n;
    qp.k = 2 * k - n;
    qp.d = d;
    qp.provenance.push_back("hermitian_construction [" + std::to_string(n) + "," +
                            std::to_string(k) + "," + std::to_string(d) + "]_" +
                            std::to_string(q));
    return qp;
}

QuantumParams main_theorem_params(const TowerContext& ctx, const CosetSelection& sel) {
    require(ctx.a % 2 == 0, Errc::not_a_square,
            "main theorem needs q = p^{2e}; q = " + std::to_string(ctx.q));
    std::uint64_t pe = 1;
    for (std::uint32_t i = 0; i < ctx.a / 2; ++i) pe *= ctx.p;
    require(hermitian_condition(sel, pe), Errc::not_dual_containing,
            "selection fails the Hermitian coset condition");
    require(!sel.empty(), Errc::empty_selection, "empty selection");

    std::int64_t k_num = 2 * static_cast<std::int64_t>(sel.members.size()) -
                         static_cast<std::int64_t>(ctx.m) +
                         static_cast<std::int64_t>(ctx.subfield_gcd);
    require(k_num >= 0, Errc::negative_dimension, "formula dimension is negative");
    ensure_consistent(k_num % ctx.p == 0, "formula dimension not divisible by p");
    std::uint64_t k_formula = static_cast<std::uint64_t>(k_num) / ctx.p;
    std::uint64_t d_formula = distance_bound(ctx, sel);

    // Matrix route: build C(S), check Hermitian dual-containment at the
    // matrix level, and push the classical parameters through the Hermitian
    // construction.
    LinearCode code = build_code(ctx, sel);
    LinearCode dual = hermitian_dual(code);
    require(is_subcode(dual, code), Errc::not_dual_containing,
            "matrix-level Hermitian dual-containment fails");
    QuantumParams qp = hermitian_construction(ctx.n, code.k(), d_formula, ctx.q);
    ensure_consistent(qp.n == ctx.n && qp.k == k_formula,
                      "formula parameters disagree with the matrix route");
    qp.provenance.insert(qp.provenance.begin(),
                         "context q=" + std::to_string(ctx.q) + " m=" + std::to_string(ctx.m) +
                             " cutoff=" + std::to_string(sel.c));
    return qp;
}

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::subcode: return "subcode";
        case Rule::lengthen: return "lengthen";
        case Rule::puncture: return "puncture";
        case Rule::distance_drop: return "distance-drop";
    }
    return "?";
}

Rule rule_from_name(const std::string& name) {
    if (name == "subcode") return Rule::subcode;
    if (name == "lengthen") return Rule::lengthen;
    if (name == "puncture") return Rule::puncture;
    if (name == "distance-drop" || name == "distance_drop") return Rule::distance_drop;
    fail(Errc::invalid_argument, "unknown propagation rule '" + name + "'");
}

QuantumParams propagate(QuantumParams qp, Rule rule) {
    switch (rule) {
        case Rule::subcode:
            require(qp.k >= 1, Errc::invalid_propagation, "subcode rule underflows k");
            qp.k -= 1;
            break;
        case Rule::lengthen:
            qp.n += 1;
            break;
        case Rule::puncture:
            require(qp.n >= 2, Errc::invalid_propagation, "puncture rule underflows n");
            require(qp.d >= 2, Errc::invalid_propagation, "puncture rule underflows d");
            qp.n -= 1;
            qp.d -= 1;
            break;
        case Rule::distance_drop:
            require(qp.d >= 2, Errc::invalid_propagation, "distance-drop rule underflows d");
            qp.d -= 1;
            break;
    }
    require(qp.k <= qp.n, Errc::invalid_propagation, "propagation left k > n");
    qp.provenance.push_back(rule_name(rule));
    return qp;
}

std::vector<TableRow> table_search(const TowerContext& ctx) {
    require(ctx.a % 2 == 0, Errc::not_a_square,
            "table search needs q = p^{2e}; q = " + std::to_string(ctx.q));
    std::uint64_t pe = 1;
    for (std::uint32_t i = 0; i < ctx.a / 2; ++i) pe *= ctx.p;

    std::vector<TableRow> rows;
    for (std::uint64_t cutoff : ctx.family.A) {
        CosetSelection sel = ctx.select_cutoff(cutoff);
        if (!hermitian_condition(sel, pe)) continue;
        std::int64_t k_num = 2 * static_cast<std::int64_t>(sel.members.size()) -
                             static_cast<std::int64_t>(ctx.m) +
                             static_cast<std::int64_t>(ctx.subfield_gcd);
        if (k_num < 0) continue;
        TableRow row;
        row.cutoff = cutoff;
        row.params = main_theorem_params(ctx, sel);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(),
              [](const TableRow& x, const TableRow& y) { return x.cutoff < y.cutoff; });
    return rows;
}

}  // namespace qcodes
