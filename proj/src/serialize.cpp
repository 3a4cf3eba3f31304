#include "qcodes/serialize.hpp"

#include <sstream>

namespace qcodes {

Json field_to_json(const Field& f) {
    return Json{{"p", f.p()}, {"d", f.d()}, {"defining_poly", f.defining_poly()}};
}

Json coset_family_to_json(const CosetFamily& fam) {
    return Json{{"q", fam.q}, {"m", fam.m}, {"t", fam.t}, {"cosets", fam.cosets}, {"A", fam.A}};
}

std::string coset_family_to_csv(const CosetFamily& fam) {
    std::ostringstream out;
    out << "rep,size,full,members\n";
    for (std::size_t i = 0; i < fam.cosets.size(); ++i) {
        out << fam.reps[i] << ',' << fam.cosets[i].size() << ','
            << (fam.t > 1 && fam.cosets[i].size() == fam.t ? 1 : 0) << ',';
        for (std::size_t j = 0; j < fam.cosets[i].size(); ++j) {
            if (j) out << ' ';
            out << fam.cosets[i][j];
        }
        out << '\n';
    }
    return out.str();
}

Json code_to_json(const LinearCode& c) {
    std::vector<std::vector<Elt>> rows(c.k());
    for (std::size_t r = 0; r < c.k(); ++r)
        rows[r].assign(c.gen().row(r), c.gen().row(r) + c.n());
    return Json{
        {"field", field_to_json(c.field())}, {"n", c.n()}, {"k", c.k()}, {"rows", rows}};
}

Json construct_to_json(const TowerContext& ctx, const CosetSelection& sel) {
    LinearCode code = build_code(ctx, sel);
    Json provenance{{"q", ctx.q},
                    {"m", ctx.m},
                    {"cutoff", sel.c},
                    {"S", sel.members},
                    {"bound", sel.empty() ? 0 : distance_bound(ctx, sel)}};
    return Json{{"code", code_to_json(code)}, {"provenance", provenance}};
}

Json duality_report_to_json(const TowerContext& ctx, const DualityReport& report) {
    return Json{{"q", ctx.q},
                {"m", ctx.m},
                {"mode", report.mode == DualMode::euclidean ? "euclidean" : "hermitian"},
                {"pass", report.pass},
                {"dim_code", report.dim_code},
                {"dim_dual", report.dim_dual},
                {"gram_zero", report.gram_zero},
                {"dual_selection", report.dual_selection}};
}

Json mindist_to_json(const TowerContext& ctx, const CosetSelection& sel, const LinearCode& code,
                     const DistanceResult& enumerated, std::uint64_t samples, std::uint64_t seed,
                     std::uint64_t sampled_min, std::uint64_t bound) {
    Json j{{"q", ctx.q},
           {"m", ctx.m},
           {"cutoff", sel.c},
           {"n", code.n()},
           {"k", code.k()},
           {"declared_bound", bound},
           {"exact", enumerated.exact}};
    if (enumerated.exact) {
        j["distance"] = enumerated.weight;
        j["codewords_enumerated"] = enumerated.words_seen;
    } else {
        j["enumeration"] = "budget-exceeded";
        j["upper_bound"] = enumerated.weight;
    }
    if (samples > 0) {
        j["samples"] = samples;
        j["seed"] = seed;
        j["sampled_min_weight"] = sampled_min;
    }
    return j;
}

Json quantum_params_to_json(const QuantumParams& qp) {
    return Json{{"base", qp.base},
                {"n", qp.n},
                {"k", qp.k},
                {"d_bound", qp.d},
                {"provenance", qp.provenance}};
}

Json quantum_table_to_json(const TowerContext& ctx, const std::vector<TableRow>& rows) {
    Json out{{"q", ctx.q}, {"m", ctx.m}, {"rows", Json::array()}};
    for (const auto& row : rows) {
        Json r = quantum_params_to_json(row.params);
        r["cutoff"] = row.cutoff;
        out["rows"].push_back(std::move(r));
    }
    return out;
}

std::string quantum_table_to_csv(const TowerContext& ctx, const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "q,m,cutoff,n,k,d_bound\n";
    for (const auto& row : rows)
        out << ctx.q << ',' << ctx.m << ',' << row.cutoff << ',' << row.params.n << ','
            << row.params.k << ',' << row.params.d << '\n';
    return out.str();
}

Json sync_params_to_json(const SyncParams& sp) {
    Json j{{"base_length", sp.base_length},
           {"k1", sp.k1},
           {"k2", sp.k2},
           {"k", sp.k},
           {"tolerance_cap", sp.tolerance_cap},
           {"al", sp.al},
           {"ar", sp.ar},
           {"total_length", sp.base_length + sp.al + sp.ar},
           {"provenance", sp.provenance}};
    j["d1"] = sp.d1 ? Json(*sp.d1) : Json(nullptr);
    j["d2"] = sp.d2 ? Json(*sp.d2) : Json(nullptr);
    j["phase_bound"] = sp.phase_bound ? Json(*sp.phase_bound) : Json(nullptr);
    j["bit_bound"] = sp.bit_bound ? Json(*sp.bit_bound) : Json(nullptr);
    return j;
}

Json duadic_system_to_json(const DuadicSystem& sys) {
    Json levels = Json::array();
    for (const auto& level : sys.splitting().levels) {
        levels.push_back(Json{{"m", level.m},
                              {"modulus", level.modulus},
                              {"s0", level.s0},
                              {"s1", level.s1}});
    }
    Json factors = Json::array();
    for (const auto& fac : sys.factors()) {
        factors.push_back(Json{{"level", fac.level},
                               {"coset_min", fac.coset.front()},
                               {"degree", fac.coset.size()},
                               {"coset", fac.coset},
                               {"hex", fac.poly.to_hex()},
                               {"order", fac.order}});
    }
    Json generators = Json::array();
    for (std::uint32_t m = 1; m <= sys.n(); ++m) {
        for (int side = 0; side <= 1; ++side) {
            Gf2Poly d = sys.duadic_generator(m, side);
            std::uint64_t order_direct = poly_order_direct(d, sys.length());
            std::uint64_t order_lcm = sys.poly_order_lcm(d);
            generators.push_back(Json{{"m", m},
                                      {"side", side},
                                      {"degree", d.degree()},
                                      {"hex", d.to_hex()},
                                      {"order_direct", order_direct},
                                      {"order_lcm", order_lcm}});
        }
    }
    return Json{{"p", sys.p()},
                {"n", sys.n()},
                {"g", sys.splitting().g},
                {"field_degree", sys.field_degree()},
                {"levels", levels},
                {"factors", factors},
                {"generators", generators},
                {"factorization_identity", sys.factorization_identity_holds()},
                {"odd_like_distance_bound",
                 duadic_distance_bound(sys.p(), sys.n())}};
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qcodes
