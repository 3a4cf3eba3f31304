// Command-line front end. Links the public C API only; all algebra lives in
// the shared library.
//
// Exit codes: 0 success, 1 invalid flags or domain errors, 2 verification or
// golden-table mismatch, 3 internal consistency failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcodes.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitInternal = 3;

int exit_for(int status) {
    if (status == QCODES_OK) return kExitOk;
    if (status == QCODES_E_INTERNAL) return kExitInternal;
    return kExitUsage;
}

int report_failure(int status) {
    std::cerr << "error (" << qcodes_status_name(status) << "): " << qcodes_last_error()
              << "\n";
    return exit_for(status);
}

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { qcodes_string_free(s); }
};

int emit(const char* text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file " << out_path << "\n";
        return kExitUsage;
    }
    f << text;
    return kExitOk;
}

struct CtxHandle {
    qcodes_ctx* ctx = nullptr;
    ~CtxHandle() { qcodes_ctx_free(ctx); }
};

struct CodeHandle {
    qcodes_code* code = nullptr;
    ~CodeHandle() { qcodes_code_free(code); }
};

struct DuadicHandle {
    qcodes_duadic* sys = nullptr;
    ~DuadicHandle() { qcodes_duadic_free(sys); }
};

std::vector<std::uint64_t> parse_u64_list(const std::string& csv) {
    std::vector<std::uint64_t> out;
    std::string cur;
    for (std::size_t i = 0; i <= csv.size(); ++i) {
        if (i == csv.size() || csv[i] == ',') {
            if (!cur.empty()) out.push_back(std::stoull(cur));
            cur.clear();
        } else {
            cur.push_back(csv[i]);
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact constructions of quantum block and synchronizable codes"};
    app.require_subcommand(1);

    std::string out_path, format = "json", mode = "euclidean";
    std::uint64_t q = 0, m = 0, cutoff = 0, p = 0;
    std::uint32_t n_exp = 1;
    std::uint64_t budget = 1ULL << 24, samples = 1000000, seed = 0;
    std::uint64_t base = 0, qn = 0, qk = 0, qd = 0;
    std::uint64_t al = 0, ar = 0, multiple = 0;
    std::string rules, u_csv, v_csv, hex, table;

    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    auto* cmd_cosets = app.add_subcommand("cosets", "dump the q-cyclotomic cosets mod m");
    cmd_cosets->add_option("--q", q, "base size")->required();
    cmd_cosets->add_option("--m", m, "modulus")->required();
    add_format(cmd_cosets);
    add_out(cmd_cosets);

    auto* cmd_construct =
        app.add_subcommand("construct", "build the evaluation code for a cutoff selection");
    cmd_construct->add_option("--q", q)->required();
    cmd_construct->add_option("--m", m)->required();
    cmd_construct->add_option("--cutoff", cutoff, "max(S), a full-coset representative")
        ->required();
    add_out(cmd_construct);

    auto* cmd_dual = app.add_subcommand("dual-check", "verify the dual-set rule at matrix level");
    cmd_dual->add_option("--q", q)->required();
    cmd_dual->add_option("--m", m)->required();
    cmd_dual->add_option("--cutoff", cutoff)->required();
    cmd_dual->add_option("--mode", mode, "euclidean or hermitian")
        ->check(CLI::IsMember({"euclidean", "hermitian"}));
    add_out(cmd_dual);

    auto* cmd_mindist = app.add_subcommand("mindist", "exact or sampled minimum distance");
    cmd_mindist->add_option("--q", q)->required();
    cmd_mindist->add_option("--m", m)->required();
    cmd_mindist->add_option("--cutoff", cutoff)->required();
    cmd_mindist->add_option("--budget", budget, "projective enumeration budget (default 2^24)");
    cmd_mindist->add_option("--samples", samples, "random codewords to sample (default 10^6)");
    cmd_mindist->add_option("--seed", seed, "sampling seed (default 0)");
    add_out(cmd_mindist);

    auto* cmd_table = app.add_subcommand("quantum-table", "all valid rows for a context");
    cmd_table->add_option("--q", q)->required();
    cmd_table->add_option("--m", m)->required();
    add_format(cmd_table);
    add_out(cmd_table);

    auto* cmd_prop = app.add_subcommand("propagate", "apply propagation rules to [[n,k,d]]");
    cmd_prop->add_option("--base", base, "quantum alphabet size")->required();
    cmd_prop->add_option("--n", qn)->required();
    cmd_prop->add_option("--k", qk)->required();
    cmd_prop->add_option("--d", qd)->required();
    cmd_prop
        ->add_option("--rules", rules,
                     "comma-separated: subcode, lengthen, puncture, distance-drop")
        ->required();
    add_out(cmd_prop);

    auto* cmd_duadic =
        app.add_subcommand("duadic", "duadic splitting, binary factors and orders for p^n");
    cmd_duadic->add_option("--p", p, "odd prime, p = 7 (mod 8)")->required();
    cmd_duadic->add_option("--n", n_exp, "exponent")->required();
    add_out(cmd_duadic);

    auto* cmd_sync = app.add_subcommand("sync", "synchronizable-code parameters");
    cmd_sync->add_option("--p", p)->required();
    cmd_sync->add_option("--n", n_exp)->required();
    cmd_sync->add_option("--u", u_csv, "per-level multiplicities, e.g. 1,1")->required();
    cmd_sync->add_option("--v", v_csv, "per-level multiplicities, e.g. 1,0")->required();
    cmd_sync->add_option("--al", al, "left misalignment tolerance");
    cmd_sync->add_option("--ar", ar, "right misalignment tolerance");
    add_out(cmd_sync);

    auto* cmd_order = app.add_subcommand("poly-order", "order of a binary polynomial");
    cmd_order->add_option("--hex", hex, "bit polynomial, hex, LSB = constant term")->required();
    cmd_order->add_option("--multiple", multiple,
                          "known multiple of the order (tests its divisors)");
    add_out(cmd_order);

    auto* cmd_repro = app.add_subcommand("reproduce", "recompute a golden table and compare");
    cmd_repro->add_option("--table", table, "I, III or IV")->required();
    add_format(cmd_repro);
    add_out(cmd_repro);

    CLI11_PARSE(app, argc, argv);

    if (cmd_cosets->parsed()) {
        OwnedString s;
        int st = qcodes_cosets(q, m, format.c_str(), &s.s);
        if (st != QCODES_OK) return report_failure(st);
        return emit(s.s, out_path);
    }

    if (cmd_construct->parsed() || cmd_mindist->parsed()) {
        CtxHandle ctx;
        int st = qcodes_ctx_new(q, m, &ctx.ctx);
        if (st != QCODES_OK) return report_failure(st);
        CodeHandle code;
        st = qcodes_ctx_construct(ctx.ctx, cutoff, &code.code);
        if (st != QCODES_OK) return report_failure(st);
        OwnedString s;
        if (cmd_construct->parsed())
            st = qcodes_code_export_json(code.code, &s.s);
        else
            st = qcodes_code_mindist_json(code.code, budget, samples, seed, &s.s);
        if (st != QCODES_OK) return report_failure(st);
        return emit(s.s, out_path);
    }

    if (cmd_dual->parsed()) {
        CtxHandle ctx;
        int st = qcodes_ctx_new(q, m, &ctx.ctx);
        if (st != QCODES_OK) return report_failure(st);
        OwnedString s;
        int pass = 0;
        st = qcodes_ctx_dual_check(ctx.ctx, cutoff, mode.c_str(), &s.s, &pass);
        if (st != QCODES_OK) return report_failure(st);
        int rc = emit(s.s, out_path);
        if (rc != kExitOk) return rc;
        return pass ? kExitOk : kExitMismatch;
    }

    if (cmd_table->parsed()) {
        CtxHandle ctx;
        int st = qcodes_ctx_new(q, m, &ctx.ctx);
        if (st != QCODES_OK) return report_failure(st);
        OwnedString s;
        st = qcodes_ctx_quantum_table(ctx.ctx, format.c_str(), &s.s);
        if (st != QCODES_OK) return report_failure(st);
        return emit(s.s, out_path);
    }

    if (cmd_prop->parsed()) {
        OwnedString s;
        int st = qcodes_propagate(base, qn, qk, qd, rules.c_str(), &s.s);
        if (st != QCODES_OK) return report_failure(st);
        return emit(s.s, out_path);
    }

    if (cmd_duadic->parsed()) {
        DuadicHandle sys;
        int st = qcodes_duadic_new(p, n_exp, &sys.sys);
        if (st != QCODES_OK) return report_failure(st);
        OwnedString s;
        st = qcodes_duadic_export_json(sys.sys, &s.s);
        if (st != QCODES_OK) return report_failure(st);
        return emit(s.s, out_path);
    }

    if (cmd_sync->parsed()) {
        DuadicHandle sys;
        int st = qcodes_duadic_new(p, n_exp, &sys.sys);
        if (st != QCODES_OK) return report_failure(st);
        auto u = parse_u64_list(u_csv), v = parse_u64_list(v_csv);
        OwnedString s;
        st = qcodes_duadic_sync_json(sys.sys, u.data(), u.size(), v.data(), v.size(), al, ar,
                                     &s.s);
        if (st != QCODES_OK) return report_failure(st);
        return emit(s.s, out_path);
    }

    if (cmd_order->parsed()) {
        std::uint64_t order = 0;
        int st = qcodes_poly_order_hex(hex.c_str(), multiple, &order);
        if (st != QCODES_OK) return report_failure(st);
        std::string text = "{\n  \"hex\": \"" + hex + "\",\n  \"order\": " +
                           std::to_string(order) + "\n}\n";
        return emit(text.c_str(), out_path);
    }

    if (cmd_repro->parsed()) {
        OwnedString s;
        uint32_t mismatches = 0;
        int st = qcodes_reproduce(table.c_str(), format.c_str(), &s.s, &mismatches);
        if (st != QCODES_OK) return report_failure(st);
        int rc = emit(s.s, out_path);
        if (rc != kExitOk) return rc;
        if (mismatches > 0) {
            std::cerr << "reproduce: " << mismatches << " row(s) failed to match\n";
            return kExitMismatch;
        }
        return kExitOk;
    }

    return kExitUsage;
}
