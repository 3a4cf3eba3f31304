#include "qcodes.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "qcodes/reproduce.hpp"
#include "qcodes/serialize.hpp"

namespace {

thread_local std::string t_last_error;

int status_of(qcodes::Errc c) {
    using qcodes::Errc;
    switch (c) {
        case Errc::ok: return QCODES_OK;
        case Errc::invalid_modulus: return QCODES_E_INVALID_MODULUS;
        case Errc::invalid_degree: return QCODES_E_INVALID_DEGREE;
        case Errc::division_by_zero: return QCODES_E_DIVISION_BY_ZERO;
        case Errc::field_mismatch: return QCODES_E_FIELD_MISMATCH;
        case Errc::invalid_subfield: return QCODES_E_INVALID_SUBFIELD;
        case Errc::zero_has_no_order: return QCODES_E_ZERO_HAS_NO_ORDER;
        case Errc::not_coprime: return QCODES_E_NOT_COPRIME;
        case Errc::invalid_cutoff: return QCODES_E_INVALID_CUTOFF;
        case Errc::not_a_square: return QCODES_E_NOT_A_SQUARE;
        case Errc::shape_error: return QCODES_E_SHAPE;
        case Errc::not_a_divisor: return QCODES_E_NOT_A_DIVISOR;
        case Errc::repeated_roots: return QCODES_E_REPEATED_ROOTS;
        case Errc::empty_code: return QCODES_E_EMPTY_CODE;
        case Errc::empty_selection: return QCODES_E_EMPTY_SELECTION;
        case Errc::unsupported_order: return QCODES_E_UNSUPPORTED_ORDER;
        case Errc::invalid_representative: return QCODES_E_INVALID_REPRESENTATIVE;
        case Errc::invalid_index: return QCODES_E_INVALID_INDEX;
        case Errc::negative_dimension: return QCODES_E_NEGATIVE_DIMENSION;
        case Errc::not_dual_containing: return QCODES_E_NOT_DUAL_CONTAINING;
        case Errc::invalid_propagation: return QCODES_E_INVALID_PROPAGATION;
        case Errc::unsupported: return QCODES_E_UNSUPPORTED;
        case Errc::not_minus_one_mod_8: return QCODES_E_NOT_MINUS_ONE_MOD_8;
        case Errc::zero_constant_term: return QCODES_E_ZERO_CONSTANT_TERM;
        case Errc::not_nested: return QCODES_E_NOT_NESTED;
        case Errc::invalid_multiplicities: return QCODES_E_INVALID_MULTIPLICITIES;
        case Errc::not_complement_splitting: return QCODES_E_NOT_COMPLEMENT_SPLITTING;
        case Errc::invalid_argument: return QCODES_E_INVALID_ARGUMENT;
        case Errc::budget_exceeded: return QCODES_E_BUDGET_EXCEEDED;
        case Errc::construction_inconsistency: return QCODES_E_INTERNAL;
    }
    return QCODES_E_UNKNOWN;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return QCODES_OK;
    } catch (const qcodes::Error& e) {
        t_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return QCODES_E_UNKNOWN;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bool want_csv(const char* format) {
    if (format == nullptr) return false;
    std::string f(format);
    if (f == "csv") return true;
    qcodes::require(f == "json" || f.empty(), qcodes::Errc::invalid_argument,
                    "format must be json or csv");
    return false;
}

}  // namespace

struct qcodes_ctx {
    qcodes::TowerContext ctx;
};

struct qcodes_code {
    const qcodes_ctx* owner;
    qcodes::CosetSelection sel;
    qcodes::LinearCode code;
};

struct qcodes_duadic {
    qcodes::DuadicSystem sys;
    qcodes_duadic(uint64_t p, uint32_t n) : sys(p, n) {}
};

extern "C" {

const char* qcodes_status_name(int status) {
    switch (status) {
        case QCODES_OK: return "Ok";
        case QCODES_E_INVALID_MODULUS: return "InvalidModulus";
        case QCODES_E_INVALID_DEGREE: return "InvalidDegree";
        case QCODES_E_DIVISION_BY_ZERO: return "DivisionByZero";
        case QCODES_E_FIELD_MISMATCH: return "FieldMismatch";
        case QCODES_E_INVALID_SUBFIELD: return "InvalidSubfield";
        case QCODES_E_ZERO_HAS_NO_ORDER: return "ZeroHasNoOrder";
        case QCODES_E_NOT_COPRIME: return "NotCoprime";
        case QCODES_E_INVALID_CUTOFF: return "InvalidCutoff";
        case QCODES_E_NOT_A_SQUARE: return "NotASquare";
        case QCODES_E_SHAPE: return "ShapeError";
        case QCODES_E_NOT_A_DIVISOR: return "NotADivisor";
        case QCODES_E_REPEATED_ROOTS: return "RepeatedRoots";
        case QCODES_E_EMPTY_CODE: return "EmptyCode";
        case QCODES_E_EMPTY_SELECTION: return "EmptySelection";
        case QCODES_E_UNSUPPORTED_ORDER: return "UnsupportedOrder";
        case QCODES_E_INVALID_REPRESENTATIVE: return "InvalidRepresentative";
        case QCODES_E_INVALID_INDEX: return "InvalidIndex";
        case QCODES_E_NEGATIVE_DIMENSION: return "NegativeDimension";
        case QCODES_E_NOT_DUAL_CONTAINING: return "NotDualContaining";
        case QCODES_E_INVALID_PROPAGATION: return "InvalidPropagation";
        case QCODES_E_UNSUPPORTED: return "Unsupported";
        case QCODES_E_NOT_MINUS_ONE_MOD_8: return "NotMinusOneMod8";
        case QCODES_E_ZERO_CONSTANT_TERM: return "ZeroConstantTerm";
        case QCODES_E_NOT_NESTED: return "NotNested";
        case QCODES_E_INVALID_MULTIPLICITIES: return "InvalidMultiplicities";
        case QCODES_E_NOT_COMPLEMENT_SPLITTING: return "NotComplementSplitting";
        case QCODES_E_INVALID_ARGUMENT: return "InvalidArgument";
        case QCODES_E_BUDGET_EXCEEDED: return "BudgetExceeded";
        case QCODES_E_INTERNAL: return "ConstructionInconsistency";
    }
    return "Unknown";
}

const char* qcodes_last_error(void) { return t_last_error.c_str(); }

void qcodes_string_free(char* s) { std::free(s); }

int qcodes_ctx_new(uint64_t q, uint64_t m, qcodes_ctx** out) {
    return guarded([&] {
        auto holder = std::make_unique<qcodes_ctx>();
        holder->ctx = qcodes::make_context(q, m);
        *out = holder.release();
    });
}

void qcodes_ctx_free(qcodes_ctx* ctx) { delete ctx; }

int qcodes_ctx_info_json(const qcodes_ctx* ctx, char** out_json) {
    return guarded([&] {
        const auto& c = ctx->ctx;
        qcodes::Json j{{"q", c.q},
                       {"m", c.m},
                       {"p", c.p},
                       {"t", c.t},
                       {"s", c.s},
                       {"n", c.n},
                       {"ambient", qcodes::field_to_json(*c.ambient)},
                       {"base", qcodes::field_to_json(*c.base)},
                       {"omega", c.omega},
                       {"gamma", c.gamma},
                       {"eval_exponents", c.eval_exponents},
                       {"A", c.family.A}};
        *out_json = dup_string(qcodes::render_json(j));
    });
}

int qcodes_cosets(uint64_t q, uint64_t m, const char* format, char** out) {
    return guarded([&] {
        qcodes::CosetFamily fam = qcodes::coset_family(q, m);
        *out = dup_string(want_csv(format)
                              ? qcodes::coset_family_to_csv(fam)
                              : qcodes::render_json(qcodes::coset_family_to_json(fam)));
    });
}

int qcodes_ctx_construct(const qcodes_ctx* ctx, uint64_t cutoff, qcodes_code** out) {
    return guarded([&] {
        auto holder = std::make_unique<qcodes_code>();
        holder->owner = ctx;
        holder->sel = ctx->ctx.select_cutoff(cutoff);
        holder->code = qcodes::build_code(ctx->ctx, holder->sel);
        *out = holder.release();
    });
}

void qcodes_code_free(qcodes_code* code) { delete code; }

int qcodes_code_dims(const qcodes_code* code, uint64_t* n, uint64_t* k) {
    return guarded([&] {
        *n = code->code.n();
        *k = code->code.k();
    });
}

int qcodes_code_export_json(const qcodes_code* code, char** out_json) {
    return guarded([&] {
        *out_json = dup_string(
            qcodes::render_json(qcodes::construct_to_json(code->owner->ctx, code->sel)));
    });
}

int qcodes_code_mindist_json(const qcodes_code* code, uint64_t budget, uint64_t samples,
                             uint64_t seed, char** out_json) {
    return guarded([&] {
        const auto& ctx = code->owner->ctx;
        qcodes::DistanceResult r = qcodes::min_distance(code->code, budget);
        uint64_t sampled = 0;
        if (samples > 0) sampled = qcodes::sample_weights(code->code, samples, seed);
        uint64_t bound = qcodes::distance_bound(ctx, code->sel);
        *out_json = dup_string(qcodes::render_json(
            qcodes::mindist_to_json(ctx, code->sel, code->code, r, samples, seed, sampled, bound)));
    });
}

int qcodes_ctx_dual_check(const qcodes_ctx* ctx, uint64_t cutoff, const char* mode,
                          char** out_json, int* out_pass) {
    return guarded([&] {
        std::string m = mode == nullptr ? "euclidean" : mode;
        qcodes::DualMode dm;
        if (m == "euclidean") dm = qcodes::DualMode::euclidean;
        else if (m == "hermitian") dm = qcodes::DualMode::hermitian;
        else qcodes::fail(qcodes::Errc::invalid_argument, "mode must be euclidean or hermitian");
        qcodes::CosetSelection sel = ctx->ctx.select_cutoff(cutoff);
        qcodes::DualityReport report = qcodes::verify_duality(ctx->ctx, sel, dm);
        *out_pass = report.pass ? 1 : 0;
        *out_json =
            dup_string(qcodes::render_json(qcodes::duality_report_to_json(ctx->ctx, report)));
    });
}

int qcodes_ctx_quantum_table(const qcodes_ctx* ctx, const char* format, char** out) {
    return guarded([&] {
        auto rows = qcodes::table_search(ctx->ctx);
        *out = dup_string(want_csv(format)
                              ? qcodes::quantum_table_to_csv(ctx->ctx, rows)
                              : qcodes::render_json(qcodes::quantum_table_to_json(ctx->ctx, rows)));
    });
}

int qcodes_propagate(uint64_t base, uint64_t n, uint64_t k, uint64_t d, const char* rules,
                     char** out_json) {
    return guarded([&] {
        qcodes::QuantumParams qp;
        qp.base = base;
        qp.n = n;
        qp.k = k;
        qp.d = d;
        qcodes::require(k <= n && d >= 1 && n >= 1, qcodes::Errc::invalid_argument,
                        "need k <= n, d >= 1, n >= 1");
        qp.provenance.push_back("input [[" + std::to_string(n) + "," + std::to_string(k) + ",>=" +
                                std::to_string(d) + "]]_" + std::to_string(base));
        std::string all(rules == nullptr ? "" : rules);
        std::string name;
        for (std::size_t i = 0; i <= all.size(); ++i) {
            if (i == all.size() || all[i] == ',') {
                if (!name.empty()) qp = qcodes::propagate(std::move(qp), qcodes::rule_from_name(name));
                name.clear();
            } else {
                name.push_back(all[i]);
            }
        }
        *out_json = dup_string(qcodes::render_json(qcodes::quantum_params_to_json(qp)));
    });
}

int qcodes_duadic_new(uint64_t p, uint32_t n, qcodes_duadic** out) {
    return guarded([&] { *out = new qcodes_duadic(p, n); });
}

void qcodes_duadic_free(qcodes_duadic* sys) { delete sys; }

int qcodes_duadic_export_json(const qcodes_duadic* sys, char** out_json) {
    return guarded([&] {
        *out_json = dup_string(qcodes::render_json(qcodes::duadic_system_to_json(sys->sys)));
    });
}

int qcodes_duadic_sync_json(const qcodes_duadic* sys, const uint64_t* u, size_t u_len,
                            const uint64_t* v, size_t v_len, uint64_t al, uint64_t ar,
                            char** out_json) {
    return guarded([&] {
        std::vector<uint64_t> uv(u, u + u_len), vv(v, v + v_len);
        qcodes::SyncParams sp = qcodes::sync_family(sys->sys, uv, vv);
        qcodes::require(al + ar < sp.tolerance_cap, qcodes::Errc::invalid_argument,
                        "al + ar must be below ord(f) = " + std::to_string(sp.tolerance_cap));
        sp.al = al;
        sp.ar = ar;
        *out_json = dup_string(qcodes::render_json(qcodes::sync_params_to_json(sp)));
    });
}

int qcodes_duadic_generator_order(const qcodes_duadic* sys, uint32_t level, int side,
                                  uint64_t* out_order) {
    return guarded([&] {
        qcodes::Gf2Poly d = sys->sys.duadic_generator(level, side);
        uint64_t direct = qcodes::poly_order_direct(d, sys->sys.length());
        uint64_t lcm = sys->sys.poly_order_lcm(d);
        qcodes::ensure_consistent(direct == lcm, "order routes disagree");
        *out_order = direct;
    });
}

int qcodes_poly_order_hex(const char* hex, uint64_t known_multiple, uint64_t* out_order) {
    return guarded([&] {
        qcodes::Gf2Poly f = qcodes::Gf2Poly::from_hex(hex == nullptr ? "" : hex);
        *out_order = known_multiple > 0 ? qcodes::poly_order_direct(f, known_multiple)
                                        : qcodes::poly_order_bruteforce(f, 1u << 20);
    });
}

int qcodes_reproduce(const char* table, const char* format, char** out,
                     uint32_t* out_mismatches) {
    return guarded([&] {
        qcodes::ReproduceResult r =
            qcodes::reproduce_table(table == nullptr ? "" : table);
        *out_mismatches = static_cast<uint32_t>(r.mismatches);
        *out = dup_string(want_csv(format) ? qcodes::reproduce_to_csv(r)
                                           : qcodes::render_json(qcodes::reproduce_to_json(r)));
    });
}

}  // extern "C"
