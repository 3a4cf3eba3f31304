#include "qcodes/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "qcodes/numeric.hpp"

namespace qcodes {

namespace {

constexpr std::uint64_t kMaxFieldSize = 1ULL << 20;

// Dense polynomials over F_p, coefficients ascending. Only used during field
// construction; everything afterwards runs on the log/antilog tables.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, std::uint32_t p) {
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
    // reduce by monic mod
    std::size_t d = mod.size() - 1;
    for (std::size_t i = prod.size(); i-- > d;) {
        std::uint32_t c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < d; ++j)
            prod[i - d + j] = (prod[i - d + j] + static_cast<std::uint64_t>(c) * (p - mod[j] % p)) % p;
    }
    prod.resize(d, 0);
    return prod;
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    std::size_t d = m.size() - 1;
    while (a.size() > d) {
        std::uint32_t c = a.back();
        std::size_t shift = a.size() - 1 - d;
        if (c) {
            for (std::size_t j = 0; j < d; ++j)
                a[shift + j] = (a[shift + j] + static_cast<std::uint64_t>(c) * (p - m[j] % p)) % p;
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic
        std::uint32_t lead = b.back();
        if (lead != 1) {
            std::uint32_t inv = static_cast<std::uint32_t>(powmod_u64(lead, p - 2, p));
            for (auto& c : b) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * inv % p);
        }
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
    std::uint32_t d = static_cast<std::uint32_t>(f.size() - 1);
    if (d == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    // x^{p^d} == x mod f, and gcd(x^{p^{d/r}} - x, f) = 1 for prime r | d
    Poly xp{0, 1};
    xp.resize(d, 0);
    std::vector<Poly> frob_powers;  // x^{p^i} mod f
    frob_powers.push_back(xp);
    for (std::uint32_t i = 1; i <= d; ++i) {
        // previous^p by square-and-multiply on the exponent p
        Poly acc{1};
        acc.resize(d, 0);
        Poly base = frob_powers.back();
        std::uint32_t e = p;
        while (e) {
            if (e & 1) acc = poly_mul_mod(acc, base, f, p);
            base = poly_mul_mod(base, base, f, p);
            e >>= 1;
        }
        frob_powers.push_back(acc);
    }
    Poly xpd = frob_powers[d];
    Poly x_only{0, 1};
    x_only.resize(d, 0);
    if (xpd != x_only) return false;
    for (auto [r, e] : factorize(d)) {
        (void)e;
        Poly diff = frob_powers[d / r];
        // diff - x
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        Poly g = poly_gcd(f, diff, p);
        trim(g);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ok: return "Ok";
        case Errc::invalid_modulus: return "InvalidModulus";
        case Errc::invalid_degree: return "InvalidDegree";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::field_mismatch: return "FieldMismatch";
        case Errc::invalid_subfield: return "InvalidSubfield";
        case Errc::zero_has_no_order: return "ZeroHasNoOrder";
        case Errc::not_coprime: return "NotCoprime";
        case Errc::invalid_cutoff: return "InvalidCutoff";
        case Errc::not_a_square: return "NotASquare";
        case Errc::shape_error: return "ShapeError";
        case Errc::not_a_divisor: return "NotADivisor";
        case Errc::repeated_roots: return "RepeatedRoots";
        case Errc::empty_code: return "EmptyCode";
        case Errc::empty_selection: return "EmptySelection";
        case Errc::unsupported_order: return "UnsupportedOrder";
        case Errc::invalid_representative: return "InvalidRepresentative";
        case Errc::invalid_index: return "InvalidIndex";
        case Errc::negative_dimension: return "NegativeDimension";
        case Errc::not_dual_containing: return "NotDualContaining";
        case Errc::invalid_propagation: return "InvalidPropagation";
        case Errc::unsupported: return "Unsupported";
        case Errc::not_minus_one_mod_8: return "NotMinusOneMod8";
        case Errc::zero_constant_term: return "ZeroConstantTerm";
        case Errc::not_nested: return "NotNested";
        case Errc::invalid_multiplicities: return "InvalidMultiplicities";
        case Errc::not_complement_splitting: return "NotComplementSplitting";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::budget_exceeded: return "BudgetExceeded";
        case Errc::construction_inconsistency: return "ConstructionInconsistency";
    }
    return "Unknown";
}

const Field& Field::get(std::uint32_t p, std::uint32_t d) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<Field>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, d);
    auto it = registry.find(key);
    if (it == registry.end())
        it = registry.emplace(key, std::unique_ptr<Field>(new Field(p, d))).first;
    return *it->second;
}

Field::Field(std::uint32_t p, std::uint32_t d) : p_(p), d_(d) {
    require(is_prime_u64(p), Errc::invalid_modulus, "p must be prime, got " + std::to_string(p));
    require(d >= 1, Errc::invalid_degree, "extension degree must be >= 1");
    q_ = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        require(q_ <= kMaxFieldSize / p, Errc::unsupported,
                "field size exceeds the table kernel limit 2^20");
        q_ *= p;
    }

    // Scan monic candidates in ascending order of their integer coefficient
    // code sum c_i p^i. The antilog table doubles as the primitivity
    // certificate: if powers of x cycle early, reject.
    std::vector<std::uint32_t> low(d, 0);
    bool found = false;
    while (true) {
        Poly f(low);
        f.push_back(1);
        bool candidate_ok = d == 1 ? f[0] != 0 : is_irreducible(f, p);
        if (candidate_ok) {
            alog_.assign(q_ - 1, 0);
            log_.assign(q_, 0);
            // residue of x as an integer code: for d >= 2 it is p; for d = 1 it
            // is -c0 mod p.
            Poly cur{1};
            bool primitive = true;
            for (std::uint64_t k = 0; k + 1 < q_; ++k) {
                Elt code = 0;
                for (std::size_t i = cur.size(); i-- > 0;) code = code * p + cur[i];
                if (k > 0 && code == 1) {
                    primitive = false;
                    break;
                }
                alog_[k] = code;
                log_[code] = static_cast<std::uint32_t>(k);
                // multiply by x
                cur.insert(cur.begin(), 0);
                cur = poly_mod(std::move(cur), f, p);
                cur.resize(d, 0);
            }
            if (primitive) {
                poly_.assign(f.begin(), f.end());
                found = true;
                break;
            }
        }
        // next candidate: ascending integer code sum c_i p^i (constant term
        // is the least significant digit)
        std::size_t i = 0;
        while (true) {
            if (++low[i] < p) break;
            low[i] = 0;
            ++i;
            require(i < d, Errc::construction_inconsistency,
                    "no primitive polynomial found (impossible)");
        }
    }
    ensure_consistent(found, "field construction failed");
    gen_ = d == 1 ? static_cast<Elt>((p - poly_[0] % p) % p) : static_cast<Elt>(p);
    ensure_consistent(q_ == 2 || alog_[1] == gen_, "generator/antilog mismatch");

    if (p_ > 2 && q_ <= 2048) {
        add_table_.assign(q_ * q_, 0);
        for (std::uint64_t a = 0; a < q_; ++a)
            for (std::uint64_t b = 0; b <= a; ++b) {
                std::uint64_t s = 0, mul = 1, aa = a, bb = b;
                while (aa || bb) {
                    s += mul * ((aa % p_ + bb % p_) % p_);
                    aa /= p_;
                    bb /= p_;
                    mul *= p_;
                }
                add_table_[a * q_ + b] = static_cast<Elt>(s);
                add_table_[b * q_ + a] = static_cast<Elt>(s);
            }
    }
    order_factors_ = factorize(q_ - 1);
}

Elt Field::add(Elt a, Elt b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[static_cast<std::uint64_t>(a) * q_ + b];
    std::uint64_t s = 0, mul = 1;
    while (a || b) {
        s += mul * ((a % p_ + b % p_) % p_);
        a /= p_;
        b /= p_;
        mul *= p_;
    }
    return static_cast<Elt>(s);
}

Elt Field::neg(Elt a) const {
    if (p_ == 2) return a;
    std::uint64_t s = 0, mul = 1;
    while (a) {
        s += mul * ((p_ - a % p_) % p_);
        a /= p_;
        mul *= p_;
    }
    return static_cast<Elt>(s);
}

Elt Field::frobenius(Elt a, std::uint64_t q0) const {
    std::uint64_t t = q0;
    while (t > 1) {
        require(t % p_ == 0, Errc::invalid_subfield,
                std::to_string(q0) + " is not a power of " + std::to_string(p_));
        t /= p_;
    }
    require(q0 >= 1, Errc::invalid_subfield, "subfield size must be positive");
    return pow(a, q0);
}

std::uint64_t Field::element_order(Elt a) const {
    require(a != 0, Errc::zero_has_no_order, "zero has no multiplicative order");
    // Peel prime factors of q-1.
    std::uint64_t n = q_ - 1;
    for (auto [r, e] : order_factors_) {
        (void)e;
        while (n % r == 0 && pow(a, n / r) == 1) n /= r;
    }
    return n;
}

bool Field::in_subfield(Elt a, std::uint64_t q0) const {
    std::uint64_t t = q0;
    std::uint32_t j = 0;
    while (t > 1) {
        require(t % p_ == 0, Errc::invalid_subfield,
                std::to_string(q0) + " is not a power of " + std::to_string(p_));
        t /= p_;
        ++j;
    }
    require(j >= 1 && d_ % j == 0, Errc::invalid_subfield,
            "subfield exponent must divide the extension degree");
    return pow(a, q0) == a;
}

std::vector<std::uint32_t> Field::coeffs(Elt a) const {
    std::vector<std::uint32_t> c(d_, 0);
    for (std::uint32_t i = 0; i < d_; ++i) {
        c[i] = a % p_;
        a /= p_;
    }
    return c;
}

Elt Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
    require(c.size() == d_, Errc::shape_error, "coefficient vector has wrong length");
    Elt a = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        require(c[i] < p_, Errc::shape_error, "coefficient out of range");
        a = static_cast<Elt>(a * p_ + c[i]);
    }
    return a;
}

Elt subfield_generator(const Field& ambient, std::uint64_t q0) {
    require(q0 >= 2 && (ambient.q() - 1) % (q0 - 1) == 0, Errc::invalid_subfield,
            "no subfield of size " + std::to_string(q0));
    return ambient.exp((ambient.q() - 1) / (q0 - 1));
}

SubfieldCoords::SubfieldCoords(const Field& ambient, std::uint64_t q0, std::uint32_t s)
    : amb_(ambient), q0_(q0), s_(s) {
    auto [pp, a] = prime_power_decompose(q0, Errc::invalid_subfield, "subfield size");
    require(pp == ambient.p(), Errc::invalid_subfield, "subfield characteristic mismatch");
    a_ = a;
    std::uint64_t qs = 1;
    for (std::uint32_t i = 0; i < s; ++i) qs *= q0;
    Elt beta = subfield_generator(amb_, qs);
    Elt h = subfield_generator(amb_, q0);
    fq_basis_.clear();
    for (std::uint32_t j = 0; j < a_; ++j) fq_basis_.push_back(amb_.pow(h, j));

    // Columns of the F_p solve matrix: coefficient vectors of h^j * beta^i.
    cols_ = s_ * a_;
    rows_ = amb_.d();
    basis_.clear();
    std::vector<std::vector<std::uint32_t>> columns;
    for (std::uint32_t i = 0; i < s_; ++i) {
        Elt bi = amb_.pow(beta, i);
        for (std::uint32_t j = 0; j < a_; ++j) {
            Elt prod = amb_.mul(fq_basis_[j], bi);
            basis_.push_back(prod);
            columns.push_back(amb_.coeffs(prod));
        }
    }
    // Store augmented row-major matrix [A | I-tracking] in row echelon form,
    // recomputed per solve for simplicity (dimensions are tiny).
    solve_.assign(rows_ * cols_, 0);
    for (std::uint32_t r = 0; r < rows_; ++r)
        for (std::uint32_t c = 0; c < cols_; ++c) solve_[r * cols_ + c] = columns[c][r];
}

std::vector<Elt> SubfieldCoords::coords(Elt z) const {
    std::uint32_t p = amb_.p();
    // Augmented system A u = coeffs(z) over F_p, Gaussian elimination.
    std::uint32_t cols = cols_ + 1;
    std::vector<std::uint32_t> m(rows_ * cols, 0);
    for (std::uint32_t r = 0; r < rows_; ++r) {
        for (std::uint32_t c = 0; c < cols_; ++c) m[r * cols + c] = solve_[r * cols_ + c];
    }
    auto zc = amb_.coeffs(z);
    for (std::uint32_t r = 0; r < rows_; ++r) m[r * cols + cols_] = zc[r];

    std::vector<int> pivot_col_of_row;
    std::uint32_t row = 0;
    for (std::uint32_t col = 0; col < cols_ && row < rows_; ++col) {
        std::uint32_t sel = row;
        while (sel < rows_ && m[sel * cols + col] == 0) ++sel;
        if (sel == rows_) continue;
        for (std::uint32_t c = 0; c < cols; ++c) std::swap(m[row * cols + c], m[sel * cols + c]);
        std::uint32_t invp = static_cast<std::uint32_t>(powmod_u64(m[row * cols + col], p - 2, p));
        for (std::uint32_t c = 0; c < cols; ++c)
            m[row * cols + c] = static_cast<std::uint32_t>(
                static_cast<std::uint64_t>(m[row * cols + c]) * invp % p);
        for (std::uint32_t r2 = 0; r2 < rows_; ++r2) {
            if (r2 == row || m[r2 * cols + col] == 0) continue;
            std::uint32_t f = m[r2 * cols + col];
            for (std::uint32_t c = 0; c < cols; ++c)
                m[r2 * cols + c] = static_cast<std::uint32_t>(
                    (m[r2 * cols + c] + static_cast<std::uint64_t>(p - f) * m[row * cols + c]) % p);
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    // Solution u (free variables zero). z in F_{q0^s} guarantees consistency.
    std::vector<std::uint32_t> u(cols_, 0);
    for (std::uint32_t r = 0; r < pivot_col_of_row.size(); ++r)
        u[pivot_col_of_row[r]] = m[r * cols + cols_];
    for (std::uint32_t r = static_cast<std::uint32_t>(pivot_col_of_row.size()); r < rows_; ++r)
        ensure_consistent(m[r * cols + cols_] == 0, "element not in the stated subfield");

    std::vector<Elt> out(s_, 0);
    for (std::uint32_t i = 0; i < s_; ++i) {
        Elt acc = 0;
        for (std::uint32_t j = 0; j < a_; ++j) {
            std::uint32_t scalar = u[i * a_ + j];
            if (!scalar) continue;
            // scalar in F_p embeds as the code `scalar`
            acc = amb_.add(acc, amb_.mul(static_cast<Elt>(scalar), fq_basis_[j]));
        }
        out[i] = acc;
    }
    return out;
}

Elt find_normal_element(std::uint64_t q0, std::uint32_t s, const Field& ambient) {
    if (s == 1) return 1;
    std::uint64_t qs = 1;
    for (std::uint32_t i = 0; i < s; ++i) {
        require(qs <= ambient.q() / q0, Errc::invalid_subfield, "subfield larger than ambient");
        qs *= q0;
    }
    Elt big_gen = subfield_generator(ambient, qs);
    SubfieldCoords coords(ambient, q0, s);

    for (std::uint64_t k = 0; k < qs - 1; ++k) {
        Elt gamma = ambient.pow(big_gen, k);
        // s x s rank test over F_{q0} of the conjugates' coordinate matrix.
        std::vector<std::vector<Elt>> rows;
        Elt conj = gamma;
        for (std::uint32_t i = 0; i < s; ++i) {
            rows.push_back(coords.coords(conj));
            conj = ambient.pow(conj, q0);
        }
        std::uint32_t rank = 0;
        for (std::uint32_t col = 0; col < s && rank < s; ++col) {
            std::uint32_t sel = rank;
            while (sel < s && rows[sel][col] == 0) ++sel;
            if (sel == s) continue;
            std::swap(rows[rank], rows[sel]);
            Elt inv = ambient.inv(rows[rank][col]);
            for (std::uint32_t c = 0; c < s; ++c) rows[rank][c] = ambient.mul(rows[rank][c], inv);
            for (std::uint32_t r = 0; r < s; ++r) {
                if (r == rank || rows[r][col] == 0) continue;
                Elt f = rows[r][col];
                for (std::uint32_t c = 0; c < s; ++c)
                    rows[r][c] = ambient.sub(rows[r][c], ambient.mul(f, rows[rank][c]));
            }
            ++rank;
        }
        if (rank == s) return gamma;
    }
    fail(Errc::construction_inconsistency, "no normal element found (impossible)");
}

SubfieldEmbedding::SubfieldEmbedding(const Field& sub, const Field& ambient)
    : sub_(sub), amb_(ambient) {
    require(sub.p() == ambient.p() && ambient.d() % sub.d() == 0, Errc::invalid_subfield,
            "no embedding between these fields");
    std::uint64_t q = sub.q();
    if (&sub_ == &amb_) {
        up_.resize(q);
        down_.reserve(q);
        for (std::uint64_t code = 0; code < q; ++code) {
            up_[code] = static_cast<Elt>(code);
            down_.emplace_back(static_cast<Elt>(code), static_cast<Elt>(code));
        }
        return;
    }
    // Roots of the standalone defining polynomial among the ambient subfield
    // of matching size; take the smallest code for determinism.
    Elt h = subfield_generator(amb_, q);
    Elt root = 0;
    bool found = false;
    std::vector<Elt> subfield_elems{0};
    Elt cur = 1;
    for (std::uint64_t i = 0; i + 1 < q; ++i) {
        subfield_elems.push_back(cur);
        cur = amb_.mul(cur, h);
    }
    std::sort(subfield_elems.begin(), subfield_elems.end());
    const auto& f = sub.defining_poly();
    for (Elt cand : subfield_elems) {
        Elt v = 0;
        for (std::size_t i = f.size(); i-- > 0;)
            v = amb_.add(amb_.mul(v, cand), static_cast<Elt>(f[i] % sub.p()));
        if (v == 0) {
            root = cand;
            found = true;
            break;
        }
    }
    ensure_consistent(found, "defining polynomial has no root in ambient subfield");

    up_.assign(q, 0);
    down_.reserve(q);
    for (std::uint64_t code = 0; code < q; ++code) {
        auto c = sub.coeffs(static_cast<Elt>(code));
        Elt v = 0;
        for (std::size_t i = c.size(); i-- > 0;)
            v = amb_.add(amb_.mul(v, root), static_cast<Elt>(c[i]));
        up_[code] = v;
        down_.emplace_back(v, static_cast<Elt>(code));
    }
    std::sort(down_.begin(), down_.end());
    for (std::size_t i = 1; i < down_.size(); ++i)
        ensure_consistent(down_[i].first != down_[i - 1].first, "embedding not injective");
}

Elt SubfieldEmbedding::to_sub(Elt a) const {
    auto it = std::lower_bound(down_.begin(), down_.end(), std::make_pair(a, Elt{0}));
    ensure_consistent(it != down_.end() && it->first == a,
                      "ambient element does not lie in the embedded subfield");
    return it->second;
}

}  // namespace qcodes
