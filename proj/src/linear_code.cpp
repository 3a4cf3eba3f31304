#include "qcodes/linear_code.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <thread>

#include "qcodes/cyclotomic.hpp"
#include "qcodes/numeric.hpp"

namespace qcodes {

namespace {

// Bit-packed rref for F_2 matrices; same canonical result as the generic
// path, two orders of magnitude faster on the long duadic codes.
std::size_t rref_gf2(std::vector<Elt>& a, std::size_t rows, std::size_t cols) {
    std::size_t words = (cols + 63) / 64;
    std::vector<std::uint64_t> packed(rows * words, 0);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (a[r * cols + c]) packed[r * words + c / 64] |= 1ULL << (c % 64);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t w = col / 64;
        std::uint64_t bit = 1ULL << (col % 64);
        std::size_t sel = rank;
        while (sel < rows && !(packed[sel * words + w] & bit)) ++sel;
        if (sel == rows) continue;
        if (sel != rank)
            for (std::size_t i = 0; i < words; ++i)
                std::swap(packed[rank * words + i], packed[sel * words + i]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || !(packed[r * words + w] & bit)) continue;
            for (std::size_t i = w; i < words; ++i) packed[r * words + i] ^= packed[rank * words + i];
        }
        ++rank;
    }
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            a[r * cols + c] = (packed[r * words + c / 64] >> (c % 64)) & 1;
    return rank;
}

}  // namespace

std::size_t Matrix::rref() {
    const Field& f = *field_;
    if (f.q() == 2) return rref_gf2(a_, rows_, cols_);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t sel = rank;
        while (sel < rows_ && at(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != rank)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(at(rank, c), at(sel, c));
        Elt inv = f.inv(at(rank, col));
        if (inv != 1)
            for (std::size_t c = col; c < cols_; ++c) at(rank, c) = f.mul(at(rank, c), inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank) continue;
            Elt factor = at(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < cols_; ++c)
                at(r, c) = f.sub(at(r, c), f.mul(factor, at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

void Matrix::drop_rows_below(std::size_t rank) {
    rows_ = rank;
    a_.resize(rows_ * cols_);
}

LinearCode LinearCode::from_rows(const Field& f, const std::vector<std::vector<Elt>>& rows) {
    std::size_t n = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        require(r.size() == n, Errc::shape_error, "ragged generator rows");
    Matrix m(f, rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) {
            require(rows[r][c] < f.q(), Errc::shape_error, "entry is not a field element code");
            m.at(r, c) = rows[r][c];
        }
    return from_matrix(std::move(m));
}

LinearCode LinearCode::from_matrix(Matrix m) {
    std::size_t rank = m.rref();
    m.drop_rows_below(rank);
    LinearCode c;
    c.field_ = &m.field();
    c.n_ = m.cols();
    c.gen_ = std::move(m);
    return c;
}

LinearCode euclidean_dual(const LinearCode& c) {
    const Field& f = c.field();
    std::size_t n = c.n(), k = c.k();
    // Pivot columns of the rref generator; a dual basis vector per free column.
    std::vector<std::size_t> pivot_col(k);
    std::vector<char> is_pivot(n, 0);
    for (std::size_t r = 0; r < k; ++r) {
        std::size_t col = 0;
        while (col < n && c.gen().at(r, col) == 0) ++col;
        ensure_consistent(col < n, "zero row in canonical generator");
        pivot_col[r] = col;
        is_pivot[col] = 1;
    }
    Matrix d(f, n - k, n);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        d.at(row, col) = 1;
        for (std::size_t r = 0; r < k; ++r) d.at(row, pivot_col[r]) = f.neg(c.gen().at(r, col));
        ++row;
    }
    return LinearCode::from_matrix(std::move(d));
}

namespace {

std::uint64_t sqrt_field_size(const Field& f) {
    std::uint64_t q = f.q();
    std::uint64_t l = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(q))));
    while (l * l > q) --l;
    while ((l + 1) * (l + 1) <= q) ++l;
    require(l * l == q, Errc::not_a_square,
            "field size " + std::to_string(q) + " is not a perfect square");
    return l;
}

}  // namespace

LinearCode hermitian_dual(const LinearCode& c) {
    const Field& f = c.field();
    std::uint64_t l = sqrt_field_size(f);
    Matrix conj(f, c.k(), c.n());
    for (std::size_t r = 0; r < c.k(); ++r)
        for (std::size_t col = 0; col < c.n(); ++col)
            conj.at(r, col) = f.pow(c.gen().at(r, col), l);
    return euclidean_dual(LinearCode::from_matrix(std::move(conj)));
}

bool is_subcode(const LinearCode& inner, const LinearCode& outer) {
    require(&inner.field() == &outer.field(), Errc::field_mismatch,
            "codes live over different fields");
    require(inner.n() == outer.n(), Errc::shape_error, "codes have different lengths");
    const Field& f = inner.field();
    std::size_t n = inner.n();
    // Reduce every inner row against the rref rows of the outer code.
    std::vector<std::size_t> pivot_col(outer.k());
    for (std::size_t r = 0; r < outer.k(); ++r) {
        std::size_t col = 0;
        while (col < n && outer.gen().at(r, col) == 0) ++col;
        pivot_col[r] = col;
    }
    std::vector<Elt> work(n);
    for (std::size_t r = 0; r < inner.k(); ++r) {
        std::memcpy(work.data(), inner.gen().row(r), n * sizeof(Elt));
        for (std::size_t j = 0; j < outer.k(); ++j) {
            Elt factor = work[pivot_col[j]];
            if (factor == 0) continue;
            const Elt* orow = outer.gen().row(j);
            if (f.p() == 2 && factor == 1) {
                for (std::size_t ccol = pivot_col[j]; ccol < n; ++ccol) work[ccol] ^= orow[ccol];
            } else {
                for (std::size_t ccol = pivot_col[j]; ccol < n; ++ccol)
                    work[ccol] = f.sub(work[ccol], f.mul(factor, orow[ccol]));
            }
        }
        for (std::size_t ccol = 0; ccol < n; ++ccol)
            if (work[ccol] != 0) return false;
    }
    return true;
}

bool gram_is_zero_euclidean(const LinearCode& a, const LinearCode& b) {
    const Field& f = a.field();
    for (std::size_t i = 0; i < a.k(); ++i)
        for (std::size_t j = 0; j < b.k(); ++j) {
            Elt acc = 0;
            for (std::size_t c = 0; c < a.n(); ++c)
                acc = f.add(acc, f.mul(a.gen().at(i, c), b.gen().at(j, c)));
            if (acc != 0) return false;
        }
    return true;
}

bool gram_is_zero_hermitian(const LinearCode& a, const LinearCode& b) {
    const Field& f = a.field();
    std::uint64_t l = sqrt_field_size(f);
    for (std::size_t i = 0; i < a.k(); ++i)
        for (std::size_t j = 0; j < b.k(); ++j) {
            Elt acc = 0;
            for (std::size_t c = 0; c < a.n(); ++c)
                acc = f.add(acc, f.mul(a.gen().at(i, c), f.pow(b.gen().at(j, c), l)));
            if (acc != 0) return false;
        }
    return true;
}

std::vector<Elt> poly_mul(const Field& f, const std::vector<Elt>& a, const std::vector<Elt>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Elt> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::pair<std::vector<Elt>, std::vector<Elt>> poly_divmod(const Field& f, std::vector<Elt> a,
                                                          const std::vector<Elt>& b) {
    require(!b.empty(), Errc::division_by_zero, "polynomial division by zero");
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.size() < b.size()) return {{}, a};
    std::vector<Elt> quot(a.size() - b.size() + 1, 0);
    Elt lead_inv = f.inv(b.back());
    for (std::size_t i = a.size(); i-- > 0;) {
        if (i + 1 < b.size()) break;
        Elt c = f.mul(a[i], lead_inv);
        if (c != 0) {
            std::size_t shift = i + 1 - b.size();
            quot[shift] = c;
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
        }
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return {quot, a};
}

CyclicCode cyclic_from_genpoly(const Field& f, std::size_t n, std::vector<Elt> genpoly,
                               std::optional<std::vector<std::uint64_t>> known_defining_set) {
    require(n >= 1, Errc::invalid_argument, "length must be positive");
    require(std::gcd(static_cast<std::uint64_t>(n), f.q()) == 1, Errc::repeated_roots,
            "gcd(n, q) != 1 gives x^n - 1 repeated roots");
    while (!genpoly.empty() && genpoly.back() == 0) genpoly.pop_back();
    require(!genpoly.empty(), Errc::invalid_argument, "zero generator polynomial");
    require(genpoly.back() == 1, Errc::invalid_argument, "generator polynomial must be monic");
    require(genpoly.size() <= n + 1, Errc::not_a_divisor, "degree exceeds length");

    // x^n - 1
    std::vector<Elt> xn1(n + 1, 0);
    xn1[0] = f.neg(1);
    xn1[n] = 1;
    auto [quot, rem] = poly_divmod(f, xn1, genpoly);
    (void)quot;
    require(rem.empty(), Errc::not_a_divisor, "generator polynomial does not divide x^n - 1");

    CyclicCode c;
    c.field = &f;
    c.n = n;
    c.genpoly = genpoly;
    c.dim = n + 1 - genpoly.size();

    std::size_t deg = genpoly.size() - 1;
    if (known_defining_set) {
        require(known_defining_set->size() == deg, Errc::invalid_argument,
                "defining set size must equal generator degree");
        c.defining_set = *known_defining_set;
        std::sort(c.defining_set.begin(), c.defining_set.end());
        return c;
    }
    if (deg == 0) return c;  // full space, empty defining set
    if (n == 1) {
        c.defining_set = {0};  // genpoly = x - 1, only root is omega^0 = 1
        return c;
    }

    // Root evaluation at omega^i for a primitive n-th root of unity in the
    // canonical splitting field F_{q^e}, e = ord_n(q).
    std::uint64_t e = ord_mod(f.q(), n);
    std::uint32_t ext_degree = f.d() * static_cast<std::uint32_t>(e);
    const Field& ext = Field::get(f.p(), ext_degree);
    SubfieldEmbedding emb(f, ext);
    Elt omega = ext.exp((ext.q() - 1) / n);
    std::vector<Elt> gp_up(genpoly.size());
    for (std::size_t i = 0; i < genpoly.size(); ++i) gp_up[i] = emb.to_ambient(genpoly[i]);
    for (std::uint64_t i = 0; i < n; ++i) {
        Elt point = ext.pow(omega, i);
        Elt v = 0;
        for (std::size_t j = gp_up.size(); j-- > 0;) v = ext.add(ext.mul(v, point), gp_up[j]);
        if (v == 0) c.defining_set.push_back(i);
    }
    ensure_consistent(c.defining_set.size() == deg,
                      "defining set size does not match generator degree");
    return c;
}

LinearCode cyclic_to_linear(const CyclicCode& c) {
    const Field& f = *c.field;
    Matrix m(f, c.dim, c.n);
    for (std::size_t r = 0; r < c.dim; ++r)
        for (std::size_t j = 0; j < c.genpoly.size(); ++j) m.at(r, r + j) = c.genpoly[j];
    return LinearCode::from_matrix(std::move(m));
}

namespace {

struct ScaledRows {
    // scaled[r * q + s] = s * row_r, contiguous length-n blocks
    std::vector<Elt> data;
    std::size_t n = 0;
    std::uint64_t q = 0;

    ScaledRows(const LinearCode& c) : n(c.n()), q(c.field().q()) {
        const Field& f = c.field();
        data.assign(c.k() * q * n, 0);
        for (std::size_t r = 0; r < c.k(); ++r)
            for (std::uint64_t s = 1; s < q; ++s) {
                Elt* dst = data.data() + (r * q + s) * n;
                const Elt* src = c.gen().row(r);
                for (std::size_t col = 0; col < n; ++col)
                    dst[col] = f.mul(static_cast<Elt>(s), src[col]);
            }
    }
    const Elt* block(std::size_t r, Elt s) const { return data.data() + (r * q + s) * n; }
};

void accumulate_row(const Field& f, Elt* acc, const Elt* row, std::size_t n) {
    if (f.p() == 2) {
        for (std::size_t c = 0; c < n; ++c) acc[c] ^= row[c];
    } else {
        for (std::size_t c = 0; c < n; ++c) acc[c] = f.add(acc[c], row[c]);
    }
}

std::uint64_t weight_of(const Elt* v, std::size_t n) {
    std::uint64_t w = 0;
    for (std::size_t c = 0; c < n; ++c) w += v[c] != 0;
    return w;
}

}  // namespace

DistanceResult min_distance(const LinearCode& c, std::uint64_t budget) {
    require(c.k() >= 1, Errc::empty_code, "zero code has no minimum distance");
    require(budget >= 1, Errc::invalid_argument, "budget must be positive");
    const Field& f = c.field();
    std::uint64_t q = f.q();
    std::size_t k = c.k(), n = c.n();

    // projective class count (q^k - 1) / (q - 1), clamped against overflow
    std::uint64_t classes = 0, power = 1;
    bool fits = true;
    for (std::size_t i = 0; i < k; ++i) {
        classes += power;
        if (classes > budget) {
            fits = false;
            break;
        }
        if (i + 1 < k) {
            if (power > std::numeric_limits<std::uint64_t>::max() / q) {
                fits = false;
                break;
            }
            power *= q;
        }
    }
    if (!fits || classes > budget) {
        std::uint64_t trials = std::min<std::uint64_t>(budget, 1u << 16);
        DistanceResult r;
        r.exact = false;
        r.weight = sample_weights(c, trials, 0);
        r.words_seen = trials;
        return r;
    }

    ScaledRows scaled(c);
    std::vector<Elt> word(n);
    std::vector<std::uint64_t> msg(k, 0);
    std::uint64_t best = n + 1, seen = 0;
    // First nonzero message coordinate fixed to 1: one representative per
    // scalar class, weights are scalar-invariant.
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::fill(msg.begin(), msg.end(), 0);
        bool done = false;
        while (!done) {
            std::fill(word.begin(), word.end(), 0);
            accumulate_row(f, word.data(), c.gen().row(lead), n);
            for (std::size_t j = lead + 1; j < k; ++j)
                if (msg[j]) accumulate_row(f, word.data(), scaled.block(j, static_cast<Elt>(msg[j])), n);
            best = std::min(best, weight_of(word.data(), n));
            ++seen;
            // odometer over positions lead+1..k-1
            std::size_t pos = k;
            done = true;
            while (pos-- > lead + 1) {
                if (++msg[pos] < q) {
                    done = false;
                    break;
                }
                msg[pos] = 0;
            }
        }
    }
    ensure_consistent(seen == classes, "projective enumeration count mismatch");
    DistanceResult r;
    r.exact = true;
    r.weight = best;
    r.words_seen = seen;
    return r;
}

std::uint64_t sample_weights(const LinearCode& c, std::uint64_t trials, std::uint64_t seed) {
    require(c.k() >= 1, Errc::empty_code, "zero code has no codewords to sample");
    require(trials >= 1, Errc::invalid_argument, "need at least one trial");
    const Field& f = c.field();
    std::uint64_t q = f.q();
    std::size_t k = c.k(), n = c.n();
    ScaledRows scaled(c);

    unsigned workers = 1;
    if (const char* env = std::getenv("QCODES_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 64) workers = static_cast<unsigned>(v);
    }

    auto run_range = [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
        std::vector<Elt> word(n);
        std::uint64_t best = ~0ULL;
        for (std::uint64_t trial = begin; trial < end; ++trial) {
            std::fill(word.begin(), word.end(), 0);
            bool nonzero = false;
            for (std::size_t j = 0; j < k; ++j) {
                Elt s = static_cast<Elt>(counter_rng(seed, trial, j) % q);
                if (!s) continue;
                nonzero = true;
                accumulate_row(f, word.data(), scaled.block(j, s), n);
            }
            if (!nonzero) {
                // vanishing message (probability q^-k): pin the first symbol
                accumulate_row(f, word.data(), c.gen().row(0), n);
            }
            best = std::min(best, weight_of(word.data(), n));
        }
        return best;
    };

    if (workers == 1) return run_range(0, trials);
    std::vector<std::uint64_t> results(workers, ~0ULL);
    std::vector<std::thread> pool;
    std::uint64_t chunk = (trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t b = w * chunk, e = std::min<std::uint64_t>(trials, b + chunk);
        if (b >= e) break;
        pool.emplace_back([&, w, b, e] { results[w] = run_range(b, e); });
    }
    for (auto& t : pool) t.join();
    return *std::min_element(results.begin(), results.end());
}

}  // namespace qcodes
