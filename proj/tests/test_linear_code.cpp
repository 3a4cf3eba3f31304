#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "qcodes/linear_code.hpp"
#include "qcodes/numeric.hpp"

using namespace qcodes;

namespace {

std::vector<std::vector<Elt>> random_rows(const Field& f, std::size_t rows, std::size_t cols,
                                          std::uint64_t seed) {
    std::vector<std::vector<Elt>> out(rows, std::vector<Elt>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            out[r][c] = static_cast<Elt>(counter_rng(seed, r, c) % f.q());
    return out;
}

// Brute-force oracle over F_2 for tiny codes: enumerate all messages with
// plain integer arithmetic, no library calls on the hot path.
std::uint64_t brute_min_distance_gf2(const std::vector<std::vector<Elt>>& gen, std::size_t n) {
    std::size_t k = gen.size();
    std::uint64_t best = n + 1;
    for (std::uint64_t msg = 1; msg < (1ULL << k); ++msg) {
        std::uint64_t w = 0;
        for (std::size_t c = 0; c < n; ++c) {
            unsigned bit = 0;
            for (std::size_t r = 0; r < k; ++r)
                if (msg & (1ULL << r)) bit ^= gen[r][c];
            w += bit;
        }
        best = std::min(best, w);
    }
    return best;
}

}  // namespace

TEST_CASE("from_rows basics") {
    const Field& f4 = Field::get(2, 2);
    LinearCode zero = LinearCode::from_rows(f4, {{0, 0, 0}, {0, 0, 0}});
    CHECK(zero.k() == 0);
    CHECK(zero.n() == 3);

    LinearCode full = LinearCode::from_rows(f4, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(full.k() == 3);

    LinearCode c1 = LinearCode::from_rows(f4, {{1, 2, 3}, {0, 1, 1}});
    LinearCode c2 = LinearCode::from_rows(f4, {{1, 2, 3}, {0, 1, 1}, {1, 2, 3}});
    CHECK(c1.k() == c2.k());
    CHECK(c1 == c2);

    CHECK_THROWS_AS(LinearCode::from_rows(f4, {{1, 2}, {1}}), Error);
    CHECK_THROWS_AS(LinearCode::from_rows(f4, {{7, 0}}), Error);  // 7 not an F_4 code
}

TEST_CASE("rref is canonical under row permutation") {
    for (auto [p, d] : {std::pair<std::uint32_t, std::uint32_t>{2, 2}, {3, 2}, {2, 1}}) {
        const Field& f = Field::get(p, d);
        for (int trial = 0; trial < 30; ++trial) {
            auto rows = random_rows(f, 5, 8, 100 + trial);
            auto shuffled = rows;
            // deterministic shuffle
            for (std::size_t i = shuffled.size(); i > 1; --i)
                std::swap(shuffled[i - 1], shuffled[counter_rng(1, trial, i) % i]);
            CHECK(LinearCode::from_rows(f, rows) == LinearCode::from_rows(f, shuffled));
        }
    }
}

TEST_CASE("euclidean dual: dimensions, biduality, Gram") {
    const Field& f9 = Field::get(3, 2);
    LinearCode full = LinearCode::from_rows(f9, {{1, 0}, {0, 1}});
    CHECK(euclidean_dual(full).k() == 0);

    for (int trial = 0; trial < 20; ++trial) {
        auto rows = random_rows(f9, 4, 7, 500 + trial);
        LinearCode c = LinearCode::from_rows(f9, rows);
        LinearCode d = euclidean_dual(c);
        CHECK(c.k() + d.k() == c.n());
        CHECK(gram_is_zero_euclidean(c, d));
        CHECK(euclidean_dual(d) == c);
    }
}

TEST_CASE("hermitian dual: involution and Gram") {
    const Field& f4 = Field::get(2, 2);
    for (int trial = 0; trial < 20; ++trial) {
        auto rows = random_rows(f4, 3, 6, 900 + trial);
        LinearCode c = LinearCode::from_rows(f4, rows);
        LinearCode d = hermitian_dual(c);
        CHECK(c.k() + d.k() == c.n());
        CHECK(gram_is_zero_hermitian(d, c));
        CHECK(hermitian_dual(d) == c);
    }
    LinearCode zero(f4, 5);
    CHECK(hermitian_dual(zero).k() == 5);

    const Field& f8 = Field::get(2, 3);
    LinearCode c8 = LinearCode::from_rows(f8, {{1, 1}});
    CHECK_THROWS_AS(hermitian_dual(c8), Error);  // 8 is not a square
}

TEST_CASE("is_subcode") {
    const Field& f4 = Field::get(2, 2);
    LinearCode zero(f4, 4);
    LinearCode c = LinearCode::from_rows(f4, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    CHECK(is_subcode(zero, c));
    CHECK(is_subcode(c, c));
    LinearCode sub = LinearCode::from_rows(f4, {{1, 1, 1, 1}});
    CHECK(is_subcode(sub, c));
    CHECK_FALSE(is_subcode(c, sub));
    LinearCode other = LinearCode::from_rows(f4, {{1, 0, 0, 0}});
    CHECK_FALSE(is_subcode(other, c));
}

TEST_CASE("containment from generator polynomial divisibility") {
    // over F_2 at length 7: <g1 g2> is a subcode of <g1>
    const Field& f2 = Field::get(2, 1);
    std::vector<Elt> g1 = {1, 1, 0, 1};            // x^3 + x + 1
    std::vector<Elt> g2 = {1, 0, 1, 1};            // x^3 + x^2 + 1
    std::vector<Elt> prod = poly_mul(f2, g1, g2);
    CyclicCode inner = cyclic_from_genpoly(f2, 7, prod);
    CyclicCode outer = cyclic_from_genpoly(f2, 7, g1);
    CHECK(is_subcode(cyclic_to_linear(inner), cyclic_to_linear(outer)));
}

TEST_CASE("cyclic codes from generator polynomials") {
    const Field& f2 = Field::get(2, 1);
    CyclicCode hamming = cyclic_from_genpoly(f2, 7, {1, 1, 0, 1});
    CHECK(hamming.dim == 4);
    CHECK(hamming.defining_set == std::vector<std::uint64_t>{1, 2, 4});

    CyclicCode full = cyclic_from_genpoly(f2, 7, {1});
    CHECK(full.dim == 7);
    CHECK(full.defining_set.empty());

    // x^n - 1 gives the zero code by convention
    std::vector<Elt> xn1(8, 0);
    xn1[0] = 1;
    xn1[7] = 1;
    CyclicCode zero = cyclic_from_genpoly(f2, 7, xn1);
    CHECK(zero.dim == 0);
    CHECK(zero.defining_set.size() == 7);

    CHECK_THROWS_AS(cyclic_from_genpoly(f2, 7, {1, 1, 1}), Error);      // non-divisor
    CHECK_THROWS_AS(cyclic_from_genpoly(f2, 8, {1, 1}), Error);         // gcd(n, q) != 1

    // defining set size always equals degree, and it is a union of
    // q-cyclotomic cosets mod n
    const Field& f4 = Field::get(2, 2);
    std::vector<Elt> xn1_15(16, 0);
    xn1_15[0] = 1;
    xn1_15[15] = 1;
    // factor x^15 - 1 over F_4 by dividing out x - a for each 15th root in F_16...
    // easier: take the generator x - 1 (defining set {0})
    CyclicCode c = cyclic_from_genpoly(f4, 15, {f4.neg(1), 1});
    CHECK(c.dim == 14);
    CHECK(c.defining_set == std::vector<std::uint64_t>{0});
}

TEST_CASE("min distance: exact enumeration") {
    const Field& f5 = Field::get(5, 1);
    LinearCode rep = LinearCode::from_rows(f5, {{1, 1, 1, 1, 1, 1}});
    DistanceResult r = min_distance(rep, 1 << 20);
    CHECK(r.exact);
    CHECK(r.weight == 6);
    CHECK(r.words_seen == 1);  // one projective class

    // [7,4] Hamming code: d = 3, cross-checked against a test-local brute force
    const Field& f2 = Field::get(2, 1);
    CyclicCode hamming = cyclic_from_genpoly(f2, 7, {1, 1, 0, 1});
    LinearCode code = cyclic_to_linear(hamming);
    DistanceResult rh = min_distance(code, 1 << 20);
    CHECK(rh.exact);
    CHECK(rh.weight == 3);
    std::vector<std::vector<Elt>> gen(code.k());
    for (std::size_t i = 0; i < code.k(); ++i)
        gen[i].assign(code.gen().row(i), code.gen().row(i) + code.n());
    CHECK(brute_min_distance_gf2(gen, code.n()) == 3);
    CHECK(rh.words_seen == 15);

    LinearCode zero(f2, 4);
    CHECK_THROWS_AS(min_distance(zero, 100), Error);
}

TEST_CASE("min distance is invariant under generator row permutation") {
    const Field& f4 = Field::get(2, 2);
    auto rows = random_rows(f4, 3, 9, 77);
    LinearCode a = LinearCode::from_rows(f4, rows);
    std::reverse(rows.begin(), rows.end());
    LinearCode b = LinearCode::from_rows(f4, rows);
    CHECK(min_distance(a, 1 << 16).weight == min_distance(b, 1 << 16).weight);
}

TEST_CASE("min distance: budget exceeded returns a sampled upper bound") {
    const Field& f4 = Field::get(2, 2);
    auto rows = random_rows(f4, 10, 30, 42);
    LinearCode c = LinearCode::from_rows(f4, rows);
    REQUIRE(c.k() == 10);  // ~350k projective classes
    DistanceResult r = min_distance(c, 1000);
    CHECK_FALSE(r.exact);
    DistanceResult exact = min_distance(c, 1 << 24);
    CHECK(exact.exact);
    CHECK(r.weight >= exact.weight);  // upper bound
}

TEST_CASE("sample_weights: determinism and bounding") {
    const Field& f4 = Field::get(2, 2);
    auto rows = random_rows(f4, 4, 12, 1234);
    LinearCode c = LinearCode::from_rows(f4, rows);
    std::uint64_t w1 = sample_weights(c, 5000, 9);
    std::uint64_t w2 = sample_weights(c, 5000, 9);
    CHECK(w1 == w2);

    DistanceResult exact = min_distance(c, 1 << 20);
    CHECK(w1 >= exact.weight);
    // enough samples on a tiny code finds the true minimum
    std::uint64_t w3 = sample_weights(c, 200000, 0);
    CHECK(w3 == exact.weight);

    // a weight-1 row is found quickly
    LinearCode light = LinearCode::from_rows(f4, {{1, 0, 0, 0}, {0, 1, 1, 1}});
    CHECK(sample_weights(light, 10000, 0) == 1);
}

TEST_CASE("sample_weights is independent of the worker count") {
    const Field& f16 = Field::get(2, 4);
    auto rows = random_rows(f16, 6, 20, 5);
    LinearCode c = LinearCode::from_rows(f16, rows);
    std::uint64_t w1 = sample_weights(c, 20000, 3);
    setenv("QCODES_WORKERS", "4", 1);
    std::uint64_t w4 = sample_weights(c, 20000, 3);
    unsetenv("QCODES_WORKERS");
    CHECK(w1 == w4);
}

TEST_CASE("poly_divmod round-trips") {
    const Field& f9 = Field::get(3, 2);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Elt> a(8), b(4);
        for (auto& x : a) x = static_cast<Elt>(counter_rng(21, trial, &x - a.data()) % 9);
        for (auto& x : b) x = static_cast<Elt>(counter_rng(22, trial, &x - b.data()) % 9);
        while (!b.empty() && b.back() == 0) b.pop_back();
        if (b.empty()) continue;
        auto [q, r] = poly_divmod(f9, a, b);
        std::vector<Elt> back = poly_mul(f9, q, b);
        // back + r == a
        back.resize(std::max(back.size(), r.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) back[i] = f9.add(back[i], r[i]);
        std::vector<Elt> trimmed = a;
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        while (!back.empty() && back.back() == 0) back.pop_back();
        CHECK(back == trimmed);
        CHECK(static_cast<long long>(r.size()) <= static_cast<long long>(b.size()) - 1);
    }
}
