#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "qcodes/cyclotomic.hpp"
#include "qcodes/numeric.hpp"

using namespace qcodes;

namespace {

using Set = std::vector<std::uint64_t>;

Set set_of(std::initializer_list<std::uint64_t> v) {
    Set s(v);
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

TEST_CASE("ord_mod") {
    CHECK(ord_mod(4, 15) == 2);
    CHECK(ord_mod(16, 255) == 2);
    CHECK(ord_mod(9, 728) == 3);
    CHECK(ord_mod(2, 7) == 3);
    CHECK_THROWS_AS(ord_mod(6, 15), Error);
}

TEST_CASE("coset family (4, 15)") {
    CosetFamily fam = coset_family(4, 15);
    CHECK(fam.t == 2);
    std::vector<std::vector<std::uint64_t>> expected = {
        {0}, {1, 4}, {5}, {2, 8}, {6, 9}, {10}, {3, 12}, {7, 13}, {11, 14}};
    CHECK(fam.cosets == expected);
    CHECK(fam.A == Set{4, 8, 9, 12, 13, 14});
    CHECK(fam.full_union() == set_of({1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 13, 14}));
}

TEST_CASE("coset family (2, 7)") {
    CosetFamily fam = coset_family(2, 7);
    CHECK(fam.t == 3);
    std::vector<std::vector<std::uint64_t>> expected = {{0}, {1, 2, 4}, {3, 5, 6}};
    CHECK(fam.cosets == expected);
    CHECK(fam.A == Set{4, 6});
}

TEST_CASE("degenerate t = 1 gives singletons and empty A") {
    CosetFamily fam = coset_family(16, 15);  // 16 = 1 mod 15
    CHECK(fam.t == 1);
    for (const auto& c : fam.cosets) CHECK(c.size() == 1);
    CHECK(fam.A.empty());
}

TEST_CASE("cosets partition Z_m and are closed under multiplication by q") {
    for (auto [q, m] : {std::pair<std::uint64_t, std::uint64_t>{4, 255},
                        {16, 255},
                        {9, 104},
                        {9, 728},
                        {16, 85},
                        {2, 31},
                        {3, 20}}) {
        CosetFamily fam = coset_family(q, m);
        std::size_t total = 0;
        std::set<std::uint64_t> all;
        for (const auto& c : fam.cosets) {
            total += c.size();
            for (auto v : c) {
                all.insert(v);
                CHECK(std::binary_search(c.begin(), c.end(), mulmod_u64(v, q, m)));
            }
        }
        CHECK(total == m);
        CHECK(all.size() == m);
    }
}

TEST_CASE("non-full coset characterization and |A| t = m - gcd(m, q^s - 1)") {
    // contexts with ord = p^b; s = t/p
    struct Case { std::uint64_t q, m, p; };
    for (auto [q, m, p] : {Case{4, 15, 2}, {4, 255, 2}, {16, 85, 2}, {16, 255, 2},
                           {9, 104, 3}, {9, 728, 3}}) {
        CosetFamily fam = coset_family(q, m);
        std::uint64_t s = fam.t / p;
        std::uint64_t qs = 1;
        for (std::uint64_t i = 0; i < s; ++i) qs *= q;
        std::uint64_t g0 = std::gcd(m, qs - 1);
        std::uint64_t stride = m / g0;
        for (std::size_t i = 0; i < fam.cosets.size(); ++i) {
            for (auto a : fam.cosets[i]) {
                bool small = fam.cosets[i].size() < fam.t;
                CHECK(small == (a % stride == 0));
            }
        }
        CHECK(fam.A.size() * fam.t == m - g0);
    }
}

TEST_CASE("selection from cutoff (4, 15)") {
    CosetFamily fam = coset_family(4, 15);
    CosetSelection s9 = selection_from_cutoff(fam, 9);
    CHECK(s9.members == set_of({1, 2, 4, 6, 8, 9}));
    CHECK(s9.c == 9);
    CosetSelection s13 = selection_from_cutoff(fam, 13);
    CHECK(s13.members == set_of({1, 2, 3, 4, 6, 7, 8, 9, 12, 13}));
    CHECK(s13.members.size() == 10);
    CosetSelection s4 = selection_from_cutoff(fam, 4);
    CHECK(s4.members == set_of({1, 4}));
    CHECK_THROWS_AS(selection_from_cutoff(fam, 5), Error);   // not full
    CHECK_THROWS_AS(selection_from_cutoff(fam, 1), Error);   // not a representative
}

TEST_CASE("cutoff rule is the unique coset union matching the dimension formula") {
    // Exhaustive oracle on (4, 15): among all unions of full cosets whose
    // maximum is exactly `cutoff`, only the cutoff-rule union attains the
    // published dimension k = (2|S| - m + gcd)/p.
    CosetFamily fam = coset_family(4, 15);
    std::vector<std::size_t> full_idx;
    for (std::size_t i = 0; i < fam.cosets.size(); ++i)
        if (fam.cosets[i].size() == fam.t) full_idx.push_back(i);
    REQUIRE(full_idx.size() == 6);

    struct Case { std::uint64_t cutoff; std::uint64_t expected_k; };
    for (auto [cutoff, expected_k] : {Case{9, 0}, {13, 4}}) {
        std::vector<Set> matches;
        for (std::uint64_t mask = 1; mask < (1u << full_idx.size()); ++mask) {
            Set members;
            std::uint64_t mx = 0;
            for (std::size_t j = 0; j < full_idx.size(); ++j)
                if (mask & (1u << j)) {
                    const auto& c = fam.cosets[full_idx[j]];
                    members.insert(members.end(), c.begin(), c.end());
                    mx = std::max(mx, c.back());
                }
            if (mx != cutoff) continue;
            std::sort(members.begin(), members.end());
            std::int64_t knum = 2 * static_cast<std::int64_t>(members.size()) - 15 + 3;
            if (knum >= 0 && knum % 2 == 0 &&
                static_cast<std::uint64_t>(knum / 2) == expected_k)
                matches.push_back(members);
        }
        REQUIRE(matches.size() == 1);
        CHECK(matches[0] == selection_from_cutoff(fam, cutoff).members);
    }
}

TEST_CASE("selection_from_members validates full-coset unions") {
    CosetFamily fam = coset_family(4, 15);
    CosetSelection s = selection_from_members(fam, {1, 4, 2, 8});
    CHECK(s.reps == Set{4, 8});
    CHECK(s.c == 8);
    CHECK_THROWS_AS(selection_from_members(fam, {1}), Error);      // partial coset
    CHECK_THROWS_AS(selection_from_members(fam, {5}), Error);      // non-full coset
    CHECK(selection_from_members(fam, {}).empty());
}

TEST_CASE("negate_set") {
    CHECK(negate_set({0}, 15) == Set{0});
    CHECK(negate_set({1, 4}, 15) == set_of({14, 11}));
    for (int trial = 0; trial < 50; ++trial) {
        Set s;
        for (int i = 0; i < 6; ++i) s.push_back(counter_rng(5, trial, i) % 61);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        CHECK(negate_set(negate_set(s, 61), 61) == s);  // involution
    }
}

TEST_CASE("scale_set") {
    CosetFamily fam = coset_family(4, 15);
    CHECK(scale_set({1, 4}, 1, 15) == set_of({1, 4}));
    CHECK(scale_set({1, 4}, 2, 15) == set_of({2, 8}));
    CHECK_THROWS_AS(scale_set({1}, 5, 15), Error);  // gcd(5,15) != 1

    // negation and coprime scaling map unions of cosets to unions of cosets
    for (std::uint64_t l : {2ULL, 4ULL, 7ULL, 11ULL}) {
        for (const auto& coset : fam.cosets) {
            if (coset.size() != fam.t) continue;
            Set scaled = scale_set(coset, l, 15);
            CHECK(scaled.size() == coset.size());
            CHECK_NOTHROW(selection_from_members(fam, scaled));
            CHECK_NOTHROW(selection_from_members(fam, negate_set(coset, 15)));
        }
    }
}

TEST_CASE("hermitian condition (4, 15)") {
    CosetFamily fam = coset_family(4, 15);
    CHECK(hermitian_condition(selection_from_cutoff(fam, 9), 2));
    CHECK_FALSE(hermitian_condition(selection_from_cutoff(fam, 4), 2));  // S = {1,4}
    CHECK(hermitian_condition(selection_from_cutoff(fam, 14), 2));       // S = frak-A
    CHECK_THROWS_AS(hermitian_condition(selection_from_cutoff(fam, 9), 3), Error);
}
