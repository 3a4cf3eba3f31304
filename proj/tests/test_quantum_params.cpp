#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qcodes/quantum_params.hpp"

using namespace qcodes;

TEST_CASE("hermitian construction") {
    QuantumParams a = hermitian_construction(120, 80, 15, 4);
    CHECK(a.base == 2);
    CHECK(a.n == 120);
    CHECK(a.k == 40);
    CHECK(a.d == 15);

    QuantumParams b = hermitian_construction(6, 3, 4, 4);
    CHECK(b.k == 0);
    CHECK(b.d == 4);

    QuantumParams c = hermitian_construction(10, 10, 1, 9);
    CHECK(c.base == 3);
    CHECK(c.k == 10);

    CHECK_THROWS_AS(hermitian_construction(10, 4, 2, 4), Error);  // 2k < n
    CHECK_THROWS_AS(hermitian_construction(10, 6, 2, 8), Error);  // 8 not a square
}

TEST_CASE("main theorem parameters match the published rows") {
    TowerContext c255 = make_context(16, 255);
    QuantumParams a = main_theorem_params(c255, c255.select_cutoff(229));
    CHECK(a.base == 4);
    CHECK(a.n == 120);
    CHECK(a.k == 74);
    CHECK(a.d == 14);

    TowerContext c728 = make_context(9, 728);
    QuantumParams b = main_theorem_params(c728, c728.select_cutoff(704));
    CHECK(b.base == 3);
    CHECK(b.n == 240);
    CHECK(b.k == 198);
    CHECK(b.d == 9);

    TowerContext c15 = make_context(4, 15);
    QuantumParams c = main_theorem_params(c15, c15.select_cutoff(13));
    CHECK(c.base == 2);
    CHECK(c.n == 6);
    CHECK(c.k == 4);
    CHECK(c.d == 2);
}

TEST_CASE("main theorem rejects selections failing the coset condition") {
    TowerContext c15 = make_context(4, 15);
    CHECK_THROWS_AS(main_theorem_params(c15, c15.select_cutoff(4)), Error);
}

TEST_CASE("propagation rules reproduce the published derivations") {
    QuantumParams base;
    base.base = 3;
    base.n = 240;
    base.k = 220;
    base.d = 5;
    QuantumParams once = propagate(base, Rule::puncture);
    CHECK(once.n == 239);
    CHECK(once.d == 4);
    QuantumParams twice = propagate(once, Rule::puncture);
    CHECK(twice.n == 238);
    CHECK(twice.k == 220);
    CHECK(twice.d == 3);

    QuantumParams b4;
    b4.base = 4;
    b4.n = 120;
    b4.k = 52;
    b4.d = 21;
    QuantumParams p3 = propagate(propagate(propagate(b4, Rule::puncture), Rule::puncture),
                                 Rule::puncture);
    CHECK(p3.n == 117);
    CHECK(p3.k == 52);
    CHECK(p3.d == 18);
}

TEST_CASE("propagation underflow errors") {
    QuantumParams qp;
    qp.base = 2;
    qp.n = 5;
    qp.k = 2;
    qp.d = 1;
    CHECK_THROWS_AS(propagate(qp, Rule::distance_drop), Error);
    CHECK_THROWS_AS(propagate(qp, Rule::puncture), Error);
    qp.k = 0;
    CHECK_THROWS_AS(propagate(qp, Rule::subcode), Error);
}

TEST_CASE("subcode and lengthen commute on parameters") {
    QuantumParams qp;
    qp.base = 2;
    qp.n = 10;
    qp.k = 5;
    qp.d = 3;
    QuantumParams ab = propagate(propagate(qp, Rule::subcode), Rule::lengthen);
    QuantumParams ba = propagate(propagate(qp, Rule::lengthen), Rule::subcode);
    CHECK(ab.n == ba.n);
    CHECK(ab.k == ba.k);
    CHECK(ab.d == ba.d);
}

TEST_CASE("table search (4, 15) includes the published rows") {
    TowerContext ctx = make_context(4, 15);
    std::vector<TableRow> rows = table_search(ctx);
    REQUIRE(!rows.empty());
    CHECK(std::is_sorted(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
        return a.cutoff < b.cutoff;
    }));
    auto find = [&](std::uint64_t cutoff) -> const QuantumParams* {
        for (const auto& r : rows)
            if (r.cutoff == cutoff) return &r.params;
        return nullptr;
    };
    const QuantumParams* r9 = find(9);
    REQUIRE(r9 != nullptr);
    CHECK(r9->n == 6);
    CHECK(r9->k == 0);
    CHECK(r9->d == 4);
    const QuantumParams* r13 = find(13);
    REQUIRE(r13 != nullptr);
    CHECK(r13->k == 4);
    CHECK(r13->d == 2);
    // every emitted row has k >= 0 and satisfies the coset condition by
    // construction; dominated rows (e.g. cutoff 12) may legitimately appear
    for (const auto& r : rows) CHECK(r.params.n == 6);
}

TEST_CASE("table search (16, 85) covers the eight published cutoffs") {
    TowerContext ctx = make_context(16, 85);
    std::vector<TableRow> rows = table_search(ctx);
    struct Expect { std::uint64_t cutoff, k, d; };
    for (auto [cutoff, k, d] : {Expect{67, 12, 10}, {71, 16, 8}, {73, 20, 7}, {75, 22, 6},
                                {77, 26, 5}, {79, 30, 4}, {81, 34, 3}, {83, 38, 2}}) {
        bool found = false;
        for (const auto& r : rows)
            if (r.cutoff == cutoff) {
                found = true;
                CHECK(r.params.n == 40);
                CHECK(r.params.k == k);
                CHECK(r.params.d == d);
                CHECK(r.params.base == 4);
            }
        CHECK(found);
    }
}

TEST_CASE("monotonicity within a context: larger cutoff, larger k, d not larger") {
    for (auto [q, m] : {std::pair<std::uint64_t, std::uint64_t>{4, 15}, {16, 85}, {9, 104}}) {
        TowerContext ctx = make_context(q, m);
        std::vector<TableRow> rows = table_search(ctx);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            CHECK(rows[i].params.k >= rows[i - 1].params.k);
            CHECK(rows[i].params.d <= rows[i - 1].params.d);
        }
    }
}
