#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "cubicc/lattice.hpp"
#include "cubicc/oracle.hpp"

using namespace cubicc;

namespace {

const std::set<std::vector<int>> kFigureVertices = {
    {0, 0},  {1, 0},  {2, 0},  {2, -1}, {1, -1}, {0, -1}, {0, -2},
    {1, -2}, {-1, -2}, {-1, 0}, {0, 1},  {-1, 1}, {2, 1}};

// the 18 segments of the size-3 realization, as (lower, upper) pairs
const std::set<std::pair<std::vector<int>, std::vector<int>>> kFigureEdges = {
    {{0, 0}, {1, 0}},   {{1, 0}, {2, 0}},   {{2, -1}, {2, 0}},
    {{2, 0}, {2, 1}},   {{1, -1}, {2, -1}}, {{1, -1}, {1, 0}},
    {{0, -1}, {1, -1}}, {{0, -1}, {0, 0}},  {{0, -2}, {0, -1}},
    {{0, -2}, {1, -2}}, {{1, -2}, {1, -1}}, {{-1, -2}, {0, -2}},
    {{-1, -2}, {-1, 0}}, {{-1, 0}, {0, 0}},  {{0, 0}, {0, 1}},
    {{-1, 1}, {0, 1}},  {{-1, 0}, {-1, 1}}, {{0, 1}, {2, 1}}};

}  // namespace

TEST_CASE("enumerate_cc sizes") {
    CHECK(enumerate_cc(1).elements.size() == 1);
    CHECK(enumerate_cc(1).elements.front() == Cubic{});
    CHECK(enumerate_cc(1).hasse.empty());
    CHECK(enumerate_cc(5).elements.size() == 399);
    CHECK_THROWS_AS(enumerate_cc(9), SizeCapError);
    CHECK_THROWS_AS(enumerate_cc(0), std::invalid_argument);
}

TEST_CASE("size 3 reproduces the realization figure") {
    const PosetInstance p = enumerate_cc(3);
    std::set<std::vector<int>> vertices;
    for (const Cubic& c : p.elements) vertices.insert(c.c);
    CHECK(vertices == kFigureVertices);

    std::set<std::pair<std::vector<int>, std::vector<int>>> edges;
    for (const auto& [lo, hi] : p.hasse)
        edges.emplace(p.elements[lo].c, p.elements[hi].c);
    CHECK(edges.size() == 18);
    CHECK(edges == kFigureEdges);
}

TEST_CASE("BFS agrees with the box-filter oracle") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(enumerate_cc(n).elements == oracle::cc_by_box_filter(n));
    }
}

TEST_CASE("serial and parallel cover kernels agree") {
    for (int n = 2; n <= 6; ++n) {
        const PosetInstance p = enumerate_cc(n, Execution::serial);
        CHECK(cover_lists_serial(p.elements) == cover_lists_parallel(p.elements));
        CHECK(enumerate_cc(n, Execution::parallel).hasse == p.hasse);
    }
}

TEST_CASE("unique minimum and maximum") {
    for (int n = 1; n <= 6; ++n) {
        const PosetInstance p = enumerate_cc(n);
        const int lo = p.minimum();
        const int hi = p.maximum();
        REQUIRE(lo >= 0);
        REQUIRE(hi >= 0);
        for (size_t i = 0; i < p.elements.size(); ++i) {
            CHECK(leq_cc(p.elements[lo], p.elements[i]));
            CHECK(leq_cc(p.elements[i], p.elements[hi]));
        }
    }
}

TEST_CASE("meet and join basics") {
    const PosetInstance p3 = enumerate_cc(3);
    const int a = p3.index_of(Cubic{{1, 0}});
    const int b = p3.index_of(Cubic{{0, 1}});
    CHECK(p3.elements[meet(p3, a, b)] == Cubic{{0, 0}});
    CHECK(meet(p3, a, a) == a);
    CHECK(join(p3, a, a) == a);

    const int c = p3.index_of(Cubic{{1, -1}});
    const int j = join(p3, c, b);
    // verify minimal common upper bound by brute force
    for (size_t i = 0; i < p3.elements.size(); ++i) {
        if (leq_cc(p3.elements[c], p3.elements[i]) &&
            leq_cc(p3.elements[b], p3.elements[i]))
            CHECK(leq_cc(p3.elements[j], p3.elements[i]));
    }
}

TEST_CASE("meet and join are total for n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        const PosetInstance p = enumerate_cc(n);
        const int m = static_cast<int>(p.elements.size());
        // totality over all pairs is quadratic; sample densely at n=5
        const int stride = n == 5 ? 7 : 1;
        for (int a = 0; a < m; a += 1) {
            for (int b = a; b < m; b += stride) {
                CHECK_NOTHROW(meet(p, a, b));
                CHECK_NOTHROW(join(p, a, b));
            }
        }
    }
}

TEST_CASE("absorption on random triples") {
    const PosetInstance p = enumerate_cc(5);
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(p.elements.size()) - 1);
    for (int trial = 0; trial < 2000; ++trial) {
        const int a = pick(rng), b = pick(rng), c = pick(rng);
        CHECK(meet(p, a, join(p, a, b)) == a);
        CHECK(join(p, a, meet(p, a, b)) == a);
        // associativity
        CHECK(meet(p, a, meet(p, b, c)) == meet(p, meet(p, a, b), c));
        CHECK(join(p, a, join(p, b, c)) == join(p, join(p, a, b), c));
    }
}

TEST_CASE("check_counts") {
    const std::vector<CountRow> rows = check_counts(5);
    const long long expected[] = {1, 3, 13, 68, 399};
    for (int n = 1; n <= 5; ++n) {
        CHECK(rows[n - 1].ok);
        CHECK(rows[n - 1].cc_count == expected[n - 1]);
        CHECK(rows[n - 1].tid_count == expected[n - 1]);
        CHECK(rows[n - 1].interval_count == expected[n - 1]);
    }
}

TEST_CASE("minimal-cellular count equals synchronized count") {
    for (int n = 2; n <= 6; ++n) {
        const PosetInstance p = enumerate_cc(n);
        std::vector<int> cover_count(p.elements.size(), 0);
        for (const auto& [lo, hi] : p.hasse) {
            (void)hi;
            ++cover_count[lo];
        }
        long long covered_by_all = 0, synchronized = 0;
        for (size_t i = 0; i < p.elements.size(); ++i) {
            if (cover_count[i] == n - 1) ++covered_by_all;
            if (is_synchronized(p.elements[i])) ++synchronized;
        }
        CHECK(covered_by_all == synchronized);
    }
}
