#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>

#include "residua/arith.hpp"
#include "residua/search.hpp"

using namespace residua;

namespace {

__int128 pow_i128(std::int64_t base, int e) {
    __int128 acc = 1;
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

bool evaluates(const SearchReport& r) {
    return pow_i128(r.x, r.a) + 2 * pow_i128(r.y, r.b) + 4 * pow_i128(r.z, r.c) ==
           static_cast<__int128>(r.p);
}

}  // namespace

TEST_CASE("search_triple: a linear x absorbs the prime") {
    for (std::int64_t p : {2LL, 3LL, 97LL, 2069LL}) {
        SearchReport r = search_triple(1, 2, 2, p, 5);
        REQUIRE(r.found);
        CHECK(r.x == p);
        CHECK(r.y == 0);
        CHECK(r.z == 0);
    }
}

TEST_CASE("search_triple: frozen small witnesses") {
    SearchReport r = search_triple(2, 3, 3, 2, 1);
    REQUIRE(r.found);
    CHECK(r.x == 0);
    CHECK(r.y == 1);
    CHECK(r.z == 0);

    // enumeration order is magnitude-first: for 13 the witness is (1,2,-1)
    SearchReport s = search_triple(2, 3, 3, 13, 200);
    REQUIRE(s.found);
    CHECK(s.x == 1);
    CHECK(s.y == 2);
    CHECK(s.z == -1);
}

TEST_CASE("search_triple: historically hard primes admit in-box witnesses") {
    // These primes were long reported unsolved for their exponent triples,
    // but the signed box |x|,|y|,|z| <= 200 does contain solutions; the old
    // not-found rows reflect an incomplete search, not absence.
    struct Row {
        int a, b, c;
        std::int64_t p;
    };
    const Row rows[] = {{2, 3, 3, 2069},
                        {3, 2, 3, 2207},
                        {3, 2, 3, 2383},
                        {3, 3, 2, 2039},
                        {3, 3, 2, 2083}};
    for (const Row& row : rows) {
        CAPTURE(row.p);
        SearchReport rep = search_triple(row.a, row.b, row.c, row.p, 200);
        REQUIRE(rep.found);
        CHECK(evaluates(rep));
        CHECK(std::abs(rep.x) <= 200);
        CHECK(std::abs(rep.y) <= 200);
        CHECK(std::abs(rep.z) <= 200);
    }

    // Pin the first witness the enumeration yields for one of them.
    SearchReport rep = search_triple(2, 3, 3, 2069, 200);
    CHECK(rep.x == 109);
    CHECK(rep.y == -8);
    CHECK(rep.z == -13);
}

TEST_CASE("search_triple: deterministic and exact") {
    for (std::int64_t p : primes_up_to(300)) {
        SearchReport r1 = search_triple(2, 3, 3, p, 50);
        SearchReport r2 = search_triple(2, 3, 3, p, 50);
        CHECK(r1 == r2);
        if (r1.found) {
            CHECK(evaluates(r1));
            CHECK(r1.x >= 0);  // even exponent never needs a negative value
        }
    }
}

TEST_CASE("search_triple: rejects bad inputs") {
    CHECK_THROWS_AS(search_triple(0, 2, 3, 7, 10), std::invalid_argument);
    CHECK_THROWS_AS(search_triple(2, 4, 3, 7, 10), std::invalid_argument);
    CHECK_THROWS_AS(search_triple(2, 2, 3, 7, 0), std::invalid_argument);
}

TEST_CASE("scan_table: ascending exhausted primes under the ceiling") {
    TableRow row = scan_table(2, 3, 3, 600, 30);
    CHECK(row.a == 2);
    CHECK(row.prime_limit == 600);
    CHECK(row.bound == 30);
    CHECK(std::is_sorted(row.exhausted.begin(), row.exhausted.end()));
    for (std::int64_t p : row.exhausted) {
        CHECK(p <= 600);
        CHECK(is_prime(p));
        CHECK(!search_triple(2, 3, 3, p, 30).found);
    }
}

TEST_CASE("scan_table: all-linear triple solves everything") {
    CHECK(scan_table(1, 1, 1, 200, 5).exhausted.empty());
}

TEST_CASE("scan_reports: worker count never changes the output") {
    auto seq = scan_reports(2, 3, 3, 1000, 40, 1);
    auto par = scan_reports(2, 3, 3, 1000, 40, 4);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(seq[i] == par[i]);
    // ascending primes
    for (std::size_t i = 1; i < seq.size(); ++i) CHECK(seq[i - 1].p < seq[i].p);
}

TEST_CASE("scan monotonicity: doubling the bound never unsolves a prime") {
    auto lo = scan_reports(3, 3, 2, 800, 25, 1);
    auto hi = scan_reports(3, 3, 2, 800, 50, 1);
    REQUIRE(lo.size() == hi.size());
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (lo[i].found) CHECK(hi[i].found);
    }
}

TEST_CASE("report json round-trip") {
    SearchReport a = search_triple(2, 3, 3, 13, 200);
    SearchReport b = report_from_json(report_to_json(a));
    CHECK(a == b);

    // bound 1 caps the value at 1 + 2 + 4, so 2069 is genuinely exhausted
    SearchReport ex = search_triple(2, 3, 3, 2069, 1);
    REQUIRE(!ex.found);
    SearchReport ex2 = report_from_json(report_to_json(ex));
    CHECK(ex == ex2);
}
