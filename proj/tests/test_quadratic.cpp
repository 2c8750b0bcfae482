#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "residua/arith.hpp"
#include "residua/quadratic.hpp"

using namespace residua;

namespace {

// brute residue test: is r a nonzero square mod p?
bool square_by_scan(std::int64_t r, std::int64_t p) {
    std::int64_t r0 = ((r % p) + p) % p;
    for (std::int64_t x = 1; x < p; ++x)
        if (x * x % p == r0) return true;
    return false;
}

}  // namespace

TEST_CASE("legendre: known values and brute agreement") {
    CHECK(legendre(2, 7) == +1);
    CHECK(legendre(3, 11) == +1);
    CHECK(legendre(3, 7) == -1);
    CHECK_THROWS_AS(legendre(7, 7), std::invalid_argument);
    for (std::int64_t p : primes_up_to(500)) {
        if (p == 2) continue;
        for (std::int64_t r = 1; r < p; ++r)
            CHECK((legendre(r, p) == +1) == square_by_scan(r, p));
    }
}

TEST_CASE("units_group / build_lstar") {
    ResidueClassGroup u12 = units_group(12);
    CHECK(u12.elements == std::vector<std::int64_t>{1, 5, 7, 11});
    CHECK(build_lstar(7).elements == std::vector<std::int64_t>{1, 2, 4});
    CHECK(build_lstar(3).elements == std::vector<std::int64_t>{1});
    CHECK(build_lstar(5).elements == std::vector<std::int64_t>{1, 4});
    for (std::int64_t p : primes_up_to(200)) {
        if (p == 2) continue;
        Subgroup sq = build_lstar(p);
        CHECK(static_cast<std::int64_t>(sq.elements.size()) == (p - 1) / 2);
        for (std::int64_t x : sq.elements) CHECK(square_by_scan(x, p));
    }
}

TEST_CASE("build_l4q: frozen groups") {
    Subgroup l2 = build_l4q(2);
    CHECK(l2.modulus == 8);
    CHECK(l2.elements == std::vector<std::int64_t>{1, 7});
    Subgroup l3 = build_l4q(3);
    CHECK(l3.modulus == 12);
    CHECK(l3.elements == std::vector<std::int64_t>{1, 11});
    Subgroup l5 = build_l4q(5);
    CHECK(l5.modulus == 20);
    CHECK(l5.elements == std::vector<std::int64_t>{1, 9, 11, 19});
    CHECK_THROWS_AS(build_l4q(6), std::invalid_argument);
}

TEST_CASE("build_l4q: subgroup structure for q <= 50") {
    for (std::int64_t q : primes_up_to(50)) {
        Subgroup g = build_l4q(q);
        std::int64_t m = 4 * q;
        CHECK(g.modulus == m);
        // index 2 in the unit group
        CHECK(static_cast<std::int64_t>(g.elements.size()) == euler_phi(m) / 2);
        // contains 1 and -1
        CHECK(g.contains(1));
        CHECK(g.contains(m - 1));
        // closed under multiplication
        for (std::int64_t a : g.elements)
            for (std::int64_t b : g.elements) CHECK(g.contains(a * b % m));
        // all elements are units
        for (std::int64_t a : g.elements) CHECK(std::gcd(a, m) == 1);
    }
}

TEST_CASE("classify_prime: class membership decides the symbol") {
    CHECK(classify_prime(2, 17));
    CHECK(classify_prime(3, 11));
    CHECK(!classify_prime(5, 7));
    for (std::int64_t q : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL}) {
        for (std::int64_t p : primes_up_to(2000)) {
            if (p == 2 || p == q) continue;
            CHECK(classify_prime(q, p) == (legendre(q, p) == +1));
        }
    }
}

TEST_CASE("half_order_subgroups_containing_minus1: small moduli") {
    auto s8 = half_order_subgroups_containing_minus1(8);
    REQUIRE(s8.size() == 1);
    CHECK(s8[0].elements == std::vector<std::int64_t>{1, 7});

    auto s12 = half_order_subgroups_containing_minus1(12);
    REQUIRE(s12.size() == 1);
    CHECK(s12[0].elements == std::vector<std::int64_t>{1, 11});

    auto s60 = half_order_subgroups_containing_minus1(60);
    Subgroup a{60, {1, 7, 11, 17, 43, 49, 53, 59}};
    Subgroup b{60, {1, 11, 19, 29, 31, 41, 49, 59}};
    CHECK(std::count(s60.begin(), s60.end(), a) == 1);
    CHECK(std::count(s60.begin(), s60.end(), b) == 1);
}

TEST_CASE("half_order subgroups: structural properties across moduli") {
    for (std::int64_t m = 3; m <= 120; ++m) {
        if (euler_phi(m) % 2 != 0) continue;  // no index-2 subgroup otherwise
        auto subs = half_order_subgroups_containing_minus1(m);
        std::set<std::vector<std::int64_t>> seen;
        for (const Subgroup& s : subs) {
            CHECK(s.modulus == m);
            CHECK(static_cast<std::int64_t>(s.elements.size()) == euler_phi(m) / 2);
            CHECK(s.contains(1));
            CHECK(s.contains(m - 1));
            for (std::int64_t x : s.elements)
                for (std::int64_t y : s.elements) CHECK(s.contains(x * y % m));
            CHECK(seen.insert(s.elements).second);  // no duplicates
        }
    }
}

TEST_CASE("build_l4r_squarefree: frozen group for r = 15") {
    Subgroup g = build_l4r_squarefree(factorize(15));
    CHECK(g.modulus == 60);
    CHECK(g.elements == std::vector<std::int64_t>{1, 7, 11, 17, 43, 49, 53, 59});
    CHECK_THROWS_AS(build_l4r_squarefree(factorize(12)), std::invalid_argument);
    CHECK_THROWS_AS(build_l4r_squarefree(factorize(1)), std::invalid_argument);
}

TEST_CASE("build_l4r_squarefree: membership decides the general symbol") {
    for (std::int64_t r : {6LL, 10LL, 15LL, 21LL, 30LL, 35LL}) {
        Subgroup g = build_l4r_squarefree(factorize(r));
        for (std::int64_t p : primes_up_to(10'000)) {
            if (p == 2 || r % p == 0) continue;
            CHECK(g.contains(p % (4 * r)) == (legendre_general(r, p) == +1));
        }
    }
}

TEST_CASE("legendre_general: square factors, signs, known values") {
    CHECK(legendre_general(9, 5) == +1);
    CHECK(legendre_general(9, 7) == +1);  // perfect square
    CHECK(legendre_general(-1, 13) == +1);
    CHECK(legendre_general(-1, 7) == -1);
    CHECK(legendre_general(12, 7) == -1);  // 12 = 4*3, reduces to (3/7)
    for (std::int64_t p : primes_up_to(300)) {
        if (p == 2) continue;
        for (std::int64_t r = 1; r < p; ++r)
            CHECK(legendre_general(r, p) == legendre(r, p));
    }
}

TEST_CASE("legendre_general: multiplicative in r") {
    for (std::int64_t p : {5LL, 7LL, 11LL, 13LL, 17LL, 101LL, 997LL}) {
        for (std::int64_t a = -20; a <= 20; ++a) {
            for (std::int64_t b = -20; b <= 20; ++b) {
                if (a == 0 || b == 0) continue;
                if (a % p == 0 || b % p == 0) continue;
                CHECK(legendre_general(a * b, p) ==
                      legendre_general(a, p) * legendre_general(b, p));
            }
        }
    }
}

TEST_CASE("legendre_via_reciprocity: third route agrees") {
    for (std::int64_t q : primes_up_to(200)) {
        if (q == 2) continue;
        for (std::int64_t p : primes_up_to(200)) {
            if (p == 2 || p == q) continue;
            CHECK(legendre_via_reciprocity(q, p) == legendre(q, p));
        }
    }
}
