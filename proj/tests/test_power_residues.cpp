#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "residua/arith.hpp"
#include "residua/norm_forms.hpp"
#include "residua/orders.hpp"
#include "residua/power_residues.hpp"
#include "residua/quadratic.hpp"

using namespace residua;

namespace {

bool root_by_scan(std::int64_t r, std::int64_t n, std::int64_t p) {
    std::int64_t r0 = ((r % p) + p) % p;
    for (std::int64_t x = 0; x < p; ++x)
        if (mod_pow(x, n, p) == r0) return true;
    return false;
}

}  // namespace

TEST_CASE("has_nth_root: Euler criterion vs scan") {
    CHECK(has_nth_root(2, 2, 7));
    CHECK(!has_nth_root(3, 2, 7));
    for (std::int64_t p : primes_up_to(200)) {
        for (std::int64_t n = 1; n <= 12; ++n) {
            for (std::int64_t r = 1; r < p; ++r)
                CHECK(has_nth_root(r, n, p) == root_by_scan(r, n, p));
        }
    }
}

TEST_CASE("all_nth_roots: complete, ascending, verified") {
    CHECK(all_nth_roots(2, 2, 7) == std::vector<std::int64_t>{3, 4});
    for (std::int64_t p : primes_up_to(100)) {
        for (std::int64_t n = 1; n <= 8; ++n) {
            for (std::int64_t r = 1; r < p; ++r) {
                auto roots = all_nth_roots(r, n, p);
                std::int64_t g = p == 2 ? 1 : std::gcd(n, p - 1);
                if (roots.empty()) {
                    CHECK(!has_nth_root(r, n, p));
                } else {
                    CHECK(static_cast<std::int64_t>(roots.size()) == g);
                    CHECK(std::is_sorted(roots.begin(), roots.end()));
                    for (std::int64_t x : roots) CHECK(mod_pow(x, n, p) == r % p);
                }
            }
        }
    }
}

TEST_CASE("co_order: values and the root-existence link") {
    CHECK(co_order(2, 7) == 2);
    for (std::int64_t p : primes_up_to(100)) {
        CHECK(co_order(1, p) == p - 1);
        if (p == 2) continue;
        for (std::int64_t r = 1; r < p; ++r) {
            std::int64_t co = co_order(r, p);
            CHECK((p - 1) % co == 0);
            // r has an n-th root iff n's contribution divides the co-order:
            // gcd(n, p-1) | co  <=>  solvable
            for (std::int64_t n = 1; n <= 10; ++n)
                CHECK(has_nth_root(r, n, p) == (co % std::gcd(n, p - 1) == 0));
            // quadratic case: even co-order iff r is a square
            CHECK((co % 2 == 0) == has_nth_root(r, 2, p));
        }
    }
}

TEST_CASE("is_irreducible_fp: frozen cases") {
    CHECK(is_irreducible_fp(2, 2, 5));
    CHECK(is_irreducible_fp(1, 4, 5));    // degree 1 always
    CHECK(!is_irreducible_fp(6, 2, 7));   // 2 is a square mod 7
    CHECK(!is_irreducible_fp(2, 0, 5));   // x^2 factors
    CHECK(!is_irreducible_fp(2, 4, 5));
    CHECK(is_irreducible_fp(3, 2, 7));    // 2 is not a cube mod 7
}

TEST_CASE("is_irreducible_fp: the 4 | n extra condition matters") {
    // p = 3 (mod 4): x^4 - r can be reducible with no 4th or square root of r,
    // via a quadratic factor.  Brute: x^4 - r mod (x^2 + bx + c) has remainder
    // (2bc - b^3) x + (c^2 - b^2 c - r).
    for (std::int64_t p : {3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL}) {
        for (std::int64_t r = 1; r < p; ++r) {
            bool reducible = root_by_scan(r, 4, p);  // linear factor
            for (std::int64_t b = 0; b < p && !reducible; ++b)
                for (std::int64_t c = 0; c < p && !reducible; ++c) {
                    std::int64_t lin = ((2 * b * c - b * b * b) % p + p) % p;
                    std::int64_t con = ((c * c - b * b * c - r) % p + p * p) % p;
                    reducible = lin == 0 && con == 0;
                }
            CHECK(is_irreducible_fp(4, r, p) == !reducible);
        }
    }
}

TEST_CASE("is_irreducible_q: frozen cases") {
    CHECK(is_irreducible_q(2, 2));
    CHECK(!is_irreducible_q(4, -4));   // x^4 + 4 = (x^2-2x+2)(x^2+2x+2)
    CHECK(!is_irreducible_q(6, 64));   // x^6 - 64 = (x^3-8)(x^3+8)
    CHECK(is_irreducible_q(4, -1));    // x^4 + 1
    CHECK(!is_irreducible_q(4, -64));  // x^4 + 64 = (x^2-4x+8)(x^2+4x+8)
    CHECK(!is_irreducible_q(3, 8));
    CHECK(!is_irreducible_q(4, 4));    // (x^2-2)(x^2+2)
    CHECK(is_irreducible_q(1, 100));
    CHECK(is_irreducible_q(5, 6));
    CHECK_THROWS_AS(is_irreducible_q(2, 0), std::invalid_argument);
}

TEST_CASE("is_irreducible_q: reducible iff a small norm-form zero exists") {
    // Over the rationals, x^n - r reducible <=> the norm form has a nonzero
    // integer zero; on this grid every witness appears within |x_i| <= 8.
    for (std::int64_t n = 2; n <= 4; ++n) {
        for (std::int64_t r = -16; r <= 16; ++r) {
            if (r == 0) continue;
            bool zero_found = false;
            std::vector<std::int64_t> x(static_cast<std::size_t>(n), -8);
            for (;;) {
                bool nonzero = std::any_of(x.begin(), x.end(),
                                           [](std::int64_t v) { return v != 0; });
                if (nonzero && det_norm(x, r) == 0) { zero_found = true; break; }
                std::size_t i = static_cast<std::size_t>(n);
                bool wrapped = true;
                while (i-- > 0) {
                    if (++x[i] <= 8) { wrapped = false; break; }
                    x[i] = -8;
                }
                if (wrapped) break;
            }
            CHECK(is_irreducible_q(n, r) == !zero_found);
        }
    }
}

TEST_CASE("find_nontrivial_zero: frozen behaviour") {
    auto sol = find_nontrivial_zero(2, 2, 7);
    REQUIRE(sol.has_value());
    CHECK(sol->bound_ok);
    CHECK(det_norm_mod_p(sol->xbar, 2, 7) == 0);
    bool nonzero = false;
    for (std::int64_t v : sol->xbar) {
        CHECK(v * v < 7);
        if (v != 0) nonzero = true;
    }
    CHECK(nonzero);

    CHECK(!find_nontrivial_zero(2, 2, 5).has_value());  // x^2 - 2 irreducible mod 5

    // deterministic: two calls agree exactly
    auto again = find_nontrivial_zero(2, 2, 7);
    REQUIRE(again.has_value());
    CHECK(again->xbar == sol->xbar);
}

TEST_CASE("find_nontrivial_zero: no root but reducible gives a zero divisor") {
    // x^4 = 4 has no solution mod 5 (all fourth powers are 1), yet
    // x^4 - 4 = (x^2-2)(x^2+2) factors; a nontrivial zero must still come back.
    REQUIRE(!has_nth_root(4, 4, 5));
    REQUIRE(!is_irreducible_fp(4, 4, 5));
    auto sol = find_nontrivial_zero(4, 4, 5);
    REQUIRE(sol.has_value());
    CHECK(det_norm_mod_p(sol->xbar, 4, 5) == 0);
    CHECK(std::any_of(sol->xbar.begin(), sol->xbar.end(),
                      [](std::int64_t v) { return v != 0; }));

    // same shape: x^6 = 2 unsolvable mod 7, x^6 - 2 = (x^3-3)(x^3+3) mod 7
    REQUIRE(!has_nth_root(2, 6, 7));
    auto sol2 = find_nontrivial_zero(2, 6, 7);
    REQUIRE(sol2.has_value());
    CHECK(det_norm_mod_p(sol2->xbar, 2, 7) == 0);
}

TEST_CASE("check_prime_exponent_equivalence: frozen and grid") {
    CHECK(check_prime_exponent_equivalence(2, 2, 7));
    CHECK(check_prime_exponent_equivalence(2, 2, 5));
    CHECK(check_prime_exponent_equivalence(3, 2, 31));
    for (std::int64_t q : {2LL, 3LL}) {
        for (std::int64_t p : primes_up_to(100)) {
            for (std::int64_t r = 1; r < p; ++r)
                CHECK(check_prime_exponent_equivalence(q, r, p));
        }
    }
}

TEST_CASE("norm_equals_p_obstruction") {
    CHECK(norm_equals_p_obstruction(2, 2, 5));
    CHECK(!norm_equals_p_obstruction(2, 2, 7));
    CHECK_THROWS_AS(norm_equals_p_obstruction(1, 2, 5), std::invalid_argument);
}

TEST_CASE("construct_norm_p: frozen witnesses") {
    auto a = construct_norm_p(2, 7);
    CHECK(a.first * a.first - 2 * a.second * a.second == 7);
    CHECK(a == std::pair<std::int64_t, std::int64_t>{5, 3});
    auto b = construct_norm_p(-1, 5);
    CHECK(b == std::pair<std::int64_t, std::int64_t>{1, 2});
    auto c = construct_norm_p(-2, 11);
    CHECK(c == std::pair<std::int64_t, std::int64_t>{3, 1});
    CHECK_THROWS_AS(construct_norm_p(2, 5), std::invalid_argument);   // (2/5) = -1
    CHECK_THROWS_AS(construct_norm_p(3, 11), std::invalid_argument);  // unsupported r
}

TEST_CASE("construct_norm_p: all residues up to 500") {
    for (std::int64_t p : primes_up_to(500)) {
        if (p == 2) continue;
        for (std::int64_t r : {-2LL, -1LL, 2LL}) {
            if (legendre_general(r, p) != +1) continue;
            auto [x0, x1] = construct_norm_p(r, p);
            CHECK(x0 * x0 - r * x1 * x1 == p);
        }
    }
}
