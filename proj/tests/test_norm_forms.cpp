#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "residua/arith.hpp"
#include "residua/norm_forms.hpp"

using namespace residua;

namespace {

NormMatrix mat_mul(const NormMatrix& A, const NormMatrix& B) {
    NormMatrix C{A.n, A.modulus, std::vector<BigInt>(A.n * A.n, 0)};
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t k = 0; k < A.n; ++k)
            for (std::size_t j = 0; j < A.n; ++j) C.at(i, j) += A.at(i, k) * B.at(k, j);
    return C;
}

}  // namespace

TEST_CASE("det_norm: frozen values") {
    CHECK(det_norm({1, 1}, 2) == -1);
    CHECK(det_norm({1, 1, 1}, 2) == 1);
    CHECK(det_norm({0, 1}, 2) == -2);
    CHECK(det_norm({5}, 3) == 5);  // n = 1: the matrix is (x0)
}

TEST_CASE("det_norm: diagonal vectors give pure powers") {
    for (std::int64_t x0 = -9; x0 <= 9; ++x0) {
        for (std::size_t n = 1; n <= 5; ++n) {
            std::vector<std::int64_t> v(n, 0);
            v[0] = x0;
            BigInt expect = 1;
            for (std::size_t i = 0; i < n; ++i) expect *= x0;
            CHECK(det_norm(v, 7) == expect);
        }
    }
}

TEST_CASE("build_matrix: layout for x^2 - r") {
    // (i,j) entry: x_{i-j} below the diagonal, r * x_{n+i-j} above.
    NormMatrix m = build_matrix({3, 4}, 5);
    CHECK(m.at(0, 0) == 3);
    CHECK(m.at(0, 1) == 20);  // r * x1
    CHECK(m.at(1, 0) == 4);
    CHECK(m.at(1, 1) == 3);
}

TEST_CASE("det_norm_mod_p: frozen values and agreement with the exact form") {
    CHECK(det_norm_mod_p({1, 1}, 2, 7) == 6);
    CHECK(det_norm_mod_p({3, 1}, 2, 7) == 0);
    std::mt19937_64 rng(11);
    auto draw = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    for (int iter = 0; iter < 400; ++iter) {
        std::size_t n = static_cast<std::size_t>(draw(1, 5));
        std::int64_t r = draw(-10, 10);
        std::int64_t p = std::vector<std::int64_t>{2, 3, 5, 7, 13, 101}[
            static_cast<std::size_t>(draw(0, 5))];
        std::vector<std::int64_t> x(n);
        for (auto& v : x) v = draw(-20, 20);
        BigInt d = det_norm(x, r);
        BigInt dm = d % p;
        if (dm < 0) dm += p;
        CHECK(BigInt(det_norm_mod_p(x, r, p)) == dm);
    }
}

TEST_CASE("adjugate: frozen example and defining identity") {
    NormMatrix adj = adjugate(build_matrix({1, 1}, 2));
    CHECK(adj == build_matrix({1, -1}, 2));

    std::mt19937_64 rng(13);
    auto draw = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = static_cast<std::size_t>(draw(1, 5));
        std::int64_t r = draw(-10, 10);
        std::vector<std::int64_t> x(n);
        for (auto& v : x) v = draw(-15, 15);
        NormMatrix M = build_matrix(x, r);
        NormMatrix A = adjugate(M);
        BigInt d = det_norm(x, r);
        NormMatrix prod = mat_mul(M, A);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(prod.at(i, j) == (i == j ? d : BigInt(0)));
    }
}

TEST_CASE("poly_mul_mod: quotient-ring arithmetic") {
    std::vector<std::int64_t> q = {-2, 0, 1};  // x^2 - 2
    PolyMod a = make_poly({1, 1}, q);          // 1 + u
    PolyMod b = make_poly({1, -1}, q);         // 1 - u
    PolyMod prod = poly_mul_mod(a, b);
    REQUIRE(prod.coeffs.size() == 2);
    CHECK(prod.coeffs[0] == -1);  // (1+u)(1-u) = 1 - u^2 = -1
    CHECK(prod.coeffs[1] == 0);

    std::vector<std::int64_t> q3 = {-2, 0, 0, 1};  // x^3 - 2
    PolyMod u = make_poly({0, 1, 0}, q3);
    PolyMod u2 = make_poly({0, 0, 1}, q3);
    PolyMod u3 = poly_mul_mod(u, u2);
    CHECK(u3.coeffs == std::vector<BigInt>{2, 0, 0});  // u^3 = 2
}

TEST_CASE("build_matrix_general: classical forms") {
    // x^2 + 1: multiplication by a + b*i is [[a, -b], [b, a]]
    NormMatrix mi = build_matrix_general({3, 4}, {1, 0, 1});
    CHECK(mi.at(0, 0) == 3);
    CHECK(mi.at(0, 1) == -4);
    CHECK(mi.at(1, 0) == 4);
    CHECK(mi.at(1, 1) == 3);
    CHECK(det_norm_general({3, 4}, {1, 0, 1}) == 25);

    // x^2 - x - 1: multiplication by u is [[0, 1], [1, 1]], det -1
    NormMatrix mf = build_matrix_general({0, 1}, {-1, -1, 1});
    CHECK(mf.at(0, 0) == 0);
    CHECK(mf.at(0, 1) == 1);
    CHECK(mf.at(1, 0) == 1);
    CHECK(mf.at(1, 1) == 1);
    CHECK(det_norm_general({0, 1}, {-1, -1, 1}) == -1);

    CHECK(det_norm_general({3, 2}, {-2, 0, 1}) == 1);  // 3^2 - 2*2^2

    CHECK_THROWS_AS(build_matrix_general({1, 2, 3}, {-2, 0, 1}), std::invalid_argument);
}

TEST_CASE("build_matrix_general: binomial modulus matches build_matrix") {
    std::mt19937_64 rng(17);
    auto draw = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t n = static_cast<std::size_t>(draw(1, 5));
        std::int64_t r = draw(-10, 10);
        std::vector<std::int64_t> x(n);
        for (auto& v : x) v = draw(-20, 20);
        std::vector<std::int64_t> q(n + 1, 0);
        q[0] = -r;
        q[n] = 1;
        CHECK(build_matrix_general(x, q) == build_matrix(x, r));
        CHECK(det_norm_general(x, q) == det_norm(x, r));
    }
}

TEST_CASE("det_norm: multiplicative over the quotient ring") {
    std::mt19937_64 rng(19);
    auto draw = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    for (int iter = 0; iter < 300; ++iter) {
        std::size_t n = static_cast<std::size_t>(draw(1, 5));
        std::int64_t r = draw(-10, 10);
        std::vector<std::int64_t> q(n + 1, 0);
        q[0] = -r;
        q[n] = 1;
        std::vector<std::int64_t> a(n), b(n);
        for (auto& v : a) v = draw(-20, 20);
        for (auto& v : b) v = draw(-20, 20);
        PolyMod prod = poly_mul_mod(make_poly(a, q), make_poly(b, q));
        std::vector<std::int64_t> ab(n);
        for (std::size_t i = 0; i < n; ++i) ab[i] = static_cast<std::int64_t>(prod.coeffs[i]);
        CHECK(det_norm(ab, r) == det_norm(a, r) * det_norm(b, r));
    }
}

TEST_CASE("closed forms for n = 2, 3, 4") {
    std::mt19937_64 rng(23);
    auto draw = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    for (int iter = 0; iter < 300; ++iter) {
        std::int64_t r = draw(-10, 10);
        BigInt R(r);
        {
            BigInt x0 = draw(-20, 20), x1 = draw(-20, 20);
            CHECK(det_norm({static_cast<std::int64_t>(x0), static_cast<std::int64_t>(x1)}, r) ==
                  x0 * x0 - x1 * x1 * R);
        }
        {
            BigInt x0 = draw(-20, 20), x1 = draw(-20, 20), x2 = draw(-20, 20);
            CHECK(det_norm({static_cast<std::int64_t>(x0), static_cast<std::int64_t>(x1),
                            static_cast<std::int64_t>(x2)}, r) ==
                  x0 * x0 * x0 + x1 * x1 * x1 * R + x2 * x2 * x2 * R * R -
                      3 * x0 * x1 * x2 * R);
        }
        {
            BigInt x0 = draw(-20, 20), x1 = draw(-20, 20), x2 = draw(-20, 20),
                   x3 = draw(-20, 20);
            BigInt expect = x0 * x0 * x0 * x0 - x1 * x1 * x1 * x1 * R +
                            4 * x0 * x1 * x1 * x2 * R - 2 * x0 * x0 * x2 * x2 * R -
                            4 * x0 * x0 * x1 * x3 * R + x2 * x2 * x2 * x2 * R * R -
                            4 * x1 * x2 * x2 * x3 * R * R + 2 * x1 * x1 * x3 * x3 * R * R +
                            4 * x0 * x2 * x3 * x3 * R * R - x3 * x3 * x3 * x3 * R * R * R;
            CHECK(det_norm({static_cast<std::int64_t>(x0), static_cast<std::int64_t>(x1),
                            static_cast<std::int64_t>(x2), static_cast<std::int64_t>(x3)},
                           r) == expect);
        }
    }
}
