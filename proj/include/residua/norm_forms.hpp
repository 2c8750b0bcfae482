#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// The multiplication-matrix algebra of Z[x]/(x^n - r) and its generalization
// to arbitrary monic moduli: matrix construction, exact determinants (the
// norm forms), adjugates, and polynomial multiplication in the quotient ring.
// Determinant internals are arbitrary precision; entries grow like |x|^n r^n
// and products of norms overflow 64 bits quickly.

namespace residua {

using BigInt = boost::multiprecision::cpp_int;

// Element of R[x]/(modulus) with exact integer coefficients, stored
// least-degree-first; coeffs has length deg(modulus).
struct PolyMod {
    std::vector<BigInt> modulus;  // monic, length deg+1, ascending powers
    std::vector<BigInt> coeffs;   // length deg(modulus)

    bool operator==(const PolyMod&) const = default;
};

PolyMod make_poly(std::vector<std::int64_t> coeffs, std::vector<std::int64_t> modulus);

// The n x n multiplication matrix; column j holds the coefficients of
// z * u^j reduced modulo the monic modulus.
struct NormMatrix {
    std::size_t n = 0;
    std::vector<BigInt> modulus;  // the monic modulus the matrix lives over
    std::vector<BigInt> entries;  // row-major, n*n

    BigInt& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
    const BigInt& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
    bool operator==(const NormMatrix&) const = default;
};

// Matrix of multiplication by sum x_i u^i in Z[x]/(x^n - r): entry (i,j) is
// x_{i-j} for i >= j and r * x_{n+i-j} above the diagonal (first row
// x_0, r x_{n-1}, ..., r x_1).
NormMatrix build_matrix(const std::vector<std::int64_t>& xbar, std::int64_t r);

// Exact determinant of build_matrix (the norm form), by fraction-free
// Bareiss elimination.
BigInt det_norm(const std::vector<std::int64_t>& xbar, std::int64_t r);

// The norm form reduced mod p, by elimination over F_p; always equals
// det_norm mod p, normalized into [0, p).
std::int64_t det_norm_mod_p(const std::vector<std::int64_t>& xbar, std::int64_t r,
                            std::int64_t p);

// Classical adjugate; M * adjugate(M) = det(M) * I.  For matrices built by
// build_matrix the result again lies in the algebra: its first column is
// some integer vector ybar and the whole matrix equals build_matrix(ybar, r).
NormMatrix adjugate(const NormMatrix& M);

// Product in R[x]/(modulus) via schoolbook multiplication and division by
// the monic modulus.  Moduli must match.
PolyMod poly_mul_mod(const PolyMod& a, const PolyMod& b);

// Generalized multiplication matrix over an arbitrary monic modulus q
// (ascending coefficients, length n+1, leading coefficient 1).
NormMatrix build_matrix_general(const std::vector<std::int64_t>& xbar,
                                const std::vector<std::int64_t>& q);

// Determinant of build_matrix_general; multiplicative over poly_mul_mod.
BigInt det_norm_general(const std::vector<std::int64_t>& xbar,
                        const std::vector<std::int64_t>& q);

// Exact determinant of an arbitrary NormMatrix (Bareiss).
BigInt det_exact(const NormMatrix& M);

}  // namespace residua
