#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "residua/arith.hpp"

// Power-residue solvers: the generalized Euler criterion for x^n = r (mod p),
// irreducibility of x^n - r over F_p and over Q, the pigeonhole solver that
// produces bounded nontrivial zeros of the norm form mod p, the prime-exponent
// equivalence harness, and the constructive norm representation x0^2 - r*x1^2
// = p for r in {-2, -1, 2}.

namespace residua {

// A nonzero tuple with det_norm_mod_p(xbar, r, p) = 0.  When bound_ok is set,
// every |x_i| is strictly below p^{1/n}.
struct ResidueSolution {
    std::vector<std::int64_t> xbar;
    std::int64_t p = 0;
    bool bound_ok = false;
};

// Euler criterion: x^n = r (mod p) is solvable iff r^{(p-1)/gcd(p-1,n)} = 1.
// Requires p prime not dividing r, n >= 1.
bool has_nth_root(std::int64_t r, std::int64_t n, std::int64_t p);

// The full solution set of x^n = r (mod p), ascending; empty or of size
// exactly gcd(n, p-1).  One root by scan, the rest via roots of unity.
std::vector<std::int64_t> all_nth_roots(std::int64_t r, std::int64_t n, std::int64_t p);

// The co-order (p-1)/O_p(r): the largest n | p-1 such that r has an n-th
// root mod p.
std::int64_t co_order(std::int64_t r, std::int64_t p);

// Irreducibility of x^n - r in F_p[x]: no prime q | n may admit a q-th root
// of r, and when 4 | n with p = 3 (mod 4) additionally 4x^4 + r = 0 must have
// no solution.  r is reduced mod p first; r = 0 is reducible for n >= 2.
bool is_irreducible_fp(std::int64_t n, std::int64_t r, std::int64_t p);

// Irreducibility of x^n - r in Q[x] (r != 0): for r > 0 no prime q | n may
// give an integer q-th root; for r < 0 with 4 | n, -r/4 must additionally not
// be a fourth power.
bool is_irreducible_q(std::int64_t n, std::int64_t r);

// Pigeonhole solver: when x^n = r (mod p) has a root t, collide the values
// f(xbar) = sum x_i t^i over the box {0..ceil(p^{1/n})-1}^n and return the
// difference tuple: nonzero, norm-form zero mod p, coordinates strictly
// inside (-p^{1/n}, p^{1/n}).  When no root exists: absence if x^n - r is
// irreducible mod p; otherwise a zero divisor read off a proper factor of
// x^n - r (entries then live in [0, p) and bound_ok is false).
std::optional<ResidueSolution> find_nontrivial_zero(std::int64_t r, std::int64_t n,
                                                    std::int64_t p);

// Test-harness primitive for prime exponents q: evaluates "x^q = r (mod p)
// solvable" (Euler criterion) and "the norm form has a nontrivial zero mod p"
// (exhaustive scan, closed forms for q in {2,3}; collision route beyond the
// p^q <= 10^7 guard) and reports whether the two sides agree.
bool check_prime_exponent_equivalence(std::int64_t q, std::int64_t r, std::int64_t p);

// Whether the norm form over x^n - r provably misses the value p: true iff
// x^n - r is irreducible mod p (n >= 2).
bool norm_equals_p_obstruction(std::int64_t n, std::int64_t r, std::int64_t p);

// Constructive representation x0^2 - r*x1^2 = p for r in {-2, -1, 2}, p an
// odd prime with (r/p) = +1: bounded (a, b) from the pigeonhole solver, then
// the case-split transforms.  Throws on other r or on non-residue input.
std::pair<std::int64_t, std::int64_t> construct_norm_p(std::int64_t r, std::int64_t p);

}  // namespace residua
