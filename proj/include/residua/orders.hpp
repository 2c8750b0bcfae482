#pragma once

#include <cstdint>
#include <vector>

#include "residua/arith.hpp"

// Multiplicative orders O_m(r), the co-order phi(m)/O_m(r), composite-order
// composition (prime-power lifting, lcm over factors, the phi-quotient
// exponent bound), roots of unity, and power/geometric sums.

namespace residua {

struct OrderRecord {
    std::int64_t modulus;   // m >= 2
    std::int64_t base;      // r, normalized into [0, m)
    std::int64_t order;     // least n >= 1 with r^n = 1 (mod m)
    std::int64_t co_order;  // euler_phi(m) / order
};

// Least n >= 1 with r^n = 1 (mod m), by successive multiplication.  This is
// the oracle the fast routines are tested against.  Requires gcd(r, m) = 1.
std::int64_t order_bruteforce(std::int64_t r, std::int64_t m);

// Same value as order_bruteforce, by factoring phi(m) and stripping prime
// factors while the power stays 1.
std::int64_t order_fast(std::int64_t r, std::int64_t m);

// Order of r modulo p^e for an odd prime p, gcd(r, p) = 1, r != +-1 as an
// integer: anchor at the order d modulo p, find the largest e0 <= e with
// r^d = 1 (mod p^{e0}), then the order is p^{e-e0} * d for e > e0.
std::int64_t order_prime_power(std::int64_t r, std::int64_t p, int e);

// Order of odd r != +-1 modulo 2^e, e >= 2; anchored at the order modulo 4.
std::int64_t order_two_power(std::int64_t r, int e);

// Order modulo a composite m with >= 2 distinct primes: lcm of the orders
// modulo each prime power.  Takes the factorization so the caller controls
// the decomposition.
std::int64_t order_composite(std::int64_t r, const Factorization& m_fact);

// c = phi(m) / gcd(phi(p1^e1), ..., phi(ps^es)); every r coprime to m has
// r^c = 1 (mod m).  Requires >= 2 distinct prime factors.
std::int64_t phi_quotient_exponent(const Factorization& m_fact);

// Convenience record combining order and co-order.
OrderRecord order_record(std::int64_t r, std::int64_t m);

// All solutions of x^n = 1 (mod p), ascending; exactly gcd(n, p-1) of them,
// generated from a primitive root.
std::vector<std::int64_t> nth_roots_of_unity(std::int64_t n, std::int64_t p);

// (sum_{k=1}^{p-1} k^n) mod p; equals p-1 when (p-1) | n and 0 otherwise.
std::int64_t power_sum_mod(std::int64_t n, std::int64_t p);

// (sum_{i=0}^{n-1} a^i) mod p.
std::int64_t geometric_sum_mod(std::int64_t a, std::int64_t n, std::int64_t p);

}  // namespace residua
