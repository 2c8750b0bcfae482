#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Exact integer plumbing shared by the rest of the library: primality,
// factorization, modular exponentiation, CRT, primitive roots.  Everything
// here is deterministic; no floating point is used to produce results.

namespace residua {

struct PrimePower {
    std::int64_t prime;
    int exponent;
    bool operator==(const PrimePower&) const = default;
};

// Factorization of a positive integer as ascending prime powers.
struct Factorization {
    std::int64_t value = 1;
    std::vector<PrimePower> factors;  // ascending by prime

    bool operator==(const Factorization&) const = default;
};

// One congruence x = residue (mod modulus), modulus >= 1.
struct Congruence {
    std::int64_t residue;
    std::int64_t modulus;
};

using CongruenceSystem = std::vector<Congruence>;

// (a * b) mod m without overflow; m > 0, operands reduced mod m first.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// r^e mod m, m >= 1.  mod_pow(r, 0, m) = 1 mod m.
std::int64_t mod_pow(std::int64_t r, std::uint64_t e, std::int64_t m);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.  n < 2 is not prime.
bool is_prime(std::int64_t n);

// Ascending prime-power factorization of n >= 1 by wheel trial division.
// factorize(1) has an empty factor list.  Throws std::invalid_argument on n < 1.
Factorization factorize(std::int64_t n);

// Euler phi of n >= 1.
std::int64_t euler_phi(std::int64_t n);
std::int64_t euler_phi(const Factorization& f);

// gcd for possibly-negative arguments; result >= 0.
std::int64_t gcd64(std::int64_t a, std::int64_t b);

// Extended gcd: returns g = gcd(a, b) and x, y with a*x + b*y = g.
struct ExtGcd {
    std::int64_t g, x, y;
};
ExtGcd ext_gcd(std::int64_t a, std::int64_t b);

// Inverse of a mod m (gcd(a, m) = 1); throws std::invalid_argument otherwise.
std::int64_t inv_mod(std::int64_t a, std::int64_t m);

// CRT for pairwise-coprime moduli.  Result is (x, M) with M the product of the
// moduli and 0 <= x < M.  Throws std::invalid_argument if moduli are not
// pairwise coprime.  An empty system yields (0, 1).
std::pair<std::int64_t, std::int64_t> crt_coprime(const CongruenceSystem& sys);

// General CRT: moduli need not be coprime.  Returns (x, lcm) when the system
// is consistent, std::nullopt when it is not.  Throws std::overflow_error if
// the lcm does not fit in int64.
std::optional<std::pair<std::int64_t, std::int64_t>> crt_general(const CongruenceSystem& sys);

// Smallest primitive root of the prime p; primitive_root(2) = 1 by convention.
std::int64_t primitive_root(std::int64_t p);

// floor(x^(1/n)) for x >= 0, n >= 1; exact (binary search, no floating point).
std::int64_t iroot_floor(std::int64_t x, int n);

// Exact n-th root of x if x is a perfect n-th power (x >= 0), else nullopt.
std::optional<std::int64_t> exact_root(std::int64_t x, int n);

// Primes <= limit, ascending.
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

}  // namespace residua
