#pragma once

#include <cstdint>
#include <vector>

#include "residua/arith.hpp"

// Quadratic residue machinery: Legendre symbols (Euler criterion, class-based,
// and reciprocity routes), the subgroup of squares, and the residue-class
// subgroups of U_{4q} / U_{4r} whose membership decides whether q (resp. r)
// is a square modulo a prime.

namespace residua {

// The full unit group U_m, elements sorted ascending.
struct ResidueClassGroup {
    std::int64_t modulus;
    std::vector<std::int64_t> elements;
};

// A subgroup of U_{modulus}; elements sorted ascending, always containing 1.
struct Subgroup {
    std::int64_t modulus;
    std::vector<std::int64_t> elements;

    bool contains(std::int64_t x) const;
    bool operator==(const Subgroup&) const = default;
};

ResidueClassGroup units_group(std::int64_t m);

// Legendre symbol (r/p) by the Euler criterion; p odd prime, p must not
// divide r.  Returns +1 or -1.
int legendre(std::int64_t r, std::int64_t p);

// The subgroup of nonzero squares modulo an odd prime p; size (p-1)/2.
Subgroup build_lstar(std::int64_t p);

// The "L-group" of a prime q: the index-2 subgroup of U_{4q} containing -1
// whose classes consist exactly of the primes p with (q/p) = +1.  For q = 2
// this is {1,7} mod 8; for odd q it is assembled from the square/non-square
// split of c mod q crossed with c mod 4.
Subgroup build_l4q(std::int64_t q);

// Whether (q/p) = +1, decided purely by the residue class of p modulo 4q.
bool classify_prime(std::int64_t q, std::int64_t p);

// All index-2 subgroups of U_m that contain m-1, i.e. -1.  Enumerated as
// kernels of surjective characters U_m -> {+-1} over a generating set of
// independent cyclic factors.  Guard: euler_phi(m) even and <= 2^16.
std::vector<Subgroup> half_order_subgroups_containing_minus1(std::int64_t m);

// The L-group of a square-free r >= 2: the subgroup of U_{4r} selected by the
// even-parity rule over the per-prime L-groups of r's factors.
Subgroup build_l4r_squarefree(const Factorization& r_fact);

// Legendre symbol for arbitrary nonzero r coprime to p: strips square
// factors, applies the class rule for each remaining prime, and multiplies
// by (-1)^{(p-1)/2} for negative r.
int legendre_general(std::int64_t r, std::int64_t p);

// Third, independent route for odd primes q != p: the reciprocity formula
// (q/p) = (-1)^{((q-1)/2)((p-1)/2)} (p/q); used only for cross-checks.
int legendre_via_reciprocity(std::int64_t q, std::int64_t p);

}  // namespace residua
