#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Self-verification suites: each check pits the library's fast routines
// against independent brute-force oracles on a fixed grid and reports one
// pass/fail result.  The CLI `verify` subcommand and the acceptance test
// binary both run these.

namespace residua {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;  // grid sizes, counts, first failure if any
    double seconds = 0.0;
};

// Brute-force oracles (independent re-implementations, used only for checks).

// Multiplicative order of every unit mod m at once; table[x] = order of x for
// units, 0 otherwise.  Batched successive multiplication.
std::vector<std::int64_t> order_table_bruteforce(std::int64_t m);

// Orders of the given bases modulo m by the same batched walk; bases must be
// coprime to m.
std::vector<std::int64_t> orders_of_bases(const std::vector<std::int64_t>& bases,
                                          std::int64_t m);

// Irreducibility of x^n - r over F_p by trial division against every monic
// polynomial of degree <= n/2.
bool irreducible_fp_bruteforce(std::int64_t n, std::int64_t r, std::int64_t p);

// The named acceptance checks, in order.
CheckResult check_residue_class_law();         // class membership decides (q/p)
CheckResult check_half_order_uniqueness();     // one index-2 subgroup with -1 per 4q
CheckResult check_order_composition();         // fast orders vs brute walk, full grids
CheckResult check_power_sums();                // sum k^n mod p dichotomy
CheckResult check_norm_zero_enumeration();     // irreducible <=> no nontrivial norm zero
CheckResult check_pigeonhole_bounds();         // collision solver bound guarantees
CheckResult check_binary_norm_representation();// x0^2 - r x1^2 = p construction + converse
CheckResult check_norm_algebra();              // multiplicativity/homomorphism/adjugate
CheckResult check_table_pattern();             // exponent-triple search table
CheckResult check_irreducibility_oracle();     // criterion vs trial-division factorizer

// All checks in presentation order.
std::vector<CheckResult> run_all_checks();

// Names accepted by run_named_check, in the same order as run_all_checks.
std::vector<std::string> check_names();

// Run one check by name; throws std::invalid_argument for unknown names.
CheckResult run_named_check(const std::string& name);

}  // namespace residua
