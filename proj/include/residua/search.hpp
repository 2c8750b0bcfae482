#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Bounded Diophantine search for x^a + 2y^b + 4z^c = p and the table scan
// over prime ranges.  Bounded search cannot prove nonexistence (odd powers
// are unbounded below), so a miss reports "exhausted(B)", never "no solution".

namespace residua {

struct SearchReport {
    int a = 1, b = 1, c = 1;     // exponents, each in {1,2,3}
    std::int64_t p = 0;          // target prime
    std::int64_t bound = 0;      // enumeration bound B
    bool found = false;
    std::int64_t x = 0, y = 0, z = 0;  // witness, valid when found

    bool operator==(const SearchReport&) const = default;
};

struct TableRow {
    int a = 1, b = 1, c = 1;
    std::int64_t prime_limit = 0;  // scan ceiling (primes <= this)
    std::int64_t bound = 0;
    std::vector<std::int64_t> exhausted;  // ascending primes with no witness found
};

// Deterministic bounded search.  Variables with even exponent range over
// {0..B}; odd exponents over 0, 1, -1, 2, -2, ..., B, -B; the first variable
// of exponent 1 (priority x, y, z) is solved for exactly and is not bounded;
// with no linear variable, z is solved by exact root extraction and must obey
// |z| <= B.  The first witness in this enumeration order is returned, and is
// re-verified exactly before reporting.
SearchReport search_triple(int a, int b, int c, std::int64_t p, std::int64_t bound);

// search_triple over every prime <= prime_limit, ascending; `jobs` worker
// threads partition the primes, and the merged output is independent of the
// scheduling.
std::vector<SearchReport> scan_reports(int a, int b, int c, std::int64_t prime_limit,
                                       std::int64_t bound, int jobs = 1);

// The exhausted-primes row derived from scan_reports.
TableRow scan_table(int a, int b, int c, std::int64_t prime_limit, std::int64_t bound,
                    int jobs = 1);

// JSON round-trip for reports (single line, stable key order).
std::string report_to_json(const SearchReport& r);
SearchReport report_from_json(const std::string& line);

}  // namespace residua
