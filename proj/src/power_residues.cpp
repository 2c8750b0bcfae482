#include "residua/power_residues.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "residua/norm_forms.hpp"
#include "residua/orders.hpp"
#include "residua/quadratic.hpp"

namespace residua {

namespace {

std::int64_t normalize(std::int64_t r, std::int64_t p) { return ((r % p) + p) % p; }

std::int64_t require_unit_mod_p(std::int64_t r, std::int64_t p, const char* who) {
    if (!is_prime(p)) throw std::invalid_argument(std::string(who) + ": p must be prime");
    std::int64_t r0 = normalize(r, p);
    if (r0 == 0) throw std::invalid_argument(std::string(who) + ": p must not divide r");
    return r0;
}

// Smallest t in [1, p) with t^n = r0 (mod p), or -1; linear scan (desk scale).
std::int64_t smallest_root(std::int64_t r0, std::int64_t n, std::int64_t p) {
    for (std::int64_t t = 1; t < p; ++t)
        if (mod_pow(t, static_cast<std::uint64_t>(n), p) == r0) return t;
    return -1;
}

// Divide x^n - r0 by the monic polynomial with non-leading coefficients
// g[0..d-1] over F_p.  On success returns the quotient's coefficients
// (length n - d + 1, monic).
std::optional<std::vector<std::int64_t>> divide_binomial(std::int64_t n, std::int64_t r0,
                                                         const std::vector<std::int64_t>& g,
                                                         std::int64_t p) {
    std::size_t d = g.size();
    // Dividend coefficients, descending degree view kept implicit: work array
    // holds the current remainder of degree <= n.
    std::vector<std::int64_t> rem(static_cast<std::size_t>(n) + 1, 0);
    rem[static_cast<std::size_t>(n)] = 1;
    rem[0] = normalize(-r0, p);
    std::vector<std::int64_t> quot(static_cast<std::size_t>(n) - d + 1, 0);
    for (std::size_t k = static_cast<std::size_t>(n); k + 1 >= d + 1; --k) {
        std::int64_t c = rem[k];
        if (c == 0) continue;
        quot[k - d] = c;
        rem[k] = 0;
        for (std::size_t i = 0; i < d; ++i) {
            std::size_t pos = k - d + i;
            rem[pos] = static_cast<std::int64_t>(
                (static_cast<std::uint64_t>(rem[pos]) + static_cast<std::uint64_t>(p) -
                 mul_mod(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(g[i]),
                         static_cast<std::uint64_t>(p))) %
                static_cast<std::uint64_t>(p));
        }
    }
    for (std::size_t i = 0; i < d; ++i)
        if (rem[i] != 0) return std::nullopt;
    return quot;
}

}  // namespace

bool has_nth_root(std::int64_t r, std::int64_t n, std::int64_t p) {
    if (n < 1) throw std::invalid_argument("has_nth_root: n must be >= 1");
    std::int64_t r0 = require_unit_mod_p(r, p, "has_nth_root");
    std::int64_t g = std::gcd(n, p - 1);
    return mod_pow(r0, static_cast<std::uint64_t>((p - 1) / g), p) == 1;
}

std::vector<std::int64_t> all_nth_roots(std::int64_t r, std::int64_t n, std::int64_t p) {
    if (n < 1) throw std::invalid_argument("all_nth_roots: n must be >= 1");
    std::int64_t r0 = require_unit_mod_p(r, p, "all_nth_roots");
    std::int64_t t = smallest_root(r0, n, p);
    if (t < 0) return {};
    std::vector<std::int64_t> roots;
    for (std::int64_t w : nth_roots_of_unity(n, p))
        roots.push_back(static_cast<std::int64_t>(
            mul_mod(static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(w),
                    static_cast<std::uint64_t>(p))));
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::int64_t co_order(std::int64_t r, std::int64_t p) {
    require_unit_mod_p(r, p, "co_order");
    if (p == 2) return 1;
    return (p - 1) / order_fast(r, p);
}

bool is_irreducible_fp(std::int64_t n, std::int64_t r, std::int64_t p) {
    if (n < 1) throw std::invalid_argument("is_irreducible_fp: n must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument("is_irreducible_fp: p must be prime");
    if (n == 1) return true;
    std::int64_t r0 = normalize(r, p);
    if (r0 == 0) return false;  // x^n factors off x for n >= 2
    for (const auto& [q, e] : factorize(n).factors)
        if (has_nth_root(r0, q, p)) return false;
    // With 4 | n and 4 not dividing p-1 (p odd), the extra quartic condition
    // applies: x^n - r is reducible whenever 4x^4 + r has a root.
    if (n % 4 == 0 && p != 2 && (p - 1) % 4 != 0) {
        for (std::int64_t x = 0; x < p; ++x) {
            std::int64_t x4 = mod_pow(x, 4, p);
            if (normalize(4 * x4 + r0, p) == 0) return false;
        }
    }
    return true;
}

bool is_irreducible_q(std::int64_t n, std::int64_t r) {
    if (n < 1) throw std::invalid_argument("is_irreducible_q: n must be >= 1");
    if (r == 0) throw std::invalid_argument("is_irreducible_q: r must be nonzero");
    if (n == 1) return true;
    for (const auto& [q, e] : factorize(n).factors) {
        if (r > 0) {
            if (exact_root(r, static_cast<int>(q))) return false;
        } else if (q != 2) {
            if (exact_root(-r, static_cast<int>(q))) return false;  // odd root of a negative
        }
    }
    // r < 0, 4 | n: x^n - r is also reducible when -r = 4*a^4 (the quartic
    // identity x^4 + 4a^4 = (x^2-2ax+2a^2)(x^2+2ax+2a^2)).
    if (r < 0 && n % 4 == 0 && (-r) % 4 == 0 && exact_root((-r) / 4, 4)) return false;
    return true;
}

std::optional<ResidueSolution> find_nontrivial_zero(std::int64_t r, std::int64_t n,
                                                    std::int64_t p) {
    if (n < 2) throw std::invalid_argument("find_nontrivial_zero: n must be >= 2");
    std::int64_t r0 = require_unit_mod_p(r, p, "find_nontrivial_zero");
    std::size_t un = static_cast<std::size_t>(n);

    std::int64_t t = smallest_root(r0, n, p);
    if (t >= 0) {
        // Pigeonhole collision over the box S^n, S = {0..s-1}, s^n > p.
        std::int64_t s = iroot_floor(p, static_cast<int>(n)) + 1;
        std::vector<std::int64_t> tpow(un);
        tpow[0] = 1;
        for (std::size_t i = 1; i < un; ++i)
            tpow[i] = static_cast<std::int64_t>(
                mul_mod(static_cast<std::uint64_t>(tpow[i - 1]), static_cast<std::uint64_t>(t),
                        static_cast<std::uint64_t>(p)));

        std::vector<std::int64_t> first(static_cast<std::size_t>(p), -1);
        std::vector<std::int64_t> cur(un, 0);
        for (std::int64_t rank = 0;; ++rank) {
            std::uint64_t f = 0;
            for (std::size_t i = 0; i < un; ++i)
                f = (f + mul_mod(static_cast<std::uint64_t>(cur[i]),
                                 static_cast<std::uint64_t>(tpow[i]),
                                 static_cast<std::uint64_t>(p))) %
                    static_cast<std::uint64_t>(p);
            std::int64_t& slot = first[static_cast<std::size_t>(f)];
            if (slot >= 0) {
                // Decode the stored lexicographic rank (x_0 most significant).
                std::vector<std::int64_t> other(un);
                std::int64_t rr = slot;
                for (std::size_t i = un; i-- > 0;) {
                    other[i] = rr % s;
                    rr /= s;
                }
                ResidueSolution sol;
                sol.p = p;
                sol.xbar.resize(un);
                sol.bound_ok = true;
                for (std::size_t i = 0; i < un; ++i) {
                    sol.xbar[i] = cur[i] - other[i];
                    std::int64_t m = sol.xbar[i] < 0 ? -sol.xbar[i] : sol.xbar[i];
                    unsigned __int128 acc = 1;
                    for (std::size_t k = 0; k < un; ++k) acc *= static_cast<unsigned __int128>(m);
                    if (acc >= static_cast<unsigned __int128>(p)) sol.bound_ok = false;
                }
                return sol;
            }
            slot = rank;
            // Advance the odometer (last coordinate fastest).
            std::size_t i = un;
            while (i-- > 0) {
                if (++cur[i] < s) break;
                cur[i] = 0;
                if (i == 0) throw std::logic_error("find_nontrivial_zero: box exhausted");
            }
        }
    }

    // No root.  Irreducible means provably no nontrivial zero exists.
    if (is_irreducible_fp(n, r0, p)) return std::nullopt;

    // Reducible without an n-th root (composite n): read a zero divisor off a
    // proper monic factor g of x^n - r0.  g(u) * (quotient)(u) = 0 in the
    // quotient ring, so one of the two has a singular multiplication matrix.
    for (std::size_t d = 1; d < un; ++d) {
        unsigned __int128 candidates = 1;
        for (std::size_t i = 0; i < d; ++i) candidates *= static_cast<unsigned __int128>(p);
        if (candidates > 20'000'000)
            throw std::runtime_error("find_nontrivial_zero: factor search budget exceeded");
        std::vector<std::int64_t> g(d, 0);
        for (std::int64_t k = 0;; ++k) {
            std::int64_t kk = k;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = kk % p;
                kk /= p;
            }
            if (kk > 0) break;  // all degree-d candidates exhausted
            if (auto quot = divide_binomial(n, r0, g, p)) {
                std::vector<std::int64_t> z(g.begin(), g.end());
                z.resize(un, 0);
                z[d] = 1;
                if (det_norm_mod_p(z, r0, p) == 0)
                    return ResidueSolution{std::move(z), p, false};
                std::vector<std::int64_t> w = *quot;
                w.resize(un, 0);
                return ResidueSolution{std::move(w), p, false};
            }
        }
    }
    throw std::logic_error("find_nontrivial_zero: reducible binomial without proper factor");
}

bool check_prime_exponent_equivalence(std::int64_t q, std::int64_t r, std::int64_t p) {
    if (!is_prime(q)) throw std::invalid_argument("check_prime_exponent_equivalence: q must be prime");
    std::int64_t r0 = require_unit_mod_p(r, p, "check_prime_exponent_equivalence");
    bool lhs = has_nth_root(r0, q, p);

    bool rhs;
    unsigned __int128 box = 1;
    bool small = true;
    for (std::int64_t i = 0; i < q && small; ++i) {
        box *= static_cast<unsigned __int128>(p);
        if (box > 10'000'000) small = false;
    }
    if (small && q == 2) {
        // x0^2 - r x1^2 = 0 with (x0, x1) != 0: exhaustive scan via square tables.
        rhs = false;
        std::vector<std::int64_t> sq(static_cast<std::size_t>(p));
        for (std::int64_t x = 0; x < p; ++x)
            sq[static_cast<std::size_t>(x)] = mod_pow(x, 2, p);
        for (std::int64_t x0 = 0; x0 < p && !rhs; ++x0)
            for (std::int64_t x1 = (x0 == 0 ? 1 : 0); x1 < p; ++x1) {
                std::int64_t v = normalize(
                    sq[static_cast<std::size_t>(x0)] -
                        static_cast<std::int64_t>(mul_mod(
                            static_cast<std::uint64_t>(r0),
                            static_cast<std::uint64_t>(sq[static_cast<std::size_t>(x1)]),
                            static_cast<std::uint64_t>(p))),
                    p);
                if (v == 0) { rhs = true; break; }
            }
    } else if (small && q == 3) {
        // x0^3 + r x1^3 + r^2 x2^3 - 3 r x0 x1 x2 = 0 via cube tables.
        rhs = false;
        std::uint64_t up = static_cast<std::uint64_t>(p);
        std::vector<std::uint64_t> cb(static_cast<std::size_t>(p));
        for (std::int64_t x = 0; x < p; ++x)
            cb[static_cast<std::size_t>(x)] = static_cast<std::uint64_t>(mod_pow(x, 3, p));
        std::uint64_t ur = static_cast<std::uint64_t>(r0);
        std::uint64_t r2 = mul_mod(ur, ur, up);
        std::uint64_t r3 = mul_mod(3 % up, ur, up);
        for (std::int64_t x0 = 0; x0 < p && !rhs; ++x0)
            for (std::int64_t x1 = 0; x1 < p && !rhs; ++x1) {
                std::uint64_t base =
                    (cb[static_cast<std::size_t>(x0)] +
                     mul_mod(ur, cb[static_cast<std::size_t>(x1)], up)) % up;
                std::uint64_t cross0 = mul_mod(
                    r3, mul_mod(static_cast<std::uint64_t>(x0),
                                static_cast<std::uint64_t>(x1), up), up);
                for (std::int64_t x2 = (x0 == 0 && x1 == 0 ? 1 : 0); x2 < p; ++x2) {
                    std::uint64_t v =
                        (base + mul_mod(r2, cb[static_cast<std::size_t>(x2)], up) + up * 2 -
                         mul_mod(cross0, static_cast<std::uint64_t>(x2), up)) % up;
                    if (v == 0) { rhs = true; break; }
                }
            }
    } else if (small) {
        // Generic exhaustive scan under the guard.
        rhs = false;
        std::vector<std::int64_t> x(static_cast<std::size_t>(q), 0);
        x.back() = 1;
        for (;;) {
            if (det_norm_mod_p(x, r0, p) == 0) { rhs = true; break; }
            std::size_t i = static_cast<std::size_t>(q);
            bool done = false;
            while (i-- > 0) {
                if (++x[i] < p) break;
                x[i] = 0;
                if (i == 0) done = true;  // full wrap: every tuple visited
            }
            if (done) break;
        }
    } else {
        // Beyond the brute guard: the collision/factor route constructs an
        // explicit zero when one exists; for prime exponent the no-root case
        // is exactly the irreducible case, reported as absence.
        auto sol = find_nontrivial_zero(r0, q, p);
        rhs = sol.has_value();
        if (sol && det_norm_mod_p(sol->xbar, r0, p) != 0) return false;
    }
    return lhs == rhs;
}

bool norm_equals_p_obstruction(std::int64_t n, std::int64_t r, std::int64_t p) {
    if (n < 2) throw std::invalid_argument("norm_equals_p_obstruction: n must be >= 2");
    return is_irreducible_fp(n, r, p);
}

std::pair<std::int64_t, std::int64_t> construct_norm_p(std::int64_t r, std::int64_t p) {
    if (r != 2 && r != -1 && r != -2)
        throw std::invalid_argument("construct_norm_p: r must be one of {-2, -1, 2}");
    if (p == 2 || !is_prime(p)) throw std::invalid_argument("construct_norm_p: p must be an odd prime");
    if (legendre_general(r, p) != +1)
        throw std::invalid_argument("construct_norm_p: r must be a quadratic residue mod p");

    auto sol = find_nontrivial_zero(r, 2, p);
    if (!sol || !sol->bound_ok) throw std::logic_error("construct_norm_p: solver returned no bounded pair");
    std::int64_t a = sol->xbar[0], b = sol->xbar[1];

    auto check = [&](std::int64_t x0, std::int64_t x1) -> std::pair<std::int64_t, std::int64_t> {
        if (x0 * x0 - r * x1 * x1 != p) throw std::logic_error("construct_norm_p: transform failed");
        return {x0, x1};
    };
    std::int64_t v = a * a - r * b * b;
    if (r == 2) {
        // v = a^2 - 2 b^2 lies in (-2p, p), is a nonzero multiple of p: v = -p.
        return check(a + 2 * b, a + b);
    }
    if (r == -1) {
        // v = a^2 + b^2 in (0, 2p): v = p.
        return check(a, b);
    }
    // r = -2: v = a^2 + 2 b^2 in (0, 3p): v = p or 2p; halve in the even case.
    if (v == p) return check(a, b);
    return check(b, a / 2);
}

}  // namespace residua
