#include "residua/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "residua/arith.hpp"
#include "residua/norm_forms.hpp"
#include "residua/orders.hpp"
#include "residua/power_residues.hpp"
#include "residua/quadratic.hpp"
#include "residua/search.hpp"

namespace residua {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// The walk below multiplies two residues as uint64 and divides with a
// double-precision reciprocal; both need the product to stay under 2^53.
constexpr std::int64_t kWalkModulusLimit = 94906265;  // floor(sqrt(2^53))

// Batched successive-multiplication walk: cur[i] tracks base[i]^step; when a
// lane reaches 1 its order is recorded and the lane is swap-removed.
std::vector<std::int64_t> batched_orders(const std::vector<std::int64_t>& bases,
                                         std::int64_t m) {
    if (m < 2 || m > kWalkModulusLimit)
        throw std::invalid_argument("batched_orders: modulus out of supported range");
    std::size_t count = bases.size();
    std::vector<std::int64_t> orders(count, 0);
    std::vector<std::uint64_t> base(count), cur(count);
    std::vector<std::uint32_t> idx(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::int64_t v = ((bases[i] % m) + m) % m;
        if (std::gcd(v, m) != 1) throw std::invalid_argument("batched_orders: base not coprime");
        base[i] = cur[i] = static_cast<std::uint64_t>(v);
        idx[i] = static_cast<std::uint32_t>(i);
    }
    const double inv = 1.0 / static_cast<double>(m);
    const std::int64_t im = m;
    std::size_t alive = count;
    std::int64_t step = 1;
    while (alive > 0) {
        std::size_t i = 0;
        while (i < alive) {
            if (cur[i] == 1) {
                orders[idx[i]] = step;
                --alive;
                cur[i] = cur[alive];
                base[i] = base[alive];
                idx[i] = idx[alive];
                continue;  // the swapped-in lane still needs this pass
            }
            std::uint64_t prod = cur[i] * base[i];
            std::uint64_t q = static_cast<std::uint64_t>(static_cast<double>(prod) * inv);
            std::int64_t rem = static_cast<std::int64_t>(prod) - static_cast<std::int64_t>(q) * im;
            if (rem < 0) rem += im;
            else if (rem >= im) rem -= im;
            cur[i] = static_cast<std::uint64_t>(rem);
            ++i;
        }
        ++step;
    }
    return orders;
}

// Synthetic division over F_p: does the monic polynomial with non-leading
// coefficients g (ascending, degree = g.size()) divide x^n - r0?
bool monic_divides_binomial(const std::vector<std::int64_t>& g, std::int64_t n,
                            std::int64_t r0, std::int64_t p) {
    std::size_t d = g.size();
    std::vector<std::int64_t> rem(static_cast<std::size_t>(n) + 1, 0);
    rem[static_cast<std::size_t>(n)] = 1;
    rem[0] = (p - r0) % p;
    for (std::size_t k = static_cast<std::size_t>(n); k >= d; --k) {
        std::int64_t c = rem[k];
        if (c == 0) continue;
        rem[k] = 0;
        for (std::size_t i = 0; i < d; ++i) {
            std::size_t pos = k - d + i;
            rem[pos] = static_cast<std::int64_t>(
                (static_cast<std::uint64_t>(rem[pos]) + static_cast<std::uint64_t>(p) -
                 mul_mod(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(g[i]),
                         static_cast<std::uint64_t>(p))) %
                static_cast<std::uint64_t>(p));
        }
        if (k == d) break;  // k is unsigned
    }
    for (std::size_t i = 0; i < d; ++i)
        if (rem[i] != 0) return false;
    return true;
}

std::string join_counts(std::int64_t checked, const std::string& what) {
    std::ostringstream os;
    os << checked << " " << what;
    return os.str();
}

// Small helpers for the norm-algebra check.
std::vector<std::int64_t> to_i64(const std::vector<BigInt>& v) {
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (const BigInt& x : v) out.push_back(static_cast<std::int64_t>(x));
    return out;
}

NormMatrix matrix_product(const NormMatrix& A, const NormMatrix& B) {
    NormMatrix C{A.n, A.modulus, std::vector<BigInt>(A.n * A.n, 0)};
    for (std::size_t i = 0; i < A.n; ++i)
        for (std::size_t k = 0; k < A.n; ++k) {
            const BigInt& a = A.at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < A.n; ++j) C.at(i, j) += a * B.at(k, j);
        }
    return C;
}

}  // namespace

std::vector<std::int64_t> orders_of_bases(const std::vector<std::int64_t>& bases,
                                          std::int64_t m) {
    return batched_orders(bases, m);
}

std::vector<std::int64_t> order_table_bruteforce(std::int64_t m) {
    std::vector<std::int64_t> units;
    for (std::int64_t x = 1; x < m; ++x)
        if (std::gcd(x, m) == 1) units.push_back(x);
    std::vector<std::int64_t> orders = batched_orders(units, m);
    std::vector<std::int64_t> table(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < units.size(); ++i)
        table[static_cast<std::size_t>(units[i])] = orders[i];
    return table;
}

bool irreducible_fp_bruteforce(std::int64_t n, std::int64_t r, std::int64_t p) {
    if (n == 1) return true;
    std::int64_t r0 = ((r % p) + p) % p;
    // Any factorization has a factor of degree <= n/2; scan all monic
    // candidates of those degrees.
    for (std::int64_t d = 1; 2 * d <= n; ++d) {
        std::vector<std::int64_t> g(static_cast<std::size_t>(d), 0);
        std::int64_t total = 1;
        for (std::int64_t i = 0; i < d; ++i) total *= p;
        for (std::int64_t k = 0; k < total; ++k) {
            std::int64_t kk = k;
            for (std::size_t i = 0; i < g.size(); ++i) {
                g[i] = kk % p;
                kk /= p;
            }
            if (monic_divides_binomial(g, n, r0, p)) return false;
        }
    }
    return true;
}

CheckResult check_residue_class_law() {
    auto start = Clock::now();
    CheckResult res{"residue-class-law", true, "", 0.0};
    std::vector<std::int64_t> qs = primes_up_to(50);
    std::vector<std::int64_t> ps = primes_up_to(10'000);
    std::int64_t pairs = 0;
    for (std::int64_t q : qs) {
        for (std::int64_t p : ps) {
            if (p == 2 || p == q) continue;
            bool by_class = classify_prime(q, p);
            bool by_euler = legendre(q, p) == +1;
            ++pairs;
            if (by_class != by_euler) {
                res.pass = false;
                std::ostringstream os;
                os << "mismatch at q=" << q << " p=" << p;
                res.details = os.str();
                res.seconds = seconds_since(start);
                return res;
            }
        }
    }
    res.details = join_counts(pairs, "(q,p) pairs agree");
    res.seconds = seconds_since(start);
    return res;
}

CheckResult check_half_order_uniqueness() {
    auto start = Clock::now();
    CheckResult res{"half-order-uniqueness", true, "", 0.0};
    std::ostringstream fail;
    std::int64_t count = 0;
    for (std::int64_t q : primes_up_to(50)) {
        auto subs = half_order_subgroups_containing_minus1(4 * q);
        Subgroup lq = build_l4q(q);
        ++count;
        if (subs.size() != 1 || !(subs[0] == lq)) {
            res.pass = false;
            fail << "4q=" << 4 * q << " expected a unique subgroup equal to the L-group; got "
                 << subs.size();
            break;
        }
    }
    if (res.pass) {
        // Modulus 60 admits several half-order subgroups containing -1; the
        // enumeration must contain both published ones.
        auto subs = half_order_subgroups_containing_minus1(60);
        Subgroup a{60, {1, 7, 11, 17, 43, 49, 53, 59}};
        Subgroup b{60, {1, 11, 19, 29, 31, 41, 49, 59}};
        bool has_a = std::any_of(subs.begin(), subs.end(), [&](const Subgroup& s) { return s == a; });
        bool has_b = std::any_of(subs.begin(), subs.end(), [&](const Subgroup& s) { return s == b; });
        if (!has_a || !has_b) {
            res.pass = false;
            fail << "m=60 enumeration missing an expected subgroup (found " << subs.size() << ")";
        } else {
            std::ostringstream os;
            os << count << " prime moduli unique; m=60 lists " << subs.size()
               << " subgroups incl. both published";
            res.details = os.str();
        }
    }
    if (!res.pass) res.details = fail.str();
    res.seconds = seconds_since(start);
    return res;
}

CheckResult check_order_composition() {
    auto start = Clock::now();
    CheckResult res{"order-composition", true, "", 0.0};
    std::ostringstream fail;
    std::int64_t checked_fast = 0, checked_comp = 0, checked_pp = 0, checked_2p = 0;

    // order_fast and order_composite vs the batched brute walk, all m <= 5000.
    for (std::int64_t m = 2; m <= 5000 && res.pass; ++m) {
        std::vector<std::int64_t> table = order_table_bruteforce(m);
        Factorization mf = factorize(m);
        bool composite = mf.factors.size() >= 2;
        for (std::int64_t x = 1; x < m; ++x) {
            std::int64_t expect = table[static_cast<std::size_t>(x)];
            if (expect == 0) continue;
            ++checked_fast;
            if (order_fast(x, m) != expect) {
                res.pass = false;
                fail << "order_fast(" << x << "," << m << ") != " << expect;
                break;
            }
            if (composite) {
                ++checked_comp;
                if (order_composite(x, mf) != expect) {
                    res.pass = false;
                    fail << "order_composite(" << x << "," << m << ") != " << expect;
                    break;
                }
            }
        }
    }

    // order_prime_power vs the walk on p <= 100 odd, r in 2..10, e <= 4.
    if (res.pass) {
        for (std::int64_t p : primes_up_to(100)) {
            if (p == 2) continue;
            std::int64_t pe = 1;
            for (int e = 1; e <= 4 && res.pass; ++e) {
                pe *= p;
                std::vector<std::int64_t> bases;
                for (std::int64_t r = 2; r <= 10; ++r)
                    if (r % p != 0) bases.push_back(r);
                std::vector<std::int64_t> expect = orders_of_bases(bases, pe);
                for (std::size_t i = 0; i < bases.size(); ++i) {
                    ++checked_pp;
                    if (order_prime_power(bases[i], p, e) != expect[i]) {
                        res.pass = false;
                        fail << "order_prime_power(" << bases[i] << "," << p << "," << e
                             << ") != " << expect[i];
                        break;
                    }
                }
            }
            if (!res.pass) break;
        }
    }

    // order_two_power vs the walk on odd r in 3..99, e in 2..10.
    if (res.pass) {
        for (int e = 2; e <= 10 && res.pass; ++e) {
            std::int64_t m = std::int64_t(1) << e;
            std::vector<std::int64_t> bases;
            for (std::int64_t r = 3; r <= 99; r += 2) bases.push_back(r);
            std::vector<std::int64_t> expect = orders_of_bases(bases, m);
            for (std::size_t i = 0; i < bases.size(); ++i) {
                ++checked_2p;
                if (order_two_power(bases[i], e) != expect[i]) {
                    res.pass = false;
                    fail << "order_two_power(" << bases[i] << "," << e << ") != " << expect[i];
                    break;
                }
            }
        }
    }

    if (res.pass) {
        std::ostringstream os;
        os << checked_fast << " order_fast, " << checked_comp << " order_composite, "
           << checked_pp << " prime-power, " << checked_2p << " two-power agreements";
        res.details = os.str();
    } else {
        res.details = fail.str();
    }
    res.seconds = seconds_since(start);
    return res;
}

CheckResult check_power_sums() {
    auto start = Clock::now();
    CheckResult res{"power-sums", true, "", 0.0};
    std::int64_t count = 0;
    for (std::int64_t p : primes_up_to(100)) {
        for (std::int64_t n = 1; n <= 300; ++n) {
            std::int64_t expect = (n % (p - 1) == 0) ? p - 1 : 0;
            if (p == 2) expect = 1;  // single term k = 1
            ++count;
            if (power_sum_mod(n, p) != expect) {
                res.pass = false;
                std::ostringstream os;
                os << "power_sum_mod(" << n << "," << p << ") != " << expect;
                res.details = os.str();
                res.seconds = seconds_since(start);
                return res;
            }
        }
    }
    res.details = join_counts(count, "(n,p) sums match the dichotomy");
    res.seconds = seconds_since(start);
    return res;
}

CheckResult check_norm_zero_enumeration() {
    auto start = Clock::now();
    CheckResult res{"norm-zero-enumeration", true, "", 0.0};
    std::int64_t count = 0;
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        for (std::int64_t n : {2, 3}) {
            for (std::int64_t r = 1; r < p; ++r) {
                // Exhaustive: does any nonzero tuple in F_p^n kill the norm?
                bool zero_found = false;
                std::vector<std::int64_t> x(static_cast<std::size_t>(n), 0);
                for (;;) {
                    std::size_t i = static_cast<std::size_t>(n);
                    bool wrapped = true;
                    while (i-- > 0) {
                        if (++x[i] < p) { wrapped = false; break; }
                        x[i] = 0;
                    }
                    if (wrapped) break;
                    if (det_norm_mod_p(x, r, p) == 0) { zero_found = true; break; }
                }
                ++count;
                if (is_irreducible_fp(n, r, p) != !zero_found) {
                    res.pass = false;
                    std::ostringstream os;
                    os << "mismatch at p=" << p << " n=" << n << " r=" << r;
                    res.details = os.str();
                    res.seconds = seconds_since(start);
                    return res;
                }
            }
        }
    }
    res.details = join_counts(count, "(p,n,r) cells: irreducibility == no nontrivial zero");
    res.seconds = seconds_since(start);
    return res;
}

CheckResult check_pigeonhole_bounds() {
    auto start = Clock::now();
    CheckResult res{"pigeonhole-bounds", true, "", 0.0};
    std::int64_t count = 0;
    for (std::int64_t p : primes_up_to(1'000)) {
        for (std::int64_t n : {2, 3, 4}) {
            for (std::int64_t r : {2, 3, 5, -1, -2}) {
                std::int64_t r0 = ((r % p) + p) % p;
                if (r0 == 0) continue;
                if (!has_nth_root(r, n, p)) continue;
                auto sol = find_nontrivial_zero(r, n, p);
                ++count;
                bool ok = sol.has_value() && sol->bound_ok;
                if (ok) {
                    bool nonzero = false;
                    for (std::int64_t xi : sol->xbar) {
                        if (xi != 0) nonzero = true;
                        // strict |x_i|^n < p via exact integer arithmetic
                        unsigned __int128 acc = 1;
                        std::int64_t mag = xi < 0 ? -xi : xi;
                        for (std::int64_t k = 0; k < n; ++k)
                            acc *= static_cast<unsigned __int128>(mag);
                        if (acc >= static_cast<unsigned __int128>(p)) ok = false;
                    }
                    ok = ok && nonzero && det_norm_mod_p(sol->xbar, r, p) == 0;
                }
                if (!ok) {
                    res.pass = false;
                    std::ostringstream os;
                    os << "bound/zero failure at p=" << p << " n=" << n << " r=" << r;
                    res.details = os.str();
                    res.seconds = seconds_since(start);
                    return res;
                }
            }
        }
    }
    res.details = join_counts(count, "solver outputs bounded, nonzero, and singular");
    res.seconds = seconds_since(start);
    return res;
}

CheckResult check_binary_norm_representation() {
    auto start = Clock::now();
    CheckResult res{"binary-norm-representation", true, "", 0.0};
    std::int64_t constructed = 0, obstructed = 0;
    for (std::int64_t p : primes_up_to(10'000)) {
        if (p == 2) continue;
        for (std::int64_t r : {2, -1, -2}) {
            if (legendre_general(r, p) == +1) {
                auto [x0, x1] = construct_norm_p(r, p);
                ++constructed;
                if (x0 * x0 - r * x1 * x1 != p) {
                    res.pass = false;
                    std::ostringstream os;
                    os << "construct_norm_p(" << r << "," << p << ") wrong norm";
                    res.details = os.str();
                    res.seconds = seconds_since(start);
                    return res;
                }
            } else {
                // Non-residue: the norm form provably misses p; spot-check by
                // bounded search.
                ++obstructed;
                for (std::int64_t x0 = 0; x0 <= 100; ++x0) {
                    for (std::int64_t x1 = 0; x1 <= 100; ++x1) {
                        if (x0 * x0 - r * x1 * x1 == p) {
                            res.pass = false;
                            std::ostringstream os;
                            os << "unexpected representation of p=" << p << " with r=" << r;
                            res.details = os.str();
                            res.seconds = seconds_since(start);
                            return res;
                        }
                    }
                }
            }
        }
    }
    std::ostringstream os;
    os << constructed << " representations constructed, " << obstructed
       << " non-residues verified barren to |x_i|<=100";
    res.details = os.str();
    res.seconds = seconds_since(start);
    return res;
}

CheckResult check_norm_algebra() {
    auto start = Clock::now();
    CheckResult res{"norm-algebra", true, "", 0.0};
    std::mt19937_64 rng(20240817);
    auto draw = [&](std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
    };
    std::ostringstream fail;

    for (int iter = 0; iter < 500 && res.pass; ++iter) {
        std::size_t n = static_cast<std::size_t>(draw(1, 5));
        std::int64_t r = draw(-10, 10);
        std::vector<std::int64_t> a(n), b(n), qmod(n + 1, 0);
        for (auto& v : a) v = draw(-20, 20);
        for (auto& v : b) v = draw(-20, 20);
        qmod[0] = -r;
        qmod[n] = 1;

        PolyMod pa = make_poly(a, qmod);
        PolyMod pb = make_poly(b, qmod);
        PolyMod prod = poly_mul_mod(pa, pb);
        std::vector<std::int64_t> ab = to_i64(prod.coeffs);

        // Multiplicativity of the norm.
        if (det_norm(ab, r) != det_norm(a, r) * det_norm(b, r)) {
            res.pass = false;
            fail << "multiplicativity failed at iter " << iter;
            break;
        }
        // The matrix map is a ring homomorphism.
        NormMatrix ma = build_matrix(a, r), mb = build_matrix(b, r);
        if (!(matrix_product(ma, mb) == build_matrix(ab, r))) {
            res.pass = false;
            fail << "homomorphism failed at iter " << iter;
            break;
        }
        // Adjugate closure: adj(M) is itself a multiplication matrix, read
        // off its first column.
        NormMatrix adj = adjugate(ma);
        std::vector<std::int64_t> ybar(n);
        for (std::size_t i = 0; i < n; ++i) ybar[i] = static_cast<std::int64_t>(adj.at(i, 0));
        if (!(build_matrix(ybar, r) == adj)) {
            res.pass = false;
            fail << "adjugate closure failed at iter " << iter;
            break;
        }
    }

    // Printed closed forms for n in {2,3,4}.
    std::int64_t closed_checked = 0;
    for (int iter = 0; iter < 1000 && res.pass; ++iter) {
        std::int64_t r = draw(-10, 10);
        auto x = [&]() { return draw(-20, 20); };
        {
            std::int64_t x0 = x(), x1 = x();
            BigInt expect = BigInt(x0) * x0 - BigInt(x1) * x1 * r;
            if (det_norm({x0, x1}, r) != expect) { res.pass = false; fail << "closed form n=2"; break; }
        }
        {
            std::int64_t x0 = x(), x1 = x(), x2 = x();
            BigInt R(r);
            BigInt expect = BigInt(x0) * x0 * x0 + BigInt(x1) * x1 * x1 * R +
                            BigInt(x2) * x2 * x2 * R * R - 3 * BigInt(x0) * x1 * x2 * R;
            if (det_norm({x0, x1, x2}, r) != expect) { res.pass = false; fail << "closed form n=3"; break; }
        }
        {
            std::int64_t x0 = x(), x1 = x(), x2 = x(), x3 = x();
            BigInt R(r);
            BigInt X0(x0), X1(x1), X2(x2), X3(x3);
            BigInt expect = X0 * X0 * X0 * X0 - X1 * X1 * X1 * X1 * R +
                            4 * X0 * X1 * X1 * X2 * R - 2 * X0 * X0 * X2 * X2 * R -
                            4 * X0 * X0 * X1 * X3 * R + X2 * X2 * X2 * X2 * R * R -
                            4 * X1 * X2 * X2 * X3 * R * R + 2 * X1 * X1 * X3 * X3 * R * R +
                            4 * X0 * X2 * X3 * X3 * R * R - X3 * X3 * X3 * X3 * R * R * R;
            if (det_norm({x0, x1, x2, x3}, r) != expect) { res.pass = false; fail << "closed form n=4"; break; }
        }
        closed_checked += 3;
    }

    if (res.pass) {
        std::ostringstream os;
        os << "500 random triples pass multiplicativity/homomorphism/adjugate; "
           << closed_checked << " closed-form evaluations agree";
        res.details = os.str();
    } else {
        res.details = fail.str();
    }
    res.seconds = seconds_since(start);
    return res;
}

CheckResult check_table_pattern() {
    auto start = Clock::now();
    CheckResult res{"table-pattern", true, "", 0.0};
    std::ostringstream detail;

    // Reference rows: primes the original not-found table expects to stay
    // "exhausted" at B = 200 for each exponent triple.
    const std::pair<std::array<int, 3>, std::int64_t> expected_exhausted[] = {
        {{2, 3, 3}, 2069}, {{3, 2, 3}, 2207}, {{3, 2, 3}, 2383},
        {{3, 3, 2}, 2039}, {{3, 3, 2}, 2083}};

    TableRow row = scan_table(2, 3, 3, 2500, 200);
    std::size_t prime_count = primes_up_to(2500).size();
    bool has_2069 = std::binary_search(row.exhausted.begin(), row.exhausted.end(), 2069);
    std::size_t other_exhausted = row.exhausted.size() - (has_2069 ? 1 : 0);
    // >= 99% of the remaining primes must be solved.
    std::size_t others = prime_count - 1;
    bool coverage = 100 * (others - other_exhausted) >= 99 * others;
    if (!coverage) res.pass = false;
    detail << "(2,3,3) scan: " << (others - other_exhausted) << "/" << others
           << " other primes solved at B=200";

    // The reference rows themselves: each must come back exhausted for the
    // criterion to hold.  A found witness refutes the row (the search space
    // |x|,|y|,|z| <= 200 really does contain a solution); report it verbatim.
    auto ipow = [](std::int64_t base, int e) {
        __int128 acc = 1;
        for (int i = 0; i < e; ++i) acc *= base;
        return acc;
    };
    std::size_t refuted = 0;
    for (const auto& [abc, p] : expected_exhausted) {
        SearchReport rep = search_triple(abc[0], abc[1], abc[2], p, 200);
        if (!rep.found) continue;
        __int128 total =
            ipow(rep.x, abc[0]) + 2 * ipow(rep.y, abc[1]) + 4 * ipow(rep.z, abc[2]);
        if (total != p)
            throw std::logic_error("table-pattern: witness failed exact recheck");
        res.pass = false;
        ++refuted;
        detail << "; expected-exhausted " << p << " (" << abc[0] << "," << abc[1]
               << "," << abc[2] << ") refuted: " << p << " = (" << rep.x << ")^"
               << abc[0] << " + 2*(" << rep.y << ")^" << abc[1] << " + 4*(" << rep.z
               << ")^" << abc[2];
    }
    if (refuted > 0)
        detail << " -- every witness re-verified exactly; the reference rows "
                  "record a search tool giving up, not nonexistence";

    res.details = detail.str();
    res.seconds = seconds_since(start);
    return res;
}

CheckResult check_irreducibility_oracle() {
    auto start = Clock::now();
    CheckResult res{"irreducibility-oracle", true, "", 0.0};
    std::int64_t count = 0;
    for (std::int64_t p : primes_up_to(31)) {
        for (std::int64_t n = 1; n <= 6; ++n) {
            for (std::int64_t r = 0; r < p; ++r) {
                ++count;
                if (is_irreducible_fp(n, r, p) != irreducible_fp_bruteforce(n, r, p)) {
                    res.pass = false;
                    std::ostringstream os;
                    os << "criterion vs factorizer mismatch at p=" << p << " n=" << n
                       << " r=" << r;
                    res.details = os.str();
                    res.seconds = seconds_since(start);
                    return res;
                }
            }
        }
    }
    // Reducible x^{p-1} - 2 despite 2 being a square: the classical list.
    for (std::int64_t p : {7, 17, 23, 31, 41, 47, 71}) {
        bool square = has_nth_root(2, 2, p);
        bool full_power = has_nth_root(2, p - 1, p);
        bool irr = is_irreducible_fp(p - 1, 2, p);
        if (!square || full_power || irr) {
            res.pass = false;
            std::ostringstream os;
            os << "square/reducibility pattern failed at p=" << p;
            res.details = os.str();
            res.seconds = seconds_since(start);
            return res;
        }
    }
    res.details = join_counts(count, "(p,n,r) cells agree with the trial-division factorizer");
    res.seconds = seconds_since(start);
    return res;
}

std::vector<CheckResult> run_all_checks() {
    return {check_residue_class_law(),    check_half_order_uniqueness(),
            check_order_composition(),    check_power_sums(),
            check_norm_zero_enumeration(),check_pigeonhole_bounds(),
            check_binary_norm_representation(), check_norm_algebra(),
            check_table_pattern(),        check_irreducibility_oracle()};
}

namespace {

using CheckFn = CheckResult (*)();

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> reg = {
        {"residue-class-law", &check_residue_class_law},
        {"half-order-uniqueness", &check_half_order_uniqueness},
        {"order-composition", &check_order_composition},
        {"power-sums", &check_power_sums},
        {"norm-zero-enumeration", &check_norm_zero_enumeration},
        {"pigeonhole-bounds", &check_pigeonhole_bounds},
        {"binary-norm-representation", &check_binary_norm_representation},
        {"norm-algebra", &check_norm_algebra},
        {"table-pattern", &check_table_pattern},
        {"irreducibility-oracle", &check_irreducibility_oracle},
    };
    return reg;
}

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

CheckResult run_named_check(const std::string& name) {
    for (const auto& [n, fn] : registry())
        if (n == name) return fn();
    throw std::invalid_argument("unknown check: " + name);
}

}  // namespace residua
