#include "residua/orders.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace residua {

namespace {

std::int64_t normalize(std::int64_t r, std::int64_t m) { return ((r % m) + m) % m; }

void require_unit(std::int64_t r, std::int64_t m, const char* who) {
    if (m < 2) throw std::invalid_argument(std::string(who) + ": modulus must be >= 2");
    if (std::gcd(normalize(r, m), m) != 1)
        throw std::invalid_argument(std::string(who) + ": base must be coprime to the modulus");
}

}  // namespace

std::int64_t order_bruteforce(std::int64_t r, std::int64_t m) {
    require_unit(r, m, "order_bruteforce");
    std::uint64_t um = static_cast<std::uint64_t>(m);
    std::uint64_t base = static_cast<std::uint64_t>(normalize(r, m));
    std::uint64_t acc = base;
    std::int64_t n = 1;
    while (acc != 1) {
        acc = mul_mod(acc, base, um);
        ++n;
    }
    return n;
}

std::int64_t order_fast(std::int64_t r, std::int64_t m) {
    require_unit(r, m, "order_fast");
    std::int64_t rm = normalize(r, m);
    std::int64_t t = euler_phi(m);
    for (const auto& [q, e] : factorize(t).factors) {
        while (t % q == 0 && mod_pow(rm, static_cast<std::uint64_t>(t / q), m) == 1) t /= q;
    }
    return t;
}

std::int64_t order_prime_power(std::int64_t r, std::int64_t p, int e) {
    if (p == 2) throw std::invalid_argument("order_prime_power: p must be odd (see order_two_power)");
    if (!is_prime(p)) throw std::invalid_argument("order_prime_power: p must be prime");
    if (e < 1) throw std::invalid_argument("order_prime_power: exponent must be >= 1");
    if (r == 1) return 1;
    if (r == -1) return 2;
    if (std::gcd(normalize(r, p), p) != 1)
        throw std::invalid_argument("order_prime_power: base must be coprime to p");

    std::int64_t d = order_fast(r, p);
    if (e == 1) return d;
    // e0 = max e' <= e with r^d = 1 (mod p^{e'}); the order mod p^{e'} equals
    // d exactly when that power collapses to 1 (it is always a multiple of d).
    std::int64_t pe = p;
    int e0 = 1;
    for (int k = 2; k <= e; ++k) {
        pe *= p;
        if (mod_pow(r, static_cast<std::uint64_t>(d), pe) != 1) break;
        e0 = k;
    }
    std::int64_t result = d;
    for (int k = e0; k < e; ++k) result *= p;
    return result;
}

std::int64_t order_two_power(std::int64_t r, int e) {
    if (e < 2) throw std::invalid_argument("order_two_power: exponent must be >= 2");
    if ((r & 1) == 0) throw std::invalid_argument("order_two_power: base must be odd");
    if (r == 1) return 1;
    if (r == -1) return 2;

    std::int64_t d = (normalize(r, 4) == 1) ? 1 : 2;  // order modulo 4
    std::int64_t pe = 4;
    int e0 = 2;
    for (int k = 3; k <= e; ++k) {
        pe *= 2;
        if (mod_pow(r, static_cast<std::uint64_t>(d), pe) != 1) break;
        e0 = k;
    }
    std::int64_t result = d;
    for (int k = e0; k < e; ++k) result *= 2;
    return result;
}

std::int64_t order_composite(std::int64_t r, const Factorization& m_fact) {
    if (m_fact.factors.size() < 2)
        throw std::invalid_argument("order_composite: modulus must have >= 2 distinct primes");
    require_unit(r, m_fact.value, "order_composite");
    std::int64_t result = 1;
    for (const auto& [p, e] : m_fact.factors) {
        std::int64_t pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        std::int64_t rp = normalize(r, pe);
        std::int64_t o;
        if (rp == 1) {
            o = 1;
        } else if (rp == pe - 1) {
            o = (pe == 2) ? 1 : 2;
        } else if (p == 2) {
            o = order_two_power(rp, e);  // e >= 2 here: mod 2, r = 1 was caught above
        } else {
            o = order_prime_power(rp, p, e);
        }
        result = std::lcm(result, o);
    }
    return result;
}

std::int64_t phi_quotient_exponent(const Factorization& m_fact) {
    if (m_fact.factors.size() < 2)
        throw std::invalid_argument("phi_quotient_exponent: modulus must have >= 2 distinct primes");
    std::int64_t g = 0;
    for (const auto& [p, e] : m_fact.factors) {
        std::int64_t phi_pe = p - 1;
        for (int i = 1; i < e; ++i) phi_pe *= p;
        g = std::gcd(g, phi_pe);
    }
    return euler_phi(m_fact) / g;
}

OrderRecord order_record(std::int64_t r, std::int64_t m) {
    std::int64_t o = order_fast(r, m);
    return {m, normalize(r, m), o, euler_phi(m) / o};
}

std::vector<std::int64_t> nth_roots_of_unity(std::int64_t n, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("nth_roots_of_unity: p must be prime");
    if (n < 1) throw std::invalid_argument("nth_roots_of_unity: n must be >= 1");
    if (p == 2) return {1};
    std::int64_t g = std::gcd(n, p - 1);
    std::int64_t rp = primitive_root(p);
    // The roots are the powers of rp^{(p-1)/g}, an element of order g.
    std::int64_t gen = mod_pow(rp, static_cast<std::uint64_t>((p - 1) / g), p);
    std::vector<std::int64_t> roots;
    roots.reserve(static_cast<std::size_t>(g));
    std::int64_t cur = 1;
    for (std::int64_t l = 0; l < g; ++l) {
        roots.push_back(cur);
        cur = static_cast<std::int64_t>(
            mul_mod(static_cast<std::uint64_t>(cur), static_cast<std::uint64_t>(gen),
                    static_cast<std::uint64_t>(p)));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::int64_t power_sum_mod(std::int64_t n, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("power_sum_mod: p must be prime");
    if (n < 1) throw std::invalid_argument("power_sum_mod: n must be >= 1");
    std::uint64_t acc = 0;
    for (std::int64_t k = 1; k < p; ++k) {
        acc += static_cast<std::uint64_t>(mod_pow(k, static_cast<std::uint64_t>(n), p));
        acc %= static_cast<std::uint64_t>(p);
    }
    return static_cast<std::int64_t>(acc);
}

std::int64_t geometric_sum_mod(std::int64_t a, std::int64_t n, std::int64_t p) {
    if (n < 0) throw std::invalid_argument("geometric_sum_mod: n must be >= 0");
    std::uint64_t up = static_cast<std::uint64_t>(p);
    std::uint64_t term = 1 % up, acc = 0;
    std::uint64_t base = static_cast<std::uint64_t>(normalize(a, p));
    for (std::int64_t i = 0; i < n; ++i) {
        acc = (acc + term) % up;
        term = mul_mod(term, base, up);
    }
    return static_cast<std::int64_t>(acc);
}

}  // namespace residua
