#include "residua/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace residua {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::int64_t mod_pow(std::int64_t r, std::uint64_t e, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("mod_pow: modulus must be >= 1");
    std::uint64_t mm = static_cast<std::uint64_t>(m);
    std::uint64_t base = static_cast<std::uint64_t>(((r % m) + m) % m);
    std::uint64_t acc = 1 % mm;
    while (e) {
        if (e & 1) acc = mul_mod(acc, base, mm);
        base = mul_mod(base, base, mm);
        e >>= 1;
    }
    return static_cast<std::int64_t>(acc);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    // n odd, > 37.  Deterministic for all 64-bit inputs with this base set.
    std::uint64_t d = static_cast<std::uint64_t>(n - 1);
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    std::uint64_t un = static_cast<std::uint64_t>(n);
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = static_cast<std::uint64_t>(mod_pow(static_cast<std::int64_t>(a), d, n));
        if (x == 1 || x == un - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, un);
            if (x == un - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

// Smallest-prime-factor table for small inputs; immutable after one-time
// construction, so concurrent readers are safe.
constexpr std::int64_t kSpfLimit = 1 << 20;

const std::vector<std::int32_t>& spf_table() {
    static const std::vector<std::int32_t> table = [] {
        std::vector<std::int32_t> t(kSpfLimit, 0);
        for (std::int64_t i = 2; i < kSpfLimit; ++i) {
            if (t[static_cast<std::size_t>(i)] != 0) continue;
            for (std::int64_t j = i; j < kSpfLimit; j += i)
                if (t[static_cast<std::size_t>(j)] == 0)
                    t[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
        }
        return t;
    }();
    return table;
}

}  // namespace

Factorization factorize(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
    Factorization out;
    out.value = n;
    if (n < kSpfLimit) {
        const auto& spf = spf_table();
        while (n > 1) {
            std::int64_t p = spf[static_cast<std::size_t>(n)];
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.factors.push_back({p, e});
        }
        return out;
    }
    auto strip = [&](std::int64_t p) {
        if (n % p != 0) return;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.factors.push_back({p, e});
    };
    strip(2);
    strip(3);
    strip(5);
    // 8-spoke wheel mod 30.
    static constexpr int step[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    std::int64_t d = 7;
    int i = 0;
    while (d <= n / d) {
        if (n % d == 0) {
            strip(d);
            if (n > 1 && is_prime(n)) break;  // prime cofactor, done
        }
        d += step[i];
        i = (i + 1) & 7;
    }
    if (n > 1) out.factors.push_back({n, 1});
    return out;
}

std::int64_t euler_phi(const Factorization& f) {
    std::int64_t phi = 1;
    for (const auto& [p, e] : f.factors) {
        phi *= p - 1;
        for (int i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

std::int64_t euler_phi(std::int64_t n) { return euler_phi(factorize(n)); }

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(a, b);
}

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
    if (b == 0) return {a < 0 ? -a : a, a < 0 ? -1 : 1, 0};
    std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b; a = b; b = t;
        t = x0 - q * x1; x0 = x1; x1 = t;
        t = y0 - q * y1; y0 = y1; y1 = t;
    }
    if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
    return {a, x0, y0};
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("inv_mod: modulus must be >= 1");
    auto [g, x, y] = ext_gcd(((a % m) + m) % m, m);
    if (g != 1) throw std::invalid_argument("inv_mod: arguments are not coprime");
    return ((x % m) + m) % m;
}

std::pair<std::int64_t, std::int64_t> crt_coprime(const CongruenceSystem& sys) {
    std::int64_t x = 0, M = 1;
    for (const auto& [a, n] : sys) {
        if (n < 1) throw std::invalid_argument("crt_coprime: modulus must be >= 1");
        if (std::gcd(M, n) != 1)
            throw std::invalid_argument("crt_coprime: moduli are not pairwise coprime");
        // Merge x (mod M) with a (mod n).
        std::int64_t an = ((a % n) + n) % n;
        std::int64_t diff = ((an - x) % n + n) % n;
        std::int64_t t = static_cast<std::int64_t>(
            mul_mod(static_cast<std::uint64_t>(diff),
                    static_cast<std::uint64_t>(inv_mod(M % n, n)), static_cast<std::uint64_t>(n)));
        x = x + M * t;
        M *= n;
    }
    return {x, M};
}

std::optional<std::pair<std::int64_t, std::int64_t>> crt_general(const CongruenceSystem& sys) {
    std::int64_t x = 0, M = 1;
    for (const auto& [a, n] : sys) {
        if (n < 1) throw std::invalid_argument("crt_general: modulus must be >= 1");
        std::int64_t an = ((a % n) + n) % n;
        std::int64_t g = std::gcd(M, n);
        if ((an - x) % g != 0) return std::nullopt;  // inconsistent pair
        std::int64_t n_g = n / g;
        // lcm(M, n) = M * n/g; guard 64-bit overflow before committing.
        if (M > std::numeric_limits<std::int64_t>::max() / n_g)
            throw std::overflow_error("crt_general: lcm exceeds 64 bits");
        std::int64_t L = M * n_g;
        // x' = x + M * t with t = ((a - x)/g) * inv(M/g) mod n/g; M/g and n/g
        // are coprime because g strips the full shared content of M and n.
        std::int64_t diff = (an - x) / g;
        std::int64_t t = ((diff % n_g) + n_g) % n_g;
        t = static_cast<std::int64_t>(
            mul_mod(static_cast<std::uint64_t>(t),
                    static_cast<std::uint64_t>(inv_mod(M / g, n_g)),
                    static_cast<std::uint64_t>(n_g)));
        x = x + M * t;
        x %= L;
        if (x < 0) x += L;
        M = L;
    }
    return std::make_pair(x, M);
}

std::int64_t primitive_root(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("primitive_root: argument must be prime");
    if (p == 2) return 1;  // the unit group mod 2 is trivial
    Factorization f = factorize(p - 1);
    for (std::int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& [q, e] : f.factors) {
            if (mod_pow(g, static_cast<std::uint64_t>((p - 1) / q), p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found below p");  // unreachable for prime p
}

std::int64_t iroot_floor(std::int64_t x, int n) {
    if (x < 0) throw std::invalid_argument("iroot_floor: argument must be >= 0");
    if (n < 1) throw std::invalid_argument("iroot_floor: order must be >= 1");
    if (n == 1 || x < 2) return x;
    // pow(r) <= x test without overflow.
    auto fits = [&](std::int64_t r) {
        unsigned __int128 acc = 1;
        for (int i = 0; i < n; ++i) {
            acc *= static_cast<unsigned __int128>(r);
            if (acc > static_cast<unsigned __int128>(x)) return false;
        }
        return true;
    };
    // Double to bracket the root, then binary search.
    std::int64_t hi = 1;
    while (hi <= x / 2 && fits(2 * hi)) hi *= 2;
    std::int64_t lo = hi;
    hi = (hi > x / 2) ? x : 2 * hi;
    while (lo < hi) {  // invariant: fits(lo), answer in [lo, hi]
        std::int64_t mid = lo + (hi - lo + 1) / 2;
        if (fits(mid)) lo = mid; else hi = mid - 1;
    }
    return lo;
}

std::optional<std::int64_t> exact_root(std::int64_t x, int n) {
    if (x < 0) throw std::invalid_argument("exact_root: argument must be >= 0");
    std::int64_t r = iroot_floor(x, n);
    unsigned __int128 acc = 1;
    for (int i = 0; i < n; ++i) acc *= static_cast<unsigned __int128>(r);
    if (acc == static_cast<unsigned __int128>(x)) return r;
    return std::nullopt;
}

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
    std::vector<std::int64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

}  // namespace residua
