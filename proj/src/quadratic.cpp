#include "residua/quadratic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace residua {

namespace {

std::int64_t normalize(std::int64_t r, std::int64_t m) { return ((r % m) + m) % m; }

void require_odd_prime(std::int64_t p, const char* who) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
}

// Nonzero a mod q is a square, by the Euler criterion (q odd prime).
bool is_square_mod(std::int64_t a, std::int64_t q) {
    return mod_pow(a, static_cast<std::uint64_t>((q - 1) / 2), q) == 1;
}

}  // namespace

bool Subgroup::contains(std::int64_t x) const {
    return std::binary_search(elements.begin(), elements.end(), normalize(x, modulus));
}

ResidueClassGroup units_group(std::int64_t m) {
    if (m < 2) throw std::invalid_argument("units_group: modulus must be >= 2");
    ResidueClassGroup g{m, {}};
    for (std::int64_t x = 1; x < m; ++x)
        if (std::gcd(x, m) == 1) g.elements.push_back(x);
    return g;
}

int legendre(std::int64_t r, std::int64_t p) {
    require_odd_prime(p, "legendre");
    std::int64_t rp = normalize(r, p);
    if (rp == 0) throw std::invalid_argument("legendre: p divides r, symbol undefined");
    return is_square_mod(rp, p) ? +1 : -1;
}

Subgroup build_lstar(std::int64_t p) {
    require_odd_prime(p, "build_lstar");
    Subgroup s{p, {}};
    for (std::int64_t a = 1; a < p; ++a)
        if (is_square_mod(a, p)) s.elements.push_back(a);
    return s;
}

Subgroup build_l4q(std::int64_t q) {
    if (!is_prime(q)) throw std::invalid_argument("build_l4q: q must be prime");
    if (q == 2) return {8, {1, 7}};  // the +-1 classes mod 8
    std::int64_t m = 4 * q;
    Subgroup s{m, {}};
    for (std::int64_t c = 1; c < m; c += 2) {  // units of U_{4q} are odd and coprime to q
        std::int64_t cq = c % q;
        if (cq == 0) continue;
        bool square = is_square_mod(cq, q);
        bool member;
        if (q % 4 == 1) {
            member = square;
        } else {  // q = 3 (mod 4): the mod-4 component must compensate
            member = (c % 4 == 1) ? square : !square;
        }
        if (member) s.elements.push_back(c);
    }
    return s;
}

bool classify_prime(std::int64_t q, std::int64_t p) {
    require_odd_prime(p, "classify_prime");
    if (p == q) throw std::invalid_argument("classify_prime: p and q must be distinct");
    return build_l4q(q).contains(p);
}

std::vector<Subgroup> half_order_subgroups_containing_minus1(std::int64_t m) {
    if (m < 3) throw std::invalid_argument("half_order_subgroups: modulus must be >= 3");
    std::int64_t phi = euler_phi(m);
    if (phi % 2 != 0)
        throw std::invalid_argument("half_order_subgroups: group order must be even");
    if (phi > (1 << 16))
        throw std::invalid_argument("half_order_subgroups: group too large to enumerate");

    // Decompose U_m into independent cyclic factors and record, for every
    // unit, the parity of its discrete log along each factor generator.
    // An index-2 subgroup is the kernel of a character sending a nonempty
    // subset of the even-order generators to -1, so parities are all we need.
    struct FactorComponent {
        std::int64_t modulus;                  // p^e component of m
        std::vector<std::int64_t> gen_orders;  // orders of this factor's generators
        std::vector<std::vector<std::uint8_t>> parity;  // parity[value] per generator
    };
    std::vector<FactorComponent> comps;

    for (const auto& [p, e] : factorize(m).factors) {
        std::int64_t pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        FactorComponent fc;
        fc.modulus = pe;
        fc.parity.assign(static_cast<std::size_t>(pe), {});
        if (p == 2) {
            if (e == 1) continue;  // U_2 trivial
            if (e == 2) {
                // U_4 = <3>, order 2.
                fc.gen_orders = {2};
                fc.parity[1] = {0};
                fc.parity[3] = {1};
            } else {
                // U_{2^e} = <-1> x <5>, orders 2 and 2^{e-2}.
                std::int64_t half = pe / 4;
                fc.gen_orders = {2, half};
                for (std::int64_t s = 0; s <= 1; ++s) {
                    std::int64_t base = (s == 0) ? 1 : pe - 1;
                    std::int64_t v = base;
                    for (std::int64_t t = 0; t < half; ++t) {
                        fc.parity[static_cast<std::size_t>(v)] = {
                            static_cast<std::uint8_t>(s), static_cast<std::uint8_t>(t & 1)};
                        v = static_cast<std::int64_t>(
                            mul_mod(static_cast<std::uint64_t>(v), 5,
                                    static_cast<std::uint64_t>(pe)));
                    }
                }
            }
        } else {
            // U_{p^e} is cyclic; pick a generator valid for every power.
            std::int64_t g = primitive_root(p);
            if (e >= 2 && mod_pow(g, static_cast<std::uint64_t>(p - 1), p * p) == 1) g += p;
            std::int64_t ord = (p - 1) * (pe / p);
            fc.gen_orders = {ord};
            std::int64_t v = 1;
            for (std::int64_t k = 0; k < ord; ++k) {
                fc.parity[static_cast<std::size_t>(v)] = {static_cast<std::uint8_t>(k & 1)};
                v = static_cast<std::int64_t>(
                    mul_mod(static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(g),
                            static_cast<std::uint64_t>(pe)));
            }
        }
        if (!fc.gen_orders.empty()) comps.push_back(std::move(fc));
    }

    // Positions of generators with even order: only those can map to -1.
    std::vector<std::pair<std::size_t, std::size_t>> even_gens;  // (component, generator)
    for (std::size_t ci = 0; ci < comps.size(); ++ci)
        for (std::size_t gi = 0; gi < comps[ci].gen_orders.size(); ++gi)
            if (comps[ci].gen_orders[gi] % 2 == 0) even_gens.push_back({ci, gi});

    ResidueClassGroup u = units_group(m);
    std::vector<Subgroup> out;
    for (std::uint64_t mask = 1; mask < (1ULL << even_gens.size()); ++mask) {
        Subgroup h{m, {}};
        for (std::int64_t x : u.elements) {
            int dot = 0;
            for (std::size_t b = 0; b < even_gens.size(); ++b) {
                if (!(mask & (1ULL << b))) continue;
                auto [ci, gi] = even_gens[b];
                dot ^= comps[ci].parity[static_cast<std::size_t>(x % comps[ci].modulus)][gi];
            }
            if (dot == 0) h.elements.push_back(x);
        }
        if (h.contains(m - 1)) out.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(),
              [](const Subgroup& a, const Subgroup& b) { return a.elements < b.elements; });
    return out;
}

Subgroup build_l4r_squarefree(const Factorization& r_fact) {
    std::int64_t r = r_fact.value;
    if (r < 2) throw std::invalid_argument("build_l4r_squarefree: r must be >= 2");
    for (const auto& [p, e] : r_fact.factors)
        if (e != 1) throw std::invalid_argument("build_l4r_squarefree: r must be square-free");

    std::vector<Subgroup> per_prime;
    for (const auto& [q, e] : r_fact.factors) per_prime.push_back(build_l4q(q));

    std::int64_t m = 4 * r;
    Subgroup s{m, {}};
    for (std::int64_t c = 1; c < m; ++c) {
        if (std::gcd(c, m) != 1) continue;
        int outside = 0;
        for (const auto& lq : per_prime)
            if (!lq.contains(c % lq.modulus)) ++outside;
        if (outside % 2 == 0) s.elements.push_back(c);
    }
    return s;
}

int legendre_general(std::int64_t r, std::int64_t p) {
    require_odd_prime(p, "legendre_general");
    if (r == 0) throw std::invalid_argument("legendre_general: r must be nonzero");
    std::int64_t a = r < 0 ? -r : r;
    if (a % p == 0) throw std::invalid_argument("legendre_general: p divides r, symbol undefined");
    int sign = 1;
    if (r < 0 && (p - 1) / 2 % 2 == 1) sign = -sign;  // (-1/p) = -1 iff p = 3 (mod 4)
    for (const auto& [q, e] : factorize(a).factors) {
        if (e % 2 == 0) continue;  // square part contributes +1
        if (q == p) continue;      // unreachable given the gcd guard
        if (!classify_prime(q, p)) sign = -sign;
    }
    return sign;
}

int legendre_via_reciprocity(std::int64_t q, std::int64_t p) {
    require_odd_prime(p, "legendre_via_reciprocity");
    require_odd_prime(q, "legendre_via_reciprocity");
    if (p == q) throw std::invalid_argument("legendre_via_reciprocity: p and q must be distinct");
    int flip = ((q - 1) / 2 % 2 == 1 && (p - 1) / 2 % 2 == 1) ? -1 : +1;
    return flip * legendre(p, q);
}

}  // namespace residua
