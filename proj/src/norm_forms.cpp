#include "residua/norm_forms.hpp"

#include <stdexcept>

#include "residua/arith.hpp"

namespace residua {

namespace {

// Bareiss fraction-free elimination; exact over the integers.
BigInt bareiss_det(std::vector<BigInt> a, std::size_t n) {
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row * n + k] == 0) ++swap_row;
            if (swap_row == n) return 0;  // whole pivot column zero
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap_row * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
            }
            a[i * n + k] = 0;
        }
        prev = a[k * n + k];
    }
    return sign * a[n * n - 1];
}

void require_monic(const std::vector<BigInt>& q, const char* who) {
    if (q.size() < 2) throw std::invalid_argument(std::string(who) + ": modulus degree must be >= 1");
    if (q.back() != 1) throw std::invalid_argument(std::string(who) + ": modulus must be monic");
}

std::vector<BigInt> to_big(const std::vector<std::int64_t>& v) {
    return std::vector<BigInt>(v.begin(), v.end());
}

// Columns of the multiplication matrix for z = sum x_i u^i over the monic
// modulus q: column 0 is xbar, and each next column multiplies by u, folding
// the overflowing top coefficient back through q.
std::vector<BigInt> matrix_entries(const std::vector<BigInt>& xbar, const std::vector<BigInt>& q) {
    std::size_t n = xbar.size();
    std::vector<BigInt> entries(n * n);
    std::vector<BigInt> col = xbar;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) entries[i * n + j] = col[i];
        if (j + 1 == n) break;
        BigInt top = col[n - 1];
        for (std::size_t i = n - 1; i > 0; --i) col[i] = col[i - 1] - top * q[i];
        col[0] = -top * q[0];
    }
    return entries;
}

}  // namespace

PolyMod make_poly(std::vector<std::int64_t> coeffs, std::vector<std::int64_t> modulus) {
    PolyMod p{to_big(modulus), to_big(coeffs)};
    require_monic(p.modulus, "make_poly");
    if (p.coeffs.size() != p.modulus.size() - 1)
        throw std::invalid_argument("make_poly: coefficient count must equal modulus degree");
    return p;
}

NormMatrix build_matrix(const std::vector<std::int64_t>& xbar, std::int64_t r) {
    if (xbar.empty()) throw std::invalid_argument("build_matrix: dimension must be >= 1");
    std::size_t n = xbar.size();
    // Modulus x^n - r.
    std::vector<BigInt> q(n + 1, 0);
    q[0] = -BigInt(r);
    q[n] = 1;
    return {n, q, matrix_entries(to_big(xbar), q)};
}

BigInt det_norm(const std::vector<std::int64_t>& xbar, std::int64_t r) {
    NormMatrix m = build_matrix(xbar, r);
    return bareiss_det(m.entries, m.n);
}

std::int64_t det_norm_mod_p(const std::vector<std::int64_t>& xbar, std::int64_t r,
                            std::int64_t p) {
    if (xbar.empty()) throw std::invalid_argument("det_norm_mod_p: dimension must be >= 1");
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("det_norm_mod_p: p must be prime");
    std::size_t n = xbar.size();
    std::uint64_t up = static_cast<std::uint64_t>(p);
    auto red = [&](std::int64_t v) {
        return static_cast<std::uint64_t>(((v % p) + p) % p);
    };
    // Matrix of Definition pattern reduced mod p.
    std::vector<std::uint64_t> a(n * n);
    std::uint64_t rp = red(r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i * n + j] = (i >= j) ? red(xbar[i - j]) : mul_mod(rp, red(xbar[n + i - j]), up);

    // Gaussian elimination over F_p.
    std::uint64_t det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv * n + k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            det = (det == 0) ? 0 : up - det;  // row swap flips the sign
        }
        std::uint64_t pivot = a[k * n + k];
        det = mul_mod(det, pivot, up);
        std::uint64_t inv = static_cast<std::uint64_t>(
            mod_pow(static_cast<std::int64_t>(pivot), static_cast<std::uint64_t>(p - 2), p));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i * n + k] == 0) continue;
            std::uint64_t f = mul_mod(a[i * n + k], inv, up);
            for (std::size_t j = k; j < n; ++j) {
                std::uint64_t sub = mul_mod(f, a[k * n + j], up);
                a[i * n + j] = (a[i * n + j] + up - sub) % up;
            }
        }
    }
    return static_cast<std::int64_t>(det);
}

NormMatrix adjugate(const NormMatrix& M) {
    std::size_t n = M.n;
    NormMatrix out{n, M.modulus, std::vector<BigInt>(n * n)};
    if (n == 1) {
        out.entries[0] = 1;  // A * adj(A) = det(A) * I forces adj = (1) in dimension 1
        return out;
    }
    std::vector<BigInt> minor((n - 1) * (n - 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t mi = 0;
            for (std::size_t a = 0; a < n; ++a) {
                if (a == i) continue;
                std::size_t mj = 0;
                for (std::size_t b = 0; b < n; ++b) {
                    if (b == j) continue;
                    minor[mi * (n - 1) + mj] = M.at(a, b);
                    ++mj;
                }
                ++mi;
            }
            BigInt c = bareiss_det(minor, n - 1);
            out.at(j, i) = ((i + j) % 2 == 0) ? c : -c;  // cofactor transpose
        }
    }
    return out;
}

PolyMod poly_mul_mod(const PolyMod& a, const PolyMod& b) {
    if (a.modulus != b.modulus) throw std::invalid_argument("poly_mul_mod: modulus mismatch");
    require_monic(a.modulus, "poly_mul_mod");
    std::size_t n = a.modulus.size() - 1;
    std::vector<BigInt> prod(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) prod[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    // Division by the monic modulus, top degree down.
    for (std::size_t d = 2 * n - 2; d >= n && d < prod.size(); --d) {
        BigInt c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (std::size_t k = 0; k < n; ++k) prod[d - n + k] -= c * a.modulus[k];
    }
    PolyMod out{a.modulus, std::vector<BigInt>(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n))};
    return out;
}

NormMatrix build_matrix_general(const std::vector<std::int64_t>& xbar,
                                const std::vector<std::int64_t>& q) {
    std::vector<BigInt> qb = to_big(q);
    require_monic(qb, "build_matrix_general");
    if (xbar.size() != q.size() - 1)
        throw std::invalid_argument("build_matrix_general: vector length must equal modulus degree");
    return {xbar.size(), qb, matrix_entries(to_big(xbar), qb)};
}

BigInt det_norm_general(const std::vector<std::int64_t>& xbar, const std::vector<std::int64_t>& q) {
    NormMatrix m = build_matrix_general(xbar, q);
    return bareiss_det(m.entries, m.n);
}

BigInt det_exact(const NormMatrix& M) { return bareiss_det(M.entries, M.n); }

}  // namespace residua
