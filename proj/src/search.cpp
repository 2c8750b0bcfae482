#include "residua/search.hpp"

#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "residua/arith.hpp"

namespace residua {

namespace {

// Enumeration sequence for one bounded variable: even exponents take
// non-negative values only (signs are absorbed by the even power), odd
// exponents interleave signs by magnitude: 0, 1, -1, 2, -2, ...
std::vector<std::int64_t> variable_range(int exponent, std::int64_t bound) {
    std::vector<std::int64_t> seq;
    seq.push_back(0);
    for (std::int64_t v = 1; v <= bound; ++v) {
        seq.push_back(v);
        if (exponent % 2 == 1) seq.push_back(-v);
    }
    return seq;
}

__int128 ipow(std::int64_t v, int e) {
    __int128 acc = 1;
    for (int i = 0; i < e; ++i) acc *= v;
    return acc;
}

// Exact signed solution of z^c = v, honoring the even-exponent non-negative
// convention; nullopt when v is not a perfect c-th power.
std::optional<std::int64_t> solve_power(__int128 v, int c) {
    bool neg = v < 0;
    if (neg && c % 2 == 0) return std::nullopt;
    __int128 mag = neg ? -v : v;
    if (mag > static_cast<__int128>(std::numeric_limits<std::int64_t>::max())) return std::nullopt;
    auto root = exact_root(static_cast<std::int64_t>(mag), c);
    if (!root) return std::nullopt;
    return neg ? -*root : *root;
}

SearchReport verified(SearchReport r) {
    if (r.found) {
        __int128 total = ipow(r.x, r.a) + 2 * ipow(r.y, r.b) + 4 * ipow(r.z, r.c);
        if (total != r.p) throw std::logic_error("search_triple: witness failed exact re-check");
    }
    return r;
}

}  // namespace

SearchReport search_triple(int a, int b, int c, std::int64_t p, std::int64_t bound) {
    for (int e : {a, b, c})
        if (e < 1 || e > 3) throw std::invalid_argument("search_triple: exponents must be in {1,2,3}");
    if (bound < 1) throw std::invalid_argument("search_triple: bound must be >= 1");

    SearchReport rep;
    rep.a = a; rep.b = b; rep.c = c;
    rep.p = p;
    rep.bound = bound;

    if (a == 1) {
        // x absorbs the residual exactly; first (y, z) is (0, 0).
        rep.found = true;
        rep.x = p; rep.y = 0; rep.z = 0;
        return verified(rep);
    }
    if (b == 1) {
        for (std::int64_t x : variable_range(a, bound)) {
            __int128 w0 = static_cast<__int128>(p) - ipow(x, a);
            for (std::int64_t z : variable_range(c, bound)) {
                __int128 w = w0 - 4 * ipow(z, c);
                if (w % 2 != 0) continue;
                __int128 y = w / 2;
                if (y > std::numeric_limits<std::int64_t>::max() ||
                    y < std::numeric_limits<std::int64_t>::min()) continue;
                rep.found = true;
                rep.x = x; rep.y = static_cast<std::int64_t>(y); rep.z = z;
                return verified(rep);
            }
        }
        return rep;
    }
    if (c == 1) {
        for (std::int64_t x : variable_range(a, bound)) {
            __int128 w0 = static_cast<__int128>(p) - ipow(x, a);
            for (std::int64_t y : variable_range(b, bound)) {
                __int128 w = w0 - 2 * ipow(y, b);
                if (w % 4 != 0) continue;
                __int128 z = w / 4;
                if (z > std::numeric_limits<std::int64_t>::max() ||
                    z < std::numeric_limits<std::int64_t>::min()) continue;
                rep.found = true;
                rep.x = x; rep.y = y; rep.z = static_cast<std::int64_t>(z);
                return verified(rep);
            }
        }
        return rep;
    }
    // No linear variable: solve z exactly and keep it inside the bound.
    for (std::int64_t x : variable_range(a, bound)) {
        __int128 w0 = static_cast<__int128>(p) - ipow(x, a);
        for (std::int64_t y : variable_range(b, bound)) {
            __int128 w = w0 - 2 * ipow(y, b);
            if (w % 4 != 0) continue;
            auto z = solve_power(w / 4, c);
            if (!z || *z > bound || *z < -bound) continue;
            rep.found = true;
            rep.x = x; rep.y = y; rep.z = *z;
            return verified(rep);
        }
    }
    return rep;
}

std::vector<SearchReport> scan_reports(int a, int b, int c, std::int64_t prime_limit,
                                       std::int64_t bound, int jobs) {
    std::vector<std::int64_t> primes = primes_up_to(prime_limit);
    std::vector<SearchReport> out(primes.size());
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        for (std::size_t i = 0; i < primes.size(); ++i)
            out[i] = search_triple(a, b, c, primes[i], bound);
        return out;
    }
    // Strided partition: workers write disjoint slots, so the merged result
    // is position-determined and independent of scheduling.
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
            for (std::size_t i = static_cast<std::size_t>(w); i < primes.size();
                 i += static_cast<std::size_t>(jobs))
                out[i] = search_triple(a, b, c, primes[i], bound);
        });
    }
    for (auto& t : workers) t.join();
    return out;
}

TableRow scan_table(int a, int b, int c, std::int64_t prime_limit, std::int64_t bound,
                    int jobs) {
    TableRow row;
    row.a = a; row.b = b; row.c = c;
    row.prime_limit = prime_limit;
    row.bound = bound;
    for (const SearchReport& r : scan_reports(a, b, c, prime_limit, bound, jobs))
        if (!r.found) row.exhausted.push_back(r.p);
    return row;
}

std::string report_to_json(const SearchReport& r) {
    nlohmann::ordered_json j;
    j["a"] = r.a;
    j["b"] = r.b;
    j["c"] = r.c;
    j["p"] = r.p;
    j["bound"] = r.bound;
    if (r.found) {
        j["outcome"] = "found";
        j["x"] = r.x;
        j["y"] = r.y;
        j["z"] = r.z;
    } else {
        j["outcome"] = "exhausted";
    }
    return j.dump();
}

SearchReport report_from_json(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    SearchReport r;
    r.a = j.at("a").get<int>();
    r.b = j.at("b").get<int>();
    r.c = j.at("c").get<int>();
    r.p = j.at("p").get<std::int64_t>();
    r.bound = j.at("bound").get<std::int64_t>();
    r.found = j.at("outcome").get<std::string>() == "found";
    if (r.found) {
        r.x = j.at("x").get<std::int64_t>();
        r.y = j.at("y").get<std::int64_t>();
        r.z = j.at("z").get<std::int64_t>();
    }
    return r;
}

}  // namespace residua
