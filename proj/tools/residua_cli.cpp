// residua command-line tool: orders, quadratic classification groups, norm
// forms, irreducibility tests, power-residue solvers, the exponent-triple
// search harness, and the self-verification suites.
//
// Exit codes: 0 success, 1 domain error (bad mathematical input), 2 usage.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "residua/arith.hpp"
#include "residua/norm_forms.hpp"
#include "residua/orders.hpp"
#include "residua/power_residues.hpp"
#include "residua/quadratic.hpp"
#include "residua/search.hpp"
#include "residua/verify.hpp"

namespace {

using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::string g_format = "text";

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void emit_json(const std::string& op, const ordered_json& inputs,
               const ordered_json& output, double elapsed_ms) {
    ordered_json j;
    j["op"] = op;
    j["inputs"] = inputs;
    j["output"] = output;
    j["elapsed_ms"] = elapsed_ms;
    std::cout << j.dump() << "\n";
}

void require_not_csv(const std::string& op) {
    if (g_format == "csv")
        throw CLI::ValidationError("--format csv only applies to `search`; `" + op +
                                   "` emits text or json");
}

std::string brace_set(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

std::string tuple_str(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

void emit_report_csv_header() { std::cout << "a,b,c,prime,outcome,x,y,z\n"; }

void emit_report_csv(const residua::SearchReport& r) {
    std::cout << r.a << "," << r.b << "," << r.c << "," << r.p << ","
              << (r.found ? "solved" : "exhausted") << ",";
    if (r.found)
        std::cout << r.x << "," << r.y << "," << r.z;
    else
        std::cout << ",,";
    std::cout << "\n";
}

std::string report_text(const residua::SearchReport& r) {
    std::ostringstream os;
    if (r.found) {
        os << r.p << " = ";
        if (r.x < 0) os << "(" << r.x << ")"; else os << r.x;
        os << "^" << r.a << " + 2*";
        if (r.y < 0) os << "(" << r.y << ")"; else os << r.y;
        os << "^" << r.b << " + 4*";
        if (r.z < 0) os << "(" << r.z << ")"; else os << r.z;
        os << "^" << r.c;
    } else {
        os << r.p << ": exhausted(" << r.bound << ")";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for multiplicative orders, residue "
                 "class groups, norm forms, and power-residue equations"};
    app.require_subcommand(1);
    app.add_option("--format", g_format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    // ---- order -------------------------------------------------------------
    std::int64_t ord_r = 0, ord_m = 0;
    auto* sc_order = app.add_subcommand("order", "multiplicative order of r mod m");
    sc_order->add_option("r", ord_r, "base")->required();
    sc_order->add_option("m", ord_m, "modulus (>= 2, coprime to r)")->required();
    sc_order->callback([&] {
        require_not_csv("order");
        auto t0 = Clock::now();
        std::int64_t k = residua::order_fast(ord_r, ord_m);
        double ms = ms_since(t0);
        if (g_format == "json")
            emit_json("order", {{"r", ord_r}, {"m", ord_m}}, k, ms);
        else
            std::cout << k << "\n";
    });

    // ---- legendre ----------------------------------------------------------
    std::int64_t leg_r = 0, leg_p = 0;
    auto* sc_leg = app.add_subcommand("legendre", "quadratic residue symbol (r/p)");
    sc_leg->add_option("r", leg_r, "integer, not divisible by p")->required();
    sc_leg->add_option("p", leg_p, "odd prime")->required();
    sc_leg->callback([&] {
        require_not_csv("legendre");
        auto t0 = Clock::now();
        int s = residua::legendre_general(leg_r, leg_p);
        double ms = ms_since(t0);
        if (g_format == "json")
            emit_json("legendre", {{"r", leg_r}, {"p", leg_p}}, s, ms);
        else
            std::cout << (s > 0 ? "+1" : "-1") << "\n";
    });

    // ---- lgroup ------------------------------------------------------------
    std::string lg_kind;
    std::int64_t lg_q = 0, lg_r = 0, lg_m = 0;
    auto* sc_lg = app.add_subcommand(
        "lgroup", "residue class groups: 4q (prime q), 4r (square-free r), half "
                  "(all half-order subgroups containing -1)");
    sc_lg->add_option("kind", lg_kind, "one of: 4q, 4r, half")
        ->required()
        ->check(CLI::IsMember({"4q", "4r", "half"}));
    sc_lg->add_option("--q", lg_q, "prime q (kind 4q)");
    sc_lg->add_option("--r", lg_r, "square-free r >= 2 (kind 4r)");
    sc_lg->add_option("--m", lg_m, "modulus m (kind half)");
    sc_lg->callback([&] {
        require_not_csv("lgroup");
        auto t0 = Clock::now();
        if (lg_kind == "4q") {
            if (lg_q == 0) throw CLI::ValidationError("lgroup 4q requires --q");
            residua::Subgroup g = residua::build_l4q(lg_q);
            double ms = ms_since(t0);
            if (g_format == "json")
                emit_json("lgroup-4q", {{"q", lg_q}},
                          {{"modulus", g.modulus}, {"elements", g.elements}}, ms);
            else
                std::cout << brace_set(g.elements) << "\n";
        } else if (lg_kind == "4r") {
            if (lg_r == 0) throw CLI::ValidationError("lgroup 4r requires --r");
            residua::Subgroup g = residua::build_l4r_squarefree(residua::factorize(lg_r));
            double ms = ms_since(t0);
            if (g_format == "json")
                emit_json("lgroup-4r", {{"r", lg_r}},
                          {{"modulus", g.modulus}, {"elements", g.elements}}, ms);
            else
                std::cout << brace_set(g.elements) << "\n";
        } else {
            if (lg_m == 0) throw CLI::ValidationError("lgroup half requires --m");
            auto subs = residua::half_order_subgroups_containing_minus1(lg_m);
            double ms = ms_since(t0);
            if (g_format == "json") {
                ordered_json arr = ordered_json::array();
                for (const auto& s : subs) arr.push_back(s.elements);
                emit_json("lgroup-half", {{"m", lg_m}},
                          {{"modulus", lg_m}, {"subgroups", arr}}, ms);
            } else {
                for (const auto& s : subs) std::cout << brace_set(s.elements) << "\n";
            }
        }
    });

    // ---- norm --------------------------------------------------------------
    std::int64_t nm_r = 0, nm_p = 0;
    std::vector<std::int64_t> nm_x, nm_poly;
    auto* sc_norm = app.add_subcommand(
        "norm", "exact norm-form determinant of a coordinate vector");
    sc_norm->add_option("--r", nm_r, "binomial modulus parameter (x^n - r)");
    sc_norm->add_option("--x", nm_x, "coordinates, comma separated")
        ->required()
        ->delimiter(',');
    sc_norm->add_option("--mod", nm_p, "reduce the determinant mod this prime");
    sc_norm
        ->add_option("--poly", nm_poly,
                     "general monic modulus, ascending coefficients incl. leading 1")
        ->delimiter(',');
    sc_norm->callback([&] {
        require_not_csv("norm");
        bool have_poly = !nm_poly.empty();
        bool have_r = sc_norm->count("--r") > 0;
        bool have_mod = sc_norm->count("--mod") > 0;
        if (have_poly && have_mod)
            throw CLI::ValidationError("--mod applies to the binomial form only");
        if (have_poly == have_r)
            throw CLI::ValidationError("pass exactly one of --r or --poly");
        auto t0 = Clock::now();
        ordered_json inputs{{"x", nm_x}};
        std::string value;
        if (have_poly) {
            inputs["poly"] = nm_poly;
            residua::BigInt d = residua::det_norm_general(nm_x, nm_poly);
            value = d.str();
        } else if (have_mod) {
            inputs["r"] = nm_r;
            inputs["mod"] = nm_p;
            value = std::to_string(residua::det_norm_mod_p(nm_x, nm_r, nm_p));
        } else {
            inputs["r"] = nm_r;
            residua::BigInt d = residua::det_norm(nm_x, nm_r);
            value = d.str();
        }
        double ms = ms_since(t0);
        if (g_format == "json")
            emit_json("norm", inputs, value, ms);
        else
            std::cout << value << "\n";
    });

    // ---- irreducible -------------------------------------------------------
    std::int64_t ir_n = 0, ir_r = 0, ir_p = 0;
    auto* sc_irr = app.add_subcommand(
        "irreducible", "test x^n - r: over F_p with --p, over the rationals without");
    sc_irr->add_option("--n", ir_n, "degree")->required();
    sc_irr->add_option("--r", ir_r, "constant")->required();
    sc_irr->add_option("--p", ir_p, "prime for the mod-p test");
    sc_irr->callback([&] {
        require_not_csv("irreducible");
        auto t0 = Clock::now();
        bool irr = sc_irr->count("--p") ? residua::is_irreducible_fp(ir_n, ir_r, ir_p)
                                        : residua::is_irreducible_q(ir_n, ir_r);
        double ms = ms_since(t0);
        ordered_json inputs{{"n", ir_n}, {"r", ir_r}};
        if (sc_irr->count("--p")) inputs["p"] = ir_p;
        if (g_format == "json")
            emit_json("irreducible", inputs, irr, ms);
        else
            std::cout << (irr ? "irreducible" : "reducible") << "\n";
    });

    // ---- solve -------------------------------------------------------------
    auto* sc_solve = app.add_subcommand("solve", "power-residue solvers");
    sc_solve->require_subcommand(1);
    std::int64_t sz_r = 0, sz_n = 0, sz_p = 0;
    auto* sc_zero = sc_solve->add_subcommand(
        "zero", "small nonzero tuple with norm divisible by p");
    sc_zero->add_option("--r", sz_r, "constant of x^n - r")->required();
    sc_zero->add_option("--n", sz_n, "degree >= 2")->required();
    sc_zero->add_option("--p", sz_p, "prime")->required();
    sc_zero->callback([&] {
        require_not_csv("solve zero");
        auto t0 = Clock::now();
        auto sol = residua::find_nontrivial_zero(sz_r, sz_n, sz_p);
        double ms = ms_since(t0);
        ordered_json inputs{{"r", sz_r}, {"n", sz_n}, {"p", sz_p}};
        if (g_format == "json") {
            ordered_json out;
            if (sol) {
                out["x"] = sol->xbar;
                out["bound_ok"] = sol->bound_ok;
            } else {
                out = nullptr;
            }
            emit_json("solve-zero", inputs, out, ms);
        } else if (sol) {
            std::cout << tuple_str(sol->xbar)
                      << (sol->bound_ok ? "" : " (outside the collision bound)") << "\n";
        } else {
            std::cout << "none\n";
        }
    });
    std::int64_t sn_r = 0, sn_p = 0;
    auto* sc_np = sc_solve->add_subcommand(
        "norm-p", "x0^2 - r*x1^2 = p for r in {-2,-1,2}");
    sc_np->add_option("--r", sn_r, "-2, -1, or 2")->required();
    sc_np->add_option("--p", sn_p, "odd prime with (r/p) = +1")->required();
    sc_np->callback([&] {
        require_not_csv("solve norm-p");
        auto t0 = Clock::now();
        auto [x0, x1] = residua::construct_norm_p(sn_r, sn_p);
        double ms = ms_since(t0);
        if (g_format == "json")
            emit_json("solve-norm-p", {{"r", sn_r}, {"p", sn_p}},
                      {{"x0", x0}, {"x1", x1}}, ms);
        else
            std::cout << sn_p << " = " << x0 << "^2 - (" << sn_r << ")*" << x1
                      << "^2\n";
    });

    // ---- search ------------------------------------------------------------
    int se_a = 0, se_b = 0, se_c = 0, se_jobs = 1;
    std::int64_t se_p = 0, se_limit = 0, se_bound = 200;
    auto* sc_search = app.add_subcommand(
        "search", "bounded search for x^a + 2y^b + 4z^c = p");
    sc_search->add_option("--a", se_a, "exponent of x (1..3)")->required();
    sc_search->add_option("--b", se_b, "exponent of y (1..3)")->required();
    sc_search->add_option("--c", se_c, "exponent of z (1..3)")->required();
    auto* opt_p = sc_search->add_option("--p", se_p, "single prime to search");
    auto* opt_limit =
        sc_search->add_option("--limit", se_limit, "scan every prime <= limit");
    opt_p->excludes(opt_limit);
    sc_search->add_option("--bound", se_bound, "coordinate bound B")
        ->capture_default_str();
    sc_search->add_option("--jobs", se_jobs, "worker threads for --limit scans")
        ->capture_default_str();
    sc_search->callback([&] {
        if (!*opt_p && !*opt_limit)
            throw CLI::ValidationError("search needs --p or --limit");
        auto t0 = Clock::now();
        if (*opt_p) {
            residua::SearchReport rep =
                residua::search_triple(se_a, se_b, se_c, se_p, se_bound);
            double ms = ms_since(t0);
            if (g_format == "json") {
                emit_json("search",
                          {{"a", se_a}, {"b", se_b}, {"c", se_c}, {"p", se_p},
                           {"bound", se_bound}},
                          ordered_json::parse(residua::report_to_json(rep)), ms);
            } else if (g_format == "csv") {
                emit_report_csv_header();
                emit_report_csv(rep);
            } else {
                std::cout << report_text(rep) << "\n";
            }
            return;
        }
        std::vector<residua::SearchReport> reps =
            residua::scan_reports(se_a, se_b, se_c, se_limit, se_bound, se_jobs);
        double ms = ms_since(t0);
        if (g_format == "json") {
            for (const auto& rep : reps)
                emit_json("search",
                          {{"a", se_a}, {"b", se_b}, {"c", se_c}, {"p", rep.p},
                           {"bound", se_bound}},
                          ordered_json::parse(residua::report_to_json(rep)), ms);
        } else if (g_format == "csv") {
            emit_report_csv_header();
            for (const auto& rep : reps) emit_report_csv(rep);
        } else {
            std::vector<std::int64_t> exhausted;
            for (const auto& rep : reps)
                if (!rep.found) exhausted.push_back(rep.p);
            std::cout << "scanned " << reps.size() << " primes <= " << se_limit
                      << " with B = " << se_bound << "; " << exhausted.size()
                      << " exhausted\n";
            for (std::size_t i = 0; i < exhausted.size(); ++i)
                std::cout << (i ? "," : "") << exhausted[i];
            if (!exhausted.empty()) std::cout << "\n";
        }
    });

    // ---- verify ------------------------------------------------------------
    std::vector<std::string> vf_names;
    bool vf_list = false;
    auto* sc_verify = app.add_subcommand("verify", "run self-verification suites");
    sc_verify->add_option("names", vf_names, "suite names (default: all)");
    sc_verify->add_flag("--list", vf_list, "list suite names and exit");
    sc_verify->callback([&] {
        require_not_csv("verify");
        if (vf_list) {
            for (const auto& n : residua::check_names()) std::cout << n << "\n";
            return;
        }
        std::vector<residua::CheckResult> results;
        if (vf_names.empty()) {
            results = residua::run_all_checks();
        } else {
            for (const auto& n : vf_names) results.push_back(residua::run_named_check(n));
        }
        bool all = true;
        for (const auto& r : results) {
            all = all && r.pass;
            if (g_format == "json") {
                emit_json("verify", {{"check", r.name}},
                          {{"pass", r.pass}, {"details", r.details}},
                          r.seconds * 1000.0);
            } else {
                std::ostringstream os;
                os.setf(std::ios::fixed);
                os.precision(2);
                os << (r.pass ? "PASS" : "FAIL") << " " << r.name << " ("
                   << r.seconds << "s)";
                if (!r.details.empty()) os << ": " << r.details;
                std::cout << os.str() << "\n";
            }
        }
        if (!all) throw std::runtime_error("verification failed");
    });

    // Let --format appear after the subcommand name too.
    for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; })) {
        s->fallthrough();
        for (CLI::App* t : s->get_subcommands([](const CLI::App*) { return true; }))
            t->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
