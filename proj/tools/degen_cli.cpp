// Command-line front end: Stirling tables, Bell/Fubini polynomials, the
// identity-check suite, and the Dobinski-style numeric evaluation.
//
// Exit codes: 0 success / all checks pass, 1 check or tolerance failure,
// 2 usage error.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "degen/degen.hpp"
#include "degen/serialize.hpp"

namespace {

using namespace degen;

enum class Format { json, csv, pretty };

const std::map<std::string, Format> kFormatNames{
    {"json", Format::json}, {"csv", Format::csv}, {"pretty", Format::pretty}};

std::optional<Rational> parse_lambda(const std::string& s) {
    if (s.empty() || s == "symbolic")
        return std::nullopt;
    return Rational::from_string(s);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Descending-power display for a plain rational polynomial in x.
std::string pretty_in_x(const Polynomial<Rational>& p) {
    std::vector<LPoly> lifted;
    lifted.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs())
        lifted.emplace_back(c);
    return pretty(XPoly(std::move(lifted)));
}

int run_table(int n_max, int r, const std::optional<Rational>& lambda, Format fmt) {
    if (fmt == Format::json) {
        std::cout << stirling_table_json(n_max, r, lambda).dump() << "\n";
        return 0;
    }
    StirlingTable table(n_max, r);
    for (int n = 0; n <= n_max; ++n) {
        std::string line = fmt == Format::pretty ? ("n=" + std::to_string(n) + ":") : "";
        for (int k = 0; k <= n; ++k) {
            LPoly v = table.value(n, k);
            std::string cell = lambda ? v(*lambda).to_string() : pretty(v);
            if (fmt == Format::csv) {
                if (!lambda)
                    cell = csv_quote(cell);
                line += (k ? "," : "") + cell;
            } else {
                line += (k ? " | " : " ") + cell;
            }
        }
        std::cout << line << "\n";
    }
    return 0;
}

int run_poly(const std::string& kind, int p, int r, const std::optional<Rational>& lambda,
             const std::optional<Rational>& x, Format fmt) {
    XPoly poly = kind == "bell" ? bell_r(p, r) : fubini_r(p, r);
    if (lambda && x) {
        std::string v = poly_eval(poly, *x, *lambda).to_string();
        std::cout << (fmt == Format::json ? Json(v).dump() : v) << "\n";
        return 0;
    }
    if (lambda) {
        Polynomial<Rational> px = eval_lambda(poly, *lambda);
        if (fmt == Format::json)
            std::cout << to_json(px).dump() << "\n";
        else if (fmt == Format::csv)
            std::cout << csv_quote(pretty_in_x(px)) << "\n";
        else
            std::cout << pretty_in_x(px) << "\n";
        return 0;
    }
    if (x) {
        LPoly v = eval_x(poly, *x);
        if (fmt == Format::json)
            std::cout << to_json(v).dump() << "\n";
        else if (fmt == Format::csv)
            std::cout << csv_quote(pretty(v)) << "\n";
        else
            std::cout << pretty(v) << "\n";
        return 0;
    }
    if (fmt == Format::json) {
        std::cout << to_json(poly).dump() << "\n";
    } else if (fmt == Format::csv) {
        std::string line;
        for (std::size_t k = 0; k < poly.coeffs().size(); ++k)
            line += (k ? "," : "") + csv_quote(pretty(poly.coeffs()[k]));
        if (poly.is_zero())
            line = csv_quote("0");
        std::cout << line << "\n";
    } else {
        std::cout << pretty(poly) << "\n";
    }
    return 0;
}

std::string params_string(const CheckReport& rep) {
    std::string s;
    for (const auto& [key, value] : rep.params)
        s += (s.empty() ? "" : " ") + key + "=" + std::to_string(value);
    return s;
}

int run_checks(const std::vector<std::string>& ids, bool all, const SuiteConfig& cfg,
               Format fmt) {
    std::vector<std::string> valid = check_ids();
    for (const std::string& id : ids)
        if (std::find(valid.begin(), valid.end(), id) == valid.end()) {
            std::string msg = "unknown check id '" + id + "'; valid ids:";
            for (const std::string& v : valid)
                msg += " " + v;
            throw argument_error(msg);
        }
    if (!all && ids.empty())
        throw argument_error("no checks selected; pass check ids or --all");

    std::set<std::string> wanted(ids.begin(), ids.end());
    std::vector<CheckReport> reports;
    for (const std::string& id : valid) {
        if (!all && wanted.count(id) == 0)
            continue;
        std::vector<CheckReport> part = run_check(id, cfg);
        reports.insert(reports.end(), part.begin(), part.end());
    }
    bool ok = all_pass(reports);

    if (fmt == Format::json) {
        Json arr = Json::array();
        for (const CheckReport& rep : reports)
            arr.push_back(to_json(rep));
        std::cout << Json{{"reports", arr}, {"all_pass", ok}}.dump() << "\n";
    } else if (fmt == Format::csv) {
        std::cout << "id,params,lambda,pass,mismatch_power,expected,actual,error\n";
        for (const CheckReport& rep : reports) {
            std::string row = rep.id + "," + csv_quote(params_string(rep)) + "," +
                              rep.lambda_mode + "," + (rep.pass ? "true" : "false") + ",";
            if (rep.first_mismatch)
                row += std::to_string(rep.first_mismatch->power) + "," +
                       csv_quote(pretty(rep.first_mismatch->expected)) + "," +
                       csv_quote(pretty(rep.first_mismatch->actual));
            else
                row += ",,";
            row += ",";
            if (rep.error)
                row += csv_quote(*rep.error);
            std::cout << row << "\n";
        }
    } else {
        std::size_t passed = 0;
        for (const CheckReport& rep : reports) {
            if (rep.pass) {
                ++passed;
                std::cout << "[PASS] " << rep.id << " " << params_string(rep) << "\n";
                continue;
            }
            std::cout << "[FAIL] " << rep.id << " " << params_string(rep);
            if (rep.first_mismatch)
                std::cout << " first mismatch at power " << rep.first_mismatch->power
                          << ": expected " << pretty(rep.first_mismatch->expected) << ", got "
                          << pretty(rep.first_mismatch->actual);
            if (rep.error)
                std::cout << " error: " << *rep.error;
            std::cout << "\n";
        }
        std::cout << passed << "/" << reports.size() << " checks passed\n";
    }
    return ok ? 0 : 1;
}

int run_dobinski(int p, int r, const Rational& x, const Rational& lambda, int terms, double tol,
                 Format fmt) {
    Rational exact = poly_eval(bell_r(p, r), x, lambda);
    double approx = 0;
    try {
        approx = dobinski_float(p, r, x, lambda, terms, tol);
    } catch (const precision_error& e) {
        std::cerr << "error: " << e.what() << " (--terms " << terms << " is too small)\n";
        return 1;
    }
    double diff = approx - exact.to_double();
    bool ok = std::abs(diff) < tol;
    if (fmt == Format::json) {
        std::cout << Json{{"float", approx},
                          {"exact", exact.to_string()},
                          {"exact_float", exact.to_double()},
                          {"diff", diff},
                          {"tol", tol},
                          {"pass", ok}}
                         .dump()
                  << "\n";
    } else {
        std::cout << "partial-sum value: " << format_double(approx) << "\n";
        std::cout << "exact value:       " << exact.to_string() << " ("
                  << format_double(exact.to_double()) << ")\n";
        std::cout << "difference:        " << format_double(diff) << "\n";
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for degenerate r-Stirling, r-Bell and Fubini polynomials"};
    app.require_subcommand(1);
    int exit_code = 0;

    // table
    auto* table = app.add_subcommand("table", "Print a Stirling triangle");
    std::string table_kind;
    int table_n_max = 0;
    int table_r = 0;
    std::string table_lambda;
    Format table_fmt = Format::pretty;
    table->add_option("kind", table_kind, "Table kind")
        ->required()
        ->check(CLI::IsMember({"stirling"}));
    table->add_option("--n-max", table_n_max, "Largest row index")->required();
    table->add_option("--r", table_r, "r-shift")->required();
    table->add_option("--lambda", table_lambda, "Numeric λ (default: symbolic)");
    table->add_option("--format", table_fmt, "Output format")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
    table->callback([&] {
        if (table_n_max < 0 || table_r < 0)
            throw argument_error("table: n-max and r must be nonnegative");
        exit_code = run_table(table_n_max, table_r, parse_lambda(table_lambda), table_fmt);
    });

    // poly
    auto* poly = app.add_subcommand("poly", "Print a Bell or Fubini polynomial");
    std::string poly_kind;
    int poly_p = 0;
    int poly_r = 0;
    std::string poly_lambda;
    std::string poly_x;
    Format poly_fmt = Format::pretty;
    poly->add_option("kind", poly_kind, "Polynomial family")
        ->required()
        ->check(CLI::IsMember({"bell", "fubini"}));
    poly->add_option("--p", poly_p, "Degree index")->required();
    poly->add_option("--r", poly_r, "r-shift")->required();
    poly->add_option("--lambda", poly_lambda, "Numeric λ (default: symbolic)");
    poly->add_option("--x", poly_x, "Numeric x; with --lambda, evaluates exactly");
    poly->add_option("--format", poly_fmt, "Output format")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
    poly->callback([&] {
        if (poly_p < 0 || poly_r < 0)
            throw argument_error("poly: p and r must be nonnegative");
        std::optional<Rational> x;
        if (!poly_x.empty())
            x = Rational::from_string(poly_x);
        exit_code = run_poly(poly_kind, poly_p, poly_r, parse_lambda(poly_lambda), x, poly_fmt);
    });

    // check
    auto* check = app.add_subcommand("check", "Run identity checks");
    std::vector<std::string> check_ids_arg;
    bool check_all = false;
    SuiteConfig cfg;
    Format check_fmt = Format::pretty;
    check->add_option("ids", check_ids_arg, "Check ids to run");
    check->add_flag("--all", check_all, "Run every registered check");
    check->add_option("--order", cfg.order, "Truncation order (default 12)");
    check->add_option("--p-max", cfg.p_max, "Largest p");
    check->add_option("--r-max", cfg.r_max, "Largest r");
    check->add_option("--n-max", cfg.n_max, "Largest n");
    check->add_option("--m-max", cfg.m_max, "Largest m");
    check->add_option("--k-max", cfg.k_max, "Largest k (stirling_egf)");
    check->add_option("--format", check_fmt, "Output format")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
    check->callback([&] { exit_code = run_checks(check_ids_arg, check_all, cfg, check_fmt); });

    // dobinski
    auto* dob = app.add_subcommand("dobinski",
                                   "Compare the weighted exponential partial sum with the "
                                   "exact Bell polynomial value");
    int dob_p = 0;
    int dob_r = 0;
    std::string dob_x;
    std::string dob_lambda;
    int dob_terms = 50;
    double dob_tol = 1e-9;
    Format dob_fmt = Format::pretty;
    dob->add_option("--p", dob_p, "Degree index")->required();
    dob->add_option("--r", dob_r, "r-shift")->required();
    dob->add_option("--x", dob_x, "Evaluation point (rational, > 0)")->required();
    dob->add_option("--lambda", dob_lambda, "Numeric λ (rational)")->required();
    dob->add_option("--terms", dob_terms, "Highest term index in the partial sum");
    dob->add_option("--tol", dob_tol, "Agreement tolerance");
    dob->add_option("--format", dob_fmt, "Output format")
        ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case));
    dob->callback([&] {
        if (dob_p < 0 || dob_r < 0)
            throw argument_error("dobinski: p and r must be nonnegative");
        Rational x = Rational::from_string(dob_x);
        Rational lam = Rational::from_string(dob_lambda);
        if (!(x > Rational(0)))
            throw argument_error("dobinski: x must be positive");
        if (!(dob_tol > 0))
            throw argument_error("dobinski: tol must be positive");
        exit_code = run_dobinski(dob_p, dob_r, x, lam, dob_terms, dob_tol, dob_fmt);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
