// Command-line front end: parses surface-syntax expressions, runs the
// engine, and prints JSON (default) or text reports.

#include "bp/coproduct.hpp"
#include "bp/parser.hpp"
#include "bp/render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    int prime = 0;
    std::uint64_t fuel = bp::kDefaultFuel;
    bool text = false;
    int jobs = 1;
};

std::uint64_t default_fuel_from_env()
{
    if (const char* env = std::getenv("BP_ENGINE_FUEL")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return v;
        std::cerr << "warning: ignoring malformed BP_ENGINE_FUEL value\n";
    }
    return bp::kDefaultFuel;
}

ordered_json failure_to_json(const bp::CheckFailure& f, const bp::Prime& p)
{
    ordered_json j;
    j["relation"] = f.relation;
    if (f.a >= 0)
        j["a"] = f.a;
    if (f.b >= 0)
        j["b"] = f.b;
    j["parities"] = f.parities;
    j["residual"] = bp::tensor_terms_to_json(f.residual, p);
    j["detail"] = f.detail;
    return j;
}

ordered_json report_to_json(const bp::CheckReport& r, const bp::Prime& p)
{
    ordered_json j;
    j["scheme"] = r.scheme;
    j["family"] = r.family;
    j["range"] = r.range;
    ordered_json failures = ordered_json::array();
    for (const auto& f : r.failures)
        failures.push_back(failure_to_json(f, p));
    j["failures"] = std::move(failures);
    j["skipped"] = r.skipped;
    j["trace"] = r.trace;
    j["verdict"] = r.verdict;
    return j;
}

void print_report_text(const bp::CheckReport& r)
{
    std::cout << "[" << r.verdict << "] scheme=" << r.scheme << " family=" << r.family
              << " range=" << r.range << "\n";
    for (const auto& f : r.failures) {
        std::cout << "  failure: " << f.relation;
        if (f.a >= 0)
            std::cout << " a=" << f.a;
        if (f.b >= 0)
            std::cout << " b=" << f.b;
        if (f.parities != "-")
            std::cout << " [" << f.parities << "]";
        std::cout << " " << f.detail << "\n";
    }
    for (const auto& s : r.skipped)
        std::cout << "  skipped: " << s << "\n";
    for (const auto& t : r.trace)
        std::cout << "  " << t << "\n";
}

int report_exit(const bp::CheckReport& r)
{
    return r.passed() ? kExitPass : kExitCheckFailed;
}

bp::CoproductScheme make_scheme(const std::string& name, const bp::Prime& p, int parity_beta,
                                int parity_p0)
{
    if (name == "singer")
        return bp::CoproductScheme::singer(p);
    return bp::CoproductScheme::geometric(parity_beta, parity_p0);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"bp: normal forms, bases and coproduct checks for the mod-p algebra "
                 "of Steenrod operations on Hopf-algebra cohomology (odd primes)"};
    app.require_subcommand(1);

    Options opt;
    opt.fuel = default_fuel_from_env();

    std::string expr1, expr2;
    long long basis_n = 0;
    int basis_s = 0;
    std::string scheme_name = "singer";
    int parity_beta = 0, parity_p0 = 0;
    long long max_bound = 6;
    long long counit_n_max = 12;
    int s_max = 2;
    bool beta_free = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-p,--prime", opt.prime, "odd prime modulus")->required();
        sub->add_option("--fuel", opt.fuel, "rewrite step budget")
            ->default_val(static_cast<std::uint64_t>(opt.fuel));
        auto* json_flag = sub->add_flag("--json", "machine-readable output (default)");
        sub->add_flag("--text", opt.text, "human-readable output")->excludes(json_flag);
        sub->add_option("--jobs", opt.jobs, "worker threads for relation sweeps")->default_val(1);
    };
    auto add_scheme = [&](CLI::App* sub) {
        sub->add_option("--scheme", scheme_name, "coproduct scheme")
            ->check(CLI::IsMember({"singer", "geometric"}))
            ->default_val("singer");
        sub->add_option("--parity-beta", parity_beta, "first-degree parity of b (geometric)")
            ->check(CLI::Range(0, 1));
        sub->add_option("--parity-p0", parity_p0, "first-degree parity of P0 (geometric)")
            ->check(CLI::Range(0, 1));
    };

    CLI::App* cmd_normalize = app.add_subcommand("normalize", "rewrite an expression to the admissible basis");
    cmd_normalize->add_option("expr", expr1, "expression")->required();
    add_common(cmd_normalize);

    CLI::App* cmd_mul = app.add_subcommand("mul", "multiply two expressions and normalize");
    cmd_mul->add_option("lhs", expr1, "left factor")->required();
    cmd_mul->add_option("rhs", expr2, "right factor")->required();
    add_common(cmd_mul);

    CLI::App* cmd_basis = app.add_subcommand("basis", "enumerate the admissible basis in one bidegree");
    cmd_basis->add_option("-n", basis_n, "internal degree")->required();
    cmd_basis->add_option("-s", basis_s, "coalgebra index")->required();
    add_common(cmd_basis);

    CLI::App* cmd_coprod = app.add_subcommand("coprod", "apply a coproduct scheme to an expression");
    cmd_coprod->add_option("expr", expr1, "expression")->required();
    add_common(cmd_coprod);
    add_scheme(cmd_coprod);

    CLI::App* cmd_rel = app.add_subcommand("check-relations", "sweep the defining relations under a scheme");
    add_common(cmd_rel);
    add_scheme(cmd_rel);
    cmd_rel->add_option("--max", max_bound, "bound on both relation parameters")->default_val(6);
    cmd_rel->add_flag("--beta-free", beta_free, "restrict to the pure-power relation family");

    CLI::App* cmd_check = app.add_subcommand(
        "check-coproduct", "full structure check: relations, counit, coassociativity");
    add_common(cmd_check);
    add_scheme(cmd_check);
    cmd_check->add_option("--max", max_bound, "bound on both relation parameters")->default_val(6);
    cmd_check->add_option("--nmax", counit_n_max, "internal degree bound for counit/coassociativity")
        ->default_val(12);
    cmd_check->add_option("--smax", s_max, "coalgebra index bound for counit/coassociativity")
        ->default_val(2);

    CLI::App* cmd_counit = app.add_subcommand("check-counit", "verify the counit identities on basis words");
    add_common(cmd_counit);
    cmd_counit->add_option("--max", counit_n_max, "internal degree bound")->default_val(12);
    cmd_counit->add_option("--smax", s_max, "coalgebra index bound")->default_val(2);

    CLI::App* cmd_coassoc = app.add_subcommand("check-coassoc", "verify coassociativity on basis words");
    add_common(cmd_coassoc);
    cmd_coassoc->add_option("--max", counit_n_max, "internal degree bound")->default_val(12);
    cmd_coassoc->add_option("--smax", s_max, "coalgebra index bound")->default_val(2);

    CLI::App* cmd_obstruction = app.add_subcommand(
        "obstruction", "reproduce the failure of the geometric Bockstein coproduct");
    add_common(cmd_obstruction);

    CLI::App* cmd_cp = app.add_subcommand(
        "cp-check", "verify that psi(b P0)^2 vanishes in the P/bP subalgebra");
    add_common(cmd_cp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        const bp::Prime p(opt.prime);
        const bool json = !opt.text;

        if (app.got_subcommand(cmd_normalize) || app.got_subcommand(cmd_mul)) {
            bp::FuelBudget budget{opt.fuel};
            bp::Element value;
            if (app.got_subcommand(cmd_normalize)) {
                value = bp::normalize(bp::parse_expression(expr1, p), p, budget);
            } else {
                value = bp::multiply(bp::parse_expression(expr1, p), bp::parse_expression(expr2, p),
                                     p, budget);
            }
            if (json) {
                std::cout << bp::element_to_json(value, p).dump() << "\n";
            } else {
                std::cout << bp::to_text(value, p) << "\n";
                std::cout << "steps: " << (opt.fuel - budget.remaining) << "\n";
            }
            return kExitPass;
        }

        if (app.got_subcommand(cmd_basis)) {
            const auto basis = bp::admissible_basis(p, basis_n, basis_s, bp::Grading::standard(p));
            if (json) {
                ordered_json j = ordered_json::array();
                for (const auto& m : basis)
                    j.push_back(bp::to_text(m));
                std::cout << j.dump() << "\n";
            } else {
                for (const auto& m : basis)
                    std::cout << bp::to_text(m) << "\n";
            }
            return kExitPass;
        }

        if (app.got_subcommand(cmd_coprod)) {
            const auto scheme = make_scheme(scheme_name, p, parity_beta, parity_p0);
            bp::FuelBudget budget{opt.fuel};
            const auto value = bp::coproduct(bp::parse_expression(expr1, p), scheme, p, budget);
            if (json) {
                ordered_json j;
                j["p"] = p.value();
                j["scheme"] = scheme.name;
                j["terms"] = bp::tensor_terms_to_json(value, p);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << bp::to_text(value, p) << "\n";
            }
            return kExitPass;
        }

        if (app.got_subcommand(cmd_rel)) {
            const auto scheme = make_scheme(scheme_name, p, parity_beta, parity_p0);
            const auto report =
                bp::check_relations(scheme, p, max_bound, max_bound, beta_free, opt.jobs, opt.fuel);
            if (json) {
                ordered_json j = report_to_json(report, p);
                j["p"] = p.value();
                std::cout << j.dump() << "\n";
            } else {
                print_report_text(report);
            }
            return report_exit(report);
        }

        if (app.got_subcommand(cmd_check)) {
            const auto scheme = make_scheme(scheme_name, p, parity_beta, parity_p0);
            std::vector<bp::CheckReport> reports;
            reports.push_back(bp::check_relations(scheme, p, max_bound, max_bound, false, opt.jobs,
                                                  opt.fuel));
            if (scheme.grading.is_standard()) {
                for (int s = 0; s <= s_max; ++s)
                    reports.push_back(bp::check_counit(scheme, p, counit_n_max, s, opt.fuel));
                reports.push_back(
                    bp::check_coassociativity(scheme, p, counit_n_max, s_max, opt.fuel));
            }
            bool all_passed = true;
            for (const auto& r : reports)
                all_passed = all_passed && r.passed();
            if (json) {
                ordered_json j;
                j["p"] = p.value();
                j["scheme"] = scheme.name;
                ordered_json checks = ordered_json::array();
                for (const auto& r : reports)
                    checks.push_back(report_to_json(r, p));
                j["checks"] = std::move(checks);
                j["verdict"] = all_passed ? "pass" : "fail";
                std::cout << j.dump() << "\n";
            } else {
                for (const auto& r : reports)
                    print_report_text(r);
                std::cout << (all_passed ? "pass" : "fail") << "\n";
            }
            return all_passed ? kExitPass : kExitCheckFailed;
        }

        if (app.got_subcommand(cmd_counit) || app.got_subcommand(cmd_coassoc)) {
            const auto scheme = bp::CoproductScheme::singer(p);
            std::vector<bp::CheckReport> reports;
            if (app.got_subcommand(cmd_counit)) {
                for (int s = 0; s <= s_max; ++s)
                    reports.push_back(bp::check_counit(scheme, p, counit_n_max, s, opt.fuel));
            } else {
                reports.push_back(
                    bp::check_coassociativity(scheme, p, counit_n_max, s_max, opt.fuel));
            }
            bool all_passed = true;
            for (const auto& r : reports)
                all_passed = all_passed && r.passed();
            if (json) {
                ordered_json j;
                j["p"] = p.value();
                ordered_json checks = ordered_json::array();
                for (const auto& r : reports)
                    checks.push_back(report_to_json(r, p));
                j["checks"] = std::move(checks);
                j["verdict"] = all_passed ? "pass" : "fail";
                std::cout << j.dump() << "\n";
            } else {
                for (const auto& r : reports)
                    print_report_text(r);
            }
            return all_passed ? kExitPass : kExitCheckFailed;
        }

        if (app.got_subcommand(cmd_obstruction)) {
            const auto report = bp::obstruction_report(p, opt.fuel);
            const bool reproduced = report.verdict == "obstruction reproduced";
            if (json) {
                ordered_json j = report_to_json(report, p);
                j["p"] = p.value();
                std::cout << j.dump() << "\n";
            } else {
                print_report_text(report);
            }
            return reproduced ? kExitPass : kExitCheckFailed;
        }

        if (app.got_subcommand(cmd_cp)) {
            const auto report = bp::cp_square_check(p, opt.fuel);
            if (json) {
                ordered_json j = report_to_json(report, p);
                j["p"] = p.value();
                std::cout << j.dump() << "\n";
            } else {
                print_report_text(report);
            }
            return report_exit(report);
        }
    } catch (const bp::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const bp::FuelExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const bp::UndefinedDegreeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }

    return kExitUsage;
}
