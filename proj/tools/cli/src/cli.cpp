#include "qzeta_cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "qzeta/errors.hpp"

namespace qzeta::cli {

namespace {

int exit_code_for(const Error& e) {
    if (dynamic_cast<const BudgetExhausted*>(&e)) return kBudgetExhausted;
    if (dynamic_cast<const VerificationError*>(&e)) return kVerificationFailed;
    return kPrecondition;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--q", o.q, "q as an exact rational p/r")->capture_default_str();
    sub->add_option("--digits", o.digits, "decimal digits of accuracy")->capture_default_str()->check(CLI::Range(1, 100000));
    sub->add_option("--max-terms", o.max_terms, "hard cap on summed terms")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--bits", o.bits, "round running sums to multiples of 2^-bits (0 = exact)")->capture_default_str();
    sub->add_option("--format", o.format, "report format")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.out, "write the report to this file");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact q-zeta values, accelerated series and q-WZ certificates", "qzeta"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "sum one series to the requested accuracy");
    compute->add_option("series", o.name,
                        "zeta-q | genfunc-lhs | zeta3-alt | bbb-t1 | bbb-t2 | z3-v1 | z3-v2 | z3-amdeberhan")
        ->required();
    compute->add_option("--a", o.a, "generating parameter a, |a| < 1");
    compute->add_option("--s", o.s, "zeta argument s >= 2");
    add_common(compute, o);

    auto* verify = app.add_subcommand("verify", "check a certificate or identity");
    verify->add_option("target", o.name,
                       "bbb-pair | zeta3-pair-v1 | zeta3-pair-v2 | genfunc-coeffs | prop-i | prop-ii | prop-s | "
                       "uncorrected-forms")
        ->required();
    verify->add_option("--a", o.a, "generating parameter a");
    verify->add_option("--s", o.s, "single fold for prop-s (default: 1, 2 and 3)");
    verify->add_option("--grid", o.grid, "telescoping grid size")->capture_default_str()->check(CLI::Range(1, 1000));
    verify->add_option("--K", o.K, "last coefficient index for genfunc-coeffs")->capture_default_str();
    verify->add_option("--pair", o.pair, "pair for prop-*: bbb | zeta3-v1 | zeta3-v2")->capture_default_str();
    add_common(verify, o);

    auto* bench = app.add_subcommand("bench", "terms to tolerance, naive against accelerated");
    bench->add_option("--a", o.a, "generating parameter a for the bbb rows");
    add_common(bench, o);

    auto* solve = app.add_subcommand("solve", "ansatz solver for a built-in kernel");
    solve->add_option("--kernel", o.name, "bbb | zeta3")->required();
    solve->add_option("--a", o.a, "parameter a of the bbb kernel");
    solve->add_option("--L1", o.L1, "degree of the F cofactor in q^k");
    solve->add_option("--L2", o.L2, "degree of the G cofactor in q^k");
    solve->add_option("--init", o.init, "comma-separated a_i(0)");
    solve->add_option("--nmax", o.nmax, "number of solver steps")->capture_default_str()->check(CLI::Range(0, 1000));
    solve->add_option("--grid", o.grid, "k-range of the residual check")->capture_default_str()->check(CLI::Range(1, 1000));
    solve->add_flag("--plain-mate", o.plain_mate, "zeta3: do not divide the mate by q^k(1-q^{2n+k+2})");
    add_common(solve, o);

    Report report;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        report.command = "usage";
        report.ok = false;
        report.error = {{"kind", "usage"}, {"message", e.what()}, {"exit_code", kPrecondition}};
        err << "qzeta: " << e.what() << "\n";
        report.write(out, "json");
        return kPrecondition;
    }

    CLI::App* chosen = app.get_subcommands().front();
    report.command = chosen->get_name();
    report.params["q"] = o.q;
    report.params["digits"] = o.digits;
    report.params["max_terms"] = o.max_terms;
    report.params["bits"] = o.bits;

    int code = kOk;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (chosen == compute) cmd_compute(o, report);
        else if (chosen == verify) cmd_verify(o, report);
        else if (chosen == bench) cmd_bench(o, report);
        else cmd_solve(o, report);
        if (!report.ok) {
            code = kVerificationFailed;
            report.error = {{"kind", "verification"}, {"message", "one or more checks failed"}, {"exit_code", code}};
        }
    } catch (const Error& e) {
        code = exit_code_for(e);
        report.ok = false;
        report.error = {{"kind", e.kind()}, {"message", e.what()}, {"exit_code", code}};
        if (const auto* inc = dynamic_cast<const InconsistentSystem*>(&e)) report.error["step"] = inc->step();
        err << "qzeta: " << e.kind() << ": " << e.what() << "\n";
    } catch (const std::exception& e) {
        code = kPrecondition;
        report.ok = false;
        report.error = {{"kind", "internal"}, {"message", e.what()}, {"exit_code", code}};
        err << "qzeta: " << e.what() << "\n";
    }
    report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (o.out.empty()) {
        report.write(out, o.format);
    } else {
        std::ofstream f(o.out);
        if (!f) {
            err << "qzeta: cannot open " << o.out << " for writing\n";
            return kPrecondition;
        }
        report.write(f, o.format);
    }
    return code;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"qzeta"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qzeta::cli
