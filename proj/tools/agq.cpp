// agq: build approximate Gaussian quadratures, sweep their errors, replay the
// integration tables, fit exponential sums and dump Hankel singular values.
//
// Exit codes: 0 success, 1 usage or input error, 2 numerical failure.

#include "agq/bench.hpp"
#include "agq/errors.hpp"
#include "agq/expsum.hpp"
#include "agq/hankel.hpp"
#include "agq/reference.hpp"
#include "agq/rule.hpp"
#include "agq/serialize.hpp"
#include "agq/svd.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

using namespace agq;

constexpr int kUsageError = 1;
constexpr int kNumericalError = 2;

// Raised for bad flag combinations detected after parsing.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

class Output
{
public:
    explicit Output(const std::string& path)
    {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                throw UsageError("cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

void write_plot_script(const std::string& path, const std::string& csv, const std::string& title,
                       const std::string& xlabel, const std::string& ylabel, const std::string& using_cols,
                       bool logscale)
{
    if (path.empty())
        return;
    if (csv.empty())
        throw UsageError("--plot needs --out so the script has a data file to read");
    std::ofstream gp(path);
    if (!gp)
        throw UsageError("cannot write '" + path + "'");
    gp << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set title '" << title << "'\n"
       << "set xlabel '" << xlabel << "'\n"
       << "set ylabel '" << ylabel << "'\n";
    if (logscale)
        gp << "set logscale y\nset format y '10^{%L}'\n";
    gp << "plot " << using_cols << '\n';
    (void)csv;
}

// build -----------------------------------------------------------------

struct BuildArgs
{
    std::string measure;
    int order = -1;
    std::string eps = "1e-30";
    std::optional<std::string> delta_seed;
    std::optional<int> d_max;
    std::optional<int> nodes;
    std::string prune_tol = "0";
    std::string out;
};

void run_build(const BuildArgs& a)
{
    const int moments_needed = a.order + (a.d_max ? *a.d_max : a.order) + 2;
    const auto moments = measure_from_name(a.measure, moments_needed);
    RuleOptions opt;
    opt.quasi.epsilon = parse_decimal(a.eps);
    if (a.delta_seed)
        opt.quasi.delta_seed = parse_decimal(*a.delta_seed);
    opt.quasi.d_max = a.d_max;
    opt.quasi.nodes = a.nodes;
    opt.prune_tol = parse_decimal(a.prune_tol);

    const auto built = build_rule(moments, a.order, opt);
    const auto doc = rule_to_json(built.rule, built.certificate);
    std::ostream& log = a.out.empty() ? std::cerr : std::cout;
    if (a.out.empty())
        std::cout << doc.dump(2) << '\n';
    else
        write_json_file(a.out, doc);
    log << "measure " << a.measure << ", N = " << built.rule.N << ", d = " << built.rule.d
        << " (" << built.rule.size() << " nodes";
    if (!built.rule.pruned.empty())
        log << ", " << built.rule.pruned.size() << " pruned";
    log << ")\n"
        << "residual_inf " << built.rule.epsilon.str(6, std::ios::scientific) << '\n'
        << "residual_2   " << built.rule.residual_2.str(6, std::ios::scientific) << '\n';
}

// sweep -----------------------------------------------------------------

struct SweepArgs
{
    std::string rule;
    std::string family = "monomial";
    int nmax = 700;
    std::string out;
    std::string plot;
};

void run_sweep(const SweepArgs& a)
{
    const auto doc = read_json_file(a.rule);
    PrecisionGuard guard(json_precision(doc));
    const auto stored = rule_from_json(doc);
    const auto& rule = stored.rule;
    const MomentKind want = a.family == "trig" ? MomentKind::trigonometric : MomentKind::power;
    if (rule.kind != want)
        throw UsageError("rule kind is " + to_string(rule.kind) + " but --family is " + a.family);
    MomentSequence exact;
    try {
        exact = measure_from_name(rule.descriptor, a.nmax);
    } catch (const ParseError&) {
        throw UsageError("no closed-form moments for measure '" + rule.descriptor + "'");
    }
    const auto err = monomial_errors(rule, exact, a.nmax);
    const int certified = rule.N + rule.d;

    Output out(a.out);
    auto& os = out.stream();
    os << "n,measured_error,bound\n";
    for (int n = 0; n <= a.nmax; ++n) {
        os << n << ',' << to_decimal(err[n]) << ',';
        if (n <= certified)
            os << to_decimal(stored.certificate.monomial_bound(n));
        else
            os << "NA";
        os << '\n';
    }
    write_plot_script(a.plot, a.out, "quadrature error, " + rule.descriptor, "n", "absolute error",
                      "'" + a.out + "' using 1:2 with lines, '' using 1:3 with lines", true);
}

// tables ----------------------------------------------------------------

struct TablesArgs
{
    int table = 2;
    std::string out;
    bool timing = false;
};

void run_tables(const TablesArgs& a)
{
    const auto rows = run_table(a.table);
    Output out(a.out);
    write_bench_csv(out.stream(), rows, a.timing);
}

// expsum ----------------------------------------------------------------

struct ExpsumArgs
{
    std::string samples;
    std::string demo;
    std::string eps = "1e-12";
    int terms_max = 60;
    std::optional<int> terms;
    std::string prune_tol = "0";
    std::string out;
    std::string residuals;
    std::string plot;
};

SampleGrid bessel_grid(int nu)
{
    // J_nu(100 pi x) on [0, 1], 801 samples.
    const Real w = 100 * pi();
    return sample_function([&](const Real& x) { return Complex(bessel_j(nu, w * x)); }, Real(0),
                           Real(1), 800);
}

void run_expsum(const ExpsumArgs& a)
{
    if (a.samples.empty() == a.demo.empty())
        throw UsageError("give exactly one of --samples and --demo");

    ExpSumApprox approx;
    SampleGrid grid;
    if (a.demo == "dirichlet") {
        const auto demo = dirichlet_kernel_demo(200, a.terms.value_or(80), 950);
        approx = demo.full;
        grid = sample_function([](const Real& x) { return Complex(dirichlet_kernel(200, x)); },
                               Real(0), Real(2), 2000);
    } else {
        if (a.demo == "bessel0")
            grid = bessel_grid(0);
        else if (a.demo == "bessel25")
            grid = bessel_grid(25);
        else if (!a.demo.empty())
            throw UsageError("unknown demo '" + a.demo + "'");
        else
            grid = load_samples_csv(a.samples);

        ExpSumOptions opt;
        opt.epsilon = parse_decimal(a.eps);
        opt.d_max = std::min(a.terms_max - 1, grid.M - 3);
        opt.prune_tol = parse_decimal(a.prune_tol);
        if (!a.demo.empty())
            opt.terms = a.terms.value_or(40);
        else
            opt.terms = a.terms;
        approx = build_expsum(grid, opt);
        if (!a.demo.empty())
            approx.descriptor = a.demo;
    }

    const auto doc = expsum_to_json(approx);
    if (a.out.empty())
        std::cout << doc.dump(2) << '\n';
    else
        write_json_file(a.out, doc);

    const auto report = residual_report(approx, grid);
    if (!a.residuals.empty()) {
        Output res(a.residuals);
        write_residual_csv(res.stream(), report);
    }
    write_plot_script(a.plot, a.residuals, "exponential sum error, " + approx.descriptor, "x",
                      "absolute error", "'" + a.residuals + "' using 1:2 with lines", true);

    std::ostream& log = a.out.empty() ? std::cerr : std::cout;
    log << approx.size() << " terms, M = " << approx.M << ", internal N = " << approx.N << '\n'
        << "max residual on grid " << report.max_residual.str(6, std::ios::scientific) << '\n';
    for (const auto& w : approx.warnings)
        std::cerr << "warning: " << w << '\n';
}

// svd -------------------------------------------------------------------

struct SvdArgs
{
    std::string measure;
    int size = 250;
    std::string out;
    std::string plot;
};

void run_svd(const SvdArgs& a)
{
    const auto moments = measure_from_name(a.measure, 2 * a.size - 2);
    if (moments.is_zero())
        throw ContractError("svd: zero measure (all moments vanish)");
    const auto H = hankel_matrix(moments, a.size);
    const auto s = singular_values<Complex>(H);
    Output out(a.out);
    auto& os = out.stream();
    os << "index,sigma\n";
    for (Index i = 0; i < s.size(); ++i)
        os << i + 1 << ',' << to_decimal(s[i]) << '\n';
    write_plot_script(a.plot, a.out, "singular values of the Hankel matrix, " + a.measure, "index",
                      "sigma", "'" + a.out + "' using 1:2 with points", true);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Approximate Gaussian quadrature and exponential sums"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file mirroring the flags; flags win");

    unsigned digits = kDefaultDigits;
    app.add_option("-p,--precision", digits, "working precision in decimal digits")
        ->envname("AGQ_PRECISION")
        ->check(CLI::Range(10u, 100000u));

    std::function<void()> action;

    BuildArgs build;
    auto* b = app.add_subcommand("build", "construct a quadrature rule and its certificate");
    b->add_option("--measure", build.measure,
                  "lebesgue_pm1 | lebesgue_01 | chebyshev1 | logweight_01 | trig_lebesgue_pm1 | "
                  "atoms:x:w,...")
        ->required();
    b->add_option("-N,--order", build.order, "quasiorthogonality order N")
        ->required()
        ->check(CLI::NonNegativeNumber);
    b->add_option("--eps", build.eps, "stopping residual epsilon");
    b->add_option("--delta-seed", build.delta_seed, "rank threshold seeding the degree (default eps)");
    b->add_option("--d-max", build.d_max, "largest degree d tried (default N-1)");
    b->add_option("--nodes", build.nodes, "fixed node count instead of the epsilon search");
    b->add_option("--prune-tol", build.prune_tol, "drop nodes with |w| < tol max|w|");
    b->add_option("-o,--out", build.out, "rule JSON (default stdout)");
    b->callback([&] { action = [&] { run_build(build); }; });

    SweepArgs sweep;
    auto* s = app.add_subcommand("sweep", "monomial error sweep of a stored rule");
    s->add_option("--rule", sweep.rule, "rule JSON")->required()->check(CLI::ExistingFile);
    s->add_option("--family", sweep.family, "monomial | trig")
        ->check(CLI::IsMember({"monomial", "trig"}));
    s->add_option("--nmax", sweep.nmax, "largest n")->check(CLI::NonNegativeNumber);
    s->add_option("-o,--out", sweep.out, "CSV (default stdout)");
    s->add_option("--plot", sweep.plot, "also write a gnuplot script");
    s->callback([&] { action = [&] { run_sweep(sweep); }; });

    TablesArgs tables;
    auto* t = app.add_subcommand("tables", "replay an integration table");
    t->add_option("--table", tables.table, "2 | 3 | 4")->check(CLI::IsMember({2, 3, 4}));
    t->add_option("-o,--out", tables.out, "CSV (default stdout)");
    t->add_flag("--timing", tables.timing, "add a runtime column");
    t->callback([&] { action = [&] { run_tables(tables); }; });

    ExpsumArgs expsum;
    auto* e = app.add_subcommand("expsum", "exponential-sum approximation of samples");
    e->add_option("--samples", expsum.samples, "sample CSV")->check(CLI::ExistingFile);
    e->add_option("--demo", expsum.demo, "bessel0 | bessel25 | dirichlet")
        ->check(CLI::IsMember({"bessel0", "bessel25", "dirichlet"}));
    e->add_option("--eps", expsum.eps, "stopping residual epsilon");
    e->add_option("--terms-max", expsum.terms_max, "largest term count tried")
        ->check(CLI::PositiveNumber);
    e->add_option("--terms", expsum.terms, "fixed term count")->check(CLI::PositiveNumber);
    e->add_option("--prune-tol", expsum.prune_tol, "drop terms with |w| < tol max|w|");
    e->add_option("-o,--out", expsum.out, "approximation JSON (default stdout)");
    e->add_option("--residuals", expsum.residuals, "per-sample residual CSV");
    e->add_option("--plot", expsum.plot, "also write a gnuplot script for the residuals");
    e->callback([&] { action = [&] { run_expsum(expsum); }; });

    SvdArgs svd;
    auto* v = app.add_subcommand("svd", "singular values of a square Hankel moment matrix");
    v->add_option("--measure", svd.measure, "measure name")->required();
    v->add_option("--size", svd.size, "matrix dimension")->check(CLI::PositiveNumber);
    v->add_option("-o,--out", svd.out, "CSV (default stdout)");
    v->add_option("--plot", svd.plot, "also write a gnuplot script");
    v->callback([&] { action = [&] { run_svd(svd); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        PrecisionGuard guard(digits);
        action();
    } catch (const UsageError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kUsageError;
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what();
        if (err.line() > 0)
            std::cerr << " (line " << err.line() << ')';
        std::cerr << '\n';
        return kUsageError;
    } catch (const DegreeExhaustedError& err) {
        std::cerr << "error: " << err.what() << '\n';
        for (const auto& at : err.attempts())
            std::cerr << "  d = " << at.degree << ": residual " << at.residual << '\n';
        return kNumericalError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return kNumericalError;
    }
    return 0;
}
