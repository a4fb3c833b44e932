// Acceptance suite: one PASS/FAIL line per criterion.
//
//   agq_acceptance          run every criterion
//   agq_acceptance 3 6      run the listed ones
//
// Exit status is the number of failed criteria (capped at 125).

#include "agq/bench.hpp"
#include "agq/expsum.hpp"
#include "agq/hankel.hpp"
#include "agq/reference.hpp"
#include "agq/rule.hpp"
#include "agq/svd.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace {

using namespace agq;

struct Outcome
{
    bool pass = false;
    std::string detail;
};

std::string sci(const Real& x)
{
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << static_cast<double>(x);
    return s.str();
}

std::string sci(double x) { return sci(Real(x)); }

// Arithmetic floor for degrees the certificate calls exact (bound 0): the
// quadrature sum itself carries rounding of order 10^{-(P-25)} times the size
// of its terms.
Real rounding_floor(const QuadratureRule& rule, const Complex& exact, int n)
{
    Real scale = std::max<Real>(Real(1), abs_of(exact));
    Real terms(0);
    for (std::size_t i = 0; i < rule.size(); ++i)
        terms += abs_of(rule.weights[i]) * pow(abs_of(rule.nodes[i]), n);
    return tolerance(25) * std::max<Real>(scale, terms);
}

struct BoundCheck
{
    int violations = 0;
    int checked = 0;
    Real worst_ratio{0}; // max measured / (bound + floor)
};

BoundCheck check_bounds(const BuiltRule& built, const MomentSequence& exact)
{
    const auto& rule = built.rule;
    const int top = rule.N + rule.d;
    const auto err = monomial_errors(rule, exact, top);
    BoundCheck c;
    for (int n = 0; n <= top; ++n) {
        const Real allowed = built.certificate.monomial_bound(n) + rounding_floor(rule, exact[n], n);
        ++c.checked;
        if (err[n] > allowed)
            ++c.violations;
        c.worst_ratio = std::max<Real>(c.worst_ratio, Real(err[n] / allowed));
    }
    return c;
}

BuiltRule rule_with_nodes(const std::string& measure, int N, int nodes)
{
    RuleOptions opt;
    opt.quasi.nodes = nodes;
    return build_rule(measure_from_name(measure, N + nodes + 1), N, opt);
}

// 1 ---------------------------------------------------------------------

Outcome hankel_spectrum()
{
    const int size = 250; // calibrated against sigma_1 = 2.8031
    const auto s = singular_values<Complex>(hankel_matrix(lebesgue_pm1(2 * size - 2), size));
    const std::map<int, double> plotted = {
        {1, 2.8031}, {5, 0.3619}, {10, 8.788e-3}, {20, 1.552e-6}, {30, 9.17e-11}};
    Outcome o{true, "size 250:"};
    for (const auto& [i, ref] : plotted) {
        const double got = static_cast<double>(s[i - 1]);
        const double rel = std::abs(got - ref) / ref;
        o.pass = o.pass && rel <= 0.10;
        o.detail += " s" + std::to_string(i) + "=" + sci(got) + " (rel " + sci(rel) + ")";
    }
    return o;
}

// 2 ---------------------------------------------------------------------

Outcome sweep350()
{
    const auto built = rule_with_nodes("lebesgue_pm1", 350, 20);
    const auto err = monomial_errors(built.rule, lebesgue_pm1(350), 350);
    Real worst(0);
    int at = 0;
    for (int n = 0; n <= 350; ++n)
        if (err[n] > worst) {
            worst = err[n];
            at = n;
        }
    return {worst <= Real("1e-4"),
            "max_n<=350 error " + sci(worst) + " at n=" + std::to_string(at) + " (limit 1e-4)"};
}

// 3, 4, 5 ---------------------------------------------------------------

const TableRow& find_row(const TableSpec& spec, int nodes)
{
    for (const auto& r : spec.rows)
        if (r.nodes == nodes)
            return r;
    throw std::logic_error("table row missing");
}

// AGQ within x10 of the published value (with a floor), GL within x2 either way.
Outcome table_rows(int table, const std::vector<int>& nodes, double floor)
{
    const auto spec = table_spec(table);
    Outcome o{true, ""};
    for (int n : nodes) {
        const auto& row = find_row(spec, n);
        const auto r = run_table_row(spec, row);
        const double agq = static_cast<double>(r.agq_error);
        const double gl = static_cast<double>(r.classical_error);
        const bool agq_ok = agq <= 10 * std::max(row.published_agq, floor);
        const bool gl_ok = gl <= 2 * row.published_classical && gl >= row.published_classical / 2;
        o.pass = o.pass && agq_ok && gl_ok;
        o.detail += " (" + std::to_string(n) + "," + std::to_string(row.N) + ") agq " + sci(agq) +
                    " vs " + sci(row.published_agq) + ", gl " + sci(gl) + " vs " +
                    sci(row.published_classical) + ";";
    }
    return o;
}

Outcome table4()
{
    const auto spec = table_spec(4);
    Outcome o{true, ""};
    for (int n : {10, 12}) {
        const auto& row = find_row(spec, n);
        const auto r = run_table_row(spec, row);
        const double agq = static_cast<double>(r.agq_error);
        const double gl = static_cast<double>(r.classical_error);
        const double ref = std::max(row.published_agq, 1e-14);
        const bool mutual = agq <= 2 * gl && gl <= 2 * agq;
        const bool vs_published = agq <= 10 * ref && agq >= ref / 10 && gl <= 10 * ref && gl >= ref / 10;
        // Below the floor only the upper side is meaningful.
        const bool floored = row.published_agq < 1e-14 && agq <= 10 * ref && gl <= 10 * ref;
        o.pass = o.pass && mutual && (vs_published || floored);
        o.detail += " (" + std::to_string(n) + "," + std::to_string(row.N) + ") agq " + sci(agq) +
                    ", gl " + sci(gl) + ", published " + sci(row.published_agq) + ";";
    }
    return o;
}

// 6 ---------------------------------------------------------------------

Outcome certified_bounds()
{
    BoundCheck total;
    auto add = [&](const BuiltRule& b, const MomentSequence& exact) {
        const auto c = check_bounds(b, exact);
        total.violations += c.violations;
        total.checked += c.checked;
        total.worst_ratio = std::max<Real>(total.worst_ratio, c.worst_ratio);
    };
    add(rule_with_nodes("lebesgue_pm1", 350, 20), lebesgue_pm1(369));
    const std::vector<std::pair<int, std::vector<int>>> rows = {
        {2, {10, 20, 30}}, {3, {10, 35}}, {4, {10, 12}}};
    int rules = 1;
    for (const auto& [table, nodes] : rows) {
        const auto spec = table_spec(table);
        for (int n : nodes) {
            const auto b = build_table_rule(spec, find_row(spec, n));
            add(b, measure_from_name(spec.measure, b.rule.N + b.rule.d));
            ++rules;
        }
    }
    return {total.violations == 0,
            std::to_string(rules) + " rules, " + std::to_string(total.checked) + " degrees, " +
                std::to_string(total.violations) + " violations, max error/bound " +
                sci(total.worst_ratio)};
}

// 7 ---------------------------------------------------------------------

Outcome trig()
{
    const auto built = rule_with_nodes("trig_lebesgue_pm1", 350, 30);
    const auto err = monomial_errors(built.rule, trig_lebesgue_pm1(500), 500);
    return {err[500] <= Real("1e-5"), "|error| at n=500: " + sci(err[500]) + " (limit 1e-5)"};
}

// 8 ---------------------------------------------------------------------

Outcome logweight()
{
    const auto built = rule_with_nodes("logweight_01", 350, 15);
    const auto exact = logweight_01(350);
    const auto err = monomial_errors(built.rule, exact, 350);
    int violations = 0;
    Real worst(0);
    for (int n = 0; n <= 350; ++n) {
        const Real allowed =
            built.certificate.monomial_bound(n) + rounding_floor(built.rule, exact[n], n);
        if (err[n] > allowed)
            ++violations;
        worst = std::max<Real>(worst, Real(err[n] / allowed));
    }
    return {violations == 0, "n<=350: " + std::to_string(violations) +
                                 " violations, max error/bound " + sci(worst)};
}

// 9 ---------------------------------------------------------------------

Real bessel_demo(int nu)
{
    const Real w = 100 * pi();
    const auto grid = sample_function([&](const Real& x) { return Complex(bessel_j(nu, w * x)); },
                                      Real(0), Real(1), 800);
    ExpSumOptions opt;
    opt.terms = 40;
    return residual_report(build_expsum(grid, opt), grid).max_residual;
}

Outcome expsum_demos()
{
    const Real j0 = bessel_demo(0);
    const Real j25 = bessel_demo(25);
    const auto demo = dirichlet_kernel_demo(200, 80, 950);
    const auto grid = sample_function([](const Real& x) { return Complex(dirichlet_kernel(200, x)); },
                                      Real(0), Real(2), 2000);
    const Real dk = residual_report(demo.full, grid).max_residual;
    const bool ok0 = j0 <= Real("1e-8");
    const bool ok25 = j25 <= Real("1e-5");
    const bool okd = dk <= Real("1e-6");
    return {ok0 && ok25 && okd,
            std::string("J0 40 terms ") + sci(j0) + (ok0 ? " ok" : " FAIL") + " (1e-8); J25 40 terms " +
                sci(j25) + (ok25 ? " ok" : " FAIL") + " (1e-5); D200 " +
                std::to_string(demo.full.size()) + " terms " + sci(dk) + (okd ? " ok" : " FAIL") +
                " (1e-6)"};
}

// 10 --------------------------------------------------------------------

Outcome oracles()
{
    // Rank one: f(x) = c e^{i b x} must come back as a single exact term.
    const Complex c(Real("0.75"), Real("-0.5"));
    const Real beta("3.25");
    const auto grid = sample_function(
        [&](const Real& x) { return c * Complex(cos(beta * x), sin(beta * x)); }, Real(0), Real(1), 40);
    ExpSumOptions eo;
    eo.epsilon = Real("1e-80");
    eo.d_max = 10;
    const auto e = build_expsum(grid, eo);
    Real rank1(1);
    if (e.size() == 1)
        rank1 = std::max<Real>(abs_of(Complex(e.alpha[0] - c)), abs_of(Complex(e.beta[0] - beta)));
    const bool ok1 = e.size() == 1 && rank1 <= Real("1e-80");

    // Gauss rules integrate x^k exactly for k <= 2n - 1.
    Real classical(0);
    for (int n = 1; n <= 30; ++n) {
        const auto gl = gauss_legendre(n).as_rule();
        const auto gc = gauss_chebyshev1(n).as_rule();
        const auto el = monomial_errors(gl, lebesgue_pm1(2 * n - 1), 2 * n - 1);
        const auto ec = monomial_errors(gc, chebyshev1(2 * n - 1), 2 * n - 1);
        for (int k = 0; k < 2 * n; ++k)
            classical = std::max<Real>(classical, std::max<Real>(el[k], ec[k]));
    }
    const bool ok2 = classical <= tolerance(20);

    // Orthogonal polynomials annihilate the Hankel rows below their degree.
    Real annihilation(0);
    for (int k = 1; k <= 20; ++k) {
        annihilation = std::max<Real>(annihilation,
                           quasiorthogonality_residual(monic_legendre(k), lebesgue_pm1(2 * k), k - 1));
        annihilation = std::max<Real>(annihilation,
                           quasiorthogonality_residual(monic_chebyshev1(k), chebyshev1(2 * k), k - 1));
    }
    const bool ok3 = annihilation <= Real("1e-90");

    return {ok1 && ok2 && ok3, "rank-1 recovery " + std::to_string(e.size()) + " term(s), err " +
                                   sci(rank1) + "; classical exactness n<=30 " + sci(classical) +
                                   "; annihilation k<=20 " + sci(annihilation)};
}

struct Criterion
{
    int id;
    const char* name;
    std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv)
{
    PrecisionGuard guard(kDefaultDigits);

    const std::vector<Criterion> all = {
        {1, "Hankel singular values", hankel_spectrum},
        {2, "monomial sweep N=350, 20 nodes", sweep350},
        {3, "Table 2 rows", [] { return table_rows(2, {10, 20, 30}, 1e-13); }},
        {4, "Table 3 rows", [] { return table_rows(3, {10, 35}, 1e-13); }},
        {5, "Table 4 rows", table4},
        {6, "certified bound holds", certified_bounds},
        {7, "trigonometric quadrature", trig},
        {8, "log-weight measure", logweight},
        {9, "exponential-sum demos", expsum_demos},
        {10, "oracle equivalence", oracles},
    };

    std::set<int> wanted;
    for (int i = 1; i < argc; ++i)
        wanted.insert(std::stoi(argv[i]));

    int failed = 0;
    for (const auto& c : all) {
        if (!wanted.empty() && !wanted.count(c.id))
            continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %2d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return std::min(failed, 125);
}
