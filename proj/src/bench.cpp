#include "agq/bench.hpp"

#include "agq/errors.hpp"
#include "agq/reference.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

namespace agq {

std::string to_string(TableIntegrand f)
{
    switch (f) {
    case TableIntegrand::log_shift:
        return "log_shift";
    case TableIntegrand::inverse_shift:
        return "inverse_shift";
    case TableIntegrand::exp_decay:
        return "exp_decay";
    }
    return "unknown";
}

TableSpec table_spec(int id)
{
    switch (id) {
    case 2:
        return {2,
                TableIntegrand::log_shift,
                "lebesgue_pm1",
                {{10, 75, 2.16e-8, 1.39e-4},
                 {15, 100, 1.08e-8, 3.94e-6},
                 {20, 150, 2.05e-11, 1.26e-7},
                 {25, 200, 3.99e-14, 4.31e-9},
                 {30, 250, 1.61e-15, 1.54e-10}}};
    case 3:
        return {3,
                TableIntegrand::inverse_shift,
                "lebesgue_pm1",
                {{10, 75, 5.81e-5, 8.15e-3},
                 {15, 100, 2.20e-6, 3.60e-4},
                 {20, 150, 4.26e-9, 1.56e-5},
                 {25, 200, 1.58e-11, 6.76e-7},
                 {30, 250, 4.01e-13, 2.92e-8},
                 {35, 300, 1.77e-15, 1.25e-9}}};
    case 4:
        return {4,
                TableIntegrand::exp_decay,
                "lebesgue_pm1",
                {{5, 15, 1.09e-6, 8.82e-5},
                 {7, 7, 1.29e-7, 1.29e-7},
                 {10, 10, 1.02e-12, 1.02e-12},
                 {12, 12, 4.44e-16, 4.44e-16}}};
    default:
        throw ContractError("table_spec: tables are 2, 3 and 4");
    }
}

namespace {

// Parsed on every call so the value carries the caller's precision.
Real shift() { return Real("1.05"); }

} // namespace

std::vector<Real> series_coefficients(TableIntegrand f)
{
    const Real tol = tolerance(10);
    std::vector<Real> c;
    switch (f) {
    case TableIntegrand::log_shift:
    case TableIntegrand::inverse_shift: {
        // |x| <= 1, ratio q = 1/1.05: tail after K is at most q^{K+1} / (1 - q).
        const Real q = 1 / shift();
        Real qn(1);
        for (int n = 0;; ++n) {
            if (f == TableIntegrand::log_shift)
                c.push_back(n == 0 ? Real(0) : -qn / n);
            else
                c.push_back(qn);
            qn *= q;
            if (qn / (1 - q) < tol)
                break;
        }
        break;
    }
    case TableIntegrand::exp_decay: {
        // (1/2) e^{-5} (-5)^n / n! on |x| <= 1: past n = 10 consecutive terms
        // shrink by at least half, so the tail is below twice the first
        // omitted term.
        Real term = exp(Real(-5)) / 2;
        for (int n = 0;; ++n) {
            c.push_back(term);
            term = term * -5 / (n + 1);
            if (n >= 10 && 2 * abs(term) < tol)
                break;
        }
        break;
    }
    }
    return c;
}

Complex eval_series(const std::vector<Real>& c, const Complex& x)
{
    Complex acc(0);
    for (std::size_t k = c.size(); k-- > 0;)
        acc = acc * x + c[k];
    return acc;
}

Real exact_integral(TableIntegrand f)
{
    const Real c = shift();
    switch (f) {
    case TableIntegrand::log_shift: {
        // u = 1 - x/c, dx = -c du, int log u du = u log u - u
        auto F = [](const Real& u) { return u * log(u) - u; };
        return -c * (F(1 - 1 / c) - F(1 + 1 / c));
    }
    case TableIntegrand::inverse_shift:
        return c * log((1 + 1 / c) / (1 - 1 / c));
    case TableIntegrand::exp_decay:
        return (1 - exp(Real(-10))) / 10;
    }
    throw ContractError("exact_integral: unknown integrand");
}

int table_order(const TableRow& row) { return row.N - 1; }

BuiltRule build_table_rule(const TableSpec& spec, const TableRow& row)
{
    const int order = table_order(row);
    if (row.nodes < 1 || row.nodes > order + 1)
        throw ContractError("table row needs 1 <= nodes <= N");
    const auto moments = measure_from_name(spec.measure, order + row.nodes + 1);
    RuleOptions opt;
    opt.quasi.nodes = row.nodes;
    return build_rule(moments, order, opt);
}

BenchRow run_table_row(const TableSpec& spec, const TableRow& row)
{
    const auto c = series_coefficients(spec.integrand);
    const Real exact = exact_integral(spec.integrand);

    const auto t0 = std::chrono::steady_clock::now();
    const auto built = build_table_rule(spec, row);
    const auto t1 = std::chrono::steady_clock::now();
    const auto& rule = built.rule;

    Complex agq(0);
    for (std::size_t i = 0; i < rule.size(); ++i)
        agq += rule.weights[i] * eval_series(c, rule.nodes[i]);

    const auto gl = gauss_legendre(row.nodes);
    Complex classical(0);
    for (std::size_t i = 0; i < gl.size(); ++i)
        classical += gl.weights[i] * eval_series(c, Complex(gl.nodes[i]));

    // Certified part: degrees up to N + d. Beyond that each term contributes at
    // most |c_n| (|mu_n| + sum_i |w_i| |x_i|^n).
    const int certified = rule.N + rule.d;
    const std::size_t head = std::min<std::size_t>(c.size(), certified + 1);
    std::vector<Complex> q(c.begin(), c.begin() + head);
    Real bound = built.certificate.bound(q);
    Real abs_weights(0);
    for (const auto& w : rule.weights)
        abs_weights += abs_of(w);
    if (c.size() > head) {
        const auto mu = measure_from_name(spec.measure, static_cast<int>(c.size()) - 1);
        std::vector<Real> wpow(rule.size());
        for (std::size_t i = 0; i < rule.size(); ++i)
            wpow[i] = abs_of(rule.weights[i]) * pow(abs_of(rule.nodes[i]), static_cast<int>(head));
        for (std::size_t n = head; n < c.size(); ++n) {
            Real quad(0);
            for (std::size_t i = 0; i < rule.size(); ++i) {
                quad += wpow[i];
                wpow[i] *= abs_of(rule.nodes[i]);
            }
            bound += abs(c[n]) * (abs_of(mu[n]) + quad);
        }
    }
    // Truncated series tail, both in the exact value and at the nodes.
    bound += tolerance(10) * (abs_of(Complex(exact)) + abs_weights + 1);

    BenchRow r;
    r.table = spec.id;
    r.integrand = to_string(spec.integrand);
    r.nodes = row.nodes;
    r.N = row.N;
    r.agq_error = abs_of(Complex(agq - exact));
    r.classical_error = abs_of(Complex(classical - exact));
    r.bound_value = bound;
    r.runtime_seconds = std::chrono::duration<double>(t1 - t0).count();
    r.published_agq = row.published_agq;
    r.published_classical = row.published_classical;
    return r;
}

std::vector<BenchRow> run_table(int id)
{
    const auto spec = table_spec(id);
    std::vector<BenchRow> out;
    for (const auto& row : spec.rows)
        out.push_back(run_table_row(spec, row));
    return out;
}

namespace {

std::string short_double(double v)
{
    std::ostringstream s;
    s.precision(3);
    s << v;
    return s.str();
}

} // namespace

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool with_runtime)
{
    out << "table,integrand,nodes,N,agq_error,classical_error,bound,published_agq,published_classical";
    if (with_runtime)
        out << ",runtime_s";
    out << '\n';
    for (const auto& r : rows) {
        out << r.table << ',' << r.integrand << ',' << r.nodes << ',' << r.N << ','
            << to_decimal(r.agq_error) << ',' << to_decimal(r.classical_error) << ','
            << to_decimal(r.bound_value) << ',' << short_double(r.published_agq) << ','
            << short_double(r.published_classical);
        if (with_runtime)
            out << ',' << r.runtime_seconds;
        out << '\n';
    }
}

} // namespace agq
