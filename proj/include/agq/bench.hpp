#pragma once

// Integration benchmarks: AGQ against Gauss-Legendre on analytic integrands
// with slowly or quickly decaying Taylor coefficients.

#include "agq/moments.hpp"
#include "agq/precision.hpp"
#include "agq/rule.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace agq {

enum class TableIntegrand
{
    log_shift,     ///< log(1 - x/1.05) on [-1, 1]
    inverse_shift, ///< 1 / (1 - x/1.05) on [-1, 1]
    /// exp(-10 t) on [0, 1], integrated in x = 2t - 1 as exp(-5 (x + 1)) / 2
    /// on [-1, 1] so every table shares the Lebesgue [-1, 1] moments.
    exp_decay,
};

std::string to_string(TableIntegrand f);

struct TableRow
{
    int nodes = 0;
    int N = 0; ///< as listed: the number of Hankel rows
    double published_agq = 0;
    double published_classical = 0;
};

struct TableSpec
{
    int id = 0;
    TableIntegrand integrand = TableIntegrand::log_shift;
    std::string measure; ///< moments the AGQ rules are built from
    std::vector<TableRow> rows;
};

/// Tables 2, 3 and 4 with the node counts and orders as published.
TableSpec table_spec(int id);

/// Taylor coefficients c_0..c_K about 0 in the rule variable x in [-1, 1],
/// K the first index whose tail bound is below 10^{-(P-10)}.
std::vector<Real> series_coefficients(TableIntegrand f);
/// sum_k c_k x^k by Horner.
Complex eval_series(const std::vector<Real>& c, const Complex& x);
/// Exact integral of the original integrand, from the antiderivative.
Real exact_integral(TableIntegrand f);

struct BenchRow
{
    int table = 0;
    std::string integrand;
    int nodes = 0;
    int N = 0;
    Real agq_error;
    Real classical_error;
    /// Certified bound for the degree <= N+d part of the series plus the
    /// triangle-inequality bound of the remaining terms.
    Real bound_value;
    double runtime_seconds = 0;
    double published_agq = 0;
    double published_classical = 0;
};

/// The tables list N as the number of Hankel rows, so the quadrature order
/// (rows 0..order) is N - 1.
int table_order(const TableRow& row);

/// AGQ rule of a table row: `nodes` nodes, order table_order(row), moments of
/// the table measure.
BuiltRule build_table_rule(const TableSpec& spec, const TableRow& row);

BenchRow run_table_row(const TableSpec& spec, const TableRow& row);
std::vector<BenchRow> run_table(int id);

/// CSV with header; decimal strings at the run precision. Runtime is written
/// only on request, which keeps default output byte-identical across runs.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool with_runtime);

} // namespace agq
