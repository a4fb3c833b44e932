#include "agq/bench.hpp"
#include "agq/errors.hpp"
#include "agq/reference.hpp"

#include "support.hpp"

#include <sstream>

using namespace agq;
using agq::test::dist;

namespace {

// Legendre P_n and P_n' from the standard (non-monic) recurrence.
std::pair<Real, Real> legendre(int n, const Real& x)
{
    Real p0(1), p1 = x;
    if (n == 0)
        return {p0, Real(0)};
    for (int k = 2; k <= n; ++k) {
        const Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return {p1, n * (x * p1 - p0) / (x * x - 1)};
}

} // namespace

TEST_SUITE("reference")
{
    TEST_CASE("Gauss-Legendre small rules")
    {
        PrecisionGuard g(100);
        const auto r1 = gauss_legendre(1);
        CHECK_SMALL(abs(r1.nodes[0]), tolerance(15));
        CHECK_SMALL(abs(r1.weights[0] - 2), tolerance(15));
        const auto r2 = gauss_legendre(2);
        const Real s2 = 1 / sqrt(Real(3));
        CHECK_SMALL(abs(r2.nodes[0] + s2), tolerance(15));
        CHECK_SMALL(abs(r2.nodes[1] - s2), tolerance(15));
        CHECK_SMALL(abs(r2.weights[0] - 1), tolerance(15));
        const auto r3 = gauss_legendre(3);
        const Real s3 = sqrt(Real(3) / 5);
        CHECK_SMALL(abs(r3.nodes[0] + s3), tolerance(15));
        CHECK_SMALL(abs(r3.nodes[2] - s3), tolerance(15));
        CHECK_SMALL(abs(r3.weights[0] - Real(5) / 9), tolerance(15));
        CHECK_SMALL(abs(r3.weights[1] - Real(8) / 9), tolerance(15));
    }

    TEST_CASE("Gauss-Legendre against Newton on the Legendre recurrence")
    {
        PrecisionGuard g(100);
        const int n = 20;
        const auto r = gauss_legendre(n);
        for (int i = 0; i < n; ++i) {
            // Start from the classical cosine estimate for the (n-i)-th zero.
            Real x = -cos(pi() * (i + Real(3) / 4) / (n + Real(1) / 2));
            for (int it = 0; it < 100; ++it) {
                const auto [p, dp] = legendre(n, x);
                const Real step = p / dp;
                x -= step;
                if (abs(step) < tolerance(-5))
                    break;
            }
            const auto [p, dp] = legendre(n, x);
            (void)p;
            const Real w = 2 / ((1 - x * x) * dp * dp);
            CHECK_SMALL(abs(r.nodes[i] - x), tolerance(15));
            CHECK_SMALL(abs(r.weights[i] - w), tolerance(15));
        }
    }

    TEST_CASE("Gauss-Chebyshev: small rules and closed form against recurrence")
    {
        PrecisionGuard g(100);
        const auto c1 = gauss_chebyshev1(1);
        CHECK_SMALL(abs(c1.nodes[0]), tolerance(15));
        CHECK_SMALL(abs(c1.weights[0] - pi()), tolerance(15));
        const auto c2 = gauss_chebyshev1(2);
        CHECK_SMALL(abs(c2.nodes[0] + cos(pi() / 4)), tolerance(15));
        CHECK_SMALL(abs(c2.weights[1] - pi() / 2), tolerance(15));
        const auto c5 = gauss_chebyshev1(5).as_rule();
        const auto x8 = integrate(c5, [](const Complex& x) { return pow(x, 8); });
        CHECK_SMALL(dist(x8, Complex(35 * pi() / 128)), tolerance(15));

        for (int n = 1; n <= 30; ++n) {
            const auto a = gauss_chebyshev1(n);
            const auto b = gauss_chebyshev1_recurrence(n);
            REQUIRE(a.size() == b.size());
            for (int i = 0; i < n; ++i) {
                CHECK_SMALL(abs(a.nodes[i] - b.nodes[i]), tolerance(20));
                CHECK_SMALL(abs(a.weights[i] - b.weights[i]), tolerance(20));
            }
        }
    }

    TEST_CASE("classical rules are exact to degree 2n-1")
    {
        PrecisionGuard g(100);
        for (int n = 1; n <= 30; ++n) {
            const auto el = monomial_errors(gauss_legendre(n).as_rule(), lebesgue_pm1(2 * n), 2 * n);
            const auto ec = monomial_errors(gauss_chebyshev1(n).as_rule(), chebyshev1(2 * n), 2 * n);
            for (int k = 0; k < 2 * n; ++k) {
                CHECK_SMALL(el[k], tolerance(20));
                CHECK_SMALL(ec[k], tolerance(20));
            }
            // Degree 2n is where exactness ends (for even 2n the moment is nonzero).
            CHECK(el[2 * n] > tolerance(20));
        }
    }

    TEST_CASE("mapped rules")
    {
        PrecisionGuard g(60);
        const auto r = mapped(gauss_legendre(5), Real(0), Real(1));
        Real sum(0);
        for (const auto& w : r.weights)
            sum += w;
        CHECK_SMALL(abs(sum - 1), tolerance(10));
        const auto e = monomial_errors(r.as_rule(), lebesgue_01(9), 9);
        for (int k = 0; k <= 9; ++k)
            CHECK_SMALL(e[k], tolerance(15));
    }

    TEST_CASE("moment oracle")
    {
        PrecisionGuard g(100);
        CHECK_SMALL(dist(oracle_integral("lebesgue_pm1", 700), Complex(Real(2) / 701)), tolerance(10));
        CHECK_SMALL(dist(oracle_integral("trig_lebesgue_pm1", 500), Complex(2 * sin(Real(500)) / 500)),
                    tolerance(10));
        CHECK_SMALL(dist(oracle_integral("logweight_01", 700), Complex(Real(-1) / (701 * 701))),
                    tolerance(10));
        CHECK_THROWS(oracle_integral("nosuch", 1));
    }

    TEST_CASE("adaptive integration")
    {
        PrecisionGuard g(60);
        const Real tol = tolerance(10);
        CHECK_SMALL(dist(adaptive_integrate([](const Real&) { return Complex(1); }, Real(0), Real(1), tol),
                         Complex(1)),
                    tolerance(15));
        CHECK_SMALL(dist(adaptive_integrate([](const Real& x) { return Complex(x * x); }, Real(-1),
                                            Real(1), tol),
                         Complex(Real(2) / 3)),
                    tolerance(15));

        // log(1 - x/1.05) against its Taylor series integrated term by term.
        const auto c = series_coefficients(TableIntegrand::log_shift);
        const auto mu = lebesgue_pm1(static_cast<int>(c.size()));
        Complex series(0);
        for (std::size_t k = 0; k < c.size(); ++k)
            series += c[k] * mu[k];
        const Real c105("1.05");
        const auto quad = adaptive_integrate([&](const Real& x) { return Complex(log(1 - x / c105)); },
                                             Real(-1), Real(1), tol);
        CHECK_SMALL(dist(quad, series), tolerance(15));
    }

    TEST_CASE("Bessel functions")
    {
        PrecisionGuard g(50);
        // Tabulated values (40 digits).
        CHECK_SMALL(abs(bessel_j(0, Real(1)) - Real("0.7651976865579665514497175261026632209093")),
                    Real("1e-39"));
        CHECK_SMALL(abs(bessel_j(0, Real(10)) - Real("-0.2459357644513483351977608624853287538296")),
                    Real("1e-39"));
        for (int nu : {0, 1, 7, 25})
            for (const auto& z : {Real("0.3"), Real("4.5"), Real("37"), Real("150.75")})
                CHECK_SMALL(abs(bessel_j(nu, z) - bessel_j_series(nu, z)), tolerance(10));
        CHECK(bessel_j(0, Real(0)) == 1);
        CHECK(bessel_j(3, Real(0)) == 0);
        CHECK_THROWS_AS(bessel_j(-1, Real(1)), ContractError);
    }

    TEST_CASE("benchmark integrands: series and exact values")
    {
        PrecisionGuard g(60);
        const Real tol = tolerance(10);
        const Real c105("1.05");
        struct Case
        {
            TableIntegrand f;
            Real a, b;
            std::function<Complex(const Real&)> direct;
        };
        const std::vector<Case> cases = {
            {TableIntegrand::log_shift, Real(-1), Real(1),
             [&](const Real& x) { return Complex(log(1 - x / c105)); }},
            {TableIntegrand::inverse_shift, Real(-1), Real(1),
             [&](const Real& x) { return Complex(1 / (1 - x / c105)); }},
            // exp(-10 t) on [0, 1] in the rule variable x = 2t - 1.
            {TableIntegrand::exp_decay, Real(-1), Real(1),
             [&](const Real& x) { return Complex(exp(-5 * (x + 1)) / 2); }},
        };
        for (const auto& cs : cases) {
            INFO(to_string(cs.f));
            const auto quad = adaptive_integrate(cs.direct, cs.a, cs.b, tol);
            CHECK_SMALL(dist(quad, Complex(exact_integral(cs.f))), tolerance(15));
            const auto c = series_coefficients(cs.f);
            const Real x = (cs.a + cs.b * 3) / 4;
            CHECK_SMALL(dist(eval_series(c, Complex(x)), cs.direct(x)), tolerance(12));
        }
    }

    TEST_CASE("table harness plumbing")
    {
        PrecisionGuard g(100);
        CHECK_THROWS_AS(table_spec(5), ContractError);
        const auto spec = table_spec(4);
        CHECK(spec.measure == "lebesgue_pm1");
        CHECK(table_order(spec.rows[2]) == 9);
        const auto row = run_table_row(spec, spec.rows[2]);
        CHECK(row.agq_error <= row.bound_value);
        std::ostringstream out;
        write_bench_csv(out, {row}, false);
        const auto text = out.str();
        CHECK(text.rfind("table,integrand,nodes,N,agq_error,classical_error,bound,published_agq,published_classical\n", 0) == 0);
        CHECK(text.find("runtime") == std::string::npos);
        std::ostringstream timed;
        write_bench_csv(timed, {row}, true);
        CHECK(timed.str().find(",runtime_s\n") != std::string::npos);
    }
}
