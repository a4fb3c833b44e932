#include "agq/expsum.hpp"

#include "agq/errors.hpp"
#include "agq/hankel.hpp"

#include <algorithm>
#include <cmath>

namespace agq {

namespace {

Complex cexp(const Complex& z)
{
    const Real r = exp(z.real());
    return {r * cos(z.imag()), r * sin(z.imag())};
}

const Complex kI(Real(0), Real(1));

QuasiSearch solve_fixed(const MomentSequence& tau, int M, int d)
{
    QuasiOptions q;
    q.nodes = d + 1;
    return find_quasiorthogonal(tau, M - d - 1, q);
}

} // namespace

ExpSumApprox build_expsum(const SampleGrid& grid, const ExpSumOptions& options)
{
    grid.validate();
    const auto tau = moments_from_samples(grid);
    const int M = grid.M;

    QuasiSearch search;
    if (options.terms) {
        const int terms = *options.terms;
        if (terms < 1 || terms + 2 > M)
            throw ContractError("build_expsum: terms must lie in 1..M-2");
        search = solve_fixed(tau, M, terms - 1);
    } else {
        if (!(options.epsilon > 0))
            throw ContractError("build_expsum: epsilon must be positive");
        if (options.d_max < 0 || M < options.d_max + 3)
            throw ContractError("build_expsum: need M >= d_max + 3 (M = " + std::to_string(M) +
                                ", d_max = " + std::to_string(options.d_max) + ")");
        if (tau.is_zero())
            throw ContractError("build_expsum: all samples vanish");
        const Real delta = options.delta_seed.value_or(options.epsilon);
        int d = 0;
        if (delta > 0 && delta < 1)
            d = seed_degree(tau, M - options.d_max - 1, delta, options.d_max);
        std::vector<DegreeExhaustedError::Attempt> report;
        bool found = false;
        for (; d <= options.d_max; ++d) {
            search = solve_fixed(tau, M, d);
            const Real r = search.poly.residual_2;
            report.push_back({d, r.str(6, std::ios::scientific)});
            if (r <= options.epsilon) {
                found = true;
                break;
            }
        }
        if (!found)
            throw DegreeExhaustedError("build_expsum: no degree up to d_max = " +
                                           std::to_string(options.d_max) + " reaches epsilon",
                                       std::move(report));
    }

    ExpSumApprox out;
    out.a = grid.a;
    out.b = grid.b;
    out.M = M;
    out.d = search.poly.degree();
    out.N = M - out.d - 1;
    out.epsilon = search.poly.residual_inf;
    out.residual_2 = search.poly.residual_2;
    out.poly = search.poly.p;
    out.descriptor = tau.descriptor;
    out.precision_digits = current_digits();

    out.nodes = nodes_from_poly(out.poly, options.roots);
    for (std::size_t m = 0; m < out.nodes.size(); ++m)
        if (out.nodes[m] == Complex(0))
            throw NumericalError("build_expsum: node " + std::to_string(m) +
                                 " is zero, log(z) undefined");
    out.weights = compute_weights(out.nodes, tau);

    if (options.prune_tol > 0) {
        Real largest(0);
        for (const auto& w : out.weights)
            largest = std::max(largest, abs_of(w));
        std::vector<Complex> z, w;
        for (std::size_t m = 0; m < out.nodes.size(); ++m) {
            if (abs_of(out.weights[m]) < options.prune_tol * largest) {
                ++out.pruned;
            } else {
                z.push_back(out.nodes[m]);
                w.push_back(out.weights[m]);
            }
        }
        out.nodes = std::move(z);
        out.weights = std::move(w);
    }

    // xi = -i log z on the principal branch; beta = M xi / (b - a).
    const Real scale = Real(M) / (grid.b - grid.a);
    const Real axis_tol = tolerance(20);
    for (std::size_t m = 0; m < out.nodes.size(); ++m) {
        const Complex& z = out.nodes[m];
        if (z.real() < 0 && abs(z.imag()) <= axis_tol * abs_of(z))
            out.warnings.push_back("node " + std::to_string(m) +
                                   " lies on the negative real axis; principal branch "
                                   "arg = +-pi taken from the sign of its imaginary part");
        const Complex xi(atan2(z.imag(), z.real()), -log(abs_of(z)));
        const Complex beta = scale * xi;
        out.beta.push_back(beta);
        out.alpha.push_back(out.weights[m] * cexp(-kI * beta * grid.a));
    }

    const auto report = residual_report(out, grid);
    out.max_sample_residual = report.max_residual;
    Real fmax(0);
    for (const auto& s : grid.samples)
        fmax = std::max(fmax, abs_of(s));
    if (out.max_sample_residual > Real("1e-3") * fmax)
        out.warnings.push_back("sample residual " + out.max_sample_residual.str(3) +
                               " exceeds 1e-3 of max |f|; the grid may be undersampled or the "
                               "term count too small");
    return out;
}

Complex eval_expsum(const ExpSumApprox& approx, const Real& x)
{
    Complex s(0);
    for (std::size_t m = 0; m < approx.size(); ++m)
        s += approx.alpha[m] * cexp(kI * approx.beta[m] * x);
    return s;
}

ErrorCertificate expsum_certificate(const ExpSumApprox& approx)
{
    if (approx.poly.coefficients().empty())
        throw ContractError("expsum_certificate: approximation carries no quadrature polynomial");
    return ErrorCertificate(approx.poly, approx.epsilon, approx.N);
}

ResidualReport residual_report(const ExpSumApprox& approx, const SampleGrid& grid)
{
    grid.validate();
    ResidualReport r;
    r.max_residual = Real(0);
    for (int n = 0; n <= grid.M; ++n) {
        const Real x = grid.point(n);
        const Real e = abs_of(Complex(grid.samples[n] - eval_expsum(approx, x)));
        r.x.push_back(x);
        r.residual.push_back(e);
        r.max_residual = std::max(r.max_residual, e);
    }
    return r;
}

SampleGrid sample_function(const std::function<Complex(const Real&)>& f, const Real& a,
                           const Real& b, int M)
{
    SampleGrid g{a, b, M, {}};
    if (!(b > a) || M < 2)
        throw ContractError("sample_function: need b > a and M >= 2");
    g.samples.reserve(M + 1);
    for (int n = 0; n <= M; ++n)
        g.samples.push_back(f(g.point(n)));
    return g;
}

Real dirichlet_kernel(int n, const Real& x)
{
    if (n < 0)
        throw ContractError("dirichlet_kernel: negative order");
    // Period 2: reduce to [-1, 1].
    const Real r = x - 2 * round(x / 2);
    if (r == 0)
        return Real(2 * n + 1);
    return sin(pi() * (Real(n) + Real(1) / 2) * r) / sin(pi() * r / 2);
}

Real dirichlet_half(int n, const Real& y)
{
    if (n < 0)
        throw ContractError("dirichlet_half: negative order");
    if (y < 0)
        throw ContractError("dirichlet_half: needs y >= 0");
    const Real omega = pi() * (Real(n) + Real(1) / 2);
    const Real sw = sin(omega * y);
    const Real head = y == 0 ? Real(2 * n + 1) : 2 * sw / (pi() * y);

    // sum_{j>=1} (-1)^j / (y + 2j) = -sum_{k>=0} (-1)^k a_k, a_k = 1 / (y + 2 + 2k),
    // a moment sequence, so the accelerated error is <= 2 a_0 / (3 + sqrt 8)^m.
    const Real a0 = 1 / (y + 2);
    const Real rate = 3 + sqrt(Real(8));
    const Real target = tolerance(10);
    const double need = std::ceil((log(2 * a0 / target) / log(rate)).convert_to<double>());
    const int m = std::max(1, static_cast<int>(need));
    if (m > 100000)
        throw ConvergenceError("dirichlet_half: series truncation", m,
                               "tail bound above 10^-(P-10)");
    Real dm = pow(rate, m);
    dm = (dm + 1 / dm) / 2;
    Real b(-1), c = -dm, s(0);
    for (int k = 0; k < m; ++k) {
        c = b - c;
        s += c / (y + 2 + 2 * k);
        b = b * (Real(k + m) * (k - m)) / ((Real(k) + Real(1) / 2) * (k + 1));
    }
    const Real tail = -s / dm;
    return head + 2 * sw * tail / pi();
}

DirichletDemo dirichlet_kernel_demo(int n, int terms, int M)
{
    if (terms < 2 || terms % 2 != 0)
        throw ContractError("dirichlet_kernel_demo: terms must be even and >= 2");
    const Real a(0), b(2);
    const auto grid_g = sample_function(
        [n](const Real& y) { return Complex(dirichlet_half(n, y)); }, a, b, M);
    ExpSumOptions opt;
    opt.terms = terms / 2;

    DirichletDemo demo;
    demo.half = build_expsum(grid_g, opt);
    demo.half.descriptor = "dirichlet_half(n=" + std::to_string(n) + ")";

    // G(2 - x) = sum_m alpha_m e^{2 i beta_m} e^{-i beta_m x}
    auto& full = demo.full;
    full = demo.half;
    full.nodes.clear();
    full.weights.clear();
    full.poly = Polynomial();
    full.warnings.clear();
    for (std::size_t m = 0; m < demo.half.size(); ++m) {
        full.alpha.push_back(demo.half.alpha[m] * cexp(Real(2) * kI * demo.half.beta[m]));
        full.beta.push_back(-demo.half.beta[m]);
    }
    full.d = static_cast<int>(full.size()) - 1;
    full.descriptor = "dirichlet(n=" + std::to_string(n) + ")";
    const auto grid_d = sample_function(
        [n](const Real& x) { return Complex(dirichlet_kernel(n, x)); }, a, b, M);
    full.max_sample_residual = residual_report(full, grid_d).max_residual;
    return demo;
}

} // namespace agq
