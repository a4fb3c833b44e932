#include "agq/rule.hpp"

#include "agq/errors.hpp"
#include "agq/toeplitz.hpp"

#include <algorithm>
#include <tuple>

namespace agq {

ErrorCertificate::ErrorCertificate(Polynomial p, Real epsilon, int N)
    : p_(std::move(p)), epsilon_(std::move(epsilon)), N_(N)
{
    if (!p_.is_monic() || p_.degree() < 1)
        throw ContractError("certificate needs a monic polynomial of degree >= 1");
    if (N_ < 0)
        throw ContractError("certificate order must be nonnegative");
    const int d = degree();
    band_.resize(d + 2);
    for (int s = 0; s <= d + 1; ++s)
        band_[s] = p_[d + 1 - s];

    // Gamma_2^{-1} is again upper triangular Toeplitz; its first row is the
    // power series 1 / B(x) truncated to N terms, B(x) = sum_s band[s] x^s.
    std::vector<Complex> t(N_, Complex(0));
    inverse_row_prefix_.assign(N_, Real(0));
    Real running(0);
    for (int j = 0; j < N_; ++j) {
        Complex s(j == 0 ? 1 : 0);
        for (int k = 1; k <= std::min(j, d + 1); ++k)
            s -= band_[k] * t[j - k];
        t[j] = s;
        running += abs_of(s);
        inverse_row_prefix_[j] = running;
    }
}

CMatrix ErrorCertificate::gamma2() const
{
    CMatrix g = CMatrix::Zero(N_, N_);
    const int w = static_cast<int>(band_.size());
    for (int j = 0; j < N_; ++j)
        for (int s = 0; s < w && j + s < N_; ++s)
            g(j, j + s) = band_[s];
    return g;
}

Real ErrorCertificate::bound(std::span<const Complex> q) const
{
    int deg = static_cast<int>(q.size()) - 1;
    while (deg >= 0 && q[deg] == Complex(0))
        --deg;
    const int d = degree();
    if (deg <= d)
        return Real(0);
    if (deg > N_ + d)
        throw ContractError("error bound: degree " + std::to_string(deg) +
                            " is beyond certified order N+d = " + std::to_string(N_ + d));
    CVector qbar = CVector::Constant(N_, Complex(0));
    for (int k = d + 1; k <= deg; ++k)
        qbar[k - d - 1] = q[k];
    const auto r =
        solve_unit_upper_toeplitz_band<Complex>(std::span<const Complex>(band_), qbar);
    Real sum(0);
    for (Index i = 0; i < r.size(); ++i)
        sum += abs_of(r[i]);
    return sum * epsilon_;
}

Real ErrorCertificate::monomial_bound(int n) const
{
    const int d = degree();
    if (n < 0)
        throw ContractError("error bound: negative monomial degree");
    if (n <= d)
        return Real(0);
    if (n > N_ + d)
        throw ContractError("error bound: degree " + std::to_string(n) +
                            " is beyond certified order N+d = " + std::to_string(N_ + d));
    return inverse_row_prefix_[n - d - 1] * epsilon_;
}

Real error_bound(const ErrorCertificate& cert, std::span<const Complex> q)
{
    return cert.bound(q);
}

std::vector<Complex> nodes_from_poly(const Polynomial& p, const RootOptions& options)
{
    auto z = roots_monic(p, options);
    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real())
            return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

CMatrix lagrange_coefficients(const std::vector<Complex>& nodes)
{
    const auto n = static_cast<Index>(nodes.size());
    if (n == 0)
        throw ContractError("lagrange_coefficients: no nodes");
    const Real tol = tolerance(20);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j) {
            const Real scale = std::max({Real(1), abs_of(nodes[i]), abs_of(nodes[j])});
            if (abs_of(Complex(nodes[i] - nodes[j])) <= tol * scale)
                throw ContractError("lagrange_coefficients: nodes " + std::to_string(i) + " and " +
                                    std::to_string(j) + " coincide");
        }

    const auto full = Polynomial::from_roots(nodes);
    CMatrix L(n, n);
    for (Index i = 0; i < n; ++i) {
        const auto q = full.divide_linear(nodes[i]);
        Complex denom(1);
        for (Index m = 0; m < n; ++m)
            if (m != i)
                denom *= nodes[i] - nodes[m];
        for (Index k = 0; k < n; ++k)
            L(i, k) = q[k] / denom;
    }
    return L;
}

namespace {

// w = L mu at the current precision, together with the number of decimal
// digits lost to cancellation in the worst row.
std::pair<std::vector<Complex>, int> weights_at_current(std::vector<Complex> nodes,
                                                        std::vector<Complex> mu)
{
    // Operands keep their own precision; widen them so the arithmetic does too.
    for (auto& x : nodes)
        x = at_working_precision(x);
    for (auto& x : mu)
        x = at_working_precision(x);
    const auto L = lagrange_coefficients(nodes);
    std::vector<Complex> w(nodes.size(), Complex(0));
    Real lost(0);
    for (Index i = 0; i < L.rows(); ++i) {
        Real magnitude(0);
        for (Index k = 0; k < L.cols(); ++k) {
            const Complex t = L(i, k) * mu[k];
            w[i] += t;
            magnitude += abs_of(t);
        }
        const Real size = abs_of(w[i]);
        if (magnitude > 0)
            lost = std::max(lost, size > 0 ? Real(log10(magnitude / size)) : Real(current_digits()));
    }
    return {std::move(w), static_cast<int>(ceil(lost))};
}

} // namespace

std::vector<Complex> compute_weights(const std::vector<Complex>& nodes,
                                     const MomentSequence& moments)
{
    if (moments.size() < nodes.size())
        throw ContractError("compute_weights: need as many moments as nodes");
    // Large Lagrange coefficients cancel in L mu; redo the sum with the lost
    // digits added back so the weights are good to the working precision.
    const unsigned P = current_digits();
    const std::vector<Complex> mu(moments.values.begin(), moments.values.begin() + nodes.size());
    std::vector<Complex> w;
    int lost = 0;
    {
        PrecisionGuard guard(P + 20);
        std::tie(w, lost) = weights_at_current(nodes, mu);
        if (lost > 15) {
            PrecisionGuard wider(P + 20 + static_cast<unsigned>(std::min(lost, 4 * static_cast<int>(P))));
            w = weights_at_current(nodes, mu).first;
        }
    }
    for (auto& x : w)
        x = at_working_precision(x);
    return w;
}

BuiltRule build_rule(const MomentSequence& moments, int N, const RuleOptions& options)
{
    if (options.prune_tol < 0 || options.prune_tol >= 1)
        throw ContractError("build_rule: prune_tol must lie in [0, 1)");
    BuiltRule out;
    out.search = find_quasiorthogonal(moments, N, options.quasi);
    const auto& qp = out.search.poly;

    auto& rule = out.rule;
    rule.nodes = nodes_from_poly(qp.p, options.roots);
    rule.weights = compute_weights(rule.nodes, moments);
    rule.N = N;
    rule.d = qp.degree();
    rule.epsilon = qp.residual_inf;
    rule.residual_2 = qp.residual_2;
    rule.kind = moments.kind;
    rule.descriptor = moments.descriptor;
    rule.precision_digits = current_digits();

    if (options.prune_tol > 0) {
        Real largest(0);
        for (const auto& w : rule.weights)
            largest = std::max(largest, abs_of(w));
        std::vector<Complex> x, w;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            if (abs_of(rule.weights[i]) < options.prune_tol * largest) {
                rule.pruned.emplace_back(rule.nodes[i], rule.weights[i]);
            } else {
                x.push_back(rule.nodes[i]);
                w.push_back(rule.weights[i]);
            }
        }
        rule.nodes = std::move(x);
        rule.weights = std::move(w);
    }

    out.certificate = ErrorCertificate(qp.p, qp.residual_inf, N);
    return out;
}

Complex integrate(const QuadratureRule& rule, const std::function<Complex(const Complex&)>& f)
{
    Complex s(0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        s += rule.weights[i] * f(rule.nodes[i]);
    return s;
}

std::vector<Real> monomial_errors(const QuadratureRule& rule, const MomentSequence& exact,
                                  int nmax)
{
    if (nmax < 0 || exact.size() <= static_cast<std::size_t>(nmax))
        throw ContractError("monomial_errors: need exact moments 0..nmax");
    std::vector<Complex> power(rule.weights);
    std::vector<Real> err(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
        Complex s(0);
        for (std::size_t i = 0; i < power.size(); ++i) {
            s += power[i];
            power[i] *= rule.nodes[i];
        }
        err[n] = abs_of(Complex(s - exact[n]));
    }
    return err;
}

} // namespace agq
