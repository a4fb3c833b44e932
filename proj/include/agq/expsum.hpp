#pragma once

// Short exponential sums f(x) ~ sum_m alpha_m exp(i beta_m x) built from a
// trigonometric-moment quadrature over uniform samples of f.

#include "agq/moments.hpp"
#include "agq/polynomial.hpp"
#include "agq/precision.hpp"
#include "agq/roots.hpp"
#include "agq/rule.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace agq {

struct ExpSumApprox
{
    std::vector<Complex> alpha;
    std::vector<Complex> beta;
    Real a;
    Real b;
    int M = 0;     ///< samples 0..M
    int N = 0;     ///< internal quadrature order, M - d - 1
    int d = 0;     ///< d + 1 quadrature nodes
    Real epsilon;  ///< ||H p + h||_inf of the quadrature polynomial
    Real residual_2;
    Real max_sample_residual; ///< max_n |f(x_n) - sum_m alpha_m e^{i beta_m x_n}|
    /// Quadrature data in the z = e^{i xi} domain.
    std::vector<Complex> nodes;
    std::vector<Complex> weights;
    Polynomial poly;
    int pruned = 0;
    std::vector<std::string> warnings;
    std::string descriptor;
    unsigned precision_digits = kDefaultDigits;

    std::size_t size() const { return alpha.size(); }
};

struct ExpSumOptions
{
    /// Stop at the first degree whose least-squares residual is <= epsilon.
    Real epsilon{"1e-12"};
    /// Largest degree tried; requires M >= d_max + 3.
    int d_max = 60;
    /// Use exactly this many terms instead of searching.
    std::optional<int> terms;
    /// Rank threshold that seeds the search; unset means epsilon.
    std::optional<Real> delta_seed;
    Real prune_tol{0};
    RootOptions roots;
};

/// For each candidate degree d the quadrature uses order N = M - d - 1, so
/// every Hankel entry tau_{i+j} with i + j <= M is an actual sample.
ExpSumApprox build_expsum(const SampleGrid& grid, const ExpSumOptions& options);

/// sum_m alpha_m exp(i beta_m x). Off-grid values are interpolated, not certified.
Complex eval_expsum(const ExpSumApprox& approx, const Real& x);

/// Certificate of the underlying trigonometric quadrature; its monomial bound
/// at n covers the sample x_n for d < n <= N + d.
ErrorCertificate expsum_certificate(const ExpSumApprox& approx);

struct ResidualReport
{
    Real max_residual;
    std::vector<Real> x;
    std::vector<Real> residual; ///< |f(x_n) - eval_expsum(x_n)|
};

ResidualReport residual_report(const ExpSumApprox& approx, const SampleGrid& grid);

/// Samples f at a + n (b - a) / M, n = 0..M.
SampleGrid sample_function(const std::function<Complex(const Real&)>& f, const Real& a,
                           const Real& b, int M);

// Dirichlet kernel D(x) = sin(pi (n + 1/2) x) / sin(pi x / 2), period 2.
// With s(t) = 2 sin(pi (n + 1/2) t) / (pi t), D(x) = sum_{k in Z} s(x - 2k)
// and G(y) = sum_{j >= 0} s(y + 2j) gives D(x) = G(x) + G(2 - x).

/// Closed form, with D(0) = 2n + 1.
Real dirichlet_kernel(int n, const Real& x);
/// G(y) for y >= 0. The alternating tail is summed with Cohen-Villegas-Zagier
/// acceleration until its bound drops below 10^{-(P-10)}.
Real dirichlet_half(int n, const Real& y);

struct DirichletDemo
{
    ExpSumApprox half; ///< approximation of G on [0, 2]
    ExpSumApprox full; ///< G(x) + G(2 - x), valid on the period [0, 2]
};

/// Builds a (terms / 2)-term approximation of G from M + 1 samples on [0, 2]
/// and reflects it into a terms-term approximation of D.
DirichletDemo dirichlet_kernel_demo(int n = 200, int terms = 80, int M = 950);

} // namespace agq
