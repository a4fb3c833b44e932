#pragma once

// Approximate Gaussian quadrature: nodes are the zeros of an
// epsilon-quasiorthogonal polynomial p of degree d+1, weights integrate the
// Lagrange basis against the measure, and every polynomial of degree <= N+d
// carries the a posteriori bound ||Gamma_2^{-1} qbar||_1 * epsilon.

#include "agq/hankel.hpp"
#include "agq/moments.hpp"
#include "agq/polynomial.hpp"
#include "agq/precision.hpp"
#include "agq/roots.hpp"

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace agq {

struct QuadratureRule
{
    std::vector<Complex> nodes;
    std::vector<Complex> weights;
    int N = 0;
    int d = 0;
    Real epsilon;    ///< achieved ||H p + h||_inf
    Real residual_2; ///< achieved ||H p + h||_2
    MomentKind kind = MomentKind::power;
    std::string descriptor;
    unsigned precision_digits = kDefaultDigits;
    /// (node, weight) pairs removed by pruning.
    std::vector<std::pair<Complex, Complex>> pruned;

    std::size_t size() const { return nodes.size(); }
};

/// Certificate data for a quasiorthogonal p = x^{d+1} + sum_{k<=d} p_k x^k of
/// order N. Gamma_2 is N x N, unit upper triangular and Toeplitz with
/// Gamma_2(j, k) = p_{d+1+j-k} for j <= k <= j+d+1.
class ErrorCertificate
{
public:
    ErrorCertificate() = default;
    ErrorCertificate(Polynomial p, Real epsilon, int N);

    const Polynomial& polynomial() const { return p_; }
    const Real& epsilon() const { return epsilon_; }
    int order() const { return N_; }
    int degree() const { return p_.degree() - 1; }

    /// band()[s] = Gamma_2(j, j+s) = p_{d+1-s}, s = 0..d+1.
    const std::vector<Complex>& band() const { return band_; }
    CMatrix gamma2() const;

    /// ||Gamma_2^{-1} qbar||_1 * epsilon for q given by ascending coefficients;
    /// zero when deg q <= d. Throws ContractError when deg q > N + d.
    Real bound(std::span<const Complex> q) const;
    /// Same bound for q = x^n, from prefix sums of the first row of Gamma_2^{-1}.
    Real monomial_bound(int n) const;

private:
    Polynomial p_;
    Real epsilon_;
    int N_ = 0;
    std::vector<Complex> band_;
    std::vector<Real> inverse_row_prefix_; // sum_{s<=j} |row_0(Gamma_2^{-1})_s|
};

/// Zeros of p sorted lexicographically by (Re, Im).
std::vector<Complex> nodes_from_poly(const Polynomial& p, const RootOptions& options = {});

/// Row n holds the ascending coefficients of the n-th Lagrange basis polynomial.
/// Throws ContractError naming the pair when two nodes collide.
CMatrix lagrange_coefficients(const std::vector<Complex>& nodes);

/// w_n = sum_k [l_n]_k mu_k.
std::vector<Complex> compute_weights(const std::vector<Complex>& nodes,
                                     const MomentSequence& moments);

struct RuleOptions
{
    QuasiOptions quasi;
    /// Drop (x_n, w_n) with |w_n| < prune_tol * max |w_m|; 0 disables pruning.
    Real prune_tol{0};
    RootOptions roots;
};

struct BuiltRule
{
    QuadratureRule rule;
    ErrorCertificate certificate;
    QuasiSearch search;
};

BuiltRule build_rule(const MomentSequence& moments, int N, const RuleOptions& options);

/// sum_n w_n f(x_n); trigonometric rules hand the node z_n to f.
Complex integrate(const QuadratureRule& rule, const std::function<Complex(const Complex&)>& f);

/// |sum_n w_n x_n^k - mu_k| for k = 0..nmax, with exact moments supplied.
std::vector<Real> monomial_errors(const QuadratureRule& rule, const MomentSequence& exact,
                                  int nmax);

/// Convenience wrapper over ErrorCertificate::bound.
Real error_bound(const ErrorCertificate& cert, std::span<const Complex> q);

} // namespace agq
