#pragma once

// Classical Gaussian rules and brute-force oracles. Nothing in the core
// construction depends on this header; it exists for comparisons and tests.

#include "agq/polynomial.hpp"
#include "agq/precision.hpp"
#include "agq/rule.hpp"

#include <functional>
#include <string>
#include <vector>

namespace agq {

enum class ClassicalFamily
{
    gauss_legendre,
    gauss_chebyshev1,
};

std::string to_string(ClassicalFamily family);

struct ClassicalRule
{
    ClassicalFamily family = ClassicalFamily::gauss_legendre;
    std::vector<Real> nodes;
    std::vector<Real> weights;

    std::size_t size() const { return nodes.size(); }
    /// Same rule as a (complex) QuadratureRule, for integrate() and JSON output.
    QuadratureRule as_rule() const;
};

/// Monic Legendre polynomial of degree k from the three-term recurrence
/// P_{j+1} = x P_j - j^2 / (4 j^2 - 1) P_{j-1}.
Polynomial monic_legendre(int k);
/// Monic Chebyshev polynomial of the first kind: T_2 = x^2 - 1/2, then
/// T_{j+1} = x T_j - T_{j-1} / 4.
Polynomial monic_chebyshev1(int k);

/// n-point Gauss-Legendre on [-1, 1]: roots of the monic recurrence
/// polynomial, weights integrate the Lagrange basis against Lebesgue moments.
ClassicalRule gauss_legendre(int n);
/// Closed form x_k = cos((2k+1) pi / (2n)), w_k = pi / n, nodes ascending.
ClassicalRule gauss_chebyshev1(int n);
/// Same rule rebuilt from the recurrence and Chebyshev moments.
ClassicalRule gauss_chebyshev1_recurrence(int n);

/// Affine map of a rule on [-1, 1] to [a, b].
ClassicalRule mapped(const ClassicalRule& rule, const Real& a, const Real& b);

/// n-th moment of a named measure from independent closed forms:
/// lebesgue_pm1, lebesgue_01, chebyshev1, logweight_01, trig_lebesgue_pm1.
Complex oracle_integral(const std::string& family, int n);

/// Tanh-sinh quadrature with level doubling; intervals that do not converge
/// are bisected. Endpoint singularities are tolerated (f is never evaluated
/// at a or b). Throws ConvergenceError when tol is out of reach.
Complex adaptive_integrate(const std::function<Complex(const Real&)>& f, const Real& a,
                           const Real& b, const Real& tol);

/// Bessel function of the first kind J_nu(z), nu >= 0, z >= 0, by Miller's
/// backward recurrence normalised with J_0 + 2 sum_k J_{2k} = 1.
Real bessel_j(int nu, const Real& z);
/// Ascending power series, summed at enough extra digits to absorb the
/// cancellation for large z. Slow; an oracle for bessel_j.
Real bessel_j_series(int nu, const Real& z);

} // namespace agq
