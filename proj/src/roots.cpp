#include "agq/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <ios>

namespace agq {

namespace {

std::vector<Complex> companion_seeds(const Polynomial& p, unsigned seed_digits)
{
    const int k = p.degree();
    std::vector<Complex> seeds;
    seeds.reserve(k);
    {
        PrecisionGuard low(seed_digits);
        CMatrix C = CMatrix::Zero(k, k);
        for (int i = 1; i < k; ++i)
            C(i, i - 1) = Complex(Real(1), Real(0));
        for (int i = 0; i < k; ++i)
            C(i, k - 1) = -at_working_precision(p[i]);
        Eigen::ComplexEigenSolver<CMatrix> solver(C, false);
        if (solver.info() == Eigen::Success) {
            for (int i = 0; i < k; ++i)
                seeds.push_back(solver.eigenvalues()[i]);
        }
    }
    if (static_cast<int>(seeds.size()) == k) {
        for (auto& s : seeds)
            s = at_working_precision(s);
        return seeds;
    }

    // Fallback: points on a circle enclosing every root (Cauchy bound).
    Real radius(1);
    for (int i = 0; i < k; ++i)
        radius = std::max(radius, 1 + abs_of(p[i]));
    const Real two_pi = 2 * pi();
    seeds.clear();
    for (int i = 0; i < k; ++i) {
        const Real theta = two_pi * i / k + Real("0.4");
        seeds.emplace_back(radius * cos(theta), radius * sin(theta));
    }
    return seeds;
}

/// Pulls apart seeds that coincide so the Aberth correction is defined.
void separate_seeds(std::vector<Complex>& z, unsigned seed_digits)
{
    const Real sep = pow(Real(10), -static_cast<int>(seed_digits) / 2);
    const std::size_t k = z.size();
    for (std::size_t i = 1; i < k; ++i) {
        for (int attempt = 0; attempt < 8; ++attempt) {
            bool clash = false;
            for (std::size_t j = 0; j < i && !clash; ++j)
                clash = abs_of(z[i] - z[j]) <= sep * (1 + abs_of(z[i]));
            if (!clash)
                break;
            const Real theta = 2 * pi() * Real(i) / Real(k) + Real("0.7") + attempt;
            const Real r = 2 * sep * (1 + abs_of(z[i]));
            z[i] += Complex(r * cos(theta), r * sin(theta));
        }
    }
}

} // namespace

std::vector<Complex> roots_monic(const Polynomial& p, const RootOptions& options)
{
    if (p.degree() < 1)
        throw ContractError("roots_monic: degree must be at least 1");
    if (!p.is_monic())
        throw ContractError("roots_monic: polynomial is not monic");
    for (const auto& c : p.coefficients())
        if (!isfinite(c.real()) || !isfinite(c.imag()))
            throw ContractError("roots_monic: non-finite coefficient");

    const int k = p.degree();
    if (k == 1)
        return {-p[0]};

    auto z = companion_seeds(p, options.seed_digits);
    separate_seeds(z, options.seed_digits);

    const Real tol = tolerance(options.guard_digits);
    const Real coeff_scale = p.max_abs_coefficient();
    Real best = -1;
    int polish = 1; // one extra pass after the target is met

    for (int iter = 0; iter < options.max_iterations; ++iter) {
        Real worst(0);
        for (int i = 0; i < k; ++i) {
            const auto [val, der] = p.value_and_derivative(z[i]);
            const Real scale = std::max(coeff_scale, p.absolute_scale(z[i]));
            worst = std::max(worst, Real(abs_of(val) / scale));
            if (val == Complex(0))
                continue;
            Complex repulsion(0);
            for (int j = 0; j < k; ++j)
                if (j != i)
                    repulsion += Complex(1) / (z[i] - z[j]);
            if (der == Complex(0)) {
                z[i] += Complex(tol * scale, tol * scale);
                continue;
            }
            const Complex w = val / der;
            z[i] -= w / (Complex(1) - w * repulsion);
        }
        if (best < 0 || worst < best)
            best = worst;
        if (worst <= tol && polish-- == 0)
            return z;
    }
    throw RootFindingError("roots_monic: residual target not met after " +
                               std::to_string(options.max_iterations) + " iterations",
                           best.str(6, std::ios::scientific));
}

Real max_relative_residual(const Polynomial& p, const std::vector<Complex>& roots)
{
    Real worst(0);
    for (const auto& r : roots)
        worst = std::max(worst, abs_of(p(r)));
    return worst / p.max_abs_coefficient();
}

} // namespace agq
