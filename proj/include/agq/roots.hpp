#pragma once

#include "agq/errors.hpp"
#include "agq/polynomial.hpp"
#include "agq/precision.hpp"

#include <string>
#include <vector>

namespace agq {

struct RootOptions
{
    /// Residual target is 10^{-(P - guard_digits)} relative to the coefficients.
    int guard_digits = 15;
    int max_iterations = 500;
    /// Precision of the companion-matrix seed (~2 x 53 bits).
    unsigned seed_digits = 32;
};

class RootFindingError : public NumericalError
{
public:
    RootFindingError(const std::string& what, std::string best_residual)
        : NumericalError(what + " (best residual " + best_residual + ")"),
          best_residual_(std::move(best_residual))
    {}

    const std::string& best_residual() const noexcept { return best_residual_; }

private:
    std::string best_residual_;
};

/// All k roots (with multiplicity) of a monic polynomial of degree k >= 1.
///
/// Companion-matrix eigenvalues at seed precision start an Aberth-Ehrlich
/// iteration at the working precision, which runs until every root satisfies
/// |p(z)| <= 10^{-(P-g)} max(max_k |p_k|, sum_k |p_k| |z|^k).
std::vector<Complex> roots_monic(const Polynomial& p, const RootOptions& options = {});

/// max_i |p(z_i)| / max_k |p_k|
Real max_relative_residual(const Polynomial& p, const std::vector<Complex>& roots);

} // namespace agq
