#pragma once

#include "agq/errors.hpp"
#include "agq/precision.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <vector>

namespace agq {

/// Solves T x = rhs for the N x N unit upper-triangular Toeplitz matrix with
/// T(j, j+s) = band[s] (band[0] == 1), zero beyond the band. O(N * band).
template <typename Scalar>
VectorX<Scalar> solve_unit_upper_toeplitz_band(std::span<const Scalar> band,
                                               const VectorX<Scalar>& rhs)
{
    if (band.empty() || band[0] != Scalar(1))
        throw ContractError("toeplitz solve: diagonal must be exactly 1");
    const Index n = rhs.size();
    const Index w = static_cast<Index>(band.size());
    VectorX<Scalar> x(n);
    for (Index j = n - 1; j >= 0; --j) {
        Scalar s = rhs[j];
        const Index last = std::min(n - 1, j + w - 1);
        for (Index k = j + 1; k <= last; ++k)
            s -= band[k - j] * x[k];
        x[j] = s;
    }
    return x;
}

/// Dense entry point: validates that gamma is upper triangular, Toeplitz and
/// unit-diagonal, then solves using its band.
template <typename Scalar>
VectorX<Scalar> solve_upper_triangular_toeplitz(const MatrixX<Scalar>& gamma,
                                                const VectorX<Scalar>& rhs)
{
    const Index n = gamma.rows();
    if (n == 0 || gamma.cols() != n || rhs.size() != n)
        throw ContractError("toeplitz solve: need a square matrix matching the right-hand side");
    for (Index i = 0; i < n; ++i) {
        if (gamma(i, i) != Scalar(1))
            throw ContractError("toeplitz solve: diagonal entry " + std::to_string(i) +
                                " is not 1");
        for (Index j = 0; j < i; ++j)
            if (gamma(i, j) != Scalar(0))
                throw ContractError("toeplitz solve: matrix is not upper triangular");
        for (Index j = i + 1; j < n; ++j)
            if (gamma(i, j) != gamma(0, j - i))
                throw ContractError("toeplitz solve: matrix is not Toeplitz");
    }
    Index width = 1;
    for (Index s = 1; s < n; ++s)
        if (gamma(0, s) != Scalar(0))
            width = s + 1;
    std::vector<Scalar> band(width);
    for (Index s = 0; s < width; ++s)
        band[s] = gamma(0, s);
    return solve_unit_upper_toeplitz_band<Scalar>(std::span<const Scalar>(band), rhs);
}

} // namespace agq
