#pragma once

// Hankel systems of a moment sequence and the search for low-degree
// epsilon-quasiorthogonal polynomials.

#include "agq/errors.hpp"
#include "agq/moments.hpp"
#include "agq/polynomial.hpp"
#include "agq/precision.hpp"

#include <optional>
#include <vector>

namespace agq {

/// H(i, j) = mu_{i+j} for i = 0..N, j = 0..d, and h(i) = mu_{d+1+i}.
struct HankelSystem
{
    CMatrix H;
    CVector h;
    int N = 0;
    int d = 0;
};

/// Requires at least N + d + 2 moments.
HankelSystem build_hankel(const MomentSequence& moments, int N, int d);

/// Square (size x size) Hankel matrix mu_{i+j}; needs 2 size - 1 moments.
CMatrix hankel_matrix(const MomentSequence& moments, int size);

/// Monic p(x) = x^{d+1} + sum_k p_k x^k together with its Hankel residuals.
struct QuasiPoly
{
    Polynomial p;
    Real residual_inf; ///< ||H p + h||_inf, the epsilon of the definition
    Real residual_2;   ///< ||H p + h||_2, the quantity the search drives down
    int N = 0;

    int degree() const { return p.degree() - 1; } ///< d, so that p has degree d+1
};

struct QuasiOptions
{
    /// Stop at the first degree with ||H(N,d) p + h(d)||_2 <= epsilon.
    Real epsilon{"1e-30"};
    /// Relative singular-value threshold that seeds the starting degree from
    /// the numerical rank. Unset means "same as epsilon"; <= 0 starts at d = 0.
    std::optional<Real> delta_seed;
    /// Largest degree d the search may try; unset means N - 1.
    std::optional<int> d_max;
    /// Solve directly at d = nodes - 1 instead of searching.
    std::optional<int> nodes;
};

/// Residual of one least-squares solve inside the search, for diagnostics.
struct QuasiAttempt
{
    int d;
    Real residual_2;
};

struct QuasiSearch
{
    QuasiPoly poly;
    int seed_degree = 0;
    std::vector<QuasiAttempt> attempts;
};

/// Algorithm: seed d + 1 with the numerical rank of the Hankel matrix, solve
/// the minimal-norm least-squares problem min ||H(N,d) p + h(d)||_2 and grow d
/// one column at a time until the residual drops below epsilon.
QuasiSearch find_quasiorthogonal(const MomentSequence& moments, int N,
                                 const QuasiOptions& options);

/// max_{j=0..N} |sum_k p_k mu_{k+j}| evaluated directly, leading term included.
Real quasiorthogonality_residual(const Polynomial& p, const MomentSequence& moments, int N);

/// Starting degree d such that d + 1 is the numerical rank at delta of the
/// (N+1)-row Hankel matrix, probed on column windows of doubling width.
int seed_degree(const MomentSequence& moments, int N, const Real& delta, int d_max);

} // namespace agq
