#pragma once

// Singular values by one-sided (Hestenes) Jacobi iteration.
//
// The matrix is first reduced by column-pivoted Householder QR and the
// iteration runs on R^H. For the graded Hankel matrices this library works
// with, the preconditioned iteration converges in a handful of sweeps and
// keeps small singular values to high relative accuracy.

#include "agq/errors.hpp"
#include "agq/linalg.hpp"
#include "agq/precision.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>
#include <vector>

namespace agq {

struct JacobiOptions
{
    int max_sweeps = 60;
    bool precondition = true;
};

template <typename Scalar>
std::vector<real_t<Scalar>> singular_values(const MatrixX<Scalar>& A,
                                            const JacobiOptions& options = {})
{
    using R = real_t<Scalar>;
    using std::abs;
    using std::sqrt;

    if (A.rows() == 0 || A.cols() == 0)
        throw ContractError("singular_values: empty matrix");

    MatrixX<Scalar> W;
    if (options.precondition) {
        const auto f = A.rows() >= A.cols() ? pivoted_qr<Scalar>(A)
                                            : pivoted_qr<Scalar>(A.adjoint());
        W = f.R.adjoint();
    } else {
        W = A.rows() >= A.cols() ? MatrixX<Scalar>(A) : MatrixX<Scalar>(A.adjoint());
    }

    const Index m = W.rows();
    const Index n = W.cols();
    const R tol = R(unit_roundoff()) * sqrt(R(m));

    std::vector<R> norms(n);
    auto refresh = [&] {
        for (Index j = 0; j < n; ++j) {
            R s(0);
            for (Index i = 0; i < m; ++i)
                s += abs2_of(W(i, j));
            norms[j] = s;
        }
    };
    refresh();

    int sweep = 0;
    R worst(0);
    for (; sweep < options.max_sweeps; ++sweep) {
        bool rotated = false;
        worst = 0;
        for (Index p = 0; p + 1 < n; ++p) {
            for (Index q = p + 1; q < n; ++q) {
                const R& alpha = norms[p];
                const R& beta = norms[q];
                if (alpha == 0 || beta == 0)
                    continue;
                Scalar g(0);
                const Scalar* cp = W.col(p).data();
                const Scalar* cq = W.col(q).data();
                for (Index i = 0; i < m; ++i)
                    g += conj_of(cp[i]) * cq[i];
                const R gabs = abs_of(g);
                const R scale = sqrt(alpha * beta);
                if (gabs <= tol * scale)
                    continue;
                worst = std::max(worst, R(gabs / scale));
                rotated = true;

                const R zeta = (beta - alpha) / (2 * gabs);
                const R t = (zeta >= 0 ? R(1) : R(-1)) / (abs(zeta) + sqrt(1 + zeta * zeta));
                const R c = 1 / sqrt(1 + t * t);
                const R s = c * t;
                const Scalar phase = conj_of(g) / Scalar(gabs); // e^{-i phi}
                const Scalar sp = Scalar(s) * phase;
                const Scalar cphase = Scalar(c) * phase;
                Scalar* wp = W.col(p).data();
                Scalar* wq = W.col(q).data();
                for (Index i = 0; i < m; ++i) {
                    const Scalar a = wp[i];
                    wp[i] = Scalar(c) * a - sp * wq[i];
                    wq[i] = Scalar(s) * a + cphase * wq[i];
                }
                norms[p] = alpha - t * gabs;
                norms[q] = beta + t * gabs;
            }
        }
        refresh();
        if (!rotated)
            break;
    }
    if (sweep == options.max_sweeps) {
        std::ostringstream os;
        os << "largest normalized off-diagonal " << std::scientific << std::setprecision(6) << worst;
        throw ConvergenceError("singular_values: Jacobi iteration did not converge",
                               options.max_sweeps, os.str());
    }

    std::vector<R> sigma(n);
    for (Index j = 0; j < n; ++j)
        sigma[j] = sqrt(norms[j]);
    std::sort(sigma.begin(), sigma.end(), std::greater<R>());
    return sigma;
}

/// Number of singular values strictly above delta * sigma_1.
template <typename Scalar>
Index numerical_rank(const MatrixX<Scalar>& A, const real_t<Scalar>& delta)
{
    if (!(delta > 0 && delta < 1))
        throw ContractError("numerical_rank: delta must lie in (0, 1)");
    const auto sigma = singular_values<Scalar>(A);
    if (sigma.front() == 0)
        return 0;
    const auto cut = delta * sigma.front();
    return static_cast<Index>(
        std::count_if(sigma.begin(), sigma.end(), [&](const auto& s) { return s > cut; }));
}

} // namespace agq
