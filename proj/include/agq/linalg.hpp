#pragma once

// Householder QR kernels and minimal-norm least squares for real or complex
// extended-precision matrices.

#include "agq/errors.hpp"
#include "agq/precision.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace agq {

/// Elementary reflector H = I - tau v v^H with v(0) = 1 and real tau, so that
/// H x = beta e_1 with |beta| = ||x||.
template <typename Scalar>
struct Reflector
{
    VectorX<Scalar> v;
    real_t<Scalar> tau{0};
    Scalar beta{0};

    /// y(offset:) <- H y(offset:)
    template <typename Vec>
    void apply(Vec& y, Index offset) const
    {
        if (tau == 0)
            return;
        Scalar s(0);
        for (Index i = 0; i < v.size(); ++i)
            s += conj_of(v[i]) * y[offset + i];
        s *= Scalar(tau);
        for (Index i = 0; i < v.size(); ++i)
            y[offset + i] -= s * v[i];
    }

    void apply_to_column(MatrixX<Scalar>& W, Index col, Index offset) const
    {
        if (tau == 0)
            return;
        Scalar s(0);
        for (Index i = 0; i < v.size(); ++i)
            s += conj_of(v[i]) * W(offset + i, col);
        s *= Scalar(tau);
        for (Index i = 0; i < v.size(); ++i)
            W(offset + i, col) -= s * v[i];
    }
};

template <typename Vec>
auto make_reflector(const Vec& x)
{
    using Scalar = std::decay_t<decltype(x[0])>;
    Reflector<Scalar> h;
    const Index n = static_cast<Index>(x.size());
    h.v = VectorX<Scalar>::Zero(n);
    h.v[0] = Scalar(1);
    const auto sigma = norm2(x);
    if (sigma == 0)
        return h;
    const auto a0 = abs_of(x[0]);
    const Scalar ph = phase_of(x[0]);
    h.beta = -ph * Scalar(sigma);
    const Scalar u0 = ph * Scalar(a0 + sigma);
    for (Index i = 1; i < n; ++i)
        h.v[i] = x[i] / u0;
    h.tau = (sigma + a0) / sigma;
    return h;
}

/// A P = Q R with column pivoting on the largest remaining column norm.
template <typename Scalar>
struct PivotedQR
{
    MatrixX<Scalar> R; // min(m,n) x n upper trapezoid
    std::vector<Reflector<Scalar>> reflectors;
    std::vector<Index> perm; // R column j belongs to A column perm[j]

    void apply_qh(VectorX<Scalar>& y) const
    {
        for (std::size_t j = 0; j < reflectors.size(); ++j)
            reflectors[j].apply(y, static_cast<Index>(j));
    }
};

template <typename Scalar>
PivotedQR<Scalar> pivoted_qr(MatrixX<Scalar> W)
{
    using R = real_t<Scalar>;
    const Index m = W.rows();
    const Index n = W.cols();
    const Index k = std::min(m, n);

    PivotedQR<Scalar> f;
    f.perm.resize(n);
    std::iota(f.perm.begin(), f.perm.end(), Index{0});
    f.reflectors.reserve(k);

    for (Index j = 0; j < k; ++j) {
        Index best = j;
        R best_norm(-1);
        for (Index c = j; c < n; ++c) {
            R s(0);
            for (Index i = j; i < m; ++i)
                s += abs2_of(W(i, c));
            if (s > best_norm) {
                best_norm = s;
                best = c;
            }
        }
        if (best != j) {
            W.col(j).swap(W.col(best));
            std::swap(f.perm[j], f.perm[best]);
        }
        VectorX<Scalar> x = W.col(j).tail(m - j);
        auto h = make_reflector(x);
        W(j, j) = h.beta;
        for (Index i = j + 1; i < m; ++i)
            W(i, j) = Scalar(0);
        for (Index c = j + 1; c < n; ++c)
            h.apply_to_column(W, c, j);
        f.reflectors.push_back(std::move(h));
    }
    f.R = W.topRows(k);
    return f;
}

template <typename Scalar>
struct LstsqResult
{
    VectorX<Scalar> x;
    real_t<Scalar> residual_norm2;
    Index rank = 0;
};

namespace detail {

/// ||A x + b||_2 evaluated directly.
template <typename Scalar>
real_t<Scalar> affine_residual(const MatrixX<Scalar>& A, const VectorX<Scalar>& x,
                               const VectorX<Scalar>& b)
{
    VectorX<Scalar> r = b;
    for (Index j = 0; j < A.cols(); ++j)
        for (Index i = 0; i < A.rows(); ++i)
            r[i] += A(i, j) * x[j];
    return norm2(r);
}

/// Solves U y = rhs for upper-triangular U (leading n x n block).
template <typename Scalar>
VectorX<Scalar> back_substitute(const MatrixX<Scalar>& U, const VectorX<Scalar>& rhs, Index n)
{
    VectorX<Scalar> y(n);
    for (Index i = n - 1; i >= 0; --i) {
        Scalar s = rhs[i];
        for (Index j = i + 1; j < n; ++j)
            s -= U(i, j) * y[j];
        y[i] = s / U(i, i);
    }
    return y;
}

} // namespace detail

/// Minimizer of ||A x + b||_2 with minimal ||x||_2 among minimizers.
///
/// Householder QR with column-norm pivoting; when R has numerical rank
/// r < k at threshold 10^{-(P-10)} |R_00| the trailing block is dropped and
/// the minimal-norm solution comes from a complete orthogonal decomposition.
template <typename Scalar>
LstsqResult<Scalar> lstsq_min_norm(const MatrixX<Scalar>& A, const VectorX<Scalar>& b)
{
    const Index m = A.rows();
    const Index k = A.cols();
    if (k < 1 || m < k)
        throw ContractError("lstsq_min_norm: need m >= k >= 1");
    if (b.size() != m)
        throw ContractError("lstsq_min_norm: right-hand side length does not match rows");

    auto f = pivoted_qr<Scalar>(A);
    VectorX<Scalar> c = b;
    f.apply_qh(c);

    LstsqResult<Scalar> out;
    out.x = VectorX<Scalar>::Zero(k);
    const auto r00 = abs_of(f.R(0, 0));
    if (r00 == 0) {
        out.residual_norm2 = norm2(b);
        return out;
    }
    const auto threshold = real_t<Scalar>(tolerance(10)) * r00;
    Index rank = 0;
    while (rank < k && abs_of(f.R(rank, rank)) > threshold)
        ++rank;
    out.rank = rank;

    VectorX<Scalar> y = VectorX<Scalar>::Zero(k);
    VectorX<Scalar> neg_c = -c.head(k);
    if (rank == k) {
        y = detail::back_substitute<Scalar>(f.R, neg_c, k);
    } else {
        // R(0:r, :) = [S^H 0] Z^H from a QR of its adjoint.
        MatrixX<Scalar> T = f.R.topRows(rank).adjoint();
        std::vector<Reflector<Scalar>> zs;
        for (Index j = 0; j < rank; ++j) {
            VectorX<Scalar> x = T.col(j).tail(k - j);
            auto h = make_reflector(x);
            T(j, j) = h.beta;
            for (Index i = j + 1; i < k; ++i)
                T(i, j) = Scalar(0);
            for (Index col = j + 1; col < rank; ++col)
                h.apply_to_column(T, col, j);
            zs.push_back(std::move(h));
        }
        // S^H u = -c(0:r), forward substitution on the lower-triangular S^H.
        VectorX<Scalar> u = VectorX<Scalar>::Zero(k);
        for (Index i = 0; i < rank; ++i) {
            Scalar s = neg_c[i];
            for (Index j = 0; j < i; ++j)
                s -= conj_of(T(j, i)) * u[j];
            u[i] = s / conj_of(T(i, i));
        }
        // y = Z u, Z = H_0 H_1 ... H_{r-1}
        for (Index j = rank - 1; j >= 0; --j)
            zs[j].apply(u, j);
        y = u;
    }
    for (Index j = 0; j < k; ++j)
        out.x[f.perm[j]] = y[j];
    out.residual_norm2 = detail::affine_residual(A, out.x, b);
    return out;
}

/// Householder QR that grows one column at a time.
///
/// Each appended column costs one pass of the existing reflectors, so a
/// sequence of least-squares problems whose design matrices differ by a
/// trailing column is solved without refactoring.
template <typename Scalar>
class GrowingQR
{
public:
    explicit GrowingQR(Index rows) : rows_(rows) {}

    Index rows() const { return rows_; }
    Index cols() const { return static_cast<Index>(columns_.size()); }

    /// Appends a column. Returns false, leaving the factor unchanged, when the
    /// column is numerically dependent on the current ones.
    bool append(const VectorX<Scalar>& column)
    {
        if (column.size() != rows_)
            throw ContractError("GrowingQR::append: column length mismatch");
        const Index j = cols();
        if (j >= rows_)
            throw ContractError("GrowingQR::append: factor already square");
        VectorX<Scalar> c = column;
        for (Index i = 0; i < j; ++i)
            reflectors_[i].apply(c, i);
        VectorX<Scalar> tail = c.tail(rows_ - j);
        auto h = make_reflector(tail);
        const auto diag = abs_of(h.beta);
        auto scale = std::max(max_diag_, norm2(column));
        if (scale == 0 || diag <= real_t<Scalar>(tolerance(10)) * scale)
            return false;
        max_diag_ = std::max(max_diag_, diag);
        VectorX<Scalar> rcol(j + 1);
        rcol.head(j) = c.head(j);
        rcol[j] = h.beta;
        rcols_.push_back(std::move(rcol));
        reflectors_.push_back(std::move(h));
        columns_.push_back(column);
        return true;
    }

    /// Minimizer of ||A x + b|| over the current columns A.
    LstsqResult<Scalar> solve(const VectorX<Scalar>& rhs) const
    {
        const Index k = cols();
        if (k == 0)
            throw ContractError("GrowingQR::solve: no columns");
        VectorX<Scalar> c = rhs;
        for (Index i = 0; i < k; ++i)
            reflectors_[i].apply(c, i);
        LstsqResult<Scalar> out;
        out.rank = k;
        out.x.resize(k);
        for (Index i = k - 1; i >= 0; --i) {
            Scalar s = -c[i];
            for (Index j = i + 1; j < k; ++j)
                s -= rcols_[j][i] * out.x[j];
            out.x[i] = s / rcols_[i][i];
        }
        VectorX<Scalar> r = rhs;
        for (Index j = 0; j < k; ++j)
            for (Index i = 0; i < rows_; ++i)
                r[i] += columns_[j][i] * out.x[j];
        out.residual_norm2 = norm2(r);
        return out;
    }

    MatrixX<Scalar> matrix() const
    {
        MatrixX<Scalar> A(rows_, cols());
        for (Index j = 0; j < cols(); ++j)
            A.col(j) = columns_[j];
        return A;
    }

private:
    Index rows_;
    std::vector<Reflector<Scalar>> reflectors_;
    std::vector<VectorX<Scalar>> rcols_;
    std::vector<VectorX<Scalar>> columns_;
    real_t<Scalar> max_diag_{0};
};

} // namespace agq
