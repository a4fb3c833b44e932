#include "agq/hankel.hpp"

#include "agq/linalg.hpp"
#include "agq/svd.hpp"

#include <algorithm>
#include <ios>

namespace agq {

namespace {

void require_moments(const MomentSequence& moments, int N, int d)
{
    const auto need = static_cast<std::size_t>(N) + d + 2;
    if (moments.size() < need)
        throw ContractError("need N+d+2 = " + std::to_string(need) + " moments, have " +
                            std::to_string(moments.size()));
}

CVector hankel_column(const MomentSequence& moments, int N, int j)
{
    CVector c(N + 1);
    for (int i = 0; i <= N; ++i)
        c[i] = moments[i + j];
    return c;
}

CMatrix hankel_block(const MomentSequence& moments, int N, int d)
{
    CMatrix H(N + 1, d + 1);
    for (int j = 0; j <= d; ++j)
        for (int i = 0; i <= N; ++i)
            H(i, j) = moments[i + j];
    return H;
}

QuasiPoly make_quasi(const CVector& lower, const MomentSequence& moments, int N,
                     const Real& residual_2)
{
    std::vector<Complex> c(lower.data(), lower.data() + lower.size());
    QuasiPoly q{Polynomial::monic(c), Real(0), residual_2, N};
    q.residual_inf = quasiorthogonality_residual(q.p, moments, N);
    return q;
}

} // namespace

HankelSystem build_hankel(const MomentSequence& moments, int N, int d)
{
    if (N < 0 || d < 0)
        throw ContractError("build_hankel: N and d must be nonnegative");
    require_moments(moments, N, d);
    return {hankel_block(moments, N, d), hankel_column(moments, N, d + 1), N, d};
}

CMatrix hankel_matrix(const MomentSequence& moments, int size)
{
    if (size < 1)
        throw ContractError("hankel_matrix: size must be positive");
    if (moments.size() < static_cast<std::size_t>(2 * size - 1))
        throw ContractError("hankel_matrix: need " + std::to_string(2 * size - 1) + " moments");
    return hankel_block(moments, size - 1, size - 1);
}

Real quasiorthogonality_residual(const Polynomial& p, const MomentSequence& moments, int N)
{
    const int deg = p.degree();
    if (moments.size() < static_cast<std::size_t>(N + deg + 1))
        throw ContractError("quasiorthogonality_residual: not enough moments");
    Real worst(0);
    for (int j = 0; j <= N; ++j) {
        Complex s(0);
        for (int k = 0; k <= deg; ++k)
            s += p[k] * moments[k + j];
        worst = std::max(worst, abs_of(s));
    }
    return worst;
}

int seed_degree(const MomentSequence& moments, int N, const Real& delta, int d_max)
{
    int cols = std::min(8, d_max + 1);
    while (true) {
        const auto H = hankel_block(moments, N, cols - 1);
        const auto r = static_cast<int>(numerical_rank<Complex>(H, delta));
        if (r < cols || cols == d_max + 1)
            return std::max(r, 1) - 1;
        cols = std::min(2 * cols, d_max + 1);
    }
}

QuasiSearch find_quasiorthogonal(const MomentSequence& moments, int N,
                                 const QuasiOptions& options)
{
    moments.validate();
    if (N < 0)
        throw ContractError("find_quasiorthogonal: order N must be nonnegative");
    if (moments.is_zero())
        throw ContractError("find_quasiorthogonal: zero measure (all moments vanish)");

    QuasiSearch out;

    if (options.nodes) {
        const int d = *options.nodes - 1;
        if (d < 0 || d > N)
            throw ContractError("find_quasiorthogonal: node count must lie in 1..N+1");
        const auto sys = build_hankel(moments, N, d);
        const auto ls = lstsq_min_norm<Complex>(sys.H, sys.h);
        out.seed_degree = d;
        out.attempts.push_back({d, ls.residual_norm2});
        out.poly = make_quasi(ls.x, moments, N, ls.residual_norm2);
        return out;
    }

    if (!(options.epsilon > 0))
        throw ContractError("find_quasiorthogonal: epsilon must be positive");
    const int requested_max = options.d_max.value_or(std::max(N - 1, 0));
    if (requested_max < 0 || requested_max > N)
        throw ContractError("find_quasiorthogonal: d_max must lie in 0..N");
    // Largest degree the moment list supports.
    const int available = static_cast<int>(moments.size()) - N - 2;
    if (available < 0)
        throw ContractError("need N+d+2 = " + std::to_string(N + 2) + " moments, have " +
                            std::to_string(moments.size()));
    const int d_max = std::min(requested_max, available);

    const Real delta = options.delta_seed.value_or(options.epsilon);
    int d = 0;
    if (delta > 0 && delta < 1)
        d = seed_degree(moments, N, delta, d_max);
    out.seed_degree = d;

    GrowingQR<Complex> qr(N + 1);
    bool incremental = true;
    for (int j = 0; j <= d && incremental; ++j)
        incremental = qr.append(hankel_column(moments, N, j));

    std::vector<DegreeExhaustedError::Attempt> report;
    for (; d <= d_max; ++d) {
        const CVector h = hankel_column(moments, N, d + 1);
        const auto ls = incremental ? qr.solve(h)
                                    : lstsq_min_norm<Complex>(hankel_block(moments, N, d), h);
        out.attempts.push_back({d, ls.residual_norm2});
        report.push_back({d, ls.residual_norm2.str(6, std::ios::scientific)});
        if (ls.residual_norm2 <= options.epsilon) {
            out.poly = make_quasi(ls.x, moments, N, ls.residual_norm2);
            return out;
        }
        // H(N, d+1) is H(N, d) with h(d) appended.
        if (incremental && d < d_max)
            incremental = qr.append(h);
    }
    if (d_max < requested_max)
        throw DegreeExhaustedError("find_quasiorthogonal: moments exhausted at d = " +
                                       std::to_string(d_max) + " before reaching epsilon",
                                   std::move(report));
    throw DegreeExhaustedError("find_quasiorthogonal: no degree up to d_max = " +
                                   std::to_string(d_max) + " reaches epsilon",
                               std::move(report));
}

} // namespace agq
