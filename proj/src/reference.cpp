#include "agq/reference.hpp"

#include "agq/errors.hpp"
#include "agq/moments.hpp"
#include "agq/roots.hpp"

#include <algorithm>
#include <cmath>
#include <ios>

namespace agq {

std::string to_string(ClassicalFamily family)
{
    return family == ClassicalFamily::gauss_legendre ? "gauss_legendre" : "gauss_chebyshev1";
}

QuadratureRule ClassicalRule::as_rule() const
{
    QuadratureRule r;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        r.nodes.emplace_back(nodes[i], Real(0));
        r.weights.emplace_back(weights[i], Real(0));
    }
    r.d = static_cast<int>(nodes.size()) - 1;
    r.N = r.d;
    r.epsilon = Real(0);
    r.residual_2 = Real(0);
    r.descriptor = to_string(family);
    r.precision_digits = current_digits();
    return r;
}

namespace {

void check_count(int n)
{
    if (n < 1)
        throw ContractError("classical rule needs at least one node");
}

// Real part of each root, ascending. The recurrence polynomials have real
// simple zeros, so the imaginary parts are rounding noise.
std::vector<Real> real_roots(const Polynomial& p)
{
    const auto z = roots_monic(p);
    std::vector<Real> x;
    x.reserve(z.size());
    for (const auto& r : z)
        x.push_back(r.real());
    std::sort(x.begin(), x.end());
    return x;
}

ClassicalRule from_recurrence(ClassicalFamily family, const Polynomial& p,
                              const MomentSequence& moments)
{
    ClassicalRule rule{family, real_roots(p), {}};
    std::vector<Complex> z(rule.nodes.begin(), rule.nodes.end());
    for (const auto& w : compute_weights(z, moments))
        rule.weights.push_back(w.real());
    return rule;
}

} // namespace

Polynomial monic_legendre(int k)
{
    if (k < 0)
        throw ContractError("monic_legendre: negative degree");
    std::vector<Complex> prev{Complex(1)};
    if (k == 0)
        return Polynomial(prev);
    std::vector<Complex> cur{Complex(0), Complex(1)};
    for (int j = 1; j < k; ++j) {
        const Real c = Real(j * j) / (4 * j * j - 1);
        std::vector<Complex> next(j + 2, Complex(0));
        for (int i = 0; i <= j; ++i)
            next[i + 1] = cur[i];
        for (int i = 0; i < j; ++i)
            next[i] -= c * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return Polynomial(cur);
}

Polynomial monic_chebyshev1(int k)
{
    if (k < 0)
        throw ContractError("monic_chebyshev1: negative degree");
    std::vector<Complex> prev{Complex(1)};
    if (k == 0)
        return Polynomial(prev);
    std::vector<Complex> cur{Complex(0), Complex(1)};
    for (int j = 1; j < k; ++j) {
        const Real c = j == 1 ? Real(1) / 2 : Real(1) / 4;
        std::vector<Complex> next(j + 2, Complex(0));
        for (int i = 0; i <= j; ++i)
            next[i + 1] = cur[i];
        for (int i = 0; i < j; ++i)
            next[i] -= c * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return Polynomial(cur);
}

ClassicalRule gauss_legendre(int n)
{
    check_count(n);
    return from_recurrence(ClassicalFamily::gauss_legendre, monic_legendre(n),
                           lebesgue_pm1(n));
}

ClassicalRule gauss_chebyshev1(int n)
{
    check_count(n);
    ClassicalRule rule{ClassicalFamily::gauss_chebyshev1, {}, {}};
    const Real w = pi() / n;
    for (int k = n - 1; k >= 0; --k) {
        rule.nodes.push_back(cos(pi() * (2 * k + 1) / (2 * n)));
        rule.weights.push_back(w);
    }
    return rule;
}

ClassicalRule gauss_chebyshev1_recurrence(int n)
{
    check_count(n);
    return from_recurrence(ClassicalFamily::gauss_chebyshev1, monic_chebyshev1(n), chebyshev1(n));
}

ClassicalRule mapped(const ClassicalRule& rule, const Real& a, const Real& b)
{
    if (!(b > a))
        throw ContractError("mapped: need b > a");
    ClassicalRule out = rule;
    const Real half = (b - a) / 2;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out.nodes[i] = a + half * (rule.nodes[i] + 1);
        out.weights[i] = half * rule.weights[i];
    }
    return out;
}

Complex oracle_integral(const std::string& family, int n)
{
    if (n < 0)
        throw ContractError("oracle_integral: negative index");
    if (family == "lebesgue_pm1")
        return Complex(n % 2 == 0 ? Real(2) / (n + 1) : Real(0));
    if (family == "lebesgue_01")
        return Complex(Real(1) / (n + 1));
    if (family == "logweight_01") {
        const Real k(n + 1);
        return Complex(-1 / (k * k));
    }
    if (family == "chebyshev1") {
        if (n % 2 == 1)
            return Complex(Real(0));
        // pi binom(n, n/2) / 2^n
        Real binom(1);
        const int h = n / 2;
        for (int j = 1; j <= h; ++j)
            binom = binom * (h + j) / j;
        return Complex(ldexp(pi() * binom, -n));
    }
    if (family == "trig_lebesgue_pm1") {
        if (n == 0)
            return Complex(Real(2));
        // (e^{in} - e^{-in}) / (in)
        const Complex e(cos(Real(n)), sin(Real(n)));
        return (e - std::conj(e)) / Complex(Real(0), Real(n));
    }
    throw ContractError("oracle_integral: unknown family '" + family + "'");
}

namespace {

struct TanhSinh
{
    const std::function<Complex(const Real&)>& f;
    Real t_max;
    int max_level;

    // Sum of w(t) f(x(t)) over t = k h for the given k (step 1 or 2).
    Complex level_sum(const Real& a, const Real& b, const Real& h, int first, int stride) const
    {
        const Real half = (b - a) / 2;
        const Real half_pi = pi() / 2;
        Complex s(0);
        for (int k = first;; k += stride) {
            const Real t = h * k;
            if (t > t_max)
                break;
            const Real u = half_pi * sinh(t);
            const Real cu = cosh(u);
            const Real w = half * half_pi * cosh(t) / (cu * cu);
            // Distance to the nearer endpoint, free of cancellation.
            const Real delta = half * 2 / (exp(2 * u) + 1);
            if (k == 0) {
                s += w * f(a + half);
                continue;
            }
            if (delta <= 0)
                break;
            s += w * (f(b - delta) + f(a + delta));
        }
        return s;
    }

    bool run(const Real& a, const Real& b, const Real& tol, Complex& out) const
    {
        Real h(1);
        Complex sum = level_sum(a, b, h, 0, 1);
        Complex estimate = h * sum;
        for (int level = 1; level <= max_level; ++level) {
            h /= 2;
            sum += level_sum(a, b, h, 1, 2);
            const Complex next = h * sum;
            const Real change = abs_of(Complex(next - estimate));
            estimate = next;
            if (level >= 3 && change <= tol) {
                out = estimate;
                return true;
            }
        }
        out = estimate;
        return false;
    }
};

Complex integrate_segment(const TanhSinh& ts, const Real& a, const Real& b, const Real& tol,
                          int depth)
{
    Complex value;
    if (ts.run(a, b, tol, value))
        return value;
    if (depth >= 12)
        throw ConvergenceError("adaptive_integrate: no convergence on [" + a.str(8) + ", " +
                                   b.str(8) + "]",
                               ts.max_level, "bisection depth " + std::to_string(depth));
    const Real mid = (a + b) / 2;
    return integrate_segment(ts, a, mid, tol / 2, depth + 1) +
           integrate_segment(ts, mid, b, tol / 2, depth + 1);
}

} // namespace

Complex adaptive_integrate(const std::function<Complex(const Real&)>& f, const Real& a,
                           const Real& b, const Real& tol)
{
    if (!(b > a))
        throw ContractError("adaptive_integrate: need b > a");
    if (!(tol > 0))
        throw ContractError("adaptive_integrate: tol must be positive");
    // Beyond t_max the weights fall below 10^{-(P+10)}.
    const Real t_max = asinh(log(Real(10)) * (current_digits() + 10) / pi());
    const TanhSinh ts{f, t_max, 10};
    return integrate_segment(ts, a, b, tol, 0);
}

Real bessel_j(int nu, const Real& z)
{
    if (nu < 0 || z < 0)
        throw ContractError("bessel_j: need nu >= 0 and z >= 0");
    if (z == 0)
        return Real(nu == 0 ? 1 : 0);
    const unsigned digits = current_digits();
    Real result;
    {
        PrecisionGuard guard(digits + 20);
        const Real x = at_working_precision(z);
        const long zi = static_cast<long>(ceil(x).convert_to<double>());
        long start = std::max<long>(nu, zi) + 3 * static_cast<long>(digits) + 40;
        start += start % 2;
        Real next(0), cur(1), value(0), norm(0);
        for (long k = start; k >= 1; --k) {
            // cur = f_k, next = f_{k+1}; produce f_{k-1}.
            const Real prev = 2 * Real(k) / x * cur - next;
            next = cur;
            cur = prev;
            if (k - 1 == nu)
                value = cur;
            if ((k - 1) % 2 == 0)
                norm += (k - 1 == 0) ? cur : 2 * cur;
        }
        result = value / norm;
    }
    return at_working_precision(result);
}

Real bessel_j_series(int nu, const Real& z)
{
    if (nu < 0 || z < 0)
        throw ContractError("bessel_j_series: need nu >= 0 and z >= 0");
    if (z == 0)
        return Real(nu == 0 ? 1 : 0);
    const unsigned digits = current_digits();
    // Terms peak near e^z; sum with that many extra digits.
    const unsigned extra = static_cast<unsigned>(z.convert_to<double>() / std::log(10.0)) + 20;
    Real result;
    {
        PrecisionGuard guard(digits + extra);
        const Real half = at_working_precision(z) / 2;
        const Real q = -half * half;
        Real term = pow(half, nu);
        for (int j = 1; j <= nu; ++j)
            term /= j;
        Real sum = term;
        const Real tiny = tolerance(-5);
        for (int k = 1;; ++k) {
            term = term * q / (Real(k) * (k + nu));
            sum += term;
            if (k > half && abs(term) < tiny)
                break;
        }
        result = sum;
    }
    return at_working_precision(result);
}

} // namespace agq
