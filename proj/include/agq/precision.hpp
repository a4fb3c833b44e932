#pragma once

// Extended-precision scalar types and the precision context.
//
// Every computation runs at a working precision of P decimal digits held by
// the MPFR default-precision setting of the calling thread. PrecisionGuard
// installs a precision for a scope and restores the previous one on exit.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <Eigen/Core>

#include <complex>
#include <string>
#include <string_view>
#include <type_traits>

namespace agq {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Complex = std::complex<Real>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CMatrix = MatrixX<Complex>;
using CVector = VectorX<Complex>;
using RMatrix = MatrixX<Real>;
using RVector = VectorX<Real>;

using Index = Eigen::Index;

/// Decimal digits used for rule construction unless the caller asks otherwise.
inline constexpr unsigned kDefaultDigits = 100;
/// Decimal digits for paths that only evaluate an existing rule.
inline constexpr unsigned kEvaluationDigits = 30;

struct Precision
{
    unsigned digits = kDefaultDigits;
};

class PrecisionGuard
{
public:
    explicit PrecisionGuard(unsigned digits);
    explicit PrecisionGuard(Precision p) : PrecisionGuard(p.digits) {}
    ~PrecisionGuard();

    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned previous_;
};

unsigned current_digits();

/// 10^{-(P - guard)} at the current precision P.
Real tolerance(int guard_digits);
/// Unit roundoff of the current precision (2^{1-bits}).
Real unit_roundoff();
Real pi();

/// Copies of x rounded to (or widened to) the current working precision.
Real at_working_precision(const Real& x);
Complex at_working_precision(const Complex& z);

/// Decimal string with enough digits to read back to the identical binary value.
std::string to_decimal(const Real& x);
/// Strict decimal parse: [+-]digits[.digits][e[+-]digits]. Throws ParseError.
Real parse_decimal(std::string_view text);

// Scalar helpers shared by the templated kernels (real or complex scalar).

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};
template <typename T>
inline constexpr bool is_complex_v = is_complex<T>::value;

template <typename Scalar>
using real_t = typename Eigen::NumTraits<Scalar>::Real;

template <typename Scalar>
Scalar conj_of(const Scalar& x)
{
    if constexpr (is_complex_v<Scalar>)
        return std::conj(x);
    else
        return x;
}

template <typename Scalar>
real_t<Scalar> abs2_of(const Scalar& x)
{
    if constexpr (is_complex_v<Scalar>)
        return x.real() * x.real() + x.imag() * x.imag();
    else
        return x * x;
}

template <typename Scalar>
real_t<Scalar> abs_of(const Scalar& x)
{
    using std::abs;
    using std::sqrt;
    if constexpr (is_complex_v<Scalar>)
        return sqrt(abs2_of(x));
    else
        return abs(x);
}

/// Unit-modulus phase of x (1 for x == 0).
template <typename Scalar>
Scalar phase_of(const Scalar& x)
{
    const auto a = abs_of(x);
    if (a == 0)
        return Scalar(1);
    return x / Scalar(a);
}

template <typename Vec>
auto norm2(const Vec& v)
{
    using std::sqrt;
    using Scalar = std::decay_t<decltype(v[0])>;
    real_t<Scalar> s(0);
    for (Index i = 0; i < static_cast<Index>(v.size()); ++i)
        s += abs2_of(v[i]);
    return sqrt(s);
}

} // namespace agq
