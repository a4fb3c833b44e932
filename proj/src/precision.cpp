#include "agq/precision.hpp"

#include "agq/errors.hpp"

#include <cmath>
#include <ios>
#include <regex>

namespace agq {

PrecisionGuard::PrecisionGuard(unsigned digits) : previous_(Real::default_precision())
{
    if (digits < 10)
        throw ContractError("precision must be at least 10 decimal digits");
    Real::default_precision(digits);
}

PrecisionGuard::~PrecisionGuard() { Real::default_precision(previous_); }

unsigned current_digits() { return Real::default_precision(); }

Real tolerance(int guard_digits)
{
    return pow(Real(10), -static_cast<int>(current_digits()) + guard_digits);
}

Real unit_roundoff()
{
    const Real one(1);
    const auto bits = mpfr_get_prec(one.backend().data());
    return ldexp(one, 1 - static_cast<int>(bits));
}

Real pi()
{
    Real p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

Real at_working_precision(const Real& x)
{
    Real y = x;
    y.precision(current_digits());
    return y;
}

Complex at_working_precision(const Complex& z)
{
    return {at_working_precision(z.real()), at_working_precision(z.imag())};
}

std::string to_decimal(const Real& x)
{
    if (x == 0)
        return "0";
    const auto bits = mpfr_get_prec(x.backend().data());
    const auto digits = static_cast<std::streamsize>(std::ceil(bits * 0.30102999566398120) + 1);
    return x.str(digits, std::ios::scientific);
}

Real parse_decimal(std::string_view text)
{
    static const std::regex grammar(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
    std::string s(text);
    if (!std::regex_match(s, grammar))
        throw ParseError("not a decimal number: '" + s + "'", 0);
    return Real(s);
}

} // namespace agq
