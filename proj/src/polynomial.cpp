#include "agq/polynomial.hpp"

#include "agq/errors.hpp"

namespace agq {

Polynomial::Polynomial(std::vector<Complex> ascending) : coeffs_(std::move(ascending))
{
    if (coeffs_.empty())
        throw ContractError("Polynomial: empty coefficient list");
}

Polynomial Polynomial::monic(std::span<const Complex> lower)
{
    std::vector<Complex> c(lower.begin(), lower.end());
    c.emplace_back(Real(1), Real(0));
    return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots)
{
    std::vector<Complex> c{Complex(Real(1), Real(0))};
    for (const auto& r : roots) {
        // c(x) <- c(x) (x - r)
        c.emplace_back(Real(0), Real(0));
        for (std::size_t k = c.size() - 1; k > 0; --k)
            c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return Polynomial(std::move(c));
}

bool Polynomial::is_monic() const
{
    const auto& lead = coeffs_.back();
    return lead.real() == 1 && lead.imag() == 0;
}

Complex Polynomial::operator()(const Complex& z) const
{
    Complex acc = coeffs_.back();
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;)
        acc = acc * z + coeffs_[k];
    return acc;
}

std::pair<Complex, Complex> Polynomial::value_and_derivative(const Complex& z) const
{
    Complex p = coeffs_.back();
    Complex dp(Real(0), Real(0));
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;) {
        dp = dp * z + p;
        p = p * z + coeffs_[k];
    }
    return {p, dp};
}

Real Polynomial::absolute_scale(const Complex& z) const
{
    const Real r = abs_of(z);
    Real acc = abs_of(coeffs_.back());
    for (std::size_t k = coeffs_.size() - 1; k-- > 0;)
        acc = acc * r + abs_of(coeffs_[k]);
    return acc;
}

Polynomial Polynomial::divide_linear(const Complex& root) const
{
    if (degree() < 1)
        throw ContractError("Polynomial::divide_linear: degree must be at least 1");
    const std::size_t n = coeffs_.size() - 1;
    std::vector<Complex> q(n);
    q[n - 1] = coeffs_[n];
    for (std::size_t k = n - 1; k-- > 0;)
        q[k] = coeffs_[k + 1] + root * q[k + 1];
    return Polynomial(std::move(q));
}

Real Polynomial::max_abs_coefficient() const
{
    Real m(0);
    for (const auto& c : coeffs_)
        m = std::max(m, abs_of(c));
    return m;
}

} // namespace agq
