#pragma once

#include "agq/precision.hpp"

#include <span>
#include <utility>
#include <vector>

namespace agq {

/// Polynomial with complex coefficients stored in ascending order.
class Polynomial
{
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Complex> ascending);

    /// x^k + sum_j lower[j] x^j with k = lower.size().
    static Polynomial monic(std::span<const Complex> lower);
    static Polynomial from_roots(std::span<const Complex> roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coefficients() const { return coeffs_; }
    const Complex& operator[](std::size_t i) const { return coeffs_[i]; }

    /// Leading coefficient exactly 1.
    bool is_monic() const;

    Complex operator()(const Complex& z) const;
    /// (p(z), p'(z)) by a single Horner pass.
    std::pair<Complex, Complex> value_and_derivative(const Complex& z) const;
    /// sum_k |p_k| |z|^k, the rounding scale of a Horner evaluation at z.
    Real absolute_scale(const Complex& z) const;

    /// Quotient of p(x) / (x - root); the remainder is discarded.
    Polynomial divide_linear(const Complex& root) const;

    Real max_abs_coefficient() const;

private:
    std::vector<Complex> coeffs_;
};

} // namespace agq
