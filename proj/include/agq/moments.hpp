#pragma once

// Moment sequences of measures and uniformly sampled functions.

#include "agq/precision.hpp"

#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace agq {

enum class MomentKind
{
    power,         ///< mu_n = int x^n d alpha(x)
    trigonometric, ///< tau_n = int e^{i n x} d alpha(x)
};

std::string to_string(MomentKind kind);
MomentKind moment_kind_from_string(const std::string& s);

struct MomentSequence
{
    MomentKind kind = MomentKind::power;
    std::vector<Complex> values; ///< values[n] is the n-th moment
    std::string descriptor;

    std::size_t size() const { return values.size(); }
    const Complex& operator[](std::size_t n) const { return values[n]; }

    /// Throws ContractError if empty or any entry is not finite.
    void validate() const;
    /// True when every moment is exactly zero.
    bool is_zero() const;
};

/// f sampled at a + n (b - a) / M, n = 0..M.
struct SampleGrid
{
    Real a;
    Real b;
    int M = 0;
    std::vector<Complex> samples;

    Real step() const { return (b - a) / M; }
    Real point(int n) const { return a + (b - a) * n / M; }
    void validate() const;
};

// Closed-form providers; each returns moments 0..L.

/// Lebesgue measure on [-1, 1].
MomentSequence lebesgue_pm1(int L);
/// Lebesgue measure on [0, 1].
MomentSequence lebesgue_01(int L);
/// Chebyshev weight 1/sqrt(1 - x^2) on (-1, 1).
MomentSequence chebyshev1(int L);
/// Signed measure log(x) dx on (0, 1].
MomentSequence logweight_01(int L);
/// Trigonometric moments of Lebesgue measure on [-1, 1].
MomentSequence trig_lebesgue_pm1(int L);

/// User-supplied closed form: values[n] = moment(n).
MomentSequence custom_moments(int L, MomentKind kind, const std::function<Complex(int)>& moment,
                              std::string descriptor);

/// Discrete measure sum_i w_i delta_{x_i}.
MomentSequence discrete_measure(int L, const std::vector<std::pair<Complex, Complex>>& atoms,
                                MomentKind kind = MomentKind::power);

/// tau_n = f(x_n): the samples themselves, unchanged.
MomentSequence moments_from_samples(const SampleGrid& grid);

/// Builds moments 0..L from a measure name:
///   lebesgue_pm1 | lebesgue_01 | chebyshev1 | logweight_01 | trig_lebesgue_pm1
///   | atoms:<x>:<w>[,<x>:<w>...]
MomentSequence measure_from_name(const std::string& name, int L);

/// Sample CSV: "a,<dec>", "b,<dec>", "M,<int>", then M+1 lines "<re>[,<im>]".
SampleGrid read_samples_csv(std::istream& in);
SampleGrid load_samples_csv(const std::string& path);
void write_samples_csv(std::ostream& out, const SampleGrid& grid);
void save_samples_csv(const std::string& path, const SampleGrid& grid);

} // namespace agq
