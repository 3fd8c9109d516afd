#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string_view>

#include "abelian/errors.hpp"

namespace abelian {

/// Working precision is IEEE binary64 throughout.
using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Throws EvaluationError naming `context` when `z` has a non-finite part.
Complex require_finite(Complex z, std::string_view context);

/// exp(a * Log z) with the principal logarithm, Im Log z in (-pi, pi].
/// A signed-zero imaginary part of `z` is treated as +0, so the negative real
/// axis always takes argument +pi.
Complex principal_power(Complex z, Complex a);

/// Principal square root with the same signed-zero normalisation as
/// principal_power.
Complex principal_sqrt(Complex z);

/// Principal logarithm, Im in (-pi, pi].
Complex principal_log(Complex z);

}  // namespace abelian
