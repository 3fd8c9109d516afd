#include "abelian/complex.hpp"

#include <string>

namespace abelian {

namespace {

Complex normalise_zero_imag(Complex z) {
  if (z.imag() == 0.0) return {z.real(), 0.0};
  return z;
}

}  // namespace

Complex require_finite(Complex z, std::string_view context) {
  if (!is_finite(z)) {
    throw EvaluationError("non-finite value in " + std::string(context));
  }
  return z;
}

Complex principal_log(Complex z) {
  if (z == Complex{}) throw DomainError("logarithm of zero");
  return std::log(normalise_zero_imag(z));
}

Complex principal_power(Complex z, Complex a) {
  if (z == Complex{}) {
    if (a.real() > 0.0) return {};
    throw DomainError("zero base with exponent of non-positive real part");
  }
  if (z == Complex{1.0, 0.0}) return {1.0, 0.0};
  if (a == Complex{}) return {1.0, 0.0};
  return require_finite(std::exp(a * std::log(normalise_zero_imag(z))), "principal_power");
}

Complex principal_sqrt(Complex z) { return std::sqrt(normalise_zero_imag(z)); }

}  // namespace abelian
