#include <cmath>
#include <numbers>

#include "abelian/modular.hpp"

namespace abelian {

Complex hauptmodul_lemniscatic(TauPoint tau, const TruncationPolicy& policy) {
  const Complex ratio = theta2(tau, policy) / theta3(tau, policy);
  return ratio * ratio;
}

Complex hauptmodul_equianharmonic_offset(TauPoint tau, const TruncationPolicy& policy) {
  const Complex ratio = dedekind_eta(TauPoint(9.0 * tau.value()), policy) / dedekind_eta(tau, policy);
  return 9.0 * ratio * ratio * ratio;
}

Complex hauptmodul_equianharmonic(TauPoint tau, const TruncationPolicy& policy) {
  return hauptmodul_equianharmonic_offset(tau, policy) + 1.0;
}

Complex hauptmodul_hyperelliptic(TauPoint tau, const TruncationPolicy& policy) {
  return theta2(tau, policy) / theta3(tau, policy);
}

Complex sqrt_theta_ratio(TauPoint tau, const TruncationPolicy& policy) {
  return std::numbers::sqrt2 * theta2(tau, policy) / theta2(TauPoint(0.5 * tau.value()), policy);
}

}  // namespace abelian
