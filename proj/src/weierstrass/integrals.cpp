#include <cmath>

#include "abelian/weierstrass.hpp"

namespace abelian {

namespace {

struct LatticeAndU {
  const WeierstrassLattice* lattice;
  Complex u;
};

LatticeAndU invert(Complex z, const EllipticInvariants& inv, Branch branch,
                   const TruncationPolicy& policy) {
  const double s = branch_sign(branch);
  if (inv == EllipticInvariants::lemniscatic()) {
    return {&lemniscatic_lattice(), s * wp_inverse_lemniscatic(z, policy)};
  }
  if (inv == EllipticInvariants::equianharmonic()) {
    return {&equianharmonic_lattice(), s * wp_inverse_equianharmonic(z, policy)};
  }
  throw DomainError("Abelian integrals are implemented for the (4, 0) and (0, 4) lattices only");
}

}  // namespace

Complex integral_second_kind(Complex z, const EllipticInvariants& inv, Branch branch,
                             const TruncationPolicy& policy) {
  const auto [lattice, u] = invert(z, inv, branch, policy);
  return -lattice->zeta(u);
}

Complex integral_third_kind(Complex z, ThirdKindParam p, const EllipticInvariants& inv,
                            Branch branch, const TruncationPolicy& policy) {
  const auto [lattice, u] = invert(z, inv, branch, policy);
  const Complex alpha = p.alpha_point;
  if (alpha == Complex{}) throw DomainError("third-kind parameter must not be a lattice point");
  const Complex numerator = lattice->sigma(u - alpha);
  if (std::abs(numerator) < 1e-300 || std::abs(u - alpha) < 1e-14 * (1.0 + std::abs(alpha))) {
    throw DomainError("third-kind integral evaluated at its logarithmic pole z = wp(alpha)");
  }
  return principal_log(numerator / lattice->sigma(u)) + lattice->zeta(alpha) * u;
}

}  // namespace abelian
