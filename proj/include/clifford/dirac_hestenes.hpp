#pragma once

#include <array>
#include <functional>
#include <utility>

#include "clifford/multivector.hpp"
#include "clifford/spacetime.hpp"
#include "clifford/weyl_spinors.hpp"

namespace clifford::dirac {

/// Cl(3,0)-valued field over spacetime.  Derivatives come from an analytic
/// gradient callback when one is attached, otherwise from central finite
/// differences with the configured step.
class Mv30Field {
 public:
  using ValueFn = std::function<Multivector(const SpacetimePoint&)>;
  /// Returns (d/dt, d/dx1, d/dx2, d/dx3).
  using GradientFn = std::function<std::array<Multivector, 4>(const SpacetimePoint&)>;

  explicit Mv30Field(ValueFn value) : value_(std::move(value)) {}
  Mv30Field(ValueFn value, GradientFn grad)
      : value_(std::move(value)), grad_(std::move(grad)) {}

  Multivector value(const SpacetimePoint& pt) const { return value_(pt); }
  std::array<Multivector, 4> derivatives(const SpacetimePoint& pt) const;

  bool has_analytic_gradient() const { return static_cast<bool>(grad_); }
  double step() const { return h_; }
  Mv30Field with_step(double h) const;
  /// Same field with the analytic gradient dropped (forces finite differences).
  Mv30Field without_gradient() const;

 private:
  ValueFn value_;
  GradientFn grad_;
  double h_ = 1e-4;
};

/// Applies a linear multivector map to a field's values and, when present,
/// its analytic derivatives (linear maps commute with differentiation).
Mv30Field transform_field(const Mv30Field& f,
                          std::function<Multivector(const Multivector&)> linear_op);

/// External electromagnetic potential (phi, A).
struct PotentialField {
  std::function<double(const SpacetimePoint&)> phi;
  std::function<std::array<double, 3>(const SpacetimePoint&)> vector_potential;
  static PotentialField zero();
};

/// Residual of the Cl(3,0) Dirac-Hestenes equation
///   dt Psi + grad Psi = [e (A - phi) Psi - m hat(Psi)] e123 e3,
/// where grad = sum_k e_k d/dx_k acts by left multiplication.  Zero residual
/// means Psi solves the equation at pt.
Multivector dhe_residual(const Mv30Field& psi, const PotentialField& pot, double mass,
                         const SpacetimePoint& pt, double coupling = 1.0);

/// Momentum operator: grad Psi * e123 e3 evaluated at pt.
Multivector momentum_apply(const Mv30Field& psi, const SpacetimePoint& pt);

/// Pure boost for momentum p and mass m > 0:
///   L = (E + m + p) / sqrt(2 m (E + m)),  E = sqrt(m^2 + |p|^2),
/// a unit rotor (L conj(L) = 1) with L (E - p) L = m.
Multivector boost(const std::array<double, 3>& p, double m);

enum class FrequencyBranch { Plus, Minus };
enum class SpinLabel { Up, Down };

struct PlaneWaveParams {
  FrequencyBranch branch = FrequencyBranch::Plus;
  SpinLabel spin = SpinLabel::Up;
  std::array<double, 3> p{};
  double m = 1.0;
  double energy() const;  // sqrt(m^2 + |p|^2)
};

/// Plane-wave solution L(p) * Psi0 * exp(-+ e123 e3 (E t - p.x)) with rest
/// prefactor Psi0 in {1, e1 e3, e123, e2} for (+up, +down, -up, -down); the
/// exponent sign is - for the + branch and + for the - branch.
Multivector planewave(const PlaneWaveParams& params, const SpacetimePoint& pt);
/// Same solution as a field with its analytic gradient attached.
Mv30Field planewave_field(const PlaneWaveParams& params);

/// Right multiplication by c + d e123 e3 (the allowed phase freedom; left
/// multiplication by e123 e3 does not preserve solutions).
Multivector right_phase(const Multivector& psi, double c, double d);
Mv30Field right_phase(const Mv30Field& psi, double c, double d);

/// Psi conj(Psi) = a + b e123 = rho exp(e123 beta) gives the polar split
///   Psi = sqrt(rho) exp(e123 beta/2) R,   R conj(R) = 1,
/// with beta in (-pi, pi] (the b -> 0+, a < 0 limit maps to +pi).  Throws
/// std::domain_error when rho <= 1e-12 |Psi|^2 (no decomposition exists).
struct LounestoDecomposition {
  double rho = 0.0;
  double beta = 0.0;
  Multivector rotor;
};
LounestoDecomposition lounesto_decompose(const Multivector& psi);

/// psi -> (xi, eta_hat) = (psi f+, psi f-); xi + eta_hat = psi exactly.
std::pair<Multivector, Multivector> weyl_split(const Multivector& psi);

/// Residuals of the coupled first-order system
///   (dt + grad) xi  e123 = m eta,
///   (dt - grad) eta e123 = m xi,
/// where eta = hat(psi f-).  Both vanish iff psi solves the free equation.
std::pair<Multivector, Multivector> weyl_residuals(const Mv30Field& xi, const Mv30Field& eta,
                                                   double mass, const SpacetimePoint& pt);

/// psi -> (phi, chi) = (<psi>_even, <psi>_odd e3); psi = phi + chi e3 exactly.
std::pair<Multivector, Multivector> pauli_split(const Multivector& psi);

/// Residuals of the equivalent Pauli-type system
///   dt phi e123 e3 + grad chi e123 = m phi,
///   dt chi e123 e3 + grad phi e123 = -m chi.
std::pair<Multivector, Multivector> pauli_residuals(const Mv30Field& phi, const Mv30Field& chi,
                                                    double mass, const SpacetimePoint& pt);

/// psi = embed(K) + embed(L) e1 from two LeftPlus (CUS) spinors; inverse of
/// the Weyl split in components.
Multivector dirac_from_weyl(const weyl::WeylSpinor& k, const weyl::WeylSpinor& l);

}  // namespace clifford::dirac
