#include "clifford/dirac_hestenes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace clifford::dirac {

namespace {

const Signature kSig = Signature::cl30();

Multivector e12() { return Multivector::basis_blade(kSig, 0b011); }
Multivector e123() { return Multivector::basis_blade(kSig, 0b111); }

Multivector vector_mv(const std::array<double, 3>& v) {
  Multivector m(kSig);
  m[0b001] = v[0];
  m[0b010] = v[1];
  m[0b100] = v[2];
  return m;
}

/// grad f = e1 d1 f + e2 d2 f + e3 d3 f from a derivative quadruple.
Multivector grad_of(const std::array<Multivector, 4>& d) {
  Multivector g(kSig);
  for (int k = 1; k <= 3; ++k) g += Multivector::generator(kSig, k) * d[static_cast<std::size_t>(k)];
  return g;
}

}  // namespace

std::array<Multivector, 4> Mv30Field::derivatives(const SpacetimePoint& pt) const {
  if (grad_) return grad_(pt);
  auto central = [&](int axis) {
    return (value_(shifted(pt, axis, h_)) - value_(shifted(pt, axis, -h_))) / (2.0 * h_);
  };
  return {central(0), central(1), central(2), central(3)};
}

Mv30Field Mv30Field::with_step(double h) const {
  Mv30Field f = *this;
  f.h_ = h;
  return f;
}

Mv30Field Mv30Field::without_gradient() const {
  Mv30Field f(value_);
  f.h_ = h_;
  return f;
}

Mv30Field transform_field(const Mv30Field& f,
                          std::function<Multivector(const Multivector&)> linear_op) {
  auto value = [f, linear_op](const SpacetimePoint& pt) { return linear_op(f.value(pt)); };
  if (!f.has_analytic_gradient()) return Mv30Field(value).with_step(f.step());
  auto grad = [f, linear_op](const SpacetimePoint& pt) {
    const auto d = f.derivatives(pt);
    return std::array<Multivector, 4>{linear_op(d[0]), linear_op(d[1]), linear_op(d[2]),
                                      linear_op(d[3])};
  };
  return Mv30Field(value, grad).with_step(f.step());
}

PotentialField PotentialField::zero() {
  return {[](const SpacetimePoint&) { return 0.0; },
          [](const SpacetimePoint&) { return std::array<double, 3>{}; }};
}

Multivector dhe_residual(const Mv30Field& psi, const PotentialField& pot, double mass,
                         const SpacetimePoint& pt, double coupling) {
  const auto d = psi.derivatives(pt);
  const Multivector lhs = d[0] + grad_of(d);
  const Multivector value = psi.value(pt);
  const Multivector interaction =
      vector_mv(pot.vector_potential(pt)) - Multivector::scalar(kSig, pot.phi(pt));
  const Multivector rhs =
      (coupling * interaction * value - mass * grade_involution(value)) * e12();
  return lhs - rhs;
}

Multivector momentum_apply(const Mv30Field& psi, const SpacetimePoint& pt) {
  return grad_of(psi.derivatives(pt)) * e12();
}

Multivector boost(const std::array<double, 3>& p, double m) {
  if (m <= 0.0) throw std::invalid_argument("boost requires m > 0");
  const double e = std::sqrt(m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  return (Multivector::scalar(kSig, e + m) + vector_mv(p)) / std::sqrt(2.0 * m * (e + m));
}

double PlaneWaveParams::energy() const {
  return std::sqrt(m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
}

namespace {

Multivector rest_prefactor(FrequencyBranch branch, SpinLabel spin) {
  if (branch == FrequencyBranch::Plus) {
    return spin == SpinLabel::Up ? Multivector::scalar(kSig, 1.0)
                                 : Multivector::basis_blade(kSig, 0b101);  // e13
  }
  return spin == SpinLabel::Up ? Multivector::basis_blade(kSig, 0b111)   // e123
                               : Multivector::basis_blade(kSig, 0b010);  // e2
}

double branch_sign(FrequencyBranch branch) {
  return branch == FrequencyBranch::Plus ? -1.0 : 1.0;
}

}  // namespace

Multivector planewave(const PlaneWaveParams& params, const SpacetimePoint& pt) {
  const double phase = params.energy() * pt.t - params.p[0] * pt.x[0] -
                       params.p[1] * pt.x[1] - params.p[2] * pt.x[2];
  const double s = branch_sign(params.branch);
  // exp(s e12 phase) = cos(phase) + s sin(phase) e12, since e12^2 = -1.
  const Multivector osc =
      Multivector::scalar(kSig, std::cos(phase)) + s * std::sin(phase) * e12();
  return boost(params.p, params.m) * rest_prefactor(params.branch, params.spin) * osc;
}

Mv30Field planewave_field(const PlaneWaveParams& params) {
  auto value = [params](const SpacetimePoint& pt) { return planewave(params, pt); };
  auto grad = [params](const SpacetimePoint& pt) {
    const Multivector psi = planewave(params, pt);
    const double s = branch_sign(params.branch);
    const Multivector psi_phase = psi * e12() * s;  // d(psi)/d(phase)
    return std::array<Multivector, 4>{psi_phase * params.energy(), psi_phase * -params.p[0],
                                      psi_phase * -params.p[1], psi_phase * -params.p[2]};
  };
  return Mv30Field(value, grad);
}

Multivector right_phase(const Multivector& psi, double c, double d) {
  return psi * (Multivector::scalar(kSig, c) + d * e12());
}

Mv30Field right_phase(const Mv30Field& psi, double c, double d) {
  return transform_field(psi, [c, d](const Multivector& x) { return right_phase(x, c, d); });
}

LounestoDecomposition lounesto_decompose(const Multivector& psi) {
  const Multivector s = psi * conjugation(psi);
  const double a = s[0];
  const double b = s[0b111];
  const double rho = std::hypot(a, b);
  const double scale = inf_norm(psi);
  if (rho <= 1e-12 * scale * scale) {
    throw std::domain_error("psi conj(psi) vanishes: no polar decomposition exists");
  }
  double beta = std::atan2(b, a);
  if (beta == -std::numbers::pi) beta = -beta;  // fold the branch cut onto +pi
  const Multivector rotor =
      mv_exp(e123() * (-beta / 2.0)) * psi / std::sqrt(rho);
  return {rho, beta, rotor};
}

std::pair<Multivector, Multivector> weyl_split(const Multivector& psi) {
  return {psi * weyl::f_plus(), psi * weyl::f_minus()};
}

std::pair<Multivector, Multivector> weyl_residuals(const Mv30Field& xi, const Mv30Field& eta,
                                                   double mass, const SpacetimePoint& pt) {
  const auto dxi = xi.derivatives(pt);
  const auto deta = eta.derivatives(pt);
  const Multivector r1 = (dxi[0] + grad_of(dxi)) * e123() - mass * eta.value(pt);
  const Multivector r2 = (deta[0] - grad_of(deta)) * e123() - mass * xi.value(pt);
  return {r1, r2};
}

std::pair<Multivector, Multivector> pauli_split(const Multivector& psi) {
  return {even_part(psi), odd_part(psi) * Multivector::generator(kSig, 3)};
}

std::pair<Multivector, Multivector> pauli_residuals(const Mv30Field& phi, const Mv30Field& chi,
                                                    double mass, const SpacetimePoint& pt) {
  const Multivector e3 = Multivector::generator(kSig, 3);
  const auto dphi = phi.derivatives(pt);
  const auto dchi = chi.derivatives(pt);
  const Multivector r1 =
      dphi[0] * e123() * e3 + grad_of(dchi) * e123() - mass * phi.value(pt);
  const Multivector r2 =
      dchi[0] * e123() * e3 + grad_of(dphi) * e123() + mass * chi.value(pt);
  return {r1, r2};
}

Multivector dirac_from_weyl(const weyl::WeylSpinor& k, const weyl::WeylSpinor& l) {
  if (k.kind != weyl::IdealTag::LeftPlus || l.kind != weyl::IdealTag::LeftPlus) {
    throw std::invalid_argument("dirac_from_weyl expects CUS spinors");
  }
  return weyl::embed(k) + weyl::embed(l) * Multivector::generator(kSig, 1);
}

}  // namespace clifford::dirac
