#pragma once

#include <functional>

#include "clifford/dirac_hestenes.hpp"
#include "clifford/matrices.hpp"
#include "clifford/multivector.hpp"
#include "clifford/spacetime.hpp"

namespace clifford::rep {

/// Faithful 2x2 complex matrix representation of Cl(3,0): e_k -> sigma_k
/// (Pauli matrices), extended multiplicatively.  rep(reversion(a)) equals
/// the adjoint of rep(a).
Mat2 rep_cl30(const Multivector& a);
/// Inverse of rep_cl30; every 2x2 complex matrix is hit.
Multivector rep_cl30_inverse(const Mat2& m);

/// Matrix of an even element R = alpha + c^k (e_k e123) written against the
/// spin basis: [[alpha + i c3, -c2 + i c1], [c2 + i c1, alpha - i c3]] up to
/// relabelling; det = squared rotor norm.  Throws if R has odd part.
Mat2 rep_R_matrix(const Multivector& r);

/// Even subalgebra isomorphism Cl(1,3)+ -> Cl(3,0): gamma_0 gamma_k -> -e_k
/// (k = 1..3), gamma_i gamma_j -> -e_i e_j (spatial i < j), pseudoscalar ->
/// e123.  iso_to_cl30 throws when the argument has odd part.
Multivector iso_to_cl30(const Multivector& even_cl13);
Multivector iso_from_cl30(const Multivector& a30);

/// 4x4 Dirac representation of the even subalgebra Cl(1,3)+, generated by
/// the images of gamma_0 gamma_mu in the standard gamma-matrix basis.
/// Throws when the argument has odd part.
Mat4 rep_cl13_even(const Multivector& even_cl13);

/// Column spinor psi = rep(Psi) u0 with u0 = (1,0,0,0): carries a
/// Dirac-Hestenes solution in Cl(3,0) to a solution of the column Dirac
/// equation i gamma^mu d_mu psi = m psi.
std::array<Complex, 4> dirac_column(const Multivector& a30);

/// C^4-valued field with optional analytic gradient, mirroring Mv30Field.
class ColumnField {
 public:
  using ValueFn = std::function<std::array<Complex, 4>(const SpacetimePoint&)>;
  using GradientFn = std::function<std::array<std::array<Complex, 4>, 4>(const SpacetimePoint&)>;

  explicit ColumnField(ValueFn value) : value_(std::move(value)) {}
  ColumnField(ValueFn value, GradientFn grad)
      : value_(std::move(value)), grad_(std::move(grad)) {}

  std::array<Complex, 4> value(const SpacetimePoint& pt) const { return value_(pt); }
  std::array<std::array<Complex, 4>, 4> derivatives(const SpacetimePoint& pt) const;

 private:
  ValueFn value_;
  GradientFn grad_;
  double h_ = 1e-4;
};

/// Builds the column field rep(psi(x)) u0 from a Dirac-Hestenes field,
/// carrying the analytic gradient across when psi has one.
ColumnField column_field(const dirac::Mv30Field& psi);

/// Residual of the textbook Dirac equation i gamma^mu d_mu psi - m psi
/// (metric +---, contravariant gammas), reported as max component modulus.
double standard_dirac_residual(const ColumnField& psi, double mass, const SpacetimePoint& pt);

}  // namespace clifford::rep
