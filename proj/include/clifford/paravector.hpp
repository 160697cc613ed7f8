#pragma once

#include <array>

#include "clifford/center_scalar.hpp"
#include "clifford/multivector.hpp"
#include "clifford/weyl_spinors.hpp"

namespace clifford::pv {

/// Paravector a0 + a1 e1 + a2 e2 + a3 e3 in Cl(3,0), modelling a Minkowski
/// vector with time component a0 and space part a.
struct Paravector {
  double a0 = 0.0;
  std::array<double, 3> a{};

  Multivector to_multivector() const;
  static Paravector from_multivector(const Multivector& x);  // throws if grades > 1 present
};

/// Minkowski bilinear form <(a hat(b) + b hat(a)) / 2>_0 = a0 b0 - a.b,
/// computed in the algebra (hat = grade involution).
double pv_metric(const Paravector& a, const Paravector& b);

/// The flagpole 2 K rev(K) of a LeftPlus (CUS) Weyl spinor: a null,
/// future-pointing paravector (zero iff K = 0).
Paravector paravector_from_spinor(const weyl::WeylSpinor& k);

bool is_null(const Paravector& a, double tol = 1e-10);
bool is_future(const Paravector& a);

/// Axis n = <psi e3 rev(psi)>_1 of the spin bivector; for a unit rotor this
/// is the rotated e3.
std::array<double, 3> spin_density_axis(const Multivector& psi);

enum class NullTetradLabel { OO, OI, IO, II };

/// Null-tetrad element: f+ (OO), f+ e1 (OI), f- e1 (IO), f- (II).
Multivector tetrad_element(NullTetradLabel which);

/// Coordinates of an arbitrary Cl(3,0) element in the tetrad basis over the
/// center: x = sum c_L tetrad(L) with c_L = a_L + b_L e123.  The four
/// elements span all eight real dimensions, so this always succeeds; the
/// rank check guards against a degenerate Gram matrix and throws
/// std::domain_error if it ever trips.
struct TetradDecomposition {
  CenterScalar c_oo, c_oi, c_io, c_ii;
  CenterScalar coeff(NullTetradLabel which) const;
};
TetradDecomposition tetrad_decompose(const Multivector& x);

}  // namespace clifford::pv
