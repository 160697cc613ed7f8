#pragma once

#include <utility>

#include "clifford/multivector.hpp"

namespace clifford::cl03 {

/// Complex scalar re + im * e12 drawn from the plane span{1, e12} of
/// Cl(0,3), where e12^2 = -1.  This is the coefficient field for the
/// spinor modules here; e13 conjugates it when pulled across:
/// e13 c = conj(c) e13.  (The center span{1, e123} is NOT complex — the
/// pseudoscalar squares to +1 — which is why the components live in this
/// plane instead.)
struct Cx03 {
  double re = 0.0;
  double im = 0.0;

  Cx03 conj() const { return {re, -im}; }
  /// re + im * e12 as a Cl(0,3) element.
  Multivector to_multivector() const;

  friend Cx03 operator+(Cx03 x, Cx03 y) { return {x.re + y.re, x.im + y.im}; }
  friend Cx03 operator-(Cx03 x, Cx03 y) { return {x.re - y.re, x.im - y.im}; }
  friend Cx03 operator-(Cx03 x) { return {-x.re, -x.im}; }
  friend Cx03 operator*(Cx03 x, Cx03 y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend bool operator==(Cx03 x, Cx03 y) { return x.re == y.re && x.im == y.im; }
};

/// (f+, f-) = ((1 + e123)/2, (1 - e123)/2).  The pseudoscalar J = e123 is
/// central with J^2 = +1, so these are central idempotents annihilating each
/// other and summing to 1; they cut Cl(0,3) into two quaternion blocks.
std::pair<Multivector, Multivector> idempotents03();

/// Even-part reduction: A = a0 + a^k e_k - b^k e_k J + b0 J maps to the even
/// element A' = (a0 + b0) + (a^k - b^k) e_k J, which satisfies A' f+ = A f+.
/// On the f+ block the even representative is unique.
Multivector reduce_even03(const Multivector& a);

enum class SpinorKind03 { CUS03, CDS03 };

/// Spinor of the ideal Cl(0,3) f+ in components:
///   CUS03: embed = c1 f+ + e13 c2 f+   (from Q f+ with even Q)
///   CDS03: embed = c1 f+ - f+ c2 e13   (the conjugated representative)
struct WeylSpinor03 {
  SpinorKind03 kind = SpinorKind03::CUS03;
  Cx03 c1, c2;

  friend bool operator==(const WeylSpinor03&, const WeylSpinor03&) = default;
};

/// Components of an even Q = a + b e12 + c e13 + d e23 as the unique spinor
/// with Q f+ = embed(spinor): Q = k1 + e13 k2 gives k1 = a + b e12,
/// k2 = c - d e12.  Throws if Q has odd part.
WeylSpinor03 cus03_from_even(const Multivector& q);

Multivector embed(const WeylSpinor03& s);
WeylSpinor03 spinor_from_ideal(const Multivector& x, SpinorKind03 kind);

/// Conjugated spinor: embed(cds03_from_cus(k)) = conjugation(embed(k)), which
/// in components is plain complex conjugation of (c1, c2).
WeylSpinor03 cds03_from_cus(const WeylSpinor03& k);

/// Antisymmetric spinorial metric k2 m1 - k1 m2, valued in span{1, e12}.
Cx03 metric03(const WeylSpinor03& k, const WeylSpinor03& m);

/// sigma(Q) = e32 underbar(Q) e23 for even Q (Clifford conjugation twisted
/// by e23): an involutive antihomomorphism fixing 1, e12, e13 and negating
/// e23; in components (k1, k2) -> (k1, conj k2).  Throws if Q has odd part.
Multivector sigma(const Multivector& q);

/// Metric dual K* = sigma(K) e13 = -k2 + k1 e13, an even element with
/// components (-k2, conj k1).
Multivector sigma_dual_spinor(const Multivector& even_k);

/// Symmetric companion pairing -(k1 m2 + k2 m1) of two even representatives,
/// realised algebraically: X = sigma(K) e13 M splits as w + e13 (...) with w
/// in span{1, e12}, and averaging X with e21 X e12 kills the e13 half.
/// Relates to metric03 by flipping the sign of the first argument's k2.
Cx03 metric03_alt(const Multivector& even_k, const Multivector& even_m);

/// Quaternion w + x i + y j + z k.
struct Quaternion {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};
Quaternion quat_mul(const Quaternion& p, const Quaternion& q);

/// Image of A in H + H: on each block f+-/f- the quaternion units are
/// i = e23 f, j = e31 f, k = e12 f, and q+/- collects the coefficients.
/// An isomorphism of algebras; from_h_plus_h inverts it exactly.
struct QPair {
  Quaternion plus, minus;
  friend bool operator==(const QPair&, const QPair&) = default;
};
QPair rep_h_plus_h(const Multivector& a);
Multivector from_h_plus_h(const QPair& q);

}  // namespace clifford::cl03
