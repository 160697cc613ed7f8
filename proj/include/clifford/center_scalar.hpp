#pragma once

#include <cmath>

#include "clifford/multivector.hpp"

namespace clifford {

/// Element a + b*e123 of the center of Cl(3,0).  The pseudoscalar e123 is
/// central and squares to -1, so these behave exactly like complex numbers;
/// reversion acts on them as complex conjugation.
struct CenterScalar {
  double re = 0.0;
  double im = 0.0;

  CenterScalar() = default;
  CenterScalar(double r, double i) : re(r), im(i) {}

  CenterScalar conj() const { return {re, -im}; }
  double norm_sq() const { return re * re + im * im; }
  double abs() const { return std::hypot(re, im); }

  CenterScalar& operator+=(const CenterScalar& o) { re += o.re; im += o.im; return *this; }
  CenterScalar& operator-=(const CenterScalar& o) { re -= o.re; im -= o.im; return *this; }
  friend CenterScalar operator+(CenterScalar a, const CenterScalar& b) { return a += b; }
  friend CenterScalar operator-(CenterScalar a, const CenterScalar& b) { return a -= b; }
  friend CenterScalar operator*(const CenterScalar& a, const CenterScalar& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend CenterScalar operator*(double s, const CenterScalar& a) { return {s * a.re, s * a.im}; }
  friend CenterScalar operator*(const CenterScalar& a, double s) { return s * a; }
  CenterScalar operator-() const { return {-re, -im}; }
  bool operator==(const CenterScalar&) const = default;

  /// Embeds as re + im * e123 in Cl(3,0).
  Multivector to_multivector() const {
    Multivector m(Signature::cl30());
    m[0] = re;
    m[7] = im;
    return m;
  }
};

struct CenterDecomposition {
  CenterScalar center;    // grades 0 and 3
  Multivector remainder;  // grades 1 and 2
};

/// Splits a Cl(3,0) element into its central (grade 0+3) part and the rest.
/// Throws for any other signature.
CenterDecomposition center_decompose(const Multivector& a);

}  // namespace clifford
