#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace clifford {

/// Metric signature (p, q): the first p generators square to +1, the
/// remaining q to -1.  Only p + q <= 4 is supported; everything here is a
/// dense kernel sized for exhaustive verification, not a general GA library.
class Signature {
 public:
  Signature() = default;
  Signature(int p, int q);  // throws std::invalid_argument outside the range

  int p() const { return p_; }
  int q() const { return q_; }
  int dim() const { return p_ + q_; }
  std::size_t size() const { return std::size_t{1} << dim(); }

  /// Square of generator i (1-based): +1 for i <= p, -1 otherwise.
  double generator_square(int i) const;

  bool operator==(const Signature&) const = default;

  static Signature cl30() { return {3, 0}; }
  static Signature cl03() { return {0, 3}; }
  static Signature cl13() { return {1, 3}; }

 private:
  int p_ = 0;
  int q_ = 0;
};

/// Dense multivector over an orthonormal generator basis.  Coefficients are
/// indexed by blade bitmask: bit i-1 set means generator e_i is a factor, so
/// mask 0 is the scalar and mask 0b101 is e1e3 (written "e13").  Canonical
/// blade orientation is ascending generator order.
class Multivector {
 public:
  explicit Multivector(Signature sig) : sig_(sig) {}

  static Multivector scalar(Signature sig, double value);
  /// Single basis blade; mask must be < sig.size().
  static Multivector basis_blade(Signature sig, unsigned mask, double coeff = 1.0);
  /// Generator e_i, 1-based.
  static Multivector generator(Signature sig, int i);

  Signature signature() const { return sig_; }
  int dim() const { return sig_.dim(); }
  std::size_t size() const { return sig_.size(); }

  double operator[](unsigned mask) const;
  double& operator[](unsigned mask);

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(double s);
  Multivector& operator/=(double s);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, double s) { return a /= s; }
  Multivector operator-() const;

  /// Geometric product.  Throws on signature mismatch.
  friend Multivector operator*(const Multivector& a, const Multivector& b);

  bool operator==(const Multivector&) const = default;

 private:
  Signature sig_;
  std::array<double, 16> c_{};  // first size() entries are in use
};

/// Number of generators in a blade mask (the blade's grade).
int blade_grade(unsigned mask);

/// Product of generator squares over the blade's factors (+1 for the scalar).
double blade_metric(Signature sig, unsigned mask);

/// Sign from reordering the concatenation of two canonical blades into
/// canonical order (metric factors not included).
int blade_reorder_sign(unsigned a, unsigned b);

Multivector geometric_product(const Multivector& a, const Multivector& b);

/// Grade-k part.  Throws if k is outside [0, dim].
Multivector grade_projection(const Multivector& a, int k);
Multivector even_part(const Multivector& a);
Multivector odd_part(const Multivector& a);

/// Reversion: sign (-1)^(k(k-1)/2) per grade k; an antiautomorphism.
Multivector reversion(const Multivector& a);
/// Grade involution: sign (-1)^k; an automorphism.
Multivector grade_involution(const Multivector& a);
/// (Clifford) conjugation = reversion o grade involution.
Multivector conjugation(const Multivector& a);

double scalar_part(const Multivector& a);

/// Bilinear extension of the metric to blades: basis blades of distinct mask
/// are orthogonal, and g(B, B) is the product of the generator squares.
double extended_metric(const Multivector& a, const Multivector& b);

/// Largest absolute coefficient.
double inf_norm(const Multivector& a);

/// Exponential.  When a*a is a scalar L to within 1e-12 * |a|^2 the closed
/// form is used (cos/sin for L<0, cosh/sinh for L>0, 1+a for L=0); otherwise
/// scaling-and-squaring with a series truncated at relative 1e-14.
Multivector mv_exp(const Multivector& a);

}  // namespace clifford
