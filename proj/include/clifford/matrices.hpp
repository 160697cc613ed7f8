#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace clifford::rep {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix.  Hand-rolled on purpose: the whole point of
/// this kernel is that every product is simple enough to audit.
struct Mat2 {
  std::array<Complex, 4> e{};

  Complex& at(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }
  const Complex& at(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }

  static Mat2 identity();
  static Mat2 zero() { return {}; }

  Mat2 adjoint() const;  // conjugate transpose
  Complex det() const;
  Mat2 inverse() const;  // throws std::domain_error if det == 0

  friend Mat2 operator+(const Mat2& a, const Mat2& b);
  friend Mat2 operator-(const Mat2& a, const Mat2& b);
  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend Mat2 operator*(Complex s, const Mat2& a);
  bool operator==(const Mat2&) const = default;
};

/// Row-major 4x4 complex matrix.
struct Mat4 {
  std::array<Complex, 16> e{};

  Complex& at(int r, int c) { return e[static_cast<std::size_t>(4 * r + c)]; }
  const Complex& at(int r, int c) const { return e[static_cast<std::size_t>(4 * r + c)]; }

  static Mat4 identity();
  static Mat4 zero() { return {}; }

  Mat4 adjoint() const;
  std::array<Complex, 4> column(int c) const;

  friend Mat4 operator+(const Mat4& a, const Mat4& b);
  friend Mat4 operator-(const Mat4& a, const Mat4& b);
  friend Mat4 operator*(const Mat4& a, const Mat4& b);
  friend Mat4 operator*(Complex s, const Mat4& a);
  bool operator==(const Mat4&) const = default;
};

double max_abs_diff(const Mat2& a, const Mat2& b);
double max_abs_diff(const Mat4& a, const Mat4& b);
double max_abs(const std::array<Complex, 4>& v);

/// The four Dirac matrices of the standard representation, indexed 0..3 with
/// upper (contravariant) index: gamma[0] = diag(1,1,-1,-1) and gamma[k] has
/// the Pauli block form [[0, sigma_k], [-sigma_k, 0]].  They satisfy
/// gamma0^2 = +1, gammak^2 = -1 and pairwise anticommutation.
struct GammaBasis {
  std::array<Mat4, 4> gamma;
  static const GammaBasis& standard();
};

}  // namespace clifford::rep
