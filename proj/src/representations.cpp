#include "clifford/representations.hpp"

#include <algorithm>
#include <stdexcept>

namespace clifford::rep {

namespace {

constexpr Complex kI{0.0, 1.0};

}  // namespace

Mat2 Mat2::identity() {
  Mat2 m;
  m.at(0, 0) = 1.0;
  m.at(1, 1) = 1.0;
  return m;
}

Mat2 Mat2::adjoint() const {
  Mat2 m;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) m.at(r, c) = std::conj(at(c, r));
  }
  return m;
}

Complex Mat2::det() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0); }

Mat2 Mat2::inverse() const {
  const Complex d = det();
  if (d == Complex{}) throw std::domain_error("matrix is singular");
  Mat2 m;
  m.at(0, 0) = at(1, 1) / d;
  m.at(0, 1) = -at(0, 1) / d;
  m.at(1, 0) = -at(1, 0) / d;
  m.at(1, 1) = at(0, 0) / d;
  return m;
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 m;
  for (std::size_t i = 0; i < 4; ++i) m.e[i] = a.e[i] + b.e[i];
  return m;
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 m;
  for (std::size_t i = 0; i < 4; ++i) m.e[i] = a.e[i] - b.e[i];
  return m;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 m;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      m.at(r, c) = a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c);
    }
  }
  return m;
}

Mat2 operator*(Complex s, const Mat2& a) {
  Mat2 m;
  for (std::size_t i = 0; i < 4; ++i) m.e[i] = s * a.e[i];
  return m;
}

Mat4 Mat4::identity() {
  Mat4 m;
  for (int r = 0; r < 4; ++r) m.at(r, r) = 1.0;
  return m;
}

Mat4 Mat4::adjoint() const {
  Mat4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m.at(r, c) = std::conj(at(c, r));
  }
  return m;
}

std::array<Complex, 4> Mat4::column(int c) const {
  return {at(0, c), at(1, c), at(2, c), at(3, c)};
}

Mat4 operator+(const Mat4& a, const Mat4& b) {
  Mat4 m;
  for (std::size_t i = 0; i < 16; ++i) m.e[i] = a.e[i] + b.e[i];
  return m;
}

Mat4 operator-(const Mat4& a, const Mat4& b) {
  Mat4 m;
  for (std::size_t i = 0; i < 16; ++i) m.e[i] = a.e[i] - b.e[i];
  return m;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      Complex s = 0.0;
      for (int k = 0; k < 4; ++k) s += a.at(r, k) * b.at(k, c);
      m.at(r, c) = s;
    }
  }
  return m;
}

Mat4 operator*(Complex s, const Mat4& a) {
  Mat4 m;
  for (std::size_t i = 0; i < 16; ++i) m.e[i] = s * a.e[i];
  return m;
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
  return m;
}

double max_abs_diff(const Mat4& a, const Mat4& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < 16; ++i) m = std::max(m, std::abs(a.e[i] - b.e[i]));
  return m;
}

double max_abs(const std::array<Complex, 4>& v) {
  double m = 0.0;
  for (const Complex& c : v) m = std::max(m, std::abs(c));
  return m;
}

namespace {

Mat2 pauli(int k) {
  Mat2 m;
  switch (k) {
    case 1:
      m.at(0, 1) = 1.0;
      m.at(1, 0) = 1.0;
      break;
    case 2:
      m.at(0, 1) = -kI;
      m.at(1, 0) = kI;
      break;
    case 3:
      m.at(0, 0) = 1.0;
      m.at(1, 1) = -1.0;
      break;
    default:
      throw std::out_of_range("pauli index must be 1..3");
  }
  return m;
}

/// Blade images of Cl(3,0): product of Pauli matrices in ascending order.
const std::array<Mat2, 8>& cl30_blade_images() {
  static const std::array<Mat2, 8> table = [] {
    std::array<Mat2, 8> t;
    for (unsigned mask = 0; mask < 8; ++mask) {
      Mat2 m = Mat2::identity();
      for (int k = 1; k <= 3; ++k) {
        if (mask & (1u << (k - 1))) m = m * pauli(k);
      }
      t[mask] = m;
    }
    return t;
  }();
  return table;
}

}  // namespace

const GammaBasis& GammaBasis::standard() {
  static const GammaBasis basis = [] {
    GammaBasis b;
    b.gamma[0].at(0, 0) = 1.0;
    b.gamma[0].at(1, 1) = 1.0;
    b.gamma[0].at(2, 2) = -1.0;
    b.gamma[0].at(3, 3) = -1.0;
    for (int k = 1; k <= 3; ++k) {
      const Mat2 s = pauli(k);
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          b.gamma[static_cast<std::size_t>(k)].at(r, c + 2) = s.at(r, c);
          b.gamma[static_cast<std::size_t>(k)].at(r + 2, c) = -s.at(r, c);
        }
      }
    }
    return b;
  }();
  return basis;
}

Mat2 rep_cl30(const Multivector& a) {
  if (a.signature() != Signature::cl30()) {
    throw std::invalid_argument("rep_cl30 expects a Cl(3,0) element");
  }
  Mat2 m;
  for (unsigned mask = 0; mask < 8; ++mask) {
    if (a[mask] != 0.0) m = m + Complex{a[mask]} * cl30_blade_images()[mask];
  }
  return m;
}

Multivector rep_cl30_inverse(const Mat2& m) {
  // Split M = c0 I + c1 s1 + c2 s2 + c3 s3 over C, then route the imaginary
  // parts through the pseudoscalar: Im c0 -> e123, Im ck -> e123 e_k.
  const Complex c0 = (m.at(0, 0) + m.at(1, 1)) / 2.0;
  const Complex c3 = (m.at(0, 0) - m.at(1, 1)) / 2.0;
  const Complex c1 = (m.at(0, 1) + m.at(1, 0)) / 2.0;
  const Complex c2 = kI * (m.at(0, 1) - m.at(1, 0)) / 2.0;
  Multivector out(Signature::cl30());
  out[0] = c0.real();
  out[0b111] = c0.imag();
  out[0b001] = c1.real();
  out[0b110] = c1.imag();  // e123 e1 = e23
  out[0b010] = c2.real();
  out[0b101] = -c2.imag();  // e123 e2 = -e13
  out[0b100] = c3.real();
  out[0b011] = c3.imag();  // e123 e3 = e12
  return out;
}

Mat2 rep_R_matrix(const Multivector& r) {
  if (r.signature() != Signature::cl30()) {
    throw std::invalid_argument("rep_R_matrix expects a Cl(3,0) element");
  }
  if (inf_norm(odd_part(r)) != 0.0) {
    throw std::invalid_argument("rep_R_matrix expects an even element");
  }
  const double alpha = r[0], beta = r[0b011], gamma = r[0b101], delta = r[0b110];
  Mat2 m;
  m.at(0, 0) = Complex{alpha, beta};
  m.at(0, 1) = Complex{-gamma, delta};
  m.at(1, 0) = Complex{gamma, delta};
  m.at(1, 1) = Complex{alpha, -beta};
  return m;
}

namespace {

struct IsoEntry {
  unsigned cl13_mask;
  unsigned cl30_mask;
  double sign;
};

/// gamma_0 gamma_k -> -e_k, gamma_i gamma_j -> -e_i e_j, gamma_0123 -> e123.
/// Bit mu of a Cl(1,3) mask is gamma_mu.
constexpr std::array<IsoEntry, 8> kIsoTable = {{{0b0000, 0b000, 1.0},
                                                {0b0011, 0b001, -1.0},
                                                {0b0101, 0b010, -1.0},
                                                {0b1001, 0b100, -1.0},
                                                {0b0110, 0b011, -1.0},
                                                {0b1010, 0b101, -1.0},
                                                {0b1100, 0b110, -1.0},
                                                {0b1111, 0b111, 1.0}}};

}  // namespace

Multivector iso_to_cl30(const Multivector& even_cl13) {
  if (even_cl13.signature() != Signature::cl13()) {
    throw std::invalid_argument("iso_to_cl30 expects a Cl(1,3) element");
  }
  if (inf_norm(odd_part(even_cl13)) != 0.0) {
    throw std::invalid_argument("iso_to_cl30 expects an even element");
  }
  Multivector out(Signature::cl30());
  for (const IsoEntry& e : kIsoTable) out[e.cl30_mask] = e.sign * even_cl13[e.cl13_mask];
  return out;
}

Multivector iso_from_cl30(const Multivector& a30) {
  if (a30.signature() != Signature::cl30()) {
    throw std::invalid_argument("iso_from_cl30 expects a Cl(3,0) element");
  }
  Multivector out(Signature::cl13());
  for (const IsoEntry& e : kIsoTable) out[e.cl13_mask] = e.sign * a30[e.cl30_mask];
  return out;
}

namespace {

/// Images of the index-lowered generators gamma_0 = gamma^0, gamma_k =
/// -gamma^k; they satisfy the same (1,3) relations, and their products give
/// the even-blade images.
const std::array<Mat4, 16>& cl13_blade_images() {
  static const std::array<Mat4, 16> table = [] {
    const GammaBasis& g = GammaBasis::standard();
    std::array<Mat4, 4> lowered = {g.gamma[0], Complex{-1.0} * g.gamma[1],
                                   Complex{-1.0} * g.gamma[2], Complex{-1.0} * g.gamma[3]};
    std::array<Mat4, 16> t;
    for (unsigned mask = 0; mask < 16; ++mask) {
      Mat4 m = Mat4::identity();
      for (int mu = 0; mu <= 3; ++mu) {
        if (mask & (1u << mu)) m = m * lowered[static_cast<std::size_t>(mu)];
      }
      t[mask] = m;
    }
    return t;
  }();
  return table;
}

std::array<Complex, 4> mat_vec(const Mat4& m, const std::array<Complex, 4>& v) {
  std::array<Complex, 4> out{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out[static_cast<std::size_t>(r)] += m.at(r, c) * v[static_cast<std::size_t>(c)];
  }
  return out;
}

}  // namespace

Mat4 rep_cl13_even(const Multivector& even_cl13) {
  if (even_cl13.signature() != Signature::cl13()) {
    throw std::invalid_argument("rep_cl13_even expects a Cl(1,3) element");
  }
  if (inf_norm(odd_part(even_cl13)) != 0.0) {
    throw std::invalid_argument("rep_cl13_even expects an even element");
  }
  Mat4 m;
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (even_cl13[mask] != 0.0) m = m + Complex{even_cl13[mask]} * cl13_blade_images()[mask];
  }
  return m;
}

std::array<Complex, 4> dirac_column(const Multivector& a30) {
  return rep_cl13_even(iso_from_cl30(a30)).column(0);
}

std::array<std::array<Complex, 4>, 4> ColumnField::derivatives(const SpacetimePoint& pt) const {
  if (grad_) return grad_(pt);
  std::array<std::array<Complex, 4>, 4> out{};
  for (int axis = 0; axis < 4; ++axis) {
    const auto hi = value_(shifted(pt, axis, h_));
    const auto lo = value_(shifted(pt, axis, -h_));
    for (std::size_t i = 0; i < 4; ++i) {
      out[static_cast<std::size_t>(axis)][i] = (hi[i] - lo[i]) / (2.0 * h_);
    }
  }
  return out;
}

ColumnField column_field(const dirac::Mv30Field& psi) {
  auto value = [psi](const SpacetimePoint& pt) { return dirac_column(psi.value(pt)); };
  if (!psi.has_analytic_gradient()) return ColumnField(value);
  auto grad = [psi](const SpacetimePoint& pt) {
    const auto d = psi.derivatives(pt);
    return std::array<std::array<Complex, 4>, 4>{dirac_column(d[0]), dirac_column(d[1]),
                                                 dirac_column(d[2]), dirac_column(d[3])};
  };
  return ColumnField(value, grad);
}

double standard_dirac_residual(const ColumnField& psi, double mass, const SpacetimePoint& pt) {
  const GammaBasis& g = GammaBasis::standard();
  const auto d = psi.derivatives(pt);
  const auto v = psi.value(pt);
  std::array<Complex, 4> r{};
  for (std::size_t mu = 0; mu < 4; ++mu) {
    const auto gd = mat_vec(g.gamma[mu], d[mu]);
    for (std::size_t i = 0; i < 4; ++i) r[i] += kI * gd[i];
  }
  for (std::size_t i = 0; i < 4; ++i) r[i] -= mass * v[i];
  return max_abs(r);
}

}  // namespace clifford::rep
