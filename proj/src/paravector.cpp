#include "clifford/paravector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace clifford::pv {

namespace {

const Signature kSig = Signature::cl30();

}  // namespace

Multivector Paravector::to_multivector() const {
  Multivector m(kSig);
  m[0] = a0;
  m[0b001] = a[0];
  m[0b010] = a[1];
  m[0b100] = a[2];
  return m;
}

Paravector Paravector::from_multivector(const Multivector& x) {
  if (x.signature() != kSig) throw std::invalid_argument("expected a Cl(3,0) element");
  for (unsigned mask : {0b011u, 0b101u, 0b110u, 0b111u}) {
    if (x[mask] != 0.0) throw std::invalid_argument("element has grade > 1 parts");
  }
  return {x[0], {x[0b001], x[0b010], x[0b100]}};
}

double pv_metric(const Paravector& a, const Paravector& b) {
  const Multivector am = a.to_multivector();
  const Multivector bm = b.to_multivector();
  return scalar_part((am * grade_involution(bm) + bm * grade_involution(am)) / 2.0);
}

Paravector paravector_from_spinor(const weyl::WeylSpinor& k) {
  if (k.kind != weyl::IdealTag::LeftPlus) {
    throw std::invalid_argument("paravector_from_spinor expects a CUS spinor");
  }
  // 2 K rev(K) in components: with k1 conj(k2) = u + v e123,
  //   a0 = |k1|^2 + |k2|^2,  a = (2u, -2v, |k1|^2 - |k2|^2).
  const CenterScalar p = k.c1 * k.c2.conj();
  return {k.c1.norm_sq() + k.c2.norm_sq(),
          {2.0 * p.re, -2.0 * p.im, k.c1.norm_sq() - k.c2.norm_sq()}};
}

bool is_null(const Paravector& a, double tol) {
  const double scale = a.a0 * a.a0 + a.a[0] * a.a[0] + a.a[1] * a.a[1] + a.a[2] * a.a[2];
  return std::abs(pv_metric(a, a)) <= tol * std::max(1.0, scale);
}

bool is_future(const Paravector& a) { return a.a0 > 0.0; }

std::array<double, 3> spin_density_axis(const Multivector& psi) {
  const Multivector m = psi * Multivector::generator(kSig, 3) * reversion(psi);
  return {m[0b001], m[0b010], m[0b100]};
}

Multivector tetrad_element(NullTetradLabel which) {
  const Multivector e1 = Multivector::generator(kSig, 1);
  switch (which) {
    case NullTetradLabel::OO: return weyl::f_plus();
    case NullTetradLabel::OI: return weyl::f_plus() * e1;
    case NullTetradLabel::IO: return weyl::f_minus() * e1;
    case NullTetradLabel::II: return weyl::f_minus();
  }
  throw std::invalid_argument("unknown tetrad label");
}

CenterScalar TetradDecomposition::coeff(NullTetradLabel which) const {
  switch (which) {
    case NullTetradLabel::OO: return c_oo;
    case NullTetradLabel::OI: return c_oi;
    case NullTetradLabel::IO: return c_io;
    case NullTetradLabel::II: return c_ii;
  }
  throw std::invalid_argument("unknown tetrad label");
}

TetradDecomposition tetrad_decompose(const Multivector& x) {
  if (x.signature() != kSig) throw std::invalid_argument("expected a Cl(3,0) element");
  // Columns: T_L and e123 T_L for each label; solve the 8x8 linear system
  // column-coefficients * v = x by Gaussian elimination.
  const Multivector pseudo = Multivector::basis_blade(kSig, 0b111);
  std::array<Multivector, 8> basis = {
      tetrad_element(NullTetradLabel::OO), pseudo * tetrad_element(NullTetradLabel::OO),
      tetrad_element(NullTetradLabel::OI), pseudo * tetrad_element(NullTetradLabel::OI),
      tetrad_element(NullTetradLabel::IO), pseudo * tetrad_element(NullTetradLabel::IO),
      tetrad_element(NullTetradLabel::II), pseudo * tetrad_element(NullTetradLabel::II)};

  double m[8][9];
  for (unsigned r = 0; r < 8; ++r) {
    for (unsigned c = 0; c < 8; ++c) m[r][c] = basis[c][r];
    m[r][8] = x[r];
  }
  for (int col = 0; col < 8; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 8; ++r) {
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    }
    if (std::abs(m[pivot][col]) < 1e-12) {
      throw std::domain_error("tetrad basis is degenerate");
    }
    std::swap(m[col], m[pivot]);
    for (int r = 0; r < 8; ++r) {
      if (r == col) continue;
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < 9; ++c) m[r][c] -= f * m[col][c];
    }
  }
  double v[8];
  for (int r = 0; r < 8; ++r) v[r] = m[r][8] / m[r][r];
  return {{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}};
}

}  // namespace clifford::pv
