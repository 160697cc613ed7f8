#include "clifford/cl03.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace clifford::cl03 {

namespace {

const Signature kSig = Signature::cl03();

Multivector blade(unsigned mask, double c = 1.0) {
  return Multivector::basis_blade(kSig, mask, c);
}

Multivector pseudo() { return blade(0b111); }
Multivector e13() { return blade(0b101); }
Multivector f_plus03() { return (Multivector::scalar(kSig, 1.0) + pseudo()) / 2.0; }

void require_even03(const Multivector& q, const char* what) {
  if (q.signature() != kSig) throw std::invalid_argument("expected a Cl(0,3) element");
  if (inf_norm(odd_part(q)) != 0.0) throw std::invalid_argument(what);
}

/// Reads c from y = c f+ + (terms outside span{1, e12, e3, e123}): both
/// blades of c carry weight 1/2 in c f+.
Cx03 ideal_component(const Multivector& y) { return {2.0 * y[0], 2.0 * y[0b011]}; }

/// Coefficients (a0, a^k, b^k, b0) of A = a0 + a^k e_k - b^k e_k e123 + b0 e123.
struct Coords03 {
  double a0, b0;
  std::array<double, 3> ak, bk;
};

Coords03 coords(const Multivector& a) {
  if (a.signature() != kSig) throw std::invalid_argument("expected a Cl(0,3) element");
  return {a[0],
          a[0b111],
          {a[0b001], a[0b010], a[0b100]},
          {a[0b110], -a[0b101], a[0b011]}};
}

}  // namespace

Multivector Cx03::to_multivector() const {
  Multivector m(kSig);
  m[0] = re;
  m[0b011] = im;
  return m;
}

std::pair<Multivector, Multivector> idempotents03() {
  const Multivector one = Multivector::scalar(kSig, 1.0);
  return {(one + pseudo()) / 2.0, (one - pseudo()) / 2.0};
}

Multivector reduce_even03(const Multivector& a) {
  const Coords03 co = coords(a);
  Multivector out = Multivector::scalar(kSig, co.a0 + co.b0);
  for (int k = 0; k < 3; ++k) {
    out += (co.ak[static_cast<std::size_t>(k)] - co.bk[static_cast<std::size_t>(k)]) *
           (Multivector::generator(kSig, k + 1) * pseudo());
  }
  return out;
}

WeylSpinor03 cus03_from_even(const Multivector& q) {
  require_even03(q, "cus03_from_even expects an even element");
  return {SpinorKind03::CUS03, {q[0], q[0b011]}, {q[0b101], -q[0b110]}};
}

Multivector embed(const WeylSpinor03& s) {
  const Multivector c1 = s.c1.to_multivector();
  const Multivector c2 = s.c2.to_multivector();
  switch (s.kind) {
    case SpinorKind03::CUS03: return c1 * f_plus03() + e13() * c2 * f_plus03();
    case SpinorKind03::CDS03: return c1 * f_plus03() - f_plus03() * c2 * e13();
  }
  throw std::invalid_argument("unknown spinor kind");
}

WeylSpinor03 spinor_from_ideal(const Multivector& x, SpinorKind03 kind) {
  WeylSpinor03 s;
  s.kind = kind;
  switch (kind) {
    case SpinorKind03::CUS03:
      s.c1 = ideal_component(x);
      s.c2 = ideal_component(blade(0b101, -1.0) * x);  // e13^-1 = -e13
      break;
    case SpinorKind03::CDS03:
      s.c1 = ideal_component(x);
      s.c2 = ideal_component(x * e13());
      break;
  }
  const double tol = 1e-12 * std::max(1.0, inf_norm(x));
  if (inf_norm(x - embed(s)) > tol) {
    throw std::invalid_argument("element does not lie in the Cl(0,3) f+ ideal span");
  }
  return s;
}

WeylSpinor03 cds03_from_cus(const WeylSpinor03& k) {
  if (k.kind != SpinorKind03::CUS03) {
    throw std::invalid_argument("cds03_from_cus expects a CUS03 spinor");
  }
  return {SpinorKind03::CDS03, k.c1.conj(), k.c2.conj()};
}

Cx03 metric03(const WeylSpinor03& k, const WeylSpinor03& m) {
  if (k.kind != SpinorKind03::CUS03 || m.kind != SpinorKind03::CUS03) {
    throw std::invalid_argument("metric03 expects CUS03 spinors");
  }
  return k.c2 * m.c1 - k.c1 * m.c2;
}

Multivector sigma(const Multivector& q) {
  require_even03(q, "sigma expects an even element");
  return blade(0b110, -1.0) * conjugation(q) * blade(0b110);  // e32 = -e23
}

Multivector sigma_dual_spinor(const Multivector& even_k) {
  return sigma(even_k) * e13();
}

Cx03 metric03_alt(const Multivector& even_k, const Multivector& even_m) {
  require_even03(even_k, "metric03_alt expects even elements");
  require_even03(even_m, "metric03_alt expects even elements");
  const Multivector x = sigma(even_k) * e13() * even_m;
  const Multivector projected =
      (x + blade(0b011, -1.0) * x * blade(0b011)) / 2.0;  // e21 X e12
  return {projected[0], projected[0b011]};
}

Quaternion quat_mul(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

QPair rep_h_plus_h(const Multivector& a) {
  const Coords03 co = coords(a);
  return {{co.a0 + co.b0, -(co.ak[0] - co.bk[0]), -(co.ak[1] - co.bk[1]),
           -(co.ak[2] - co.bk[2])},
          {co.a0 - co.b0, co.ak[0] + co.bk[0], co.ak[1] + co.bk[1], co.ak[2] + co.bk[2]}};
}

Multivector from_h_plus_h(const QPair& q) {
  const double a0 = (q.plus.w + q.minus.w) / 2.0;
  const double b0 = (q.plus.w - q.minus.w) / 2.0;
  const std::array<double, 3> plus = {q.plus.x, q.plus.y, q.plus.z};
  const std::array<double, 3> minus = {q.minus.x, q.minus.y, q.minus.z};
  Multivector m(kSig);
  m[0] = a0;
  m[0b111] = b0;
  const std::array<unsigned, 3> vec_mask = {0b001, 0b010, 0b100};
  const std::array<unsigned, 3> dual_mask = {0b110, 0b101, 0b011};
  const std::array<double, 3> dual_sign = {1.0, -1.0, 1.0};
  for (std::size_t k = 0; k < 3; ++k) {
    const double ak = (minus[k] - plus[k]) / 2.0;
    const double bk = (minus[k] + plus[k]) / 2.0;
    m[vec_mask[k]] = ak;
    m[dual_mask[k]] = dual_sign[k] * bk;
  }
  return m;
}

}  // namespace clifford::cl03
