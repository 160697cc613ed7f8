#include "clifford/weyl_spinors.hpp"

#include <algorithm>
#include <stdexcept>

namespace clifford::weyl {

namespace {

const Signature kSig = Signature::cl30();

Multivector e1() { return Multivector::generator(kSig, 1); }
Multivector e3() { return Multivector::generator(kSig, 3); }

/// Reads c with y = c f+ (or c f-): both idempotents have scalar and
/// pseudoscalar weight 1/2, so c = 2 y[1] + 2 y[e123] e123.
CenterScalar ideal_component(const Multivector& y) { return {2.0 * y[0], 2.0 * y[0b111]}; }

void require_kind(const WeylSpinor& s, IdealTag kind, const char* what) {
  if (s.kind != kind) throw std::invalid_argument(what);
}

}  // namespace

std::string tag_name(IdealTag t) {
  switch (t) {
    case IdealTag::LeftPlus: return "CUS";
    case IdealTag::RightPlus: return "CVUS";
    case IdealTag::RightMinus: return "CDS";
    case IdealTag::LeftMinus: return "CVDS";
  }
  throw std::invalid_argument("unknown ideal tag");
}

IdealTag tag_from_name(const std::string& n) {
  if (n == "CUS") return IdealTag::LeftPlus;
  if (n == "CVUS") return IdealTag::RightPlus;
  if (n == "CDS") return IdealTag::RightMinus;
  if (n == "CVDS") return IdealTag::LeftMinus;
  throw std::invalid_argument("unknown ideal name: " + n);
}

Multivector f_plus() { return (Multivector::scalar(kSig, 1.0) + e3()) / 2.0; }
Multivector f_minus() { return (Multivector::scalar(kSig, 1.0) - e3()) / 2.0; }

Multivector reduce_to_even(const Multivector& psi) {
  return even_part(psi) + odd_part(psi) * e3();
}

WeylSpinor cus_from_even(const Multivector& psi_even) {
  if (inf_norm(odd_part(psi_even)) != 0.0) {
    throw std::invalid_argument("cus_from_even expects an even element");
  }
  return {IdealTag::LeftPlus,
          {psi_even[0], psi_even[0b011]},
          {psi_even[0b101], psi_even[0b110]}};
}

Multivector embed(const WeylSpinor& s) {
  const Multivector c1 = s.c1.to_multivector();
  const Multivector c2 = s.c2.to_multivector();
  switch (s.kind) {
    case IdealTag::LeftPlus: return c1 * f_plus() + c2 * e1() * f_plus();
    case IdealTag::RightPlus: return c1 * f_plus() + c2 * f_plus() * e1();
    case IdealTag::RightMinus: return c1 * f_minus() * e1() + c2 * f_minus();
    case IdealTag::LeftMinus: return c1 * e1() * f_minus() + c2 * f_minus();
  }
  throw std::invalid_argument("unknown ideal tag");
}

WeylSpinor spinor_from_ideal(const Multivector& x, IdealTag kind) {
  WeylSpinor s;
  s.kind = kind;
  switch (kind) {
    case IdealTag::LeftPlus:
      s.c1 = ideal_component(f_plus() * x);
      s.c2 = ideal_component(e1() * f_minus() * x);
      break;
    case IdealTag::RightPlus:
      s.c1 = ideal_component(x * f_plus());
      s.c2 = ideal_component(x * f_minus() * e1());
      break;
    case IdealTag::RightMinus:
      s.c1 = ideal_component(x * f_plus() * e1());
      s.c2 = ideal_component(x * f_minus());
      break;
    case IdealTag::LeftMinus:
      s.c1 = ideal_component(e1() * f_plus() * x);
      s.c2 = ideal_component(f_minus() * x);
      break;
  }
  const double tol = 1e-12 * std::max(1.0, inf_norm(x));
  if (inf_norm(x - embed(s)) > tol) {
    throw std::invalid_argument("element does not lie in the " + tag_name(kind) + " ideal");
  }
  return s;
}

WeylSpinor to_cvus(const WeylSpinor& k) {
  require_kind(k, IdealTag::LeftPlus, "to_cvus expects a CUS spinor");
  return {IdealTag::RightPlus, -k.c2, k.c1};
}

WeylSpinor to_cds(const WeylSpinor& k) {
  require_kind(k, IdealTag::LeftPlus, "to_cds expects a CUS spinor");
  return {IdealTag::RightMinus, k.c1.conj(), k.c2.conj()};
}

WeylSpinor to_cvds(const WeylSpinor& kbar) {
  require_kind(kbar, IdealTag::RightMinus, "to_cvds expects a CDS spinor");
  return {IdealTag::LeftMinus, -kbar.c2, kbar.c1};
}

CenterScalar metric_fplus(const WeylSpinor& k, const WeylSpinor& eta) {
  require_kind(k, IdealTag::LeftPlus, "metric_fplus expects CUS spinors");
  require_kind(eta, IdealTag::LeftPlus, "metric_fplus expects CUS spinors");
  return -k.c2 * eta.c1 + k.c1 * eta.c2;
}

CenterScalar metric_fminus(const WeylSpinor& kbar, const WeylSpinor& etabar) {
  require_kind(kbar, IdealTag::RightMinus, "metric_fminus expects CDS spinors");
  require_kind(etabar, IdealTag::RightMinus, "metric_fminus expects CDS spinors");
  return etabar.c1 * kbar.c2 - etabar.c2 * kbar.c1;
}

double rotor_residual(const Multivector& r) {
  return inf_norm(r * conjugation(r) - Multivector::scalar(r.signature(), 1.0));
}

WeylSpinor transform(const Multivector& r, const WeylSpinor& s) {
  if (rotor_residual(r) > 1e-10) {
    throw std::invalid_argument("transform requires a unit rotor (R conj(R) = 1)");
  }
  const Multivector x = embed(s);
  Multivector y(kSig);
  switch (s.kind) {
    case IdealTag::LeftPlus: y = r * x; break;
    case IdealTag::RightPlus: y = x * conjugation(r); break;
    case IdealTag::RightMinus: y = x * reversion(r); break;
    case IdealTag::LeftMinus: y = grade_involution(r) * x; break;
  }
  return spinor_from_ideal(y, s.kind);
}

}  // namespace clifford::weyl
