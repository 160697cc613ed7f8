#pragma once

#include <string>

#include "clifford/center_scalar.hpp"
#include "clifford/multivector.hpp"

namespace clifford::weyl {

/// The four one-sided ideal types built from the primitive idempotents
/// f+ = (1+e3)/2 and f- = (1-e3)/2 of Cl(3,0):
///   LeftPlus   (CUS)  : Cl(3,0) f+   basis { f+,    e1 f+ }
///   RightPlus  (CVUS) : f+ Cl(3,0)   basis { f+,    f+ e1 }
///   RightMinus (CDS)  : f- Cl(3,0)   basis { f- e1, f-    }
///   LeftMinus  (CVDS) : Cl(3,0) f-   basis { e1 f-, f-    }
enum class IdealTag { LeftPlus, RightPlus, RightMinus, LeftMinus };

std::string tag_name(IdealTag t);       // "CUS", "CVUS", "CDS", "CVDS"
IdealTag tag_from_name(const std::string& n);

/// Two center-scalar components against the ideal basis listed above.
struct WeylSpinor {
  IdealTag kind = IdealTag::LeftPlus;
  CenterScalar c1;
  CenterScalar c2;
  bool operator==(const WeylSpinor&) const = default;
};

Multivector f_plus();
Multivector f_minus();

/// Even representative psi' with psi' f+ = psi f+:  psi' = <psi>_even + <psi>_odd e3.
Multivector reduce_to_even(const Multivector& psi);

/// Components of psi f+ for even psi = s + b12 e12 + b13 e13 + b23 e23:
/// k1 = s + b12 e123, k2 = b13 + b23 e123.
WeylSpinor cus_from_even(const Multivector& psi_even);

/// The ideal element the spinor stands for.
Multivector embed(const WeylSpinor& s);

/// Components of an ideal element, validated against its span; throws if the
/// extraction does not reproduce the input to 1e-12 (relative).
WeylSpinor spinor_from_ideal(const Multivector& x, IdealTag kind);

/// Duals and conjugates.  Component maps are exact:
///   to_cvus: (k1, k2)   -> (-k2, k1)          [e1 conj(K)]
///   to_cds : (k1, k2)   -> (conj k1, conj k2) [e1 rev(K)]
///   to_cvds: (kb1, kb2) -> (-kb2, kb1)        [conj(e1 Kbar)]
WeylSpinor to_cvus(const WeylSpinor& k);
WeylSpinor to_cds(const WeylSpinor& k);
WeylSpinor to_cvds(const WeylSpinor& kbar);

/// Spinorial metric on the f+ side: K* eta = (-k2 eta1 + k1 eta2) f+.
CenterScalar metric_fplus(const WeylSpinor& k, const WeylSpinor& eta);
/// Metric on the f- side: Kbar etabar* = (etab1 kb2 - etab2 kb1) f-.  Both
/// arguments are CDS spinors; the dual on etabar is applied internally.
CenterScalar metric_fminus(const WeylSpinor& kbar, const WeylSpinor& etabar);

/// |R conj(R) - 1|: zero exactly when R is a unit rotor.
double rotor_residual(const Multivector& r);

/// Transformation law per ideal:
///   CUS: R K,  CVUS: K* R^-1,  CDS: Kbar rev(R),  CVDS: hat(R) Kbar*.
/// Requires R conj(R) = 1 to 1e-10; throws otherwise (normalize R first).
WeylSpinor transform(const Multivector& r, const WeylSpinor& s);

}  // namespace clifford::weyl
