#include "clifford/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "clifford/center_scalar.hpp"
#include "clifford/cl03.hpp"
#include "clifford/dirac_hestenes.hpp"
#include "clifford/matrices.hpp"
#include "clifford/multivector.hpp"
#include "clifford/paravector.hpp"
#include "clifford/prng.hpp"
#include "clifford/representations.hpp"
#include "clifford/spacetime.hpp"
#include "clifford/weyl_spinors.hpp"

namespace clifford::verify {
namespace {

// ---------------------------------------------------------------------------
// Recording
// ---------------------------------------------------------------------------

class Collector {
 public:
  Collector(const RunConfig& cfg, SuiteReport& report) : cfg_(&cfg), report_(&report) {}

  /// Pass iff residual <= tolerance (after any configured override).
  void add(std::string id, double residual, double tolerance, int samples) {
    if (auto it = cfg_->tolerance_override.find(id); it != cfg_->tolerance_override.end()) {
      tolerance = it->second;
    }
    report_->checks.push_back({std::move(id), residual, tolerance, residual <= tolerance, samples});
  }

  /// Negative control: `measured` must stay at or above `floor`.  The
  /// recorded residual is the deficit max(0, floor - measured), so 0 passes.
  void add_floor(std::string id, double measured, double floor, int samples) {
    add(std::move(id), std::max(0.0, floor - measured), 0.0, samples);
  }

 private:
  const RunConfig* cfg_;
  SuiteReport* report_;
};

// ---------------------------------------------------------------------------
// Random inputs
// ---------------------------------------------------------------------------

Multivector random_mv(CounterRng& rng, Signature sig) {
  Multivector a(sig);
  for (unsigned m = 0; m < a.size(); ++m) a[m] = rng.unit();
  return a;
}

/// Coefficients on the 2^-20 grid: pairwise products and short sums of these
/// are exact in binary64, so checks built from them can demand tolerance 0.
Multivector random_dyadic_mv(CounterRng& rng, Signature sig) {
  Multivector a(sig);
  for (unsigned m = 0; m < a.size(); ++m) a[m] = rng.dyadic();
  return a;
}

Multivector random_even_mv(CounterRng& rng, Signature sig, bool dyadic) {
  Multivector a(sig);
  for (unsigned m = 0; m < a.size(); ++m) {
    if (blade_grade(m) % 2 == 0) a[m] = dyadic ? rng.dyadic() : rng.unit();
  }
  return a;
}

/// Random unit rotor of Cl(3,0): a normalized even element (the even
/// subalgebra is a quaternion algebra, so every nonzero even element rescales
/// to a unit rotor).
Multivector random_rotor30(CounterRng& rng) {
  for (;;) {
    const Multivector q = random_even_mv(rng, Signature::cl30(), false);
    const double n2 = scalar_part(q * conjugation(q));
    if (n2 > 1e-2) return q / std::sqrt(n2);
  }
}

CenterScalar random_center(CounterRng& rng, bool dyadic) {
  if (dyadic) return {rng.dyadic(), rng.dyadic()};
  return {rng.unit(), rng.unit()};
}

weyl::WeylSpinor random_spinor(CounterRng& rng, weyl::IdealTag kind, bool dyadic) {
  return {kind, random_center(rng, dyadic), random_center(rng, dyadic)};
}

cl03::Cx03 random_cx03(CounterRng& rng, bool dyadic) {
  if (dyadic) return {rng.dyadic(), rng.dyadic()};
  return {rng.unit(), rng.unit()};
}

SpacetimePoint random_point(CounterRng& rng) {
  return {rng.uniform(-2.0, 2.0),
          {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)}};
}

std::array<double, 3> random_momentum(CounterRng& rng, double scale) {
  return {scale * rng.unit(), scale * rng.unit(), scale * rng.unit()};
}

Multivector blade30(unsigned mask, double coeff = 1.0) {
  return Multivector::basis_blade(Signature::cl30(), mask, coeff);
}

Multivector blade03(unsigned mask, double coeff = 1.0) {
  return Multivector::basis_blade(Signature::cl03(), mask, coeff);
}

double cx03_diff(const cl03::Cx03& a, const cl03::Cx03& b) {
  return std::max(std::abs(a.re - b.re), std::abs(a.im - b.im));
}

double center_diff(const CenterScalar& a, const CenterScalar& b) {
  return std::max(std::abs(a.re - b.re), std::abs(a.im - b.im));
}

// ---------------------------------------------------------------------------
// core: product, involutions, pseudoscalars, grading
// ---------------------------------------------------------------------------

void suite_core(Collector& col, const RunConfig& cfg) {
  const CounterRng base(cfg.seed);
  const std::array<Signature, 3> sigs{Signature::cl30(), Signature::cl03(), Signature::cl13()};
  const std::array<std::string, 3> tag{"cl30", "cl03", "cl13"};
  const std::array<double, 3> pseudo_sq{-1.0, 1.0, -1.0};

  for (int s = 0; s < 3; ++s) {
    const Signature sig = sigs[s];

    {  // (ab)c == a(bc)
      CounterRng rng = base.split(101 + static_cast<std::uint64_t>(s));
      double worst = 0.0;
      for (int i = 0; i < cfg.samples; ++i) {
        const Multivector a = random_mv(rng, sig);
        const Multivector b = random_mv(rng, sig);
        const Multivector c = random_mv(rng, sig);
        worst = std::max(worst, inf_norm((a * b) * c - a * (b * c)));
      }
      col.add("core.assoc." + tag[s], worst, 1e-12, cfg.samples);
    }

    {  // ei ej + ej ei == 2 g_ij, exhaustively over generator pairs
      double worst = 0.0;
      int n = 0;
      for (int i = 1; i <= sig.dim(); ++i) {
        for (int j = 1; j <= sig.dim(); ++j) {
          const Multivector ei = Multivector::generator(sig, i);
          const Multivector ej = Multivector::generator(sig, j);
          Multivector lhs = ei * ej + ej * ei;
          if (i == j) lhs[0] -= 2.0 * sig.generator_square(i);
          worst = std::max(worst, inf_norm(lhs));
          ++n;
        }
      }
      col.add("core.anticommute." + tag[s], worst, 0.0, n);
    }

    {  // pseudoscalar square
      const Multivector omega = Multivector::basis_blade(sig, static_cast<unsigned>(sig.size()) - 1);
      Multivector r = omega * omega;
      r[0] -= pseudo_sq[static_cast<std::size_t>(s)];
      col.add("core.pseudo.square." + tag[s], inf_norm(r), 0.0, 1);
    }

    for (const char* name : {"reversion", "grade", "conjugation"}) {
      // involution laws: reversion/conjugation are antihomomorphisms, grade
      // involution is a homomorphism
      CounterRng rng = base.split(110 + static_cast<std::uint64_t>(s) * 8 +
                                  static_cast<std::uint64_t>(name[0]));
      double worst = 0.0;
      for (int i = 0; i < cfg.samples; ++i) {
        const Multivector a = random_mv(rng, sig);
        const Multivector b = random_mv(rng, sig);
        double r = 0.0;
        if (name[0] == 'r') r = inf_norm(reversion(a * b) - reversion(b) * reversion(a));
        if (name[0] == 'g') r = inf_norm(grade_involution(a * b) - grade_involution(a) * grade_involution(b));
        if (name[0] == 'c') r = inf_norm(conjugation(a * b) - conjugation(b) * conjugation(a));
        worst = std::max(worst, r);
      }
      col.add(std::string("core.involution.") + name + "." + tag[s], worst, 1e-12, cfg.samples);
    }
  }

  {  // pseudoscalar centrality: all of Cl(3,0)/Cl(0,3); the even part in Cl(1,3)
    CounterRng rng = base.split(130);
    double w30 = 0.0, w03 = 0.0, w13 = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector a = random_mv(rng, Signature::cl30());
      const Multivector b = random_mv(rng, Signature::cl03());
      const Multivector c = random_even_mv(rng, Signature::cl13(), false);
      const Multivector w3 = blade30(0b111);
      const Multivector w0 = blade03(0b111);
      const Multivector w1 = Multivector::basis_blade(Signature::cl13(), 0b1111);
      w30 = std::max(w30, inf_norm(w3 * a - a * w3));
      w03 = std::max(w03, inf_norm(w0 * b - b * w0));
      w13 = std::max(w13, inf_norm(w1 * c - c * w1));
    }
    col.add("core.pseudo.central.cl30", w30, 0.0, cfg.samples);
    col.add("core.pseudo.central.cl03", w03, 0.0, cfg.samples);
    col.add("core.pseudo.central.cl13even", w13, 0.0, cfg.samples);
  }

  {  // grade projections partition the element; even/odd split recombines
    CounterRng rng = base.split(131);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Signature sig = sigs[static_cast<std::size_t>(i % 3)];
      const Multivector a = random_dyadic_mv(rng, sig);
      Multivector sum = grade_projection(a, 0);
      for (int k = 1; k <= sig.dim(); ++k) sum += grade_projection(a, k);
      worst = std::max(worst, inf_norm(sum - a));
      worst = std::max(worst, inf_norm(even_part(a) + odd_part(a) - a));
    }
    col.add("core.grade.split", worst, 0.0, cfg.samples);
  }

  {  // conjugation == reversion o grade involution (both orders); all three square to id
    CounterRng rng = base.split(132);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Signature sig = sigs[static_cast<std::size_t>(i % 3)];
      const Multivector a = random_mv(rng, sig);
      worst = std::max(worst, inf_norm(conjugation(a) - reversion(grade_involution(a))));
      worst = std::max(worst, inf_norm(conjugation(a) - grade_involution(reversion(a))));
      worst = std::max(worst, inf_norm(reversion(reversion(a)) - a));
      worst = std::max(worst, inf_norm(grade_involution(grade_involution(a)) - a));
      worst = std::max(worst, inf_norm(conjugation(conjugation(a)) - a));
    }
    col.add("core.involution.composition", worst, 0.0, cfg.samples);
  }

  {  // center split of Cl(3,0): grades 0+3 against grades 1+2, recombining exactly
    CounterRng rng = base.split(133);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector a = random_mv(rng, Signature::cl30());
      const CenterDecomposition d = center_decompose(a);
      worst = std::max(worst, inf_norm(d.center.to_multivector() + d.remainder - a));
      worst = std::max(worst, std::abs(d.remainder[0]));
      worst = std::max(worst, std::abs(d.remainder[0b111]));
      worst = std::max(worst, std::abs(d.center.re - a[0]));
      worst = std::max(worst, std::abs(d.center.im - a[0b111]));
    }
    col.add("core.center.decompose", worst, 0.0, cfg.samples);
  }

  {  // exp(a) exp(-a) == 1 on elements with scalar square (vectors, bivectors)
    CounterRng rng = base.split(134);
    const Multivector one = Multivector::scalar(Signature::cl30(), 1.0);
    double worst = 0.0;
    const int n = std::max(1, cfg.samples / 10);
    for (int i = 0; i < n; ++i) {
      Multivector b(Signature::cl30());
      for (unsigned m : {0b011u, 0b101u, 0b110u}) b[m] = rng.unit();
      Multivector v(Signature::cl30());
      for (unsigned m : {0b001u, 0b010u, 0b100u}) v[m] = rng.unit();
      worst = std::max(worst, inf_norm(mv_exp(b) * mv_exp(-b) - one));
      worst = std::max(worst, inf_norm(mv_exp(v) * mv_exp(-v) - one));
    }
    col.add("core.exp.inverse", worst, 1e-12, 2 * n);
  }

  {  // blade metric pairing equals <reversion(a) b>_0
    CounterRng rng = base.split(135);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Signature sig = sigs[static_cast<std::size_t>(i % 3)];
      const Multivector a = random_mv(rng, sig);
      const Multivector b = random_mv(rng, sig);
      worst = std::max(worst, std::abs(extended_metric(a, b) - scalar_part(reversion(a) * b)));
    }
    col.add("core.metric.extended", worst, 1e-12, cfg.samples);
  }
}

// ---------------------------------------------------------------------------
// rep: Pauli representation of Cl(3,0), Dirac representation of Cl(1,3)+
// ---------------------------------------------------------------------------

void suite_rep(Collector& col, const RunConfig& cfg) {
  using rep::Complex;
  using rep::Mat2;
  using rep::Mat4;
  const CounterRng base(cfg.seed);
  const Signature s30 = Signature::cl30();
  const Signature s13 = Signature::cl13();

  {  // the eight blade images, pinned entry by entry
    const Complex I(0.0, 1.0);
    const std::array<Mat2, 8> expected{
        Mat2{{Complex(1), Complex(0), Complex(0), Complex(1)}},    // 1
        Mat2{{Complex(0), Complex(1), Complex(1), Complex(0)}},    // e1 -> sigma1
        Mat2{{Complex(0), -I, I, Complex(0)}},                     // e2 -> sigma2
        Mat2{{I, Complex(0), Complex(0), -I}},                     // e12 -> i sigma3
        Mat2{{Complex(1), Complex(0), Complex(0), Complex(-1)}},   // e3 -> sigma3
        Mat2{{Complex(0), Complex(-1), Complex(1), Complex(0)}},   // e13 -> -i sigma2
        Mat2{{Complex(0), I, I, Complex(0)}},                      // e23 -> i sigma1
        Mat2{{I, Complex(0), Complex(0), I}},                      // e123 -> i
    };
    double worst = 0.0;
    for (unsigned m = 0; m < 8; ++m) {
      worst = std::max(worst, rep::max_abs_diff(rep::rep_cl30(blade30(m)), expected[m]));
    }
    col.add("rep.cl30.blades.pinned", worst, 0.0, 8);
  }

  {  // multiplicativity: rep(ab) == rep(a) rep(b)
    CounterRng rng = base.split(201);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector a = random_dyadic_mv(rng, s30);
      const Multivector b = random_dyadic_mv(rng, s30);
      worst = std::max(worst, rep::max_abs_diff(rep::rep_cl30(a * b), rep::rep_cl30(a) * rep::rep_cl30(b)));
    }
    col.add("rep.cl30.hom", worst, 0.0, cfg.samples);
  }

  {  // rep(reversion(a)) == rep(a)^dagger
    CounterRng rng = base.split(202);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector a = random_dyadic_mv(rng, s30);
      worst = std::max(worst, rep::max_abs_diff(rep::rep_cl30(reversion(a)), rep::rep_cl30(a).adjoint()));
    }
    col.add("rep.cl30.adjoint", worst, 0.0, cfg.samples);
  }

  {  // rep and its inverse are mutually inverse bijections
    CounterRng rng = base.split(203);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector a = random_dyadic_mv(rng, s30);
      worst = std::max(worst, inf_norm(rep::rep_cl30_inverse(rep::rep_cl30(a)) - a));
      Mat2 m;
      for (auto& e : m.e) e = Complex(rng.dyadic(), rng.dyadic());
      worst = std::max(worst, rep::max_abs_diff(rep::rep_cl30(rep::rep_cl30_inverse(m)), m));
    }
    col.add("rep.cl30.roundtrip", worst, 0.0, cfg.samples);
  }

  {  // the closed-form even-element matrix agrees with the blade images
    CounterRng rng = base.split(204);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector r = random_even_mv(rng, s30, false);
      worst = std::max(worst, rep::max_abs_diff(rep::rep_R_matrix(r), rep::rep_cl30(r)));
    }
    col.add("rep.rotor.matrix", worst, 0.0, cfg.samples);
  }

  {  // det rep(R) == <R conj(R)>_0 for even R
    CounterRng rng = base.split(205);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector r = random_even_mv(rng, s30, false);
      const Complex d = rep::rep_R_matrix(r).det();
      worst = std::max(worst, std::abs(d - Complex(scalar_part(r * conjugation(r)), 0.0)));
    }
    col.add("rep.rotor.det", worst, 1e-12, cfg.samples);
  }

  {  // rep(hat R) == [rep(R)^dagger]^{-1} for unit rotors
    CounterRng rng = base.split(206);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector r = random_rotor30(rng);
      const Mat2 lhs = rep::rep_cl30(grade_involution(r));
      const Mat2 rhs = rep::rep_cl30(r).adjoint().inverse();
      worst = std::max(worst, rep::max_abs_diff(lhs, rhs));
    }
    col.add("rep.rotor.unitary", worst, 1e-12, cfg.samples);
  }

  {  // index-lowered gamma matrices: pairwise Clifford relations, integer-exact
    const rep::GammaBasis& g = rep::GammaBasis::standard();
    const Complex minus1(-1.0, 0.0);
    const std::array<Mat4, 4> lowered{g.gamma[0], minus1 * g.gamma[1], minus1 * g.gamma[2],
                                      minus1 * g.gamma[3]};
    const std::array<double, 4> eta{1.0, -1.0, -1.0, -1.0};
    double worst = 0.0;
    int n = 0;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        Mat4 lhs = lowered[static_cast<std::size_t>(a)] * lowered[static_cast<std::size_t>(b)] +
                   lowered[static_cast<std::size_t>(b)] * lowered[static_cast<std::size_t>(a)];
        const double want = (a == b) ? 2.0 * eta[static_cast<std::size_t>(a)] : 0.0;
        lhs = lhs - Complex(want, 0.0) * Mat4::identity();
        worst = std::max(worst, rep::max_abs_diff(lhs, Mat4::zero()));
        ++n;
      }
    }
    col.add("rep.cl13.gamma.relations", worst, 0.0, n);
  }

  {  // image of gamma_1 gamma_2 pinned to diag(-i, i, -i, i)
    const Complex I(0.0, 1.0);
    Mat4 want = Mat4::zero();
    want.at(0, 0) = -I;
    want.at(1, 1) = I;
    want.at(2, 2) = -I;
    want.at(3, 3) = I;
    const Multivector g12 = Multivector::basis_blade(s13, 0b0110);
    col.add("rep.cl13.pinned.g12", rep::max_abs_diff(rep::rep_cl13_even(g12), want), 0.0, 1);
  }

  {  // multiplicativity on the even subalgebra
    CounterRng rng = base.split(207);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector x = random_even_mv(rng, s13, true);
      const Multivector y = random_even_mv(rng, s13, true);
      worst = std::max(worst, rep::max_abs_diff(rep::rep_cl13_even(x * y),
                                                rep::rep_cl13_even(x) * rep::rep_cl13_even(y)));
    }
    col.add("rep.cl13.hom", worst, 0.0, cfg.samples);
  }

  {  // Cl(1,3)+ <-> Cl(3,0): inverse bijections, both directions
    CounterRng rng = base.split(208);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector x = random_even_mv(rng, s13, true);
      worst = std::max(worst, inf_norm(rep::iso_from_cl30(rep::iso_to_cl30(x)) - x));
      const Multivector a = random_dyadic_mv(rng, s30);
      worst = std::max(worst, inf_norm(rep::iso_to_cl30(rep::iso_from_cl30(a)) - a));
    }
    col.add("rep.iso.roundtrip", worst, 0.0, cfg.samples);
  }

  {  // the correspondence is an algebra isomorphism
    CounterRng rng = base.split(209);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector x = random_even_mv(rng, s13, true);
      const Multivector y = random_even_mv(rng, s13, true);
      worst = std::max(worst, inf_norm(rep::iso_to_cl30(x * y) - rep::iso_to_cl30(x) * rep::iso_to_cl30(y)));
    }
    col.add("rep.iso.hom", worst, 0.0, cfg.samples);
  }
}

// ---------------------------------------------------------------------------
// weyl: minimal ideals of Cl(3,0), dual spinors, invariant metrics
// ---------------------------------------------------------------------------

void suite_weyl(Collector& col, const RunConfig& cfg) {
  using weyl::IdealTag;
  const CounterRng base(cfg.seed);
  const Signature s30 = Signature::cl30();
  const Multivector fp = weyl::f_plus();
  const Multivector fm = weyl::f_minus();
  const Multivector e1 = blade30(0b001);
  const Multivector one = Multivector::scalar(s30, 1.0);

  {  // idempotent algebra of f+- and the relations used throughout
    double worst = 0.0;
    worst = std::max(worst, inf_norm(fp * fp - fp));
    worst = std::max(worst, inf_norm(fm * fm - fm));
    worst = std::max(worst, inf_norm(fp * fm));
    worst = std::max(worst, inf_norm(fm * fp));
    worst = std::max(worst, inf_norm(fp + fm - one));
    worst = std::max(worst, inf_norm(blade30(0b100) * fp - fp));           // e3 f+ = f+
    worst = std::max(worst, inf_norm(e1 * fp - fm * e1));                  // e1 f+ = f- e1
    worst = std::max(worst, inf_norm(blade30(0b111) * fp - blade30(0b011) * fp));  // e123 f+ = e12 f+
    worst = std::max(worst, inf_norm(fp * blade30(0b001) * fp));           // f+ e1 f+ = 0
    col.add("weyl.idempotent.algebra", worst, 0.0, 9);
  }

  {  // embed and extract are mutually inverse on all four ideals
    CounterRng rng = base.split(301);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const IdealTag kind = static_cast<IdealTag>(i % 4);
      const weyl::WeylSpinor s = random_spinor(rng, kind, true);
      const weyl::WeylSpinor back = weyl::spinor_from_ideal(weyl::embed(s), kind);
      worst = std::max(worst, center_diff(back.c1, s.c1));
      worst = std::max(worst, center_diff(back.c2, s.c2));
    }
    col.add("weyl.embed.roundtrip", worst, 0.0, cfg.samples);
  }

  {  // the even representative: psi' even, psi' f+ == psi f+
    CounterRng rng = base.split(302);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector psi = random_dyadic_mv(rng, s30);
      const Multivector r = weyl::reduce_to_even(psi);
      worst = std::max(worst, inf_norm(odd_part(r)));
      worst = std::max(worst, inf_norm(r * fp - psi * fp));
    }
    col.add("weyl.reduce.even", worst, 0.0, cfg.samples);
  }

  {  // component read-off of the even representative hits psi f+ on the nose
    CounterRng rng = base.split(303);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector psi = random_dyadic_mv(rng, s30);
      const weyl::WeylSpinor k = weyl::cus_from_even(weyl::reduce_to_even(psi));
      worst = std::max(worst, inf_norm(weyl::embed(k) - psi * fp));
    }
    col.add("weyl.even.components", worst, 0.0, cfg.samples);
  }

  {  // dual/conjugate spinors realised as algebra operations, with the
     // boxed component relations (c1, c2) -> (-c2, c1) checked on the side
    CounterRng rng = base.split(304);
    double w_cvus = 0.0, w_cds = 0.0, w_cvds = 0.0, w_closure = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const weyl::WeylSpinor k = random_spinor(rng, IdealTag::LeftPlus, true);

      const weyl::WeylSpinor ks = weyl::to_cvus(k);
      w_cvus = std::max(w_cvus, inf_norm(weyl::embed(ks) - e1 * conjugation(weyl::embed(k))));
      w_cvus = std::max(w_cvus, center_diff(ks.c1, -k.c2));
      w_cvus = std::max(w_cvus, center_diff(ks.c2, k.c1));

      const weyl::WeylSpinor kbar = weyl::to_cds(k);
      w_cds = std::max(w_cds, inf_norm(weyl::embed(kbar) - e1 * reversion(weyl::embed(k))));
      w_cds = std::max(w_cds, center_diff(kbar.c1, k.c1.conj()));
      w_cds = std::max(w_cds, center_diff(kbar.c2, k.c2.conj()));

      const weyl::WeylSpinor kbs = weyl::to_cvds(kbar);
      w_cvds = std::max(w_cvds, inf_norm(weyl::embed(kbs) - conjugation(e1 * weyl::embed(kbar))));
      w_cvds = std::max(w_cvds, center_diff(kbs.c1, -kbar.c2));
      w_cvds = std::max(w_cvds, center_diff(kbs.c2, kbar.c1));

      // chasing the square: dual of the conjugate equals the grade involute
      w_closure = std::max(w_closure,
                           inf_norm(weyl::embed(weyl::to_cvds(weyl::to_cds(k))) -
                                    grade_involution(weyl::embed(k))));
    }
    col.add("weyl.dual.cvus", w_cvus, 0.0, cfg.samples);
    col.add("weyl.dual.cds", w_cds, 0.0, cfg.samples);
    col.add("weyl.dual.cvds", w_cvds, 0.0, cfg.samples);
    col.add("weyl.dual.closure", w_closure, 0.0, cfg.samples);
  }

  {  // the f+ metric as an algebraic product: embed(K*) embed(eta) == g f+
    CounterRng rng = base.split(305);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const weyl::WeylSpinor k = random_spinor(rng, IdealTag::LeftPlus, true);
      const weyl::WeylSpinor eta = random_spinor(rng, IdealTag::LeftPlus, true);
      const CenterScalar g = weyl::metric_fplus(k, eta);
      const Multivector lhs = weyl::embed(weyl::to_cvus(k)) * weyl::embed(eta);
      worst = std::max(worst, inf_norm(lhs - g.to_multivector() * fp));
    }
    col.add("weyl.metric.fplus.algebra", worst, 0.0, cfg.samples);
  }

  {  // the f- metric likewise: embed(Kbar) embed(Kbar*') == g f-
    CounterRng rng = base.split(306);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const weyl::WeylSpinor kbar = random_spinor(rng, IdealTag::RightMinus, true);
      const weyl::WeylSpinor etabar = random_spinor(rng, IdealTag::RightMinus, true);
      const CenterScalar g = weyl::metric_fminus(kbar, etabar);
      const Multivector lhs = weyl::embed(kbar) * weyl::embed(weyl::to_cvds(etabar));
      worst = std::max(worst, inf_norm(lhs - g.to_multivector() * fm));
    }
    col.add("weyl.metric.fminus.algebra", worst, 0.0, cfg.samples);
  }

  {  // rotor invariance of both metrics
    CounterRng rng = base.split(307);
    const int n = 200;
    double wp = 0.0, wm = 0.0;
    for (int i = 0; i < n; ++i) {
      const Multivector r = random_rotor30(rng);
      const weyl::WeylSpinor k = random_spinor(rng, IdealTag::LeftPlus, false);
      const weyl::WeylSpinor eta = random_spinor(rng, IdealTag::LeftPlus, false);
      wp = std::max(wp, center_diff(weyl::metric_fplus(weyl::transform(r, k), weyl::transform(r, eta)),
                                    weyl::metric_fplus(k, eta)));
      const weyl::WeylSpinor kbar = random_spinor(rng, IdealTag::RightMinus, false);
      const weyl::WeylSpinor etabar = random_spinor(rng, IdealTag::RightMinus, false);
      wm = std::max(wm, center_diff(weyl::metric_fminus(weyl::transform(r, kbar), weyl::transform(r, etabar)),
                                    weyl::metric_fminus(kbar, etabar)));
    }
    col.add("weyl.metric.fplus.invariance", wp, 1e-12, n);
    col.add("weyl.metric.fminus.invariance", wm, 1e-12, n);
  }

  {  // each ideal carries its own side of the rotor action
    CounterRng rng = base.split(308);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector r = random_rotor30(rng);
      const IdealTag kind = static_cast<IdealTag>(i % 4);
      const weyl::WeylSpinor s = random_spinor(rng, kind, false);
      const Multivector x = weyl::embed(s);
      Multivector want(s30);
      switch (kind) {
        case IdealTag::LeftPlus: want = r * x; break;
        case IdealTag::RightPlus: want = x * conjugation(r); break;
        case IdealTag::RightMinus: want = x * reversion(r); break;
        case IdealTag::LeftMinus: want = grade_involution(r) * x; break;
      }
      worst = std::max(worst, inf_norm(weyl::embed(weyl::transform(r, s)) - want));
    }
    col.add("weyl.transform.laws", worst, 1e-12, cfg.samples);
  }

  {  // non-rotor transforms and non-ideal elements are rejected
    bool threw_transform = false;
    try {
      weyl::transform(one + e1, weyl::WeylSpinor{IdealTag::LeftPlus, {1.0, 0.0}, {0.0, 0.0}});
    } catch (const std::invalid_argument&) {
      threw_transform = true;
    }
    col.add_floor("weyl.transform.reject", threw_transform ? 1.0 : 0.0, 1.0, 1);

    bool threw_ideal = false;
    try {
      weyl::spinor_from_ideal(blade30(0b010), IdealTag::LeftPlus);
    } catch (const std::invalid_argument&) {
      threw_ideal = true;
    }
    col.add_floor("weyl.ideal.reject", threw_ideal ? 1.0 : 0.0, 1.0, 1);
  }
}

// ---------------------------------------------------------------------------
// dirac: boosts, plane waves, split systems, polar decomposition, columns
// ---------------------------------------------------------------------------

/// Plane-wave field, optionally sabotaged by replacing the boost L(p) with
/// L(-p).  The sabotage is the negative-control hook: it must make the
/// boosted-wave residual check fail.
dirac::Mv30Field make_wave(const dirac::PlaneWaveParams& params, bool flip_boost) {
  dirac::Mv30Field f = dirac::planewave_field(params);
  if (!flip_boost || (params.p[0] == 0.0 && params.p[1] == 0.0 && params.p[2] == 0.0)) return f;
  const std::array<double, 3> neg{-params.p[0], -params.p[1], -params.p[2]};
  const Multivector fix =
      dirac::boost(neg, params.m) * conjugation(dirac::boost(params.p, params.m));
  return dirac::transform_field(f, [fix](const Multivector& x) { return fix * x; });
}

void suite_dirac(Collector& col, const RunConfig& cfg) {
  using dirac::FrequencyBranch;
  using dirac::SpinLabel;
  const CounterRng base(cfg.seed);
  const Signature s30 = Signature::cl30();
  const dirac::PotentialField free_pot = dirac::PotentialField::zero();
  const std::array<FrequencyBranch, 2> branches{FrequencyBranch::Plus, FrequencyBranch::Minus};
  const std::array<SpinLabel, 2> spins{SpinLabel::Up, SpinLabel::Down};
  const std::array<double, 3> masses{0.5, 1.0, 2.0};

  auto momentum_mv = [&](const std::array<double, 3>& p) {
    Multivector v(s30);
    v[0b001] = p[0];
    v[0b010] = p[1];
    v[0b100] = p[2];
    return v;
  };

  {  // boost properties: (E - p) L == m hat(L), L conj(L) == 1, L (E - p) L == m
    CounterRng rng = base.split(401);
    double w_def = 0.0, w_unit = 0.0, w_sand = 0.0;
    const int n = 60;
    for (int i = 0; i < n; ++i) {
      const double m = masses[static_cast<std::size_t>(i) % 3];
      const std::array<double, 3> p = random_momentum(rng, 2.0 * m / std::numbers::sqrt3);
      const double e = std::sqrt(m * m + p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
      const Multivector l = dirac::boost(p, m);
      const Multivector ep = Multivector::scalar(s30, e) - momentum_mv(p);
      w_def = std::max(w_def, inf_norm(ep * l - m * grade_involution(l)));
      w_unit = std::max(w_unit, inf_norm(l * conjugation(l) - Multivector::scalar(s30, 1.0)));
      w_sand = std::max(w_sand, inf_norm(l * ep * l - Multivector::scalar(s30, m)));
    }
    col.add("dirac.boost.defining", w_def, 1e-12, n);
    col.add("dirac.boost.unit", w_unit, 1e-12, n);
    col.add("dirac.boost.sandwich", w_sand, 1e-12, n);
  }

  {  // rest solutions: all four branch/spin labels solve the free equation
    CounterRng rng = base.split(402);
    double worst = 0.0;
    int n = 0;
    for (FrequencyBranch b : branches) {
      for (SpinLabel s : spins) {
        for (double m : masses) {
          const dirac::Mv30Field wave = make_wave({b, s, {0.0, 0.0, 0.0}, m}, false);
          for (int i = 0; i < 5; ++i) {
            worst = std::max(worst, inf_norm(dirac::dhe_residual(wave, free_pot, m, random_point(rng))));
            ++n;
          }
        }
      }
    }
    col.add("dirac.planewave.rest", worst, 1e-10, n);
  }

  {  // boosted solutions over random momenta; carries the sabotage hook
    CounterRng rng = base.split(403);
    double worst = 0.0;
    int n = 0;
    for (double m : masses) {
      for (int ip = 0; ip < 20; ++ip) {
        const std::array<double, 3> p = random_momentum(rng, 2.0 * m / std::numbers::sqrt3);
        for (FrequencyBranch b : branches) {
          for (SpinLabel s : spins) {
            const dirac::Mv30Field wave = make_wave({b, s, p, m}, cfg.flip_boost_sign);
            worst = std::max(worst, inf_norm(dirac::dhe_residual(wave, free_pot, m, random_point(rng))));
            ++n;
          }
        }
      }
    }
    col.add("dirac.planewave.boosted", worst, 1e-10, n);
  }

  {  // the same solutions pass with derivatives from central differences
    CounterRng rng = base.split(404);
    double worst = 0.0;
    int n = 0;
    for (double m : masses) {
      for (int ip = 0; ip < 20; ++ip) {
        const std::array<double, 3> p = random_momentum(rng, 2.0 * m / std::numbers::sqrt3);
        for (FrequencyBranch b : branches) {
          for (SpinLabel s : spins) {
            const dirac::Mv30Field wave = make_wave({b, s, p, m}, false).without_gradient();
            worst = std::max(worst, inf_norm(dirac::dhe_residual(wave, free_pot, m, random_point(rng))));
            ++n;
          }
        }
      }
    }
    col.add("dirac.planewave.fd", worst, 1e-4, n);
  }

  {  // central differences converge at second order: halving h quarters the error
    const dirac::PlaneWaveParams params{FrequencyBranch::Plus, SpinLabel::Up, {0.3, -0.2, 0.5}, 1.0};
    const SpacetimePoint pt{0.3, {0.1, -0.4, 0.2}};
    const dirac::Mv30Field fd = dirac::planewave_field(params).without_gradient();
    std::array<double, 3> err{};
    double h = 1e-2;
    for (int i = 0; i < 3; ++i, h *= 0.5) {
      err[static_cast<std::size_t>(i)] =
          inf_norm(dirac::dhe_residual(fd.with_step(h), free_pot, params.m, pt));
    }
    const double q1 = err[0] / err[1];
    const double q2 = err[1] / err[2];
    double out_of_band = 0.0;
    for (double q : {q1, q2}) {
      out_of_band = std::max(out_of_band, std::max(3.5 - q, q - 4.5));
    }
    col.add("dirac.fd.convergence", std::max(0.0, out_of_band), 0.0, 2);
  }

  {  // momentum operator eigenrelation on the pure oscillating factor
    CounterRng rng = base.split(405);
    double worst = 0.0;
    const int n = 50;
    for (int i = 0; i < n; ++i) {
      const std::array<double, 3> p = random_momentum(rng, 1.5);
      const double e = rng.uniform(0.5, 2.0);
      auto phase = [p, e](const SpacetimePoint& pt) {
        return e * pt.t - (p[0] * pt.x[0] + p[1] * pt.x[1] + p[2] * pt.x[2]);
      };
      auto value = [phase](const SpacetimePoint& pt) {
        Multivector m(Signature::cl30());
        m[0] = std::cos(phase(pt));
        m[0b011] = -std::sin(phase(pt));
        return m;
      };
      auto grad = [phase, p, e, value](const SpacetimePoint& pt) -> std::array<Multivector, 4> {
        const Multivector d = value(pt) * blade30(0b011, -1.0);  // d/dphi
        return {d * e, d * -p[0], d * -p[1], d * -p[2]};
      };
      const dirac::Mv30Field osc(value, grad);
      const SpacetimePoint pt = random_point(rng);
      worst = std::max(worst,
                       inf_norm(dirac::momentum_apply(osc, pt) + momentum_mv(p) * osc.value(pt)));
    }
    col.add("dirac.momentum.eigen", worst, 1e-12, n);
  }

  {  // right phase freedom preserves solutions ...
    CounterRng rng = base.split(406);
    double worst = 0.0;
    const int n = 40;
    for (int i = 0; i < n; ++i) {
      const dirac::PlaneWaveParams params{branches[static_cast<std::size_t>(i) % 2],
                                          spins[static_cast<std::size_t>(i / 2) % 2],
                                          random_momentum(rng, 1.0), 1.0};
      const dirac::Mv30Field shifted_wave =
          dirac::right_phase(make_wave(params, false), rng.unit(), rng.unit());
      worst = std::max(worst,
                       inf_norm(dirac::dhe_residual(shifted_wave, free_pot, params.m, random_point(rng))));
    }
    col.add("dirac.phase.right", worst, 1e-10, n);
  }

  {  // ... while the left-handed counterpart breaks them (negative control)
    CounterRng rng = base.split(407);
    const Multivector e12 = blade30(0b011);
    double weakest = 1e300;
    const int n = 12;
    for (int i = 0; i < n; ++i) {
      const dirac::PlaneWaveParams params{FrequencyBranch::Plus, SpinLabel::Down,
                                          {0.3, -0.2, 0.5}, 1.0};
      const dirac::Mv30Field bad =
          dirac::transform_field(make_wave(params, false),
                                 [e12](const Multivector& x) { return e12 * x; });
      weakest = std::min(weakest,
                         inf_norm(dirac::dhe_residual(bad, free_pot, params.m, random_point(rng))));
    }
    col.add_floor("dirac.phase.left.control", weakest, 0.1, n);
  }

  {  // both splits recombine to psi exactly
    CounterRng rng = base.split(408);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector psi = random_dyadic_mv(rng, s30);
      const auto [xi, eta_hat] = dirac::weyl_split(psi);
      worst = std::max(worst, inf_norm(xi + eta_hat - psi));
      const auto [phi, chi] = dirac::pauli_split(psi);
      worst = std::max(worst, inf_norm(phi + chi * blade30(0b100) - psi));
    }
    col.add("dirac.split.recombine", worst, 0.0, cfg.samples);
  }

  {  // the coupled first-order systems vanish on plane-wave solutions
    CounterRng rng = base.split(409);
    const Multivector fp = weyl::f_plus();
    const Multivector fm = weyl::f_minus();
    double w_weyl = 0.0, w_pauli = 0.0;
    int n = 0;
    for (FrequencyBranch b : branches) {
      for (SpinLabel s : spins) {
        const dirac::PlaneWaveParams params{b, s, {0.4, 0.1, -0.3}, 1.0};
        const dirac::Mv30Field wave = make_wave(params, false);
        const dirac::Mv30Field xi =
            dirac::transform_field(wave, [fp](const Multivector& x) { return x * fp; });
        const dirac::Mv30Field eta =
            dirac::transform_field(wave, [fm](const Multivector& x) { return grade_involution(x * fm); });
        const dirac::Mv30Field phi =
            dirac::transform_field(wave, [](const Multivector& x) { return even_part(x); });
        const dirac::Mv30Field chi =
            dirac::transform_field(wave, [](const Multivector& x) { return odd_part(x) * blade30(0b100); });
        for (int i = 0; i < 5; ++i) {
          const SpacetimePoint pt = random_point(rng);
          const auto [r1, r2] = dirac::weyl_residuals(xi, eta, params.m, pt);
          w_weyl = std::max(w_weyl, std::max(inf_norm(r1), inf_norm(r2)));
          const auto [q1, q2] = dirac::pauli_residuals(phi, chi, params.m, pt);
          w_pauli = std::max(w_pauli, std::max(inf_norm(q1), inf_norm(q2)));
          ++n;
        }
      }
    }
    col.add("dirac.weyl.system", w_weyl, 1e-10, n);
    col.add("dirac.pauli.system", w_pauli, 1e-10, n);
  }

  {  // detuning the mass leaves exactly (m - m') eta in the first residual
    CounterRng rng = base.split(410);
    const Multivector fp = weyl::f_plus();
    const Multivector fm = weyl::f_minus();
    double worst = 0.0;
    const int n = 20;
    for (int i = 0; i < n; ++i) {
      const dirac::PlaneWaveParams params{branches[static_cast<std::size_t>(i) % 2], SpinLabel::Up,
                                          {0.2, -0.1, 0.4}, 1.0};
      const dirac::Mv30Field wave = make_wave(params, false);
      const dirac::Mv30Field xi =
          dirac::transform_field(wave, [fp](const Multivector& x) { return x * fp; });
      const dirac::Mv30Field eta =
          dirac::transform_field(wave, [fm](const Multivector& x) { return grade_involution(x * fm); });
      const double wrong = params.m + rng.uniform(0.1, 1.0);
      const SpacetimePoint pt = random_point(rng);
      const auto [r1, r2] = dirac::weyl_residuals(xi, eta, wrong, pt);
      (void)r2;
      worst = std::max(worst, inf_norm(r1 - (params.m - wrong) * eta.value(pt)));
    }
    col.add("dirac.mass.mismatch", worst, 1e-12, n);
  }

  {  // assembling psi from two ideal spinors inverts the split
    CounterRng rng = base.split(411);
    const Multivector fp = weyl::f_plus();
    const Multivector fm = weyl::f_minus();
    const Multivector e1 = blade30(0b001);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const weyl::WeylSpinor k = random_spinor(rng, weyl::IdealTag::LeftPlus, true);
      const weyl::WeylSpinor l = random_spinor(rng, weyl::IdealTag::LeftPlus, true);
      const Multivector psi = dirac::dirac_from_weyl(k, l);
      worst = std::max(worst, inf_norm(psi * fp - weyl::embed(k)));
      worst = std::max(worst, inf_norm(psi * fm * e1 - weyl::embed(l)));
    }
    col.add("dirac.from.weyl", worst, 0.0, cfg.samples);
  }

  {  // polar decomposition: reconstruction, unit rotor, beta in (-pi, pi]
    CounterRng rng = base.split(412);
    const Multivector e123 = blade30(0b111);
    double w_round = 0.0, w_rotor = 0.0, w_beta = 0.0;
    int used = 0;
    while (used < cfg.samples) {
      const Multivector psi = random_mv(rng, s30);
      const Multivector s = psi * conjugation(psi);
      const double scale = inf_norm(psi);
      if (std::hypot(s[0], s[0b111]) < 1e-3 * scale * scale || scale == 0.0) continue;
      ++used;
      const dirac::LounestoDecomposition d = dirac::lounesto_decompose(psi);
      const Multivector recon =
          std::sqrt(d.rho) * mv_exp(blade30(0b111, d.beta / 2.0)) * d.rotor;
      w_round = std::max(w_round, inf_norm(recon - psi));
      w_rotor = std::max(w_rotor,
                         inf_norm(d.rotor * conjugation(d.rotor) - Multivector::scalar(s30, 1.0)));
      w_beta = std::max(w_beta, std::max(0.0, std::abs(d.beta) - std::numbers::pi));
      if (d.beta <= -std::numbers::pi) w_beta = std::max(w_beta, 1.0);
    }
    // the negative-real edge: psi conj(psi) = -1 must land on beta = +pi
    const dirac::LounestoDecomposition edge = dirac::lounesto_decompose(e123);
    w_beta = std::max(w_beta, std::abs(edge.beta - std::numbers::pi));
    w_round = std::max(w_round, inf_norm(std::sqrt(edge.rho) *
                                             mv_exp(blade30(0b111, edge.beta / 2.0)) * edge.rotor -
                                         e123));
    col.add("dirac.lounesto.roundtrip", w_round, 1e-12, used + 1);
    col.add("dirac.lounesto.rotor", w_rotor, 1e-12, used);
    col.add("dirac.lounesto.beta", w_beta, 1e-12, used + 1);

    bool threw = false;
    try {
      dirac::lounesto_decompose(weyl::f_plus());  // psi conj(psi) == 0 here
    } catch (const std::domain_error&) {
      threw = true;
    }
    col.add_floor("dirac.lounesto.singular", threw ? 1.0 : 0.0, 1.0, 1);
  }

  {  // rest-frame column spinors against the closed-form exponentials
    CounterRng rng = base.split(413);
    using rep::Complex;
    double worst = 0.0;
    const int n = 20;
    for (int i = 0; i < n; ++i) {
      const FrequencyBranch b = branches[static_cast<std::size_t>(i) % 2];
      const SpinLabel s = spins[static_cast<std::size_t>(i / 2) % 2];
      const double m = 1.0;
      const double t = rng.uniform(-2.0, 2.0);
      const std::array<Complex, 4> got =
          rep::dirac_column(dirac::planewave({b, s, {0.0, 0.0, 0.0}, m}, {t, {0.0, 0.0, 0.0}}));
      // The upper-block columns rotate as exp(-imt); the lower-block pair
      // picks up the constant +i because the matrix images of the spatial
      // time-space bivectors carry the lowered-index sign.
      std::array<Complex, 4> want{};
      const Complex em(std::cos(m * t), -std::sin(m * t));   // exp(-imt)
      const Complex ep(std::cos(m * t), std::sin(m * t));    // exp(+imt)
      const Complex iu(0.0, 1.0);
      if (b == FrequencyBranch::Plus && s == SpinLabel::Up) want[0] = em;
      if (b == FrequencyBranch::Plus && s == SpinLabel::Down) want[1] = em;
      if (b == FrequencyBranch::Minus && s == SpinLabel::Up) want[2] = iu * ep;
      if (b == FrequencyBranch::Minus && s == SpinLabel::Down) want[3] = iu * ep;
      std::array<Complex, 4> diff{};
      for (std::size_t k = 0; k < 4; ++k) diff[k] = got[k] - want[k];
      worst = std::max(worst, rep::max_abs(diff));
    }
    col.add("dirac.column.rest", worst, 1e-12, n);
  }

  {  // cross-oracle: the mapped column solves the standard gamma-matrix equation
    CounterRng rng = base.split(414);
    double worst = 0.0;
    int n = 0;
    for (double m : masses) {
      for (int ip = 0; ip < 10; ++ip) {
        const std::array<double, 3> p = random_momentum(rng, 2.0 * m / std::numbers::sqrt3);
        for (FrequencyBranch b : branches) {
          for (SpinLabel s : spins) {
            const rep::ColumnField column = rep::column_field(make_wave({b, s, p, m}, false));
            worst = std::max(worst, rep::standard_dirac_residual(column, m, random_point(rng)));
            ++n;
          }
        }
      }
    }
    col.add("dirac.column.residual", worst, 1e-10, n);
  }
}

// ---------------------------------------------------------------------------
// paravector: flagpoles, the Minkowski form, spin axis, null tetrad
// ---------------------------------------------------------------------------

void suite_paravector(Collector& col, const RunConfig& cfg) {
  using weyl::IdealTag;
  const CounterRng base(cfg.seed);
  const Signature s30 = Signature::cl30();

  {  // closed-form flagpole components equal the algebraic 2 K rev(K)
    CounterRng rng = base.split(501);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const weyl::WeylSpinor k = random_spinor(rng, IdealTag::LeftPlus, true);
      const Multivector kk = weyl::embed(k);
      const Multivector algebraic = 2.0 * (kk * reversion(kk));
      worst = std::max(worst,
                       inf_norm(algebraic - pv::paravector_from_spinor(k).to_multivector()));
    }
    col.add("pv.flagpole.algebra", worst, 0.0, cfg.samples);
  }

  {  // flagpoles are null and future-pointing
    CounterRng rng = base.split(502);
    double worst = 0.0;
    bool all_future = true;
    int used = 0;
    while (used < cfg.samples) {
      const weyl::WeylSpinor k = random_spinor(rng, IdealTag::LeftPlus, false);
      const pv::Paravector a = pv::paravector_from_spinor(k);
      if (a.a0 < 1e-6) continue;  // keep clear of the zero spinor
      ++used;
      const double norm2 = a.a[0] * a.a[0] + a.a[1] * a.a[1] + a.a[2] * a.a[2];
      worst = std::max(worst, std::abs(a.a0 * a.a0 - norm2) / (a.a0 * a.a0));
      all_future = all_future && pv::is_future(a) && pv::is_null(a);
    }
    col.add("pv.flagpole.null", worst, 1e-12, used);
    col.add_floor("pv.flagpole.future", all_future ? 1.0 : 0.0, 1.0, used);
  }

  {  // a hat(b) + b hat(a) == 2 g(a,b), scalar on the nose, and the component form
    CounterRng rng = base.split(503);
    double w_rel = 0.0, w_comp = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      pv::Paravector a{rng.dyadic(), {rng.dyadic(), rng.dyadic(), rng.dyadic()}};
      pv::Paravector b{rng.dyadic(), {rng.dyadic(), rng.dyadic(), rng.dyadic()}};
      const Multivector am = a.to_multivector();
      const Multivector bm = b.to_multivector();
      const double g = pv::pv_metric(a, b);
      const Multivector lhs = am * grade_involution(bm) + bm * grade_involution(am);
      w_rel = std::max(w_rel, inf_norm(lhs - Multivector::scalar(s30, 2.0 * g)));
      const double want = a.a0 * b.a0 - (a.a[0] * b.a[0] + a.a[1] * b.a[1] + a.a[2] * b.a[2]);
      w_comp = std::max(w_comp, std::abs(g - want));
    }
    col.add("pv.clifford.relation", w_rel, 0.0, cfg.samples);
    col.add("pv.metric.components", w_comp, 0.0, cfg.samples);
  }

  {  // rotating by exp(-e23 pi/4) carries the e3 axis to -e2
    const Multivector r = mv_exp(blade30(0b110, -std::numbers::pi / 4.0));
    const std::array<double, 3> axis = pv::spin_density_axis(r);
    const double res = std::max({std::abs(axis[0]), std::abs(axis[1] + 1.0), std::abs(axis[2])});
    col.add("pv.spin.axis.example", res, 1e-12, 1);
  }

  {  // for even psi: psi rev(psi) is a scalar rho, psi e3 rev(psi) is a pure
     // vector, and the vector's length is exactly |rho|
    CounterRng rng = base.split(504);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector psi = random_even_mv(rng, s30, false);
      const double scale = inf_norm(psi);
      const double norm2 = std::max(1.0, scale * scale);
      const Multivector spin = psi * blade30(0b100) * reversion(psi);
      const Multivector closure = psi * reversion(psi);
      const std::array<double, 3> v = pv::spin_density_axis(psi);
      const double vlen = std::hypot(std::hypot(v[0], v[1]), v[2]);
      const double rho = scalar_part(closure);
      worst = std::max(worst, std::abs(vlen - std::abs(rho)) / norm2);
      worst = std::max(worst, inf_norm(spin - grade_projection(spin, 1)) / norm2);
      worst = std::max(worst, inf_norm(closure - Multivector::scalar(s30, rho)) / norm2);
    }
    col.add("pv.spin.axis.density", worst, 1e-12, cfg.samples);
  }

  {  // the four null-tetrad elements span Cl(3,0) over the center
    CounterRng rng = base.split(505);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector x = random_mv(rng, s30);
      const pv::TetradDecomposition td = pv::tetrad_decompose(x);
      Multivector recon(s30);
      for (pv::NullTetradLabel l : {pv::NullTetradLabel::OO, pv::NullTetradLabel::OI,
                                    pv::NullTetradLabel::IO, pv::NullTetradLabel::II}) {
        recon += td.coeff(l).to_multivector() * pv::tetrad_element(l);
      }
      worst = std::max(worst, inf_norm(recon - x));
    }
    col.add("pv.tetrad.span", worst, 1e-12, cfg.samples);
  }

  {  // flagpole bivectors have rank one in tetrad coordinates
    CounterRng rng = base.split(506);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const weyl::WeylSpinor k = random_spinor(rng, IdealTag::LeftPlus, false);
      const Multivector kk = weyl::embed(k);
      const pv::TetradDecomposition td = pv::tetrad_decompose(kk * reversion(kk));
      worst = std::max(worst, (td.c_oo * td.c_ii - td.c_oi * td.c_io).abs());
    }
    col.add("pv.tetrad.rank1", worst, 1e-12, cfg.samples);

    // pinned example: K = (1, 1) has K rev(K) = sum of all four elements
    const weyl::WeylSpinor unit{IdealTag::LeftPlus, {1.0, 0.0}, {1.0, 0.0}};
    const Multivector uu = weyl::embed(unit);
    const pv::TetradDecomposition td = pv::tetrad_decompose(uu * reversion(uu));
    double res = 0.0;
    for (pv::NullTetradLabel l : {pv::NullTetradLabel::OO, pv::NullTetradLabel::OI,
                                  pv::NullTetradLabel::IO, pv::NullTetradLabel::II}) {
      res = std::max(res, center_diff(td.coeff(l), {1.0, 0.0}));
    }
    col.add("pv.tetrad.example", res, 0.0, 1);
  }
}

// ---------------------------------------------------------------------------
// cl03: the split signature — central idempotents, sigma, H + H
// ---------------------------------------------------------------------------

void suite_cl03(Collector& col, const RunConfig& cfg) {
  const CounterRng base(cfg.seed);
  const Signature s03 = Signature::cl03();
  const auto [fp, fm] = cl03::idempotents03();
  const Multivector one = Multivector::scalar(s03, 1.0);
  const Multivector e12 = blade03(0b011);
  const Multivector e13 = blade03(0b101);

  auto even03 = [&](const cl03::Cx03& c1, const cl03::Cx03& c2) {
    return c1.to_multivector() + e13 * c2.to_multivector();
  };

  {  // the pseudoscalar is central and squares to +1
    CounterRng rng = base.split(601);
    const Multivector j = blade03(0b111);
    double worst = inf_norm(j * j - one);
    for (int i = 0; i < 50; ++i) {
      const Multivector a = random_mv(rng, s03);
      worst = std::max(worst, inf_norm(j * a - a * j));
    }
    col.add("cl03.pseudo.central", worst, 0.0, 51);
  }

  {  // f+- are annihilating central idempotents summing to 1
    CounterRng rng = base.split(602);
    double worst = 0.0;
    worst = std::max(worst, inf_norm(fp * fp - fp));
    worst = std::max(worst, inf_norm(fm * fm - fm));
    worst = std::max(worst, inf_norm(fp * fm));
    worst = std::max(worst, inf_norm(fp + fm - one));
    for (int i = 0; i < 50; ++i) {
      const Multivector a = random_mv(rng, s03);
      worst = std::max(worst, inf_norm(fp * a - a * fp));
    }
    col.add("cl03.idempotents", worst, 0.0, 54);
  }

  {  // even reduction: same ideal element, even, and idempotent as a map
    CounterRng rng = base.split(603);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector a = random_dyadic_mv(rng, s03);
      const Multivector r = cl03::reduce_even03(a);
      worst = std::max(worst, inf_norm(odd_part(r)));
      worst = std::max(worst, inf_norm((r - a) * fp));
      worst = std::max(worst, inf_norm(cl03::reduce_even03(r) - r));
    }
    col.add("cl03.reduce.even", worst, 0.0, cfg.samples);
  }

  {  // embed/extract round trips; the even component map lands on Q f+
    CounterRng rng = base.split(604);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const cl03::SpinorKind03 kind =
          (i % 2 == 0) ? cl03::SpinorKind03::CUS03 : cl03::SpinorKind03::CDS03;
      const cl03::WeylSpinor03 s{kind, random_cx03(rng, true), random_cx03(rng, true)};
      const cl03::WeylSpinor03 back = cl03::spinor_from_ideal(cl03::embed(s), kind);
      worst = std::max(worst, cx03_diff(back.c1, s.c1));
      worst = std::max(worst, cx03_diff(back.c2, s.c2));

      const Multivector q = random_even_mv(rng, s03, true);
      worst = std::max(worst, inf_norm(cl03::embed(cl03::cus03_from_even(q)) - q * fp));

      const Multivector a = random_dyadic_mv(rng, s03);
      const cl03::WeylSpinor03 via_reduce = cl03::cus03_from_even(cl03::reduce_even03(a));
      const cl03::WeylSpinor03 via_ideal =
          cl03::spinor_from_ideal(a * fp, cl03::SpinorKind03::CUS03);
      worst = std::max(worst, cx03_diff(via_reduce.c1, via_ideal.c1));
      worst = std::max(worst, cx03_diff(via_reduce.c2, via_ideal.c2));
    }
    col.add("cl03.spinor.roundtrip", worst, 0.0, cfg.samples);
  }

  {  // the conjugate module is Clifford conjugation of the embedding
    CounterRng rng = base.split(605);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const cl03::WeylSpinor03 k{cl03::SpinorKind03::CUS03, random_cx03(rng, true),
                                 random_cx03(rng, true)};
      worst = std::max(worst, inf_norm(cl03::embed(cl03::cds03_from_cus(k)) -
                                       conjugation(cl03::embed(k))));
    }
    col.add("cl03.cds.conjugation", worst, 0.0, cfg.samples);
  }

  {  // sigma is an antihomomorphism of the even subalgebra
    CounterRng rng = base.split(606);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector q = random_even_mv(rng, s03, true);
      const Multivector p = random_even_mv(rng, s03, true);
      worst = std::max(worst, inf_norm(cl03::sigma(q * p) - cl03::sigma(p) * cl03::sigma(q)));
    }
    col.add("cl03.sigma.antihom", worst, 0.0, cfg.samples);
  }

  {  // sigma squares to the identity and acts as (a,b,c,d) -> (a,b,c,-d)
    CounterRng rng = base.split(607);
    double worst = 0.0;
    const int n = 200;
    for (int i = 0; i < n; ++i) {
      const Multivector q = random_even_mv(rng, s03, false);
      worst = std::max(worst, inf_norm(cl03::sigma(cl03::sigma(q)) - q));
      const Multivector sq = cl03::sigma(q);
      worst = std::max(worst, std::abs(sq[0] - q[0]));
      worst = std::max(worst, std::abs(sq[0b011] - q[0b011]));
      worst = std::max(worst, std::abs(sq[0b101] - q[0b101]));
      worst = std::max(worst, std::abs(sq[0b110] + q[0b110]));
    }
    col.add("cl03.sigma.involution", worst, 0.0, n);
  }

  {  // the metric dual K* = sigma(K) e13 in components: (k1, k2) -> (-k2, conj k1)
    CounterRng rng = base.split(608);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const cl03::Cx03 k1 = random_cx03(rng, true);
      const cl03::Cx03 k2 = random_cx03(rng, true);
      const Multivector q = even03(k1, k2);
      const cl03::WeylSpinor03 dual = cl03::cus03_from_even(cl03::sigma_dual_spinor(q));
      worst = std::max(worst, cx03_diff(dual.c1, -k2));
      worst = std::max(worst, cx03_diff(dual.c2, k1.conj()));
      worst = std::max(worst, inf_norm(cl03::sigma_dual_spinor(q) - cl03::sigma(q) * e13));
    }
    col.add("cl03.sigma.dual", worst, 0.0, cfg.samples);
  }

  {  // sigma restricted to the ideal: sigma(Q f+) == f+ sigma(Q)
    CounterRng rng = base.split(609);
    const Multivector e23 = blade03(0b110);
    const Multivector e32 = blade03(0b110, -1.0);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector q = random_even_mv(rng, s03, true);
      const Multivector raw = e32 * conjugation(q * fp) * e23;
      worst = std::max(worst, inf_norm(raw - fp * cl03::sigma(q)));
    }
    col.add("cl03.sigma.module.swap", worst, 0.0, cfg.samples);
  }

  {  // the metric as an algebraic product: project e13 conj(embed K) embed(eta)
    CounterRng rng = base.split(610);
    const Multivector e21 = blade03(0b011, -1.0);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const cl03::WeylSpinor03 k{cl03::SpinorKind03::CUS03, random_cx03(rng, true),
                                 random_cx03(rng, true)};
      const cl03::WeylSpinor03 eta{cl03::SpinorKind03::CUS03, random_cx03(rng, true),
                                   random_cx03(rng, true)};
      const Multivector x = e13 * conjugation(cl03::embed(k)) * cl03::embed(eta);
      const Multivector projected = (x + e21 * x * e12) * 0.5;
      const cl03::Cx03 w{2.0 * projected[0], 2.0 * projected[0b011]};
      worst = std::max(worst, cx03_diff(w, cl03::metric03(k, eta)));
    }
    col.add("cl03.metric.algebra", worst, 0.0, cfg.samples);
  }

  {  // dictionary between the two pairings: negate the first argument's k2
    CounterRng rng = base.split(611);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const cl03::WeylSpinor03 k{cl03::SpinorKind03::CUS03, random_cx03(rng, true),
                                 random_cx03(rng, true)};
      const cl03::WeylSpinor03 eta{cl03::SpinorKind03::CUS03, random_cx03(rng, true),
                                   random_cx03(rng, true)};
      const cl03::Cx03 alt = cl03::metric03_alt(even03(k.c1, -k.c2), even03(eta.c1, eta.c2));
      worst = std::max(worst, cx03_diff(alt, cl03::metric03(k, eta)));
    }
    col.add("cl03.metric.dictionary", worst, 0.0, cfg.samples);
  }

  {  // the companion pairing is symmetric with closed form -(p1 q2 + p2 q1)
    CounterRng rng = base.split(612);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const cl03::Cx03 p1 = random_cx03(rng, true), p2 = random_cx03(rng, true);
      const cl03::Cx03 q1 = random_cx03(rng, true), q2 = random_cx03(rng, true);
      const Multivector p = even03(p1, p2);
      const Multivector q = even03(q1, q2);
      worst = std::max(worst, cx03_diff(cl03::metric03_alt(p, q), cl03::metric03_alt(q, p)));
      worst = std::max(worst, cx03_diff(cl03::metric03_alt(p, q), -(p1 * q2 + p2 * q1)));
    }
    col.add("cl03.metric.alt.symmetric", worst, 0.0, cfg.samples);
  }

  {  // quaternion units on both blocks: i^2 = -1, ij = k and cyclic
    double worst = 0.0;
    for (const Multivector& f : {fp, fm}) {
      const Multivector qi = blade03(0b110) * f;         // e23 f
      const Multivector qj = blade03(0b101, -1.0) * f;   // e31 f
      const Multivector qk = e12 * f;                    // e12 f
      worst = std::max(worst, inf_norm(qi * qi + f));
      worst = std::max(worst, inf_norm(qj * qj + f));
      worst = std::max(worst, inf_norm(qk * qk + f));
      worst = std::max(worst, inf_norm(qi * qj - qk));
      worst = std::max(worst, inf_norm(qj * qk - qi));
      worst = std::max(worst, inf_norm(qk * qi - qj));
      worst = std::max(worst, inf_norm(qi * qj * qk + f));
    }
    col.add("cl03.quat.units", worst, 0.0, 14);
  }

  {  // block map is an algebra homomorphism onto H + H
    CounterRng rng = base.split(613);
    double worst = 0.0;
    auto qdiff = [](const cl03::Quaternion& a, const cl03::Quaternion& b) {
      return std::max(std::max(std::abs(a.w - b.w), std::abs(a.x - b.x)),
                      std::max(std::abs(a.y - b.y), std::abs(a.z - b.z)));
    };
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector a = random_dyadic_mv(rng, s03);
      const Multivector b = random_dyadic_mv(rng, s03);
      const cl03::QPair ab = cl03::rep_h_plus_h(a * b);
      const cl03::QPair qa = cl03::rep_h_plus_h(a);
      const cl03::QPair qb = cl03::rep_h_plus_h(b);
      worst = std::max(worst, qdiff(ab.plus, cl03::quat_mul(qa.plus, qb.plus)));
      worst = std::max(worst, qdiff(ab.minus, cl03::quat_mul(qa.minus, qb.minus)));
    }
    col.add("cl03.quat.hom", worst, 0.0, cfg.samples);
  }

  {  // the block map inverts exactly, in both directions
    CounterRng rng = base.split(614);
    double worst = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
      const Multivector a = random_dyadic_mv(rng, s03);
      worst = std::max(worst, inf_norm(cl03::from_h_plus_h(cl03::rep_h_plus_h(a)) - a));
    }
    col.add("cl03.rep.roundtrip", worst, 0.0, cfg.samples);

    // pinned example: the pseudoscalar maps to (1, -1)
    const cl03::QPair jq = cl03::rep_h_plus_h(blade03(0b111));
    const double res =
        std::max({std::abs(jq.plus.w - 1.0), std::abs(jq.plus.x), std::abs(jq.plus.y),
                  std::abs(jq.plus.z), std::abs(jq.minus.w + 1.0), std::abs(jq.minus.x),
                  std::abs(jq.minus.y), std::abs(jq.minus.z)});
    col.add("cl03.rep.example", res, 0.0, 1);
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"cl03", "core", "dirac", "paravector", "rep", "weyl"};
}

SuiteReport run_suite(const std::string& name, const RunConfig& config) {
  SuiteReport report;
  report.name = name;
  Collector col(config, report);
  const auto t0 = std::chrono::steady_clock::now();
  if (name == "core") {
    suite_core(col, config);
  } else if (name == "rep") {
    suite_rep(col, config);
  } else if (name == "weyl") {
    suite_weyl(col, config);
  } else if (name == "dirac") {
    suite_dirac(col, config);
  } else if (name == "paravector") {
    suite_paravector(col, config);
  } else if (name == "cl03") {
    suite_cl03(col, config);
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::sort(report.checks.begin(), report.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckRecord& c) { return c.pass; });
  return report;
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& names,
                                    const RunConfig& config) {
  std::vector<std::string> expanded;
  for (const std::string& n : names) {
    if (n == "all") {
      const std::vector<std::string> all = suite_names();
      expanded.insert(expanded.end(), all.begin(), all.end());
    } else {
      expanded.push_back(n);
    }
  }
  std::sort(expanded.begin(), expanded.end());
  expanded.erase(std::unique(expanded.begin(), expanded.end()), expanded.end());
  std::vector<SuiteReport> out;
  out.reserve(expanded.size());
  for (const std::string& n : expanded) out.push_back(run_suite(n, config));
  return out;
}

bool all_pass(const std::vector<SuiteReport>& suites) {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.pass; });
}

}  // namespace clifford::verify
