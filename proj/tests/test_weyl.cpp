#include <array>
#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "clifford/center_scalar.hpp"
#include "clifford/multivector.hpp"
#include "clifford/prng.hpp"
#include "clifford/weyl_spinors.hpp"

using clifford::CenterScalar;
using clifford::CounterRng;
using clifford::Multivector;
using clifford::Signature;
namespace weyl = clifford::weyl;

namespace {

const Signature kSig = Signature::cl30();

Multivector blade(unsigned mask, double c = 1.0) {
  return Multivector::basis_blade(kSig, mask, c);
}

weyl::WeylSpinor random_spinor(CounterRng& rng, weyl::IdealTag kind) {
  return {kind, {rng.unit(), rng.unit()}, {rng.unit(), rng.unit()}};
}

Multivector random_rotor(CounterRng& rng) {
  while (true) {
    Multivector q(kSig);
    for (unsigned mask : {0b000u, 0b011u, 0b101u, 0b110u}) q[mask] = rng.unit();
    const double n2 = clifford::scalar_part(q * clifford::conjugation(q));
    if (n2 > 1e-2) return q / std::sqrt(n2);
  }
}

constexpr std::array<weyl::IdealTag, 4> kTags = {
    weyl::IdealTag::LeftPlus, weyl::IdealTag::RightPlus, weyl::IdealTag::RightMinus,
    weyl::IdealTag::LeftMinus};

}  // namespace

TEST_SUITE("weyl30") {

TEST_CASE("idempotents absorb e3 and annihilate each other") {
  const Multivector fp = weyl::f_plus();
  const Multivector fm = weyl::f_minus();
  const Multivector one = Multivector::scalar(kSig, 1.0);
  const Multivector e1 = Multivector::generator(kSig, 1);
  const Multivector e3 = Multivector::generator(kSig, 3);

  CHECK(fp * fp == fp);
  CHECK(fm * fm == fm);
  CHECK(fp * fm == Multivector(kSig));
  CHECK(fp + fm == one);
  CHECK(e3 * fp == fp);
  CHECK(fp * e3 == fp);
  CHECK(e1 * fp == fm * e1);   // e1 swaps the idempotents past itself
  CHECK(fp * e1 * fp == Multivector(kSig));
}

TEST_CASE("ideal names round-trip and reject garbage") {
  for (weyl::IdealTag t : kTags) {
    CHECK(weyl::tag_from_name(weyl::tag_name(t)) == t);
  }
  CHECK(weyl::tag_name(weyl::IdealTag::LeftPlus) == "CUS");
  CHECK(weyl::tag_name(weyl::IdealTag::RightMinus) == "CDS");
  CHECK_THROWS_AS(weyl::tag_from_name("CXS"), std::invalid_argument);
}

TEST_CASE("embed and extract are mutually inverse on every ideal") {
  CounterRng rng(301);
  for (weyl::IdealTag kind : kTags) {
    for (int trial = 0; trial < 25; ++trial) {
      const weyl::WeylSpinor s = random_spinor(rng, kind);
      const weyl::WeylSpinor back = weyl::spinor_from_ideal(weyl::embed(s), kind);
      CHECK(back.kind == kind);
      CHECK(std::abs(back.c1.re - s.c1.re) <= 1e-15);
      CHECK(std::abs(back.c1.im - s.c1.im) <= 1e-15);
      CHECK(std::abs(back.c2.re - s.c2.re) <= 1e-15);
      CHECK(std::abs(back.c2.im - s.c2.im) <= 1e-15);
    }
  }
  // e2 lies in no minimal one-sided f+/f- ideal of this list.
  for (weyl::IdealTag kind : kTags) {
    CHECK_THROWS_AS(weyl::spinor_from_ideal(blade(0b010), kind), std::invalid_argument);
  }
}

TEST_CASE("even reduction preserves the ideal element") {
  CounterRng rng(307);
  for (int trial = 0; trial < 25; ++trial) {
    Multivector psi(kSig);
    for (unsigned i = 0; i < psi.size(); ++i) psi[i] = rng.unit();
    const Multivector even = weyl::reduce_to_even(psi);
    CHECK(clifford::inf_norm(clifford::odd_part(even)) == 0.0);
    CHECK(even * weyl::f_plus() == psi * weyl::f_plus());
    // Components read off the even representative rebuild the same ideal element.
    const weyl::WeylSpinor k = weyl::cus_from_even(even);
    CHECK(clifford::inf_norm(weyl::embed(k) - psi * weyl::f_plus()) <= 1e-15);
  }
  // Pinned case: e1 f+ = e13 f+, components (0, 1).
  const Multivector r = weyl::reduce_to_even(Multivector::generator(kSig, 1));
  CHECK(r == blade(0b101));
  const weyl::WeylSpinor k = weyl::cus_from_even(r);
  CHECK(k.c1 == CenterScalar{0.0, 0.0});
  CHECK(k.c2 == CenterScalar{1.0, 0.0});
  CHECK_THROWS_AS(weyl::cus_from_even(Multivector::generator(kSig, 2)), std::invalid_argument);
}

TEST_CASE("dual maps realize multiplication by e1 with the matching involution") {
  CounterRng rng(311);
  for (int trial = 0; trial < 25; ++trial) {
    const weyl::WeylSpinor k = random_spinor(rng, weyl::IdealTag::LeftPlus);
    const Multivector ek = weyl::embed(k);
    const Multivector e1 = Multivector::generator(kSig, 1);

    CHECK(weyl::embed(weyl::to_cvus(k)) == e1 * clifford::conjugation(ek));
    CHECK(weyl::embed(weyl::to_cds(k)) == e1 * clifford::reversion(ek));

    const weyl::WeylSpinor kbar = weyl::to_cds(k);
    CHECK(weyl::embed(weyl::to_cvds(kbar)) ==
          clifford::conjugation(e1 * weyl::embed(kbar)));
    // Following both duals around the square lands on the grade involution.
    CHECK(weyl::embed(weyl::to_cvds(weyl::to_cds(k))) == clifford::grade_involution(ek));
  }
}

TEST_CASE("spinorial metrics match their algebraic products and are rotor invariant") {
  CounterRng rng(313);
  for (int trial = 0; trial < 25; ++trial) {
    const weyl::WeylSpinor k = random_spinor(rng, weyl::IdealTag::LeftPlus);
    const weyl::WeylSpinor eta = random_spinor(rng, weyl::IdealTag::LeftPlus);

    // K* eta = g f+ with g = metric_fplus(k, eta).
    const Multivector lhs = weyl::embed(weyl::to_cvus(k)) * weyl::embed(eta);
    const CenterScalar g = weyl::metric_fplus(k, eta);
    CHECK(clifford::inf_norm(lhs - g.to_multivector() * weyl::f_plus()) <= 1e-14);
    CHECK(weyl::metric_fplus(k, k) == CenterScalar{0.0, 0.0});
    // Antisymmetry.
    const CenterScalar swapped = weyl::metric_fplus(eta, k);
    CHECK(std::abs(g.re + swapped.re) <= 1e-15);
    CHECK(std::abs(g.im + swapped.im) <= 1e-15);

    // Kbar etabar* = g' f- on the conjugate side.
    const weyl::WeylSpinor kbar = weyl::to_cds(k);
    const weyl::WeylSpinor etabar = weyl::to_cds(eta);
    const Multivector rhs =
        weyl::embed(kbar) * weyl::embed(weyl::to_cvds(etabar));
    const CenterScalar gm = weyl::metric_fminus(kbar, etabar);
    CHECK(clifford::inf_norm(rhs - gm.to_multivector() * weyl::f_minus()) <= 1e-14);

    const Multivector r = random_rotor(rng);
    const CenterScalar g_rot =
        weyl::metric_fplus(weyl::transform(r, k), weyl::transform(r, eta));
    CHECK(std::abs(g_rot.re - g.re) <= 1e-13);
    CHECK(std::abs(g_rot.im - g.im) <= 1e-13);
  }
}

TEST_CASE("transformation laws act by the rotor on the embedded element") {
  CounterRng rng(317);
  for (int trial = 0; trial < 25; ++trial) {
    const Multivector r = random_rotor(rng);
    const weyl::WeylSpinor k = random_spinor(rng, kTags[static_cast<std::size_t>(trial % 4)]);
    const Multivector before = weyl::embed(k);
    const Multivector after = weyl::embed(weyl::transform(r, k));
    Multivector expected(kSig);
    switch (k.kind) {
      case weyl::IdealTag::LeftPlus: expected = r * before; break;
      case weyl::IdealTag::RightPlus: expected = before * clifford::conjugation(r); break;
      case weyl::IdealTag::RightMinus: expected = before * clifford::reversion(r); break;
      case weyl::IdealTag::LeftMinus: expected = clifford::grade_involution(r) * before; break;
    }
    CHECK(clifford::inf_norm(after - expected) <= 1e-13);
  }
  CHECK(weyl::rotor_residual(clifford::mv_exp(blade(0b011, 0.4))) <= 1e-15);
  CHECK(weyl::rotor_residual(Multivector::scalar(kSig, 1.0) +
                             Multivector::generator(kSig, 1)) > 0.5);
  CHECK_THROWS_AS(
      weyl::transform(Multivector::scalar(kSig, 2.0),
                      weyl::WeylSpinor{weyl::IdealTag::LeftPlus, {1.0, 0.0}, {0.0, 0.0}}),
      std::invalid_argument);
}

}  // TEST_SUITE
