#include <array>
#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "clifford/center_scalar.hpp"
#include "clifford/multivector.hpp"
#include "clifford/prng.hpp"
#include "oracles.hpp"

using clifford::CounterRng;
using clifford::Multivector;
using clifford::Signature;

namespace {

Multivector random_mv(CounterRng& rng, const Signature& sig) {
  Multivector m(sig);
  for (unsigned i = 0; i < m.size(); ++i) m[i] = rng.unit();
  return m;
}

const std::array<Signature, 3> kSignatures = {Signature::cl30(), Signature::cl03(),
                                              Signature::cl13()};

}  // namespace

TEST_SUITE("core_algebra") {

TEST_CASE("blade products match the generator-list oracle in every signature") {
  for (const Signature& sig : kSignatures) {
    for (unsigned i = 0; i < sig.size(); ++i) {
      for (unsigned j = 0; j < sig.size(); ++j) {
        const Multivector prod =
            Multivector::basis_blade(sig, i) * Multivector::basis_blade(sig, j);
        const auto [sign, mask] = oracle::blade_product(sig, i, j);
        for (unsigned m = 0; m < sig.size(); ++m) {
          CHECK(prod[m] == (m == mask ? sign : 0.0));
        }
      }
    }
  }
}

TEST_CASE("random products agree with the oracle coefficient for coefficient") {
  CounterRng rng(2024);
  for (const Signature& sig : kSignatures) {
    for (int trial = 0; trial < 100; ++trial) {
      const Multivector a = random_mv(rng, sig);
      const Multivector b = random_mv(rng, sig);
      CHECK(a * b == oracle::product(a, b));
    }
  }
}

TEST_CASE("the product is associative and bilinear") {
  CounterRng rng(7);
  double worst = 0.0;
  for (const Signature& sig : kSignatures) {
    for (int trial = 0; trial < 50; ++trial) {
      const Multivector a = random_mv(rng, sig);
      const Multivector b = random_mv(rng, sig);
      const Multivector c = random_mv(rng, sig);
      worst = std::max(worst, clifford::inf_norm((a * b) * c - a * (b * c)));
      worst = std::max(worst, clifford::inf_norm((a + b) * c - (a * c + b * c)));
      worst = std::max(worst, clifford::inf_norm(a * (b + c) - (a * b + a * c)));
      worst = std::max(worst, clifford::inf_norm((2.5 * a) * b - 2.5 * (a * b)));
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("generators anticommute and square to the metric") {
  for (const Signature& sig : kSignatures) {
    for (int i = 1; i <= sig.dim(); ++i) {
      for (int j = 1; j <= sig.dim(); ++j) {
        const Multivector ei = Multivector::generator(sig, i);
        const Multivector ej = Multivector::generator(sig, j);
        const Multivector anti = ei * ej + ej * ei;
        Multivector expected(sig);
        if (i == j) expected[0] = 2.0 * sig.generator_square(i);
        CHECK(anti == expected);
      }
    }
  }
}

TEST_CASE("involutions carry the advertised grade signs") {
  CounterRng rng(11);
  auto rev_sign = [](int k) { return (k / 2) % 2 == 0 ? 1.0 : -1.0; };
  auto hat_sign = [](int k) { return k % 2 == 0 ? 1.0 : -1.0; };
  auto conj_sign = [](int k) { return (k * (k + 1) / 2) % 2 == 0 ? 1.0 : -1.0; };
  for (const Signature& sig : kSignatures) {
    for (int trial = 0; trial < 20; ++trial) {
      const Multivector a = random_mv(rng, sig);
      CHECK(clifford::reversion(a) == oracle::apply_grade_sign(a, rev_sign));
      CHECK(clifford::grade_involution(a) == oracle::apply_grade_sign(a, hat_sign));
      CHECK(clifford::conjugation(a) == oracle::apply_grade_sign(a, conj_sign));
      // conjugation = reversion after grade involution, exactly.
      CHECK(clifford::conjugation(a) == clifford::reversion(clifford::grade_involution(a)));
    }
  }
}

TEST_CASE("reversion and conjugation are antiautomorphisms, grade involution an automorphism") {
  CounterRng rng(13);
  double worst = 0.0;
  for (const Signature& sig : kSignatures) {
    for (int trial = 0; trial < 50; ++trial) {
      const Multivector a = random_mv(rng, sig);
      const Multivector b = random_mv(rng, sig);
      using clifford::conjugation;
      using clifford::grade_involution;
      using clifford::reversion;
      worst = std::max(worst, clifford::inf_norm(reversion(a * b) - reversion(b) * reversion(a)));
      worst = std::max(worst,
                       clifford::inf_norm(conjugation(a * b) - conjugation(b) * conjugation(a)));
      worst = std::max(worst, clifford::inf_norm(grade_involution(a * b) -
                                                 grade_involution(a) * grade_involution(b)));
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("pseudoscalar squares distinguish the three signatures") {
  auto pseudo = [](const Signature& sig) {
    return Multivector::basis_blade(sig, static_cast<unsigned>(sig.size()) - 1);
  };
  CHECK(pseudo(Signature::cl30()) * pseudo(Signature::cl30()) ==
        Multivector::scalar(Signature::cl30(), -1.0));
  CHECK(pseudo(Signature::cl03()) * pseudo(Signature::cl03()) ==
        Multivector::scalar(Signature::cl03(), 1.0));
  CHECK(pseudo(Signature::cl13()) * pseudo(Signature::cl13()) ==
        Multivector::scalar(Signature::cl13(), -1.0));
}

TEST_CASE("pseudoscalar centrality: central in odd dimension, even-commuting in dimension four") {
  CounterRng rng(17);
  for (const Signature& sig : {Signature::cl30(), Signature::cl03()}) {
    const Multivector i3 = Multivector::basis_blade(sig, 0b111);
    for (int trial = 0; trial < 20; ++trial) {
      const Multivector a = random_mv(rng, sig);
      CHECK(i3 * a == a * i3);
    }
  }
  const Signature s13 = Signature::cl13();
  const Multivector i4 = Multivector::basis_blade(s13, 0b1111);
  for (int trial = 0; trial < 20; ++trial) {
    const Multivector a = random_mv(rng, s13);
    const Multivector even = clifford::even_part(a);
    const Multivector odd = clifford::odd_part(a);
    CHECK(i4 * even == even * i4);
    CHECK(i4 * odd == -(odd * i4));
  }
}

TEST_CASE("grade projections partition the element") {
  CounterRng rng(19);
  for (const Signature& sig : kSignatures) {
    const Multivector a = random_mv(rng, sig);
    Multivector sum(sig);
    for (int k = 0; k <= sig.dim(); ++k) sum += clifford::grade_projection(a, k);
    CHECK(sum == a);
    CHECK(clifford::even_part(a) + clifford::odd_part(a) == a);
    CHECK_THROWS_AS(clifford::grade_projection(a, sig.dim() + 1), std::out_of_range);
    CHECK_THROWS_AS(clifford::grade_projection(a, -1), std::out_of_range);
  }
}

TEST_CASE("exponential agrees with a plain Taylor series and with closed forms") {
  CounterRng rng(23);
  double worst = 0.0;
  for (const Signature& sig : kSignatures) {
    for (int trial = 0; trial < 25; ++trial) {
      Multivector a = random_mv(rng, sig);
      a *= 0.75;  // keep the Taylor oracle comfortably convergent
      worst = std::max(worst, clifford::inf_norm(clifford::mv_exp(a) - oracle::exp_series(a)));
    }
  }
  CHECK(worst <= 1e-12);

  // Closed forms for blades of definite square.
  const Signature s30 = Signature::cl30();
  const double theta = 0.81;
  const Multivector rot = clifford::mv_exp(Multivector::basis_blade(s30, 0b011, theta));
  CHECK(std::abs(rot[0] - std::cos(theta)) <= 1e-15);
  CHECK(std::abs(rot[0b011] - std::sin(theta)) <= 1e-15);
  const Multivector bst = clifford::mv_exp(Multivector::basis_blade(s30, 0b001, theta));
  CHECK(std::abs(bst[0] - std::cosh(theta)) <= 1e-14);
  CHECK(std::abs(bst[0b001] - std::sinh(theta)) <= 1e-14);
  CHECK(clifford::mv_exp(Multivector(s30)) == Multivector::scalar(s30, 1.0));

  // exp(a) exp(-a) = 1 even for elements with no closed form.
  const Multivector g = random_mv(rng, s30);
  const Multivector resid =
      clifford::mv_exp(g) * clifford::mv_exp(-g) - Multivector::scalar(s30, 1.0);
  CHECK(clifford::inf_norm(resid) <= 1e-12);
}

TEST_CASE("extended metric reproduces the reversion form on Cl(3,0)") {
  CounterRng rng(29);
  const Signature sig = Signature::cl30();
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Multivector a = random_mv(rng, sig);
    const Multivector b = random_mv(rng, sig);
    const double g = clifford::extended_metric(a, b);
    worst = std::max(worst, std::abs(g - clifford::scalar_part(clifford::reversion(a) * b)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("center of Cl(3,0) behaves as the complex field") {
  CounterRng rng(31);
  const Signature sig = Signature::cl30();
  for (int trial = 0; trial < 20; ++trial) {
    const clifford::CenterScalar x{rng.unit(), rng.unit()};
    const clifford::CenterScalar y{rng.unit(), rng.unit()};
    CHECK((x * y).to_multivector() == x.to_multivector() * y.to_multivector());
    CHECK(clifford::reversion(x.to_multivector()) == x.conj().to_multivector());
  }
  const Multivector a = random_mv(rng, sig);
  const auto dec = clifford::center_decompose(a);
  CHECK(dec.center.to_multivector() + dec.remainder == a);
  CHECK(dec.remainder[0] == 0.0);
  CHECK(dec.remainder[0b111] == 0.0);
  // The central part commutes with everything; the remainder need not.
  const Multivector b = random_mv(rng, sig);
  CHECK(dec.center.to_multivector() * b == b * dec.center.to_multivector());
  CHECK_THROWS_AS(clifford::center_decompose(random_mv(rng, Signature::cl03())),
                  std::invalid_argument);
}

TEST_CASE("construction and indexing reject out-of-range input") {
  CHECK_THROWS_AS(Signature(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(Signature(-1, 2), std::invalid_argument);
  const Signature sig = Signature::cl30();
  CHECK_THROWS_AS(Multivector::basis_blade(sig, 8), std::out_of_range);
  CHECK_THROWS_AS(Multivector::generator(sig, 4), std::out_of_range);
  CHECK_THROWS_AS(Multivector::generator(sig, 0), std::out_of_range);
  const Multivector a = Multivector::scalar(sig, 1.0);
  CHECK_THROWS_AS(a[9], std::out_of_range);
  CHECK_THROWS_AS(a * Multivector::scalar(Signature::cl03(), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(clifford::extended_metric(a, Multivector::scalar(Signature::cl13(), 1.0)),
                  std::invalid_argument);
}

}  // TEST_SUITE
