#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "clifford/multivector.hpp"
#include "clifford/paravector.hpp"
#include "clifford/prng.hpp"
#include "clifford/weyl_spinors.hpp"

using clifford::CenterScalar;
using clifford::CounterRng;
using clifford::Multivector;
using clifford::Signature;
namespace pv = clifford::pv;
namespace weyl = clifford::weyl;

namespace {

const Signature kSig = Signature::cl30();

pv::Paravector random_pv(CounterRng& rng) {
  return {rng.unit(), {rng.unit(), rng.unit(), rng.unit()}};
}

constexpr std::array<pv::NullTetradLabel, 4> kLabels = {
    pv::NullTetradLabel::OO, pv::NullTetradLabel::OI, pv::NullTetradLabel::IO,
    pv::NullTetradLabel::II};

}  // namespace

TEST_SUITE("paravector") {

TEST_CASE("the algebraic bilinear form is the Minkowski metric") {
  CounterRng rng(501);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const pv::Paravector a = random_pv(rng);
    const pv::Paravector b = random_pv(rng);
    const double closed =
        a.a0 * b.a0 - a.a[0] * b.a[0] - a.a[1] * b.a[1] - a.a[2] * b.a[2];
    worst = std::max(worst, std::abs(pv::pv_metric(a, b) - closed));

    // The full Clifford combination a hat(b) + b hat(a) is already scalar.
    const Multivector am = a.to_multivector();
    const Multivector bm = b.to_multivector();
    const Multivector sym =
        am * clifford::grade_involution(bm) + bm * clifford::grade_involution(am);
    Multivector nonscalar = sym;
    nonscalar[0] = 0.0;
    worst = std::max(worst, clifford::inf_norm(nonscalar));
  }
  CHECK(worst <= 1e-14);
}

TEST_CASE("paravectors round-trip through the algebra and reject higher grades") {
  CounterRng rng(503);
  const pv::Paravector a = random_pv(rng);
  const pv::Paravector back = pv::Paravector::from_multivector(a.to_multivector());
  CHECK(back.a0 == a.a0);
  CHECK(back.a == a.a);
  CHECK_THROWS_AS(pv::Paravector::from_multivector(Multivector::basis_blade(kSig, 0b011)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      pv::Paravector::from_multivector(Multivector::scalar(Signature::cl03(), 1.0)),
      std::invalid_argument);
}

TEST_CASE("spinor flagpoles are null, future-pointing, and match the algebra") {
  // Pinned: K = (1, 0) has flagpole 1 + e3; K = (1, 1) has flagpole 2 + 2 e1.
  const pv::Paravector f1 =
      pv::paravector_from_spinor({weyl::IdealTag::LeftPlus, {1.0, 0.0}, {0.0, 0.0}});
  CHECK(f1.a0 == 1.0);
  CHECK(f1.a == std::array<double, 3>{0.0, 0.0, 1.0});
  const pv::Paravector f2 =
      pv::paravector_from_spinor({weyl::IdealTag::LeftPlus, {1.0, 0.0}, {1.0, 0.0}});
  CHECK(f2.a0 == 2.0);
  CHECK(f2.a == std::array<double, 3>{2.0, 0.0, 0.0});

  CounterRng rng(509);
  double worst = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const weyl::WeylSpinor k{weyl::IdealTag::LeftPlus, {rng.unit(), rng.unit()},
                             {rng.unit(), rng.unit()}};
    const pv::Paravector fp = pv::paravector_from_spinor(k);

    // Component formula against the literal product 2 K rev(K).
    const Multivector ik = weyl::embed(k);
    worst = std::max(worst, clifford::inf_norm(2.0 * (ik * clifford::reversion(ik)) -
                                               fp.to_multivector()));
    CHECK(pv::is_null(fp));
    if (fp.a0 > 1e-9) CHECK(pv::is_future(fp));
  }
  CHECK(worst <= 1e-14);

  CHECK_THROWS_AS(
      pv::paravector_from_spinor({weyl::IdealTag::RightPlus, {1.0, 0.0}, {0.0, 0.0}}),
      std::invalid_argument);
}

TEST_CASE("the spin axis is the rotated e3 with the scalar density as length") {
  // Quarter-turn in the 2-3 plane sends e3 to -e2.
  const Multivector r =
      clifford::mv_exp(Multivector::basis_blade(kSig, 0b110, -std::numbers::pi / 4.0));
  const std::array<double, 3> axis = pv::spin_density_axis(r);
  CHECK(std::abs(axis[0]) <= 1e-15);
  CHECK(std::abs(axis[1] + 1.0) <= 1e-15);
  CHECK(std::abs(axis[2]) <= 1e-15);

  // For any even psi: psi rev(psi) is scalar by grade parity, and the spin
  // vector psi e3 rev(psi) has length exactly |<psi rev(psi)>_0|.
  CounterRng rng(521);
  for (int trial = 0; trial < 25; ++trial) {
    Multivector psi(kSig);
    for (unsigned mask : {0b000u, 0b011u, 0b101u, 0b110u}) psi[mask] = rng.unit();
    const Multivector s = psi * clifford::reversion(psi);
    const double rho = s[0];
    Multivector rest = s;
    rest[0] = 0.0;
    CHECK(clifford::inf_norm(rest) <= 1e-13);
    const std::array<double, 3> n = pv::spin_density_axis(psi);
    const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    CHECK(std::abs(len - std::abs(rho)) <= 1e-12);
  }
}

TEST_CASE("the null tetrad spans everything over the center") {
  CounterRng rng(523);
  for (int trial = 0; trial < 25; ++trial) {
    Multivector x(kSig);
    for (unsigned i = 0; i < x.size(); ++i) x[i] = rng.unit();
    const pv::TetradDecomposition d = pv::tetrad_decompose(x);
    Multivector rebuilt(kSig);
    for (pv::NullTetradLabel label : kLabels) {
      rebuilt += d.coeff(label).to_multivector() * pv::tetrad_element(label);
    }
    CHECK(clifford::inf_norm(rebuilt - x) <= 1e-13);
  }
}

TEST_CASE("spinor squares have rank-one tetrad coordinates") {
  // Pinned: K = (1, 1) gives K rev(K) = 1 + e1 with all four coefficients 1.
  const weyl::WeylSpinor k1{weyl::IdealTag::LeftPlus, {1.0, 0.0}, {1.0, 0.0}};
  const Multivector ik1 = weyl::embed(k1);
  const pv::TetradDecomposition pinned =
      pv::tetrad_decompose(ik1 * clifford::reversion(ik1));
  for (pv::NullTetradLabel label : kLabels) {
    CHECK(pinned.coeff(label) == CenterScalar{1.0, 0.0});
  }

  CounterRng rng(541);
  double worst = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    const weyl::WeylSpinor k{weyl::IdealTag::LeftPlus, {rng.unit(), rng.unit()},
                             {rng.unit(), rng.unit()}};
    const Multivector ik = weyl::embed(k);
    const pv::TetradDecomposition d = pv::tetrad_decompose(ik * clifford::reversion(ik));
    const CenterScalar det = d.c_oo * d.c_ii - d.c_oi * d.c_io;
    worst = std::max(worst, det.abs());
  }
  CHECK(worst <= 1e-13);

  CHECK_THROWS_AS(pv::tetrad_decompose(Multivector::scalar(Signature::cl13(), 1.0)),
                  std::invalid_argument);
}

}  // TEST_SUITE
