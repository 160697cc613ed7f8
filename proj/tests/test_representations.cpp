#include <cmath>
#include <complex>
#include <stdexcept>

#include <doctest.h>

#include "clifford/matrices.hpp"
#include "clifford/multivector.hpp"
#include "clifford/prng.hpp"
#include "clifford/representations.hpp"
#include "oracles.hpp"

using clifford::CounterRng;
using clifford::Multivector;
using clifford::Signature;
using clifford::rep::Complex;
using clifford::rep::Mat2;
using clifford::rep::Mat4;

namespace {

Multivector random_mv(CounterRng& rng, const Signature& sig) {
  Multivector m(sig);
  for (unsigned i = 0; i < m.size(); ++i) m[i] = rng.unit();
  return m;
}

Multivector random_even(CounterRng& rng, const Signature& sig) {
  return clifford::even_part(random_mv(rng, sig));
}

Multivector random_rotor30(CounterRng& rng) {
  while (true) {
    const Multivector q = random_even(rng, Signature::cl30());
    const double n2 = clifford::scalar_part(q * clifford::conjugation(q));
    if (n2 > 1e-2) return q / std::sqrt(n2);
  }
}

}  // namespace

TEST_SUITE("representations") {

TEST_CASE("Pauli blade images are the textbook matrices") {
  const Signature sig = Signature::cl30();
  for (int k = 1; k <= 3; ++k) {
    CHECK(clifford::rep::max_abs_diff(clifford::rep::rep_cl30(Multivector::generator(sig, k)),
                                      oracle::pauli_matrix(k)) == 0.0);
  }
  // e12 -> s1 s2, e123 -> s1 s2 s3 = i I.
  CHECK(clifford::rep::max_abs_diff(
            clifford::rep::rep_cl30(Multivector::basis_blade(sig, 0b011)),
            oracle::pauli_matrix(1) * oracle::pauli_matrix(2)) == 0.0);
  Mat2 i_identity;
  i_identity.at(0, 0) = Complex{0.0, 1.0};
  i_identity.at(1, 1) = Complex{0.0, 1.0};
  CHECK(clifford::rep::max_abs_diff(
            clifford::rep::rep_cl30(Multivector::basis_blade(sig, 0b111)), i_identity) == 0.0);
}

TEST_CASE("rep_cl30 is a homomorphism intertwining reversion with the adjoint") {
  CounterRng rng(101);
  const Signature sig = Signature::cl30();
  double worst_hom = 0.0, worst_adj = 0.0, worst_rt = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Multivector a = random_mv(rng, sig);
    const Multivector b = random_mv(rng, sig);
    worst_hom = std::max(worst_hom,
                         clifford::rep::max_abs_diff(clifford::rep::rep_cl30(a * b),
                                                     clifford::rep::rep_cl30(a) *
                                                         clifford::rep::rep_cl30(b)));
    worst_adj = std::max(
        worst_adj, clifford::rep::max_abs_diff(clifford::rep::rep_cl30(clifford::reversion(a)),
                                               clifford::rep::rep_cl30(a).adjoint()));
    worst_rt = std::max(worst_rt,
                        clifford::inf_norm(
                            clifford::rep::rep_cl30_inverse(clifford::rep::rep_cl30(a)) - a));
  }
  CHECK(worst_hom <= 1e-13);
  CHECK(worst_adj == 0.0);
  CHECK(worst_rt <= 1e-14);
}

TEST_CASE("even elements map through the explicit two-by-two form") {
  CounterRng rng(103);
  const Signature sig = Signature::cl30();
  for (int trial = 0; trial < 20; ++trial) {
    const Multivector r = random_even(rng, sig);
    CHECK(clifford::rep::max_abs_diff(clifford::rep::rep_R_matrix(r),
                                      clifford::rep::rep_cl30(r)) == 0.0);
  }
  CHECK_THROWS_AS(clifford::rep::rep_R_matrix(Multivector::generator(sig, 1)),
                  std::invalid_argument);
}

TEST_CASE("unit rotors land in SU(2)") {
  CounterRng rng(107);
  double worst_det = 0.0, worst_unitary = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const Multivector r = random_rotor30(rng);
    const Mat2 m = clifford::rep::rep_cl30(r);
    worst_det = std::max(worst_det, std::abs(m.det() - Complex{1.0}));
    worst_unitary = std::max(worst_unitary,
                             clifford::rep::max_abs_diff(m.adjoint() * m, Mat2::identity()));
  }
  CHECK(worst_det <= 1e-12);
  CHECK(worst_unitary <= 1e-12);
}

TEST_CASE("gamma matrices anticommute to twice the Minkowski metric") {
  const clifford::rep::GammaBasis& g = clifford::rep::GammaBasis::standard();
  for (int mu = 0; mu < 4; ++mu) {
    CHECK(clifford::rep::max_abs_diff(g.gamma[static_cast<std::size_t>(mu)],
                                      oracle::gamma_matrix(mu)) == 0.0);
    for (int nu = 0; nu < 4; ++nu) {
      const Mat4 anti = g.gamma[static_cast<std::size_t>(mu)] * g.gamma[static_cast<std::size_t>(nu)] +
                        g.gamma[static_cast<std::size_t>(nu)] * g.gamma[static_cast<std::size_t>(mu)];
      const double eta = (mu == nu) ? (mu == 0 ? 1.0 : -1.0) : 0.0;
      CHECK(clifford::rep::max_abs_diff(anti, Complex{2.0 * eta} * Mat4::identity()) == 0.0);
    }
  }
}

TEST_CASE("even Cl(1,3) elements map homomorphically to four-by-four matrices") {
  CounterRng rng(109);
  const Signature sig = Signature::cl13();
  double worst = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const Multivector a = random_even(rng, sig);
    const Multivector b = random_even(rng, sig);
    worst = std::max(worst, clifford::rep::max_abs_diff(
                                clifford::rep::rep_cl13_even(a * b),
                                clifford::rep::rep_cl13_even(a) * clifford::rep::rep_cl13_even(b)));
  }
  CHECK(worst <= 1e-13);

  // gamma_1 gamma_2 -> diag(-i, i, -i, i) in this convention.
  Mat4 expected;
  expected.at(0, 0) = Complex{0.0, -1.0};
  expected.at(1, 1) = Complex{0.0, 1.0};
  expected.at(2, 2) = Complex{0.0, -1.0};
  expected.at(3, 3) = Complex{0.0, 1.0};
  CHECK(clifford::rep::max_abs_diff(
            clifford::rep::rep_cl13_even(Multivector::basis_blade(sig, 0b0110)), expected) == 0.0);

  CHECK_THROWS_AS(clifford::rep::rep_cl13_even(Multivector::generator(sig, 1)),
                  std::invalid_argument);
}

TEST_CASE("the even-subalgebra isomorphism is inverse-paired and multiplicative") {
  CounterRng rng(113);
  double worst = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const Multivector a13 = random_even(rng, Signature::cl13());
    const Multivector b13 = random_even(rng, Signature::cl13());
    const Multivector a30 = random_mv(rng, Signature::cl30());
    CHECK(clifford::rep::iso_from_cl30(clifford::rep::iso_to_cl30(a13)) == a13);
    CHECK(clifford::rep::iso_to_cl30(clifford::rep::iso_from_cl30(a30)) == a30);
    worst = std::max(worst,
                     clifford::inf_norm(clifford::rep::iso_to_cl30(a13 * b13) -
                                        clifford::rep::iso_to_cl30(a13) *
                                            clifford::rep::iso_to_cl30(b13)));
  }
  CHECK(worst <= 1e-13);

  // Unit timelike-spacelike bivectors map to minus the spatial generators, and
  // the volume elements correspond.
  const Signature s13 = Signature::cl13();
  CHECK(clifford::rep::iso_to_cl30(Multivector::basis_blade(s13, 0b0011)) ==
        -Multivector::generator(Signature::cl30(), 1));
  CHECK(clifford::rep::iso_to_cl30(Multivector::basis_blade(s13, 0b1111)) ==
        Multivector::basis_blade(Signature::cl30(), 0b111));
  CHECK_THROWS_AS(clifford::rep::iso_to_cl30(Multivector::generator(s13, 1)),
                  std::invalid_argument);
}

TEST_CASE("dirac_column picks the first matrix column") {
  const Signature sig = Signature::cl30();
  const auto u = clifford::rep::dirac_column(Multivector::scalar(sig, 1.0));
  CHECK(u[0] == Complex{1.0});
  CHECK(u[1] == Complex{0.0});
  CHECK(u[2] == Complex{0.0});
  CHECK(u[3] == Complex{0.0});

  // Linearity carries over from the representation.
  CounterRng rng(127);
  const Multivector a = random_mv(rng, sig);
  const Multivector b = random_mv(rng, sig);
  const auto ca = clifford::rep::dirac_column(a);
  const auto cb = clifford::rep::dirac_column(b);
  const auto csum = clifford::rep::dirac_column(a + b);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(csum[i] - (ca[i] + cb[i])) <= 1e-14);
  }
}

TEST_CASE("matrix helpers reject singular inverses") {
  Mat2 zero;
  CHECK_THROWS_AS(zero.inverse(), std::domain_error);
  Mat2 proj;  // rank one
  proj.at(0, 0) = 1.0;
  CHECK_THROWS_AS(proj.inverse(), std::domain_error);
}

}  // TEST_SUITE
