#include "clifford/multivector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "clifford/center_scalar.hpp"

namespace clifford {

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0 || p + q > 4) {
    throw std::invalid_argument("signature (p, q) must satisfy p, q >= 0 and p + q <= 4");
  }
}

double Signature::generator_square(int i) const {
  if (i < 1 || i > dim()) throw std::out_of_range("generator index out of range");
  return i <= p_ ? 1.0 : -1.0;
}

Multivector Multivector::scalar(Signature sig, double value) {
  Multivector m(sig);
  m.c_[0] = value;
  return m;
}

Multivector Multivector::basis_blade(Signature sig, unsigned mask, double coeff) {
  if (mask >= sig.size()) throw std::out_of_range("blade mask out of range for signature");
  Multivector m(sig);
  m.c_[mask] = coeff;
  return m;
}

Multivector Multivector::generator(Signature sig, int i) {
  if (i < 1 || i > sig.dim()) throw std::out_of_range("generator index out of range");
  return basis_blade(sig, 1u << (i - 1));
}

double Multivector::operator[](unsigned mask) const {
  if (mask >= size()) throw std::out_of_range("blade mask out of range");
  return c_[mask];
}

double& Multivector::operator[](unsigned mask) {
  if (mask >= size()) throw std::out_of_range("blade mask out of range");
  return c_[mask];
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  if (sig_ != rhs.sig_) throw std::invalid_argument("signature mismatch");
  for (std::size_t i = 0; i < size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  if (sig_ != rhs.sig_) throw std::invalid_argument("signature mismatch");
  for (std::size_t i = 0; i < size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (std::size_t i = 0; i < size(); ++i) c_[i] *= s;
  return *this;
}

Multivector& Multivector::operator/=(double s) {
  for (std::size_t i = 0; i < size(); ++i) c_[i] /= s;
  return *this;
}

Multivector Multivector::operator-() const {
  Multivector m(sig_);
  for (std::size_t i = 0; i < size(); ++i) m.c_[i] = -c_[i];
  return m;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

int blade_grade(unsigned mask) { return std::popcount(mask); }

double blade_metric(Signature sig, unsigned mask) {
  double m = 1.0;
  for (int i = 1; i <= sig.dim(); ++i) {
    if (mask & (1u << (i - 1))) m *= sig.generator_square(i);
  }
  return m;
}

int blade_reorder_sign(unsigned a, unsigned b) {
  // Each generator of b passes every higher-indexed generator of a on its
  // way into canonical position; count those transpositions.
  int swaps = 0;
  for (unsigned x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
  return (swaps % 2 == 0) ? 1 : -1;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  if (a.signature() != b.signature()) throw std::invalid_argument("signature mismatch");
  const Signature sig = a.signature();
  Multivector out(sig);
  const unsigned n = static_cast<unsigned>(sig.size());
  for (unsigned i = 0; i < n; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    for (unsigned j = 0; j < n; ++j) {
      const double bj = b[j];
      if (bj == 0.0) continue;
      const double factor = blade_reorder_sign(i, j) * blade_metric(sig, i & j);
      out[i ^ j] += factor * ai * bj;
    }
  }
  return out;
}

Multivector grade_projection(const Multivector& a, int k) {
  if (k < 0 || k > a.dim()) throw std::out_of_range("grade out of range");
  Multivector out(a.signature());
  for (unsigned i = 0; i < a.size(); ++i) {
    if (blade_grade(i) == k) out[i] = a[i];
  }
  return out;
}

Multivector even_part(const Multivector& a) {
  Multivector out(a.signature());
  for (unsigned i = 0; i < a.size(); ++i) {
    if (blade_grade(i) % 2 == 0) out[i] = a[i];
  }
  return out;
}

Multivector odd_part(const Multivector& a) {
  Multivector out(a.signature());
  for (unsigned i = 0; i < a.size(); ++i) {
    if (blade_grade(i) % 2 == 1) out[i] = a[i];
  }
  return out;
}

namespace {

template <typename SignFn>
Multivector apply_grade_signs(const Multivector& a, SignFn sign_of_grade) {
  Multivector out(a.signature());
  for (unsigned i = 0; i < a.size(); ++i) out[i] = sign_of_grade(blade_grade(i)) * a[i];
  return out;
}

}  // namespace

Multivector reversion(const Multivector& a) {
  return apply_grade_signs(a, [](int k) { return (k / 2) % 2 == 0 ? 1.0 : -1.0; });
}

Multivector grade_involution(const Multivector& a) {
  return apply_grade_signs(a, [](int k) { return k % 2 == 0 ? 1.0 : -1.0; });
}

Multivector conjugation(const Multivector& a) {
  return apply_grade_signs(a, [](int k) { return (k * (k + 1) / 2) % 2 == 0 ? 1.0 : -1.0; });
}

double scalar_part(const Multivector& a) { return a[0]; }

double extended_metric(const Multivector& a, const Multivector& b) {
  if (a.signature() != b.signature()) throw std::invalid_argument("signature mismatch");
  double g = 0.0;
  for (unsigned i = 0; i < a.size(); ++i) g += a[i] * b[i] * blade_metric(a.signature(), i);
  return g;
}

double inf_norm(const Multivector& a) {
  double m = 0.0;
  for (unsigned i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

CenterDecomposition center_decompose(const Multivector& a) {
  if (a.signature() != Signature::cl30()) {
    throw std::invalid_argument("center_decompose is defined on Cl(3,0)");
  }
  Multivector rest = a;
  rest[0] = 0.0;
  rest[0b111] = 0.0;
  return {CenterScalar{a[0], a[0b111]}, rest};
}

Multivector mv_exp(const Multivector& a) {
  const Signature sig = a.signature();
  const double na = inf_norm(a);
  if (na == 0.0) return Multivector::scalar(sig, 1.0);

  Multivector a2 = a * a;
  Multivector a2_rest = a2;
  a2_rest[0] = 0.0;
  if (inf_norm(a2_rest) <= 1e-12 * na * na) {
    const double ell = a2[0];
    if (ell < 0.0) {
      const double s = std::sqrt(-ell);
      return Multivector::scalar(sig, std::cos(s)) + (std::sin(s) / s) * a;
    }
    if (ell > 0.0) {
      const double s = std::sqrt(ell);
      return Multivector::scalar(sig, std::cosh(s)) + (std::sinh(s) / s) * a;
    }
    return Multivector::scalar(sig, 1.0) + a;
  }

  // General element: scale until small, sum the series, square back up.
  int halvings = 0;
  Multivector b = a;
  while (inf_norm(b) > 0.5) {
    b /= 2.0;
    ++halvings;
  }
  Multivector sum = Multivector::scalar(sig, 1.0);
  Multivector term = Multivector::scalar(sig, 1.0);
  for (int k = 1; k <= 64; ++k) {
    term = term * b / static_cast<double>(k);
    sum += term;
    if (inf_norm(term) <= 1e-14 * inf_norm(sum)) break;
  }
  for (int i = 0; i < halvings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace clifford
