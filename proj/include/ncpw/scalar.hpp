#pragma once

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace ncpw {

using Rational = mpq_class;
using Integer = mpz_class;

// Dense univariate polynomial over Q, coefficients low to high, no trailing
// zeros (empty vector = zero polynomial).  Only what the number field needs.
namespace poly {

using Poly = std::vector<Rational>;

int degree(const Poly& p);  // -1 for zero
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const Rational& c);
// division with remainder by a monic divisor (asserts monic)
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly monic(const Poly& a);
Poly gcd(Poly a, Poly b);  // monic gcd
Poly derivative(const Poly& a);
Poly squarefree_part(const Poly& a);
Rational eval(const Poly& a, const Rational& x);

}  // namespace poly

// The real cyclotomic field Q(2 cos(pi/N)).  Immutable except for the cached
// rational enclosure of the generator, which is refined on demand under a
// mutex.  Obtain instances through make(); they are shared and cached.
class NumberField {
 public:
  static std::shared_ptr<const NumberField> make(int N);

  int order() const { return n_; }                 // the N in 2 cos(pi/N)
  int degree() const { return (int)min_poly_.size() - 1; }
  const poly::Poly& minimal_polynomial() const { return min_poly_; }

  // Enclosure of the generator, at least `extra` bisections beyond the
  // current cache.  Thread safe.
  std::pair<Rational, Rational> enclosure(int extra) const;

  // minimal polynomial of 2 cos(2 pi / n) (exposed for tests)
  static poly::Poly cos_minimal_polynomial(int n);

 private:
  explicit NumberField(int N);
  int n_;
  poly::Poly min_poly_;  // monic, irreducible; generator is its largest root
  mutable std::mutex mu_;
  mutable Rational lo_, hi_;  // Psi(lo) < 0 < Psi(hi) unless degree 1
};

using FieldPtr = std::shared_ptr<const NumberField>;

// An element of Q(2 cos(pi/N)), stored as a reduced polynomial in the
// generator.  A null field pointer means a plain rational (degree-0 element
// of whatever field the context supplies); mixed operations lift the
// rational side.  Values are immutable; all operations are pure.
class Scalar {
 public:
  Scalar() {}                                   // zero
  explicit Scalar(const Rational& r);           // rational, fieldless
  explicit Scalar(long v);
  Scalar(FieldPtr f, poly::Poly coeffs);        // reduces mod the field

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1L); }
  static Scalar generator(const FieldPtr& f);   // 2 cos(pi/N)
  // 2 cos(k pi / N) as a field element
  static Scalar two_cos(const FieldPtr& f, long k);

  const FieldPtr& field() const { return f_; }
  const poly::Poly& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  Rational rational_value() const;  // asserts is_rational()

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // exact field division
  Scalar inverse() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // sign of the real value: -1, 0, +1 (exact, via interval refinement)
  int sign() const;
  // total order by real value
  int cmp(const Scalar& o) const;
  bool operator<(const Scalar& o) const { return cmp(o) < 0; }

  // deterministic structural key order (cheap, not value-compatible)
  static int key_cmp(const Scalar& a, const Scalar& b);

  double to_double() const;
  std::string str() const;  // canonical text, e.g. "3/2" or "z^2-2"

 private:
  FieldPtr f_;
  poly::Poly c_;
  void trim();
  static void align(const Scalar& a, const Scalar& b, FieldPtr& f);
};

inline Scalar operator*(long a, const Scalar& s) { return Scalar(a) * s; }

}  // namespace ncpw
