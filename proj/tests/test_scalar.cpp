#include <doctest.h>

#include <cmath>

#include "ncpw/scalar.hpp"

using namespace ncpw;

namespace {

poly::Poly P(std::vector<long> cs) {
  poly::Poly p;
  for (long c : cs) p.push_back(Rational(c));
  return p;
}

}  // namespace

TEST_CASE("minimal polynomials of 2cos(2pi/n)") {
  CHECK(NumberField::cos_minimal_polynomial(1) == P({-2, 1}));
  CHECK(NumberField::cos_minimal_polynomial(2) == P({2, 1}));
  CHECK(NumberField::cos_minimal_polynomial(3) == P({1, 1}));
  CHECK(NumberField::cos_minimal_polynomial(4) == P({0, 1}));
  CHECK(NumberField::cos_minimal_polynomial(5) == P({-1, 1, 1}));
  CHECK(NumberField::cos_minimal_polynomial(6) == P({-1, 1}));
  CHECK(NumberField::cos_minimal_polynomial(7) == P({-1, -2, 1, 1}));
  CHECK(NumberField::cos_minimal_polynomial(8) == P({-2, 0, 1}));
  CHECK(NumberField::cos_minimal_polynomial(10) == P({-1, -1, 1}));
  CHECK(NumberField::cos_minimal_polynomial(12) == P({-3, 0, 1}));

  // degree is phi(n)/2 for n > 2
  auto phi = [](int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        r -= r / p;
        while (n % p == 0) n /= p;
      }
    if (n > 1) r -= r / n;
    return r;
  };
  for (int n = 3; n <= 40; ++n)
    CHECK(poly::degree(NumberField::cos_minimal_polynomial(n)) == phi(n) / 2);
}

TEST_CASE("field of order 4: sqrt(2)") {
  auto f = NumberField::make(4);
  CHECK(f->degree() == 2);
  Scalar z = Scalar::generator(f);
  CHECK(z * z == Scalar(Rational(2)));
  CHECK(z * z.inverse() == Scalar::one());
  CHECK(z.sign() > 0);
  CHECK((z - Scalar(Rational(3, 2))).sign() < 0);
  CHECK((z - Scalar(Rational(7, 5))).sign() > 0);
  CHECK(std::abs(z.to_double() - std::sqrt(2.0)) < 1e-9);
  CHECK(z.str() == "z");
  CHECK((z * z).is_rational());
}

TEST_CASE("field of order 12") {
  auto f = NumberField::make(12);
  CHECK(f->degree() == 4);
  Scalar z = Scalar::generator(f);
  Scalar s3 = z * z - Scalar(Rational(2));
  CHECK(s3 * s3 == Scalar(Rational(3)));
  CHECK(Scalar::two_cos(f, 4) == Scalar::one());
  CHECK(Scalar::two_cos(f, 6) == Scalar::zero());
  Scalar s2 = Scalar::two_cos(f, 3);
  CHECK(s2 * s2 == Scalar(Rational(2)));
  CHECK(Scalar::two_cos(f, 13) == Scalar::zero() - z);

  for (int k = 1; k < 12; ++k) {
    Scalar a = Scalar::two_cos(f, k);
    Scalar b = Scalar::two_cos(f, k + 1);
    CHECK(a.cmp(b) > 0);
    CHECK(std::abs(a.to_double() - 2 * std::cos(k * M_PI / 12)) < 1e-9);
  }
}

TEST_CASE("field arithmetic identities") {
  auto f = NumberField::make(10);
  Scalar z = Scalar::generator(f);
  Scalar a = z * z - Scalar(Rational(1, 3));
  Scalar b = z + Scalar(Rational(5, 7));
  CHECK((a + b) * (a - b) == a * a - b * b);
  CHECK((a * b).inverse() == a.inverse() * b.inverse());
  CHECK(a / b * b == a);
  CHECK((a - a).is_zero());
  CHECK(Scalar::key_cmp(a, a) == 0);
  CHECK(Scalar::key_cmp(a, b) != 0);
  CHECK(a.cmp(a) == 0);

  // golden ratio: 2cos(pi/5) satisfies g^2 = g + 1
  Scalar g = Scalar::two_cos(f, 2);
  CHECK(g * g == g + Scalar::one());
  CHECK(f->degree() == 4);
}

TEST_CASE("rational fast path") {
  Scalar a(Rational(3, 2)), b(Rational(-1, 6));
  CHECK(a.is_rational());
  CHECK((a * b).rational_value() == Rational(-1, 4));
  CHECK(a.str() == "3/2");
  CHECK(Scalar(Rational(7)).str() == "7");
  CHECK(b.sign() < 0);
  CHECK(a.cmp(b) > 0);
  auto f = NumberField::make(4);
  Scalar z = Scalar::generator(f);
  CHECK((a + z - z) == a);
  CHECK((a + z - z).is_rational());
  CHECK((z * z - Scalar(Rational(2))).is_zero());
}
