#include "ncpw/scalar.hpp"

#include <cassert>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncpw {

namespace poly {

int degree(const Poly& p) { return (int)p.size() - 1; }

static void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Poly scale(const Poly& a, const Rational& c) {
  if (sgn(c) == 0) return {};
  Poly r(a);
  for (auto& x : r) x *= c;
  return r;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  assert(!b.empty() && b.back() == 1);
  Poly rem(a), quo;
  if (a.size() >= b.size()) quo.assign(a.size() - b.size() + 1, Rational(0));
  while (rem.size() >= b.size()) {
    Rational c = rem.back();
    size_t shift = rem.size() - b.size();
    quo[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
    trim(rem);  // top coefficient cancels, so this always shrinks rem
  }
  trim(quo);
  return {quo, rem};
}

Poly monic(const Poly& a) {
  if (a.empty()) return a;
  Poly r(a);
  Rational inv = 1 / r.back();
  for (auto& x : r) x *= inv;
  return r;
}

Poly gcd(Poly a, Poly b) {
  a = monic(a);
  b = monic(b);
  while (!b.empty()) {
    auto [q, r] = divrem(a, b);
    (void)q;
    a = std::move(b);
    b = monic(r);
  }
  return a;
}

Poly derivative(const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (long)i;
  return r;
}

Poly squarefree_part(const Poly& a) {
  if (a.size() <= 1) return monic(a);
  Poly g = gcd(a, derivative(a));
  auto [q, r] = divrem(monic(a), g);
  assert(r.empty());
  return monic(q);
}

Rational eval(const Poly& a, const Rational& x) {
  Rational acc(0);
  for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
  return acc;
}

}  // namespace poly

namespace {

using poly::Poly;

// 2 cos(n t) as a polynomial in x = 2 cos t
Poly chebyshev_like(int n) {
  Poly pm{Rational(2)}, p{Rational(0), Rational(1)};
  if (n == 0) return pm;
  for (int k = 1; k < n; ++k) {
    Poly next = poly::sub(poly::mul(Poly{Rational(0), Rational(1)}, p), pm);
    pm = std::move(p);
    p = std::move(next);
  }
  return p;
}

// rational interval arithmetic for sign determination
struct Interval {
  Rational lo, hi;
  Interval operator+(const Interval& o) const { return {lo + o.lo, hi + o.hi}; }
  Interval operator*(const Interval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    Rational mn = a, mx = a;
    for (const Rational& v : {b, c, d}) {
      if (v < mn) mn = v;
      if (v > mx) mx = v;
    }
    return {mn, mx};
  }
};

Interval eval_interval(const Poly& p, const Interval& x) {
  Interval acc{Rational(0), Rational(0)};
  for (size_t i = p.size(); i-- > 0;) {
    acc = acc * x;
    acc.lo += p[i];
    acc.hi += p[i];
  }
  return acc;
}

int sign_variations(const std::vector<Poly>& chain, const Rational& x) {
  int last = 0, v = 0;
  for (const auto& f : chain) {
    int s = sgn(poly::eval(f, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

poly::Poly NumberField::cos_minimal_polynomial(int n) {
  static std::map<int, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::vector<int> todo{n};
  // resolve dependencies iteratively (divisors first)
  while (!todo.empty()) {
    int k = todo.back();
    if (cache.count(k)) {
      todo.pop_back();
      continue;
    }
    if (k == 1) {
      cache[1] = Poly{Rational(-2), Rational(1)};
      todo.pop_back();
      continue;
    }
    bool ready = true;
    for (int d = 1; d < k; ++d)
      if (k % d == 0 && !cache.count(d)) {
        todo.push_back(d);
        ready = false;
      }
    if (!ready) continue;
    Poly sf = poly::squarefree_part(
        poly::sub(chebyshev_like(k), Poly{Rational(2)}));
    for (int d = 1; d < k; ++d)
      if (k % d == 0) {
        auto [q, r] = poly::divrem(sf, cache[d]);
        assert(r.empty());
        sf = std::move(q);
      }
    cache[k] = std::move(sf);
    todo.pop_back();
  }
  return cache[n];
}

NumberField::NumberField(int N) : n_(N) {
  min_poly_ = cos_minimal_polynomial(2 * N);
  if (degree() == 1) {
    lo_ = hi_ = -min_poly_[0];
    return;
  }
  // Sturm chain of the minimal polynomial
  std::vector<Poly> chain{min_poly_, poly::monic(poly::derivative(min_poly_))};
  while (poly::degree(chain.back()) > 0) {
    auto [q, r] = poly::divrem(chain[chain.size() - 2], chain.back());
    (void)q;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(poly::monic(r));
  }
  // isolate the largest root (= the generator) inside (lo_, 3]
  Rational right(3);
  Rational a(-3), b = right;
  while (true) {
    int cnt = sign_variations(chain, a) - sign_variations(chain, right);
    if (cnt == 1) break;
    assert(cnt > 1);
    Rational mid = (a + b) / 2;
    int cm = sign_variations(chain, mid) - sign_variations(chain, right);
    if (cm >= 1)
      a = mid;
    else
      b = mid;
    if (cm == 1) {
      a = mid;
      break;
    }
  }
  lo_ = a;
  hi_ = right;
  assert(sgn(poly::eval(min_poly_, lo_)) < 0);
  assert(sgn(poly::eval(min_poly_, hi_)) > 0);
  // a few initial refinements so casual use starts tight
  enclosure(8);
}

std::shared_ptr<const NumberField> NumberField::make(int N) {
  static std::map<int, std::shared_ptr<const NumberField>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[N];
  if (!slot) slot = std::shared_ptr<const NumberField>(new NumberField(N));
  return slot;
}

std::pair<Rational, Rational> NumberField::enclosure(int extra) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (degree() == 1) return {lo_, hi_};
  for (int i = 0; i < extra; ++i) {
    Rational mid = (lo_ + hi_) / 2;
    if (sgn(poly::eval(min_poly_, mid)) > 0)
      hi_ = mid;
    else
      lo_ = mid;
  }
  return {lo_, hi_};
}

Scalar::Scalar(const Rational& r) {
  if (sgn(r) != 0) c_.push_back(r);
}

Scalar::Scalar(long v) {
  if (v != 0) c_.push_back(Rational(v));
}

Scalar::Scalar(FieldPtr f, poly::Poly coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
  if (f_ && poly::degree(c_) >= f_->degree()) {
    auto [q, r] = poly::divrem(c_, f_->minimal_polynomial());
    (void)q;
    c_ = std::move(r);
  }
  trim();
}

void Scalar::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  if (c_.size() <= 1) f_.reset();  // rationals carry no field
}

Scalar Scalar::generator(const FieldPtr& f) {
  return Scalar(f, poly::Poly{Rational(0), Rational(1)});
}

Scalar Scalar::two_cos(const FieldPtr& f, long k) {
  if (k < 0) k = -k;
  k %= 2 * f->order();
  return Scalar(f, chebyshev_like((int)k));
}

Rational Scalar::rational_value() const {
  assert(is_rational());
  return c_.empty() ? Rational(0) : c_[0];
}

void Scalar::align(const Scalar& a, const Scalar& b, FieldPtr& f) {
  f = a.f_ ? a.f_ : b.f_;
  assert(!(a.f_ && b.f_) || a.f_ == b.f_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  FieldPtr f;
  align(*this, o, f);
  return Scalar(f, poly::add(c_, o.c_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  FieldPtr f;
  align(*this, o, f);
  return Scalar(f, poly::sub(c_, o.c_));
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  FieldPtr f;
  align(*this, o, f);
  return Scalar(f, poly::mul(c_, o.c_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("scalar: division by zero");
  if (is_rational()) return Scalar(Rational(1) / c_[0]);
  // extended Euclid against the minimal polynomial
  Poly r0 = f_->minimal_polynomial(), r1 = c_;
  Poly s0{}, s1{Rational(1)};
  while (poly::degree(r1) > 0) {
    Rational lead = r1.back();
    Poly r1m = poly::monic(r1);
    auto [q, rem] = poly::divrem(r0, r1m);
    // adjust: r0 = q*r1m + rem = (q/lead)*r1 + rem
    Poly qs = poly::scale(q, Rational(1) / lead);
    Poly s2 = poly::sub(s0, poly::mul(qs, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  assert(!r1.empty());  // gcd is a nonzero constant (minpoly irreducible)
  return Scalar(f_, poly::scale(s1, Rational(1) / r1[0]));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

int Scalar::sign() const {
  if (c_.empty()) return 0;
  if (is_rational()) return sgn(c_[0]);
  int extra = 0;
  while (true) {
    auto [lo, hi] = f_->enclosure(extra);
    Interval v = eval_interval(c_, Interval{lo, hi});
    if (sgn(v.lo) > 0) return 1;
    if (sgn(v.hi) < 0) return -1;
    extra = 4;  // refine and retry; terminates since the value is nonzero
  }
}

int Scalar::cmp(const Scalar& o) const { return (*this - o).sign(); }

int Scalar::key_cmp(const Scalar& a, const Scalar& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    int c = ::cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

double Scalar::to_double() const {
  if (c_.empty()) return 0.0;
  if (is_rational()) return c_[0].get_d();
  int extra = 0;
  while (true) {
    auto [lo, hi] = f_->enclosure(extra);
    Interval v = eval_interval(c_, Interval{lo, hi});
    Rational width = v.hi - v.lo;
    if (width < Rational(1, 1L << 30) * (abs(v.lo) + abs(v.hi) + 1)) {
      Rational mid = (v.lo + v.hi) / 2;
      return mid.get_d();
    }
    extra = 8;
  }
}

std::string Scalar::str() const {
  if (c_.empty()) return "0";
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0) continue;
    Rational v = c_[i];
    if (!first) {
      os << (sgn(v) < 0 ? "-" : "+");
      if (sgn(v) < 0) v = -v;
    }
    first = false;
    bool unit = (v == 1 || v == -1) && i > 0;
    if (!unit)
      os << v.get_str();
    else if (v == -1)
      os << "-";
    if (i > 0) {
      if (!unit) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace ncpw
