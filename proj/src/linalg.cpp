#include "ncpw/linalg.hpp"

#include <cassert>
#include <utility>

namespace ncpw {

Vec vec_zero(int n) { return Vec((size_t)n, Scalar::zero()); }

Vec vec_add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size(), Scalar::zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size(), Scalar::zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Vec& a, const Scalar& c) {
  Vec r(a.size(), Scalar::zero());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

int vec_key_cmp(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = Scalar::key_cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  assert(c_ == o.r_);
  Mat m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.c_; ++j)
        m.at(i, j) = m.at(i, j) + at(i, k) * o.at(k, j);
    }
  return m;
}

Vec Mat::apply(const Vec& v) const {
  assert((int)v.size() == c_);
  Vec r((size_t)r_, Scalar::zero());
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      if (at(i, j).is_zero()) continue;
      r[i] = r[i] + at(i, j) * v[j];
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  assert(r_ == o.r_ && c_ == o.c_);
  Mat m(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  assert(r_ == o.r_ && c_ == o.c_);
  Mat m(r_, c_);
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
  return m;
}

Mat Mat::transpose() const {
  Mat m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool Mat::operator==(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!(a_[i] == o.a_[i])) return false;
  return true;
}

Mat Mat::leading_principal(int k) const {
  Mat m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m.at(i, j) = at(i, j);
  return m;
}

Mat Mat::submatrix(const std::vector<int>& idx) const {
  int k = (int)idx.size();
  Mat m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m.at(i, j) = at(idx[i], idx[j]);
  return m;
}

std::vector<Scalar> Mat::column(int j) const {
  Vec v((size_t)r_, Scalar::zero());
  for (int i = 0; i < r_; ++i) v[i] = at(i, j);
  return v;
}

int Mat::key_cmp(const Mat& a, const Mat& b) {
  if (a.r_ != b.r_) return a.r_ < b.r_ ? -1 : 1;
  if (a.c_ != b.c_) return a.c_ < b.c_ ? -1 : 1;
  for (size_t i = 0; i < a.a_.size(); ++i) {
    int c = Scalar::key_cmp(a.a_[i], b.a_[i]);
    if (c != 0) return c;
  }
  return 0;
}

namespace {

// Reduced row echelon form in place.  Pivot choice is the first row with a
// nonzero entry, so results are deterministic.  Returns pivot columns.
std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    Scalar inv = m.at(row, col).inverse();
    for (int j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int Mat::rank() const {
  Mat m = *this;
  return (int)rref(m).size();
}

Scalar Mat::det() const {
  assert(r_ == c_);
  Mat m = *this;
  Scalar d = Scalar::one();
  for (int col = 0; col < c_; ++col) {
    int p = -1;
    for (int i = col; i < r_; ++i)
      if (!m.at(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Scalar::zero();
    if (p != col) {
      for (int j = 0; j < c_; ++j) std::swap(m.at(p, j), m.at(col, j));
      d = Scalar::zero() - d;
    }
    d = d * m.at(col, col);
    Scalar inv = m.at(col, col).inverse();
    for (int i = col + 1; i < r_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col) * inv;
      for (int j = col; j < c_; ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(col, j);
    }
  }
  return d;
}

std::optional<Mat> Mat::inverse() const {
  assert(r_ == c_);
  Mat aug(r_, 2 * c_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, c_ + i) = Scalar::one();
  }
  auto pivots = rref(aug);
  if ((int)pivots.size() != r_ || pivots.back() >= c_) return std::nullopt;
  Mat inv(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) inv.at(i, j) = aug.at(i, c_ + j);
  return inv;
}

std::optional<Vec> Mat::solve(const Vec& b) const {
  assert((int)b.size() == r_);
  Mat aug(r_, c_ + 1);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, c_) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == c_) return std::nullopt;
  Vec x((size_t)c_, Scalar::zero());
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at((int)k, c_);
  return x;
}

std::vector<Vec> Mat::kernel_basis() const {
  Mat m = *this;
  auto pivots = rref(m);
  std::vector<bool> is_pivot((size_t)c_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int j = 0; j < c_; ++j) {
    if (is_pivot[j]) continue;
    Vec v((size_t)c_, Scalar::zero());
    v[j] = Scalar::one();
    for (size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = Scalar::zero() - m.at((int)k, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<int> Mat::independent_columns() const {
  Mat m = *this;
  return rref(m);
}

Scalar gram_dot(const Mat& g, const Vec& u, const Vec& v) {
  assert((int)u.size() == g.rows() && (int)v.size() == g.cols());
  Scalar s = Scalar::zero();
  for (int i = 0; i < g.rows(); ++i) {
    if (u[i].is_zero()) continue;
    for (int j = 0; j < g.cols(); ++j) {
      if (g.at(i, j).is_zero() || v[j].is_zero()) continue;
      s = s + u[i] * g.at(i, j) * v[j];
    }
  }
  return s;
}

Scalar dot(const Vec& u, const Vec& v) {
  assert(u.size() == v.size());
  Scalar s = Scalar::zero();
  for (size_t i = 0; i < u.size(); ++i) s = s + u[i] * v[i];
  return s;
}

}  // namespace ncpw
