#pragma once

#include <optional>
#include <vector>

#include "ncpw/scalar.hpp"

namespace ncpw {

using Vec = std::vector<Scalar>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Scalar& c);
bool vec_is_zero(const Vec& a);
int vec_key_cmp(const Vec& a, const Vec& b);
Vec vec_zero(int n);

class Mat {
 public:
  Mat() {}
  Mat(int r, int c) : r_(r), c_(c), a_((size_t)r * c) {}
  static Mat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Scalar& at(int i, int j) { return a_[(size_t)i * c_ + j]; }
  const Scalar& at(int i, int j) const { return a_[(size_t)i * c_ + j]; }

  Mat operator*(const Mat& o) const;
  Vec apply(const Vec& v) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat leading_principal(int k) const;  // top-left k x k block
  Mat submatrix(const std::vector<int>& idx) const;  // principal, rows=cols=idx

  int rank() const;
  Scalar det() const;
  std::optional<Mat> inverse() const;
  // one solution of A x = b, if any
  std::optional<Vec> solve(const Vec& b) const;
  std::vector<Vec> kernel_basis() const;
  // indices of a maximal independent set of columns (deterministic)
  std::vector<int> independent_columns() const;
  std::vector<Scalar> column(int j) const;

  static int key_cmp(const Mat& a, const Mat& b);

 private:
  int r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

// <u, v> with respect to a symmetric Gram matrix
Scalar gram_dot(const Mat& g, const Vec& u, const Vec& v);
Scalar dot(const Vec& u, const Vec& v);

}  // namespace ncpw
