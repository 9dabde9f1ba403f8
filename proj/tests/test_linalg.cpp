#include <doctest.h>

#include "ncpw/linalg.hpp"
#include "ncpw/snf.hpp"

using namespace ncpw;

namespace {

Mat from_rows(std::vector<std::vector<long>> rows) {
  Mat m((int)rows.size(), (int)rows[0].size());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Scalar(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("matrix basics") {
  Mat a = from_rows({{1, 2}, {3, 4}});
  Mat i = Mat::identity(2);
  CHECK(a * i == a);
  CHECK(i * a == a);
  CHECK(a.transpose().transpose() == a);
  CHECK(a.det() == Scalar(-2));
  CHECK(a.rank() == 2);
  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK(*inv * a == i);
  CHECK(a * *inv == i);
}

TEST_CASE("singular matrix") {
  Mat a = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
  CHECK(a.det() == Scalar(0));
  CHECK(a.rank() == 2);
  CHECK(!a.inverse().has_value());
  auto ker = a.kernel_basis();
  REQUIRE(ker.size() == 1);
  CHECK(vec_is_zero(a.apply(ker[0])));
  auto cols = a.independent_columns();
  CHECK(cols == std::vector<int>{0, 1});
}

TEST_CASE("solve") {
  Mat a = from_rows({{1, 2}, {3, 4}, {4, 6}});
  Vec b = {Scalar(5), Scalar(6), Scalar(11)};
  auto x = a.solve(b);
  REQUIRE(x.has_value());
  CHECK(vec_is_zero(vec_sub(a.apply(*x), b)));
  Vec bad = {Scalar(5), Scalar(6), Scalar(12)};
  CHECK(!a.solve(bad).has_value());
}

TEST_CASE("elimination over a number field") {
  auto f = NumberField::make(4);
  Scalar z = Scalar::generator(f);  // sqrt(2)
  Mat a(2, 2);
  a.at(0, 0) = z;
  a.at(0, 1) = Scalar(1);
  a.at(1, 0) = Scalar(1);
  a.at(1, 1) = z;
  CHECK(a.det() == Scalar(1));
  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK(*inv * a == Mat::identity(2));

  Mat s(2, 2);
  s.at(0, 0) = z;
  s.at(0, 1) = Scalar(1);
  s.at(1, 0) = Scalar(2);
  s.at(1, 1) = z;  // second row is z times the first since z*z == 2
  CHECK(s.det() == Scalar(0));
  CHECK(s.rank() == 1);
  CHECK(s.kernel_basis().size() == 1);
}

TEST_CASE("gram dot") {
  Mat g = from_rows({{2, -1}, {-1, 2}});
  Vec u = {Scalar(1), Scalar(0)};
  Vec v = {Scalar(0), Scalar(1)};
  CHECK(gram_dot(g, u, u) == Scalar(2));
  CHECK(gram_dot(g, u, v) == Scalar(-1));
  CHECK(dot(u, v) == Scalar(0));
}

TEST_CASE("smith normal form invariant factors") {
  auto diag = [](ZMat a) {
    std::vector<long> out;
    for (const mpz_class& d : smith_diagonal(std::move(a)))
      out.push_back(d.get_si());
    return out;
  };
  CHECK(diag({{2, 0}, {0, 3}}) == std::vector<long>{1, 6});
  CHECK(diag({{2, 4}, {6, 8}}) == std::vector<long>{2, 4});
  CHECK(diag({{1, 0}, {0, 0}}) == std::vector<long>{1});
  CHECK(diag({{0, 0}, {0, 0}}).empty());
  CHECK(diag({{6, 10, 15}}) == std::vector<long>{1});
  CHECK(diag({{-2}}) == std::vector<long>{2});
  // relation matrix of Z^2 / <(2,0),(0,4)>
  CHECK(diag({{2, 0}, {0, 4}}) == std::vector<long>{2, 4});
}

TEST_CASE("integer solvability of linear systems") {
  CHECK(integer_solvable({{2}}, {4}));
  CHECK_FALSE(integer_solvable({{2}}, {3}));
  CHECK(integer_solvable({{2, 3}}, {1}));
  CHECK_FALSE(integer_solvable({{2, 4}}, {1}));
  CHECK(integer_solvable({{1, 0}, {0, 2}, {0, 0}}, {7, 6, 0}));
  CHECK_FALSE(integer_solvable({{1, 0}, {0, 2}, {0, 0}}, {7, 6, 1}));
  CHECK_FALSE(integer_solvable({{1, 1}, {1, 1}}, {0, 1}));
  CHECK(integer_solvable({{4, 6}, {6, 4}}, {2, 8}));  // x=2, y=-1
  CHECK_FALSE(integer_solvable({{4, 6}, {6, 4}}, {2, 7}));
}
