#include <doctest.h>

#include "ncpw/coxeter.hpp"

using namespace ncpw;

TEST_CASE("classification from explicit matrices") {
  auto a3 = CoxeterSystem::from_matrix({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
  CHECK(a3->kind() == SystemKind::Spherical);
  CHECK(a3->classification() == "A3");

  auto aff = CoxeterSystem::from_matrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
  CHECK(aff->kind() == SystemKind::Affine);
  CHECK(aff->classification() == "affine A2");

  auto universal =
      CoxeterSystem::from_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(universal->kind() == SystemKind::Other);

  CHECK_THROWS(CoxeterSystem::from_matrix({{1, 3}, {4, 1}}));
  CHECK_THROWS(CoxeterSystem::from_matrix({{2, 3}, {3, 2}}));
  CHECK_THROWS(CoxeterSystem::from_matrix({{1, 1}, {1, 1}}));
}

TEST_CASE("named systems") {
  auto b3 = CoxeterSystem::from_name("B3");
  CHECK(b3->rank() == 3);
  CHECK(b3->kind() == SystemKind::Spherical);
  CHECK(b3->classification() == "B3");
  CHECK(b3->crystallographic());
  CHECK(b3->m(1, 2) == 4);

  auto c2 = CoxeterSystem::from_name("affine C2");
  CHECK(c2->rank() == 3);
  CHECK(c2->dim() == 2);
  CHECK(c2->kind() == SystemKind::Affine);
  CHECK(c2->classification() == "affine C2");
  CHECK(CoxeterSystem::from_name("affC2")->classification() == "affine C2");

  auto h3 = CoxeterSystem::from_name("H3");
  CHECK(!h3->crystallographic());
  CHECK(h3->field_order() == 60);

  auto s4 = CoxeterSystem::from_name("S4");
  CHECK(s4->rank() == 3);
  CHECK(s4->dim() == 4);
  CHECK(s4->permutation_representation());
  CHECK(s4->classification() == "A3");

  auto a1t = CoxeterSystem::from_name("affine A1");
  CHECK(a1t->rank() == 2);
  CHECK(a1t->dim() == 1);
  CHECK(a1t->m(0, 1) == 0);
  CHECK(a1t->classification() == "affine A1");

  auto b3t = CoxeterSystem::from_name("affine B3");
  CHECK(b3t->rank() == 4);
  CHECK(b3t->dim() == 3);
  CHECK(b3t->classification() == "affine B3");
  CHECK(CoxeterSystem::from_name("affine G2")->classification() == "affine G2");

  CHECK_THROWS(CoxeterSystem::from_name("Q5"));
  CHECK_THROWS(CoxeterSystem::from_name("affine H3"));
  CHECK_THROWS(CoxeterSystem::from_name("E9"));
}

TEST_CASE("generators satisfy the defining relations") {
  for (const char* name : {"A3", "B3", "H3", "S4", "affine A2", "affine C2",
                           "affine G2", "affine B3", "affine A1"}) {
    auto sys = CoxeterSystem::from_name(name);
    CAPTURE(name);
    for (int i = 0; i < sys->rank(); ++i) {
      Isometry s = sys->generator(i);
      CHECK((s * s).is_identity());
      CHECK(!s.is_identity());
    }
    for (int i = 0; i < sys->rank(); ++i)
      for (int j = i + 1; j < sys->rank(); ++j) {
        int m = sys->m(i, j);
        if (m == 0) continue;
        Isometry st = sys->generator(i) * sys->generator(j);
        Isometry p = st;
        for (int k = 1; k < m; ++k) {
          CHECK(!p.is_identity());
          p = p * st;
        }
        CHECK(p.is_identity());
      }
  }
}

TEST_CASE("rational representations for crystallographic systems") {
  for (const char* name : {"B3", "S4", "affine A2", "affine C2", "affine B3"}) {
    auto sys = CoxeterSystem::from_name(name);
    CAPTURE(name);
    for (int i = 0; i < sys->dim(); ++i)
      for (int j = 0; j < sys->dim(); ++j)
        CHECK(sys->gram().at(i, j).is_rational());
  }
  auto h3 = CoxeterSystem::from_name("H3");
  bool all_rational = true;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      all_rational = all_rational && h3->gram().at(i, j).is_rational();
  CHECK(!all_rational);
}

TEST_CASE("affine A1 acts on the line by integer reflections") {
  auto sys = CoxeterSystem::from_name("affine A1");
  Vec x = {Scalar(5)};
  CHECK(sys->generator(0).apply(x)[0] == Scalar(-5));
  CHECK(sys->generator(1).apply(x)[0] == Scalar(-3));

  Isometry w = sys->coxeter_element({1, 0});
  CHECK(w.apply(x)[0] == Scalar(7));
  auto parts = decompose(w);
  CHECK(!parts.elliptic);
  CHECK(parts.euclidean_length == 2);
  CHECK(parts.fix.empty);
  CHECK(parts.min_set.dimension() == 1);
  CHECK(parts.mov.dimension() == 0);
  CHECK(parts.mov.point[0] == Scalar(2));
  CHECK(parts.translation[0] == Scalar(2));

  auto r = decompose(sys->generator(0));
  CHECK(r.elliptic);
  CHECK(r.euclidean_length == 1);
  CHECK(r.fix.dimension() == 0);
  CHECK(r.fix.point[0] == Scalar(0));

  auto e = decompose(sys->identity());
  CHECK(e.elliptic);
  CHECK(e.euclidean_length == 0);
  CHECK(e.fix.dimension() == 1);
  CHECK(e.mov.dimension() == 0);
  CHECK(vec_is_zero(e.mov.point));
}

TEST_CASE("coxeter elements") {
  auto s3 = CoxeterSystem::from_name("S3");
  CHECK(s3->permutation_cycles(s3->coxeter_element({0, 1})) == "(123)");
  CHECK(s3->permutation_cycles(s3->generator(0)) == "(12)");
  CHECK(s3->permutation_cycles(s3->generator(1)) == "(23)");
  CHECK(s3->permutation_cycles(s3->identity()) == "()");

  for (const char* name : {"A2", "affine A1", "B3"}) {
    auto sys = CoxeterSystem::from_name(name);
    CAPTURE(name);
    std::vector<int> order, rev;
    for (int i = 0; i < sys->rank(); ++i) order.push_back(i);
    rev.assign(order.rbegin(), order.rend());
    auto a = decompose(sys->coxeter_element(order));
    auto b = decompose(sys->coxeter_element(rev));
    CHECK(a.euclidean_length == b.euclidean_length);
    CHECK(a.elliptic == b.elliptic);
  }
  CHECK_THROWS(CoxeterSystem::from_name("A2")->coxeter_element({0, 0}));
}

TEST_CASE("reflection recognition and roots") {
  auto sys = CoxeterSystem::from_name("affine A1");
  CHECK(sys->is_reflection(sys->generator(1)));
  CHECK(!sys->is_reflection(sys->coxeter_element({1, 0})));
  CHECK(!sys->is_reflection(sys->identity()));
  auto [root, offset] = sys->reflection_root(sys->generator(1));
  CHECK(root[0] == Scalar(1));
  CHECK(offset == Scalar(1));
  CHECK(sys->describe_reflection(sys->generator(1)) == "[1]=1");

  auto a2 = CoxeterSystem::from_name("A2");
  Isometry rot = a2->generator(0) * a2->generator(1);
  CHECK(!a2->is_reflection(rot));
  auto parts = decompose(rot);
  CHECK(parts.elliptic);
  CHECK(parts.fix.dimension() == 0);
  CHECK(parts.euclidean_length == 2);
  Isometry conj = rot * a2->generator(0) * rot.inverse();
  CHECK(a2->is_reflection(conj));

  auto s4 = CoxeterSystem::from_name("S4");
  Isometry t = s4->word({0, 1, 0});
  CHECK(s4->is_reflection(t));
  CHECK(s4->permutation_cycles(t) == "(13)");
  CHECK(s4->describe_reflection(t) == "(13)");
}

TEST_CASE("walls are fixed by their generators") {
  for (const char* name : {"A2", "B3", "affine A2", "affine C2", "affine A1"}) {
    auto sys = CoxeterSystem::from_name(name);
    CAPTURE(name);
    REQUIRE((int)sys->walls().size() == sys->rank());
    for (int i = 0; i < sys->rank(); ++i) {
      const Wall& w = sys->walls()[i];
      auto parts = decompose(sys->generator(i));
      REQUIRE(parts.fix.dimension() == sys->dim() - 1);
      CHECK(sys->form(w.root, parts.fix.point) == w.offset);
      for (const Vec& d : parts.fix.directions)
        CHECK(sys->form(w.root, d).is_zero());
    }
  }
}
