#include "ncpw/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncpw {

Isometry Isometry::identity(int dim) {
  return Isometry(Mat::identity(dim), vec_zero(dim));
}

Isometry Isometry::operator*(const Isometry& o) const {
  return Isometry(a_ * o.a_, vec_add(a_.apply(o.b_), b_));
}

Isometry Isometry::inverse() const {
  auto inv = a_.inverse();
  assert(inv.has_value());
  return Isometry(*inv, vec_scale(inv->apply(b_), Scalar(-1)));
}

Vec Isometry::apply(const Vec& x) const { return vec_add(a_.apply(x), b_); }

bool Isometry::operator==(const Isometry& o) const {
  return a_ == o.a_ && vec_key_cmp(b_, o.b_) == 0;
}

bool Isometry::is_identity() const {
  return a_ == Mat::identity(dim()) && vec_is_zero(b_);
}

int Isometry::key_cmp(const Isometry& a, const Isometry& b) {
  int c = Mat::key_cmp(a.a_, b.a_);
  if (c != 0) return c;
  return vec_key_cmp(a.b_, b.b_);
}

IsometryParts decompose(const Isometry& u) {
  int n = u.dim();
  Mat m = u.linear() - Mat::identity(n);
  const Vec& b = u.translation();

  auto ker = m.kernel_basis();
  std::vector<Vec> im;
  for (int j : m.independent_columns()) im.push_back(m.column(j));
  int r = (int)im.size(), k = (int)ker.size();
  assert(r + k == n);

  // V = Im(A-I) + Ker(A-I) is direct since A preserves a definite form
  Mat basis(n, n);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < n; ++i) basis.at(i, j) = im[j][i];
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) basis.at(i, r + j) = ker[j][i];
  auto c = basis.solve(b);
  assert(c.has_value());
  Vec b1 = vec_zero(n), b2 = vec_zero(n);
  for (int j = 0; j < r; ++j) b1 = vec_add(b1, vec_scale(im[j], (*c)[j]));
  for (int j = 0; j < k; ++j) b2 = vec_add(b2, vec_scale(ker[j], (*c)[r + j]));

  IsometryParts p;
  p.elliptic = vec_is_zero(b2);
  p.translation = b2;
  p.euclidean_length = r + (p.elliptic ? 0 : 2);

  p.mov.empty = false;
  p.mov.point = b2;
  p.mov.directions = im;

  auto x0 = m.solve(vec_scale(b1, Scalar(-1)));
  assert(x0.has_value());
  p.min_set.empty = false;
  p.min_set.point = *x0;
  p.min_set.directions = ker;
  if (p.elliptic) p.fix = p.min_set;
  return p;
}

namespace {

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix blank_matrix(int n) {
  IntMatrix m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void set_edge(IntMatrix& m, int i, int j, int v) { m[i][j] = m[j][i] = v; }

IntMatrix chain_matrix(int n, std::vector<int> edge_orders) {
  IntMatrix m = blank_matrix(n);
  for (int i = 0; i + 1 < n; ++i) set_edge(m, i, i + 1, edge_orders[i]);
  return m;
}

IntMatrix type_a(int n) { return chain_matrix(n, std::vector<int>(n - 1, 3)); }

IntMatrix type_b(int n) {
  auto e = std::vector<int>(n - 1, 3);
  e[n - 2] = 4;
  return chain_matrix(n, e);
}

IntMatrix type_d(int n) {
  IntMatrix m = chain_matrix(n - 1, std::vector<int>(n - 2, 3));
  m.resize(n);
  for (auto& row : m) row.resize(n, 2);
  m[n - 1] = std::vector<int>(n, 2);
  m[n - 1][n - 1] = 1;
  set_edge(m, n - 1, n - 3, 3);
  return m;
}

IntMatrix type_e(int n) {
  IntMatrix m = blank_matrix(n);
  for (int i = 0; i + 1 < n - 1; ++i) set_edge(m, i, i + 1, 3);
  set_edge(m, n - 1, 2, 3);
  return m;
}

IntMatrix type_f4() { return chain_matrix(4, {3, 4, 3}); }

IntMatrix type_h(int n) {
  auto e = std::vector<int>(n - 1, 3);
  e[0] = 5;
  return chain_matrix(n, e);
}

IntMatrix dihedral(int order) {
  IntMatrix m = blank_matrix(2);
  set_edge(m, 0, 1, order);
  return m;
}

// The affine node is always the last generator, so dropping it leaves the
// finite part in its standard ordering.
IntMatrix affine_a(int n) {
  if (n == 1) return dihedral(0);
  IntMatrix m = type_a(n);
  m.resize(n + 1);
  for (auto& row : m) row.resize(n + 1, 2);
  m[n] = std::vector<int>(n + 1, 2);
  m[n][n] = 1;
  set_edge(m, n, 0, 3);
  set_edge(m, n, n - 1, 3);
  return m;
}

IntMatrix append_node(IntMatrix base, int attach, int order) {
  int n = (int)base.size();
  base.resize(n + 1);
  for (auto& row : base) row.resize(n + 1, 2);
  base[n] = std::vector<int>(n + 1, 2);
  base[n][n] = 1;
  set_edge(base, n, attach, order);
  return base;
}

IntMatrix affine_b(int n) { return append_node(type_b(n), 1, 3); }

IntMatrix affine_c(int n) {
  auto e = std::vector<int>(n, 3);
  e[0] = 4;
  e[n - 1] = 4;
  return chain_matrix(n + 1, e);
}

IntMatrix affine_d(int n) { return append_node(type_d(n), 1, 3); }

IntMatrix affine_f4() { return append_node(type_f4(), 0, 3); }

IntMatrix affine_g2() { return chain_matrix(3, {6, 3}); }

bool connected(const IntMatrix& m) {
  int n = (int)m.size();
  std::vector<bool> seen(n, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j)
      if (!seen[j] && m[i][j] != 2) {
        seen[j] = true;
        stack.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool iso_search(const IntMatrix& a, const IntMatrix& b, std::vector<int>& p,
                std::vector<bool>& used, int i) {
  int n = (int)a.size();
  if (i == n) return true;
  for (int c = 0; c < n; ++c) {
    if (used[c]) continue;
    bool ok = true;
    for (int j = 0; j < i && ok; ++j)
      if (a[i][j] != b[p[j]][c]) ok = false;
    if (!ok) continue;
    p[i] = c;
    used[c] = true;
    if (iso_search(a, b, p, used, i + 1)) return true;
    used[c] = false;
  }
  return false;
}

bool same_type(const IntMatrix& a, const IntMatrix& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> ea, eb;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j) {
      ea.push_back(a[i][j]);
      eb.push_back(b[i][j]);
    }
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  if (ea != eb) return false;
  std::vector<int> p(a.size());
  std::vector<bool> used(a.size(), false);
  return iso_search(a, b, p, used, 0);
}

std::string recognize_spherical(const IntMatrix& m) {
  int n = (int)m.size();
  if (!connected(m)) return "spherical";
  if (n == 1) return "A1";
  if (n == 2) {
    int k = m[0][1];
    if (k == 3) return "A2";
    if (k == 4) return "B2";
    if (k == 6) return "G2";
    return "I2(" + std::to_string(k) + ")";
  }
  std::vector<std::pair<std::string, IntMatrix>> candidates;
  candidates.emplace_back("A" + std::to_string(n), type_a(n));
  candidates.emplace_back("B" + std::to_string(n), type_b(n));
  if (n >= 4) candidates.emplace_back("D" + std::to_string(n), type_d(n));
  if (n >= 6 && n <= 8)
    candidates.emplace_back("E" + std::to_string(n), type_e(n));
  if (n == 4) candidates.emplace_back("F4", type_f4());
  if (n == 3 || n == 4)
    candidates.emplace_back("H" + std::to_string(n), type_h(n));
  for (auto& [name, cm] : candidates)
    if (same_type(m, cm)) return name;
  return "spherical";
}

std::string recognize_affine(const IntMatrix& m) {
  int n = (int)m.size() - 1;  // rank of the finite part
  std::vector<std::pair<std::string, IntMatrix>> candidates;
  if (n >= 1) candidates.emplace_back("A" + std::to_string(n), affine_a(n));
  if (n >= 3) candidates.emplace_back("B" + std::to_string(n), affine_b(n));
  if (n >= 2) candidates.emplace_back("C" + std::to_string(n), affine_c(n));
  if (n >= 4) candidates.emplace_back("D" + std::to_string(n), affine_d(n));
  if (n == 4) candidates.emplace_back("F4", affine_f4());
  if (n == 2) candidates.emplace_back("G2", affine_g2());
  for (auto& [name, cm] : candidates)
    if (same_type(m, cm)) return "affine " + name;
  return "affine";
}

Mat cosine_form(const IntMatrix& m, const FieldPtr& f, long order) {
  int n = (int)m.size();
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        g.at(i, j) = Scalar::one();
      else if (m[i][j] == 0)
        g.at(i, j) = Scalar(-1);
      else if (m[i][j] == 2)
        g.at(i, j) = Scalar::zero();
      else
        g.at(i, j) = Scalar::zero() -
                     Scalar::two_cos(f, order / m[i][j]) / Scalar(2);
    }
  return g;
}

long field_order_of(const IntMatrix& m) {
  long n = 2;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (m[i][j] > 0) n = std::lcm(n, 2L * m[i][j]);
  return n;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  mpz_class num = r.get_num(), den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return Rational(sn) / Rational(sd);
}

int length_factor(int m) {
  switch (m) {
    case 3: return 1;
    case 4: return 2;
    case 6: return 3;
    default: return 0;
  }
}

// Squared root lengths with ratios dictated by the edge orders.  Each tree
// edge of order 4 or 6 can scale either way; `branch` selects a direction
// for each in discovery order.  Returns the Gram matrix if every edge comes
// out rational.
std::optional<Mat> root_gram(const IntMatrix& m, unsigned branch) {
  int n = (int)m.size();
  std::vector<Rational> len(n, Rational(0));
  std::vector<bool> seen(n, false);
  int choice_pos = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    len[start] = Rational(2);
    seen[start] = true;
    std::vector<int> queue = {start};
    for (size_t q = 0; q < queue.size(); ++q) {
      int i = queue[q];
      for (int j = 0; j < n; ++j) {
        if (m[i][j] == 2 || m[i][j] == 1 || seen[j]) continue;
        if (m[i][j] == 0) return std::nullopt;
        int f = length_factor(m[i][j]);
        if (f == 0) return std::nullopt;
        if (f == 1) {
          len[j] = len[i];
        } else {
          bool up = (branch >> choice_pos) & 1u;
          ++choice_pos;
          len[j] = up ? Rational(len[i] * f) : Rational(len[i] / f);
        }
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  Mat g(n, n);
  for (int i = 0; i < n; ++i) g.at(i, i) = Scalar(len[i]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (m[i][j] == 2) continue;
      int f = length_factor(m[i][j]);
      if (f == 0) return std::nullopt;
      auto s = rational_sqrt(Rational(f) * len[i] * len[j]);
      if (!s) return std::nullopt;
      Scalar v(Rational(-*s / 2));
      g.at(i, j) = v;
      g.at(j, i) = v;
    }
  return g;
}

int ambiguous_edge_count(const IntMatrix& m) {
  int n = (int)m.size(), count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m[i][j] == 4 || m[i][j] == 6) ++count;
  return count;
}

struct ParsedName {
  bool affine = false;
  bool symmetric_group = false;
  char letter = 0;
  int rank = 0;
  int dihedral_order = 0;
};

std::optional<ParsedName> parse_name(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace((unsigned char)c) && c != '_' && c != '-')
      s.push_back((char)std::tolower((unsigned char)c));
  ParsedName p;
  if (s.rfind("affine", 0) == 0) {
    p.affine = true;
    s = s.substr(6);
  } else if (s.rfind("aff", 0) == 0) {
    p.affine = true;
    s = s.substr(3);
  }
  if (s.size() < 2) return std::nullopt;
  p.letter = s[0];
  if (s.rfind("i2(", 1) == 0 && s.back() == ')') {
    p.rank = 2;
    p.dihedral_order = std::atoi(s.substr(3, s.size() - 4).c_str());
    if (p.dihedral_order < 3) return std::nullopt;
    return p;
  }
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit((unsigned char)s[i])) return std::nullopt;
  p.rank = std::atoi(s.c_str() + 1);
  if (p.rank <= 0) return std::nullopt;
  if (p.letter == 's') {
    if (p.affine || p.rank < 2) return std::nullopt;
    p.symmetric_group = true;
  }
  return p;
}

IntMatrix matrix_for_name(const ParsedName& p, const std::string& raw) {
  auto fail = [&]() -> IntMatrix {
    throw std::invalid_argument("unrecognized system name: " + raw);
  };
  int n = p.rank;
  if (p.symmetric_group) return type_a(n - 1);
  if (p.affine) {
    switch (p.letter) {
      case 'a': return n >= 1 ? affine_a(n) : fail();
      case 'b': return n >= 3 ? affine_b(n) : fail();
      case 'c': return n >= 2 ? affine_c(n) : fail();
      case 'd': return n >= 4 ? affine_d(n) : fail();
      case 'f': return n == 4 ? affine_f4() : fail();
      case 'g': return n == 2 ? affine_g2() : fail();
      default: return fail();
    }
  }
  switch (p.letter) {
    case 'a': return n >= 1 ? type_a(n) : fail();
    case 'b':
    case 'c': return n >= 2 ? type_b(n) : fail();
    case 'd': return n >= 4 ? type_d(n) : fail();
    case 'e': return (n >= 6 && n <= 8) ? type_e(n) : fail();
    case 'f': return n == 4 ? type_f4() : fail();
    case 'g': return n == 2 ? dihedral(6) : fail();
    case 'h': return (n == 3 || n == 4) ? type_h(n) : fail();
    case 'i': return p.dihedral_order >= 3 ? dihedral(p.dihedral_order) : fail();
    default: return fail();
  }
}

void validate_matrix(const IntMatrix& m) {
  size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty Coxeter matrix");
  for (size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("Coxeter matrix not square");
    if (m[i][i] != 1)
      throw std::invalid_argument("Coxeter matrix diagonal must be 1");
    for (size_t j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i])
        throw std::invalid_argument("Coxeter matrix not symmetric");
      if (i != j && m[i][j] != 0 && m[i][j] < 2)
        throw std::invalid_argument("off-diagonal entries must be >= 2 or 0 (infinity)");
    }
  }
}

}  // namespace

SystemKind classify_cosine_form(const IntMatrix& m) {
  int n = (int)m.size();
  long order = field_order_of(m);
  auto f = NumberField::make(order);
  Mat g = cosine_form(m, f, order);
  std::vector<int> minor_sign(n + 1);
  for (int k = 1; k <= n; ++k)
    minor_sign[k] = g.leading_principal(k).det().sign();
  bool proper_positive = true;
  for (int k = 1; k < n; ++k)
    if (minor_sign[k] <= 0) proper_positive = false;
  if (proper_positive && minor_sign[n] > 0) return SystemKind::Spherical;
  if (proper_positive && minor_sign[n] == 0 && connected(m))
    return SystemKind::Affine;
  return SystemKind::Other;
}

SystemPtr CoxeterSystem::from_name(const std::string& name) {
  auto parsed = parse_name(name);
  if (!parsed) throw std::invalid_argument("unrecognized system name: " + name);
  IntMatrix m = matrix_for_name(*parsed, name);
  auto sys = std::shared_ptr<CoxeterSystem>(new CoxeterSystem());
  sys->matrix_ = m;
  sys->rank_ = (int)m.size();
  sys->name_ = name;
  sys->perm_rep_ = parsed->symmetric_group;
  sys->kind_ = classify_cosine_form(m);
  sys->classification_ = sys->kind_ == SystemKind::Spherical
                             ? recognize_spherical(m)
                             : sys->kind_ == SystemKind::Affine
                                   ? recognize_affine(m)
                                   : "other";
  sys->field_order_ = field_order_of(m);
  sys->field_ = NumberField::make(sys->field_order_);
  sys->build_representation();
  return sys;
}

SystemPtr CoxeterSystem::from_matrix(const IntMatrix& m,
                                     const std::string& display_name) {
  validate_matrix(m);
  auto sys = std::shared_ptr<CoxeterSystem>(new CoxeterSystem());
  sys->matrix_ = m;
  sys->rank_ = (int)m.size();
  sys->kind_ = classify_cosine_form(m);
  sys->classification_ = sys->kind_ == SystemKind::Spherical
                             ? recognize_spherical(m)
                             : sys->kind_ == SystemKind::Affine
                                   ? recognize_affine(m)
                                   : "other";
  sys->name_ = display_name.empty() ? sys->classification_ : display_name;
  sys->field_order_ = field_order_of(m);
  sys->field_ = NumberField::make(sys->field_order_);
  sys->build_representation();
  return sys;
}

void CoxeterSystem::build_representation() {
  crystallographic_ = true;
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      if (length_factor(matrix_[i][j]) == 0 && matrix_[i][j] != 2)
        crystallographic_ = false;

  if (perm_rep_) {
    int n = rank_ + 1;
    dim_ = n;
    gram_ = Mat::identity(n);
    for (int i = 0; i < rank_; ++i) {
      Mat a = Mat::identity(n);
      a.at(i, i) = Scalar(0);
      a.at(i + 1, i + 1) = Scalar(0);
      a.at(i, i + 1) = Scalar(1);
      a.at(i + 1, i) = Scalar(1);
      gens_.push_back(Isometry(std::move(a), vec_zero(n)));
      Vec root = vec_zero(n);
      root[i] = Scalar(1);
      root[i + 1] = Scalar(-1);
      walls_.push_back(Wall{std::move(root), Scalar::zero()});
    }
    return;
  }

  if (kind_ == SystemKind::Affine) {
    build_affine_representation();
    return;
  }

  dim_ = rank_;
  std::optional<Mat> g;
  if (crystallographic_) g = root_gram(matrix_, 0);
  if (!g) g = cosine_form(matrix_, field_, field_order_);
  gram_ = *g;
  for (int i = 0; i < rank_; ++i) {
    Mat a = Mat::identity(rank_);
    Scalar inv_len = gram_.at(i, i).inverse();
    for (int j = 0; j < rank_; ++j)
      a.at(i, j) = a.at(i, j) - Scalar(2) * gram_.at(i, j) * inv_len;
    gens_.push_back(Isometry(std::move(a), vec_zero(rank_)));
    Vec root = vec_zero(rank_);
    root[i] = Scalar(1);
    walls_.push_back(Wall{std::move(root), Scalar::zero()});
  }
}

void CoxeterSystem::build_affine_representation() {
  if (rank_ == 2) {
    // reflections of the line in the integer points 0 and 1
    dim_ = 1;
    crystallographic_ = true;
    gram_ = Mat::identity(1);
    Mat neg(1, 1);
    neg.at(0, 0) = Scalar(-1);
    gens_.push_back(Isometry(neg, Vec{Scalar(0)}));
    gens_.push_back(Isometry(neg, Vec{Scalar(2)}));
    walls_.push_back(Wall{Vec{Scalar(1)}, Scalar(0)});
    walls_.push_back(Wall{Vec{Scalar(-1)}, Scalar(-1)});
    return;
  }
  if (!crystallographic_)
    throw std::invalid_argument(
        "affine realization requires edge orders in {2,3,4,6} (or rank 2 "
        "with an infinite bond)");

  int n = rank_ - 1;
  dim_ = n;

  std::optional<Mat> full;
  unsigned branches = 1u << ambiguous_edge_count(matrix_);
  for (unsigned b = 0; b < branches && !full; ++b) {
    auto g = root_gram(matrix_, b);
    if (g && g->det().is_zero()) full = g;
  }
  if (!full)
    throw std::invalid_argument(
        "could not realize affine system with rational root lengths");

  gram_ = full->leading_principal(n);
  Vec rhs(n, Scalar::zero());
  for (int i = 0; i < n; ++i) rhs[i] = full->at(n, i);
  auto beta = gram_.solve(rhs);
  assert(beta.has_value());
  Vec theta = vec_scale(*beta, Scalar(-1));
  Scalar theta_len = form(theta, theta);
  assert(theta_len == full->at(n, n));

  for (int i = 0; i < n; ++i) {
    Mat a = Mat::identity(n);
    Scalar inv_len = gram_.at(i, i).inverse();
    for (int j = 0; j < n; ++j)
      a.at(i, j) = a.at(i, j) - Scalar(2) * gram_.at(i, j) * inv_len;
    gens_.push_back(Isometry(std::move(a), vec_zero(n)));
    Vec root = vec_zero(n);
    root[i] = Scalar(1);
    walls_.push_back(Wall{std::move(root), Scalar::zero()});
  }

  Vec gtheta = gram_.apply(theta);
  Scalar c = Scalar(2) * theta_len.inverse();
  Mat a = Mat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a.at(i, j) = a.at(i, j) - c * theta[i] * gtheta[j];
  gens_.push_back(Isometry(std::move(a), vec_scale(theta, c)));
  walls_.push_back(Wall{vec_scale(theta, Scalar(-1)), Scalar(-1)});
}

Isometry CoxeterSystem::word(const std::vector<int>& letters) const {
  Isometry u = identity();
  for (int i : letters) {
    if (i < 0 || i >= rank_)
      throw std::invalid_argument("generator index out of range");
    u = u * gens_[i];
  }
  return u;
}

Isometry CoxeterSystem::coxeter_element(const std::vector<int>& order) const {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < rank_; ++i)
    if (i >= (int)sorted.size() || sorted[i] != i)
      throw std::invalid_argument(
          "Coxeter element order must be a permutation of the generators");
  return word(order);
}

Isometry CoxeterSystem::coxeter_element() const {
  std::vector<int> order(rank_);
  std::iota(order.begin(), order.end(), 0);
  return coxeter_element(order);
}

bool CoxeterSystem::is_reflection(const Isometry& u) const {
  const Mat& a = u.linear();
  if (a * a != Mat::identity(dim_)) return false;
  Mat m = a - Mat::identity(dim_);
  if (m.rank() != 1) return false;
  return m.solve(vec_scale(u.translation(), Scalar(-1))).has_value();
}

std::pair<Vec, Scalar> CoxeterSystem::reflection_root(const Isometry& u) const {
  Mat plus = u.linear() + Mat::identity(dim_);
  auto ker = plus.kernel_basis();
  assert(ker.size() == 1);
  Vec root = ker[0];
  for (auto& x : root)
    if (!x.is_zero()) {
      Scalar inv = x.inverse();
      root = vec_scale(root, inv);
      break;
    }
  Mat m = u.linear() - Mat::identity(dim_);
  auto p = m.solve(vec_scale(u.translation(), Scalar(-1)));
  assert(p.has_value());
  return {root, form(root, *p)};
}

std::string CoxeterSystem::permutation_cycles(const Isometry& u) const {
  assert(perm_rep_);
  int n = dim_;
  std::vector<int> img(n, -1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (!u.linear().at(i, j).is_zero()) img[j] = i;
  std::vector<bool> seen(n, false);
  std::ostringstream os;
  bool any = false;
  for (int start = 0; start < n; ++start) {
    if (seen[start] || img[start] == start) continue;
    os << '(';
    int i = start;
    bool first = true;
    while (!seen[i]) {
      seen[i] = true;
      if (!first && n > 9) os << ' ';
      first = false;
      os << i + 1;
      i = img[i];
    }
    os << ')';
    any = true;
  }
  return any ? os.str() : "()";
}

std::string CoxeterSystem::describe_reflection(const Isometry& u) const {
  if (perm_rep_) return permutation_cycles(u);
  auto [root, offset] = reflection_root(u);
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < root.size(); ++i) {
    if (i) os << ',';
    os << root[i].str();
  }
  os << "]=" << offset.str();
  return os.str();
}

}  // namespace ncpw
