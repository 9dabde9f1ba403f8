#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncpw/linalg.hpp"
#include "ncpw/scalar.hpp"

namespace ncpw {

enum class SystemKind { Spherical, Affine, Other };

// Euclidean/affine isometry x -> Ax + b with exact entries.
class Isometry {
 public:
  Isometry() {}
  Isometry(Mat a, Vec b) : a_(std::move(a)), b_(std::move(b)) {}
  static Isometry identity(int dim);

  const Mat& linear() const { return a_; }
  const Vec& translation() const { return b_; }
  int dim() const { return a_.rows(); }

  // (u*v)(x) = u(v(x))
  Isometry operator*(const Isometry& o) const;
  Isometry inverse() const;
  Vec apply(const Vec& x) const;
  bool operator==(const Isometry& o) const;
  bool operator!=(const Isometry& o) const { return !(*this == o); }
  bool is_identity() const;

  static int key_cmp(const Isometry& a, const Isometry& b);

 private:
  Mat a_;
  Vec b_;
};

struct IsometryLess {
  bool operator()(const Isometry& a, const Isometry& b) const {
    return Isometry::key_cmp(a, b) < 0;
  }
};

struct AffineSubspace {
  bool empty = true;
  Vec point;
  std::vector<Vec> directions;
  int dimension() const { return empty ? -1 : (int)directions.size(); }
};

struct IsometryParts {
  bool elliptic = true;
  AffineSubspace fix;      // empty iff hyperbolic
  AffineSubspace min_set;  // equals fix when elliptic
  AffineSubspace mov;      // {u(x) - x}; linear subspace iff elliptic
  Vec translation;         // action on min_set; zero iff elliptic
  // Length over the full orthogonal/Euclidean reflection group.  For
  // elliptic elements this equals the length over any reflection subgroup
  // containing u, but hyperbolic elements of an affine Coxeter group can
  // be strictly longer there (see reflection_length in ncp.hpp).
  int euclidean_length = 0;
};

IsometryParts decompose(const Isometry& u);

struct Wall {
  Vec root;
  Scalar offset;  // chamber side is <root, x> >= offset
};

class CoxeterSystem;
using SystemPtr = std::shared_ptr<const CoxeterSystem>;

class CoxeterSystem : public std::enable_shared_from_this<CoxeterSystem> {
 public:
  // Type names: "A3", "B4", "D5", "E6".."E8", "F4", "G2", "H3", "H4",
  // "affine A2" / "affA2" / "affine C2" ..., "S4" (symmetric group on 4
  // letters acting by permutation of coordinates).
  static SystemPtr from_name(const std::string& name);
  // m(s,t) entries with 0 standing for infinity.
  static SystemPtr from_matrix(const std::vector<std::vector<int>>& m,
                               const std::string& display_name = "");

  int rank() const { return rank_; }
  int dim() const { return dim_; }
  SystemKind kind() const { return kind_; }
  const std::string& classification() const { return classification_; }
  const std::string& name() const { return name_; }
  int m(int i, int j) const { return matrix_[i][j]; }  // 0 = infinity
  const std::vector<std::vector<int>>& coxeter_matrix() const {
    return matrix_;
  }
  long field_order() const { return field_order_; }
  const FieldPtr& field() const { return field_; }
  bool crystallographic() const { return crystallographic_; }

  const Mat& gram() const { return gram_; }
  Scalar form(const Vec& u, const Vec& v) const { return gram_dot(gram_, u, v); }

  const Isometry& generator(int i) const { return gens_[i]; }
  Isometry identity() const { return Isometry::identity(dim_); }
  Isometry word(const std::vector<int>& letters) const;
  Isometry coxeter_element(const std::vector<int>& order) const;
  Isometry coxeter_element() const;

  // Walls of the fundamental chamber (spherical) or alcove (affine);
  // walls()[i] is fixed by generator(i).
  const std::vector<Wall>& walls() const { return walls_; }

  bool is_reflection(const Isometry& u) const;
  // Normal direction with first nonzero coordinate scaled to 1, and the
  // offset such that Fix = {x : <root,x> = offset} under the invariant form.
  std::pair<Vec, Scalar> reflection_root(const Isometry& u) const;
  std::string describe_reflection(const Isometry& u) const;

  bool permutation_representation() const { return perm_rep_; }
  // cycle notation for the permutation action, e.g. "(1 2 3)"
  std::string permutation_cycles(const Isometry& u) const;

 private:
  CoxeterSystem() {}
  void build_representation();
  void build_affine_representation();

  int rank_ = 0, dim_ = 0;
  SystemKind kind_ = SystemKind::Other;
  std::string classification_, name_;
  std::vector<std::vector<int>> matrix_;
  long field_order_ = 2;
  FieldPtr field_;
  bool crystallographic_ = false;
  bool perm_rep_ = false;
  Mat gram_;
  std::vector<Isometry> gens_;
  std::vector<Wall> walls_;
  mutable std::vector<Vec> coroot_cache_;
  mutable std::map<Isometry, int, IsometryLess> length_cache_;
  friend const std::vector<Vec>& coroot_translations(const SystemPtr& sys);
  friend int reflection_length(const SystemPtr& sys, const Isometry& u);
};

// Exact classification of a Coxeter matrix via minors of the cosine form.
SystemKind classify_cosine_form(const std::vector<std::vector<int>>& m);

}  // namespace ncpw
