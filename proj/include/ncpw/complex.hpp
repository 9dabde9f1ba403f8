#pragma once

#include <string>
#include <vector>

#include "ncpw/coxeter.hpp"
#include "ncpw/ncp.hpp"
#include "ncpw/snf.hpp"

namespace ncpw {

// One cell [x1|...|xd] of the interval complex: a tuple of interval
// elements whose product is length-additive, each factor of length >= 1.
// Stored through the flag of partial products u_i = x1...xi; the vertex
// is the empty tuple. Both vectors hold poset element indices.
struct Cell {
  std::vector<int> factors;
  std::vector<int> flag;
  std::string descriptor;

  int dim() const { return (int)flag.size(); }
  int product() const { return flag.empty() ? 0 : flag.back(); }
};

class CellComplex {
 public:
  const IntervalPoset& poset() const { return poset_; }
  int dim() const { return (int)cells_.size() - 1; }
  int cell_count(int d) const {
    return d < 0 || d > dim() ? 0 : (int)cells_[d].size();
  }
  const std::vector<Cell>& cells(int d) const { return cells_[d]; }

  // Matrix of the boundary map C_d -> C_{d-1}: cell_count(d-1) rows,
  // cell_count(d) columns. Defined for 1 <= d <= dim().
  const ZMat& boundary(int d) const { return boundary_[d]; }

  // Index of the cell with the given factor tuple, -1 if absent.
  int cell_index(int d, const std::vector<int>& factors) const;

  long euler_characteristic() const;
  bool truncated() const { return truncated_; }
  const std::string& window_description() const {
    return poset_.window_description();
  }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  friend CellComplex build_interval_complex(const IntervalPoset&, int);
  friend CellComplex build_salvetti_subcomplex(const SystemPtr&,
                                               const Isometry&,
                                               const CellComplex&);
  friend CellComplex morse_reduce(const CellComplex&, const struct MorseMatching&);
  IntervalPoset poset_;
  std::vector<std::vector<Cell>> cells_;
  std::vector<ZMat> boundary_;
  bool truncated_ = false;
  std::vector<std::string> notes_;
};

// All length-additive factorizations of the poset's elements into poset
// elements, up to dimension max_dim (the full rank if max_dim < 0, and
// clamped to it with a note otherwise). Codimension-one faces drop the
// first factor, merge an adjacent pair, or drop the last factor, with
// bar-construction signs +1, (-1)^i, (-1)^d.
CellComplex build_interval_complex(const IntervalPoset& p, int max_dim = -1);

struct SphericalSubset {
  std::vector<int> generators;  // sorted simple generator indices
  std::string type;             // "A2", "A1 x A1", ..., "1" for the empty set
  Isometry coxeter;             // product of the subset in word order
};

// Subsets T of the simple generators whose restricted cosine form is
// positive definite, each with the product of T taken in the order the
// generators appear in word_order (ascending index order if empty).
std::vector<SphericalSubset> spherical_subsets(
    const SystemPtr& sys, const std::vector<int>& word_order = {});

// The union of the interval complexes of the spherical parabolic
// subgroups: cells whose factors all lie in W_T with product below the
// subword Coxeter element w_T, for some census subset T. The word of w
// is recovered by searching generator orders; a census subset whose
// abstract interval complex does not match its embedded image is
// reported in notes().
CellComplex build_salvetti_subcomplex(const SystemPtr& sys, const Isometry& w,
                                      const CellComplex& k);

struct HomologyGroup {
  long free_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1, divisibility order

  bool operator==(const HomologyGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
};

// Integer homology in each dimension 0..dim(), by Smith normal form of
// the boundary matrices.
std::vector<HomologyGroup> homology(const CellComplex& k);

std::string homology_text(const std::vector<HomologyGroup>& h);

}  // namespace ncpw
