#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncpw/axis.hpp"
#include "ncpw/reflections.hpp"

namespace ncpw {

// Absolute reflection length via the geometric decomposition.
int reflection_length(const SystemPtr& sys, const Isometry& u);

// u <= v in absolute order: l(u) + l(u^-1 v) = l(v).
bool is_below(const SystemPtr& sys, const Isometry& u, const Isometry& v);

struct WindowSpec {
  int depth = 3;
  bool has_axis_range = false;
  Scalar axis_lo, axis_hi;  // crossing-parameter range, used when set
};

struct Cover {
  int lo = -1, hi = -1;  // element indices
  int label = -1;        // index into labels()
};

// The interval [1, w] in absolute order, restricted to the elements a
// reflection window can reach.  Covers join any two elements a rank apart
// whose quotient is a reflection, so the label set can be larger than the
// window.  Spherical systems and elliptic tops are complete; affine windows
// are honest about what they contain.
class IntervalPoset {
 public:
  const SystemPtr& system() const { return sys_; }
  const Isometry& top() const { return elements_.back(); }
  int top_rank() const { return ranks_.back(); }
  int size() const { return (int)elements_.size(); }
  const std::vector<Isometry>& elements() const { return elements_; }
  const Isometry& element(int i) const { return elements_[i]; }
  int rank(int i) const { return ranks_[i]; }
  int index_of(const Isometry& u) const;
  const std::vector<Reflection>& window_reflections() const { return window_; }
  // reflections appearing on covers, sorted by isometry key
  const std::vector<Reflection>& labels() const { return labels_; }
  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<int>& ups(int i) const { return up_[i]; }
  const std::vector<int>& downs(int i) const { return down_[i]; }
  bool leq(int i, int j) const { return leq_[i][j]; }
  // label of the cover lo -> hi, -1 if not a cover
  int cover_label(int lo, int hi) const;
  bool complete() const { return complete_; }
  const std::string& window_description() const { return window_desc_; }
  std::vector<int> elements_of_rank(int k) const;
  bool element_elliptic(int i) const { return elliptic_[i]; }

 private:
  friend IntervalPoset build_poset_from_window(const SystemPtr&,
                                               const Isometry&,
                                               std::vector<Reflection>,
                                               const std::string&, bool);
  SystemPtr sys_;
  std::vector<Isometry> elements_;  // sorted by (rank, key); 1 first, w last
  std::vector<int> ranks_;
  std::vector<bool> elliptic_;
  std::vector<Reflection> window_;
  std::vector<Reflection> labels_;
  std::vector<Cover> covers_;
  std::map<std::pair<int, int>, int> cover_map_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<std::vector<bool>> leq_;
  std::map<Isometry, int, IsometryLess> index_;
  bool complete_ = false;
  std::string window_desc_;
};

IntervalPoset build_interval(const SystemPtr& sys, const Isometry& w,
                             const WindowSpec& window);

// Complete interval below an elliptic element, window-free: all of [1, v]
// lives in the finite pointwise stabilizer of Fix(v).
IntervalPoset complete_interval(const SystemPtr& sys, const Isometry& v);

struct LatticeCertificate {
  std::string verdict;  // "lattice" | "bowtie-found" | "window-inconclusive"
  bool definitive = false;
  // For bowtie-found: x1, x2 both < y1 and < y2 with no z between.
  std::vector<Isometry> witness;  // {x1, x2, y1, y2}
  std::array<int, 4> witness_index{-1, -1, -1, -1};  // poset indices or -1
  std::string detail;
  long pairs_scanned = 0;
  long unconfirmed_candidates = 0;
};

LatticeCertificate check_lattice(const IntervalPoset& p);

// Exhaustively verify a claimed bowtie against a complete principal ideal;
// used by tests as an independent re-check.
bool verify_bowtie(const SystemPtr& sys, const Isometry& x1, const Isometry& x2,
                   const Isometry& y1, const Isometry& y2);

}  // namespace ncpw
