#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncpw/axis.hpp"
#include "ncpw/ncp.hpp"

namespace ncpw {

// Traversal data for the axis of a Coxeter element: a generic base point
// (on no windowed mirror), the windowed reflections split into vertical
// (crossing the axis, with exact crossing parameters relative to the base
// point) and horizontal (mirror parallel to the axis), and the tilt vector
// used to break ties.
struct AxisData {
  Axis axis;
  Vec base_point;
  std::vector<std::pair<Reflection, Scalar>> vertical;
  std::vector<Reflection> horizontal;
  Vec tilt;
};

// The base point search walks a deterministic rational sequence along the
// axis starting at `seed` eighths; the default tilt is the first generic
// power vector (1, m, m^2, ...).  A user tilt is validated, not trusted.
AxisData build_axis_data(const SystemPtr& sys, const Isometry& w,
                         const std::vector<Reflection>& window, int seed = 0,
                         const std::optional<Vec>& tilt = std::nullopt);

// Total order from traversing the axis in the direction of motion: vertical
// reflections ahead of the base point by increasing crossing parameter, the
// horizontal block (ordered by the tilted crossing), then vertical
// reflections behind the base point.  Throws when two reflections stay tied
// under the tilt, naming the pair.
struct AxialOrder {
  std::vector<Reflection> ordered;
  int position(const Isometry& r) const;  // -1 when absent
};

AxialOrder axial_order(const SystemPtr& sys, const AxisData& axis);

// A total order on the labels of an interval poset.  sequence lists label
// indices smallest-first; rank_of inverts it.
struct LabelOrder {
  std::vector<int> sequence;
  std::vector<int> rank_of;
};

LabelOrder label_order_from_axial(const IntervalPoset& p,
                                  const AxialOrder& ord);
LabelOrder label_order_lex(const IntervalPoset& p);
LabelOrder label_order_explicit(const IntervalPoset& p,
                                const std::vector<int>& sequence);

struct ELViolation {
  int x = 0;
  int y = 0;
  std::string reason;  // no-increasing-chain | multiple-increasing-chains |
                       // increasing-not-lex-first
  std::vector<std::vector<int>> chains;  // witness label sequences
};

struct ELCertificate {
  std::string verdict;  // "shellable" | "violated"
  std::vector<ELViolation> violations;
  long intervals_scanned = 0;
};

// Exhaustive scan of every interval [x, y]: the verdict is "shellable" iff
// each interval has exactly one maximal chain with strictly increasing
// labels and that chain is lexicographically first among all its maximal
// chains.
ELCertificate check_el_shellability(const IntervalPoset& p,
                                    const LabelOrder& ord);

// Chamber data for a hyperbolic u below w: the arrangement of windowed
// mirrors below u, the chamber containing a generic axis point, its walls
// in traversal order (ahead-verticals, horizontal block, behind-verticals),
// and which horizontal block orders make the wall product equal u.
struct Lemma321Report {
  Isometry u;
  int length = 0;
  Vec point;
  std::vector<Reflection> walls;
  int horizontal_begin = 0;
  int horizontal_end = 0;
  bool wall_count_ok = false;
  std::vector<std::vector<int>> valid_horizontal_orders;  // wall indices
  bool product_ok = false;
  std::string window_desc;
};

Lemma321Report verify_lemma_321(const SystemPtr& sys, const Isometry& w,
                                const Isometry& u, int window_depth,
                                int seed = 0);

}  // namespace ncpw
