#pragma once

#include <string>
#include <vector>

#include "ncpw/complex.hpp"
#include "ncpw/shelling.hpp"

namespace ncpw {

struct CellRef {
  int dim = -1;
  int index = -1;

  bool operator==(const CellRef& o) const {
    return dim == o.dim && index == o.index;
  }
  bool operator<(const CellRef& o) const {
    return dim != o.dim ? dim < o.dim : index < o.index;
  }
};

struct MorsePair {
  CellRef low, high;  // high is one dimension up, low a regular face of it
};

struct MorseMatching {
  std::vector<MorsePair> pairs;
  std::vector<std::string> notes;  // window artifacts and similar caveats
};

struct MatchingReport {
  bool well_formed = false;
  bool acyclic = false;
  bool has_target = false;
  bool complete_on_complement = false;  // critical cells all inside the target
  std::vector<CellRef> critical;
  std::vector<std::string> cycle_witness;  // descriptors, alternating low/high
  std::string detail;
};

std::vector<CellRef> critical_cells(const CellComplex& k,
                                    const MorseMatching& m);

// Well-formedness (each cell in at most one pair), acyclicity of the
// modified Hasse digraph (with a cycle witness when violated), and, when
// a target subcomplex is given, whether every critical cell lies in it.
// A pair whose low cell is not a regular codimension-one face of its
// high cell is rejected outright.
MatchingReport verify_matching(const CellComplex& k, const MorseMatching& m,
                               const CellComplex* target = nullptr);

// The explicit matching on the windowed affine A1 complex: the edge at
// mirror offset j is pushed into the 2-cell toward the base alcove for
// j >= 2, away from it for j <= -1, and [w] into the 2-cell over the
// alcove walls; offsets 0 and 1 stay critical. Missing partners at the
// window edge are reported in notes and their edges left critical.
MorseMatching affine_a1_matching(const CellComplex& k);

// Best-effort acyclic matching of the cells outside `avoid`, scanning
// cells smallest-first and pairing each with its smallest admissible
// coface; a coface extending the cell's flag by an appended factor is
// preferred, ranked through order_hint when given. Each tentative pair
// is kept only if the layer stays acyclic.
MorseMatching greedy_matching(const CellComplex& k,
                              const CellComplex* avoid = nullptr,
                              const LabelOrder* order_hint = nullptr);

// The Morse complex of a verified acyclic matching: critical cells with
// boundary given by signed gradient path counts. Homology is preserved.
CellComplex morse_reduce(const CellComplex& k, const MorseMatching& m);

}  // namespace ncpw
