#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "ncpw/ncp.hpp"

namespace ncpw {

// Words are sequences of generator indices; a relation equates two of them.
struct Relation {
  std::vector<int> lhs, rhs;
};

struct GroupPresentation {
  std::vector<std::string> generators;  // stable symbol names
  // Short print names (a, b, c, ...) assigned to dual generators; empty when
  // the generator names are already short (standard presentations).
  std::vector<std::string> aliases;
  std::vector<Relation> relations;  // the defining set
  // One relation per non-base maximal chain, equating it to the base chain.
  // Implied by `relations`; emitted for downstream tools that dislike the
  // quadratic defining set.
  std::vector<Relation> reduced;
  std::string provenance;
  bool truncated = false;  // window cut an infinite presentation short

  const std::string& symbol(int g) const {
    return aliases.empty() ? generators[g] : aliases[g];
  }
};

// Generators S, one alternating relation st... = ts... of length m(s,t) per
// finite entry of the Coxeter matrix; infinite entries contribute nothing.
GroupPresentation standard_presentation(const SystemPtr& sys);

// Label sequences of the maximal chains of [1, w], bottom cover first; the
// left-to-right product of each word is the top element.
std::vector<std::vector<int>> maximal_chain_words(const IntervalPoset& p);

// Generators are the labels of the poset, one relation per pair of maximal
// chains of [1, w].  Windowed posets of affine systems give a truncation of
// the infinite dual presentation and are marked as such.
GroupPresentation dual_presentation(const IntervalPoset& p);

// Invariant factors of the abelianized group: torsion coefficients greater
// than one first, then one zero per free rank.
std::vector<mpz_class> abelianization_invariants(const GroupPresentation& p);

// One `gens:` line, `let:` lines mapping aliases to generator names, then a
// `rel:` line per relation and a `reduced:` line per reduced relation.
std::string presentation_text(const GroupPresentation& p);

}  // namespace ncpw
