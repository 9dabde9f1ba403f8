#pragma once

#include <string>
#include <vector>

#include "ncpw/coxeter.hpp"

namespace ncpw {

struct Reflection {
  Isometry isometry;
  Vec root;       // first nonzero coordinate scaled to 1
  Scalar offset;  // Fix = {x : <root,x> = offset}
  int word_depth = -1;  // -1 when the enumeration was not windowed
  std::string descriptor;
};

Reflection make_reflection(const SystemPtr& sys, const Isometry& u, int depth);

std::vector<Reflection> simple_reflections(const SystemPtr& sys);

// All conjugates u s u^-1 with s simple and |u| <= depth, deduplicated by
// exact equality; word_depth is the smallest |u| that produced each one.
std::vector<Reflection> enumerate_reflections(const SystemPtr& sys, int depth);

// Full reflection set of a spherical system (grows the window until the
// group ball is exhausted).
std::vector<Reflection> all_reflections(const SystemPtr& sys);

// Elements of length <= depth with their lengths, BFS order.
std::vector<std::pair<Isometry, int>> group_ball(const SystemPtr& sys,
                                                 int depth);

// One primitive translation per parallel family of mirrors: the product of
// reflections in two adjacent mirrors of the family.  The integer span of
// these vectors is exactly the translation lattice of the group, and each
// vector is primitive in it.  Affine systems only; cached on the system.
const std::vector<Vec>& coroot_translations(const SystemPtr& sys);

// g with g(p) in the closed fundamental chamber (alcove).
Isometry chamber_walk(const SystemPtr& sys, const Vec& p);

// Wall indices met with equality at a point of the closed chamber.
std::vector<int> touching_walls(const SystemPtr& sys, const Vec& q);

// All reflections of W fixing p; complete (not windowed), via the point's
// finite standard-parabolic stabilizer.
std::vector<Reflection> reflections_through_point(const SystemPtr& sys,
                                                  const Vec& p);

// All reflections whose mirror contains point + span(directions).
std::vector<Reflection> reflections_containing_flat(
    const SystemPtr& sys, const Vec& point,
    const std::vector<Vec>& directions);

}  // namespace ncpw
