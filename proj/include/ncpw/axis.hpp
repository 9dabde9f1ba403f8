#pragma once

#include "ncpw/reflections.hpp"

namespace ncpw {

// Axis of a hyperbolic isometry: the line of minimally moved points,
// parametrized as p0 + t*dir with dir the translation along it.
struct Axis {
  Isometry w;
  Vec p0;
  Vec dir;
};

Axis compute_axis(const SystemPtr& sys, const Isometry& w);

// A mirror either crosses the axis transversally (vertical) or is parallel
// to it (horizontal).
bool crosses_axis(const SystemPtr& sys, const Axis& axis, const Reflection& r);

// Parameter t of the crossing point p0 + t*dir; requires crosses_axis.
Scalar axis_crossing(const SystemPtr& sys, const Axis& axis,
                     const Reflection& r);

}  // namespace ncpw
