#include "ncpw/axis.hpp"

#include <stdexcept>

namespace ncpw {

Axis compute_axis(const SystemPtr& sys, const Isometry& w) {
  if (sys->kind() != SystemKind::Affine)
    throw std::invalid_argument("axis requires an affine system");
  auto parts = decompose(w);
  if (parts.elliptic)
    throw std::invalid_argument("axis requires a hyperbolic element");
  if (parts.min_set.dimension() != 1)
    throw std::invalid_argument("min set is not a line");
  return Axis{w, parts.min_set.point, parts.translation};
}

bool crosses_axis(const SystemPtr& sys, const Axis& axis, const Reflection& r) {
  return !sys->form(r.root, axis.dir).is_zero();
}

Scalar axis_crossing(const SystemPtr& sys, const Axis& axis,
                     const Reflection& r) {
  Scalar denom = sys->form(r.root, axis.dir);
  return (r.offset - sys->form(r.root, axis.p0)) / denom;
}

}  // namespace ncpw
