#pragma once

// Brute-force baselines for the tests, deliberately independent of the
// production decomposition code: everything here is plain BFS over exact
// isometries.

#include <map>
#include <vector>

#include "ncpw/reflections.hpp"

namespace oracle {

// Distances from 1 in the Cayley graph on the given reflections, out to
// max_len steps.
inline std::map<ncpw::Isometry, int, ncpw::IsometryLess> reflection_distances(
    int dim, const std::vector<ncpw::Reflection>& refls, int max_len) {
  std::map<ncpw::Isometry, int, ncpw::IsometryLess> dist;
  std::vector<ncpw::Isometry> frontier = {ncpw::Isometry::identity(dim)};
  dist.emplace(frontier[0], 0);
  for (int d = 1; d <= max_len; ++d) {
    std::vector<ncpw::Isometry> next;
    for (const auto& f : frontier)
      for (const auto& r : refls) {
        ncpw::Isometry v = f * r.isometry;
        if (dist.emplace(v, d).second) next.push_back(std::move(v));
      }
    frontier = std::move(next);
  }
  return dist;
}

inline int bfs_reflection_length(
    const ncpw::Isometry& u,
    const std::map<ncpw::Isometry, int, ncpw::IsometryLess>& dist) {
  auto it = dist.find(u);
  return it == dist.end() ? -1 : it->second;
}

}  // namespace oracle
