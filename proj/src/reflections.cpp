#include "ncpw/reflections.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace ncpw {

namespace {

void require_geometric(const SystemPtr& sys) {
  if (sys->kind() == SystemKind::Other)
    throw std::invalid_argument(
        "operation requires a spherical or affine system");
}

std::vector<Reflection> sorted_records(const SystemPtr& sys,
                                       std::map<Isometry, int, IsometryLess>&&
                                           found) {
  std::vector<Reflection> out;
  out.reserve(found.size());
  for (auto& [iso, depth] : found) out.push_back(make_reflection(sys, iso, depth));
  std::sort(out.begin(), out.end(), [](const Reflection& a, const Reflection& b) {
    if (a.word_depth != b.word_depth) return a.word_depth < b.word_depth;
    return Isometry::key_cmp(a.isometry, b.isometry) < 0;
  });
  return out;
}

}  // namespace

Reflection make_reflection(const SystemPtr& sys, const Isometry& u, int depth) {
  Reflection r;
  r.isometry = u;
  auto [root, offset] = sys->reflection_root(u);
  r.root = std::move(root);
  r.offset = offset;
  r.word_depth = depth;
  r.descriptor = sys->describe_reflection(u);
  return r;
}

std::vector<Reflection> simple_reflections(const SystemPtr& sys) {
  std::vector<Reflection> out;
  for (int i = 0; i < sys->rank(); ++i)
    out.push_back(make_reflection(sys, sys->generator(i), 0));
  return out;
}

std::vector<std::pair<Isometry, int>> group_ball(const SystemPtr& sys,
                                                 int depth) {
  std::vector<std::pair<Isometry, int>> out;
  std::set<Isometry, IsometryLess> seen;
  out.emplace_back(sys->identity(), 0);
  seen.insert(out[0].first);
  size_t frontier_begin = 0;
  for (int d = 1; d <= depth; ++d) {
    size_t frontier_end = out.size();
    for (size_t k = frontier_begin; k < frontier_end; ++k) {
      for (int i = 0; i < sys->rank(); ++i) {
        Isometry next = out[k].first * sys->generator(i);
        if (seen.insert(next).second) out.emplace_back(std::move(next), d);
      }
    }
    if (out.size() == frontier_end) break;
    frontier_begin = frontier_end;
  }
  return out;
}

std::vector<Reflection> enumerate_reflections(const SystemPtr& sys, int depth) {
  std::map<Isometry, int, IsometryLess> found;
  for (auto& [u, d] : group_ball(sys, depth)) {
    Isometry uinv = u.inverse();
    for (int i = 0; i < sys->rank(); ++i) {
      Isometry r = u * sys->generator(i) * uinv;
      auto it = found.find(r);
      if (it == found.end()) found.emplace(std::move(r), d);
    }
  }
  return sorted_records(sys, std::move(found));
}

std::vector<Reflection> all_reflections(const SystemPtr& sys) {
  if (sys->kind() != SystemKind::Spherical)
    throw std::invalid_argument(
        "complete reflection enumeration needs a spherical system");
  int depth = 2;
  size_t ball = 0;
  while (true) {
    auto b = group_ball(sys, depth);
    if (b.size() == ball) break;
    ball = b.size();
    depth += 2;
  }
  auto out = enumerate_reflections(sys, depth);
  for (auto& r : out) r.word_depth = -1;
  return out;
}

namespace {

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const {
    return vec_key_cmp(a, b) < 0;
  }
};

struct MatKeyLess {
  bool operator()(const Mat& a, const Mat& b) const {
    return Mat::key_cmp(a, b) < 0;
  }
};

// Parallel families biject with the reflections of the finite linear
// quotient, which gives an exact target for the family count; -1 when the
// quotient is too large to enumerate.
long quotient_reflection_count(const SystemPtr& sys, size_t cap) {
  std::set<Mat, MatKeyLess> seen;
  std::vector<Mat> frontier{Mat::identity(sys->dim())};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const Mat& a : frontier)
      for (int i = 0; i < sys->rank(); ++i) {
        Mat b = sys->generator(i).linear() * a;
        if (seen.size() > cap) return -1;
        if (seen.insert(b).second) next.push_back(std::move(b));
      }
    frontier = std::move(next);
  }
  long n = 0;
  Mat id = Mat::identity(sys->dim());
  for (const Mat& a : seen)
    if ((a - id).rank() == 1) ++n;
  return n;
}

using FamilyMap = std::map<Vec, Vec, VecLess>;

// Primitive translation per family at one window depth.  Within a family
// the visible mirror offsets form a contiguous run of an arithmetic
// progression, so the smallest visible gap is the step; nullopt when some
// family has fewer than two mirrors or gaps that are not integer multiples
// of the smallest, i.e. the window is still missing mirrors.
std::optional<FamilyMap> coroot_pass(const SystemPtr& sys, int depth) {
  std::map<Vec, std::vector<std::pair<Scalar, Isometry>>, VecLess> fams;
  for (const Reflection& r : enumerate_reflections(sys, depth))
    fams[r.root].emplace_back(r.offset, r.isometry);
  FamilyMap out;
  for (auto& [root, mirrors] : fams) {
    if (mirrors.size() < 2) return std::nullopt;
    std::sort(mirrors.begin(), mirrors.end(),
              [](const auto& a, const auto& b) {
                return a.first.cmp(b.first) < 0;
              });
    size_t best = 0;
    for (size_t i = 1; i + 1 < mirrors.size(); ++i)
      if ((mirrors[i + 1].first - mirrors[i].first)
              .cmp(mirrors[best + 1].first - mirrors[best].first) < 0)
        best = i;
    Scalar gap = mirrors[best + 1].first - mirrors[best].first;
    for (size_t i = 0; i + 1 < mirrors.size(); ++i) {
      Scalar q = (mirrors[i + 1].first - mirrors[i].first) / gap;
      if (!q.is_rational() || q.rational_value().get_den() != 1)
        return std::nullopt;
    }
    out.emplace(
        root, (mirrors[best + 1].second * mirrors[best].second).translation());
  }
  return out;
}

bool same_families(const FamilyMap& a, const FamilyMap& b) {
  if (a.size() != b.size()) return false;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
    if (vec_key_cmp(ia->first, ib->first) != 0 ||
        vec_key_cmp(ia->second, ib->second) != 0)
      return false;
  return true;
}

}  // namespace

const std::vector<Vec>& coroot_translations(const SystemPtr& sys) {
  if (sys->kind() != SystemKind::Affine)
    throw std::invalid_argument("coroot translations need an affine system");
  if (!sys->coroot_cache_.empty()) return sys->coroot_cache_;

  long want = quotient_reflection_count(sys, 20000);
  std::optional<FamilyMap> prev;
  for (int depth = 3;; ++depth) {
    auto cur = coroot_pass(sys, depth);
    if (cur && prev && same_families(*prev, *cur) &&
        (want < 0 || (long)cur->size() == want)) {
      std::vector<Vec> out;
      out.reserve(cur->size());
      for (auto& [root, t] : *cur) out.push_back(t);
      sys->coroot_cache_ = std::move(out);
      return sys->coroot_cache_;
    }
    if (depth > 40)
      throw std::runtime_error("translation families did not stabilize");
    prev = std::move(cur);
  }
}

Isometry chamber_walk(const SystemPtr& sys, const Vec& p) {
  require_geometric(sys);
  Isometry g = sys->identity();
  Vec q = p;
  while (true) {
    int outside = -1;
    for (int i = 0; i < sys->rank(); ++i) {
      const Wall& w = sys->walls()[i];
      if ((sys->form(w.root, q) - w.offset).sign() < 0) {
        outside = i;
        break;
      }
    }
    if (outside < 0) return g;
    g = sys->generator(outside) * g;
    q = sys->generator(outside).apply(q);
  }
}

std::vector<int> touching_walls(const SystemPtr& sys, const Vec& q) {
  std::vector<int> out;
  for (int i = 0; i < sys->rank(); ++i) {
    const Wall& w = sys->walls()[i];
    Scalar v = sys->form(w.root, q) - w.offset;
    assert(v.sign() >= 0);
    if (v.is_zero()) out.push_back(i);
  }
  return out;
}

std::vector<Reflection> reflections_through_point(const SystemPtr& sys,
                                                  const Vec& p) {
  require_geometric(sys);
  Isometry g = chamber_walk(sys, p);
  Vec q = g.apply(p);
  std::vector<int> t = touching_walls(sys, q);

  // reflections of the standard parabolic generated by t, by conjugation
  // closure (the parabolic is finite: it stabilizes the point q)
  std::set<Isometry, IsometryLess> refl;
  std::vector<Isometry> queue;
  for (int i : t) {
    refl.insert(sys->generator(i));
    queue.push_back(sys->generator(i));
  }
  while (!queue.empty()) {
    Isometry r = queue.back();
    queue.pop_back();
    for (int i : t) {
      Isometry c = sys->generator(i) * r * sys->generator(i);
      if (refl.insert(c).second) queue.push_back(c);
    }
  }

  Isometry ginv = g.inverse();
  std::map<Isometry, int, IsometryLess> found;
  for (const Isometry& r : refl) found.emplace(ginv * r * g, -1);
  return sorted_records(sys, std::move(found));
}

std::vector<Reflection> reflections_containing_flat(
    const SystemPtr& sys, const Vec& point,
    const std::vector<Vec>& directions) {
  std::vector<Reflection> out;
  for (auto& r : reflections_through_point(sys, point)) {
    bool contains = true;
    for (const Vec& d : directions)
      if (!sys->form(r.root, d).is_zero()) {
        contains = false;
        break;
      }
    if (contains) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ncpw
