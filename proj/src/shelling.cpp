#include "ncpw/shelling.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ncpw {

namespace {

// Crossing parameter of a transversal mirror relative to base p: the t with
// <root, p + t*dir> = offset.
Scalar crossing_at(const SystemPtr& sys, const Reflection& r, const Vec& p,
                   const Vec& dir) {
  return (r.offset - sys->form(r.root, p)) / sys->form(r.root, dir);
}

int cmp_pair(const Scalar& a1, const Scalar& a2, const Scalar& b1,
             const Scalar& b2) {
  int c = a1.cmp(b1);
  return c != 0 ? c : a2.cmp(b2);
}

// Empty when the tilt separates everything; otherwise a message naming a
// tied pair (or an uncrossed horizontal mirror).
std::string tilt_defect(const SystemPtr& sys, const Axis& ax, const Vec& base,
                        const std::vector<std::pair<Reflection, Scalar>>& vert,
                        const std::vector<Reflection>& horiz, const Vec& t) {
  for (const auto& r : horiz)
    if (sys->form(r.root, t).is_zero())
      return "tilt not generic: " + r.descriptor + " is never crossed";
  for (size_t i = 0; i < horiz.size(); ++i)
    for (size_t j = i + 1; j < horiz.size(); ++j) {
      Scalar ci = horiz[i].offset - sys->form(horiz[i].root, base);
      Scalar cj = horiz[j].offset - sys->form(horiz[j].root, base);
      Scalar hi = sys->form(horiz[i].root, t);
      Scalar hj = sys->form(horiz[j].root, t);
      if ((ci * hj - cj * hi).is_zero())
        return "tilt not generic: " + horiz[i].descriptor + " and " +
               horiz[j].descriptor + " remain tied";
    }
  for (size_t i = 0; i < vert.size(); ++i)
    for (size_t j = i + 1; j < vert.size(); ++j) {
      if (vert[i].second.cmp(vert[j].second) != 0) continue;
      Scalar vi = sys->form(vert[i].first.root, ax.dir);
      Scalar vj = sys->form(vert[j].first.root, ax.dir);
      Scalar hi = sys->form(vert[i].first.root, t);
      Scalar hj = sys->form(vert[j].first.root, t);
      if ((hi * vj - hj * vi).is_zero())
        return "tilt not generic: " + vert[i].first.descriptor + " and " +
               vert[j].first.descriptor + " remain tied";
    }
  return "";
}

}  // namespace

AxisData build_axis_data(const SystemPtr& sys, const Isometry& w,
                         const std::vector<Reflection>& window, int seed,
                         const std::optional<Vec>& tilt) {
  AxisData out;
  out.axis = compute_axis(sys, w);
  std::vector<Reflection> vert, horiz;
  for (const auto& r : window) {
    if (sys->form(r.root, out.axis.dir).is_zero()) {
      if ((sys->form(r.root, out.axis.p0) - r.offset).is_zero())
        throw std::runtime_error("axis lies inside the mirror of " +
                                 r.descriptor);
      horiz.push_back(r);
    } else {
      vert.push_back(r);
    }
  }

  std::vector<Scalar> crossings;
  for (const auto& r : vert)
    crossings.push_back(crossing_at(sys, r, out.axis.p0, out.axis.dir));
  Scalar s = Scalar::zero();
  for (int j = 0;; ++j) {
    long num = seed + (j % 2 == 0 ? j / 2 : -(j / 2 + 1));
    s = Scalar(Rational(2 * num + 1, 16));
    bool hit = false;
    for (const auto& t : crossings) hit = hit || t.cmp(s) == 0;
    if (!hit) break;
  }
  out.base_point = vec_add(out.axis.p0, vec_scale(out.axis.dir, s));

  for (size_t i = 0; i < vert.size(); ++i)
    out.vertical.push_back({vert[i], crossings[i] - s});
  std::sort(out.vertical.begin(), out.vertical.end(),
            [](const auto& a, const auto& b) {
              int c = a.second.cmp(b.second);
              if (c != 0) return c < 0;
              return Isometry::key_cmp(a.first.isometry, b.first.isometry) < 0;
            });
  out.horizontal = std::move(horiz);
  std::sort(out.horizontal.begin(), out.horizontal.end(),
            [](const Reflection& a, const Reflection& b) {
              return Isometry::key_cmp(a.isometry, b.isometry) < 0;
            });

  if (tilt) {
    if ((int)tilt->size() != w.dim())
      throw std::invalid_argument("tilt dimension mismatch");
    std::string defect = tilt_defect(sys, out.axis, out.base_point,
                                     out.vertical, out.horizontal, *tilt);
    if (!defect.empty()) throw std::invalid_argument(defect);
    out.tilt = *tilt;
    return out;
  }
  for (long m = 1;; ++m) {
    Vec t(w.dim(), Scalar::one());
    Scalar pw = Scalar::one();
    for (int i = 1; i < w.dim(); ++i) {
      pw = pw * Scalar(m);
      t[i] = pw;
    }
    if (tilt_defect(sys, out.axis, out.base_point, out.vertical,
                    out.horizontal, t)
            .empty()) {
      out.tilt = std::move(t);
      return out;
    }
  }
}

int AxialOrder::position(const Isometry& r) const {
  for (size_t i = 0; i < ordered.size(); ++i)
    if (ordered[i].isometry == r) return (int)i;
  return -1;
}

AxialOrder axial_order(const SystemPtr& sys, const AxisData& axis) {
  struct Keyed {
    const Reflection* r;
    Scalar k1, k2;
  };
  auto sort_block = [](std::vector<Keyed>& block) {
    std::sort(block.begin(), block.end(), [](const Keyed& a, const Keyed& b) {
      int c = cmp_pair(a.k1, a.k2, b.k1, b.k2);
      if (c != 0) return c < 0;
      return Isometry::key_cmp(a.r->isometry, b.r->isometry) < 0;
    });
    for (size_t i = 0; i + 1 < block.size(); ++i)
      if (cmp_pair(block[i].k1, block[i].k2, block[i + 1].k1,
                   block[i + 1].k2) == 0)
        throw std::invalid_argument("tilt not generic: " +
                                    block[i].r->descriptor + " and " +
                                    block[i + 1].r->descriptor +
                                    " remain tied");
  };

  std::vector<Keyed> ahead, behind, flat;
  for (const auto& [r, t] : axis.vertical) {
    Scalar v = sys->form(r.root, axis.axis.dir);
    Scalar h = sys->form(r.root, axis.tilt);
    Keyed k{&r, t, -(t * h / v)};
    (t.sign() > 0 ? ahead : behind).push_back(std::move(k));
  }
  for (const auto& r : axis.horizontal) {
    Scalar c = r.offset - sys->form(r.root, axis.base_point);
    Scalar h = sys->form(r.root, axis.tilt);
    if (h.is_zero())
      throw std::invalid_argument("tilt not generic: " + r.descriptor +
                                  " is never crossed");
    Scalar q = c / h;
    flat.push_back({&r, Scalar(q.sign() > 0 ? 0L : 1L), q});
  }
  sort_block(ahead);
  sort_block(flat);
  sort_block(behind);

  AxialOrder out;
  for (const auto& k : ahead) out.ordered.push_back(*k.r);
  for (const auto& k : flat) out.ordered.push_back(*k.r);
  for (const auto& k : behind) out.ordered.push_back(*k.r);
  return out;
}

LabelOrder label_order_from_axial(const IntervalPoset& p,
                                  const AxialOrder& ord) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < (int)p.labels().size(); ++i) {
    int q = ord.position(p.labels()[i].isometry);
    if (q < 0)
      throw std::invalid_argument("label " + p.labels()[i].descriptor +
                                  " is not in the order");
    pos.push_back({q, i});
  }
  std::sort(pos.begin(), pos.end());
  LabelOrder out;
  out.rank_of.assign(pos.size(), 0);
  for (int k = 0; k < (int)pos.size(); ++k) {
    out.sequence.push_back(pos[k].second);
    out.rank_of[pos[k].second] = k;
  }
  return out;
}

LabelOrder label_order_lex(const IntervalPoset& p) {
  std::vector<int> seq(p.labels().size());
  for (int i = 0; i < (int)seq.size(); ++i) seq[i] = i;
  std::sort(seq.begin(), seq.end(), [&](int a, int b) {
    return Isometry::key_cmp(p.labels()[a].isometry, p.labels()[b].isometry) <
           0;
  });
  return label_order_explicit(p, seq);
}

LabelOrder label_order_explicit(const IntervalPoset& p,
                                const std::vector<int>& sequence) {
  int L = (int)p.labels().size();
  if ((int)sequence.size() != L)
    throw std::invalid_argument("order must list every label exactly once");
  LabelOrder out;
  out.sequence = sequence;
  out.rank_of.assign(L, -1);
  for (int k = 0; k < L; ++k) {
    int lab = sequence[k];
    if (lab < 0 || lab >= L || out.rank_of[lab] != -1)
      throw std::invalid_argument("order must list every label exactly once");
    out.rank_of[lab] = k;
  }
  return out;
}

ELCertificate check_el_shellability(const IntervalPoset& p,
                                    const LabelOrder& ord) {
  if (ord.rank_of.size() != p.labels().size())
    throw std::invalid_argument("order does not cover the poset labels");
  ELCertificate out;
  int n = p.size();
  for (int y = 0; y < n; ++y) {
    // capped count of strictly increasing chains u -> y with labels above
    // minpos; cap 2 keeps the sums exact for the 0/1/many verdict
    std::map<std::pair<int, int>, int> memo;
    auto incr = [&](auto&& self, int u, int minpos) -> int {
      if (u == y) return 1;
      auto key = std::make_pair(u, minpos);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      int c = 0;
      for (int v : p.ups(u)) {
        if (!p.leq(v, y)) continue;
        int q = ord.rank_of[p.cover_label(u, v)];
        if (q > minpos) c += self(self, v, q);
        if (c >= 2) {
          c = 2;
          break;
        }
      }
      memo[key] = c;
      return c;
    };
    auto collect_increasing = [&](int x, size_t limit) {
      std::vector<std::vector<int>> chains;
      std::vector<int> cur;
      auto dfs = [&](auto&& self, int u, int minpos) -> bool {
        if (u == y) {
          chains.push_back(cur);
          return chains.size() >= limit;
        }
        for (int v : p.ups(u)) {
          if (!p.leq(v, y)) continue;
          int lab = p.cover_label(u, v);
          if (ord.rank_of[lab] <= minpos) continue;
          cur.push_back(lab);
          bool done = self(self, v, ord.rank_of[lab]);
          cur.pop_back();
          if (done) return true;
        }
        return false;
      };
      dfs(dfs, x, -1);
      return chains;
    };
    auto lex_first = [&](int x) {
      std::vector<int> labs;
      int u = x;
      while (u != y) {
        int best_v = -1, best_pos = 0;
        for (int v : p.ups(u)) {
          if (!p.leq(v, y)) continue;
          int q = ord.rank_of[p.cover_label(u, v)];
          if (best_v < 0 || q < best_pos) {
            best_v = v;
            best_pos = q;
          }
        }
        labs.push_back(p.cover_label(u, best_v));
        u = best_v;
      }
      return labs;
    };

    for (int x = 0; x < n; ++x) {
      if (x == y || !p.leq(x, y)) continue;
      ++out.intervals_scanned;
      int c = incr(incr, x, -1);
      if (c == 0) {
        out.violations.push_back(
            {x, y, "no-increasing-chain", {lex_first(x)}});
      } else if (c >= 2) {
        out.violations.push_back(
            {x, y, "multiple-increasing-chains", collect_increasing(x, 2)});
      } else {
        auto inc = collect_increasing(x, 1);
        auto lf = lex_first(x);
        if (inc[0] != lf)
          out.violations.push_back(
              {x, y, "increasing-not-lex-first", {inc[0], lf}});
      }
    }
  }
  std::sort(out.violations.begin(), out.violations.end(),
            [](const ELViolation& a, const ELViolation& b) {
              return std::make_pair(a.x, a.y) < std::make_pair(b.x, b.y);
            });
  out.verdict = out.violations.empty() ? "shellable" : "violated";
  return out;
}

namespace {

// Strict inequality a.x + b > 0.
struct Ineq {
  Vec a;
  Scalar b;
};

int ineq_cmp(const Ineq& l, const Ineq& r) {
  int c = vec_key_cmp(l.a, r.a);
  return c != 0 ? c : Scalar::key_cmp(l.b, r.b);
}

// Scale so the first nonzero coefficient has absolute value 1 (positive
// scaling keeps the inequality equivalent).
Ineq normalize_ineq(Ineq q) {
  for (const auto& c : q.a) {
    if (c.is_zero()) continue;
    Scalar s = c.sign() > 0 ? c : -c;
    for (auto& x : q.a) x = x / s;
    q.b = q.b / s;
    break;
  }
  return q;
}

// Fourier-Motzkin feasibility of a system of strict inequalities.
bool fm_feasible(std::vector<Ineq> sys, int nvars) {
  auto push_unique = [](std::vector<Ineq>& dst, Ineq q) {
    q = normalize_ineq(std::move(q));
    for (const auto& e : dst)
      if (ineq_cmp(e, q) == 0) return;
    dst.push_back(std::move(q));
  };
  for (int var = 0; var < nvars; ++var) {
    std::vector<Ineq> lows, highs, rest;
    for (auto& q : sys) {
      int sg = q.a[var].sign();
      if (sg > 0)
        lows.push_back(std::move(q));
      else if (sg < 0)
        highs.push_back(std::move(q));
      else
        rest.push_back(std::move(q));
    }
    for (const auto& lo : lows)
      for (const auto& hi : highs) {
        Scalar cl = -hi.a[var];
        Scalar ch = lo.a[var];
        Ineq q;
        q.a = vec_add(vec_scale(lo.a, cl), vec_scale(hi.a, ch));
        q.b = cl * lo.b + ch * hi.b;
        push_unique(rest, std::move(q));
      }
    sys = std::move(rest);
  }
  for (const auto& q : sys)
    if (q.b.sign() <= 0) return false;
  return true;
}

// The linear functional x -> <root, x> in coordinates.
Vec form_functional(const SystemPtr& sys, const Vec& root) {
  int d = (int)root.size();
  Vec a(d, Scalar::zero());
  for (int i = 0; i < d; ++i) {
    Vec e(d, Scalar::zero());
    e[i] = Scalar::one();
    a[i] = sys->form(root, e);
  }
  return a;
}

// Walls of the chamber of the arrangement {mirrors of rs} containing p: the
// mirrors whose removal changes the chamber, i.e. those that still touch it.
std::vector<int> chamber_walls(const SystemPtr& sys,
                               const std::vector<Reflection>& rs,
                               const Vec& p) {
  int d = (int)p.size();
  std::vector<Vec> funcs;
  std::vector<int> signs;
  for (const auto& r : rs) {
    funcs.push_back(form_functional(sys, r.root));
    Scalar val = sys->form(r.root, p) - r.offset;
    int sg = val.sign();
    if (sg == 0)
      throw std::invalid_argument("base point lies on the mirror of " +
                                  r.descriptor);
    signs.push_back(sg);
  }
  std::vector<int> walls;
  for (int i = 0; i < (int)rs.size(); ++i) {
    // substitute the equality <root_i, x> = offset_i into the others
    int k = -1;
    for (int c = 0; c < d; ++c)
      if (!funcs[i][c].is_zero()) {
        k = c;
        break;
      }
    Scalar piv = funcs[i][k];
    std::vector<Ineq> constraints;
    for (int j = 0; j < (int)rs.size(); ++j) {
      if (j == i) continue;
      Ineq q;
      q.a = vec_scale(funcs[j], Scalar(signs[j]));
      q.b = Scalar(-signs[j]) * rs[j].offset;
      Scalar coef = q.a[k] / piv;
      q.a = vec_sub(q.a, vec_scale(funcs[i], coef));
      q.b = q.b + coef * rs[i].offset;
      constraints.push_back(std::move(q));
    }
    if (fm_feasible(std::move(constraints), d)) walls.push_back(i);
  }
  return walls;
}

std::string mirror_key(const Reflection& r) {
  std::ostringstream os;
  for (const auto& c : r.root) os << c.str() << ",";
  os << ";" << r.offset.str();
  return os.str();
}

}  // namespace

Lemma321Report verify_lemma_321(const SystemPtr& sys, const Isometry& w,
                                const Isometry& u, int window_depth,
                                int seed) {
  auto pu = decompose(u);
  if (pu.elliptic)
    throw std::invalid_argument("u must be hyperbolic");
  if (!is_below(sys, u, w))
    throw std::invalid_argument("u is not below w in the absolute order");
  Axis ax = compute_axis(sys, w);

  auto below_u = [&](int depth) {
    std::vector<Reflection> out;
    for (const auto& r : enumerate_reflections(sys, depth))
      if (is_below(sys, r.isometry, u)) out.push_back(r);
    return out;
  };
  std::vector<Reflection> au = below_u(window_depth);
  std::vector<Reflection> au_next = below_u(window_depth + 1);
  if (au.empty())
    throw std::runtime_error(
        "window too small: no mirrors below u among the windowed "
        "reflections");

  // generic p on the axis, clear of every mirror of the wider arrangement
  std::vector<Scalar> crossings;
  for (const auto& r : au_next) {
    Scalar v = sys->form(r.root, ax.dir);
    if (v.is_zero()) {
      if ((sys->form(r.root, ax.p0) - r.offset).is_zero())
        throw std::runtime_error("axis lies inside the mirror of " +
                                 r.descriptor);
      continue;
    }
    crossings.push_back(crossing_at(sys, r, ax.p0, ax.dir));
  }
  Scalar s = Scalar::zero();
  for (int j = 0;; ++j) {
    long num = seed + (j % 2 == 0 ? j / 2 : -(j / 2 + 1));
    s = Scalar(Rational(2 * num + 1, 16));
    bool hit = false;
    for (const auto& t : crossings) hit = hit || t.cmp(s) == 0;
    if (!hit) break;
  }
  Vec p = vec_add(ax.p0, vec_scale(ax.dir, s));

  std::vector<int> wall_idx = chamber_walls(sys, au, p);
  std::vector<int> wall_idx_next = chamber_walls(sys, au_next, p);
  {
    std::vector<std::string> a, b;
    for (int i : wall_idx) a.push_back(mirror_key(au[i]));
    for (int i : wall_idx_next) b.push_back(mirror_key(au_next[i]));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      throw std::runtime_error(
          "window too small: the chamber walls change under a larger "
          "window");
  }

  // irreducibility of the wall diagram: walls are joined unless they
  // commute
  {
    int m = (int)wall_idx.size();
    std::vector<int> comp(m, -1);
    std::vector<int> stack;
    int ncomp = 0;
    for (int i = 0; i < m; ++i) {
      if (comp[i] != -1) continue;
      comp[i] = ncomp;
      stack.push_back(i);
      while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b = 0; b < m; ++b) {
          if (comp[b] != -1) continue;
          Isometry q = au[wall_idx[a]].isometry * au[wall_idx[b]].isometry;
          if (q * q == Isometry::identity(w.dim())) continue;
          comp[b] = ncomp;
          stack.push_back(b);
        }
      }
      ++ncomp;
    }
    if (ncomp > 1)
      throw std::invalid_argument(
          "the reflection subgroup below u is not irreducible in this "
          "window");
  }

  Lemma321Report rep;
  rep.u = u;
  rep.length = reflection_length(sys, u);
  rep.point = p;
  {
    std::ostringstream os;
    os << "depth " << window_depth << " (walls stable under depth "
       << window_depth + 1 << ")";
    rep.window_desc = os.str();
  }

  std::vector<std::pair<Scalar, int>> above, below;
  std::vector<int> flat;
  for (int i : wall_idx) {
    Scalar v = sys->form(au[i].root, ax.dir);
    if (v.is_zero()) {
      flat.push_back(i);
      continue;
    }
    Scalar t = crossing_at(sys, au[i], p, ax.dir);
    (t.sign() > 0 ? above : below).push_back({t, i});
  }
  auto by_crossing = [&](const std::pair<Scalar, int>& a,
                         const std::pair<Scalar, int>& b) {
    int c = a.first.cmp(b.first);
    if (c != 0) return c < 0;
    return Isometry::key_cmp(au[a.second].isometry, au[b.second].isometry) < 0;
  };
  std::sort(above.begin(), above.end(), by_crossing);
  std::sort(below.begin(), below.end(), by_crossing);
  std::sort(flat.begin(), flat.end(), [&](int a, int b) {
    return Isometry::key_cmp(au[a].isometry, au[b].isometry) < 0;
  });

  // Verticals tied at one crossing point are not separated by the order
  // prescription, so each tied run is permutable, like the horizontal block.
  std::vector<std::pair<int, int>> blocks;
  auto push_side = [&](const std::vector<std::pair<Scalar, int>>& seq) {
    size_t i = 0;
    while (i < seq.size()) {
      size_t j = i + 1;
      while (j < seq.size() && seq[j].first.cmp(seq[i].first) == 0) ++j;
      int b = (int)rep.walls.size();
      for (size_t k = i; k < j; ++k) rep.walls.push_back(au[seq[k].second]);
      if (j - i >= 2) blocks.push_back({b, (int)rep.walls.size()});
      i = j;
    }
  };
  push_side(above);
  rep.horizontal_begin = (int)rep.walls.size();
  for (int i : flat) rep.walls.push_back(au[i]);
  rep.horizontal_end = (int)rep.walls.size();
  if (rep.horizontal_end - rep.horizontal_begin >= 2)
    blocks.push_back({rep.horizontal_begin, rep.horizontal_end});
  push_side(below);
  rep.wall_count_ok = (int)rep.walls.size() == rep.length;

  std::vector<int> arr(rep.walls.size());
  for (size_t i = 0; i < arr.size(); ++i) arr[i] = (int)i;
  auto try_arrangement = [&]() {
    Isometry prod = Isometry::identity(w.dim());
    for (int i : arr) prod = prod * rep.walls[i].isometry;
    if (prod != u) return;
    std::vector<int> hperm(arr.begin() + rep.horizontal_begin,
                           arr.begin() + rep.horizontal_end);
    if (std::find(rep.valid_horizontal_orders.begin(),
                  rep.valid_horizontal_orders.end(),
                  hperm) == rep.valid_horizontal_orders.end())
      rep.valid_horizontal_orders.push_back(std::move(hperm));
  };
  auto search = [&](auto&& self, size_t bi) -> void {
    if (bi == blocks.size()) {
      try_arrangement();
      return;
    }
    auto [b, e] = blocks[bi];
    std::sort(arr.begin() + b, arr.begin() + e);
    do {
      self(self, bi + 1);
    } while (std::next_permutation(arr.begin() + b, arr.begin() + e));
  };
  search(search, 0);
  rep.product_ok = !rep.valid_horizontal_orders.empty();
  return rep;
}

}  // namespace ncpw
