#include "ncpw/morse.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace ncpw {

namespace {

// match_up[d][i] = paired (d+1)-cell of cell (d,i), match_down the mirror.
struct MatchState {
  std::vector<std::vector<int>> up, down;
  bool well_formed = true;
  std::string detail;
};

MatchState build_state(const CellComplex& k, const MorseMatching& m) {
  MatchState s;
  int top = k.dim();
  s.up.resize(top + 1);
  s.down.resize(top + 1);
  for (int d = 0; d <= top; ++d) {
    s.up[d].assign(k.cell_count(d), -1);
    s.down[d].assign(k.cell_count(d), -1);
  }

  for (const MorsePair& pr : m.pairs) {
    if (pr.low.dim < 0 || pr.high.dim != pr.low.dim + 1 || pr.high.dim > top ||
        pr.low.index < 0 || pr.low.index >= k.cell_count(pr.low.dim) ||
        pr.high.index < 0 || pr.high.index >= k.cell_count(pr.high.dim))
      throw std::invalid_argument("matching cites a cell outside the complex");
    const mpz_class& inc =
        k.boundary(pr.high.dim)[pr.low.index][pr.high.index];
    if (inc != 1 && inc != -1) {
      std::ostringstream os;
      os << "pair (" << k.cells(pr.low.dim)[pr.low.index].descriptor << ", "
         << k.cells(pr.high.dim)[pr.high.index].descriptor
         << "): low is not a regular codimension-one face of high";
      throw std::invalid_argument(os.str());
    }
    bool low_used = s.up[pr.low.dim][pr.low.index] >= 0 ||
                    s.down[pr.low.dim][pr.low.index] >= 0;
    bool high_used = s.up[pr.high.dim][pr.high.index] >= 0 ||
                     s.down[pr.high.dim][pr.high.index] >= 0;
    if (low_used || high_used) {
      s.well_formed = false;
      const Cell& c = low_used ? k.cells(pr.low.dim)[pr.low.index]
                               : k.cells(pr.high.dim)[pr.high.index];
      s.detail = "cell " + c.descriptor + " appears in more than one pair";
      continue;
    }
    s.up[pr.low.dim][pr.low.index] = pr.high.index;
    s.down[pr.high.dim][pr.high.index] = pr.low.index;
  }
  return s;
}

// Directed cycle among the d-cells of the modified Hasse digraph: up along
// the matching, down along every other face of the paired coface.
std::optional<std::vector<int>> layer_cycle(const CellComplex& k, int d,
                                            const std::vector<int>& up_d) {
  int n = k.cell_count(d);
  std::vector<int> color(n, 0);
  std::vector<int> path;
  std::optional<std::vector<int>> found;

  auto visit = [&](auto&& self, int v) -> void {
    if (found) return;
    color[v] = 1;
    path.push_back(v);
    int mu = up_d[v];
    if (mu >= 0) {
      const ZMat& b = k.boundary(d + 1);
      for (int r = 0; r < (int)b.size(); ++r) {
        if (r == v || b[r][mu] == 0) continue;
        if (color[r] == 1) {
          auto it = std::find(path.begin(), path.end(), r);
          found = std::vector<int>(it, path.end());
          return;
        }
        if (color[r] == 0) {
          self(self, r);
          if (found) return;
        }
      }
    }
    path.pop_back();
    color[v] = 2;
  };
  for (int v = 0; v < n && !found; ++v)
    if (color[v] == 0) visit(visit, v);
  return found;
}

bool in_subcomplex(const CellComplex& k, const CellComplex& sub, int d,
                   int i) {
  return sub.cell_index(d, k.cells(d)[i].factors) >= 0;
}

}  // namespace

std::vector<CellRef> critical_cells(const CellComplex& k,
                                    const MorseMatching& m) {
  MatchState s = build_state(k, m);
  std::vector<CellRef> out;
  for (int d = 0; d <= k.dim(); ++d)
    for (int i = 0; i < k.cell_count(d); ++i)
      if (s.up[d][i] < 0 && s.down[d][i] < 0) out.push_back({d, i});
  return out;
}

MatchingReport verify_matching(const CellComplex& k, const MorseMatching& m,
                               const CellComplex* target) {
  MatchState s = build_state(k, m);
  MatchingReport rep;
  rep.well_formed = s.well_formed;
  rep.detail = s.detail;

  for (int d = 0; d <= k.dim(); ++d)
    for (int i = 0; i < k.cell_count(d); ++i)
      if (s.up[d][i] < 0 && s.down[d][i] < 0) rep.critical.push_back({d, i});

  if (rep.well_formed) {
    rep.acyclic = true;
    for (int d = 0; d < k.dim() && rep.acyclic; ++d) {
      auto cyc = layer_cycle(k, d, s.up[d]);
      if (!cyc) continue;
      rep.acyclic = false;
      for (int v : *cyc) {
        rep.cycle_witness.push_back(k.cells(d)[v].descriptor);
        rep.cycle_witness.push_back(k.cells(d + 1)[s.up[d][v]].descriptor);
      }
      std::ostringstream os;
      os << "alternating cycle through " << rep.cycle_witness.size() / 2
         << " matched pairs in dimensions " << d << "/" << d + 1;
      rep.detail = os.str();
    }
  }

  if (target) {
    rep.has_target = true;
    rep.complete_on_complement = true;
    for (const CellRef& c : rep.critical)
      if (!in_subcomplex(k, *target, c.dim, c.index)) {
        rep.complete_on_complement = false;
        rep.detail = "critical cell " + k.cells(c.dim)[c.index].descriptor +
                     " lies outside the target subcomplex";
        break;
      }
  }
  return rep;
}

MorseMatching affine_a1_matching(const CellComplex& k) {
  const IntervalPoset& p = k.poset();
  if (p.system()->classification() != "affine A1")
    throw std::invalid_argument(
        "the explicit matching needs a windowed affine A1 complex");

  std::map<long, int> edge_of;  // mirror offset -> 1-cell index
  std::map<long, int> elem_of;  // mirror offset -> poset element index
  int w_edge = -1;
  for (int i = 0; i < k.cell_count(1); ++i) {
    int f = k.cells(1)[i].factors[0];
    if (p.rank(f) != 1) {
      w_edge = i;
      continue;
    }
    const Reflection& lab = p.labels()[p.cover_label(0, f)];
    Rational off = lab.offset.rational_value();
    if (off.get_den() != 1)
      throw std::logic_error("affine A1 mirror offsets should be integers");
    long j = off.get_num().get_si();
    edge_of[j] = i;
    elem_of[j] = f;
  }

  MorseMatching m;
  auto partner = [&](long lo, long hi) -> int {
    auto a = elem_of.find(lo), b = elem_of.find(hi);
    if (a == elem_of.end() || b == elem_of.end()) return -1;
    return k.cell_index(2, {a->second, b->second});
  };
  auto push = [&](int edge, long lo, long hi) {
    int two = partner(lo, hi);
    if (two >= 0) {
      m.pairs.push_back({{1, edge}, {2, two}});
    } else {
      m.notes.push_back("window artifact: " + k.cells(1)[edge].descriptor +
                        " has no 2-cell partner");
    }
  };

  for (auto [j, edge] : edge_of) {
    if (j == 0 || j == 1) continue;
    if (j >= 2)
      push(edge, j - 1, j);
    else
      push(edge, j, j + 1);
  }
  if (w_edge >= 0) push(w_edge, 0, 1);
  return m;
}

MorseMatching greedy_matching(const CellComplex& k, const CellComplex* avoid,
                              const LabelOrder* order_hint) {
  const IntervalPoset& p = k.poset();
  MatchState s = build_state(k, {});
  MorseMatching m;

  auto skipped = [&](int d, int i) {
    return avoid && in_subcomplex(k, *avoid, d, i);
  };
  auto appended_rank = [&](const Cell& lo, const Cell& hi) -> long {
    if (hi.flag.size() != lo.flag.size() + 1 ||
        !std::equal(lo.flag.begin(), lo.flag.end(), hi.flag.begin()))
      return -1;
    int f = hi.factors.back();
    if (p.rank(f) != 1) return 1L << 20;
    int li = p.cover_label(0, f);
    return order_hint ? order_hint->rank_of[li] : li;
  };

  for (int d = 0; d < k.dim(); ++d) {
    const ZMat& b = k.boundary(d + 1);
    for (int i = 0; i < k.cell_count(d); ++i) {
      if (s.up[d][i] >= 0 || s.down[d][i] >= 0 || skipped(d, i)) continue;
      std::vector<std::pair<std::pair<long, std::vector<int>>, int>> cands;
      for (int j = 0; j < k.cell_count(d + 1); ++j) {
        if (b[i][j] != 1 && b[i][j] != -1) continue;
        if (s.up[d + 1][j] >= 0 || s.down[d + 1][j] >= 0 || skipped(d + 1, j))
          continue;
        long r = appended_rank(k.cells(d)[i], k.cells(d + 1)[j]);
        long key = r < 0 ? (1L << 30) : r;
        cands.push_back({{key, k.cells(d + 1)[j].factors}, j});
      }
      std::sort(cands.begin(), cands.end());
      for (auto& [key, j] : cands) {
        s.up[d][i] = j;
        s.down[d + 1][j] = i;
        if (layer_cycle(k, d, s.up[d])) {
          s.up[d][i] = -1;
          s.down[d + 1][j] = -1;
          continue;
        }
        m.pairs.push_back({{d, i}, {d + 1, j}});
        break;
      }
    }
  }

  if (avoid) {
    long leftover = 0;
    for (int d = 0; d <= k.dim(); ++d)
      for (int i = 0; i < k.cell_count(d); ++i)
        if (s.up[d][i] < 0 && s.down[d][i] < 0 && !skipped(d, i)) ++leftover;
    if (leftover > 0) {
      std::ostringstream os;
      os << leftover << " critical cells remain outside the avoided subcomplex";
      m.notes.push_back(os.str());
    }
  }
  return m;
}

CellComplex morse_reduce(const CellComplex& k, const MorseMatching& m) {
  MatchingReport rep = verify_matching(k, m);
  if (!rep.well_formed || !rep.acyclic)
    throw std::invalid_argument("matching does not verify acyclic" +
                                (rep.detail.empty() ? "" : ": " + rep.detail));
  MatchState s = build_state(k, m);

  int top = k.dim();
  std::vector<std::vector<int>> crit(top + 1);   // new index -> ambient index
  std::vector<std::vector<int>> pos(top + 1);    // ambient index -> new index
  for (int d = 0; d <= top; ++d) {
    pos[d].assign(k.cell_count(d), -1);
    for (int i = 0; i < k.cell_count(d); ++i)
      if (s.up[d][i] < 0 && s.down[d][i] < 0) {
        pos[d][i] = (int)crit[d].size();
        crit[d].push_back(i);
      }
  }

  CellComplex out;
  out.poset_ = k.poset();
  out.truncated_ = k.truncated();
  out.cells_.resize(top + 1);
  for (int d = 0; d <= top; ++d)
    for (int i : crit[d]) out.cells_[d].push_back(k.cells(d)[i]);
  while (out.cells_.size() > 1 && out.cells_.back().empty())
    out.cells_.pop_back();

  int newtop = (int)out.cells_.size() - 1;
  out.boundary_.resize(newtop + 1);
  for (int d = 1; d <= newtop; ++d) {
    const ZMat& b = k.boundary(d);
    // Gradient flow of a (d-1)-cell down to the critical (d-1)-cells:
    // critical cells stop, cells matched upward continue through the other
    // faces of their partner with the alternating-path sign.
    std::vector<std::map<int, mpz_class>> memo(k.cell_count(d - 1));
    std::vector<bool> done(k.cell_count(d - 1), false);
    auto flow = [&](auto&& self, int tau) -> const std::map<int, mpz_class>& {
      if (done[tau]) return memo[tau];
      done[tau] = true;
      if (pos[d - 1][tau] >= 0) {
        memo[tau][pos[d - 1][tau]] = 1;
        return memo[tau];
      }
      int mu = s.up[d - 1][tau];
      if (mu >= 0) {
        mpz_class inc_tau = b[tau][mu];
        for (int r = 0; r < (int)b.size(); ++r) {
          if (r == tau || b[r][mu] == 0) continue;
          mpz_class w = -b[r][mu] * inc_tau;
          for (const auto& [row, coeff] : self(self, r))
            memo[tau][row] += w * coeff;
        }
      }
      return memo[tau];
    };

    ZMat nb((int)out.cells_[d - 1].size(),
            std::vector<mpz_class>(out.cells_[d].size(), 0));
    for (int col = 0; col < (int)out.cells_[d].size(); ++col) {
      int sigma = crit[d][col];
      for (int tau = 0; tau < (int)b.size(); ++tau) {
        if (b[tau][sigma] == 0) continue;
        for (const auto& [row, coeff] : flow(flow, tau))
          nb[row][col] += b[tau][sigma] * coeff;
      }
    }
    out.boundary_[d] = std::move(nb);
  }
  return out;
}

}  // namespace ncpw
