#include "ncpw/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ncpw {

namespace {

// Chain word of the lex-least maximal chain from the bottom to element i,
// greedily taking the cover with the smallest label descriptor. leq is the
// cover-path closure, so the walk cannot get stuck.
std::string chain_name(const IntervalPoset& p, int i) {
  std::string out;
  int cur = 0;
  while (cur != i) {
    int best = -1;
    const std::string* best_label = nullptr;
    for (int u : p.ups(cur)) {
      if (!p.leq(u, i)) continue;
      const std::string& lab = p.labels()[p.cover_label(cur, u)].descriptor;
      if (best < 0 || lab < *best_label) {
        best = u;
        best_label = &lab;
      }
    }
    if (best < 0) throw std::logic_error("no cover path inside the window");
    if (cur != 0) out += '*';
    out += *best_label;
    cur = best;
  }
  return out;
}

const std::string& element_name(const IntervalPoset& p, int i,
                                std::vector<std::string>& memo) {
  std::string& slot = memo[i];
  if (!slot.empty()) return slot;
  if (p.rank(i) == 1)
    slot = p.labels()[p.cover_label(0, i)].descriptor;
  else if (i == p.size() - 1)
    slot = "w";
  else
    slot = chain_name(p, i);
  return slot;
}

struct Face {
  std::vector<int> flag;
  int sign;
};

// Codimension-one faces of the cell with the given flag of partial
// products: dropping x1 left-translates the rest of the flag, merging
// x_i x_{i+1} deletes u_i, dropping x_d deletes u_d.
std::vector<Face> cell_faces(const IntervalPoset& p,
                             const std::vector<int>& flag) {
  int d = (int)flag.size();
  std::vector<Face> out;
  if (d == 0) return out;

  std::vector<int> first;
  Isometry v = p.element(flag[0]).inverse();
  for (int j = 1; j < d; ++j) {
    int idx = p.index_of(v * p.element(flag[j]));
    if (idx < 0) throw std::logic_error("face left the stored element set");
    first.push_back(idx);
  }
  out.push_back({std::move(first), 1});

  int sign = -1;
  for (int i = 1; i <= d - 1; ++i, sign = -sign) {
    std::vector<int> f = flag;
    f.erase(f.begin() + (i - 1));
    out.push_back({std::move(f), sign});
  }

  out.push_back({std::vector<int>(flag.begin(), flag.end() - 1),
                 d % 2 == 0 ? 1 : -1});
  return out;
}

std::vector<int> factors_of_flag(const IntervalPoset& p,
                                 const std::vector<int>& flag) {
  std::vector<int> fs;
  for (size_t i = 0; i < flag.size(); ++i) {
    if (i == 0) {
      fs.push_back(flag[0]);
      continue;
    }
    int idx = p.index_of(p.element(flag[i - 1]).inverse() * p.element(flag[i]));
    if (idx < 0) throw std::logic_error("factor left the stored element set");
    fs.push_back(idx);
  }
  return fs;
}

std::string cell_descriptor(const IntervalPoset& p,
                            const std::vector<int>& factors,
                            std::vector<std::string>& memo) {
  std::string out = "[";
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += '|';
    out += element_name(p, factors[i], memo);
  }
  out += ']';
  return out;
}

// Boundary matrices from the stored cells; every face must be present.
std::vector<ZMat> assemble_boundaries(const IntervalPoset& p,
                                      const std::vector<std::vector<Cell>>& cells,
                                      const char* missing_face_error) {
  int top = (int)cells.size() - 1;
  std::vector<std::map<std::vector<int>, int>> by_flag(top + 1);
  for (int d = 0; d <= top; ++d)
    for (int i = 0; i < (int)cells[d].size(); ++i)
      by_flag[d][cells[d][i].flag] = i;

  std::vector<ZMat> bd(top + 1);
  for (int d = 1; d <= top; ++d) {
    ZMat m(cells[d - 1].size(),
           std::vector<mpz_class>(cells[d].size(), 0));
    for (int col = 0; col < (int)cells[d].size(); ++col)
      for (const Face& f : cell_faces(p, cells[d][col].flag)) {
        auto it = by_flag[d - 1].find(f.flag);
        if (it == by_flag[d - 1].end())
          throw std::logic_error(missing_face_error);
        m[it->second][col] += f.sign;
      }
    bd[d] = std::move(m);
  }
  return bd;
}

}  // namespace

int CellComplex::cell_index(int d, const std::vector<int>& factors) const {
  if (d < 0 || d > dim()) return -1;
  const auto& v = cells_[d];
  for (int i = 0; i < (int)v.size(); ++i)
    if (v[i].factors == factors) return i;
  return -1;
}

long CellComplex::euler_characteristic() const {
  long chi = 0;
  for (int d = 0; d <= dim(); ++d)
    chi += (d % 2 == 0) ? cell_count(d) : -cell_count(d);
  return chi;
}

CellComplex build_interval_complex(const IntervalPoset& p, int max_dim) {
  int rank = p.top_rank();
  CellComplex k;
  k.poset_ = p;
  k.truncated_ = !p.complete();

  if (max_dim < 0) max_dim = rank;
  if (max_dim > rank) {
    std::ostringstream os;
    os << "max_dim " << max_dim << " exceeds the interval rank " << rank
       << "; clamped";
    k.notes_.push_back(os.str());
    max_dim = rank;
  } else if (max_dim < rank) {
    std::ostringstream os;
    os << "built up to dimension " << max_dim << " of " << rank;
    k.notes_.push_back(os.str());
  }

  // Flags 1 < u1 < ... < ud whose pairwise quotients all stay in the
  // poset, so that every factor and every face is again a stored cell.
  std::vector<std::vector<std::vector<int>>> flags(max_dim + 1);
  flags[0].push_back({});
  std::vector<int> flag;
  auto extend = [&](auto&& self) -> void {
    if ((int)flag.size() == max_dim) return;
    int last = flag.empty() ? 0 : flag.back();
    for (int j = 1; j < p.size(); ++j) {
      if (j == last || !p.leq(last, j)) continue;
      bool saturated = true;
      for (int u : flag)
        if (p.index_of(p.element(u).inverse() * p.element(j)) < 0) {
          saturated = false;
          break;
        }
      if (!saturated) continue;
      flag.push_back(j);
      flags[flag.size()].push_back(flag);
      self(self);
      flag.pop_back();
    }
  };
  extend(extend);

  std::vector<std::string> memo(p.size());
  k.cells_.resize(max_dim + 1);
  for (int d = 0; d <= max_dim; ++d) {
    std::vector<Cell> cs;
    cs.reserve(flags[d].size());
    for (auto& f : flags[d]) {
      Cell c;
      c.factors = factors_of_flag(p, f);
      c.flag = std::move(f);
      cs.push_back(std::move(c));
    }
    std::sort(cs.begin(), cs.end(),
              [](const Cell& a, const Cell& b) { return a.factors < b.factors; });
    for (Cell& c : cs) c.descriptor = cell_descriptor(p, c.factors, memo);
    k.cells_[d] = std::move(cs);
  }

  k.boundary_ = assemble_boundaries(p, k.cells_,
                                    "interval complex is not face-closed");
  return k;
}

namespace {

void subset_connected_component(const std::vector<std::vector<int>>& m,
                                const std::vector<int>& t, int start,
                                std::vector<bool>& seen,
                                std::vector<int>& component) {
  component.clear();
  std::vector<int> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    component.push_back(i);
    for (int j : t) {
      if (seen[j] || j == i) continue;
      if (m[i][j] != 2) {
        seen[j] = true;
        stack.push_back(j);
      }
    }
  }
  std::sort(component.begin(), component.end());
}

std::vector<std::vector<int>> restricted_matrix(
    const std::vector<std::vector<int>>& m, const std::vector<int>& t) {
  std::vector<std::vector<int>> r(t.size(), std::vector<int>(t.size()));
  for (size_t a = 0; a < t.size(); ++a)
    for (size_t b = 0; b < t.size(); ++b) r[a][b] = m[t[a]][t[b]];
  return r;
}

std::string subset_type(const SystemPtr& sys, const std::vector<int>& t) {
  if (t.empty()) return "1";
  const auto& m = sys->coxeter_matrix();
  std::vector<bool> seen(sys->rank(), false);
  std::vector<std::string> parts;
  for (int i : t) {
    if (seen[i]) continue;
    std::vector<int> component;
    subset_connected_component(m, t, i, seen, component);
    parts.push_back(
        CoxeterSystem::from_matrix(restricted_matrix(m, component))
            ->classification());
  }
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " x ";
    out += parts[i];
  }
  return out;
}

}  // namespace

std::vector<SphericalSubset> spherical_subsets(
    const SystemPtr& sys, const std::vector<int>& word_order) {
  int n = sys->rank();
  std::vector<int> order = word_order;
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }

  std::vector<SphericalSubset> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> t;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) t.push_back(i);
    if (!t.empty() &&
        classify_cosine_form(restricted_matrix(sys->coxeter_matrix(), t)) !=
            SystemKind::Spherical)
      continue;

    SphericalSubset s;
    s.generators = t;
    s.type = subset_type(sys, t);
    std::vector<int> subword;
    for (int g : order)
      if (mask & (1u << g)) subword.push_back(g);
    s.coxeter = t.empty() ? Isometry::identity(sys->dim()) : sys->word(subword);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(),
            [](const SphericalSubset& a, const SphericalSubset& b) {
              return a.generators.size() != b.generators.size()
                         ? a.generators.size() < b.generators.size()
                         : a.generators < b.generators;
            });
  return out;
}

namespace {

std::vector<int> recover_word_order(const SystemPtr& sys, const Isometry& w) {
  std::vector<int> order(sys->rank());
  std::iota(order.begin(), order.end(), 0);
  do {
    if (sys->word(order) == w) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  throw std::invalid_argument(
      "w is not a product of the simple generators in any order");
}

std::set<Isometry, IsometryLess> parabolic_elements(
    const SystemPtr& sys, const std::vector<int>& t) {
  std::set<Isometry, IsometryLess> closure;
  std::vector<Isometry> queue{Isometry::identity(sys->dim())};
  closure.insert(queue.front());
  while (!queue.empty()) {
    Isometry u = std::move(queue.back());
    queue.pop_back();
    for (int g : t) {
      Isometry v = u * sys->generator(g);
      if (closure.insert(v).second) queue.push_back(v);
    }
  }
  return closure;
}

std::string generator_set_text(const std::vector<int>& t) {
  std::string out = "{";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += "s" + std::to_string(t[i]);
  }
  out += "}";
  return out;
}

}  // namespace

CellComplex build_salvetti_subcomplex(const SystemPtr& sys, const Isometry& w,
                                      const CellComplex& k) {
  if (w != k.poset().top())
    throw std::invalid_argument("w must be the top of the complex's interval");
  const IntervalPoset& p = k.poset();
  std::vector<int> order = recover_word_order(sys, w);
  auto census = spherical_subsets(sys, order);

  std::vector<std::set<Isometry, IsometryLess>> members;
  members.reserve(census.size());
  for (const auto& t : census)
    members.push_back(parabolic_elements(sys, t.generators));

  CellComplex sub;
  sub.poset_ = p;
  sub.truncated_ = k.truncated_;
  sub.cells_.resize(k.dim() + 1);

  std::vector<std::vector<long>> census_counts(census.size());
  for (auto& c : census_counts) c.assign(k.dim() + 1, 0);

  for (int d = 0; d <= k.dim(); ++d)
    for (const Cell& c : k.cells(d)) {
      bool keep = false;
      for (size_t ti = 0; ti < census.size(); ++ti) {
        bool fits = true;
        for (int f : c.factors)
          if (!members[ti].count(p.element(f))) {
            fits = false;
            break;
          }
        if (fits &&
            is_below(sys, p.element(c.product()), census[ti].coxeter)) {
          ++census_counts[ti][d];
          keep = true;
        }
      }
      if (keep) sub.cells_[d].push_back(c);
    }

  while (sub.cells_.size() > 1 && sub.cells_.back().empty())
    sub.cells_.pop_back();

  sub.boundary_ = assemble_boundaries(
      p, sub.cells_, "Salvetti subcomplex is not face-closed");

  // Each census piece must look like the abstract interval complex of
  // its own parabolic system; a mismatch means the chosen w_T does not
  // embed K_{W_T,w_T} into this window.
  for (size_t ti = 0; ti < census.size(); ++ti) {
    const auto& t = census[ti].generators;
    if (t.empty()) continue;
    auto rest = restricted_matrix(sys->coxeter_matrix(), t);
    auto subsys = CoxeterSystem::from_matrix(rest);
    std::vector<int> subword;
    for (int g : order) {
      auto it = std::find(t.begin(), t.end(), g);
      if (it != t.end()) subword.push_back((int)(it - t.begin()));
    }
    auto abstract_poset =
        build_interval(subsys, subsys->word(subword), WindowSpec{});
    CellComplex abstract = build_interval_complex(abstract_poset);
    int top = std::max(abstract.dim(), k.dim());
    for (int d = 0; d <= top; ++d) {
      long want = abstract.cell_count(d);
      long got = d <= k.dim() ? census_counts[ti][d] : 0;
      if (want != got) {
        std::ostringstream os;
        os << "census " << generator_set_text(t) << " (" << census[ti].type
           << "): " << got << " embedded cells in dimension " << d
           << ", abstract complex has " << want;
        sub.notes_.push_back(os.str());
      }
    }
  }
  return sub;
}

std::vector<HomologyGroup> homology(const CellComplex& k) {
  int top = k.dim();
  std::vector<long> rank(top + 2, 0);
  std::vector<std::vector<mpz_class>> torsion(top + 2);
  for (int d = 1; d <= top; ++d) {
    auto inv = smith_diagonal(k.boundary(d));
    rank[d] = (long)inv.size();
    for (auto& z : inv)
      if (z > 1) torsion[d].push_back(z);
  }
  std::vector<HomologyGroup> h(top + 1);
  for (int d = 0; d <= top; ++d) {
    h[d].free_rank = k.cell_count(d) - rank[d] - rank[d + 1];
    h[d].torsion = torsion[d + 1];
  }
  return h;
}

std::string homology_text(const std::vector<HomologyGroup>& h) {
  std::ostringstream os;
  for (size_t d = 0; d < h.size(); ++d) {
    if (d) os << "\n";
    os << "H_" << d << " = ";
    std::vector<std::string> parts;
    if (h[d].free_rank == 1) parts.push_back("Z");
    if (h[d].free_rank > 1)
      parts.push_back("Z^" + std::to_string(h[d].free_rank));
    for (const auto& t : h[d].torsion) parts.push_back("Z/" + t.get_str());
    if (parts.empty()) {
      os << "0";
    } else {
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << " + ";
        os << parts[i];
      }
    }
  }
  return os.str();
}

}  // namespace ncpw
