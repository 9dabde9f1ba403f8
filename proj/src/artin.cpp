#include "ncpw/artin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ncpw/snf.hpp"

namespace ncpw {

namespace {

std::string letter_alias(int i) {
  std::string s;
  for (++i; i > 0; i = (i - 1) / 26)
    s.insert(s.begin(), (char)('a' + (i - 1) % 26));
  return s;
}

void append_word(std::ostringstream& os, const GroupPresentation& p,
                 const std::vector<int>& word) {
  for (size_t i = 0; i < word.size(); ++i) {
    if (i) os << ' ';
    os << p.symbol(word[i]);
  }
}

}  // namespace

GroupPresentation standard_presentation(const SystemPtr& sys) {
  GroupPresentation out;
  out.provenance = "standard(" + sys->name() + ")";
  for (int i = 0; i < sys->rank(); ++i)
    out.generators.push_back("s" + std::to_string(i));
  for (int i = 0; i < sys->rank(); ++i)
    for (int j = i + 1; j < sys->rank(); ++j) {
      int m = sys->m(i, j);
      if (m == 0) continue;
      Relation rel;
      for (int k = 0; k < m; ++k) {
        rel.lhs.push_back(k % 2 == 0 ? i : j);
        rel.rhs.push_back(k % 2 == 0 ? j : i);
      }
      out.relations.push_back(std::move(rel));
    }
  return out;
}

std::vector<std::vector<int>> maximal_chain_words(const IntervalPoset& p) {
  int top = p.index_of(p.top());
  std::vector<std::vector<int>> words;
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == top) {
      words.push_back(cur);
      return;
    }
    for (int u : p.ups(v)) {
      cur.push_back(p.cover_label(v, u));
      self(self, u);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  return words;
}

GroupPresentation dual_presentation(const IntervalPoset& p) {
  GroupPresentation out;
  for (const Reflection& r : p.labels()) out.generators.push_back(r.descriptor);

  // chains sorted by their label words under the descriptor order
  std::vector<int> by_name(out.generators.size());
  std::iota(by_name.begin(), by_name.end(), 0);
  std::sort(by_name.begin(), by_name.end(), [&](int a, int b) {
    return out.generators[a] < out.generators[b];
  });
  std::vector<int> name_rank(by_name.size());
  for (int i = 0; i < (int)by_name.size(); ++i) name_rank[by_name[i]] = i;

  std::vector<std::vector<int>> words = maximal_chain_words(p);
  std::sort(words.begin(), words.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              return std::lexicographical_compare(
                  a.begin(), a.end(), b.begin(), b.end(),
                  [&](int x, int y) { return name_rank[x] < name_rank[y]; });
            });

  // letters by first appearance along the sorted chain words, so the base
  // chain always reads a b c ...
  out.aliases.assign(out.generators.size(), "");
  std::vector<int> alias_rank(out.generators.size(), -1);
  int next = 0;
  auto assign = [&](int g) {
    if (!out.aliases[g].empty()) return;
    alias_rank[g] = next;
    out.aliases[g] = letter_alias(next++);
  };
  for (const auto& word : words)
    for (int g : word) assign(g);
  for (int g : by_name) assign(g);

  std::sort(words.begin(), words.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              return std::lexicographical_compare(
                  a.begin(), a.end(), b.begin(), b.end(),
                  [&](int x, int y) { return alias_rank[x] < alias_rank[y]; });
            });

  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = i + 1; j < words.size(); ++j)
      out.relations.push_back({words[i], words[j]});
  for (size_t j = 1; j < words.size(); ++j)
    out.reduced.push_back({words[0], words[j]});

  std::ostringstream prov;
  prov << "dual(w =";
  for (int g : words[0]) prov << ' ' << out.generators[g];
  prov << ", " << p.window_description();
  out.truncated = !p.complete();
  if (out.truncated) prov << "; truncation of the infinite presentation";
  prov << ")";
  out.provenance = prov.str();
  return out;
}

std::vector<mpz_class> abelianization_invariants(const GroupPresentation& p) {
  int n = (int)p.generators.size();
  ZMat rows;
  for (const Relation& rel : p.relations) {
    std::vector<mpz_class> row(n, 0);
    for (int g : rel.lhs) row[g] += 1;
    for (int g : rel.rhs) row[g] -= 1;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) rows.push_back(std::vector<mpz_class>(n, 0));

  std::vector<mpz_class> factors = smith_diagonal(std::move(rows));
  std::vector<mpz_class> out;
  for (const mpz_class& d : factors)
    if (d != 1) out.push_back(d);
  for (int i = (int)factors.size(); i < n; ++i) out.push_back(0);
  return out;
}

std::string presentation_text(const GroupPresentation& p) {
  std::ostringstream os;
  std::vector<int> order(p.generators.size());
  std::iota(order.begin(), order.end(), 0);
  if (!p.aliases.empty())
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::make_pair(p.aliases[a].size(), p.aliases[a]) <
             std::make_pair(p.aliases[b].size(), p.aliases[b]);
    });
  os << "presentation: " << p.provenance << '\n';
  os << "gens:";
  for (int g : order) os << ' ' << p.symbol(g);
  os << '\n';
  if (!p.aliases.empty())
    for (int g : order)
      os << "let: " << p.aliases[g] << " = " << p.generators[g] << '\n';
  for (const Relation& rel : p.relations) {
    os << "rel: ";
    append_word(os, p, rel.lhs);
    os << " = ";
    append_word(os, p, rel.rhs);
    os << '\n';
  }
  for (const Relation& rel : p.reduced) {
    os << "reduced: ";
    append_word(os, p, rel.lhs);
    os << " = ";
    append_word(os, p, rel.rhs);
    os << '\n';
  }
  return os.str();
}

}  // namespace ncpw
