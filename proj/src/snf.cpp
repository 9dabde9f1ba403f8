#include "ncpw/snf.hpp"

#include <cstddef>
#include <utility>

namespace ncpw {

namespace {

// Diagonalize a by unimodular row and column operations, so that the
// diagonal satisfies a[0][0] | a[1][1] | ...  Row operations are mirrored
// on b when given; column operations only rename the unknowns.
void diagonalize(ZMat& a, std::vector<mpz_class>* b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    if (b != nullptr) std::swap((*b)[i], (*b)[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
  };

  for (std::size_t t = 0; t < m && t < n; ++t) {
    std::size_t pi = t;
    std::size_t pj = t;
    bool found = false;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a[i][j] == 0) continue;
        if (!found || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool dirty = true;
      while (dirty) {
        dirty = false;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a[i][t] == 0) continue;
          mpz_class q = a[i][t] / a[t][t];
          for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
          if (b != nullptr) (*b)[i] -= q * (*b)[t];
          if (a[i][t] != 0) {
            swap_rows(t, i);
            dirty = true;
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[t][j] == 0) continue;
          mpz_class q = a[t][j] / a[t][t];
          for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
          if (a[t][j] != 0) {
            swap_cols(t, j);
            dirty = true;
          }
        }
      }
      // The pivot must divide the whole remaining block for the chain
      // property; fold in an offending row and reduce again.
      bool chained = true;
      for (std::size_t i = t + 1; i < m && chained; ++i)
        for (std::size_t j = t + 1; j < n && chained; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            if (b != nullptr) (*b)[t] += (*b)[i];
            chained = false;
          }
      if (chained) break;
    }
  }

  for (std::size_t t = 0; t < m && t < n; ++t)
    if (a[t][t] < 0) {
      a[t][t] = -a[t][t];
      if (b != nullptr) (*b)[t] = -(*b)[t];
    }
}

}  // namespace

std::vector<mpz_class> smith_diagonal(ZMat a) {
  diagonalize(a, nullptr);
  std::vector<mpz_class> out;
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  for (std::size_t t = 0; t < m && t < n; ++t)
    if (a[t][t] != 0) out.push_back(a[t][t]);
  return out;
}

bool integer_solvable(ZMat a, std::vector<mpz_class> b) {
  const std::size_t m = a.size();
  if (b.size() != m) return false;
  const std::size_t n = m == 0 ? 0 : a[0].size();
  diagonalize(a, &b);
  for (std::size_t i = 0; i < m; ++i) {
    if (i < n && a[i][i] != 0) {
      if (b[i] % a[i][i] != 0) return false;
    } else if (b[i] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace ncpw
