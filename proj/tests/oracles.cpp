#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

std::vector<std::uint64_t> primes_by_filter(int order, int unit, const std::vector<int>& table) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (1ull << order); ++s) {
    bool ideal = true;
    for (int x = 0; x < order && ideal; ++x)
      if (s >> x & 1)
        for (int m = 0; m < order; ++m)
          if (!(s >> table[x * order + m] & 1)) {
            ideal = false;
            break;
          }
    if (!ideal || (s >> unit & 1)) continue;
    bool closed = true;
    for (int x = 0; x < order && closed; ++x)
      if (!(s >> x & 1))
        for (int y = 0; y < order; ++y)
          if (!(s >> y & 1) && (s >> table[x * order + y] & 1)) {
            closed = false;
            break;
          }
    if (closed) out.push_back(s);
  }
  return out;
}

long labeled_posets(int n) {
  if (n == 0) return 1;
  // off-diagonal cells of the strict relation, row-major
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) cells.emplace_back(i, j);
  long count = 0;
  const std::uint64_t total = 1ull << cells.size();
  std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
  for (std::uint64_t a = 0; a < total; ++a) {
    for (std::size_t c = 0; c < cells.size(); ++c)
      lt[cells[c].first][cells[c].second] = (a >> c) & 1;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (lt[i][j] && lt[j][i]) ok = false;  // antisymmetry of the strict part
        if (!lt[i][j]) continue;
        for (int k = 0; k < n; ++k)
          if (lt[j][k] && !lt[i][k]) {
            ok = false;
            break;
          }
      }
    if (ok) ++count;
  }
  return count;
}

long labelings_of(const katospec::FinitePoset& p) {
  const int n = p.size;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<std::vector<std::uint64_t>> seen;
  do {
    std::vector<std::uint64_t> rows(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.leq(i, j)) rows[perm[j]] |= 1ull << perm[i];
    seen.insert(rows);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<long>(seen.size());
}

MonoidCensus monoid_census(int order) {
  MonoidCensus census;
  const int n = order;
  const int cells = n * n;
  long total = 1;
  for (int c = 0; c < cells; ++c) total *= n;

  std::vector<int> t(cells);
  std::vector<int> perm(n);
  std::set<std::vector<int>> classes;
  for (long code = 0; code < total; ++code) {
    long rest = code;
    for (int c = 0; c < cells; ++c) {
      t[c] = static_cast<int>(rest % n);
      rest /= n;
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n; ++j)
        if (t[i * n + j] != t[j * n + i]) {
          ok = false;
          break;
        }
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n; ++k)
          if (t[t[i * n + j] * n + k] != t[i * n + t[j * n + k]]) {
            ok = false;
            break;
          }
    if (!ok) continue;
    int unit = -1;
    for (int e = 0; e < n && unit < 0; ++e) {
      bool is_unit = true;
      for (int i = 0; i < n; ++i)
        if (t[e * n + i] != i) {
          is_unit = false;
          break;
        }
      if (is_unit) unit = e;
    }
    if (unit < 0) continue;
    ++census.tables_any_unit;
    if (unit == 0) ++census.tables_unit_zero;

    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best;
    do {
      std::vector<int> relabeled(cells);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          relabeled[perm[i] * n + perm[j]] = perm[t[i * n + j]];
      if (best.empty() || relabeled < best) best = relabeled;
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  census.classes = static_cast<long>(classes.size());
  return census;
}

LiteralExp literal_exponential(const katospec::BasedSpace& a) {
  const int n = a.space.size;
  std::set<std::uint64_t> filters;
  for (std::uint64_t sub = 0; sub < (1ull << n); ++sub) {
    std::uint64_t filter = 0;
    for (std::size_t u = 0; u < a.base.size(); ++u)
      if ((sub & ~a.base[u].bits) == 0) filter |= 1ull << u;
    filters.insert(filter);
  }
  LiteralExp out;
  out.filters.assign(filters.begin(), filters.end());
  out.tilde.assign(a.base.size(), 0);
  for (std::size_t u = 0; u < a.base.size(); ++u)
    for (std::size_t c = 0; c < out.filters.size(); ++c)
      if (out.filters[c] >> u & 1) out.tilde[u] |= 1ull << c;
  return out;
}

}  // namespace oracle
