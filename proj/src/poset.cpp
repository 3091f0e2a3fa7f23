#include "katospec/poset.hpp"

#include <algorithm>
#include <numeric>

#include "katospec/errors.hpp"

namespace katospec {

FinitePoset make_poset(int size, const std::vector<std::pair<int, int>>& le_pairs) {
  if (size < 0 || size > kMaxCarrier)
    throw Error(ErrorCode::CarrierTooLarge, "poset size " + std::to_string(size) +
                    " outside supported range", size);
  FinitePoset p;
  p.size = size;
  p.below.assign(size, Mask::empty(size));
  for (int i = 0; i < size; ++i) p.below[i].set(i);
  for (auto [x, y] : le_pairs) {
    if (x < 0 || x >= size || y < 0 || y >= size)
      throw Error(ErrorCode::EntryOutOfRange, "relation pair out of range", x, y);
    p.below[y].set(x);
  }
  // transitive closure: x <= y and y <= z imply x <= z
  bool changed = true;
  while (changed) {
    changed = false;
    for (int z = 0; z < size; ++z)
      for (int y = 0; y < size; ++y)
        if (p.below[z].test(y) && !p.below[y].subset_of(p.below[z])) {
          p.below[z] = p.below[z] | p.below[y];
          changed = true;
        }
  }
  validate_poset(p);
  return p;
}

void validate_poset(const FinitePoset& p) {
  for (int a = 0; a < p.size; ++a)
    if (!p.below[a].test(a))
      throw Error(ErrorCode::BadInput, "relation not reflexive at " + std::to_string(a), a);
  for (int a = 0; a < p.size; ++a)
    for (int b = 0; b < p.size; ++b)
      if (a != b && p.leq(a, b) && p.leq(b, a))
        throw Error(ErrorCode::BadInput,
                    "relation not antisymmetric on " + std::to_string(a) + "," + std::to_string(b),
                    a, b);
  for (int c = 0; c < p.size; ++c)
    for (int b = 0; b < p.size; ++b)
      if (p.below[c].test(b) && !p.below[b].subset_of(p.below[c]))
        throw Error(ErrorCode::BadInput, "relation not transitive below " + std::to_string(c), b, c);
}

std::optional<int> top_of(const FinitePoset& p) {
  for (int a = 0; a < p.size; ++a)
    if (p.below[a].is_full()) return a;
  return std::nullopt;
}

std::optional<int> bottom_of(const FinitePoset& p) {
  for (int a = 0; a < p.size; ++a) {
    bool least = true;
    for (int b = 0; b < p.size && least; ++b) least = p.leq(a, b);
    if (least) return a;
  }
  return std::nullopt;
}

std::optional<int> meet_of(const FinitePoset& p, int a, int b) {
  Mask lower = p.below[a] & p.below[b];
  // greatest element of `lower`, if any
  for (int m = 0; m < p.size; ++m)
    if (lower.test(m) && lower.subset_of(p.below[m])) return m;
  return std::nullopt;
}

bool is_meet_semilattice(const FinitePoset& p) {
  for (int a = 0; a < p.size; ++a)
    for (int b = a + 1; b < p.size; ++b)
      if (!meet_of(p, a, b)) return false;
  return true;
}

std::optional<int> sup_of(const FinitePoset& p, Mask subset) {
  Mask upper = Mask::full(p.size);
  for (int a = 0; a < p.size; ++a)
    if (subset.test(a)) upper = upper & p.above(a);
  // least element of `upper`, if any
  for (int u = 0; u < p.size; ++u) {
    if (!upper.test(u)) continue;
    bool least = true;
    for (int v = 0; v < p.size && least; ++v)
      if (upper.test(v)) least = p.leq(u, v);
    if (least) return u;
  }
  return std::nullopt;
}

bool has_all_sups(const FinitePoset& p) {
  bool ok = true;
  for_each_subset(Mask::full(p.size), [&](Mask a) { ok = ok && sup_of(p, a).has_value(); });
  return ok;
}

std::vector<Mask> down_sets(const FinitePoset& p) {
  // every down-set is a union of principal down-sets; close under union
  std::vector<Mask> out = {Mask::empty(p.size)};
  for (int a = 0; a < p.size; ++a) out.push_back(p.below[a]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Mask> fresh;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        Mask u = out[i] | out[j];
        if (!std::binary_search(out.begin(), out.end(), u)) fresh.push_back(u);
      }
    if (!fresh.empty()) {
      out.insert(out.end(), fresh.begin(), fresh.end());
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      changed = true;
    }
  }
  return out;
}

FinitePoset induced_poset(const FinitePoset& p, const std::vector<int>& perm) {
  // perm maps old index -> new index
  FinitePoset q;
  q.size = p.size;
  q.below.assign(p.size, Mask::empty(p.size));
  for (int a = 0; a < p.size; ++a)
    for (int x = 0; x < p.size; ++x)
      if (p.leq(x, a)) q.below[perm[a]].set(perm[x]);
  return q;
}

std::vector<std::uint64_t> canonical_form(const FinitePoset& p) {
  std::vector<int> perm(p.size);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best;
  do {
    FinitePoset q = induced_poset(p, perm);
    std::vector<std::uint64_t> rows(p.size);
    for (int i = 0; i < p.size; ++i) rows[i] = q.below[i].bits;
    if (best.empty() || rows < best) best = rows;
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best.empty()) best = {};
  return best;
}

std::uint64_t fnv1a_words(const std::vector<std::uint64_t>& words) {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint64_t w : words)
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (w >> (byte * 8)) & 0xFF;
      h *= 1099511628211ULL;
    }
  return h;
}

}  // namespace katospec
