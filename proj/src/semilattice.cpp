#include "katospec/semilattice.hpp"

#include <algorithm>

namespace katospec {

McjsOutcome check_mcjs(const BasedSpace& a) {
  const int n = a.space.size;
  if (n > 16)
    throw Error(ErrorCode::CarrierTooLarge, "sup tabulation is limited to 16 points", n);
  McjsOutcome out;
  JoinStructure join;
  join.order = specialization_order(a.space);
  const std::uint64_t count = std::uint64_t(1) << n;
  join.sup.assign(count, -1);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    Mask subset(bits, n);
    auto s = sup_of(join.order, subset);
    if (!s) {
      out.subset_without_sup = subset;
      return out;
    }
    join.sup[bits] = *s;
  }
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    Mask subset(bits, n);
    for (int u = 0; u < static_cast<int>(a.base.size()); ++u)
      if (subset.subset_of(a.base[u]) != a.base[u].test(join.sup[bits])) {
        out.base_violation = {subset, u};
        return out;
      }
  }
  out.witness = McjsWitness{a, std::move(join)};
  return out;
}

UniversalSemilattice universal_semilattice(std::vector<Mask> base) {
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  if (base.empty()) throw Error(ErrorCode::EmptyFamily, "base has no members");
  const int n = static_cast<int>(base.size());
  int unit = -1;
  for (int i = 0; i < n; ++i) {
    bool contains_all = true;
    for (int j = 0; j < n && contains_all; ++j) contains_all = base[j].subset_of(base[i]);
    if (contains_all) unit = i;
  }
  if (unit < 0)
    throw Error(ErrorCode::BaseNotMonoidal, "no base member contains every other member");
  std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mask meet = base[i] & base[j];
      auto it = std::lower_bound(base.begin(), base.end(), meet);
      if (it == base.end() || *it != meet)
        throw Error(ErrorCode::BaseNotMonoidal,
                    "base not closed under intersection: " + base[i].to_string() + " n " +
                        base[j].to_string(),
                    i, j);
      table[static_cast<std::size_t>(i) * n + j] = static_cast<int>(it - base.begin());
    }
  return {validate_monoid(n, unit, std::move(table)), std::move(base)};
}

std::vector<Mask> phi(const BasedSpace& a) {
  UniversalSemilattice us = universal_semilattice(a.base);
  const int nb = us.monoid.order;
  std::vector<Mask> out;
  out.reserve(a.space.size);
  for (int x = 0; x < a.space.size; ++x) {
    Mask p = Mask::empty(nb);
    for (int u = 0; u < nb; ++u)
      if (!us.legend[u].test(x)) p.set(u);
    if (!is_prime_ideal(us.monoid, p))
      throw Error(ErrorCode::ImageNotPrime,
                  "point " + std::to_string(x) + " maps to a non-prime subset of (B, n)", x);
    out.push_back(p);
  }
  return out;
}

int theta(const BasedSpace& a, const JoinStructure& join, const Mask& p) {
  Mask inter = Mask::full(a.space.size);
  for (int u = 0; u < static_cast<int>(a.base.size()); ++u)
    if (!p.test(u)) inter = inter & a.base[u];
  return join.sup_of_subset(inter);
}

bool check_spec_homeomorphism(const BasedSpace& a) {
  UniversalSemilattice us = universal_semilattice(a.base);
  SpecSpace s = spec(us.monoid);
  std::vector<Mask> images = phi(a);
  if (images.size() != s.points.size()) return false;
  std::vector<int> index_of(images.size(), -1);
  std::vector<bool> hit(s.points.size(), false);
  for (std::size_t x = 0; x < images.size(); ++x) {
    auto it = std::lower_bound(s.points.begin(), s.points.end(), images[x]);
    if (it == s.points.end() || *it != images[x]) return false;
    int idx = static_cast<int>(it - s.points.begin());
    if (hit[idx]) return false;  // phi collided
    hit[idx] = true;
    index_of[x] = idx;
  }
  // openness: phi carries each base member onto the matching basic open
  for (int v = 0; v < us.monoid.order; ++v) {
    Mask image = Mask::empty(static_cast<int>(s.points.size()));
    for (int x = 0; x < a.space.size; ++x)
      if (us.legend[v].test(x)) image.set(index_of[x]);
    if (image != s.d_base[v]) return false;
  }
  return true;
}

Mask weakprop2_prime(const BasedSpace& a, const std::vector<Mask>& family) {
  if (family.empty()) throw Error(ErrorCode::EmptyFamily, "family must be nonempty");
  for (const auto& f : family)
    if (!std::binary_search(a.base.begin(), a.base.end(), f))
      throw Error(ErrorCode::BadInput, "family member " + f.to_string() + " is not in the base");
  Mask total = Mask::full(a.space.size);
  for (const auto& f : family) total = total & f;
  const int nb = static_cast<int>(a.base.size());
  Mask p = Mask::empty(nb);
  for (int u = 0; u < nb; ++u)
    if (!total.subset_of(a.base[u])) p.set(u);
  UniversalSemilattice us = universal_semilattice(a.base);
  if (!is_prime_ideal(us.monoid, p))
    throw Error(ErrorCode::NotPrime, "non-containment family failed to yield a prime");
  return p;
}

}  // namespace katospec
