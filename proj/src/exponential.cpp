#include "katospec/exponential.hpp"

#include <algorithm>

namespace katospec {

namespace {

std::vector<Mask> point_filters(const BasedSpace& a) {
  const int nb = static_cast<int>(a.base.size());
  std::vector<Mask> pf(a.space.size, Mask::empty(nb));
  for (int u = 0; u < nb; ++u)
    for (int x = 0; x < a.space.size; ++x)
      if (a.base[u].test(x)) pf[x].set(u);
  return pf;
}

int find_filter(const std::vector<ExpPoint>& points, const Mask& filter) {
  int lo = 0, hi = static_cast<int>(points.size());
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (points[mid].filter < filter)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo == static_cast<int>(points.size()) || points[lo].filter != filter)
    throw Error(ErrorCode::WitnessMismatch, "filter does not name a class");
  return lo;
}

}  // namespace

ExpSpace exponential(const BasedSpace& a) {
  const int nb = static_cast<int>(a.base.size());
  if (nb > kMaxCarrier)
    throw Error(ErrorCode::BaseTooLarge, "base has more members than a machine word", nb);
  std::vector<Mask> pf = point_filters(a);

  // realizable filters: every intersection of point filters, the empty
  // intersection (class of the empty set) included
  std::vector<Mask> filters{Mask::full(nb)};
  for (int x = 0; x < a.space.size; ++x) {
    std::vector<Mask> next = filters;
    for (const auto& f : filters) next.push_back(f & pf[x]);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    filters = std::move(next);
  }
  const int nc = static_cast<int>(filters.size());
  if (nc > kMaxCarrier)
    throw Error(ErrorCode::CarrierTooLarge, "exponential has too many classes", nc);

  ExpSpace e;
  e.source = a;
  e.points.reserve(nc);
  for (const auto& f : filters) {
    Mask rep = Mask::full(a.space.size);
    for (int u = 0; u < nb; ++u)
      if (f.test(u)) rep = rep & a.base[u];
    e.points.push_back({f, rep});
  }
  e.tilde_base.reserve(nb);
  for (int u = 0; u < nb; ++u) {
    Mask t = Mask::empty(nc);
    for (int c = 0; c < nc; ++c)
      if (filters[c].test(u)) t.set(c);
    e.tilde_base.push_back(t);
  }
  e.based = make_based_space(from_open_family(nc, e.tilde_base), e.tilde_base);
  e.i_map.reserve(a.space.size);
  for (int x = 0; x < a.space.size; ++x) e.i_map.push_back(find_filter(e.points, pf[x]));
  return e;
}

int class_index_of(const ExpSpace& e, const Mask& a) {
  if (a.width != e.source.space.size)
    throw Error(ErrorCode::BadInput, "subset width does not match the source carrier");
  const int nb = static_cast<int>(e.source.base.size());
  Mask filter = Mask::empty(nb);
  for (int u = 0; u < nb; ++u)
    if (a.subset_of(e.source.base[u])) filter.set(u);
  return find_filter(e.points, filter);
}

ExpPoint class_of(const ExpSpace& e, const Mask& a) { return e.points[class_index_of(e, a)]; }

std::vector<int> e_on_map(const ExpSpace& ex, const ExpSpace& ey, const std::vector<int>& f) {
  if (!is_m_morphism(ex.source, ey.source, f))
    throw Error(ErrorCode::NotMMorphism, "map does not pull the base back into the base");
  std::vector<int> out;
  out.reserve(ex.points.size());
  for (const auto& pt : ex.points) {
    Mask image = Mask::empty(ey.source.space.size);
    for (int x : pt.canonical_rep.members()) image.set(f[x]);
    out.push_back(class_index_of(ey, image));
  }
  return out;
}

std::vector<int> hat_theta(const ExpSpace& ex, const McjsWitness& target,
                           const std::vector<int>& theta_map) {
  if (!is_m_morphism(ex.source, target.based, theta_map))
    throw Error(ErrorCode::NotMMorphism, "theta does not pull the base back into the base");
  std::vector<int> out;
  out.reserve(ex.points.size());
  for (const auto& pt : ex.points) {
    Mask image = Mask::empty(target.based.space.size);
    for (int x : pt.canonical_rep.members()) image.set(theta_map[x]);
    out.push_back(target.join.sup_of_subset(image));
  }
  return out;
}

std::vector<int> hat_theta(const ExpSpace& ex, const BasedSpace& target,
                           const std::vector<int>& theta_map) {
  McjsOutcome oc = check_mcjs(target);
  if (!oc.ok())
    throw Error(ErrorCode::TargetNotMCJS, "target is not a complete join semilattice");
  return hat_theta(ex, *oc.witness, theta_map);
}

bool check_idempotent(const BasedSpace& a) {
  ExpSpace e1 = exponential(a);
  ExpSpace e2 = exponential(e1.based);
  const int n1 = e1.based.space.size;
  if (n1 != e2.based.space.size) return false;
  std::vector<bool> hit(n1, false);
  for (int c : e2.i_map) {
    if (hit[c]) return false;
    hit[c] = true;
  }
  // the bijection i is an isomorphism iff pulling back the outer base gives
  // exactly the inner base
  std::vector<Mask> pulled;
  pulled.reserve(e2.based.base.size());
  for (const auto& v : e2.based.base) {
    Mask m = Mask::empty(n1);
    for (int x = 0; x < n1; ++x)
      if (v.test(e2.i_map[x])) m.set(x);
    pulled.push_back(m);
  }
  std::sort(pulled.begin(), pulled.end());
  return pulled == e1.based.base;
}

}  // namespace katospec
