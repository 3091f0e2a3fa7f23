#include "katospec/monoid.hpp"

#include <algorithm>
#include <string>

namespace katospec {

std::optional<MonoidLawViolation> find_law_violation(int order, int unit,
                                                     const std::vector<int>& table) {
  const int n = order;
  auto at = [&](int i, int j) { return table[i * n + j]; };
  if (unit < 0 || unit >= n) return MonoidLawViolation{ErrorCode::BadUnit, unit};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) < 0 || at(i, j) >= n)
        return MonoidLawViolation{ErrorCode::EntryOutOfRange, i, j};
  for (int i = 0; i < n; ++i)
    if (at(unit, i) != i || at(i, unit) != i)
      return MonoidLawViolation{ErrorCode::BadUnit, i};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (at(i, j) != at(j, i)) return MonoidLawViolation{ErrorCode::NotCommutative, i, j};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (at(at(i, j), k) != at(i, at(j, k)))
          return MonoidLawViolation{ErrorCode::NotAssociative, i, j, k};
  return std::nullopt;
}

FiniteMonoid validate_monoid(int order, int unit, std::vector<int> table) {
  if (order <= 0 || order > kMaxCarrier)
    throw Error(ErrorCode::CarrierTooLarge,
                "monoid order " + std::to_string(order) + " outside 1.." +
                    std::to_string(kMaxCarrier),
                order);
  if (table.size() != static_cast<std::size_t>(order) * order)
    throw Error(ErrorCode::BadInput, "table is not order x order");
  if (auto v = find_law_violation(order, unit, table)) {
    std::string what;
    switch (v->code) {
      case ErrorCode::EntryOutOfRange:
        what = "table entry at (" + std::to_string(v->i) + "," + std::to_string(v->j) +
               ") outside carrier";
        break;
      case ErrorCode::BadUnit:
        what = "unit law fails at element " + std::to_string(v->i);
        break;
      case ErrorCode::NotCommutative:
        what = "commutativity fails on (" + std::to_string(v->i) + "," + std::to_string(v->j) + ")";
        break;
      default:
        what = "associativity fails on (" + std::to_string(v->i) + "," + std::to_string(v->j) +
               "," + std::to_string(v->k) + ")";
        break;
    }
    throw Error(v->code, what, v->i, v->j, v->k);
  }
  return FiniteMonoid{order, unit, std::move(table)};
}

bool is_prime_ideal(const FiniteMonoid& m, Mask subset) {
  if (subset.test(m.unit)) return false;
  for (int x = 0; x < m.order; ++x) {
    if (!subset.test(x)) continue;
    for (int y = 0; y < m.order; ++y)
      if (!subset.test(m.mul(x, y))) return false;  // not an ideal
  }
  for (int x = 0; x < m.order; ++x) {
    if (subset.test(x)) continue;
    for (int y = x; y < m.order; ++y)
      if (!subset.test(y) && subset.test(m.mul(x, y)))
        return false;  // complement not closed under products
  }
  return true;
}

namespace {

// Closure rules for a partial ideal/submonoid partition. Returns false when
// the partial assignment is contradictory.
bool propagate_prime(const FiniteMonoid& m, Mask& ideal, Mask& sub) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < m.order; ++x) {
      if (ideal.test(x)) {
        for (int y = 0; y < m.order; ++y) {
          int p = m.mul(x, y);
          if (sub.test(p)) return false;
          if (!ideal.test(p)) {
            ideal.set(p);
            changed = true;
          }
        }
      } else if (sub.test(x)) {
        for (int y = x; y < m.order; ++y) {
          if (!sub.test(y)) continue;
          int p = m.mul(x, y);
          if (ideal.test(p)) return false;
          if (!sub.test(p)) {
            sub.set(p);
            changed = true;
          }
        }
      }
    }
  }
  return true;
}

void search_primes(const FiniteMonoid& m, Mask ideal, Mask sub, std::vector<Mask>& out) {
  if (!propagate_prime(m, ideal, sub)) return;
  int undecided = -1;
  for (int x = 0; x < m.order; ++x)
    if (!ideal.test(x) && !sub.test(x)) {
      undecided = x;
      break;
    }
  if (undecided < 0) {
    out.push_back(ideal);
    return;
  }
  Mask sub2 = sub;
  sub2.set(undecided);
  search_primes(m, ideal, sub2, out);
  Mask ideal2 = ideal;
  ideal2.set(undecided);
  search_primes(m, ideal2, sub, out);
}

}  // namespace

std::vector<Mask> enumerate_primes(const FiniteMonoid& m) {
  std::vector<Mask> out;
  Mask sub = Mask::empty(m.order);
  sub.set(m.unit);
  search_primes(m, Mask::empty(m.order), sub, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SpecSpace spec(const FiniteMonoid& m) {
  SpecSpace s;
  s.monoid = m;
  s.points = enumerate_primes(m);
  const int np = static_cast<int>(s.points.size());
  s.d_base.reserve(m.order);
  for (int f = 0; f < m.order; ++f) {
    Mask d = Mask::empty(np);
    for (int i = 0; i < np; ++i)
      if (!s.points[i].test(f)) d.set(i);
    s.d_base.push_back(d);
  }
  s.order.size = np;
  s.order.below.assign(np, Mask::empty(np));
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j)
      if (s.points[j].subset_of(s.points[i])) s.order.below[i].set(j);

  // definition-level sanity: D(1) is everything, D(fg) = D(f) n D(g), and the
  // union of any two primes is a prime
  if (!s.d_base[m.unit].is_full())
    throw Error(ErrorCode::NotPrime, "D(unit) misses a point");
  for (int f = 0; f < m.order; ++f)
    for (int g = f; g < m.order; ++g)
      if (s.d_base[m.mul(f, g)] != (s.d_base[f] & s.d_base[g]))
        throw Error(ErrorCode::NotPrime, "D(fg) != D(f) n D(g)", f, g);
  for (int i = 0; i < np; ++i)
    for (int j = i + 1; j < np; ++j) {
      Mask u = s.points[i] | s.points[j];
      if (!std::binary_search(s.points.begin(), s.points.end(), u))
        throw Error(ErrorCode::NotPrime, "union of primes not prime", i, j);
    }
  return s;
}

std::vector<ClosedSetEntry> closed_sets(const SpecSpace& s) {
  const int np = static_cast<int>(s.points.size());
  // closed sets are the up-sets of the inclusion order
  std::vector<Mask> ups = down_sets(s.order);  // reuse: down-sets of the dual
  for (auto& u : ups) u = u.complement();
  std::sort(ups.begin(), ups.end());
  std::vector<ClosedSetEntry> out;
  out.reserve(ups.size());
  for (const auto& v : ups) {
    if (v.empty_set()) {
      out.push_back({std::nullopt, v});
      continue;
    }
    Mask ideal = Mask::full(s.monoid.order);
    for (int i = 0; i < np; ++i)
      if (v.test(i)) ideal = ideal & s.points[i];
    // V(ideal) must recover v exactly
    for (int i = 0; i < np; ++i) {
      bool in_v_of_i = ideal.subset_of(s.points[i]);
      if (in_v_of_i != v.test(i))
        throw Error(ErrorCode::NotPrime, "closed set not of the form V(I)", i);
    }
    out.push_back({ideal, v});
  }
  return out;
}

StarWitnessResult star_witness(const FiniteMonoid& m, const std::vector<int>& family, int g) {
  if (family.empty()) throw Error(ErrorCode::EmptyFamily, "family of basic opens is empty");
  for (int f : family)
    if (f < 0 || f >= m.order)
      throw Error(ErrorCode::EntryOutOfRange, "family element out of range", f);
  if (g < 0 || g >= m.order)
    throw Error(ErrorCode::EntryOutOfRange, "target element out of range", g);

  // submonoid generated by the family, tracking which family indices produce
  // each element
  std::vector<std::optional<Mask>> produced(m.order);
  const int fam = static_cast<int>(family.size());
  produced[m.unit] = Mask::empty(fam);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < m.order; ++x) {
      if (!produced[x]) continue;
      for (int idx = 0; idx < fam; ++idx) {
        int y = m.mul(x, family[idx]);
        if (!produced[y]) {
          Mask used = *produced[x];
          used.set(idx);
          produced[y] = used;
          grew = true;
        }
      }
    }
  }

  // saturation: q = {h : exists t with t*h generated by the family}
  std::optional<Mask> g_used;
  for (int t = 0; t < m.order && !g_used; ++t) {
    int th = m.mul(t, g);
    if (produced[th]) g_used = produced[th];
  }

  StarWitnessResult r;
  if (g_used) {
    r.contained = true;
    r.subfamily = g_used->members();
    if (r.subfamily.empty()) r.subfamily = {0};  // empty product: any member suffices
    return r;
  }
  // the complement of the saturation is a prime containing g but no f_i
  Mask q = Mask::empty(m.order);
  for (int h = 0; h < m.order; ++h)
    for (int t = 0; t < m.order; ++t)
      if (produced[m.mul(t, h)]) {
        q.set(h);
        break;
      }
  Mask p = q.complement();
  if (!is_prime_ideal(m, p))
    throw Error(ErrorCode::NotPrime, "saturation complement is not prime");
  r.contained = false;
  r.witness_prime = p;
  return r;
}

}  // namespace katospec
