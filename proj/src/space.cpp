#include "katospec/space.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace katospec {

bool FiniteSpace::is_open(const Mask& u) const {
  return std::binary_search(opens.begin(), opens.end(), u);
}

FiniteSpace from_open_family(int size, std::vector<Mask> generators) {
  if (size < 0 || size > kMaxCarrier)
    throw Error(ErrorCode::CarrierTooLarge,
                "carrier size " + std::to_string(size) + " exceeds " + std::to_string(kMaxCarrier),
                size);
  for (const auto& g : generators)
    if (g.width != size)
      throw Error(ErrorCode::BadInput, "generator width does not match carrier size");
  generators.push_back(Mask::empty(size));
  generators.push_back(Mask::full(size));
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Mask> fresh;
    for (std::size_t i = 0; i < generators.size(); ++i)
      for (std::size_t j = i + 1; j < generators.size(); ++j) {
        for (Mask m : {generators[i] | generators[j], generators[i] & generators[j]})
          if (!std::binary_search(generators.begin(), generators.end(), m)) fresh.push_back(m);
      }
    if (!fresh.empty()) {
      generators.insert(generators.end(), fresh.begin(), fresh.end());
      std::sort(generators.begin(), generators.end());
      generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
      changed = true;
    }
  }
  return FiniteSpace{size, std::move(generators)};
}

FiniteSpace space_from_poset(const FinitePoset& p) {
  return FiniteSpace{p.size, down_sets(p)};
}

void validate_space(const FiniteSpace& x) {
  if (x.size < 0 || x.size > kMaxCarrier)
    throw Error(ErrorCode::CarrierTooLarge, "carrier size out of range", x.size);
  if (!std::is_sorted(x.opens.begin(), x.opens.end()))
    throw Error(ErrorCode::BadInput, "open family not canonically sorted");
  if (std::adjacent_find(x.opens.begin(), x.opens.end()) != x.opens.end())
    throw Error(ErrorCode::BadInput, "open family has duplicates");
  if (!x.is_open(Mask::empty(x.size)) || !x.is_open(Mask::full(x.size)))
    throw Error(ErrorCode::BadInput, "open family misses the empty or full set");
  for (const auto& u : x.opens) {
    if (u.width != x.size) throw Error(ErrorCode::BadInput, "open set width mismatch");
    for (const auto& v : x.opens)
      if (!x.is_open(u | v) || !x.is_open(u & v))
        throw Error(ErrorCode::BadInput, "open family not closed under union/intersection");
  }
}

bool is_t0(const FiniteSpace& x) {
  for (int a = 0; a < x.size; ++a)
    for (int b = a + 1; b < x.size; ++b) {
      bool separated = false;
      for (const auto& u : x.opens)
        if (u.test(a) != u.test(b)) {
          separated = true;
          break;
        }
      if (!separated) return false;
    }
  return true;
}

std::vector<Mask> blobs(const FiniteSpace& x) {
  std::vector<Mask> out(x.size, Mask::full(x.size));
  for (const auto& u : x.opens)
    for (int a = 0; a < x.size; ++a)
      if (u.test(a)) out[a] = out[a] & u;
  return out;
}

FinitePoset specialization_order(const FiniteSpace& x) {
  auto blob = blobs(x);
  FinitePoset p;
  p.size = x.size;
  p.below = blob;  // x <= a iff x lies in every open around a, i.e. in blob(a)
  for (int a = 0; a < x.size; ++a)
    for (int b = a + 1; b < x.size; ++b)
      if (p.leq(a, b) && p.leq(b, a))
        throw Error(ErrorCode::NotT0, "points " + std::to_string(a) + " and " +
                        std::to_string(b) + " are topologically indistinguishable",
                    a, b);
  return p;
}

std::vector<Mask> open_blob_family(const FiniteSpace& x) {
  auto out = blobs(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Mask> closed_sets_of(const FiniteSpace& x) {
  std::vector<Mask> out;
  out.reserve(x.opens.size());
  for (const auto& u : x.opens) out.push_back(u.complement());
  std::sort(out.begin(), out.end());
  return out;
}

Mask closure_of(const FiniteSpace& x, Mask points) {
  Mask c = Mask::full(x.size);
  for (const auto& u : x.opens) {
    Mask closed = u.complement();
    if (points.subset_of(closed)) c = c & closed;
  }
  return c;
}

std::vector<Mask> irreducible_closed_sets(const FiniteSpace& x) {
  // C is irreducible iff C meets U and V open implies C meets U n V; it
  // suffices to test pairs of blobs since every open is a union of blobs.
  auto blob = blobs(x);
  std::vector<Mask> out;
  for (const auto& c : closed_sets_of(x)) {
    if (c.empty_set()) continue;
    bool irreducible = true;
    for (int a = 0; a < x.size && irreducible; ++a) {
      if ((c & blob[a]).empty_set()) continue;
      for (int b = a + 1; b < x.size && irreducible; ++b) {
        if ((c & blob[b]).empty_set()) continue;
        if ((c & blob[a] & blob[b]).empty_set()) irreducible = false;
      }
    }
    if (irreducible) out.push_back(c);
  }
  return out;
}

IrreducibleIntersectionReport intersections_of_irreducibles(const FiniteSpace& x) {
  std::vector<Mask> point_closures;
  for (int a = 0; a < x.size; ++a)
    point_closures.push_back(closure_of(x, Mask::singleton(a, x.size)));
  auto is_point_closure = [&](const Mask& c) {
    int witnesses = 0;
    for (const auto& pc : point_closures)
      if (pc == c) ++witnesses;
    return witnesses == 1;  // "closure of a unique point"
  };

  // Incrementally intersect point closures, tracking which point set produced
  // each value. Stops at the first value that is no point closure; while the
  // condition holds the family stays at most size+1 values, so this visits
  // every realizable intersection without sweeping all 2^size subsets.
  std::vector<std::pair<Mask, Mask>> family;  // (value, generating point set)
  family.push_back({Mask::full(x.size), Mask::empty(x.size)});
  if (!is_point_closure(Mask::full(x.size)))
    return {false, Mask::empty(x.size)};  // empty family: no generic point
  for (int a = 0; a < x.size; ++a) {
    std::vector<std::pair<Mask, Mask>> additions;
    Mask single = Mask::singleton(a, x.size);
    additions.push_back({point_closures[a], single});
    for (const auto& [value, src] : family) {
      Mask v = value & point_closures[a];
      additions.push_back({v, src | single});
    }
    for (const auto& add : additions) {
      bool seen = false;
      for (const auto& [value, src] : family) seen = seen || value == add.first;
      if (seen) continue;
      if (!is_point_closure(add.first)) return {false, add.second};
      family.push_back(add);
    }
  }
  return {true, std::nullopt};
}

FiniteSpace soberify(const FinitePoset& p) {
  validate_poset(p);
  if (!top_of(p)) throw Error(ErrorCode::NoTop, "poset has no greatest element");
  if (!is_meet_semilattice(p))
    throw Error(ErrorCode::NotMeetSemilattice, "poset is missing pairwise meets");
  FiniteSpace lower = space_from_poset(p);
  auto irr = irreducible_closed_sets(lower);
  std::sort(irr.begin(), irr.end());
  const int n = static_cast<int>(irr.size());
  std::vector<Mask> opens;
  opens.reserve(lower.opens.size());
  for (const auto& u : lower.opens) {
    Mask hat = Mask::empty(n);
    for (int i = 0; i < n; ++i)
      if (!(irr[i] & u).empty_set()) hat.set(i);
    opens.push_back(hat);
  }
  return from_open_family(n, std::move(opens));
}

namespace {

// Backtracking over order isomorphisms in ascending image order; the callback
// may return true to stop the search.
class OrderIsoSearch {
 public:
  OrderIsoSearch(const FinitePoset& a, const FinitePoset& b) : a_(a), b_(b) {}

  template <typename Fn>
  bool run(Fn&& accept) {
    if (a_.size != b_.size) return false;
    image_.assign(a_.size, -1);
    used_.assign(a_.size, false);
    return place(0, accept);
  }

 private:
  template <typename Fn>
  bool place(int i, Fn&& accept) {
    if (i == a_.size) return accept(image_);
    for (int c = 0; c < b_.size; ++c) {
      if (used_[c]) continue;
      if (a_.below[i].count() != b_.below[c].count()) continue;
      if (a_.above(i).count() != b_.above(c).count()) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = a_.leq(j, i) == b_.leq(image_[j], c) && a_.leq(i, j) == b_.leq(c, image_[j]);
      if (!ok) continue;
      image_[i] = c;
      used_[c] = true;
      if (place(i + 1, accept)) return true;
      used_[c] = false;
      image_[i] = -1;
    }
    return false;
  }

  const FinitePoset& a_;
  const FinitePoset& b_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<int>> homeomorphic(const FiniteSpace& x, const FiniteSpace& y) {
  if (x.size != y.size || x.opens.size() != y.opens.size()) return std::nullopt;
  FinitePoset px = specialization_order(x);
  FinitePoset py = specialization_order(y);
  std::optional<std::vector<int>> result;
  OrderIsoSearch search(px, py);
  search.run([&](const std::vector<int>& image) {
    result = image;
    return true;  // ascending search: first hit is lexicographically least
  });
  return result;
}

BasedSpace make_based_space(FiniteSpace space, std::vector<Mask> members) {
  validate_space(space);
  if (space.size == 0)
    throw Error(ErrorCode::BadInput, "based spaces must be nonempty");
  if (!is_t0(space)) throw Error(ErrorCode::NotT0, "based spaces must be T0");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (const auto& m : members)
    if (!space.is_open(m))
      throw Error(ErrorCode::BaseNotMonoidal, "base member " + m.to_string() + " is not open");
  if (members.empty() || members.back() != Mask::full(space.size))
    throw Error(ErrorCode::BaseNotMonoidal, "base must contain the whole space");
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!std::binary_search(members.begin(), members.end(), members[i] & members[j]))
        throw Error(ErrorCode::BaseNotMonoidal,
                    "base not closed under intersection: " + members[i].to_string() + " n " +
                        members[j].to_string());
  for (const auto& u : space.opens) {
    Mask covered = Mask::empty(space.size);
    for (const auto& m : members)
      if (m.subset_of(u)) covered = covered | m;
    if (covered != u)
      throw Error(ErrorCode::BaseNotMonoidal, "open " + u.to_string() + " is not a union of base members");
  }
  return BasedSpace{std::move(space), std::move(members)};
}

BasedSpace spec_based_space(const SpecSpace& s) {
  return make_based_space(space_from_poset(s.order), s.d_base);
}

bool is_m_morphism(const BasedSpace& dom, const BasedSpace& cod, const std::vector<int>& f) {
  if (f.size() != static_cast<std::size_t>(dom.space.size)) return false;
  for (int v : f)
    if (v < 0 || v >= cod.space.size) return false;
  for (const auto& v : cod.base) {
    Mask pre = Mask::empty(dom.space.size);
    for (int x = 0; x < dom.space.size; ++x)
      if (v.test(f[x])) pre.set(x);
    if (!std::binary_search(dom.base.begin(), dom.base.end(), pre)) return false;
  }
  return true;
}

std::vector<std::vector<int>> all_m_morphisms(const BasedSpace& dom, const BasedSpace& cod) {
  const int n = dom.space.size;
  const int k = cod.space.size;
  double total = 1;
  for (int i = 0; i < n; ++i) total *= k;
  if (total > 1e7)
    throw Error(ErrorCode::SearchSpaceTooLarge, "too many candidate maps to enumerate");
  std::vector<std::vector<int>> out;
  std::vector<int> f(n, 0);
  while (true) {
    if (is_m_morphism(dom, cod, f)) out.push_back(f);
    int i = 0;
    while (i < n && ++f[i] == k) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

bool m_isomorphic(const BasedSpace& a, const BasedSpace& b) {
  if (a.space.size != b.space.size) return false;
  if (a.base.size() != b.base.size()) return false;
  if (a.space.opens.size() != b.space.opens.size()) return false;
  FinitePoset pa = specialization_order(a.space);
  FinitePoset pb = specialization_order(b.space);
  OrderIsoSearch search(pa, pb);
  return search.run([&](const std::vector<int>& image) {
    std::vector<Mask> mapped;
    mapped.reserve(a.base.size());
    for (const auto& m : a.base) {
      Mask im = Mask::empty(b.space.size);
      for (int x = 0; x < a.space.size; ++x)
        if (m.test(x)) im.set(image[x]);
      mapped.push_back(im);
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == b.base;
  });
}

namespace {

void base_search(const std::vector<Mask>& extras, std::size_t index, std::vector<Mask>& chosen,
                 const std::vector<Mask>& forced, std::size_t budget, std::size_t& visited,
                 std::vector<std::vector<Mask>>& out) {
  if (++visited > budget)
    throw Error(ErrorCode::SearchSpaceTooLarge, "monoidal base search exceeded budget");
  if (index == extras.size()) {
    std::vector<Mask> base = forced;
    base.insert(base.end(), chosen.begin(), chosen.end());
    std::sort(base.begin(), base.end());
    out.push_back(std::move(base));
    return;
  }
  base_search(extras, index + 1, chosen, forced, budget, visited, out);
  // include extras[index]: all intersections with already-present members must
  // already be present (they are numerically smaller, hence decided)
  const Mask& e = extras[index];
  auto present = [&](const Mask& m) {
    return m == e || std::binary_search(forced.begin(), forced.end(), m) ||
           std::find(chosen.begin(), chosen.end(), m) != chosen.end();
  };
  bool ok = true;
  for (const auto& s : forced)
    if (!present(e & s)) {
      ok = false;
      break;
    }
  for (const auto& s : chosen) {
    if (!ok) break;
    if (!present(e & s)) ok = false;
  }
  if (ok) {
    chosen.push_back(e);
    base_search(extras, index + 1, chosen, forced, budget, visited, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Mask>> monoidal_bases(const FiniteSpace& x, std::size_t budget) {
  // every monoidal base contains all blobs and the whole carrier, hence their
  // intersection closure; candidates are intersection-closed families between
  // that kernel and the full open family
  std::vector<Mask> forced = open_blob_family(x);
  forced.push_back(Mask::full(x.size));
  std::sort(forced.begin(), forced.end());
  forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> fresh;
    for (std::size_t i = 0; i < forced.size(); ++i)
      for (std::size_t j = i + 1; j < forced.size(); ++j) {
        Mask m = forced[i] & forced[j];
        if (!std::binary_search(forced.begin(), forced.end(), m)) fresh.push_back(m);
      }
    if (!fresh.empty()) {
      forced.insert(forced.end(), fresh.begin(), fresh.end());
      std::sort(forced.begin(), forced.end());
      forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
      grew = true;
    }
  }
  std::vector<Mask> extras;
  for (const auto& u : x.opens)
    if (!std::binary_search(forced.begin(), forced.end(), u)) extras.push_back(u);
  std::sort(extras.begin(), extras.end());  // subsets precede supersets
  std::vector<std::vector<Mask>> out;
  std::vector<Mask> chosen;
  std::size_t visited = 0;
  base_search(extras, 0, chosen, forced, budget, visited, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::string to_dot(const FinitePoset& p) {
  std::string dot = "digraph order {\n  rankdir=BT;\n";
  for (int a = 0; a < p.size; ++a) dot += "  " + std::to_string(a) + ";\n";
  for (int a = 0; a < p.size; ++a)
    for (int b = 0; b < p.size; ++b) {
      if (a == b || !p.leq(a, b)) continue;
      bool covering = true;
      for (int z = 0; z < p.size && covering; ++z)
        if (z != a && z != b && p.leq(a, z) && p.leq(z, b)) covering = false;
      if (covering) dot += "  " + std::to_string(a) + " -> " + std::to_string(b) + ";\n";
    }
  dot += "}\n";
  return dot;
}

}  // namespace katospec
