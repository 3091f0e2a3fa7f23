#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "katospec/mask.hpp"

namespace katospec {

// Finite partial order on points 0..size-1.
//
// Throughout the project, orders follow the spectral convention: x <= y means
// every open set containing y contains x, equivalently y lies in the closure
// of {x}. Least elements are generic, open sets are down-sets, and suprema of
// prime ideals are unions.
struct FinitePoset {
  int size = 0;
  std::vector<Mask> below;  // below[a] = {x : x <= a}, always contains a

  bool leq(int x, int y) const { return below[y].test(x); }
  Mask above(int a) const {
    Mask m = Mask::empty(size);
    for (int y = 0; y < size; ++y)
      if (leq(a, y)) m.set(y);
    return m;
  }
};

// Builds a poset from a list of x <= y pairs; reflexivity and transitivity are
// completed automatically, antisymmetry violations are rejected.
FinitePoset make_poset(int size, const std::vector<std::pair<int, int>>& le_pairs);

// Checks reflexivity, antisymmetry and transitivity on all pairs/triples.
void validate_poset(const FinitePoset& p);

std::optional<int> top_of(const FinitePoset& p);     // greatest element
std::optional<int> bottom_of(const FinitePoset& p);  // least element

// Greatest lower bound of {a, b}, if it exists.
std::optional<int> meet_of(const FinitePoset& p, int a, int b);
bool is_meet_semilattice(const FinitePoset& p);

// Least upper bound of a subset of points (empty subset -> bottom), if any.
std::optional<int> sup_of(const FinitePoset& p, Mask subset);

// True iff every subset, the empty one included, has a least upper bound.
bool has_all_sups(const FinitePoset& p);

// All down-sets (lower order ideals) of the poset, canonically sorted.
std::vector<Mask> down_sets(const FinitePoset& p);

FinitePoset induced_poset(const FinitePoset& p, const std::vector<int>& perm);

// below-matrix rows of the lexicographically smallest permuted copy; two
// posets are isomorphic iff their canonical forms are equal.
std::vector<std::uint64_t> canonical_form(const FinitePoset& p);

std::uint64_t fnv1a_words(const std::vector<std::uint64_t>& words);

}  // namespace katospec
