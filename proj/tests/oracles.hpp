#pragma once
// Reference implementations used only by tests: definition-level filters and
// raw orbit counting over whole search spaces, sharing no code path with the
// library's pruned searches.
#include <cstdint>
#include <vector>

#include "katospec/poset.hpp"
#include "katospec/space.hpp"

namespace oracle {

// Every subset of the carrier, kept iff it satisfies the prime-ideal
// definition verbatim: absorbing, unit outside, complement product-closed.
std::vector<std::uint64_t> primes_by_filter(int order, int unit, const std::vector<int>& table);

// Reflexive antisymmetric transitive relations on n labeled points, counted
// by sweeping all 2^(n*(n-1)) off-diagonal assignments (n <= 5).
long labeled_posets(int n);

// Distinct labelings of one poset: the size of its relabeling orbit.
long labelings_of(const katospec::FinitePoset& p);

// Commutative associative tables with a unit anywhere on the carrier,
// swept raw over all order^(order^2) tables (order <= 3).
struct MonoidCensus {
  long tables_any_unit = 0;
  long tables_unit_zero = 0;
  long classes = 0;  // up to relabeling
};
MonoidCensus monoid_census(int order);

// Classes of subsets under same-base-membership, built by sweeping the whole
// power set of the carrier. filters[c] = bit u set iff class c lies inside
// base member u; classes sorted by filter. tilde[u] = classes inside member u.
struct LiteralExp {
  std::vector<std::uint64_t> filters;
  std::vector<std::uint64_t> tilde;
};
LiteralExp literal_exponential(const katospec::BasedSpace& a);

}  // namespace oracle
