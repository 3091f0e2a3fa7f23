#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "katospec/monoid.hpp"
#include "katospec/poset.hpp"

namespace katospec {

// Every commutative monoid table on {0..order-1} with unit 0, labeled (no
// isomorphism rejection). Backtracks over the upper triangle with incremental
// associativity pruning.
std::vector<FiniteMonoid> all_labeled_monoids(int order);  // order <= 5

// One representative per isomorphism class, the lexicographically least
// table over relabelings fixing the unit at 0.
std::vector<FiniteMonoid> enumerate_monoids(int order);  // order <= 5

// Lexicographically least table over relabelings sending the unit to 0.
std::vector<int> canonical_monoid_table(const FiniteMonoid& m);  // order <= 8

// Seeded distinct picks from the labeled census. Uniform over labeled
// tables, so classes with smaller automorphism groups are more likely; the
// returned picks are sorted by census index.
std::vector<FiniteMonoid> sample_monoids(int order, int count, std::uint64_t seed);

// All posets up to isomorphism, canonical representatives in sorted order.
std::vector<FinitePoset> enumerate_posets(int size);  // size <= 6

// One line of the sweep: which object, its canonical hash, and the verdicts
// of every check run against it.
struct CensusRow {
  std::string kind;  // "monoid", "monoid-sample" or "space"
  int param = 0;     // monoid order or space size
  int index = 0;     // position within the enumeration (census index for samples)
  std::uint64_t canonical_hash = 0;
  bool is_spectrum = false;
  std::vector<std::string> checks;  // names of the checks that ran
  std::vector<bool> results;        // aligned verdicts
};

struct SuiteResult {
  int max_order = 0;
  int max_size = 0;
  std::uint64_t seed = 0;
  int monoids_checked = 0;
  int spaces_checked = 0;
  std::vector<CensusRow> rows;
  std::vector<std::string> failures;

  bool all_pass() const { return failures.empty(); }
};

// The theorem sweep: spectra of every monoid up to max_order (order 5 comes
// as a 200-table seeded sample), spaces of every poset up to max_size.
// Deterministic for fixed arguments.
SuiteResult run_suite(int max_order, int max_size, std::uint64_t seed);

}  // namespace katospec
