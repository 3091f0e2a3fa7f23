#pragma once

#include <optional>
#include <vector>

#include "katospec/mask.hpp"
#include "katospec/poset.hpp"

namespace katospec {

// Commutative monoid on the carrier {0, ..., order-1} given by its Cayley
// table. Construct through validate_monoid so the laws are guaranteed.
struct FiniteMonoid {
  int order = 0;
  int unit = 0;
  std::vector<int> table;  // row-major, table[i*order + j] = i*j

  int mul(int i, int j) const { return table[i * order + j]; }
};

struct MonoidLawViolation {
  ErrorCode code;  // EntryOutOfRange, BadUnit, NotCommutative or NotAssociative
  int i = -1, j = -1, k = -1;
};

// First violated law in check order: entry range, unit law, commutativity,
// associativity; witnesses are the lexicographically first offending indices.
std::optional<MonoidLawViolation> find_law_violation(int order, int unit,
                                                     const std::vector<int>& table);

// Throws Error carrying the violation witnesses if any law fails.
FiniteMonoid validate_monoid(int order, int unit, std::vector<int> table);

// True iff the subset absorbs multiplication and its complement is a
// submonoid (so contains the unit and is closed under products). The empty
// set always qualifies.
bool is_prime_ideal(const FiniteMonoid& m, Mask subset);

// All prime ideals in canonical order (bit patterns ascending, so the empty
// ideal comes first). Uses complement-first search: decide element by element
// whether it joins the ideal or the complementary submonoid, propagating
// ideal closure and product closure.
std::vector<Mask> enumerate_primes(const FiniteMonoid& m);

// The Kato spectrum: prime ideals, the basic opens D(f) = {p : f not in p}
// as point-index masks, and the inclusion order.
struct SpecSpace {
  FiniteMonoid monoid;
  std::vector<Mask> points;  // primes, sorted canonically; width = monoid order
  std::vector<Mask> d_base;  // per element f: width = #points
  FinitePoset order;         // p <= q iff p subset of q
};

SpecSpace spec(const FiniteMonoid& m);

// A closed set V of the spectrum paired with the ideal cutting it out:
// for nonempty V, ideal = intersection of the primes in V and V = V(ideal);
// the empty closed set carries no ideal.
struct ClosedSetEntry {
  std::optional<Mask> ideal;  // subset of the monoid carrier
  Mask points;                // subset of spectrum points
};

std::vector<ClosedSetEntry> closed_sets(const SpecSpace& s);

// Decides the basic-open containment  D(f_1) n ... n D(f_k)  within D(g)
// via the saturation q = {h : exists t with t*h a product of family members}.
// When containment holds the returned subfamily indices witness it; when it
// fails, witness_prime lies in every D(f) but not in D(g).
struct StarWitnessResult {
  bool contained = false;
  std::vector<int> subfamily;         // indices into the family argument
  std::optional<Mask> witness_prime;  // present iff !contained
};

StarWitnessResult star_witness(const FiniteMonoid& m, const std::vector<int>& family, int g);

}  // namespace katospec
