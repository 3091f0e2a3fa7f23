#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "katospec/space.hpp"

namespace katospec {

// An order together with the least upper bound of every subset, tabulated so
// later checks are O(1) per query. Subsets are indexed by their bit pattern;
// the empty subset maps to the least element.
struct JoinStructure {
  FinitePoset order;
  std::vector<int> sup;  // size 1 << order.size

  int sup_of_subset(const Mask& a) const { return sup[a.bits]; }
};

// A based space whose specialization order has all suprema and satisfies
// A subset of U  <=>  sup(A) in U  for every base member U.
struct McjsWitness {
  BasedSpace based;
  JoinStructure join;
};

struct McjsOutcome {
  std::optional<McjsWitness> witness;
  // set when the witness is absent: either a subset with no least upper
  // bound, or a (subset, base index) pair violating the sup condition
  std::optional<Mask> subset_without_sup;
  std::optional<std::pair<Mask, int>> base_violation;

  bool ok() const { return witness.has_value(); }
};

// Decides whether the based space is a complete join semilattice compatible
// with its base, for the specialization order (the only admissible order).
// Tabulates sup over all subsets; carriers above 16 points are rejected.
McjsOutcome check_mcjs(const BasedSpace& a);

// The monoid (B, n): carrier = deduplicated base members in canonical order,
// product = intersection, unit = the member containing all others. The legend
// maps carrier indices back to the members.
struct UniversalSemilattice {
  FiniteMonoid monoid;
  std::vector<Mask> legend;
};

UniversalSemilattice universal_semilattice(std::vector<Mask> base);

// phi(x) = {U in B : x not in U} as a subset of the carrier of (B, n);
// always a prime ideal for a monoidal base (verified; ImageNotPrime if not).
std::vector<Mask> phi(const BasedSpace& a);

// theta(p) = sup of the intersection of all base members outside p. Satisfies
// theta(phi(x)) = x whenever the space is a complete join semilattice.
int theta(const BasedSpace& a, const JoinStructure& join, const Mask& p);

// True iff phi is a bijection from the points onto the spectrum of (B, n)
// carrying each base member V to the basic open {p : V not in p} — i.e. a
// homeomorphism realizing the space as a semilattice spectrum.
bool check_spec_homeomorphism(const BasedSpace& a);

// The prime ideal {U in B : U contains no finite intersection of the family}
// of (B, n), for a nonempty family of base members. Since the family is
// finite this is {U : U does not contain the total intersection}.
Mask weakprop2_prime(const BasedSpace& a, const std::vector<Mask>& family);

}  // namespace katospec
