#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "katospec/mask.hpp"
#include "katospec/monoid.hpp"
#include "katospec/poset.hpp"

namespace katospec {

// Finite topological space on points 0..size-1. `opens` is the full open-set
// family: closed under union and intersection, containing the empty set and
// the whole carrier, deduplicated and canonically sorted.
struct FiniteSpace {
  int size = 0;
  std::vector<Mask> opens;

  bool is_open(const Mask& u) const;
};

// Topology generated by the family: closure under pairwise union and
// intersection plus the empty and full sets. Idempotent.
FiniteSpace from_open_family(int size, std::vector<Mask> generators);

// The Alexandrov space of a poset: opens are exactly the down-sets.
FiniteSpace space_from_poset(const FinitePoset& p);

void validate_space(const FiniteSpace& x);

bool is_t0(const FiniteSpace& x);

// x <= y iff every open containing y contains x iff y lies in closure{x}.
// Throws NotT0 when point membership does not separate points.
FinitePoset specialization_order(const FiniteSpace& x);

// blob(a) = intersection of all opens containing a; equals {x : x <= a} and
// is itself open in a finite space.
std::vector<Mask> blobs(const FiniteSpace& x);

// Distinct blob values, canonically sorted. In a finite space every open is
// a union of blobs, so this family is always a base.
std::vector<Mask> open_blob_family(const FiniteSpace& x);

std::vector<Mask> closed_sets_of(const FiniteSpace& x);
Mask closure_of(const FiniteSpace& x, Mask points);

// Nonempty closed sets that are not the union of two proper closed subsets.
std::vector<Mask> irreducible_closed_sets(const FiniteSpace& x);

// Checks that the intersection of every subfamily of irreducible closed sets
// is the closure of exactly one point. The empty subfamily requires the whole
// space to be a point closure, i.e. a generic point. Evaluated through
// point-closure intersections over all point sets A, which enumerate the same
// intersections because finite irreducible closed sets are point closures.
// Does not require T0; uniqueness is part of the check.
struct IrreducibleIntersectionReport {
  bool all_point_closures = true;
  std::optional<Mask> counterexample;  // point set A whose closure intersection fails
};

IrreducibleIntersectionReport intersections_of_irreducibles(const FiniteSpace& x);

// Space of irreducible closed sets of the down-set topology on a meet
// semilattice with top, with opens induced from the lower order ideals.
// Throws NoTop / NotMeetSemilattice when the input does not qualify.
FiniteSpace soberify(const FinitePoset& p);

// Lexicographically least homeomorphism as a point map, if one exists. For
// finite T0 spaces this is exactly an isomorphism of specialization orders.
std::optional<std::vector<int>> homeomorphic(const FiniteSpace& x, const FiniteSpace& y);

// A T0 space with a monoidal base: the base contains the whole carrier, is
// closed under pairwise intersection, and generates the topology by unions.
struct BasedSpace {
  FiniteSpace space;
  std::vector<Mask> base;  // deduplicated, canonically sorted
};

// Validates T0 and the monoidal base laws; rejects the empty space.
BasedSpace make_based_space(FiniteSpace space, std::vector<Mask> members);

// The spectrum as a based space: down-set topology on the prime inclusion
// order with the D(f) family as base.
BasedSpace spec_based_space(const SpecSpace& s);

bool is_m_morphism(const BasedSpace& dom, const BasedSpace& cod, const std::vector<int>& f);

// All functions dom -> cod whose preimages of codomain base members lie in
// the domain base. Intended for small spaces.
std::vector<std::vector<int>> all_m_morphisms(const BasedSpace& dom, const BasedSpace& cod);

// True iff some homeomorphism matches the bases bijectively, i.e. the based
// spaces are isomorphic objects (invertible both ways).
bool m_isomorphic(const BasedSpace& a, const BasedSpace& b);

// Every monoidal base of the space: each contains all blobs and the whole
// carrier. Throws SearchSpaceTooLarge when more than `budget` candidate
// families would need checking.
std::vector<std::vector<Mask>> monoidal_bases(const FiniteSpace& x, std::size_t budget = 1 << 20);

std::string to_dot(const FinitePoset& p);

}  // namespace katospec
