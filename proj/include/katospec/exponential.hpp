#pragma once

#include <vector>

#include "katospec/semilattice.hpp"

namespace katospec {

// A point of the exponential: the class of all subsets A of the source that
// lie in exactly the base members listed in `filter`. The canonical
// representative is the largest member of the class, the intersection of the
// filter's base members.
struct ExpPoint {
  Mask filter;         // over source base indices
  Mask canonical_rep;  // over the source carrier
};

struct ExpSpace {
  BasedSpace source;
  BasedSpace based;              // the exponential with base {tilde U}
  std::vector<ExpPoint> points;  // aligned with based.space points, sorted by filter
  std::vector<Mask> tilde_base;  // tilde_base[u] = classes containing u, aligned with source base
  std::vector<int> i_map;        // source point -> index of the singleton's class
};

// Quotient of the power set of the source by same-base-membership. Classes
// are keyed by their filters; the realizable filters are exactly the
// intersections of point filters (plus the full filter for the empty set),
// so no 2^|X| sweep is materialized.
ExpSpace exponential(const BasedSpace& a);

int class_index_of(const ExpSpace& e, const Mask& a);
ExpPoint class_of(const ExpSpace& e, const Mask& a);

// Functorial action on a morphism f between the sources: [A] -> [f(A)].
// Validates that preimages of codomain base members lie in the domain base.
std::vector<int> e_on_map(const ExpSpace& ex, const ExpSpace& ey, const std::vector<int>& f);

// The sup-preserving extension of theta through i: [A] -> sup(theta(A)).
// theta must be a base-respecting map from the source of ex into the target.
std::vector<int> hat_theta(const ExpSpace& ex, const McjsWitness& target,
                           const std::vector<int>& theta_map);

// Convenience overload that checks the target; throws TargetNotMCJS.
std::vector<int> hat_theta(const ExpSpace& ex, const BasedSpace& target,
                           const std::vector<int>& theta_map);

// True iff i_{E(A)} : E(A) -> E(E(A)) is an isomorphism of based spaces.
bool check_idempotent(const BasedSpace& a);

}  // namespace katospec
