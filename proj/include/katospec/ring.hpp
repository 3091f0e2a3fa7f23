#pragma once

#include <vector>

#include "katospec/space.hpp"

namespace katospec {

// Finite product of Z/n_i rings. Elements are mixed-radix tuples packed into
// 0..size-1 with the first factor varying fastest; tables are materialized at
// construction and the ring laws are verified on all pairs and triples.
struct FiniteRing {
  std::vector<int> factors;
  int size = 1;
  int one = 0;
  std::vector<int> add_table;
  std::vector<int> mul_table;

  int add(int a, int b) const { return add_table[a * size + b]; }
  int mul(int a, int b) const { return mul_table[a * size + b]; }
};

FiniteRing make_ring(std::vector<int> factors);

// Definitional test: additive subgroup, absorbs multiplication, proper, and
// the complement is closed under products.
bool is_ring_prime(const FiniteRing& r, const Mask& subset);

// All prime ideals, canonically sorted. Exhaustive membership search with
// closure pruning (sums and ring multiples stay inside, products of outside
// elements stay outside); every leaf is re-verified definitionally.
std::vector<Mask> ring_spec(const FiniteRing& r);

FiniteMonoid mult_monoid(const FiniteRing& r);

// The Zariski spectrum as a based space: points are the ring primes, base
// members the sets D(f) = {p : f not in p}.
BasedSpace ring_spec_based_space(const FiniteRing& r);

// Monoid primes of (R,.) = arbitrary unions of ring primes.
bool check_unions_of_primes(const FiniteRing& r);

// E(Spec R, D-base) and spec(R,.) with its D-base are isomorphic based
// spaces.
bool check_exp_example(const FiniteRing& r);

}  // namespace katospec
