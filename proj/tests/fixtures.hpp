#pragma once
// Small builders shared by the unit tests.
#include <vector>

#include "katospec/monoid.hpp"
#include "katospec/space.hpp"

namespace fx {

using katospec::Mask;

inline Mask mk(std::initializer_list<int> members, int width) {
  return katospec::mask_from_members(std::vector<int>(members), width);
}

inline katospec::FiniteMonoid trivial_monoid() { return katospec::validate_monoid(1, 0, {0}); }

// {1,a} with a*a = a
inline katospec::FiniteMonoid idempotent2() { return katospec::validate_monoid(2, 0, {0, 1, 1, 1}); }

// {1,a} with a*a = 1
inline katospec::FiniteMonoid group2() { return katospec::validate_monoid(2, 0, {0, 1, 1, 0}); }

// (Z/n, *)
inline katospec::FiniteMonoid zmod_mult(int n) {
  std::vector<int> t(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = (i * j) % n;
  return katospec::validate_monoid(n, 1, t);
}

// chain 0 > 1 > ... > k-1 under min-index... product = the lower element,
// i.e. max of the indices; unit is index 0
inline katospec::FiniteMonoid chain_monoid(int k) {
  std::vector<int> t(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[i * k + j] = std::max(i, j);
  return katospec::validate_monoid(k, 0, t);
}

// opens {}, {0}, {0,1}: point 0 generic, point 1 closed
inline katospec::FiniteSpace sierpinski() {
  return katospec::from_open_family(2, {mk({0}, 2)});
}

inline katospec::FiniteSpace discrete(int n) {
  std::vector<Mask> singletons;
  for (int i = 0; i < n; ++i) singletons.push_back(Mask::singleton(i, n));
  return katospec::from_open_family(n, singletons);
}

inline katospec::FiniteSpace indiscrete2() { return katospec::from_open_family(2, {}); }

inline katospec::BasedSpace sier_blob_base() {
  auto x = sierpinski();
  return katospec::make_based_space(x, {mk({0}, 2), mk({0, 1}, 2)});
}

inline katospec::BasedSpace one_point_base_full() {
  auto x = katospec::from_open_family(1, {});
  return katospec::make_based_space(x, {mk({0}, 1)});
}

inline katospec::BasedSpace one_point_base_with_empty() {
  auto x = katospec::from_open_family(1, {});
  return katospec::make_based_space(x, {mk({}, 1), mk({0}, 1)});
}

}  // namespace fx
