#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "katospec/enumerate.hpp"
#include "katospec/semilattice.hpp"

using namespace katospec;
using fx::mk;

TEST_CASE("spectra carry complete join structure with sup = union") {
  auto s = spec(fx::zmod_mult(6));
  auto based = spec_based_space(s);
  auto outcome = check_mcjs(based);
  REQUIRE(outcome.ok());
  const auto& join = outcome.witness->join;
  const int n = static_cast<int>(s.points.size());
  for (std::uint64_t a = 0; a < (1ull << n); ++a) {
    Mask subset(a, n);
    Mask unioned = Mask::empty(6);
    for (int i : subset.members()) unioned = unioned | s.points[i];
    CHECK(s.points[join.sup_of_subset(subset)] == unioned);
  }
}

TEST_CASE("sup tables of the Sierpinski base") {
  auto outcome = check_mcjs(fx::sier_blob_base());
  REQUIRE(outcome.ok());
  const auto& join = outcome.witness->join;
  CHECK(join.sup_of_subset(mk({}, 2)) == 0);
  CHECK(join.sup_of_subset(mk({0}, 2)) == 0);
  CHECK(join.sup_of_subset(mk({1}, 2)) == 1);
  CHECK(join.sup_of_subset(mk({0, 1}, 2)) == 1);
}

TEST_CASE("adding the empty set to the base breaks the sup condition") {
  auto based = make_based_space(fx::sierpinski(), {mk({}, 2), mk({0}, 2), Mask::full(2)});
  auto outcome = check_mcjs(based);
  CHECK_FALSE(outcome.ok());
  REQUIRE(outcome.base_violation.has_value());
  CHECK(outcome.base_violation->first == mk({}, 2));  // the empty family
  CHECK(outcome.base_violation->second == 0);         // against the empty base member
}

TEST_CASE("intersection monoid of a base") {
  auto trivial = universal_semilattice({Mask::full(1)});
  CHECK(trivial.monoid.order == 1);

  auto sier = universal_semilattice({mk({0}, 2), Mask::full(2)});
  CHECK(sier.monoid.order == 2);
  CHECK(sier.monoid.unit == 1);
  CHECK(sier.monoid.table == std::vector<int>{0, 0, 0, 1});
  CHECK(sier.legend[0] == mk({0}, 2));
  CHECK(sier.legend[1] == Mask::full(2));

  auto s6 = spec(fx::zmod_mult(6));
  auto usl = universal_semilattice(s6.d_base);
  REQUIRE(usl.monoid.order == 4);  // distinct D values form the diamond
  CHECK(usl.monoid.unit == 3);
  CHECK(usl.monoid.table ==
        std::vector<int>{0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3});
}

TEST_CASE("non-monoidal base families are rejected") {
  CHECK_THROWS_AS(universal_semilattice({}), Error);
  // no member containing all others
  CHECK_THROWS_AS(universal_semilattice({mk({0}, 2), mk({1}, 2)}), Error);
  // not intersection-closed
  CHECK_THROWS_AS(universal_semilattice({mk({0}, 3), mk({1}, 3), Mask::full(3)}), Error);
}

TEST_CASE("phi sends points to the primes of base sets avoiding them") {
  auto based = fx::sier_blob_base();
  auto images = phi(based);
  CHECK(images[0] == mk({}, 2));   // generic point lies in every base open
  CHECK(images[1] == mk({0}, 2));  // closed point misses {g}

  auto one = fx::one_point_base_full();
  CHECK(phi(one)[0] == mk({}, 1));
}

TEST_CASE("theta recovers the point from its prime") {
  auto based = fx::sier_blob_base();
  auto join = check_mcjs(based).witness->join;
  CHECK(theta(based, join, mk({}, 2)) == 0);
  CHECK(theta(based, join, mk({0}, 2)) == 1);

  auto one = fx::one_point_base_full();
  auto join1 = check_mcjs(one).witness->join;
  CHECK(theta(one, join1, mk({}, 1)) == 0);
}

TEST_CASE("phi and theta invert each other on spectra") {
  for (int order = 1; order <= 3; ++order)
    for (const auto& m : enumerate_monoids(order)) {
      auto s = spec(m);
      auto based = spec_based_space(s);
      auto join = check_mcjs(based).witness->join;
      auto usl = universal_semilattice(based.base);
      auto images = phi(based);
      for (int x = 0; x < based.space.size; ++x) CHECK(theta(based, join, images[x]) == x);
      for (const auto& p : enumerate_primes(usl.monoid)) {
        int x = theta(based, join, p);
        CHECK(images[x] == p);
      }
    }
}

TEST_CASE("spectra are homeomorphic to the spectra of their base semilattices") {
  for (int order = 1; order <= 3; ++order)
    for (const auto& m : enumerate_monoids(order))
      CHECK(check_spec_homeomorphism(spec_based_space(spec(m))));
  CHECK(check_spec_homeomorphism(fx::sier_blob_base()));
}

TEST_CASE("the discrete base has too many primes to mirror its space") {
  auto disc = fx::discrete(2);
  auto based = make_based_space(
      disc, {mk({}, 2), mk({0}, 2), mk({1}, 2), Mask::full(2)});
  // (B,n) is the diamond: four primes against two points
  auto usl = universal_semilattice(based.base);
  CHECK(enumerate_primes(usl.monoid).size() == 4);
  CHECK_FALSE(check_spec_homeomorphism(based));
}

TEST_CASE("families of base sets yield primes by non-containment") {
  auto based = fx::sier_blob_base();
  CHECK(weakprop2_prime(based, {Mask::full(2)}) == mk({0}, 2));
  CHECK(weakprop2_prime(based, {mk({0}, 2)}) == mk({}, 2));
  CHECK(weakprop2_prime(based, {mk({0}, 2), Mask::full(2)}) == mk({}, 2));
  CHECK_THROWS_AS(weakprop2_prime(based, {}), Error);
  CHECK_THROWS_AS(weakprop2_prime(based, {mk({1}, 2)}), Error);  // not a base member
}

TEST_CASE("non-containment primes are always primes of the base monoid") {
  for (int size = 1; size <= 3; ++size)
    for (const auto& p : enumerate_posets(size)) {
      auto x = space_from_poset(p);
      for (const auto& base : monoidal_bases(x)) {
        auto based = make_based_space(x, base);
        auto usl = universal_semilattice(based.base);
        const auto nb = based.base.size();
        for (std::uint64_t fam = 1; fam < (1ull << nb); ++fam) {
          std::vector<Mask> family;
          for (std::size_t u = 0; u < nb; ++u)
            if (fam >> u & 1) family.push_back(based.base[u]);
          auto prime = weakprop2_prime(based, family);
          CHECK(is_prime_ideal(usl.monoid, prime));
        }
      }
    }
}
