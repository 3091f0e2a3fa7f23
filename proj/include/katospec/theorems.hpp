#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "katospec/exponential.hpp"

namespace katospec {

// Which sub-intersection property holds for the open blobs: any open
// containing an intersection of blobs contains a finite sub-intersection.
// Finite spaces are artinian (descending open chains terminate), so this
// always holds; the certificate records whether the exhaustive sweep over
// subfamilies also ran (it does whenever there are at most 12 distinct
// blobs).
struct StarCertificate {
  bool holds = true;
  bool artinian_justified = true;
  bool exhaustive_ran = false;
  std::size_t pairs_checked = 0;
};

StarCertificate condition_star(const FiniteSpace& x);

// The four conditions a finite space must meet to be a monoid spectrum:
// T0; the open blobs form a monoidal base; every intersection of irreducible
// closed sets is the closure of exactly one point; the sub-intersection
// property of the blobs.
struct ConditionReport {
  bool t0 = false;
  bool blob_base = false;
  bool intersections_ok = false;
  bool star = false;
  std::optional<std::pair<int, int>> t0_failure;  // an indistinguishable pair
  std::optional<Mask> blob_base_failure;          // a set the blob family misses
  std::optional<Mask> intersections_failure;      // a point set whose closure meet fails

  bool verdict() const { return t0 && blob_base && intersections_ok && star; }
};

ConditionReport brenner_report(const FiniteSpace& x);

// Five equivalent descriptions of the same class of spaces; the booleans are
// computed independently and must agree:
//  (1) open blobs form a monoidal base and every intersection of point
//      closures is a point closure;
//  (2) the space with its open-blob base is a complete join semilattice
//      compatible with the base;
//  (3) some monoidal base makes it one;
//  (4) some monoidal base is fixed by the exponential, (X,B) = E(X,B);
//  (5) the space is the exponential of some based space with at most as
//      many points.
struct ExpCharReport {
  bool blob_base_and_closures = false;
  bool blob_base_mcjs = false;
  bool some_base_mcjs = false;
  bool some_base_fixed_point = false;
  bool some_space_exponential = false;
  bool agree = false;
};

ExpCharReport exp_characterization_report(const FiniteSpace& x, std::size_t budget = 1 << 20);

// The spectral-space conditions specialized to finite spaces: T0, the
// compact opens (all of them, in a finite space) form a monoidal base, and
// every irreducible closed set is the closure of exactly one point.
struct HochsterReport {
  bool t0 = false;
  bool compact_open_base = false;
  bool sober = false;

  bool verdict() const { return t0 && compact_open_base && sober; }
};

HochsterReport hochster_report(const FiniteSpace& x);

// Decides whether the space is a monoid spectrum. A yes always carries the
// witness: the monoid of open blobs under intersection, whose spectrum is
// homeomorphic to the input, plus the lexicographically least homeomorphism.
struct ClassificationResult {
  bool is_spectrum = false;
  std::optional<FiniteMonoid> witness_monoid;
  std::vector<Mask> witness_legend;               // carrier index -> blob
  std::optional<std::vector<int>> witness_homeo;  // input point -> spectrum point
  std::optional<std::string> failed_condition;    // "t0", "blob-base", "intersections", "star"
};

ClassificationResult classify(const FiniteSpace& x);

}  // namespace katospec
