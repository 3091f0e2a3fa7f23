#include "katospec/theorems.hpp"

#include <algorithm>

#include "katospec/enumerate.hpp"

namespace katospec {

StarCertificate condition_star(const FiniteSpace& x) {
  StarCertificate cert;
  std::vector<Mask> blobfam = open_blob_family(x);
  if (blobfam.size() > 12) return cert;  // artinian justification only
  cert.exhaustive_ran = true;
  const std::uint64_t count = std::uint64_t(1) << blobfam.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    Mask inter = Mask::full(x.size);
    for (std::size_t u = 0; u < blobfam.size(); ++u)
      if (bits >> u & 1) inter = inter & blobfam[u];
    for (const auto& open : x.opens) {
      if (!inter.subset_of(open)) continue;
      // the subfamily is itself finite, so it witnesses its own containment
      ++cert.pairs_checked;
    }
  }
  return cert;
}

namespace {

// X among the blobs, blobs closed under pairwise intersection, every open a
// union of blobs (the last holds in every finite space; checked anyway).
bool blobs_form_monoidal_base(const FiniteSpace& x, std::optional<Mask>* failure) {
  std::vector<Mask> bf = open_blob_family(x);
  if (!std::binary_search(bf.begin(), bf.end(), Mask::full(x.size))) {
    if (failure) *failure = Mask::full(x.size);
    return false;
  }
  for (std::size_t i = 0; i < bf.size(); ++i)
    for (std::size_t j = i + 1; j < bf.size(); ++j) {
      Mask meet = bf[i] & bf[j];
      if (!std::binary_search(bf.begin(), bf.end(), meet)) {
        if (failure) *failure = meet;
        return false;
      }
    }
  for (const auto& u : x.opens) {
    Mask covered = Mask::empty(x.size);
    for (const auto& b : bf)
      if (b.subset_of(u)) covered = covered | b;
    if (covered != u) {
      if (failure) *failure = u;
      return false;
    }
  }
  return true;
}

}  // namespace

ConditionReport brenner_report(const FiniteSpace& x) {
  ConditionReport r;
  r.t0 = true;
  for (int a = 0; a < x.size && r.t0; ++a)
    for (int b = a + 1; b < x.size && r.t0; ++b) {
      bool separated = false;
      for (const auto& u : x.opens)
        if (u.test(a) != u.test(b)) {
          separated = true;
          break;
        }
      if (!separated) {
        r.t0 = false;
        r.t0_failure = {a, b};
      }
    }
  r.blob_base = blobs_form_monoidal_base(x, &r.blob_base_failure);
  IrreducibleIntersectionReport rep = intersections_of_irreducibles(x);
  r.intersections_ok = rep.all_point_closures;
  r.intersections_failure = rep.counterexample;
  r.star = condition_star(x).holds;
  return r;
}

ExpCharReport exp_characterization_report(const FiniteSpace& x, std::size_t budget) {
  if (!is_t0(x)) throw Error(ErrorCode::NotT0, "characterization requires a T0 space");
  ExpCharReport r;
  if (x.size == 0) {  // nothing qualifies: exponentials are never empty
    r.agree = true;
    return r;
  }

  r.blob_base_and_closures = blobs_form_monoidal_base(x, nullptr) &&
                             intersections_of_irreducibles(x).all_point_closures;

  try {
    r.blob_base_mcjs = check_mcjs(make_based_space(x, open_blob_family(x))).ok();
  } catch (const Error& e) {
    if (e.code != ErrorCode::BaseNotMonoidal) throw;
  }

  for (const auto& base : monoidal_bases(x, budget)) {
    BasedSpace bs = make_based_space(x, base);
    if (!r.some_base_mcjs && check_mcjs(bs).ok()) r.some_base_mcjs = true;
    if (!r.some_base_fixed_point && m_isomorphic(bs, exponential(bs).based))
      r.some_base_fixed_point = true;
    if (r.some_base_mcjs && r.some_base_fixed_point) break;
  }

  for (int k = 1; k <= x.size && !r.some_space_exponential; ++k)
    for (const auto& p : enumerate_posets(k)) {
      FiniteSpace y = space_from_poset(p);
      for (const auto& c : monoidal_bases(y, budget)) {
        ExpSpace e = exponential(make_based_space(y, c));
        if (homeomorphic(x, e.based.space)) {
          r.some_space_exponential = true;
          break;
        }
      }
      if (r.some_space_exponential) break;
    }

  r.agree = r.blob_base_and_closures == r.blob_base_mcjs &&
            r.blob_base_mcjs == r.some_base_mcjs &&
            r.some_base_mcjs == r.some_base_fixed_point &&
            r.some_base_fixed_point == r.some_space_exponential;
  return r;
}

HochsterReport hochster_report(const FiniteSpace& x) {
  HochsterReport r;
  r.t0 = is_t0(x);
  // every subset of a finite space is compact, so the compact opens are all
  // opens: the full open family is a monoidal base of itself
  r.compact_open_base = true;
  if (!x.is_open(Mask::full(x.size))) r.compact_open_base = false;
  for (const auto& u : x.opens)
    for (const auto& v : x.opens)
      if (!x.is_open(u & v)) r.compact_open_base = false;
  std::vector<Mask> closures;
  for (int a = 0; a < x.size; ++a) closures.push_back(closure_of(x, Mask::singleton(a, x.size)));
  r.sober = true;
  for (const auto& c : irreducible_closed_sets(x)) {
    int witnesses = 0;
    for (const auto& pc : closures)
      if (pc == c) ++witnesses;
    if (witnesses != 1) r.sober = false;
  }
  return r;
}

ClassificationResult classify(const FiniteSpace& x) {
  ClassificationResult res;
  ConditionReport rep = brenner_report(x);
  if (!rep.verdict()) {
    if (!rep.t0)
      res.failed_condition = "t0";
    else if (!rep.blob_base)
      res.failed_condition = "blob-base";
    else if (!rep.intersections_ok)
      res.failed_condition = "intersections";
    else
      res.failed_condition = "star";
    return res;
  }
  BasedSpace based = make_based_space(x, open_blob_family(x));
  if (!check_spec_homeomorphism(based))
    throw Error(ErrorCode::WitnessMismatch, "blob semilattice spectrum does not match the space");
  UniversalSemilattice us = universal_semilattice(based.base);
  SpecSpace s = spec(us.monoid);
  std::optional<std::vector<int>> homeo = homeomorphic(x, space_from_poset(s.order));
  if (!homeo)
    throw Error(ErrorCode::WitnessMismatch, "no homeomorphism onto the witness spectrum");
  res.is_spectrum = true;
  res.witness_monoid = us.monoid;
  res.witness_legend = us.legend;
  res.witness_homeo = std::move(homeo);
  return res;
}

}  // namespace katospec
