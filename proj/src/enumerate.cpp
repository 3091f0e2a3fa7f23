#include "katospec/enumerate.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <string>

#include "katospec/theorems.hpp"

namespace katospec {

namespace {

// Associativity over the currently determined cells; commutativity lets the
// outer indices satisfy a <= c, and triples touching the unit always pass.
bool partial_assoc_ok(int n, const std::vector<int>& t) {
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b) {
      const int ab = t[a * n + b];
      if (ab < 0) continue;
      for (int c = a; c < n; ++c) {
        const int bc = t[b * n + c];
        if (bc < 0) continue;
        const int left = t[ab * n + c];
        const int right = t[a * n + bc];
        if (left >= 0 && right >= 0 && left != right) return false;
      }
    }
  return true;
}

void fill_tables(int n, std::vector<int>& t, const std::vector<std::pair<int, int>>& cells,
                 std::size_t at, std::vector<FiniteMonoid>& out) {
  if (at == cells.size()) {
    out.push_back(FiniteMonoid{n, 0, t});
    return;
  }
  const auto [i, j] = cells[at];
  for (int v = 0; v < n; ++v) {
    t[i * n + j] = v;
    t[j * n + i] = v;
    if (partial_assoc_ok(n, t)) fill_tables(n, t, cells, at + 1, out);
  }
  t[i * n + j] = -1;
  t[j * n + i] = -1;
}

}  // namespace

std::vector<FiniteMonoid> all_labeled_monoids(int order) {
  if (order <= 0) throw Error(ErrorCode::BadInput, "order must be positive", order);
  if (order > 5) throw Error(ErrorCode::OrderTooLarge, "exhaustive search is limited to order 5", order);
  const int n = order;
  std::vector<int> t(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    t[0 * n + i] = i;  // unit row and column are forced
    t[i * n + 0] = i;
  }
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i < n; ++i)
    for (int j = i; j < n; ++j) cells.push_back({i, j});
  std::vector<FiniteMonoid> out;
  fill_tables(n, t, cells, 0, out);
  return out;
}

std::vector<int> canonical_monoid_table(const FiniteMonoid& m) {
  const int n = m.order;
  if (n > 8) throw Error(ErrorCode::OrderTooLarge, "canonical form is limited to order 8", n);
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != m.unit) others.push_back(i);
  std::vector<int> best;
  std::vector<int> perm(n);
  std::vector<int> candidate(static_cast<std::size_t>(n) * n);
  do {
    perm[m.unit] = 0;
    for (int k = 0; k + 1 < n; ++k) perm[others[k]] = k + 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        candidate[perm[i] * n + perm[j]] = perm[m.mul(i, j)];
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(others.begin(), others.end()));
  if (best.empty()) best = m.table;  // order 1
  return best;
}

std::vector<FiniteMonoid> enumerate_monoids(int order) {
  std::set<std::vector<int>> canon;
  for (const auto& m : all_labeled_monoids(order)) canon.insert(canonical_monoid_table(m));
  std::vector<FiniteMonoid> out;
  out.reserve(canon.size());
  for (const auto& t : canon) out.push_back(FiniteMonoid{order, 0, t});
  return out;
}

std::vector<FiniteMonoid> sample_monoids(int order, int count, std::uint64_t seed) {
  std::vector<FiniteMonoid> labeled = all_labeled_monoids(order);
  if (count >= static_cast<int>(labeled.size())) return labeled;
  std::vector<int> idx(labeled.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    std::size_t pick = k + rng() % (idx.size() - k);
    std::swap(idx[k], idx[pick]);
  }
  idx.resize(count);
  std::sort(idx.begin(), idx.end());
  std::vector<FiniteMonoid> out;
  out.reserve(count);
  for (int i : idx) out.push_back(labeled[i]);
  return out;
}

namespace {

class PosetGen {
 public:
  PosetGen(int n, std::set<std::vector<std::uint64_t>>& seen) : n_(n), seen_(seen) {
    le_.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) le_[i][i] = 1;
  }

  void run() { vertex(1); }

 private:
  void vertex(int k) {
    if (k >= n_) {
      record();
      return;
    }
    pair(k, 0);
  }

  void pair(int k, int j) {
    if (j == k) {
      vertex(k + 1);
      return;
    }
    static constexpr std::array<std::array<char, 2>, 3> kStates = {{{0, 0}, {1, 0}, {0, 1}}};
    for (const auto& st : kStates) {
      le_[j][k] = st[0];
      le_[k][j] = st[1];
      if (consistent(k, j)) pair(k, j + 1);
    }
    le_[j][k] = 0;
    le_[k][j] = 0;
  }

  // transitivity across triples {i, j, k} that just became fully decided
  bool consistent(int k, int j) const {
    for (int i = 0; i < j; ++i) {
      if (le_[i][j] && le_[j][k] && !le_[i][k]) return false;
      if (le_[j][i] && le_[i][k] && !le_[j][k]) return false;
      if (le_[i][k] && le_[k][j] && !le_[i][j]) return false;
      if (le_[k][i] && le_[i][j] && !le_[k][j]) return false;
      if (le_[j][k] && le_[k][i] && !le_[j][i]) return false;
      if (le_[k][j] && le_[j][i] && !le_[k][i]) return false;
    }
    return true;
  }

  void record() {
    FinitePoset p;
    p.size = n_;
    p.below.reserve(n_);
    for (int a = 0; a < n_; ++a) {
      Mask m = Mask::empty(n_);
      for (int x = 0; x < n_; ++x)
        if (le_[x][a]) m.set(x);
      p.below.push_back(m);
    }
    seen_.insert(canonical_form(p));
  }

  int n_;
  std::vector<std::vector<char>> le_;
  std::set<std::vector<std::uint64_t>>& seen_;
};

}  // namespace

std::vector<FinitePoset> enumerate_posets(int size) {
  if (size < 0) throw Error(ErrorCode::BadInput, "size must be nonnegative", size);
  if (size > 6) throw Error(ErrorCode::SizeTooLarge, "exhaustive search is limited to size 6", size);
  if (size == 0) return {FinitePoset{0, {}}};
  std::set<std::vector<std::uint64_t>> seen;
  PosetGen gen(size, seen);
  gen.run();
  std::vector<FinitePoset> out;
  out.reserve(seen.size());
  for (const auto& words : seen) {
    FinitePoset p;
    p.size = size;
    for (auto w : words) p.below.push_back(Mask(w, size));
    validate_poset(p);
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

std::uint64_t monoid_hash(const FiniteMonoid& m) {
  std::vector<int> canon = canonical_monoid_table(m);
  std::vector<std::uint64_t> words(canon.begin(), canon.end());
  words.push_back(static_cast<std::uint64_t>(m.order));
  return fnv1a_words(words);
}

void add_result(CensusRow& row, std::vector<std::string>& failures, const std::string& id,
                const char* check, bool ok) {
  row.checks.push_back(check);
  row.results.push_back(ok);
  if (!ok) failures.push_back(id + " failed " + check);
}

void check_monoid(const FiniteMonoid& m, CensusRow row, SuiteResult& out) {
  const std::string id = row.kind + " order=" + std::to_string(row.param) +
                         " index=" + std::to_string(row.index);
  SpecSpace s = spec(m);
  FiniteSpace space = space_from_poset(s.order);
  row.is_spectrum = true;

  add_result(row, out.failures, id, "t0", is_t0(space));

  bool d_law = true;
  for (int f = 0; f < m.order && d_law; ++f)
    for (int g = f; g < m.order && d_law; ++g)
      d_law = s.d_base[m.mul(f, g)] == (s.d_base[f] & s.d_base[g]);
  add_result(row, out.failures, id, "d-multiplicativity", d_law);

  const std::size_t np = s.points.size();
  bool unions_prime = np <= 20;
  if (unions_prime)
    for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << np) && unions_prime; ++bits) {
      Mask u = Mask::empty(m.order);
      for (std::size_t i = 0; i < np; ++i)
        if (bits >> i & 1) u = u | s.points[i];
      unions_prime = is_prime_ideal(m, u);
    }
  add_result(row, out.failures, id, "prime-unions", unions_prime);

  add_result(row, out.failures, id, "brenner", brenner_report(space).verdict());
  add_result(row, out.failures, id, "hochster", hochster_report(space).verdict());

  BasedSpace based = spec_based_space(s);
  add_result(row, out.failures, id, "semilattice-spec", check_spec_homeomorphism(based));

  McjsOutcome oc = check_mcjs(based);
  add_result(row, out.failures, id, "mcjs", oc.ok());
  bool theta_phi = oc.ok();
  bool phi_theta = oc.ok();
  if (oc.ok()) {
    std::vector<Mask> images = phi(based);
    for (int x = 0; x < based.space.size; ++x)
      theta_phi = theta_phi && theta(based, oc.witness->join, images[x]) == x;
    UniversalSemilattice us = universal_semilattice(based.base);
    for (const auto& q : spec(us.monoid).points)
      phi_theta = phi_theta && images[theta(based, oc.witness->join, q)] == q;
  }
  add_result(row, out.failures, id, "theta-after-phi", theta_phi);
  add_result(row, out.failures, id, "phi-after-theta", phi_theta);

  ++out.monoids_checked;
  out.rows.push_back(std::move(row));
}

void check_space(const FinitePoset& p, CensusRow row, SuiteResult& out) {
  const std::string id = "space size=" + std::to_string(row.param) +
                         " index=" + std::to_string(row.index);
  FiniteSpace space = space_from_poset(p);

  ClassificationResult c = classify(space);
  row.is_spectrum = c.is_spectrum;
  bool sound = !c.is_spectrum ||
               (c.witness_monoid && c.witness_homeo &&
                homeomorphic(space, space_from_poset(spec(*c.witness_monoid).order)).has_value());
  add_result(row, out.failures, id, "classify-sound", sound);
  add_result(row, out.failures, id, "sups-decide", c.is_spectrum == has_all_sups(p));

  if (row.param <= 4) {
    ExpCharReport rep = exp_characterization_report(space);
    add_result(row, out.failures, id, "expchar-agree", rep.agree);
    add_result(row, out.failures, id, "expchar-classify",
               rep.blob_base_and_closures == c.is_spectrum);
  }

  ++out.spaces_checked;
  out.rows.push_back(std::move(row));
}

}  // namespace

SuiteResult run_suite(int max_order, int max_size, std::uint64_t seed) {
  if (max_order < 1 || max_order > 5)
    throw Error(ErrorCode::OrderTooLarge, "suite handles orders 1..5", max_order);
  if (max_size < 1 || max_size > 6)
    throw Error(ErrorCode::SizeTooLarge, "suite handles sizes 1..6", max_size);
  SuiteResult out;
  out.max_order = max_order;
  out.max_size = max_size;
  out.seed = seed;

  for (int order = 1; order <= std::min(max_order, 4); ++order) {
    std::vector<FiniteMonoid> monoids = enumerate_monoids(order);
    for (std::size_t i = 0; i < monoids.size(); ++i) {
      CensusRow row{"monoid", order, static_cast<int>(i), monoid_hash(monoids[i]), false, {}, {}};
      check_monoid(monoids[i], std::move(row), out);
    }
  }
  if (max_order >= 5) {
    std::vector<FiniteMonoid> sampled = sample_monoids(5, 200, seed);
    for (std::size_t i = 0; i < sampled.size(); ++i) {
      CensusRow row{"monoid-sample", 5, static_cast<int>(i), monoid_hash(sampled[i]), false, {}, {}};
      check_monoid(sampled[i], std::move(row), out);
    }
  }
  for (int size = 1; size <= max_size; ++size) {
    std::vector<FinitePoset> posets = enumerate_posets(size);
    for (std::size_t i = 0; i < posets.size(); ++i) {
      CensusRow row{"space", size, static_cast<int>(i), fnv1a_words(canonical_form(posets[i])),
                    false, {}, {}};
      check_space(posets[i], std::move(row), out);
    }
  }
  return out;
}

}  // namespace katospec
