#include "katospec/ring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "katospec/exponential.hpp"

namespace katospec {

FiniteRing make_ring(std::vector<int> factors) {
  FiniteRing r;
  r.size = 1;
  for (int n : factors) {
    if (n <= 0) throw Error(ErrorCode::BadInput, "moduli must be positive", n);
    if (r.size > kMaxCarrier / n)
      throw Error(ErrorCode::CarrierTooLarge, "ring carrier exceeds " + std::to_string(kMaxCarrier));
    r.size *= n;
  }
  r.factors = std::move(factors);
  auto digits = [&](int e) {
    std::vector<int> d;
    d.reserve(r.factors.size());
    for (int n : r.factors) {
      d.push_back(e % n);
      e /= n;
    }
    return d;
  };
  auto pack = [&](const std::vector<int>& d) {
    int e = 0;
    for (std::size_t k = r.factors.size(); k-- > 0;) e = e * r.factors[k] + d[k];
    return e;
  };
  {
    std::vector<int> one(r.factors.size());
    for (std::size_t k = 0; k < r.factors.size(); ++k) one[k] = r.factors[k] > 1 ? 1 : 0;
    r.one = pack(one);
  }
  const int n = r.size;
  r.add_table.assign(static_cast<std::size_t>(n) * n, 0);
  r.mul_table.assign(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    std::vector<int> da = digits(a);
    for (int b = 0; b < n; ++b) {
      std::vector<int> db = digits(b);
      std::vector<int> s(r.factors.size()), p(r.factors.size());
      for (std::size_t k = 0; k < r.factors.size(); ++k) {
        s[k] = (da[k] + db[k]) % r.factors[k];
        p[k] = (da[k] * db[k]) % r.factors[k];
      }
      r.add_table[static_cast<std::size_t>(a) * n + b] = pack(s);
      r.mul_table[static_cast<std::size_t>(a) * n + b] = pack(p);
    }
  }
  for (int a = 0; a < n; ++a) {
    if (r.add(a, 0) != a || r.mul(a, r.one) != a)
      throw Error(ErrorCode::BadInput, "ring unit laws fail", a);
    bool inverse = false;
    for (int b = 0; b < n && !inverse; ++b) inverse = r.add(a, b) == 0;
    if (!inverse) throw Error(ErrorCode::BadInput, "no additive inverse", a);
    for (int b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a) || r.mul(a, b) != r.mul(b, a))
        throw Error(ErrorCode::BadInput, "ring commutativity fails", a, b);
      for (int c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)) ||
            r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)) ||
            r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
          throw Error(ErrorCode::BadInput, "ring laws fail", a, b, c);
      }
    }
  }
  return r;
}

bool is_ring_prime(const FiniteRing& r, const Mask& subset) {
  if (!subset.test(0) || subset.test(r.one)) return false;
  for (int a : subset.members()) {
    for (int b : subset.members())
      if (!subset.test(r.add(a, b))) return false;
    for (int b = 0; b < r.size; ++b)
      if (!subset.test(r.mul(a, b))) return false;
  }
  for (int a = 0; a < r.size; ++a) {
    if (subset.test(a)) continue;
    for (int b = a; b < r.size; ++b)
      if (!subset.test(b) && subset.test(r.mul(a, b))) return false;
  }
  return true;
}

namespace {

bool propagate_ring_prime(const FiniteRing& r, Mask& in, Mask& out) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < r.size; ++a) {
      if (in.test(a)) {
        for (int b = 0; b < r.size; ++b) {
          int p = r.mul(a, b);
          if (out.test(p)) return false;
          if (!in.test(p)) {
            in.set(p);
            changed = true;
          }
          if (in.test(b)) {
            int s = r.add(a, b);
            if (out.test(s)) return false;
            if (!in.test(s)) {
              in.set(s);
              changed = true;
            }
          }
        }
      } else if (out.test(a)) {
        for (int b = a; b < r.size; ++b) {
          if (!out.test(b)) continue;
          int p = r.mul(a, b);
          if (in.test(p)) return false;
          if (!out.test(p)) {
            out.set(p);
            changed = true;
          }
        }
      }
    }
  }
  return true;
}

void search_ring_primes(const FiniteRing& r, Mask in, Mask out, std::vector<Mask>& found) {
  if (!propagate_ring_prime(r, in, out)) return;
  int undecided = -1;
  for (int a = 0; a < r.size; ++a)
    if (!in.test(a) && !out.test(a)) {
      undecided = a;
      break;
    }
  if (undecided < 0) {
    if (!is_ring_prime(r, in))
      throw Error(ErrorCode::NotPrime, "search produced a non-prime partition");
    found.push_back(in);
    return;
  }
  Mask out2 = out;
  out2.set(undecided);
  search_ring_primes(r, in, out2, found);
  Mask in2 = in;
  in2.set(undecided);
  search_ring_primes(r, in2, out, found);
}

}  // namespace

std::vector<Mask> ring_spec(const FiniteRing& r) {
  std::vector<Mask> found;
  Mask in = Mask::empty(r.size);
  Mask out = Mask::empty(r.size);
  if (r.one == 0) return found;  // zero ring: no proper ideal contains 0
  in.set(0);
  out.set(r.one);
  search_ring_primes(r, in, out, found);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

FiniteMonoid mult_monoid(const FiniteRing& r) {
  return validate_monoid(r.size, r.one, r.mul_table);
}

BasedSpace ring_spec_based_space(const FiniteRing& r) {
  std::vector<Mask> primes = ring_spec(r);
  const int np = static_cast<int>(primes.size());
  if (np == 0) throw Error(ErrorCode::BadInput, "ring spectrum is empty");
  std::vector<Mask> d;
  d.reserve(r.size);
  for (int f = 0; f < r.size; ++f) {
    Mask m = Mask::empty(np);
    for (int i = 0; i < np; ++i)
      if (!primes[i].test(f)) m.set(i);
    d.push_back(m);
  }
  return make_based_space(from_open_family(np, d), d);
}

bool check_unions_of_primes(const FiniteRing& r) {
  SpecSpace s = spec(mult_monoid(r));
  std::vector<Mask> primes = ring_spec(r);
  const std::size_t k = primes.size();
  if (k > 20) throw Error(ErrorCode::SearchSpaceTooLarge, "too many ring primes to union");
  std::vector<Mask> unions;
  unions.reserve(std::size_t(1) << k);
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << k); ++bits) {
    Mask u = Mask::empty(r.size);
    for (std::size_t i = 0; i < k; ++i)
      if (bits >> i & 1) u = u | primes[i];
    unions.push_back(u);
  }
  std::sort(unions.begin(), unions.end());
  unions.erase(std::unique(unions.begin(), unions.end()), unions.end());
  return unions == s.points;
}

bool check_exp_example(const FiniteRing& r) {
  ExpSpace e = exponential(ring_spec_based_space(r));
  SpecSpace s = spec(mult_monoid(r));
  return m_isomorphic(e.based, spec_based_space(s));
}

}  // namespace katospec
