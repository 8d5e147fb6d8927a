#include "tiltkit/poly.hpp"

namespace tiltkit {

std::vector<Fp> field_roots(const Poly<Fp>& p) {
  std::vector<Fp> roots;
  if (p.empty()) return roots;
  if (Fp::modulus() > 1u << 20)
    fail("field_roots: modulus too large for a root scan");
  for (std::uint32_t v = 0; v < Fp::modulus(); ++v) {
    Fp x = Fp::from_int(v);
    if (poly_eval(p, x).is_zero()) roots.push_back(x);
  }
  return roots;
}

namespace {

// divisors of |n|, in increasing order; throws past the budget
std::vector<mpz_class> small_divisors(const mpz_class& n) {
  mpz_class a = abs(n);
  if (a == 0) return {};
  if (a > mpz_class("1000000000000"))
    fail("field_roots: coefficient too large for divisor enumeration");
  std::vector<mpz_class> lo, hi;
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      lo.push_back(d);
      if (d * d != a) hi.push_back(a / d);
    }
    if (lo.size() > 4096) fail("field_roots: too many divisor candidates");
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

}  // namespace

std::vector<Rat> field_roots(const Poly<Rat>& p0) {
  std::vector<Rat> roots;
  Poly<Rat> p = p0;
  if (p.empty()) return roots;
  // strip roots at zero
  while (!p.empty() && p.front().is_zero()) {
    p.erase(p.begin());
    if (roots.empty()) roots.push_back(Rat::zero());
  }
  if (p.size() <= 1) return roots;
  // integerize
  mpz_class lcm_den = 1;
  for (const auto& c : p) lcm_den = lcm(lcm_den, c.raw().get_den());
  std::vector<mpz_class> ic(p.size());
  mpz_class content = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mpq_class q = p[i].raw() * mpq_class(lcm_den);
    ic[i] = q.get_num();
    content = gcd(content, ic[i]);
  }
  if (content > 1)
    for (auto& c : ic) c /= content;
  const auto ps = small_divisors(ic.front());
  const auto qs = small_divisors(ic.back());
  for (const auto& num : ps)
    for (const auto& den : qs) {
      if (gcd(num, den) != 1) continue;
      for (int sign : {1, -1}) {
        Rat cand(mpq_class(sign * num, den));
        if (poly_eval(p, cand).is_zero()) {
          bool seen = false;
          for (const auto& r : roots) seen = seen || r == cand;
          if (!seen) roots.push_back(cand);
        }
      }
    }
  return roots;
}

}  // namespace tiltkit
