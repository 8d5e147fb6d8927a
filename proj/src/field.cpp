#include "tiltkit/field.hpp"

namespace tiltkit {

namespace {
bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}
}  // namespace

void Fp::set_modulus(std::uint32_t p) {
  if (!is_prime(p)) fail("modulus " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) fail("modulus too large");
  p_ = p;
}

Fp Fp::inv() const {
  require_modulus();
  if (v_ == 0) fail("division by zero");
  // extended Euclid on (v, p)
  long long t = 0, new_t = 1;
  long long r = p_, new_r = v_;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p_;
  return from_int(t);
}

}  // namespace tiltkit
