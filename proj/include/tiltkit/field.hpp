#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tiltkit/common.hpp"

namespace tiltkit {

/// Element of the prime field F_p.  The modulus is a process-wide session
/// constant: set it once (the CLI does this from the algebra file) before any
/// arithmetic.  All values are stored reduced to [0, p).
class Fp {
 public:
  Fp() : v_(0) {}

  static void set_modulus(std::uint32_t p);
  static std::uint32_t modulus() { return p_; }

  static Fp zero() { return Fp(); }
  static Fp one() { return from_int(1); }
  static Fp from_int(long long n) {
    require_modulus();
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    Fp x;
    x.v_ = static_cast<std::uint32_t>(r);
    return x;
  }

  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) { return raw((a.v_ + b.v_) % p_); }
  friend Fp operator-(Fp a, Fp b) { return raw((a.v_ + p_ - b.v_) % p_); }
  friend Fp operator-(Fp a) { return raw(a.v_ == 0 ? 0 : p_ - a.v_); }
  friend Fp operator*(Fp a, Fp b) {
    return raw(static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.v_) * b.v_) % p_));
  }
  Fp inv() const;
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  std::uint32_t value() const { return v_; }
  std::string str() const { return std::to_string(v_); }

 private:
  static Fp raw(std::uint32_t v) {
    Fp x;
    x.v_ = v;
    return x;
  }
  static void require_modulus() {
    if (p_ == 0) fail("prime field modulus not set");
  }
  std::uint32_t v_;
  inline static std::uint32_t p_ = 0;
};

/// Arbitrary-precision rational, a thin wrapper over GMP's mpq.
class Rat {
 public:
  Rat() : v_(0) {}
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rat zero() { return Rat(); }
  static Rat one() { return from_int(1); }
  static Rat from_int(long long n) { return Rat(mpq_class(static_cast<long>(n))); }
  static Rat fraction(long long num, long long den) {
    if (den == 0) fail("zero denominator");
    return Rat(mpq_class(static_cast<long>(num), static_cast<long>(den)));
  }

  bool is_zero() const { return sgn(v_) == 0; }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ - b.v_)); }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.v_ * b.v_)); }
  Rat inv() const {
    if (is_zero()) fail("division by zero");
    return Rat(mpq_class(1 / v_));
  }
  friend Rat operator/(const Rat& a, const Rat& b) { return a * b.inv(); }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

template <class K>
struct FieldInfo;

template <>
struct FieldInfo<Fp> {
  static std::string name() { return "F" + std::to_string(Fp::modulus()); }
  static std::uint64_t characteristic() { return Fp::modulus(); }
};

template <>
struct FieldInfo<Rat> {
  static std::string name() { return "Q"; }
  static std::uint64_t characteristic() { return 0; }
};

template <class K>
K random_scalar(Rng& rng) {
  if constexpr (std::is_same_v<K, Fp>) {
    std::uniform_int_distribution<std::uint32_t> d(0, Fp::modulus() - 1);
    return Fp::from_int(d(rng));
  } else {
    std::uniform_int_distribution<int> d(-9, 9);
    return K::from_int(d(rng));
  }
}

template <class K>
K random_nonzero(Rng& rng) {
  for (;;) {
    K x = random_scalar<K>(rng);
    if (!x.is_zero()) return x;
  }
}

/// Deterministic coefficient vectors for generic-element searches: unit
/// vectors first, then the all-ones vector, then Vandermonde rows k^i for
/// small k.  A polynomial that is not identically zero misses all of these
/// only in contrived cases, and callers fall back to seeded random vectors.
template <class K>
std::vector<K> generic_coefficients(std::size_t dim, std::size_t attempt) {
  std::vector<K> c(dim, K::zero());
  if (attempt < dim) {
    c[attempt] = K::one();
    return c;
  }
  long long base = static_cast<long long>(attempt - dim) + 1;  // 1, 2, 3, ...
  K b = K::from_int(base);
  K acc = K::one();
  for (std::size_t i = 0; i < dim; ++i) {
    c[i] = acc;
    acc = acc * b;
  }
  return c;
}

}  // namespace tiltkit
