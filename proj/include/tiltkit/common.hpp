#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace tiltkit {

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw error(msg); }

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

using Rng = std::mt19937_64;

/// Knobs for the randomized searches (generic-element invertibility tests,
/// symmetrizing-form search, quotient isomorphism search).  Deterministic
/// candidates are always tried before random ones, and exhaustive fallbacks
/// keep verdicts seed-independent; the seed only affects which witness is
/// found.
struct SearchPolicy {
  std::uint64_t seed = 0;
  int random_trials = 64;
  int exhaustive_dim_limit = 16;
  int generation_stage_budget = 8;
  long iso_search_budget = 5000;
};

}  // namespace tiltkit
