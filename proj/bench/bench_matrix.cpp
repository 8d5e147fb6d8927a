// Benchmark: OpenMP kernels against the serial reference implementations.
//
// Usage: tiltkit_bench [max_size]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "tiltkit/matrix.hpp"

using namespace tiltkit;

namespace {

template <class K>
Matrix<K> random_matrix(std::size_t n, Rng& rng) {
  Matrix<K> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_scalar<K>(rng);
  return m;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

template <class K>
void bench_field(const char* name, std::size_t max_size) {
  Rng rng(42);
  std::printf("%-4s %6s %12s %12s %8s %12s %12s %8s\n", name, "n", "mul par ms",
              "mul ref ms", "speedup", "rref par ms", "rref ref ms", "speedup");
  for (std::size_t n = 64; n <= max_size; n *= 2) {
    Matrix<K> a = random_matrix<K>(n, rng);
    Matrix<K> b = random_matrix<K>(n, rng);

    auto t0 = std::chrono::steady_clock::now();
    Matrix<K> c1 = mul(a, b);
    double mul_par = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    Matrix<K> c2 = ref::mul(a, b);
    double mul_ref = ms_since(t0);
    if (!(c1 == c2)) {
      std::fprintf(stderr, "mul mismatch at n=%zu\n", n);
      std::exit(1);
    }

    t0 = std::chrono::steady_clock::now();
    auto r1 = rref(a);
    double rref_par = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    auto r2 = ref::rref(a);
    double rref_ref = ms_since(t0);
    if (!(r1.mat == r2.mat) || r1.pivots != r2.pivots) {
      std::fprintf(stderr, "rref mismatch at n=%zu\n", n);
      std::exit(1);
    }

    std::printf("%-4s %6zu %12.2f %12.2f %7.2fx %12.2f %12.2f %7.2fx\n", "", n, mul_par,
                mul_ref, mul_ref / mul_par, rref_par, rref_ref, rref_ref / rref_par);
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t max_size = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 512;
  std::printf("threads: %d\n", omp_get_max_threads());
  Fp::set_modulus(101);
  bench_field<Fp>("F101", max_size);
  bench_field<Rat>("Q", std::min<std::size_t>(max_size, 128));
  return 0;
}
