#include <doctest.h>

#include "tiltkit/matrix.hpp"

using namespace tiltkit;

namespace {

template <class K>
Matrix<K> from_ints(std::size_t r, std::size_t c, const std::vector<long long>& v) {
  Matrix<K> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = K::from_int(v[i * c + j]);
  return m;
}

template <class K>
Matrix<K> random_matrix(std::size_t r, std::size_t c, Rng& rng) {
  Matrix<K> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = random_scalar<K>(rng);
  return m;
}

template <class K>
void rref_basics() {
  auto id3 = Matrix<K>::identity(3);
  auto r = rref(id3);
  CHECK(r.mat == id3);
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

  Matrix<K> z(2, 2);
  auto rz = rref(z);
  CHECK(rz.mat == z);
  CHECK(rz.pivots.empty());

  auto m = from_ints<K>(2, 2, {1, 2, 2, 4});
  auto rm = rref(m);
  CHECK(rm.pivots == std::vector<std::size_t>{0});
  CHECK(rm.mat.at(0, 1) == K::from_int(2));
  CHECK(rm.mat.at(1, 0) == K::zero());
  CHECK(rm.mat.at(1, 1) == K::zero());
}

template <class K>
void kernel_solve_basics() {
  CHECK(nullspace(Matrix<K>::identity(4)).cols() == 0);
  Matrix<K> z(3, 3);
  CHECK(nullspace(z).cols() == 3);

  auto m = from_ints<K>(2, 2, {1, 2, 2, 4});
  auto ns = nullspace(m);
  REQUIRE(ns.cols() == 1);
  // kernel vector proportional to (2, -1): check m * v = 0
  Vec<K> v = ns.col(0);
  CHECK(is_zero_vec(apply_col(m, v)));
  CHECK(!v[0].is_zero());

  auto b = Vec<K>{K::from_int(5), K::from_int(7)};
  auto sol = solve(Matrix<K>::identity(2), b);
  REQUIRE(sol.has_value());
  CHECK(*sol == b);

  Matrix<K> zero22(2, 2);
  CHECK(!solve(zero22, b).has_value());

  auto one_row = from_ints<K>(1, 2, {1, 1});
  auto s = solve(one_row, Vec<K>{K::from_int(3)});
  REQUIRE(s.has_value());
  CHECK((*s)[0] + (*s)[1] == K::from_int(3));
}

template <class K>
void image_quotient_basics() {
  Matrix<K> z(3, 2);
  CHECK(image_basis(z).cols() == 0);
  CHECK(is_invertible(Matrix<K>::identity(5)));
  CHECK(!is_invertible(from_ints<K>(2, 2, {1, 2, 2, 4})));

  Matrix<K> sub(2, 1);
  sub.at(0, 0) = K::one();
  auto q = quotient_basis(sub, 2);
  REQUIRE(q.cols() == 1);
  CHECK(q.at(0, 0) == K::zero());
  CHECK(q.at(1, 0) == K::one());
}

template <class K>
void rank_nullity_and_substitution(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 25; ++t) {
    std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
    auto m = random_matrix<K>(r, c, rng);
    CHECK(rank(m) + nullspace(m).cols() == c);
    // a consistent right-hand side comes from an arbitrary x
    Vec<K> x(c);
    for (auto& v : x) v = random_scalar<K>(rng);
    Vec<K> b = apply_col(m, x);
    auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(apply_col(m, *sol) == b);
    // rref is idempotent
    auto R = rref(m).mat;
    CHECK(rref(R).mat == R);
  }
}

template <class K>
void parallel_matches_reference(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 8; ++t) {
    std::size_t n = 20 + rng() % 40;
    auto a = random_matrix<K>(n, n, rng);
    auto b = random_matrix<K>(n, n, rng);
    CHECK(mul(a, b) == ref::mul(a, b));
    auto r1 = rref(a);
    auto r2 = ref::rref(a);
    CHECK(r1.mat == r2.mat);
    CHECK(r1.pivots == r2.pivots);
  }
}

}  // namespace

TEST_CASE("exact linear algebra over F_101") {
  Fp::set_modulus(101);
  rref_basics<Fp>();
  kernel_solve_basics<Fp>();
  image_quotient_basics<Fp>();
  rank_nullity_and_substitution<Fp>(1);
  parallel_matches_reference<Fp>(2);
}

TEST_CASE("exact linear algebra over Q") {
  rref_basics<Rat>();
  kernel_solve_basics<Rat>();
  image_quotient_basics<Rat>();
  rank_nullity_and_substitution<Rat>(3);
  parallel_matches_reference<Rat>(4);
}

TEST_CASE("echelon spans and membership") {
  Fp::set_modulus(101);
  Rng rng(7);
  Echelon<Fp> e(6);
  std::vector<Vec<Fp>> added;
  for (int t = 0; t < 10; ++t) {
    Vec<Fp> v(6);
    for (auto& x : v) x = random_scalar<Fp>(rng);
    if (e.add(v)) added.push_back(v);
    CHECK(e.contains(v));
  }
  CHECK(e.dim() == added.size());
  CHECK(e.dim() <= 6);
}
