#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "torilink/gf2.hpp"

using namespace torilink;

TEST_CASE("dot product and weight") {
  CHECK(gf2_dot(0b101, 0b110) == 1);
  CHECK(gf2_dot(0b101, 0b101) == 0);
  CHECK(gf2_dot(0, 0b11111) == 0);
  CHECK(gf2_weight(0) == 0);
  CHECK(gf2_weight(0b10110) == 3);
}

TEST_CASE("span insertion and rank") {
  Gf2Span s(4);
  CHECK(s.rank() == 0);
  CHECK(s.insert(0b0011));
  CHECK(s.insert(0b0101));
  CHECK_FALSE(s.insert(0b0110));  // already the sum of the first two
  CHECK(s.rank() == 2);
  CHECK(s.contains(0b0110));
  CHECK_FALSE(s.contains(0b1000));
  CHECK_FALSE(s.insert(0));
}

TEST_CASE("reduce is a coset invariant") {
  Gf2Span s(5);
  s.insert(0b00111);
  s.insert(0b11100);
  for (Gf2Vec v = 0; v < 32; ++v) {
    const Gf2Vec r = s.reduce(v);
    CHECK(s.reduce(r) == r);  // idempotent
    for (Gf2Vec e : s.elements()) CHECK(s.reduce(v ^ e) == r);
  }
}

TEST_CASE("elements and coset representatives") {
  Gf2Span s(4);
  s.insert(0b0011);
  s.insert(0b1100);
  const auto els = s.elements();
  REQUIRE(els.size() == 4);
  CHECK(std::is_sorted(els.begin(), els.end()));
  for (Gf2Vec e : els) CHECK(s.contains(e));

  const auto reps = s.coset_reps();
  REQUIRE(reps.size() == 4);
  CHECK(std::is_sorted(reps.begin(), reps.end()));
  for (Gf2Vec r : reps) CHECK(s.reduce(r) == r);
  // Every vector of the ambient space lands on exactly one representative.
  for (Gf2Vec v = 0; v < 16; ++v)
    CHECK(std::count(reps.begin(), reps.end(), s.reduce(v)) == 1);
}

TEST_CASE("coordinates recover the basis combination") {
  Gf2Span s(6);
  s.insert(0b000111);
  s.insert(0b011001);
  s.insert(0b100100);
  for (Gf2Vec e : s.elements()) {
    const Gf2Vec mask = s.coordinates(e);
    Gf2Vec rebuilt = 0;
    for (size_t i = 0; i < s.basis().size(); ++i)
      if ((mask >> i) & 1) rebuilt ^= s.basis()[i];
    CHECK(rebuilt == e);
  }
}

TEST_CASE("span_of and gf2_rank") {
  const std::vector<Gf2Vec> vecs{0b001, 0b010, 0b011, 0b011};
  CHECK(gf2_rank(vecs, 3) == 2);
  CHECK(span_of(vecs, 3).rank() == 2);
  CHECK(gf2_rank({}, 3) == 0);
}

TEST_CASE("all-ones covector") {
  auto chi = solve_all_ones_covector({0b0001, 0b0010, 0b0100, 0b1000}, 4);
  REQUIRE(chi.has_value());
  CHECK(*chi == 0b1111);

  chi = solve_all_ones_covector({0b011, 0b101}, 3);
  REQUIRE(chi.has_value());
  CHECK(gf2_dot(*chi, 0b011) == 1);
  CHECK(gf2_dot(*chi, 0b101) == 1);

  // v, w and v^w cannot all pair to one.
  CHECK_FALSE(solve_all_ones_covector({0b01, 0b10, 0b11}, 2).has_value());
  CHECK_FALSE(solve_all_ones_covector({0}, 3).has_value());
}

TEST_CASE("dense solve") {
  // x0 + x1 = 1, x1 + x2 = 0, x0 + x2 = 1.
  const auto x = gf2_solve({0b011, 0b110, 0b101}, {1, 0, 1}, 3);
  REQUIRE(x.has_value());
  CHECK(gf2_dot(*x, 0b011) == 1);
  CHECK(gf2_dot(*x, 0b110) == 0);
  CHECK(gf2_dot(*x, 0b101) == 1);

  CHECK_FALSE(gf2_solve({0b11, 0b11}, {0, 1}, 2).has_value());
}

TEST_CASE("random invertible matrices act linearly") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 8);
    const auto cols = random_invertible_gf2(dim, rng);
    REQUIRE(static_cast<int>(cols.size()) == dim);
    CHECK(gf2_rank(cols, dim) == dim);
    const Gf2Vec u = static_cast<Gf2Vec>(rng()) & ((Gf2Vec{1} << dim) - 1);
    const Gf2Vec v = static_cast<Gf2Vec>(rng()) & ((Gf2Vec{1} << dim) - 1);
    CHECK(apply_gf2_matrix(cols, u ^ v) ==
          (apply_gf2_matrix(cols, u) ^ apply_gf2_matrix(cols, v)));
    const int i = static_cast<int>(rng() % dim);
    CHECK(apply_gf2_matrix(cols, Gf2Vec{1} << i) == cols[i]);
  }
}
