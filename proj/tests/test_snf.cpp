#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "torilink/snf.hpp"

using namespace torilink;

namespace {

SparseIntMatrix from_dense(const std::vector<std::vector<long>>& d) {
  const int rows = static_cast<int>(d.size());
  const int cols = rows ? static_cast<int>(d[0].size()) : 0;
  SparseIntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, d[r][c]);
  return m;
}

SparseIntMatrix random_matrix(std::mt19937_64& rng) {
  const int rows = 1 + static_cast<int>(rng() % 6);
  const int cols = 1 + static_cast<int>(rng() % 6);
  SparseIntMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m.set(r, c, static_cast<long>(rng() % 9) - 4);
  return m;
}

// Elementary integer row and column operations keep the SNF invariant.
SparseIntMatrix shuffled(const SparseIntMatrix& m, std::mt19937_64& rng) {
  auto d = m.dense();
  const int rows = m.rows(), cols = m.cols();
  for (int step = 0; step < 8; ++step) {
    const long k = static_cast<long>(rng() % 5) - 2;
    if (rows > 1 && rng() % 2 == 0) {
      const int a = static_cast<int>(rng() % rows);
      int b = static_cast<int>(rng() % rows);
      if (a == b) b = (b + 1) % rows;
      for (int c = 0; c < cols; ++c) d[a][c] += k * d[b][c];
    } else if (cols > 1) {
      const int a = static_cast<int>(rng() % cols);
      int b = static_cast<int>(rng() % cols);
      if (a == b) b = (b + 1) % cols;
      for (int r = 0; r < rows; ++r) d[r][a] += k * d[r][b];
    }
  }
  SparseIntMatrix out(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out.set(r, c, d[r][c]);
  return out;
}

}  // namespace

TEST_CASE("sparse matrix storage") {
  SparseIntMatrix m(3, 3);
  CHECK(m.is_zero());
  m.set(0, 1, 5);
  m.add(0, 1, -5);  // cancels, entry must vanish
  CHECK(m.get(0, 1) == 0);
  CHECK(m.nonzeros() == 0);
  m.add(2, 2, 7);
  CHECK(m.get(2, 2) == 7);
  CHECK(m.nonzeros() == 1);
  CHECK_FALSE(m.is_zero());
}

TEST_CASE("sparse multiply") {
  const auto a = from_dense({{1, 2}, {3, 4}});
  const auto b = from_dense({{0, 1}, {1, 0}});
  const auto ab = SparseIntMatrix::multiply(a, b);
  CHECK(ab.get(0, 0) == 2);
  CHECK(ab.get(0, 1) == 1);
  CHECK(ab.get(1, 0) == 4);
  CHECK(ab.get(1, 1) == 3);
}

TEST_CASE("smith normal form of small matrices") {
  CHECK(smith_normal_form(from_dense({{2, 0}, {0, 3}})).factors ==
        std::vector<mpz_class>{1, 6});
  CHECK(smith_normal_form(from_dense({{2, 4}, {6, 8}})).factors ==
        std::vector<mpz_class>{2, 4});
  CHECK(smith_normal_form(from_dense({{0, 0}, {0, 0}})).factors.empty());
  CHECK(smith_normal_form(from_dense({{6}})).factors ==
        std::vector<mpz_class>{6});
  // Rank-deficient: second row is twice the first.
  CHECK(smith_normal_form(from_dense({{1, 2}, {2, 4}})).factors ==
        std::vector<mpz_class>{1});
}

TEST_CASE("invariant factors divide in order") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const SparseIntMatrix m = random_matrix(rng);
    const SnfResult s = smith_normal_form(m);
    for (size_t i = 0; i + 1 < s.factors.size(); ++i) {
      CHECK(s.factors[i] > 0);
      CHECK(s.factors[i + 1] % s.factors[i] == 0);
    }
  }
}

TEST_CASE("rank agrees with fraction-free elimination") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const SparseIntMatrix m = random_matrix(rng);
    CHECK(smith_normal_form(m).rank() == rational_rank(m.dense()));
  }
}

TEST_CASE("unimodular operations preserve the factors") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const SparseIntMatrix m = random_matrix(rng);
    const SparseIntMatrix n = shuffled(m, rng);
    CHECK(smith_normal_form(m).factors == smith_normal_form(n).factors);
  }
}

TEST_CASE("rational rank basics") {
  CHECK(rational_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(rational_rank({{1, 0}, {0, 1}}) == 2);
  CHECK(rational_rank({}) == 0);
  CHECK(rational_rank({{0, 0, 0}}) == 0);
}
