#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>

#include "torilink/cyclic.hpp"

using namespace torilink;

namespace {

bool pairwise_coprime(const std::vector<long>& phi) {
  for (size_t i = 0; i < phi.size(); ++i)
    for (size_t j = i + 1; j < phi.size(); ++j)
      if (std::gcd(phi[i], phi[j]) != 1) return false;
  return true;
}

std::vector<long> random_primitive_phi(std::mt19937_64& rng) {
  std::vector<long> phi(5);
  for (;;) {
    long g = 0;
    for (long& x : phi) {
      x = static_cast<long>(rng() % 9) - 4;
      g = std::gcd(g, x);
    }
    if (g == 1) return phi;
  }
}

}  // namespace

TEST_CASE("totient and divisors") {
  CHECK(totient(1) == 1);
  CHECK(totient(2) == 1);
  CHECK(totient(9) == 6);
  CHECK(totient(12) == 4);
  CHECK(positive_divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(positive_divisors(1) == std::vector<long>{1});
  CHECK(positive_divisors(7) == std::vector<long>{1, 7});
}

TEST_CASE("cyclotomic degree bookkeeping") {
  CyclotomicExponents e;
  e.e = {{1, 2}, {3, 1}, {4, 3}};
  // deg Phi_1 = 1, deg Phi_3 = 2, deg Phi_4 = 2.
  CHECK(e.degree() == 2 * 1 + 1 * 2 + 3 * 2);
  CHECK(CyclotomicExponents{}.degree() == 0);
}

TEST_CASE("specializing a generator") {
  // Non-vanishing case: every d dividing some |x_i| collects the a_i.
  const auto s = specialize_generator({1, 1, 0, 0, 6}, {2, 3, 1, 1, 1});
  CHECK_FALSE(s.vanishes);
  // x = (2,3,1): d=1 gets a1+a2+a5 = 8, d=2 gets a1, d=3 gets a2.
  CHECK(s.e.at(1) == 8);
  CHECK(s.e.at(2) == 1);
  CHECK(s.e.at(3) == 1);
  CHECK(s.e.count(6) == 0);
  CHECK(s.degree() == 8 + 1 + 2);

  // A positive exponent on a zeroed variable sends the generator to zero.
  CHECK(specialize_generator({1, 1, 0, 0, 6}, {0, 1, 1, 1, 1}).vanishes);
  CHECK_FALSE(specialize_generator({0, 2, 0, 2, 4}, {0, 1, 1, 1, 1}).vanishes);
}

TEST_CASE("expanded generators match the factored degree") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 25; ++trial) {
    const std::vector<long> phi = random_primitive_phi(rng);
    // Pick an exponent vector with support on the nonzero entries.
    std::vector<int> a(5, 0);
    for (int i = 0; i < 5; ++i)
      if (phi[i] != 0) a[i] = static_cast<int>(rng() % 3);
    const auto s = specialize_generator(a, phi);
    REQUIRE_FALSE(s.vanishes);
    // Sum over d | n of deg Phi_d is n, so both degree computations must
    // land on sum a_i * |x_i|.
    long expect = 0;
    for (int i = 0; i < 5; ++i) expect += a[i] * std::abs(phi[i]);
    CHECK(s.degree() == expect);
    CHECK(expand_generator(a, phi).degree() == expect);
  }
}

TEST_CASE("polynomial gcd") {
  const ZPoly a = ZPoly::t_power_minus_one(6);
  const ZPoly b = ZPoly::t_power_minus_one(4);
  CHECK(zpoly_gcd(a, b) == ZPoly::t_power_minus_one(2));
  CHECK(zpoly_gcd(a, ZPoly::zero()) == a);
  CHECK(zpoly_gcd(ZPoly::one(), b) == ZPoly::one());

  ZPoly scaled;
  scaled.c = {-2, 2};  // 2t - 2
  ZPoly other;
  other.c = {-3, 0, 3};  // 3t^2 - 3
  CHECK(zpoly_gcd(scaled, other) == ZPoly::t_power_minus_one(1));
  CHECK(scaled.content() == 2);
  CHECK(scaled.primitive_part().c == std::vector<mpz_class>{-1, 1});
}

TEST_CASE("betti numbers of small covers") {
  const CyclicBetti base = cyclic_cover_betti({1, 1, 1, 1, 1});
  CHECK(base.b1 == 8);
  CHECK_FALSE(base.b2.has_value());
  CHECK(base.b3 == 0);

  CHECK(cyclic_cover_betti({3, 3, 1, 1, 1}).b1 == 10);
  CHECK(cyclic_cover_betti({2, 2, 1, 1, 1}).b1 == 9);
  CHECK(cyclic_cover_betti({5, 5, 1, 1, 1}).b1 == 12);
  CHECK(cyclic_cover_betti({7, 7, 1, 1, 1}).b1 == 14);

  CHECK(cyclic_cover_betti({1, 2, 3, 5, 7}).b1 == 8);
  CHECK(cyclic_cover_betti({1, 1, 2, 3, 5}).b1 == 8);
}

TEST_CASE("zero entries push ranks to infinity") {
  // Two zeros kill every generator, one zero only some.
  const CyclicBetti two = cyclic_cover_betti({1, 1, 0, 0, 1});
  CHECK_FALSE(two.b1.has_value());
  const CyclicBetti one = cyclic_cover_betti({1, 1, 1, 0, 1});
  CHECK(one.b1.has_value());
  CHECK_FALSE(one.b3.has_value());
  CHECK(cyclic_cover_betti({1, 1, 1, 1, 1}).b3 == 0);
}

TEST_CASE("non-primitive classes are rejected") {
  CHECK_THROWS(cyclic_cover_betti({2, 2, 2, 2, 2}));
  CHECK_THROWS(cyclic_cover_betti({0, 0, 0, 0, 0}));
  CHECK_THROWS(cyclic_cover_betti({1, 1, 1, 1}));
}

TEST_CASE("degree eight exactly on pairwise coprime classes") {
  // Every generator has exponent sum eight, so the t-1 part contributes
  // eight to each class; higher cyclotomic factors survive exactly when
  // some d > 1 divides two different entries.
  std::vector<long> phi(5);
  for (phi[0] = 1; phi[0] <= 3; ++phi[0])
    for (phi[1] = 1; phi[1] <= 3; ++phi[1])
      for (phi[2] = 1; phi[2] <= 3; ++phi[2])
        for (phi[3] = 1; phi[3] <= 3; ++phi[3])
          for (phi[4] = 1; phi[4] <= 3; ++phi[4]) {
            const auto d = delta_phi_degree(phi);
            REQUIRE(d.has_value());
            CHECK(*d >= 8);
            CHECK((*d == 8) == pairwise_coprime(phi));
          }
}

TEST_CASE("factored and expanded degrees agree") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 25; ++trial) {
    const std::vector<long> phi = random_primitive_phi(rng);
    CHECK(delta_phi_degree(phi) == delta_phi_degree_oracle(phi));
  }
}

TEST_CASE("canonical representatives are orbit invariants") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const std::vector<long> phi = random_primitive_phi(rng);
    const auto canon = canonical_phi(phi);
    CHECK(canonical_phi(canon) == canon);

    // Rotate, apply the doubling map, and flip signs.
    std::vector<long> moved(5);
    const int shift = static_cast<int>(rng() % 5);
    for (int i = 0; i < 5; ++i) moved[(2 * (i + shift)) % 5] = phi[i];
    for (long& x : moved)
      if (rng() % 2) x = -x;
    CHECK(canonical_phi(moved) == canon);
    CHECK(delta_phi_degree(moved) == delta_phi_degree(phi));
  }
}
