#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "torilink/simplicial.hpp"

using namespace torilink;

namespace {

SimplicialComplex empty_complex() { return SimplicialComplex(4, {}); }

SimplicialComplex triangle_boundary() {
  return SimplicialComplex(3, {0b011, 0b101, 0b110});
}

// Boundary of the 3-simplex: all four triangles on four vertices.
SimplicialComplex sphere2() {
  return SimplicialComplex(4, {0b0111, 0b1011, 0b1101, 0b1110});
}

SimplicialComplex two_points() { return SimplicialComplex(2, {0b01, 0b10}); }

}  // namespace

TEST_CASE("empty complex") {
  const SimplicialComplex k = empty_complex();
  CHECK(k.empty());
  CHECK(k.describe() == "empty");
  CHECK(k.euler_characteristic() == 0);
  const auto red = k.reduced_betti();
  REQUIRE(red.count(-1) == 1);
  CHECK(red.at(-1) == 1);
}

TEST_CASE("a single vertex is a point") {
  const SimplicialComplex k(3, {0b100});
  CHECK(k.describe() == "point");
  CHECK(k.f_vector() == std::vector<long>{1});
  CHECK(k.reduced_betti().empty());
}

TEST_CASE("triangle boundary is a circle") {
  const SimplicialComplex k = triangle_boundary();
  CHECK(k.describe() == "circle");
  CHECK(k.f_vector() == std::vector<long>{3, 3});
  CHECK(k.euler_characteristic() == 0);
  CHECK(k.homology().betti == std::vector<long>{1, 1});
  CHECK(k.has_simplex(0b011));
  CHECK(k.has_simplex(0b001));
  CHECK_FALSE(k.has_simplex(0b111));
}

TEST_CASE("boundary of the 3-simplex is a 2-sphere") {
  const SimplicialComplex k = sphere2();
  CHECK(k.describe() == "sphere(2)");
  CHECK(k.f_vector() == std::vector<long>{4, 6, 4});
  CHECK(k.euler_characteristic() == 2);
  CHECK(k.homology().betti == std::vector<long>{1, 0, 1});
  const auto red = k.reduced_betti();
  REQUIRE(red.count(2) == 1);
  CHECK(red.at(2) == 1);
  CHECK(red.count(0) == 0);
}

TEST_CASE("faces are grouped by dimension") {
  const auto fs = sphere2().faces();
  REQUIRE(fs.size() == 3);
  CHECK(fs[0].size() == 4);
  CHECK(fs[1].size() == 6);
  CHECK(fs[2].size() == 4);
}

TEST_CASE("induced subcomplex") {
  // Dropping one vertex of the 2-sphere leaves a triangle disk.
  const SimplicialComplex k = sphere2().induced(0b0111);
  CHECK(k.f_vector() == std::vector<long>{3, 3, 1});
  CHECK(k.homology().betti == std::vector<long>{1, 0, 0});
  CHECK(k.reduced_betti().empty());

  CHECK(sphere2().induced(0).empty());
  CHECK(sphere2().induced(0b0011).f_vector() == std::vector<long>{2, 1});
}

TEST_CASE("join of two point pairs is a circle") {
  const SimplicialComplex j =
      SimplicialComplex::join(two_points(), two_points());
  CHECK(j.f_vector() == std::vector<long>{4, 4});
  CHECK(j.homology().betti == std::vector<long>{1, 1});
  CHECK(j.describe() == "circle");
}

TEST_CASE("join with a circle suspends") {
  const SimplicialComplex j =
      SimplicialComplex::join(two_points(), triangle_boundary());
  CHECK(j.euler_characteristic() == 2);
  CHECK(j.homology().betti == std::vector<long>{1, 0, 1});
}

TEST_CASE("chain complex matches the homology summary") {
  const ChainComplex c = sphere2().chain();
  c.check_boundary_squares_to_zero();
  CHECK(homology(c) == sphere2().homology());
}

TEST_CASE("vertex names survive") {
  const SimplicialComplex k(2, {0b11}, {"left", "right"});
  CHECK(k.vertex_name(0) == "left");
  CHECK(k.vertex_name(1) == "right");
}
