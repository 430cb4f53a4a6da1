#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>

#include "torilink/cover.hpp"

using namespace torilink;

namespace {

Colouring builtin_colouring(const std::string& polytope,
                            const std::string& colouring = "default") {
  auto p = std::make_shared<const CombinatorialPolytope>(
      CombinatorialPolytope::builtin(polytope));
  return Colouring::builtin(p, polytope, colouring);
}

}  // namespace

TEST_CASE("square cover with two colours is a torus") {
  const QuotientComplex q = assemble(builtin_colouring("cube2"));
  CHECK(q.closed());
  CHECK(q.counts() == std::vector<long>{4, 8, 4});
  CHECK(q.total_cells() == 16);
  CHECK(q.chi() == 0);
  CHECK(q.homology().betti == std::vector<long>{1, 2, 1});
  CHECK(q.homology().torsion_free());
}

TEST_CASE("square cover with a full basis is still a torus") {
  // Four colours give sixteen chambers; the surface stays orientable and
  // flat, so only the cell counts change.
  const QuotientComplex q = assemble(builtin_colouring("cube2", "basis"));
  CHECK(q.counts() == std::vector<long>{16, 32, 16});
  CHECK(q.chi() == 0);
  CHECK(q.homology().betti == std::vector<long>{1, 2, 1});
}

TEST_CASE("cube cover is the 3-torus") {
  const QuotientComplex q = assemble(builtin_colouring("cube3"));
  CHECK(q.closed());
  CHECK(q.counts() == std::vector<long>{8, 24, 24, 8});
  CHECK(q.chi() == 0);
  CHECK(q.homology().betti == std::vector<long>{1, 3, 3, 1});
}

TEST_CASE("tessellation and spine agree on closed covers") {
  for (const char* name : {"cube2", "cube3"}) {
    const QuotientComplex q = assemble(builtin_colouring(name));
    CHECK(q.homology() == q.spine().homology());
    CHECK(q.spine().chi() == q.chi());
  }
}

TEST_CASE("tessellation indices are consistent") {
  const QuotientComplex q = assemble(builtin_colouring("cube2"));
  const CellPoset& tess = q.tessellation();
  const auto& info = q.tess_info();
  REQUIRE(tess.size() == static_cast<int>(info.size()));
  for (int id = 0; id < tess.size(); ++id)
    CHECK(q.tess_index(info[id].cell, info[id].rep) == id);
}

TEST_CASE("cusped covers have no closed tessellation") {
  const QuotientComplex q = assemble(builtin_colouring("P3"));
  CHECK_FALSE(q.closed());
  CHECK(q.counts()[q.polytope().dim()] == 8);
  CHECK_THROWS(q.homology());
  // The spine is the dual cube complex and is always available.
  CHECK(q.spine().homology().betti.size() >= 1);
}

TEST_CASE("P3 cusps are tori") {
  const QuotientComplex q = assemble(builtin_colouring("P3"));
  const auto cusps = q.cusps();
  REQUIRE(cusps.size() == 3);
  for (const Cusp& c : cusps) {
    CHECK(c.section_homology.betti == std::vector<long>{1, 2, 1});
    CHECK(c.section_orientable);
    CHECK(c.same_colour_pairs.size() == 1);
  }
}

TEST_CASE("P4 cover invariants") {
  const QuotientComplex q = assemble(builtin_colouring("P4"));
  CHECK_FALSE(q.closed());
  CHECK(q.counts() == std::vector<long>{10, 120, 240, 160, 32});
  CHECK(q.chi() == 2);
  CHECK(q.volume_pi2_coeff() == mpq_class(8, 3));
  CHECK(q.spine().homology().betti ==
        std::vector<long>{1, 5, 10, 4, 0});
}

TEST_CASE("P4 cusp sections are 3-tori") {
  const QuotientComplex q = assemble(builtin_colouring("P4"));
  const auto cusps = q.cusps();
  REQUIRE(cusps.size() == 5);
  for (const Cusp& c : cusps) {
    CHECK(c.section_homology.betti == std::vector<long>{1, 3, 3, 1});
    CHECK(c.section_orientable);
    CHECK(c.same_colour_pairs.size() == 1);
  }
}

TEST_CASE("descending links by weight") {
  const Colouring col = builtin_colouring("P4");
  // Weight one: two isolated facet vertices, so one extra component.
  const auto low = descending_link(col, 0b00001).reduced_betti();
  REQUIRE(low.count(0) == 1);
  CHECK(low.at(0) == 1);
  CHECK(low.count(2) == 0);
  // Full weight: a wedge of four 2-spheres.
  const auto top = descending_link(col, 0b11111).reduced_betti();
  REQUIRE(top.count(2) == 1);
  CHECK(top.at(2) == 4);
  CHECK(top.count(0) == 0);
  CHECK(top.count(1) == 0);
}

TEST_CASE("improper colourings are rejected") {
  auto p = std::make_shared<const CombinatorialPolytope>(
      CombinatorialPolytope::builtin("cube2"));
  const Colouring clash(p, 2, {0b01, 0b10, 0b01, 0b10});
  CHECK_THROWS(assemble(clash));
  // The doubled rule admits exactly this pattern.
  const QuotientComplex q = assemble(clash, Properness::DoubledAllowed);
  CHECK(q.total_cells() > 0);
}
