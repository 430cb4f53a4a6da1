#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>
#include <random>

#include "torilink/colouring.hpp"

using namespace torilink;

namespace {

std::shared_ptr<const CombinatorialPolytope> shape(const std::string& name) {
  return std::make_shared<const CombinatorialPolytope>(
      CombinatorialPolytope::builtin(name));
}

}  // namespace

TEST_CASE("builtin colourings are proper") {
  struct Row {
    const char* polytope;
    const char* colouring;
    int rank;
  };
  for (const Row r : {Row{"P4", "default", 5}, Row{"P4", "rank4", 4},
                      Row{"P3", "default", 3}, Row{"cube3", "default", 3},
                      Row{"cube2", "default", 2},
                      Row{"pentagon_product", "default", 6}}) {
    CAPTURE(r.polytope);
    CAPTURE(r.colouring);
    const Colouring c = Colouring::builtin(shape(r.polytope), r.polytope,
                                           r.colouring);
    CHECK(c.rank() == r.rank);
    CHECK(c.complete());
    CHECK(c.proper());
  }
  CHECK_THROWS(Colouring::builtin(shape("cube2"), "cube2", "no-such"));
}

TEST_CASE("rank5 is an alias of the P4 default") {
  const auto p = shape("P4");
  CHECK(Colouring::builtin(p, "P4", "rank5").colours() ==
        Colouring::builtin(p, "P4", "default").colours());
}

TEST_CASE("basis colouring works for every builtin") {
  for (const std::string name : {"pentagon", "cube3", "simplex(4)"}) {
    const auto p = shape(name);
    const Colouring c = Colouring::builtin(p, name, "basis");
    CHECK(c.rank() == p->facet_count());
    CHECK(c.proper());
    CHECK(c.orientable());
  }
}

TEST_CASE("adjacent facets may not share a colour") {
  const auto p = shape("cube2");
  // X0 and Y0 meet in a corner; giving both colour 1 is improper.
  const Colouring c(p, 2, {0b01, 0b10, 0b01, 0b10});
  const auto bad = c.validate();
  REQUIRE_FALSE(bad.empty());
  CHECK_FALSE(c.proper());
  CHECK(bad[0].reason.find("colour") != std::string::npos);

  // Opposite facets sharing a colour is fine.
  const Colouring good(p, 2, {0b01, 0b01, 0b10, 0b10});
  CHECK(good.proper());
}

TEST_CASE("partial colourings check assigned facets only") {
  const auto p = shape("cube3");
  Colouring partial(p, 3, {0b001, 0, 0b010, 0, 0, 0});
  CHECK_FALSE(partial.complete());
  CHECK(partial.proper());
  CHECK(partial.colour(1) == 0);

  // The same pair of colours placed on adjacent facets already violates
  // properness, regardless of the unassigned rest.
  Colouring clash(p, 3, {0b001, 0, 0b001, 0, 0, 0});
  CHECK_FALSE(clash.proper());
}

TEST_CASE("nonzero colours are required to fit the rank") {
  const auto p = shape("cube2");
  CHECK_THROWS(Colouring(p, 2, {0b100, 0b01, 0b10, 0b01}));
  CHECK_THROWS(Colouring(p, 2, {0b01, 0b10, 0b01}));  // one entry short
}

TEST_CASE("orientability") {
  const auto p = shape("cube2");
  CHECK(Colouring::builtin(p, "cube2", "default").orientable());

  // Rank 3 colouring of the square with c3 = c1 + c2 on one facet: no
  // covector pairs to one against all three colours.
  const Colouring c(p, 3, {0b001, 0b010, 0b011, 0b011});
  CHECK(c.proper());
  CHECK_FALSE(c.orientable());
}

TEST_CASE("orientability is invariant under palette basis change") {
  std::mt19937_64 rng(29);
  for (const std::string name : {"P4", "cube3", "pentagon_product"}) {
    const auto p = shape(name);
    const Colouring c = Colouring::builtin(p, name, "default");
    for (int trial = 0; trial < 10; ++trial) {
      const auto mat = random_invertible_gf2(c.rank(), rng);
      std::vector<Gf2Vec> mapped;
      for (const Gf2Vec v : c.colours())
        mapped.push_back(apply_gf2_matrix(mat, v));
      const Colouring moved(p, c.rank(), mapped);
      CHECK(moved.proper() == c.proper());
      CHECK(moved.orientable() == c.orientable());
    }
  }
}

TEST_CASE("colours at a cell") {
  const auto p = shape("cube2");
  const Colouring c = Colouring::builtin(p, "cube2", "default");
  const int corner = p->vertex_cells()[0];
  const auto at = c.colours_at_cell(corner);
  REQUIRE(at.size() == 2);
  CHECK(at[0] != at[1]);
  CHECK(c.cell_colours_ok(corner, false));

  // A doubled colour at the corner passes only the doubled rule.
  const Colouring doubled(p, 2, {0b01, 0b10, 0b01, 0b10});
  const int bad_corner = [&] {
    for (int v : p->vertex_cells())
      if (!doubled.cell_colours_ok(v, false)) return v;
    return -1;
  }();
  REQUIRE(bad_corner >= 0);
  CHECK(doubled.cell_colours_ok(bad_corner, true));
}

TEST_CASE("json round trip") {
  const auto p = shape("P4");
  const Colouring c = Colouring::builtin(p, "P4", "default");
  const Colouring back = Colouring::from_json(p, c.to_json());
  CHECK(back.rank() == c.rank());
  CHECK(back.colours() == c.colours());
}

TEST_CASE("automorphisms preserving the colour classes") {
  const auto p = shape("cube2");
  const Colouring c = Colouring::builtin(p, "cube2", "default");
  const auto autos = colour_automorphisms(c);
  // The square has eight symmetries; all of them respect the two
  // opposite-pair colour classes.
  CHECK(autos.size() == 8);
  bool has_identity = false;
  for (const ColourAutomorphism& a : autos) {
    std::vector<int> id{0, 1, 2, 3};
    if (a.facet_perm == id) has_identity = true;
    for (const auto& [from, to] : a.class_map) {
      CHECK(from != 0);
      CHECK(to != 0);
    }
  }
  CHECK(has_identity);
}
