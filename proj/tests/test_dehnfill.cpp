#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>

#include "torilink/dehnfill.hpp"

using namespace torilink;

namespace {

Colouring builtin_colouring(const std::string& polytope) {
  auto p = std::make_shared<const CombinatorialPolytope>(
      CombinatorialPolytope::builtin(polytope));
  return Colouring::builtin(p, polytope, "default");
}

}  // namespace

TEST_CASE("filling choice bookkeeping") {
  const FillingChoice same = FillingChoice::all_same_colour();
  CHECK(same.applies_to_all());
  CHECK_FALSE(same.pair_for("w1").has_value());

  FillingChoice mixed;
  mixed.set_same_colour("w1");
  mixed.set_pair("w2", "U1", "D3");
  CHECK_FALSE(mixed.applies_to_all());
  CHECK_FALSE(mixed.pair_for("w1").has_value());
  REQUIRE(mixed.pair_for("w2").has_value());
  CHECK(*mixed.pair_for("w2") == std::pair<std::string, std::string>{"U1", "D3"});
  CHECK_THROWS(mixed.pair_for("w3"));
}

TEST_CASE("filling choice json round trip") {
  FillingChoice c;
  c.set_same_colour("w1");
  c.set_pair("w2", "U1", "D3");
  const FillingChoice back = FillingChoice::from_json(c.to_json());
  CHECK_FALSE(back.applies_to_all());
  CHECK_FALSE(back.pair_for("w1").has_value());
  CHECK(*back.pair_for("w2") == std::pair<std::string, std::string>{"U1", "D3"});

  const FillingChoice all =
      FillingChoice::from_json(FillingChoice::all_same_colour().to_json());
  CHECK(all.applies_to_all());
  CHECK_FALSE(all.pair_for("anything").has_value());

  // The bare string form and a global choice with one explicit override.
  CHECK(FillingChoice::from_json("\"same-colour\"").applies_to_all());
  FillingChoice hybrid = FillingChoice::all_same_colour();
  hybrid.set_pair("w2", "U1", "D3");
  const FillingChoice hb = FillingChoice::from_json(hybrid.to_json());
  CHECK(hb.applies_to_all());
  CHECK_FALSE(hb.pair_for("w1").has_value());
  CHECK(hb.pair_for("w2").has_value());
  CHECK_THROWS_AS(
      FillingChoice::from_json("{\"*\": [\"U1\", \"D3\"]}"),
      std::invalid_argument);
}

TEST_CASE("recognize names the builtins") {
  for (const char* name :
       {"simplex(2)", "simplex(3)", "simplex(4)", "cube2", "cube3", "cube4",
        "pentagon", "pentagon_product", "triangular_prism", "pentagonal_prism",
        "suspension_of_triangle", "P3", "P4"}) {
    CAPTURE(name);
    CHECK(recognize(CombinatorialPolytope::builtin(name)) == name);
  }
  // A shape outside the catalogue reports unknown.
  const auto pent = CombinatorialPolytope::builtin("pentagon");
  const auto hept = [] {
    std::vector<std::string> facets;
    std::vector<VertexSpec> verts;
    for (int i = 0; i < 7; ++i) {
      facets.push_back("E" + std::to_string(i));
      verts.push_back({(std::uint64_t{1} << i) | (std::uint64_t{1} << ((i + 1) % 7)),
                       false,
                       "v" + std::to_string(i)});
    }
    return CombinatorialPolytope::from_vertex_incidence(2, facets, verts);
  }();
  CHECK(recognize(hept) == "unknown");
  CHECK(recognize(pent.poset()) == "pentagon");
}

TEST_CASE("same-colour filling of P3 gives the triangle suspension") {
  const FilledPolytope fp =
      dehn_fill(builtin_colouring("P3"), FillingChoice::all_same_colour());
  CHECK(fp.core.size() == 3);
  CHECK_FALSE(fp.smoothed);
  for (const CoreFace& c : fp.core) {
    CHECK(c.cell >= 0);
    CHECK(c.joined_facets.first != c.joined_facets.second);
  }
  // Each same-coloured core face disappears under smoothing.
  const FilledPolytope sm = smooth(fp);
  CHECK(sm.smoothed);
  CHECK(recognize(*sm.polytope) == "suspension_of_triangle");
  CHECK(filled_manifold_homology(sm).betti == std::vector<long>{1, 0, 0, 1});
}

TEST_CASE("opposite-pair filling of P3 gives the cube") {
  const Colouring col = builtin_colouring("P3");
  const CombinatorialPolytope& p = col.polytope();
  FillingChoice other;
  for (int v : p.ideal_vertices()) {
    // The square link has two opposite pairs; pick the one that is not
    // same-coloured.
    const CombinatorialPolytope link = p.vertex_link(v);
    for (const auto& [a, b] : link.opposite_facet_pairs()) {
      const int fa = p.facet_index(link.facet_names()[a]);
      const int fb = p.facet_index(link.facet_names()[b]);
      if (col.colour(fa) != col.colour(fb)) {
        other.set_pair(p.poset().label(v), link.facet_names()[a],
                       link.facet_names()[b]);
        break;
      }
    }
  }
  const FilledPolytope fp = dehn_fill(col, other);
  CHECK(recognize(*fp.polytope) == "cube3");
  // Nothing is same-coloured, so smoothing changes nothing.
  const FilledPolytope sm = smooth(fp);
  CHECK(recognize(*sm.polytope) == "cube3");
  CHECK(filled_manifold_homology(sm).betti == std::vector<long>{1, 3, 3, 1});
}

TEST_CASE("P3 core circles") {
  const FilledPolytope fp =
      dehn_fill(builtin_colouring("P3"), FillingChoice::all_same_colour());
  const auto comps = core_components(fp);
  REQUIRE(comps.size() == 3);
  // A same-coloured pair leaves a rank-1 stabilizer, so each of the
  // three geodesics lifts to four edge copies in the eight chambers.
  for (const CoreComponent& c : comps) {
    CHECK(c.n_cells == 4);
    CHECK(c.chi == 0);
    CHECK(c.is_closed);
    CHECK(c.orientable);
    CHECK(c.homology.betti == std::vector<long>{1, 1});
    CHECK(c.invariant_direction.has_value());
  }
}

TEST_CASE("same-colour filling of P4") {
  const FilledPolytope fp =
      dehn_fill(builtin_colouring("P4"), FillingChoice::all_same_colour());
  CHECK(recognize(*fp.polytope) == "pentagon_product");
  CHECK(fp.polytope->facet_count() == 10);
  CHECK(fp.polytope->vertex_cells().size() == 25);
  CHECK(fp.core.size() == 5);
  CHECK(recognize(*smooth(fp).polytope) == "simplex(4)");
}

TEST_CASE("P4 core tori") {
  const FilledPolytope fp =
      dehn_fill(builtin_colouring("P4"), FillingChoice::all_same_colour());
  const auto comps = core_components(fp);
  REQUIRE(comps.size() == 5);
  for (const CoreComponent& c : comps) {
    CHECK(c.n_cells == 16);
    CHECK(c.chi == 0);
    CHECK(c.is_closed);
    CHECK(c.orientable);
    CHECK(c.homology.betti == std::vector<long>{1, 2, 1});
  }
}

TEST_CASE("filled P4 cover is a homology 4-sphere") {
  const FilledPolytope sm = smooth(
      dehn_fill(builtin_colouring("P4"), FillingChoice::all_same_colour()));
  const HomologySummary h = filled_manifold_homology(sm);
  CHECK(h.betti == std::vector<long>{1, 0, 0, 0, 1});
  CHECK(h.torsion_free());
}
