#include "torilink/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "torilink/alexander.hpp"
#include "torilink/choipark.hpp"
#include "torilink/colouring.hpp"
#include "torilink/cover.hpp"
#include "torilink/cyclic.hpp"
#include "torilink/dehnfill.hpp"
#include "torilink/laurent.hpp"
#include "torilink/polytope.hpp"
#include "torilink/rewrite.hpp"
#include "torilink/snf.hpp"
#include "torilink/symmetry.hpp"
#include "torilink/words.hpp"

namespace torilink {

namespace {

using Pair = std::pair<bool, std::string>;

std::string lvec(const std::vector<long>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

std::string ivec(const std::vector<int>& v) {
  return lvec(std::vector<long>(v.begin(), v.end()));
}

// Shared fixtures, built once.

std::shared_ptr<const CombinatorialPolytope> p4_ptr() {
  static const auto p = std::make_shared<const CombinatorialPolytope>(
      CombinatorialPolytope::builtin("P4"));
  return p;
}

const Colouring& p4_col() {
  static const Colouring c = Colouring::builtin(p4_ptr(), "P4", "default");
  return c;
}

const QuotientComplex& p4_cover() {
  static const QuotientComplex q = assemble(p4_col());
  return q;
}

const FilledPolytope& p4_filled() {
  static const FilledPolytope fp =
      dehn_fill(p4_col(), FillingChoice::all_same_colour());
  return fp;
}

const FilledPolytope& p4_smoothed() {
  static const FilledPolytope sm = smooth(p4_filled());
  return sm;
}

std::shared_ptr<const CombinatorialPolytope> p3_ptr() {
  static const auto p = std::make_shared<const CombinatorialPolytope>(
      CombinatorialPolytope::builtin("P3"));
  return p;
}

const Colouring& p3_col() {
  static const Colouring c = Colouring::builtin(p3_ptr(), "P3", "default");
  return c;
}

const AlexanderIdeal& link_ideal() {
  static const AlexanderIdeal a =
      alexander_ideal(alexander_matrix(ivansic_presentation()), 4);
  return a;
}

const LabelRewriter& p4_rewriter() {
  static const LabelRewriter rw = [] {
    const CombinatorialPolytope& p = *p4_ptr();
    const int n = p.facet_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) adj[i][j] = p.facets_adjacent(i, j);
    return LabelRewriter(adj, p4_col().colours());
  }();
  return rw;
}

LabelWord lw(const std::vector<std::string>& names) {
  return label_word_from_names(*p4_ptr(), names);
}

// ---- polytope checks ----

Pair check_p4_facets() {
  const CombinatorialPolytope& p = *p4_ptr();
  const std::vector<int> fv = p.f_vector();
  const bool ok =
      p.dim() == 4 && p.facet_count() == 10 && fv == std::vector<int>{10, 30, 30, 10};
  return {ok, "10 facets, f-vector " + ivec(fv)};
}

Pair check_p4_vertices() {
  const CombinatorialPolytope& p = *p4_ptr();
  const auto real = p.real_vertices(), ideal = p.ideal_vertices();
  const bool ok = real.size() == 5 && ideal.size() == 5;
  return {ok, std::to_string(real.size()) + " real + " +
                  std::to_string(ideal.size()) + " ideal vertices"};
}

Pair check_p4_adjacency() {
  const CombinatorialPolytope& p = *p4_ptr();
  for (int i = 0; i < p.facet_count(); ++i) {
    int non = 0;
    for (int j = 0; j < p.facet_count(); ++j)
      if (j != i && !p.facets_adjacent(i, j)) ++non;
    if (non != 3)
      return {false, p.facet_names()[i] + " has " + std::to_string(non) +
                         " opposite facets, expected 3"};
  }
  const auto pairs = p.opposite_facet_pairs();
  if (pairs.size() != 15)
    return {false, std::to_string(pairs.size()) + " opposite pairs, expected 15"};
  return {true, "each facet meets 6 others; 15 opposite pairs"};
}

Pair check_p4_ideal_links() {
  const CombinatorialPolytope& p = *p4_ptr();
  for (const int v : p.ideal_vertices()) {
    const CombinatorialPolytope link = p.vertex_link(v);
    const std::string shape = recognize(link);
    if (shape != "cube3")
      return {false, "link of " + p.poset().label(v) + " recognized as " + shape};
  }
  return {true, "all 5 ideal vertex links are 3-cubes"};
}

Pair check_p3_structure() {
  const CombinatorialPolytope& p = *p3_ptr();
  if (p.dim() != 3 || p.facet_count() != 6 || p.real_vertices().size() != 2 ||
      p.ideal_vertices().size() != 3)
    return {false, "unexpected P3 face counts"};
  for (const int v : p.ideal_vertices()) {
    const std::string shape = recognize(p.vertex_link(v));
    if (shape != "cube2")
      return {false, "link of " + p.poset().label(v) + " recognized as " + shape};
  }
  return {true, "bipyramid: 6 facets, 2 real apexes, 3 ideal links = squares"};
}

// ---- colouring checks ----

Pair check_p4_colouring_proper() {
  const Colouring& c = p4_col();
  const auto bad = c.validate();
  const bool ok = bad.empty() && c.rank() == 5 && c.complete();
  std::string d = "rank 5, proper";
  if (!bad.empty()) d = "violation at " + bad.front().cell_label + ": " + bad.front().reason;
  return {ok, d};
}

Pair check_p4_colouring_orientable() {
  return {p4_col().orientable(), "all-ones covector orients the cover"};
}

// Exactly one opposite facet pair of each ideal cube link shares a colour.
Pair same_colour_pair_count(const CombinatorialPolytope& p, const Colouring& col,
                            int pairs_expected) {
  for (const int v : p.ideal_vertices()) {
    const CombinatorialPolytope link = p.vertex_link(v);
    const auto pairs = link.opposite_facet_pairs();
    if (static_cast<int>(pairs.size()) != pairs_expected)
      return {false, p.poset().label(v) + " link has " +
                         std::to_string(pairs.size()) + " opposite pairs"};
    int same = 0;
    for (const auto& [a, b] : pairs) {
      const int fa = p.facet_index(link.facet_names()[a]);
      const int fb = p.facet_index(link.facet_names()[b]);
      if (col.colour(fa) == col.colour(fb)) ++same;
    }
    if (same != 1)
      return {false, p.poset().label(v) + " link has " + std::to_string(same) +
                         " same-coloured pairs, expected 1"};
  }
  return {true, "one same-coloured opposite pair per ideal vertex link"};
}

Pair check_p4_link_pairs() { return same_colour_pair_count(*p4_ptr(), p4_col(), 3); }

Pair check_p3_colouring() {
  const Colouring& c = p3_col();
  if (!c.proper()) return {false, "colouring not proper"};
  return same_colour_pair_count(*p3_ptr(), c, 2);
}

// ---- cover checks ----

Pair check_cover_chambers() {
  const QuotientComplex& q = p4_cover();
  const long top = static_cast<long>(q.cells()[4].size());
  const bool ok = top == 32 && q.chi() == 2;
  return {ok, std::to_string(top) + " chambers, chi " + std::to_string(q.chi())};
}

Pair check_cover_volume() {
  const mpq_class v = p4_cover().volume_pi2_coeff();
  return {v == mpq_class(8, 3), "volume " + v.get_str() + " * pi^2"};
}

Pair check_cover_cusps() {
  const auto cusps = p4_cover().cusps();
  if (cusps.size() != 5)
    return {false, std::to_string(cusps.size()) + " cusps, expected 5"};
  for (const Cusp& c : cusps) {
    if (c.section_homology.betti != std::vector<long>{1, 3, 3, 1} ||
        !c.section_homology.torsion_free() || !c.section_orientable)
      return {false, "cusp " + c.vertex_name + " section " +
                         c.section_homology.betti_string()};
  }
  return {true, "5 cusps, 3-torus sections (1,3,3,1)"};
}

Pair check_cover_spine() {
  const Spine s = p4_cover().spine();
  const HomologySummary h = s.homology();
  const bool ok = h.betti == std::vector<long>{1, 5, 10, 4, 0} &&
                  h.torsion_free() && s.chi() == 2;
  return {ok, "spine homology " + h.betti_string()};
}

Pair check_cover_homology() {
  // Closed covers admit two homology routes: the primal tessellation and
  // the dual spine.  The covers of the coloured squares and cubes are tori.
  for (const auto& [shape, expected] :
       {std::pair<const char*, std::vector<long>>{"cube2", {1, 2, 1}},
        {"cube3", {1, 3, 3, 1}}}) {
    const auto p = std::make_shared<const CombinatorialPolytope>(
        CombinatorialPolytope::builtin(shape));
    const Colouring col = Colouring::builtin(p, shape, "default");
    const QuotientComplex q = assemble(col);
    const HomologySummary primal = q.homology();
    if (primal.betti != expected || !primal.torsion_free())
      return {false, std::string(shape) + " cover homology " +
                         primal.betti_string()};
    if (!(q.spine().homology() == primal))
      return {false, std::string(shape) + " spine disagrees with tessellation"};
  }
  return {true, "tessellation and spine agree on the torus covers"};
}

Pair check_descending_links() {
  static const std::array<std::array<long, 3>, 6> expected{{
      {0, 0, 0},  // weight 0 is unused
      {1, 0, 0},
      {0, 0, 0},
      {0, 1, 0},
      {0, 0, 0},
      {0, 0, 4},
  }};
  for (Gf2Vec v = 1; v < 32; ++v) {
    const SimplicialComplex sc = descending_link(p4_col(), v);
    auto red = sc.reduced_betti();
    const auto get = [&](int d) {
      const auto it = red.find(d);
      return it == red.end() ? 0L : it->second;
    };
    const std::array<long, 3> got{get(0), get(1), get(2)};
    const int w = gf2_weight(v);
    if (got != expected[w])
      return {false, "weight " + std::to_string(w) + " vertex " +
                         std::to_string(v) + " has reduced ranks (" +
                         std::to_string(got[0]) + "," + std::to_string(got[1]) +
                         "," + std::to_string(got[2]) + ")"};
  }
  return {true, "reduced ranks (1,0,0),(0,0,0),(0,1,0),(0,0,0),(0,0,4) by weight"};
}

// ---- filling checks ----

Pair check_fill_pentagon_product() {
  const FilledPolytope& fp = p4_filled();
  const std::string shape = recognize(*fp.polytope);
  const long verts = static_cast<long>(fp.polytope->vertex_cells().size());
  const bool ok = shape == "pentagon_product" && fp.polytope->facet_count() == 10 &&
                  verts == 25 && fp.core.size() == 5;
  return {ok, "filled polytope " + shape + ", " +
                  std::to_string(fp.polytope->facet_count()) + " facets, " +
                  std::to_string(verts) + " vertices"};
}

Pair check_fill_smooth_simplex() {
  const std::string shape = recognize(*p4_smoothed().polytope);
  return {shape == "simplex(4)", "smoothed polytope " + shape};
}

Pair check_fill_homology() {
  const HomologySummary h = filled_manifold_homology(p4_smoothed());
  const bool ok = h.betti == std::vector<long>{1, 0, 0, 0, 1} && h.torsion_free();
  return {ok, "filled cover homology " + h.betti_string()};
}

Pair check_fill_cores() {
  const auto comps = core_components(p4_filled());
  if (comps.size() != 5)
    return {false, std::to_string(comps.size()) + " core components, expected 5"};
  for (const CoreComponent& c : comps) {
    if (c.n_cells != 16 || c.chi != 0 || !c.is_closed || !c.orientable ||
        c.homology.betti != std::vector<long>{1, 2, 1})
      return {false, "component with " + std::to_string(c.n_cells) +
                         " squares, chi " + std::to_string(c.chi) + ", homology " +
                         c.homology.betti_string()};
  }
  return {true, "5 tori, 16 squares each, chi 0, orientable"};
}

Pair check_p3_fillings() {
  const CombinatorialPolytope& p = *p3_ptr();
  const Colouring& col = p3_col();

  // Both opposite pairs of every ideal square link, same-coloured one first.
  struct VertexPairs {
    std::string name;
    std::array<std::pair<std::string, std::string>, 2> pair;
  };
  std::vector<VertexPairs> vp;
  for (const int v : p.ideal_vertices()) {
    const CombinatorialPolytope link = p.vertex_link(v);
    const auto pairs = link.opposite_facet_pairs();
    if (pairs.size() != 2) return {false, "ideal link is not a square"};
    VertexPairs e;
    e.name = p.poset().label(v);
    int n_same = 0;
    for (const auto& [a, b] : pairs) {
      const std::string na = link.facet_names()[a], nb = link.facet_names()[b];
      const bool same = col.colour(p.facet_index(na)) == col.colour(p.facet_index(nb));
      e.pair[same ? 0 : 1] = {na, nb};
      if (same) ++n_same;
    }
    if (n_same != 1) return {false, "link without unique same-coloured pair"};
    vp.push_back(e);
  }

  int processed = 0;
  for (int combo = 0; combo < 8; ++combo) {
    FillingChoice ch;
    for (int k = 0; k < 3; ++k) {
      const auto& pr = vp[k].pair[(combo >> k) & 1];
      ch.set_pair(vp[k].name, pr.first, pr.second);
    }
    const FilledPolytope fp = dehn_fill(col, ch);
    const FilledPolytope sm = smooth(fp);
    const HomologySummary h = filled_manifold_homology(sm);
    const auto cores = core_components(fp);
    if (cores.size() != 3)
      return {false, "combo " + std::to_string(combo) + ": " +
                         std::to_string(cores.size()) + " red components"};
    for (const CoreComponent& c : cores)
      if (c.chi != 0 || !c.is_closed || c.homology.betti != std::vector<long>{1, 1})
        return {false, "combo " + std::to_string(combo) + ": red component is not a circle"};

    if (combo == 0) {
      // All same-coloured pairs: the surgered sphere.
      if (recognize(*sm.polytope) != "suspension_of_triangle")
        return {false, "same-colour filling smoothed to " + recognize(*sm.polytope)};
      if (h.betti != std::vector<long>{1, 0, 0, 1})
        return {false, "same-colour filling homology " + h.betti_string()};
    } else if (combo == 7) {
      // All other pairs: the centre cube of the 3-torus picture.
      if (recognize(*fp.polytope) != "cube3")
        return {false, "centre filling recognized as " + recognize(*fp.polytope)};
      if (h.betti != std::vector<long>{1, 3, 3, 1})
        return {false, "centre filling homology " + h.betti_string()};
      for (const CoreComponent& c : cores)
        if (c.n_cells != 2)
          return {false, "centre filling geodesic with " +
                             std::to_string(c.n_cells) + " edges"};
    } else {
      if (h.betti.size() != 4 || h.betti[0] != 1)
        return {false, "combo " + std::to_string(combo) + " homology " +
                           h.betti_string()};
    }
    ++processed;
  }
  return {true, "8 choices; torus and sphere fillings as predicted"};
}

// ---- presentation and Alexander checks ----

Pair check_presentation_shape() {
  const Presentation p = ivansic_presentation();
  if (p.generators.size() != 5 || p.relators.size() != 10)
    return {false, std::to_string(p.generators.size()) + " generators, " +
                       std::to_string(p.relators.size()) + " relators"};
  for (const Word& r : p.relators) {
    const auto ab = r.abelianized(5);
    if (ab != std::vector<long>(5, 0))
      return {false, "relator " + r.str(p.generators) + " does not abelianize to 0"};
  }
  return {true, "5 generators, 10 commutator relators"};
}

Pair check_presentation_h1() {
  const auto inv = abelian_invariants(ivansic_presentation());
  const bool ok = inv == std::vector<mpz_class>(5, 0);
  std::string d = "invariants (";
  for (size_t i = 0; i < inv.size(); ++i)
    d += (i ? "," : "") + inv[i].get_str();
  return {ok, d + "): H1 = Z^5"};
}

Pair check_peripheral_triples() {
  const Presentation p = ivansic_presentation();
  const auto x = [](int i, int e = 1) { return Word::generator(((i % 5) + 5) % 5, e); };
  // The cusp-0 triple spelled out; the others are its cyclic shifts.
  const auto t0 = peripheral_triple(0);
  if (t0[0] != x(0) || t0[1] != Word::commutator(x(2), x(3)) ||
      t0[2] != Word::commutator(x(1, -1), x(4, -1)))
    return {false, "triple 0 is (" + t0[0].str(p.generators) + ", " +
                       t0[1].str(p.generators) + ", " + t0[2].str(p.generators) + ")"};
  // Each meridian commutes with both longitudes modulo the relators.
  for (int i = 0; i < 5; ++i) {
    const auto t = peripheral_triple(i);
    for (int l = 1; l <= 2; ++l) {
      const Word c = Word::commutator(t[0], t[l]);
      if (!simplify_with_relators(c, p.relators).empty())
        return {false, "cusp " + std::to_string(i) +
                           ": meridian-longitude commutator does not reduce"};
    }
  }
  return {true, "(a, [c,d], [b^-1,e^-1]) and shifts; commutators reduce to 1"};
}

std::vector<std::vector<Laurent>> expected_alexander_matrix() {
  const int n = 5;
  const Laurent one = Laurent::constant(n, 1);
  const auto tm1 = [&](int i) { return Laurent::variable(n, i % 5) - one; };
  std::vector<std::vector<Laurent>> m(10, std::vector<Laurent>(n, Laurent(n)));
  for (int i = 0; i < 5; ++i) {
    // d[x, [y, z]] has dy = -(t_z - 1)(t_x - 1) and dz = (t_y - 1)(t_x - 1).
    m[i][(i + 2) % 5] = -(tm1(i + 3) * tm1(i));
    m[i][(i + 3) % 5] = tm1(i + 2) * tm1(i);
  }
  for (int i = 0; i < 5; ++i) {
    // d[x, [y^-1, z^-1]] picks up the extra unit (t_y t_z)^-1.
    const Laurent u = Laurent::variable(n, (i + 1) % 5, -1) *
                      Laurent::variable(n, (i + 4) % 5, -1);
    m[5 + i][(i + 1) % 5] = -(u * tm1(i + 4) * tm1(i));
    m[5 + i][(i + 4) % 5] = u * tm1(i + 1) * tm1(i);
  }
  return m;
}

Pair check_alexander_matrix() {
  const auto got = alexander_matrix(ivansic_presentation());
  const auto want = expected_alexander_matrix();
  if (got.size() != want.size()) return {false, "wrong row count"};
  for (size_t i = 0; i < got.size(); ++i)
    for (size_t j = 0; j < got[i].size(); ++j)
      if (!(got[i][j] == want[i][j]))
        return {false, "entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") = " + got[i][j].str() + ", expected " +
                           want[i][j].str()};
  return {true, "all 50 Fox entries match the closed forms"};
}

Pair check_alexander_census() {
  const AlexanderIdeal& a = link_ideal();
  const bool product_form =
      a.gcd.has_value() && a.exponent_vectors.size() == a.generators.size();
  const bool ok = a.total == 1050 && product_form;
  return {ok, std::to_string(a.total) + " minors, " + std::to_string(a.zero) +
                  " zero, " + std::to_string(a.generators.size()) +
                  " distinct generators, all products of (t_i - 1)"};
}

Pair check_alexander_predicate() {
  const AlexanderIdeal& a = link_ideal();
  const auto& want = predicate_exponent_set();
  if (a.exponent_vectors == want)
    return {true, std::to_string(want.size()) + " exponent vectors, both inclusions"};
  std::set<std::vector<int>> got(a.exponent_vectors.begin(), a.exponent_vectors.end());
  std::set<std::vector<int>> pred(want.begin(), want.end());
  for (const auto& v : got)
    if (!pred.count(v)) return {false, "unpredicted exponent vector " + ivec(v)};
  for (const auto& v : pred)
    if (!got.count(v)) return {false, "missing exponent vector " + ivec(v)};
  return {false, "exponent sets differ"};
}

Pair check_alexander_gcd() {
  const AlexanderIdeal& a = link_ideal();
  if (!a.gcd) return {false, "gcd unavailable"};
  const bool ok = *a.gcd == Laurent::constant(5, 1);
  return {ok, "Alexander polynomial " + a.gcd->str()};
}

Pair check_kill_meridians() {
  const Presentation p = ivansic_presentation();
  const Presentation f2 = kill_generators(p, {"a", "b", "c"});
  if (f2.generators.size() != 2 || !f2.relators.empty())
    return {false, "killing a,b,c left " + std::to_string(f2.relators.size()) +
                       " relators on " + std::to_string(f2.generators.size()) +
                       " generators"};
  const Presentation q = kill_generators(p, {"a", "b"});
  if (q.generators != std::vector<std::string>{"c", "d", "e"} || q.relators.size() != 1)
    return {false, "killing a,b left " + std::to_string(q.relators.size()) + " relators"};
  const Word want = Word::commutator(
      Word::generator(1), Word::commutator(Word::generator(2, -1), Word::generator(0, -1)));
  if (q.relators[0] != want)
    return {false, "survivor " + q.relators[0].str(q.generators)};
  return {true, "kill{a,b,c}: free of rank 2; kill{a,b}: survivor [d,[e^-1,c^-1]]"};
}

Pair check_surgery_h1() {
  const SurgeryQuotient s = surgery_quotient();
  const bool ok = s.abelian_invariants == std::vector<mpz_class>(5, 0) &&
                  s.longitudes.size() == 5 && s.presentation.relators.size() == 15;
  return {ok, "surgered group abelianizes to Z^5"};
}

Pair check_surgery_collapse() {
  const Presentation p = ivansic_presentation();
  const std::vector<Word> longs = surgery_longitudes();
  for (int i = 0; i < 5; ++i)
    if (!simplify_with_relators(p.relators[i], longs).empty())
      return {false, "relator " + std::to_string(i) +
                         " survives the longitude rewriting"};
  return {true, "all five [x,[y,z]] relators collapse once longitudes die"};
}

// ---- rewriting checks ----

Pair check_rewrite_square() {
  const auto& rw = p4_rewriter();
  const LabelWord a = lw({"1b", "1a", "3b", "3a", "1a", "1b", "3a", "3b"});
  const LabelWord b = lw({"1b", "3b", "1b", "3b"});
  const auto d = rw.equivalent(a, b);
  return {d.found, d.found ? std::to_string(d.steps.size() - 1) + " moves" :
                             "no derivation found"};
}

Pair check_rewrite_cancel() {
  const auto& rw = p4_rewriter();
  const auto d = rw.equivalent(lw({"1a", "1a"}), {});
  return {d.found && d.steps.size() == 2, "single cancel move"};
}

Pair check_rewrite_octagon() {
  const auto& rw = p4_rewriter();
  const LabelWord octagon = lw({"2a", "1b", "3b", "2a", "2b", "3b", "1b", "2b"});
  const LabelWord conj = lw({"3b", "2a"});
  LabelWord a = conj;
  a.insert(a.end(), octagon.begin(), octagon.end());
  const LabelWord inv = label_inverse(conj);
  a.insert(a.end(), inv.begin(), inv.end());
  const LabelWord b =
      label_commutator(lw({"3b", "1b", "3b", "1b"}), lw({"2a", "2b"}));
  const auto d = rw.equivalent(a, b);
  return {d.found, d.found ? "conjugated octagon = commutator, " +
                                 std::to_string(d.steps.size() - 1) + " moves"
                           : "no derivation found"};
}

Pair check_rewrite_commutator_trivial() {
  const auto& rw = p4_rewriter();
  const LabelWord c =
      label_commutator(lw({"1b", "3b", "1b", "3b"}), lw({"2a", "2b"}));
  const auto d = rw.equivalent(c, {});
  return {d.found, d.found ? "commutator contracts in " +
                                 std::to_string(d.steps.size() - 1) + " moves"
                           : "no derivation found"};
}

Pair check_rewrite_longitude_pair() {
  const auto& rw = p4_rewriter();
  const LabelWord a = lw({"4a", "5a", "4a", "5a"});
  const LabelWord b = label_commutator(lw({"4a", "4b"}), lw({"5a", "5b"}));
  const auto d = rw.equivalent(a, b);
  return {d.found, d.found ? "diagonal word = boundary commutator, " +
                                 std::to_string(d.steps.size() - 1) + " moves"
                           : "no derivation found"};
}

// ---- cyclic cover checks ----

std::string opt_str(const std::optional<long>& v) {
  return v ? std::to_string(*v) : "inf";
}

Pair check_cyclic_coprime() {
  for (const std::vector<long>& phi :
       {std::vector<long>{1, 1, 1, 1, 1}, std::vector<long>{2, 3, 5, 7, 11}}) {
    const CyclicBetti b = cyclic_cover_betti(phi);
    if (!b.b1 || *b.b1 != 8)
      return {false, "b1 = " + opt_str(b.b1) + " for a pairwise-coprime class"};
  }
  return {true, "b1 = 8 on pairwise-coprime classes"};
}

Pair check_cyclic_seven_plus_p() {
  for (const long p : {2L, 3L, 5L, 7L}) {
    const CyclicBetti b = cyclic_cover_betti({p, p, 1, 1, 1});
    if (!b.b1 || *b.b1 != 7 + p)
      return {false, "b1(p,p,1,1,1) = " + opt_str(b.b1) + " for p = " +
                         std::to_string(p)};
  }
  return {true, "b1(p,p,1,1,1) = 7 + p for p in {2,3,5,7}"};
}

Pair check_cyclic_infinite() {
  for (const std::vector<long>& phi :
       {std::vector<long>{0, 0, 1, 1, 1}, std::vector<long>{1, 0, 0, 1, 1},
        std::vector<long>{5, 0, 3, 0, 1}}) {
    const CyclicBetti b = cyclic_cover_betti(phi);
    if (b.b1) return {false, "b1 finite with two vanishing entries"};
  }
  const CyclicBetti one_zero = cyclic_cover_betti({1, 1, 0, 1, 1});
  if (!one_zero.b1 || *one_zero.b1 < 8 || one_zero.b3)
    return {false, "single-zero class: b1 = " + opt_str(one_zero.b1) +
                       ", b3 = " + opt_str(one_zero.b3)};
  const CyclicBetti all = cyclic_cover_betti({1, 1, 1, 1, 1});
  if (all.b2 || !all.b3 || *all.b3 != 0)
    return {false, "nonvanishing class: b2 = " + opt_str(all.b2) +
                       ", b3 = " + opt_str(all.b3)};
  return {true, "b1 = inf iff two entries vanish; b2 = inf; b3 = 0 iff no zeros"};
}

Pair check_cyclic_specialize() {
  const CyclotomicExponents a =
      specialize_generator({4, 1, 1, 1, 1}, {1, 1, 1, 1, 1});
  if (a.vanishes || a.e != std::map<long, long>{{1, 8}})
    return {false, "all-ones specialization is not (t-1)^8"};
  const CyclotomicExponents b =
      specialize_generator({2, 2, 2, 1, 1}, {2, 2, 1, 1, 1});
  if (b.vanishes || b.e != std::map<long, long>{{1, 8}, {2, 4}})
    return {false, "(2,2,1,1,1) specialization is not Phi_1^8 Phi_2^4"};
  const CyclotomicExponents c =
      specialize_generator({1, 2, 2, 2, 1}, {0, 1, 1, 1, 1});
  const CyclotomicExponents d =
      specialize_generator({0, 2, 2, 2, 2}, {0, 1, 1, 1, 1});
  if (!c.vanishes || d.vanishes)
    return {false, "zero-entry vanishing flag wrong"};
  return {true, "factored specializations match the hand expansions"};
}

Pair check_cyclic_oracle_spots() {
  for (const std::vector<long>& phi :
       {std::vector<long>{1, 1, 1, 1, 1}, std::vector<long>{2, 2, 1, 1, 1},
        std::vector<long>{2, 3, 4, 5, 6}, std::vector<long>{1, 2, 2, 3, 3},
        std::vector<long>{0, 1, 1, 1, 1}, std::vector<long>{-2, 3, 1, 1, 4}}) {
    if (delta_phi_degree(phi) != delta_phi_degree_oracle(phi))
      return {false, "shortcut disagrees with the gcd oracle"};
  }
  return {true, "cyclotomic shortcut matches the polynomial gcd on spot classes"};
}

// ---- symmetry checks ----

Pair check_group_h() {
  const auto H = group_H();
  return {H.size() == 20, "|H| = " + std::to_string(H.size())};
}

Pair check_transitivity() {
  const auto H = group_H();
  for (int k = 1; k <= 5; ++k) {
    const OrbitReport r = transitivity_on_subsets(H, k);
    if (!r.transitive)
      return {false, "k = " + std::to_string(k) + " splits into " +
                         std::to_string(r.orbit_sizes.size()) + " orbits"};
  }
  return {true, "one orbit of k-subsets for every k = 1..5"};
}

Pair check_group_g() {
  const auto G = group_G();
  return {G.size() == 640, "|G| = " + std::to_string(G.size())};
}

Pair check_borromean() {
  const auto B = borromean_symmetries();
  if (B.size() != 48) return {false, std::to_string(B.size()) + " elements"};
  const std::set<SignedPerm4> set(B.begin(), B.end());
  for (const auto& x : B)
    for (const auto& y : B)
      if (!set.count(x * y)) return {false, "not closed under composition"};
  std::set<int> orbit{0};
  for (const auto& x : B)
    for (const int i : std::set<int>(orbit)) orbit.insert(x.perm[i]);
  if (orbit != std::set<int>{0, 1, 2})
    return {false, "component action not transitive"};
  for (const auto& x : B) {
    int inv = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (x.perm[i] > x.perm[j]) ++inv;
    if (x.sign[3] != ((inv % 2 == 0) ? 1 : -1))
      return {false, "fourth sign is not the permutation parity"};
  }
  return {true, "order 48, closed, transitive on components, parity-signed"};
}

Pair check_quadric_intersections() {
  const Q2 r(0, mpq_class(1, 2));  // sqrt2 / 2
  std::vector<Point5> want;
  for (const int s : {-1, 1})
    for (const int t : {-1, 1}) {
      Point5 p{};
      p[2] = (s > 0) ? r : -r;
      p[4] = (t > 0) ? r : -r;
      want.push_back(p);
    }
  std::sort(want.begin(), want.end(), [](const Point5& x, const Point5& y) {
    for (int c = 0; c < 5; ++c) {
      if (x[c].a != y[c].a) return x[c].a < y[c].a;
      if (x[c].b != y[c].b) return x[c].b < y[c].b;
    }
    return false;
  });
  if (quadric_intersection(0, 1) != want)
    return {false, "Q1 and Q2 do not meet in the four sqrt2/2 points"};
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      if (quadric_intersection(i, j).size() != 4)
        return {false, "pair (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ") has " +
                           std::to_string(quadric_intersection(i, j).size()) +
                           " points"};
  return {true, "every quadric pair meets the sphere in 4 points, as displayed"};
}

Pair check_quadric_critical_points() {
  const mpq_class h(1, 2);
  for (int i = 0; i < 5; ++i) {
    const auto pts = quadric_critical_points(i);
    if (pts.size() != 4) return {false, "wrong critical point count"};
    std::multiset<int> indices;
    for (const CriticalPoint& c : pts) {
      if (!c.lagrange_ok)
        return {false, "Lagrange test fails on quadric " + std::to_string(i + 1)};
      indices.insert(c.morse_index);
    }
    if (indices != std::multiset<int>{0, 1, 1, 2})
      return {false, "Morse indices are not {0,1,1,2}"};
  }
  // The displayed representatives on Q_1: min, two saddles, max.
  const auto pts = quadric_critical_points(0);
  const auto value = [&](const CriticalPoint& c, int k) { return c.x[k]; };
  for (const CriticalPoint& c : pts) {
    const Q2 x1 = value(c, 1);
    const int sa = x1.sign(), sb = value(c, 2).sign();
    const int want = (sa > 0 ? 1 : 0) + (sb > 0 ? 1 : 0);
    if (c.morse_index != want || !(value(c, 1) == value(c, 4)) ||
        !(value(c, 2) == value(c, 3)) || !value(c, 0).is_zero() ||
        !(value(c, 1) * value(c, 1) == Q2(h * h)))
      return {false, "critical point coordinates are not (0,s/2,t/2,t/2,s/2)"};
  }
  return {true, "4 points (0,s/2,t/2,t/2,s/2); indices 0,1,1,2; Lagrange exact"};
}

Pair check_quadric_family() {
  return {quadric_family_preserved(),
          "G maps defining pairs to defining pairs up to sign"};
}

// ---- branched cover check ----

Pair check_choi_park() {
  const auto pp = std::make_shared<const CombinatorialPolytope>(
      CombinatorialPolytope::builtin("pentagon_product"));
  const Colouring col = Colouring::builtin(pp, "pentagon_product", "rank6");
  const ChoiParkResult r = choi_park_betti(col);
  if (r.betti != std::vector<long>{1, 0, 2, 0, 1})
    return {false, "betti " + lvec(r.betti)};
  if (r.contributors.size() != 4)
    return {false, std::to_string(r.contributors.size()) + " contributors"};
  const std::multiset<std::pair<int, std::string>> got = [&] {
    std::multiset<std::pair<int, std::string>> s;
    for (const auto& c : r.contributors) s.insert({c.degree, c.shape});
    return s;
  }();
  const std::multiset<std::pair<int, std::string>> want{
      {0, "empty"}, {2, "circle"}, {2, "circle"}, {4, "sphere(3)"}};
  if (got != want) return {false, "contributor shapes differ"};
  return {true, "betti (1,0,2,0,1) from empty, two circles and a 3-sphere"};
}

// ---- registry ----

struct NamedCheck {
  const char* name;
  Pair (*fn)();
};

const NamedCheck kChecks[] = {
    {"p4-facet-count", check_p4_facets},
    {"p4-vertex-split", check_p4_vertices},
    {"p4-facet-adjacency", check_p4_adjacency},
    {"p4-ideal-vertex-links", check_p4_ideal_links},
    {"p3-structure", check_p3_structure},
    {"p4-five-colouring-proper", check_p4_colouring_proper},
    {"p4-five-colouring-orientable", check_p4_colouring_orientable},
    {"p4-cube-link-same-colour-pairs", check_p4_link_pairs},
    {"p3-colouring-proper", check_p3_colouring},
    {"cover-chamber-count", check_cover_chambers},
    {"cover-euler-volume", check_cover_volume},
    {"cover-cusp-sections", check_cover_cusps},
    {"cover-spine-homology", check_cover_spine},
    {"cover-closed-two-routes", check_cover_homology},
    {"descending-link-table", check_descending_links},
    {"fill-recognize-pentagon-product", check_fill_pentagon_product},
    {"fill-smooth-simplex", check_fill_smooth_simplex},
    {"fill-sphere-homology", check_fill_homology},
    {"fill-core-tori", check_fill_cores},
    {"p3-fill-all-choices", check_p3_fillings},
    {"presentation-shape", check_presentation_shape},
    {"presentation-abelianization", check_presentation_h1},
    {"peripheral-triples", check_peripheral_triples},
    {"alexander-matrix-entries", check_alexander_matrix},
    {"alexander-minor-census", check_alexander_census},
    {"alexander-exponent-predicate", check_alexander_predicate},
    {"alexander-polynomial-one", check_alexander_gcd},
    {"kill-meridians", check_kill_meridians},
    {"surgery-abelianization", check_surgery_h1},
    {"surgery-relator-collapse", check_surgery_collapse},
    {"rewrite-square-derivation", check_rewrite_square},
    {"rewrite-doubled-cancel", check_rewrite_cancel},
    {"rewrite-octagon-commutator", check_rewrite_octagon},
    {"rewrite-commutator-trivial", check_rewrite_commutator_trivial},
    {"rewrite-longitude-pair", check_rewrite_longitude_pair},
    {"cyclic-coprime-eight", check_cyclic_coprime},
    {"cyclic-seven-plus-p", check_cyclic_seven_plus_p},
    {"cyclic-infinite-rules", check_cyclic_infinite},
    {"cyclic-specialization", check_cyclic_specialize},
    {"cyclic-oracle-agreement", check_cyclic_oracle_spots},
    {"symmetry-index-group-order", check_group_h},
    {"symmetry-subset-transitivity", check_transitivity},
    {"symmetry-full-group-order", check_group_g},
    {"borromean-group", check_borromean},
    {"quadric-pair-intersection", check_quadric_intersections},
    {"quadric-critical-points", check_quadric_critical_points},
    {"quadric-family-preserved", check_quadric_family},
    {"choi-park-betti", check_choi_park},
};

// ---- acceptance-only sweeps ----

Pair criterion_cyclic_sweep() {
  // Exhaustive pairwise-coprime classes with entries in [1,6].
  long coprime = 0;
  std::vector<long> x(5);
  for (x[0] = 1; x[0] <= 6; ++x[0])
    for (x[1] = 1; x[1] <= 6; ++x[1])
      for (x[2] = 1; x[2] <= 6; ++x[2])
        for (x[3] = 1; x[3] <= 6; ++x[3])
          for (x[4] = 1; x[4] <= 6; ++x[4]) {
            bool cop = true;
            for (int i = 0; i < 5 && cop; ++i)
              for (int j = i + 1; j < 5; ++j)
                if (std::gcd(x[i], x[j]) != 1) { cop = false; break; }
            if (!cop) continue;
            ++coprime;
            const CyclicBetti b = cyclic_cover_betti(x);
            if (!b.b1 || *b.b1 != 8)
              return {false, "b1 = " + opt_str(b.b1) + " at a coprime class"};
          }

  for (const long p : {2L, 3L, 5L, 7L}) {
    const CyclicBetti b = cyclic_cover_betti({p, p, 1, 1, 1});
    if (!b.b1 || *b.b1 != 7 + p)
      return {false, "b1(p,p,1,1,1) != 7+p at p = " + std::to_string(p)};
  }
  {
    const auto spot = check_cyclic_infinite();
    if (!spot.first) return spot;
  }

  // Shortcut vs expanded-polynomial gcd, exhaustively over [-4,4]^5,
  // memoized on the symmetry orbit of |phi|.
  std::map<std::vector<long>, std::optional<long>> orbit_value;
  long classes = 0, swept = 0;
  std::vector<long> phi(5);
  for (phi[0] = -4; phi[0] <= 4; ++phi[0])
    for (phi[1] = -4; phi[1] <= 4; ++phi[1])
      for (phi[2] = -4; phi[2] <= 4; ++phi[2])
        for (phi[3] = -4; phi[3] <= 4; ++phi[3])
          for (phi[4] = -4; phi[4] <= 4; ++phi[4]) {
            ++swept;
            const std::vector<long> canon = canonical_phi(phi);
            auto it = orbit_value.find(canon);
            if (it == orbit_value.end()) {
              const auto oracle = delta_phi_degree_oracle(canon);
              const auto shortcut = delta_phi_degree(canon);
              if (oracle != shortcut)
                return {false, "shortcut " + opt_str(shortcut) + " vs oracle " +
                                   opt_str(oracle) + " at " + lvec(canon)};
              it = orbit_value.emplace(canon, shortcut).first;
              ++classes;
            }
            if (delta_phi_degree(phi) != it->second)
              return {false, "degree not constant on the symmetry orbit of " +
                                 lvec(phi)};
          }
  return {true, std::to_string(coprime) + " coprime classes at b1 = 8; oracle " +
                    "agreement on " + std::to_string(swept) + " classes (" +
                    std::to_string(classes) + " orbits)"};
}

Pair property_fox(std::mt19937_64& rng) {
  const int ngens = 5;
  const Laurent one = Laurent::constant(ngens, 1);
  for (int it = 0; it < 1000; ++it) {
    const int len = static_cast<int>(rng() % 13);
    std::vector<Letter> ls;
    for (int i = 0; i < len; ++i)
      ls.push_back({static_cast<int>(rng() % ngens), (rng() & 1) ? 1 : -1});
    const Word w = Word::from_letters(ls);
    Laurent sum(ngens);
    for (int g = 0; g < ngens; ++g)
      sum = sum + fox_derivative(w, g, ngens) * (Laurent::variable(ngens, g) - one);
    if (!(sum == word_monomial(w, ngens) - one))
      return {false, "Fox fundamental identity failed"};
  }
  return {true, "1000 words"};
}

Pair property_snf(std::mt19937_64& rng) {
  for (int it = 0; it < 200; ++it) {
    const int r = 1 + static_cast<int>(rng() % 6);
    const int c = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<mpz_class>> d(r, std::vector<mpz_class>(c, 0));
    SparseIntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (rng() % 2) {
          const long v = static_cast<long>(rng() % 9) - 4;
          d[i][j] = v;
          m.set(i, j, v);
        }
    const SnfResult s = smith_normal_form(m);
    for (size_t i = 0; i + 1 < s.factors.size(); ++i)
      if (s.factors[i + 1] % s.factors[i] != 0)
        return {false, "invariant factors fail the divisibility chain"};
    if (s.rank() != rational_rank(d))
      return {false, "Smith rank disagrees with Bareiss rank"};

    // Unimodular row/column operations must not change the factors.
    auto e = d;
    for (int op = 0; op < 6; ++op) {
      const long f = static_cast<long>(rng() % 5) - 2;
      if (rng() % 2) {
        const int i = static_cast<int>(rng() % r), j = static_cast<int>(rng() % r);
        if (i != j)
          for (int k = 0; k < c; ++k) e[i][k] += f * e[j][k];
      } else {
        const int i = static_cast<int>(rng() % c), j = static_cast<int>(rng() % c);
        if (i != j)
          for (int k = 0; k < r; ++k) e[k][i] += f * e[k][j];
      }
    }
    SparseIntMatrix m2(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m2.set(i, j, e[i][j]);
    if (smith_normal_form(m2).factors != s.factors)
      return {false, "invariant factors not invariant under unimodular moves"};
  }
  return {true, "200 matrices"};
}

Pair property_choi_park_vs_cubical() {
  long leaves = 0;
  for (const char* shape : {"simplex(2)", "cube2", "cube3"}) {
    const auto p = std::make_shared<const CombinatorialPolytope>(
        CombinatorialPolytope::builtin(shape));
    const int n = p->facet_count();
    std::vector<Gf2Vec> cols(n, 0);
    std::string err;
    // Canonical enumeration: facet f takes any nonzero vector in the span
    // of the basis vectors already used, or the next fresh basis vector.
    std::function<bool(int, int)> rec = [&](int f, int used) -> bool {
      if (f == n) {
        const Colouring col(p, used, cols);
        ++leaves;
        const ChoiParkResult cp = choi_park_betti(col);
        const HomologySummary h = assemble(col).homology();
        if (cp.betti != h.betti) {
          err = std::string(shape) + ": formula " + lvec(cp.betti) +
                " vs cubical " + lvec(h.betti);
          return false;
        }
        return true;
      }
      for (Gf2Vec v = 1; v <= (Gf2Vec{1} << used); ++v) {
        cols[f] = v;
        const Colouring partial(p, n, cols);
        if (partial.proper()) {
          const int nu = used + (v == (Gf2Vec{1} << used) ? 1 : 0);
          if (!rec(f + 1, nu)) return false;
        }
      }
      cols[f] = 0;
      return true;
    };
    if (!rec(0, 0)) return {false, err};
    cols.assign(n, 0);
  }
  return {true, std::to_string(leaves) + " proper colourings"};
}

Pair property_rewrite_endpoints(std::mt19937_64& rng) {
  const auto& rw = p4_rewriter();
  for (int it = 0; it < 200; ++it) {
    const int len = static_cast<int>(rng() % 9);
    LabelWord w;
    for (int i = 0; i < len; ++i) w.push_back(static_cast<int>(rng() % 10));
    const Gf2Vec e = rw.endpoint(w);
    for (const LabelWord& nb : rw.neighbours(w, len + 2))
      if (rw.endpoint(nb) != e)
        return {false, "a move changed the path endpoint"};
  }
  // Every step of a full derivation keeps the endpoint.
  const LabelWord a = lw({"1b", "1a", "3b", "3a", "1a", "1b", "3a", "3b"});
  const LabelWord b = lw({"1b", "3b", "1b", "3b"});
  const auto d = rw.equivalent(a, b);
  if (!d.found) return {false, "derivation for the endpoint audit not found"};
  for (const LabelWord& step : d.steps)
    if (rw.endpoint(step) != rw.endpoint(a))
      return {false, "derivation step changed the endpoint"};
  return {true, "200 random words plus a full derivation"};
}

Pair criterion_property_suites(unsigned seed) {
  std::mt19937_64 rng(seed);
  std::string detail;
  for (const auto& [label, res] :
       {std::pair<const char*, Pair>{"fox", property_fox(rng)},
        {"snf", property_snf(rng)},
        {"choi-park", property_choi_park_vs_cubical()},
        {"rewrite", property_rewrite_endpoints(rng)}}) {
    if (!res.first) return {false, std::string(label) + ": " + res.second};
    detail += (detail.empty() ? "" : "; ") + std::string(label) + " " + res.second;
  }
  return {true, detail};
}

CriterionResult combine(int number, const std::string& name,
                        const std::vector<std::string>& checks) {
  CriterionResult r{number, name, true, ""};
  for (const std::string& c : checks) {
    const CheckResult cr = run_check(c);
    if (!cr.pass) {
      r.pass = false;
      r.detail += (r.detail.empty() ? "" : "; ") + cr.name + ": " + cr.detail;
    }
  }
  if (r.pass) r.detail = "ok";
  return r;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const NamedCheck& c : kChecks) out.push_back(c.name);
  return out;
}

CheckResult run_check(const std::string& name) {
  for (const NamedCheck& c : kChecks) {
    if (name != c.name) continue;
    CheckResult r{name, false, ""};
    try {
      const Pair p = c.fn();
      r.pass = p.first;
      r.detail = p.second;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    return r;
  }
  throw std::invalid_argument("unknown check: " + name);
}

std::vector<CheckResult> run_all_checks() {
  std::vector<CheckResult> out;
  for (const NamedCheck& c : kChecks) out.push_back(run_check(c.name));
  return out;
}

std::vector<CriterionResult> run_acceptance(unsigned seed) {
  std::vector<CriterionResult> out;
  out.push_back(combine(1, "polytope-combinatorics",
                        {"p4-facet-count", "p4-vertex-split", "p4-ideal-vertex-links",
                         "p4-cube-link-same-colour-pairs"}));
  out.push_back(combine(2, "cover-invariants",
                        {"cover-chamber-count", "cover-euler-volume",
                         "cover-cusp-sections", "cover-spine-homology"}));
  out.push_back(combine(3, "dehn-filling",
                        {"fill-recognize-pentagon-product", "fill-smooth-simplex",
                         "fill-sphere-homology", "fill-core-tori"}));
  out.push_back(combine(4, "three-dim-warmup", {"p3-fill-all-choices"}));
  out.push_back(combine(5, "fox-calculus",
                        {"alexander-matrix-entries", "alexander-minor-census",
                         "alexander-exponent-predicate", "alexander-polynomial-one"}));
  {
    CriterionResult r{6, "cyclic-covers", false, ""};
    try {
      const Pair p = criterion_cyclic_sweep();
      r.pass = p.first;
      r.detail = p.second;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(r);
  }
  out.push_back(combine(7, "symmetry-groups",
                        {"symmetry-index-group-order", "symmetry-subset-transitivity",
                         "symmetry-full-group-order", "borromean-group",
                         "quadric-pair-intersection", "quadric-critical-points",
                         "quadric-family-preserved"}));
  out.push_back(combine(8, "branched-cover", {"choi-park-betti"}));
  out.push_back(combine(9, "descending-links", {"descending-link-table"}));
  {
    CriterionResult r{10, "property-suites", false, ""};
    try {
      const Pair p = criterion_property_suites(seed);
      r.pass = p.first;
      r.detail = p.second;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace torilink
