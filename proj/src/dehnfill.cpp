#include "torilink/dehnfill.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace torilink {

FillingChoice FillingChoice::all_same_colour() {
  FillingChoice c;
  c.all_same_colour_ = true;
  return c;
}

// Accepted forms: the bare string "same-colour", or an object mapping
// vertex labels to "same-colour" or a two-facet array.  The key "*"
// stands for every vertex without an entry of its own.
FillingChoice FillingChoice::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.is_string()) {
    if (j.get<std::string>() != "same-colour")
      throw std::invalid_argument("filling choice must be same-colour or a vertex map");
    return all_same_colour();
  }
  FillingChoice c;
  for (const auto& [vertex, value] : j.items()) {
    if (value.is_string()) {
      if (value.get<std::string>() != "same-colour")
        throw std::invalid_argument("filling choice for " + vertex +
                                    " must be same-colour or a facet pair");
      if (vertex == "*") c.all_same_colour_ = true;
      else c.set_same_colour(vertex);
    } else {
      auto pair = value.get<std::vector<std::string>>();
      if (pair.size() != 2)
        throw std::invalid_argument("filling choice for " + vertex +
                                    " needs exactly two facets");
      if (vertex == "*")
        throw std::invalid_argument("the wildcard entry only takes same-colour");
      c.set_pair(vertex, pair[0], pair[1]);
    }
  }
  return c;
}

std::string FillingChoice::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  if (all_same_colour_) j["*"] = "same-colour";
  for (const auto& [vertex, choice] : choices_) {
    if (choice)
      j[vertex] = std::vector<std::string>{choice->first, choice->second};
    else
      j[vertex] = "same-colour";
  }
  return j.dump(2) + "\n";
}

void FillingChoice::set_same_colour(const std::string& vertex) {
  choices_[vertex] = std::nullopt;
}

void FillingChoice::set_pair(const std::string& vertex, std::string facet_a,
                             std::string facet_b) {
  choices_[vertex] = std::make_pair(std::move(facet_a), std::move(facet_b));
}

std::optional<std::pair<std::string, std::string>> FillingChoice::pair_for(
    const std::string& vertex) const {
  auto it = choices_.find(vertex);
  if (it != choices_.end()) return it->second;
  if (all_same_colour_) return std::nullopt;
  throw std::invalid_argument("no filling choice for ideal vertex " + vertex);
}

FilledPolytope dehn_fill(const Colouring& col, const FillingChoice& choice) {
  const auto& P = col.polytope();
  if (!P.has_masks())
    throw std::invalid_argument("filling needs an incidence-built polytope");
  auto ideal = P.ideal_vertices();
  if (ideal.empty())
    throw std::invalid_argument("polytope has no ideal vertices to fill");
  const int d = P.dim();

  std::vector<VertexSpec> verts;
  for (int v : P.real_vertices())
    verts.push_back({P.cell_mask(v), false, P.poset().label(v)});

  struct PlannedCore {
    std::uint64_t mask;
    std::string vertex;
    std::pair<int, int> facets;
  };
  std::vector<PlannedCore> planned;

  for (int w : ideal) {
    const std::string wname = P.poset().label(w);
    auto link = P.vertex_link(w);
    if (link.facet_count() != 2 * (d - 1) ||
        recognize(link) != "cube" + std::to_string(d - 1))
      throw std::invalid_argument("link of " + wname + " is not a cube");
    // Opposite pairs of the cube, translated to parent facet indices.
    std::vector<std::pair<int, int>> opp;
    std::set<int> matched;
    for (auto [a, b] : link.opposite_facet_pairs()) {
      int pa = P.facet_index(link.facet_names()[a]);
      int pb = P.facet_index(link.facet_names()[b]);
      opp.push_back({std::min(pa, pb), std::max(pa, pb)});
      matched.insert(a);
      matched.insert(b);
    }
    if (opp.size() != static_cast<std::size_t>(d - 1) ||
        static_cast<int>(matched.size()) != 2 * (d - 1))
      throw std::invalid_argument("link of " + wname +
                                  " has no perfect opposite matching");
    std::sort(opp.begin(), opp.end());

    std::pair<int, int> chosen;
    auto explicit_pair = choice.pair_for(wname);
    if (explicit_pair) {
      int pa = P.facet_index(explicit_pair->first);
      int pb = P.facet_index(explicit_pair->second);
      if (pa < 0 || pb < 0)
        throw std::invalid_argument("unknown facet in filling choice at " +
                                    wname);
      chosen = {std::min(pa, pb), std::max(pa, pb)};
      if (std::find(opp.begin(), opp.end(), chosen) == opp.end())
        throw std::invalid_argument("chosen facets are not opposite at " +
                                    wname);
    } else {
      std::vector<std::pair<int, int>> same;
      for (auto pr : opp)
        if (col.colour(pr.first) == col.colour(pr.second)) same.push_back(pr);
      if (same.size() != 1)
        throw std::invalid_argument(
            "same-colour filling needs exactly one same-coloured opposite "
            "pair at " + wname);
      chosen = same[0];
    }

    std::vector<std::pair<int, int>> rest;
    for (auto pr : opp)
      if (pr != chosen) rest.push_back(pr);
    std::uint64_t base = (std::uint64_t{1} << chosen.first) |
                         (std::uint64_t{1} << chosen.second);
    // One new vertex per transversal of the remaining opposite pairs.
    for (int sel = 0; sel < (1 << rest.size()); ++sel) {
      VertexSpec v;
      v.facet_mask = base;
      v.name = wname;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        int fi = ((sel >> i) & 1) ? rest[i].second : rest[i].first;
        v.facet_mask |= std::uint64_t{1} << fi;
        v.name += (i == 0 ? ":" : ".") + P.facet_names()[fi];
      }
      verts.push_back(v);
    }
    planned.push_back({base, wname, chosen});
  }

  auto filled = std::make_shared<CombinatorialPolytope>(
      CombinatorialPolytope::from_vertex_incidence(d, P.facet_names(),
                                                   std::move(verts)));
  FilledPolytope fp;
  fp.polytope = filled;
  fp.rank = col.rank();
  fp.colours = col.colours();
  for (const auto& pc : planned) {
    int cell = filled->cell_by_mask(pc.mask);
    if (cell < 0 || filled->poset().dim(cell) != d - 2)
      throw std::logic_error("core face missing after filling at " +
                             pc.vertex);
    fp.core.push_back({cell, pc.vertex, pc.facets});
  }
  return fp;
}

namespace {

// Mutable cell table used while dissolving flat faces.
struct SmoothWork {
  int dim;
  std::vector<int> cell_dim;
  std::vector<std::string> label;
  std::vector<std::vector<int>> faces;
  std::vector<char> alive;
  std::map<int, Gf2Vec> facet_colour;  // facet cells only
  std::vector<std::vector<int>> cofaces;

  void rebuild_cofaces() {
    cofaces.assign(faces.size(), {});
    for (std::size_t c = 0; c < faces.size(); ++c) {
      if (!alive[c]) continue;
      for (int f : faces[c]) cofaces[f].push_back(static_cast<int>(c));
    }
  }

  std::set<int> up_facets(int cell) {
    std::set<int> seen{cell}, out;
    std::queue<int> q;
    q.push(cell);
    while (!q.empty()) {
      int c = q.front();
      q.pop();
      if (cell_dim[c] == dim - 1) out.insert(c);
      for (int up : cofaces[c])
        if (seen.insert(up).second) q.push(up);
    }
    return out;
  }

  // Merges b into a; the killed list is removed from the joint face set.
  void merge(int a, int b, int killed) {
    std::set<int> fs;
    for (int f : faces[a])
      if (alive[f] && f != killed) fs.insert(f);
    for (int f : faces[b])
      if (alive[f] && f != killed) fs.insert(f);
    faces[a].assign(fs.begin(), fs.end());
    label[a] += "+" + label[b];
    alive[b] = 0;
    if (facet_colour.count(b)) facet_colour.erase(b);
    for (std::size_t c = 0; c < faces.size(); ++c) {
      if (!alive[c]) continue;
      bool had = false;
      std::vector<int> nf;
      for (int f : faces[c]) {
        if (f == b) f = a;
        if (!alive[f]) continue;
        if (f == a) {
          if (had) continue;
          had = true;
        }
        nf.push_back(f);
      }
      faces[c] = std::move(nf);
    }
    rebuild_cofaces();
  }
};

}  // namespace

FilledPolytope smooth(const FilledPolytope& fp) {
  const auto& P = *fp.polytope;
  const int d = P.dim();
  SmoothWork w;
  w.dim = d;
  const auto& poset = P.poset();
  for (int id = 0; id < poset.size(); ++id) {
    w.cell_dim.push_back(poset.dim(id));
    w.label.push_back(poset.label(id));
    w.faces.push_back(poset.faces(id));
    w.alive.push_back(1);
  }
  for (int i = 0; i < P.facet_count(); ++i)
    w.facet_colour[P.facet_cell(i)] = fp.colours[i];
  w.rebuild_cofaces();

  std::vector<int> red_cells;
  for (const auto& cf : fp.core) red_cells.push_back(cf.cell);

  bool moved = true;
  while (moved) {
    moved = false;
    // Erase core faces between same-coloured facets first.
    for (int r : red_cells) {
      if (!w.alive[r]) continue;
      const auto& cf = w.cofaces[r];
      if (cf.size() != 2)
        throw std::logic_error("core face without two facets");
      int a = cf[0], b = cf[1];
      if (w.facet_colour.at(a) != w.facet_colour.at(b)) continue;
      if (a == b)
        throw std::logic_error("core face glued to a single facet");
      w.alive[r] = 0;
      w.merge(std::min(a, b), std::max(a, b), r);
      moved = true;
      break;
    }
    if (moved) continue;
    // Dissolve any face lying flat between two cells that meet the same
    // facets; the two cells merge across it.
    for (std::size_t q = 0; q < w.faces.size(); ++q) {
      if (!w.alive[q] || w.cell_dim[q] > d - 2) continue;
      std::set<int> cf(w.cofaces[q].begin(), w.cofaces[q].end());
      if (cf.size() != 2) continue;
      int a = *cf.begin(), b = *std::next(cf.begin());
      if (w.up_facets(a) != w.up_facets(b)) continue;
      w.alive[q] = 0;
      w.merge(std::min(a, b), std::max(a, b), static_cast<int>(q));
      moved = true;
      break;
    }
  }

  // Rebuild a clean poset from the surviving cells.
  CellPoset out;
  std::vector<int> new_id(w.faces.size(), -1);
  for (int dd = 0; dd <= d; ++dd)
    for (std::size_t c = 0; c < w.faces.size(); ++c) {
      if (!w.alive[c] || w.cell_dim[c] != dd) continue;
      std::vector<int> fs;
      for (int f : w.faces[c]) fs.push_back(new_id[f]);
      new_id[c] = out.add_cell(dd, w.label[c], std::move(fs));
    }
  auto polytope = std::make_shared<CombinatorialPolytope>(
      CombinatorialPolytope::from_poset(std::move(out)));

  FilledPolytope result;
  result.polytope = polytope;
  result.smoothed = true;
  result.rank = fp.rank;
  result.colours.clear();
  for (int i = 0; i < polytope->facet_count(); ++i) {
    int cell = polytope->facet_cell(i);
    // Facet order in the rebuilt lattice follows old cell ids.
    int old = -1;
    for (std::size_t c = 0; c < new_id.size(); ++c)
      if (new_id[c] == cell) old = static_cast<int>(c);
    result.colours.push_back(w.facet_colour.at(old));
  }
  for (const auto& cf : fp.core)
    if (w.alive[cf.cell] && new_id[cf.cell] >= 0)
      result.core.push_back({new_id[cf.cell], cf.ideal_vertex,
                             cf.joined_facets});
  return result;
}

std::string recognize(const CellPoset& poset) {
  static std::vector<std::pair<std::string, CellPoset>> table = [] {
    std::vector<std::pair<std::string, CellPoset>> t;
    for (const auto& name : CombinatorialPolytope::builtin_names())
      t.emplace_back(name, CombinatorialPolytope::builtin(name).poset());
    return t;
  }();
  for (const auto& [name, candidate] : table)
    if (poset.isomorphic_to(candidate)) return name;
  return "unknown";
}

std::string recognize(const CombinatorialPolytope& p) {
  return recognize(p.poset());
}

std::vector<CoreComponent> core_components(const FilledPolytope& fp) {
  QuotientComplex q = assemble(fp.colouring(), Properness::DoubledAllowed);
  const auto& tess = q.tessellation();
  std::vector<int> reds;
  std::map<int, std::pair<int, int>> facets_of_core;  // cell -> facet pair
  for (const auto& cf : fp.core) {
    facets_of_core[cf.cell] = cf.joined_facets;
    for (Gf2Vec rep : q.cell_span(cf.cell).coset_reps())
      reds.push_back(q.tess_index(cf.cell, rep));
  }
  std::sort(reds.begin(), reds.end());

  // Union-find over red cells sharing a face.
  std::map<int, int> pos;
  for (std::size_t i = 0; i < reds.size(); ++i) pos[reds[i]] = static_cast<int>(i);
  std::vector<int> parent(reds.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<int, std::vector<int>> by_face;
  for (int r : reds)
    for (int f : tess.faces(r)) by_face[f].push_back(r);
  for (const auto& [f, rs] : by_face)
    for (std::size_t i = 1; i < rs.size(); ++i)
      parent[find(pos[rs[0]])] = find(pos[rs[i]]);

  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < reds.size(); ++i)
    groups[find(static_cast<int>(i))].push_back(reds[i]);

  std::vector<CoreComponent> out;
  for (const auto& [root, cells] : groups) {
    CoreComponent comp;
    comp.n_cells = static_cast<int>(cells.size());
    auto sub = tess.closed_subposet(cells);
    comp.chi = sub.poset.chain_complex().euler_characteristic();
    comp.homology = torilink::homology(sub.poset.chain_complex());
    int top = sub.poset.top_dim();
    comp.is_closed = true;
    for (int c : sub.poset.cells_of_dim(top - 1))
      if (sub.poset.cofaces(c).size() != 2) comp.is_closed = false;
    comp.orientable = comp.homology.betti[top] == 1;
    std::set<Gf2Vec> colours_seen;
    bool all_invariant = true;
    std::optional<Gf2Vec> direction;
    for (int c : cells) {
      const auto& info = q.tess_info()[c];
      comp.cells.push_back(info);
      auto fpair = facets_of_core.at(info.cell);
      colours_seen.insert(fp.colours[fpair.first]);
      colours_seen.insert(fp.colours[fpair.second]);
    }
    comp.facet_colours.assign(colours_seen.begin(), colours_seen.end());
    if (colours_seen.size() == 1) {
      Gf2Vec c0 = *colours_seen.begin();
      for (int id = 0; id < sub.poset.size() && all_invariant; ++id) {
        int old = -1;
        for (std::size_t oc = 0; oc < sub.new_id.size(); ++oc)
          if (sub.new_id[oc] == id) old = static_cast<int>(oc);
        if (!q.cell_span(q.tess_info()[old].cell).contains(c0))
          all_invariant = false;
      }
      if (all_invariant) direction = c0;
    }
    comp.invariant_direction = direction;
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const CoreComponent& a, const CoreComponent& b) {
              return a.cells.front().cell != b.cells.front().cell
                         ? a.cells.front().cell < b.cells.front().cell
                         : a.cells.front().rep < b.cells.front().rep;
            });
  return out;
}

HomologySummary filled_manifold_homology(const FilledPolytope& fp) {
  if (!fp.smoothed)
    throw std::invalid_argument("homology expects the smoothed polytope");
  QuotientComplex q = assemble(fp.colouring(), Properness::Strict);
  return q.homology();
}

}  // namespace torilink
