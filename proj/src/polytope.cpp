#include "torilink/polytope.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace torilink {

namespace {
int popcount(std::uint64_t m) { return __builtin_popcountll(m); }
}  // namespace

CombinatorialPolytope CombinatorialPolytope::from_vertex_incidence(
    int dim, std::vector<std::string> facet_names,
    std::vector<VertexSpec> vertices) {
  const int n = static_cast<int>(facet_names.size());
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if (n > 64) throw std::invalid_argument("too many facets");
  {
    std::set<std::string> seen(facet_names.begin(), facet_names.end());
    if (static_cast<int>(seen.size()) != n)
      throw std::invalid_argument("duplicate facet name");
  }
  std::uint64_t all_facets = (n == 64) ? ~std::uint64_t{0}
                                       : ((std::uint64_t{1} << n) - 1);
  std::uint64_t covered = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto& v = vertices[i];
    if (v.facet_mask == 0 || (v.facet_mask & ~all_facets))
      throw std::invalid_argument("vertex facet set out of range");
    if (v.name.empty()) v.name = "v" + std::to_string(i);
    covered |= v.facet_mask;
  }
  if (covered != all_facets)
    throw std::invalid_argument("facet without any vertex");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j)
      if (i != j &&
          (vertices[i].facet_mask & vertices[j].facet_mask) ==
              vertices[i].facet_mask)
        throw std::invalid_argument(
            "vertex facet sets must be distinct and incomparable");

  // Faces are exactly the joins of vertex sets, and the facet set of a
  // join is the intersection of the facet sets, so closing the vertex
  // masks under pairwise intersection enumerates every proper face.
  std::set<std::uint64_t> face_masks;
  for (const auto& v : vertices) face_masks.insert(v.facet_mask);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> cur(face_masks.begin(), face_masks.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        std::uint64_t m = cur[i] & cur[j];
        if (m != 0 && face_masks.insert(m).second) grew = true;
      }
  }

  // Longest chain of strict mask-supersets grades the lattice; strict
  // supersets have strictly larger popcount, so one sorted pass works.
  std::vector<std::uint64_t> order(face_masks.begin(), face_masks.end());
  std::sort(order.begin(), order.end(), [](std::uint64_t a, std::uint64_t b) {
    return popcount(a) != popcount(b) ? popcount(a) > popcount(b) : a < b;
  });
  std::map<std::uint64_t, int> dim_of;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int d = 0;
    for (std::size_t j = 0; j < i; ++j)
      if ((order[j] & order[i]) == order[i] && order[j] != order[i])
        d = std::max(d, dim_of[order[j]] + 1);
    dim_of[order[i]] = d;
  }
  for (int i = 0; i < n; ++i) {
    auto it = dim_of.find(std::uint64_t{1} << i);
    if (it == dim_of.end())
      throw std::invalid_argument("facet " + facet_names[i] +
                                  " is not determined by its vertices");
    if (it->second != dim - 1)
      throw std::invalid_argument("facet " + facet_names[i] +
                                  " has wrong rank for the given dimension");
  }
  for (const auto& [m, d] : dim_of)
    if (d > dim - 1)
      throw std::invalid_argument("face lattice deeper than the dimension");
  for (const auto& v : vertices)
    if (dim_of[v.facet_mask] != 0)
      throw std::invalid_argument("vertex " + v.name + " is not minimal");

  CombinatorialPolytope P;
  P.dim_ = dim;
  P.facet_names_ = std::move(facet_names);
  P.has_masks_ = true;

  // Vertices first, in input order; higher faces by ascending mask.
  std::map<std::uint64_t, int> id_of;
  for (const auto& v : vertices) {
    int id = P.poset_.add_cell(0, v.name, {});
    id_of[v.facet_mask] = id;
    P.mask_.push_back(v.facet_mask);
    P.vertex_cells_.push_back(id);
    P.ideal_[id] = v.ideal;
  }
  for (int d = 1; d < dim; ++d) {
    std::vector<std::uint64_t> level;
    for (const auto& [m, dm] : dim_of)
      if (dm == d) level.push_back(m);
    std::sort(level.begin(), level.end());
    for (std::uint64_t m : level) {
      std::vector<int> fs;
      for (const auto& [m2, d2] : dim_of)
        if (d2 == d - 1 && (m2 & m) == m && m2 != m) fs.push_back(id_of[m2]);
      std::string label;
      for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) {
          if (!label.empty()) label += '.';
          label += P.facet_names_[i];
        }
      id_of[m] = P.poset_.add_cell(d, label, std::move(fs));
      P.mask_.push_back(m);
    }
  }
  P.facet_cells_.resize(n);
  for (int i = 0; i < n; ++i)
    P.facet_cells_[i] = id_of[std::uint64_t{1} << i];
  {
    std::vector<int> fs = P.facet_cells_;
    P.top_cell_ = P.poset_.add_cell(dim, "top", std::move(fs));
    P.mask_.push_back(0);
  }
  for (int id = 0; id < P.poset_.size(); ++id)
    if (id != P.top_cell_) P.by_mask_[P.mask_[id]] = id;
  P.poset_.validate();
  return P;
}

void CombinatorialPolytope::index_from_poset() {
  dim_ = poset_.top_dim();
  auto tops = poset_.cells_of_dim(dim_);
  if (tops.size() != 1)
    throw std::invalid_argument("polytope poset needs a unique top cell");
  top_cell_ = tops[0];
  facet_cells_ = poset_.cells_of_dim(dim_ - 1);
  facet_names_.clear();
  for (int c : facet_cells_) facet_names_.push_back(poset_.label(c));
  vertex_cells_ = poset_.cells_of_dim(0);
  for (int v : vertex_cells_) ideal_[v] = false;
}

CombinatorialPolytope CombinatorialPolytope::from_poset(CellPoset poset) {
  CombinatorialPolytope P;
  P.poset_ = std::move(poset);
  P.poset_.validate();
  P.index_from_poset();
  return P;
}

int CombinatorialPolytope::facet_index(const std::string& name) const {
  for (int i = 0; i < facet_count(); ++i)
    if (facet_names_[i] == name) return i;
  return -1;
}

int CombinatorialPolytope::facet_index_of_cell(int cell_id) const {
  for (int i = 0; i < facet_count(); ++i)
    if (facet_cells_[i] == cell_id) return i;
  return -1;
}

bool CombinatorialPolytope::vertex_ideal(int vertex_cell) const {
  auto it = ideal_.find(vertex_cell);
  if (it == ideal_.end()) throw std::invalid_argument("not a vertex cell");
  return it->second;
}

std::vector<int> CombinatorialPolytope::ideal_vertices() const {
  std::vector<int> out;
  for (int v : vertex_cells_)
    if (ideal_.at(v)) out.push_back(v);
  return out;
}

std::vector<int> CombinatorialPolytope::real_vertices() const {
  std::vector<int> out;
  for (int v : vertex_cells_)
    if (!ideal_.at(v)) out.push_back(v);
  return out;
}

int CombinatorialPolytope::vertex_by_name(const std::string& name) const {
  for (int v : vertex_cells_)
    if (poset_.label(v) == name) return v;
  return -1;
}

std::vector<int> CombinatorialPolytope::f_vector() const {
  auto counts = poset_.counts();
  counts.resize(dim_);  // proper faces only
  return counts;
}

std::vector<int> CombinatorialPolytope::facets_of_cell(int cell_id) const {
  if (has_masks_ && cell_id != top_cell_) {
    std::vector<int> out;
    for (int i = 0; i < facet_count(); ++i)
      if ((mask_[cell_id] >> i) & 1) out.push_back(i);
    return out;
  }
  // Walk the up-set and collect facet cells.
  std::set<int> seen{cell_id};
  std::queue<int> q;
  q.push(cell_id);
  std::vector<int> out;
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    int fi = facet_index_of_cell(c);
    if (fi >= 0) out.push_back(fi);
    for (int up : poset_.cofaces(c))
      if (seen.insert(up).second) q.push(up);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Adjacency means sharing a ridge.  Two facets of an ideal polytope can
// share an ideal vertex and nothing more; such facets are parallel, not
// adjacent, and their reflections do not commute.
bool CombinatorialPolytope::facets_adjacent(int fi, int fj) const {
  if (fi == fj || dim_ < 2) return false;
  for (int id : poset_.cells_of_dim(dim_ - 2)) {
    auto fs = facets_of_cell(id);
    if (std::binary_search(fs.begin(), fs.end(), fi) &&
        std::binary_search(fs.begin(), fs.end(), fj))
      return true;
  }
  return false;
}

std::vector<std::pair<int, int>> CombinatorialPolytope::opposite_facet_pairs()
    const {
  std::vector<std::vector<char>> adj(facet_count(),
                                     std::vector<char>(facet_count(), 0));
  if (dim_ >= 2)
    for (int id : poset_.cells_of_dim(dim_ - 2)) {
      auto fs = facets_of_cell(id);
      for (std::size_t a = 0; a < fs.size(); ++a)
        for (std::size_t b = a + 1; b < fs.size(); ++b)
          adj[fs[a]][fs[b]] = adj[fs[b]][fs[a]] = 1;
    }
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < facet_count(); ++i)
    for (int j = i + 1; j < facet_count(); ++j)
      if (!adj[i][j]) out.emplace_back(i, j);
  return out;
}

std::uint64_t CombinatorialPolytope::cell_mask(int cell_id) const {
  if (!has_masks_) throw std::logic_error("polytope has no facet masks");
  return mask_[cell_id];
}

int CombinatorialPolytope::cell_by_mask(std::uint64_t mask) const {
  if (!has_masks_) throw std::logic_error("polytope has no facet masks");
  auto it = by_mask_.find(mask);
  return it == by_mask_.end() ? -1 : it->second;
}

CombinatorialPolytope CombinatorialPolytope::vertex_link(
    int vertex_cell) const {
  auto fv = facets_of_cell(vertex_cell);
  std::vector<std::string> link_facets;
  std::map<int, int> link_index;  // facet index -> link position
  for (std::size_t i = 0; i < fv.size(); ++i) {
    link_index[fv[i]] = static_cast<int>(i);
    link_facets.push_back(facet_names_[fv[i]]);
  }
  std::vector<VertexSpec> link_vertices;
  for (int e : poset_.cofaces(vertex_cell)) {
    const auto& ends = poset_.faces(e);
    int other = (ends[0] == vertex_cell) ? ends[1] : ends[0];
    VertexSpec s;
    s.name = poset_.label(other);
    s.ideal = false;
    for (int fi : facets_of_cell(e))
      s.facet_mask |= std::uint64_t{1} << link_index.at(fi);
    link_vertices.push_back(s);
  }
  return from_vertex_incidence(dim_ - 1, std::move(link_facets),
                               std::move(link_vertices));
}

SimplicialComplex CombinatorialPolytope::dual_boundary_complex() const {
  if (!ideal_vertices().empty())
    throw std::invalid_argument("dual complex needs all vertices real");
  std::vector<std::uint64_t> maximal;
  for (int v : vertex_cells_) {
    std::uint64_t m = 0;
    for (int fi : facets_of_cell(v)) m |= std::uint64_t{1} << fi;
    maximal.push_back(m);
  }
  return SimplicialComplex(facet_count(), std::move(maximal), facet_names_);
}

CombinatorialPolytope CombinatorialPolytope::with_facet_names(
    std::vector<std::string> names) const {
  if (static_cast<int>(names.size()) != facet_count())
    throw std::invalid_argument("facet name count mismatch");
  CombinatorialPolytope P = *this;
  P.facet_names_ = std::move(names);
  return P;
}

void CombinatorialPolytope::validate() const {
  poset_.validate();
  if (poset_.cells_of_dim(dim_).size() != 1)
    throw std::logic_error("top cell not unique");
  for (int f : facet_cells_)
    if (poset_.cofaces(f) != std::vector<int>{top_cell_})
      throw std::logic_error("facet not covered by the top cell alone");
  if (dim_ >= 2)
    for (int c : poset_.cells_of_dim(dim_ - 2))
      if (poset_.cofaces(c).size() != 2)
        throw std::logic_error("ridge " + poset_.label(c) +
                               " not on exactly two facets");
  for (int v : vertex_cells_) {
    int nf = static_cast<int>(facets_of_cell(v).size());
    if (!ideal_.at(v) && nf != dim_)
      throw std::logic_error("real vertex " + poset_.label(v) +
                             " is not simple");
    if (ideal_.at(v) && nf != 2 * (dim_ - 1))
      throw std::logic_error("ideal vertex " + poset_.label(v) +
                             " has wrong facet count");
  }
  // Connected dual graph.  A 1-polytope has no ridges, so no graph.
  if (facet_count() > 0 && dim_ >= 2) {
    std::vector<char> seen(facet_count(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int found = 1;
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < facet_count(); ++j)
        if (!seen[j] && facets_adjacent(i, j)) {
          seen[j] = 1;
          ++found;
          q.push(j);
        }
    }
    if (found != facet_count())
      throw std::logic_error("dual graph disconnected");
  }
  // Boundary sphere Euler characteristic.
  long chi = 0;
  auto f = f_vector();
  for (std::size_t k = 0; k < f.size(); ++k)
    chi += (k % 2 == 0) ? f[k] : -f[k];
  long expect = 1 + ((dim_ - 1) % 2 == 0 ? 1 : -1);
  if (chi != expect)
    throw std::logic_error("boundary Euler characteristic " +
                           std::to_string(chi) + ", expected " +
                           std::to_string(expect));
}

namespace {

CombinatorialPolytope make_pentagon(const std::string& fp,
                                    const std::string& vp) {
  std::vector<std::string> facets;
  for (int i = 1; i <= 5; ++i) facets.push_back(fp + std::to_string(i));
  std::vector<VertexSpec> verts;
  for (int i = 1; i <= 5; ++i) {
    VertexSpec v;
    v.name = vp + std::to_string(i);
    int j = i % 5 + 1;
    v.facet_mask = (std::uint64_t{1} << (i - 1)) | (std::uint64_t{1} << (j - 1));
    verts.push_back(v);
  }
  return CombinatorialPolytope::from_vertex_incidence(2, facets, verts);
}

CombinatorialPolytope make_simplex(int d, const std::string& fp,
                                   const std::string& vp) {
  if (d < 1 || d > 8) throw std::invalid_argument("simplex dimension range");
  std::vector<std::string> facets;
  for (int i = 1; i <= d + 1; ++i) facets.push_back(fp + std::to_string(i));
  std::vector<VertexSpec> verts;
  for (int i = 1; i <= d + 1; ++i) {
    VertexSpec v;
    v.name = vp + std::to_string(i);
    for (int j = 1; j <= d + 1; ++j)
      if (j != i) v.facet_mask |= std::uint64_t{1} << (j - 1);
    verts.push_back(v);
  }
  return CombinatorialPolytope::from_vertex_incidence(d, facets, verts);
}

CombinatorialPolytope make_cube(int d) {
  const char* axis = "XYZW";
  std::vector<std::string> facets;
  for (int a = 0; a < d; ++a)
    for (int s = 0; s < 2; ++s)
      facets.push_back(std::string(1, axis[a]) + std::to_string(s));
  std::vector<VertexSpec> verts;
  for (int bits = 0; bits < (1 << d); ++bits) {
    VertexSpec v;
    v.name = "v";
    for (int a = 0; a < d; ++a) {
      int s = (bits >> a) & 1;
      v.name += std::to_string(s);
      v.facet_mask |= std::uint64_t{1} << (2 * a + s);
    }
    verts.push_back(v);
  }
  return CombinatorialPolytope::from_vertex_incidence(d, facets, verts);
}

// Ideal triangular bipyramid: real apexes u, d over ideal equator
// w1..w3, facets U_k = (u, w_k, w_{k+1}) and D_k = (d, w_k, w_{k+1}).
CombinatorialPolytope make_p3() {
  std::vector<std::string> facets = {"U1", "U2", "U3", "D1", "D2", "D3"};
  auto U = [](int k) { return std::uint64_t{1} << ((k - 1) % 3); };
  auto D = [](int k) { return std::uint64_t{1} << (3 + (k - 1) % 3); };
  std::vector<VertexSpec> verts(5);
  verts[0] = {U(1) | U(2) | U(3), false, "u"};
  verts[1] = {D(1) | D(2) | D(3), false, "d"};
  for (int k = 1; k <= 3; ++k) {
    int prev = (k + 1) % 3 + 1;  // k-1 cyclically in 1..3
    verts[1 + k] = {U(prev) | U(k) | D(prev) | D(k), true,
                    "w" + std::to_string(k)};
  }
  return CombinatorialPolytope::from_vertex_incidence(3, facets, verts);
}

// Ideal 4-polytope whose facets correspond to the 2-element subsets of
// {1..5}: facet c,a covers {c+1, c+4}, facet c,b covers {c+2, c+3}
// (mod 5).  Real vertices t_i collect the pairs through i, ideal
// vertices o_i the pairs avoiding i.
CombinatorialPolytope make_p4() {
  std::vector<std::string> facets;
  std::vector<std::pair<int, int>> pair_of;  // per facet, elements in 1..5
  for (int c = 1; c <= 5; ++c) {
    auto wrap = [](int x) { return (x - 1) % 5 + 1; };
    facets.push_back(std::to_string(c) + "a");
    pair_of.push_back({wrap(c + 1), wrap(c + 4)});
    facets.push_back(std::to_string(c) + "b");
    pair_of.push_back({wrap(c + 2), wrap(c + 3)});
  }
  auto contains = [&](int f, int x) {
    return pair_of[f].first == x || pair_of[f].second == x;
  };
  std::vector<VertexSpec> verts;
  for (int i = 1; i <= 5; ++i) {
    VertexSpec v;
    v.name = "t" + std::to_string(i);
    for (int f = 0; f < 10; ++f)
      if (contains(f, i)) v.facet_mask |= std::uint64_t{1} << f;
    verts.push_back(v);
  }
  for (int i = 1; i <= 5; ++i) {
    VertexSpec v;
    v.name = "o" + std::to_string(i);
    v.ideal = true;
    for (int f = 0; f < 10; ++f)
      if (!contains(f, i)) v.facet_mask |= std::uint64_t{1} << f;
    verts.push_back(v);
  }
  return CombinatorialPolytope::from_vertex_incidence(4, facets, verts);
}

CombinatorialPolytope make_suspension_of_triangle() {
  CellPoset p;
  int u = p.add_cell(0, "u", {});
  int d = p.add_cell(0, "d", {});
  int e1 = p.add_cell(1, "e1", {u, d});
  int e2 = p.add_cell(1, "e2", {u, d});
  int e3 = p.add_cell(1, "e3", {u, d});
  int b1 = p.add_cell(2, "B1", {e1, e2});
  int b2 = p.add_cell(2, "B2", {e2, e3});
  int b3 = p.add_cell(2, "B3", {e3, e1});
  p.add_cell(3, "top", {b1, b2, b3});
  return CombinatorialPolytope::from_poset(std::move(p));
}

}  // namespace

CombinatorialPolytope CombinatorialPolytope::builtin(const std::string& name) {
  if (name == "P3") return make_p3();
  if (name == "P4") return make_p4();
  if (name == "pentagon") return make_pentagon("E", "p");
  if (name == "cube2") return make_cube(2);
  if (name == "cube3") return make_cube(3);
  if (name == "cube4") return make_cube(4);
  if (name == "pentagon_product")
    return product(make_pentagon("L", "p"), make_pentagon("R", "q"));
  if (name == "triangular_prism")
    return product(make_simplex(2, "A", "a"), make_simplex(1, "B", "b"));
  if (name == "pentagonal_prism")
    return product(make_pentagon("E", "p"), make_simplex(1, "B", "b"));
  if (name == "suspension_of_triangle") return make_suspension_of_triangle();
  if (name.rfind("simplex(", 0) == 0 && name.back() == ')') {
    int d = std::stoi(name.substr(8, name.size() - 9));
    return make_simplex(d, "S", "v");
  }
  throw std::invalid_argument("unknown builtin polytope: " + name);
}

std::vector<std::string> CombinatorialPolytope::builtin_names() {
  return {"P3",
          "P4",
          "pentagon",
          "cube2",
          "cube3",
          "cube4",
          "simplex(2)",
          "simplex(3)",
          "simplex(4)",
          "pentagon_product",
          "triangular_prism",
          "pentagonal_prism",
          "suspension_of_triangle"};
}

CombinatorialPolytope product(const CombinatorialPolytope& left,
                              const CombinatorialPolytope& right) {
  if (!left.ideal_vertices().empty() || !right.ideal_vertices().empty())
    throw std::invalid_argument("product factors must have real vertices");
  std::vector<std::string> facets = left.facet_names();
  for (const auto& nm : right.facet_names()) facets.push_back(nm);
  {
    std::set<std::string> seen(facets.begin(), facets.end());
    if (seen.size() != facets.size())
      throw std::invalid_argument("facet name clash in product");
  }
  const int nl = left.facet_count();
  std::vector<VertexSpec> verts;
  for (int a : left.vertex_cells())
    for (int b : right.vertex_cells()) {
      VertexSpec v;
      v.name = left.poset().label(a) + "x" + right.poset().label(b);
      for (int fi : left.facets_of_cell(a))
        v.facet_mask |= std::uint64_t{1} << fi;
      for (int fj : right.facets_of_cell(b))
        v.facet_mask |= std::uint64_t{1} << (nl + fj);
      verts.push_back(v);
    }
  return CombinatorialPolytope::from_vertex_incidence(
      left.dim() + right.dim(), std::move(facets), std::move(verts));
}

std::string CombinatorialPolytope::to_json() const {
  nlohmann::ordered_json j;
  j["dim"] = dim_;
  j["facets"] = facet_names_;
  j["vertices"] = nlohmann::ordered_json::array();
  for (int v : vertex_cells_) {
    nlohmann::ordered_json jv;
    std::vector<std::string> fs;
    for (int fi : facets_of_cell(v)) fs.push_back(facet_names_[fi]);
    jv["facets"] = fs;
    jv["ideal"] = ideal_.at(v);
    j["vertices"].push_back(jv);
  }
  return j.dump(2) + "\n";
}

CombinatorialPolytope CombinatorialPolytope::from_json(
    const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int dim = j.at("dim").get<int>();
  std::vector<std::string> facets =
      j.at("facets").get<std::vector<std::string>>();
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < facets.size(); ++i)
    index[facets[i]] = static_cast<int>(i);
  std::vector<VertexSpec> verts;
  for (const auto& jv : j.at("vertices")) {
    VertexSpec v;
    for (const auto& nm : jv.at("facets")) {
      auto it = index.find(nm.get<std::string>());
      if (it == index.end())
        throw std::invalid_argument("vertex references unknown facet " +
                                    nm.get<std::string>());
      v.facet_mask |= std::uint64_t{1} << it->second;
    }
    v.ideal = jv.value("ideal", false);
    v.name = jv.value("name", std::string());
    verts.push_back(v);
  }
  return from_vertex_incidence(dim, std::move(facets), std::move(verts));
}

}  // namespace torilink
