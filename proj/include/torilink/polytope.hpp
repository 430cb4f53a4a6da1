#ifndef TORILINK_POLYTOPE_HPP
#define TORILINK_POLYTOPE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "torilink/poset.hpp"
#include "torilink/simplicial.hpp"

namespace torilink {

struct VertexSpec {
  std::uint64_t facet_mask = 0;
  bool ideal = false;
  std::string name;
};

// Face lattice of a combinatorial polytope, possibly with some vertices
// marked ideal.  Away from ideal vertices the polytope must be simple:
// a vertex lies on dim facets if real, on 2(dim-1) facets if ideal (its
// link is then expected to be a (dim-1)-cube).
//
// When built from vertex-facet incidences every cell also carries the
// mask of facets containing it, and cells are determined by their masks.
// Lattices arriving from facet identifications (see smooth()) do not
// admit such masks; mask-based queries throw for them.
class CombinatorialPolytope {
 public:
  static CombinatorialPolytope from_vertex_incidence(
      int dim, std::vector<std::string> facet_names,
      std::vector<VertexSpec> vertices);

  // Wraps an existing graded face poset with a distinguished top cell.
  // All vertices are taken to be real.
  static CombinatorialPolytope from_poset(CellPoset poset);

  // Known shapes: P3, P4, pentagon, cube2, cube3, simplex(d),
  // pentagon_product, triangular_prism, pentagonal_prism,
  // suspension_of_triangle.
  static CombinatorialPolytope builtin(const std::string& name);
  static std::vector<std::string> builtin_names();

  int dim() const { return dim_; }
  const CellPoset& poset() const { return poset_; }
  int top_cell() const { return top_cell_; }

  int facet_count() const { return static_cast<int>(facet_cells_.size()); }
  const std::vector<std::string>& facet_names() const { return facet_names_; }
  int facet_cell(int facet_index) const { return facet_cells_[facet_index]; }
  // -1 when the name or cell is not a facet.
  int facet_index(const std::string& name) const;
  int facet_index_of_cell(int cell_id) const;

  const std::vector<int>& vertex_cells() const { return vertex_cells_; }
  bool vertex_ideal(int vertex_cell) const;
  std::vector<int> ideal_vertices() const;
  std::vector<int> real_vertices() const;
  int vertex_by_name(const std::string& name) const;  // -1 if absent

  // Proper faces only, by dimension 0..dim-1.
  std::vector<int> f_vector() const;

  // Indices of the facets whose closure contains the cell.
  std::vector<int> facets_of_cell(int cell_id) const;
  // True when the two facets share a ridge.  Facets of an ideal polytope
  // meeting only in an ideal vertex are parallel, hence not adjacent.
  bool facets_adjacent(int fi, int fj) const;
  // Facet pairs sharing no ridge.
  std::vector<std::pair<int, int>> opposite_facet_pairs() const;

  bool has_masks() const { return has_masks_; }
  std::uint64_t cell_mask(int cell_id) const;
  int cell_by_mask(std::uint64_t mask) const;  // -1 if absent

  // Boundary sphere of a small neighbourhood of the vertex.  Link facets
  // keep the names of the original facets through the vertex; each link
  // vertex is an edge at v and is named after the other endpoint.
  CombinatorialPolytope vertex_link(int vertex_cell) const;

  // Nerve of the facet covering of the boundary: one vertex per facet,
  // one (k-1)-simplex per nonempty k-fold intersection.  Requires all
  // vertices real.
  SimplicialComplex dual_boundary_complex() const;

  CombinatorialPolytope with_facet_names(
      std::vector<std::string> names) const;

  void validate() const;

  std::string to_json() const;
  static CombinatorialPolytope from_json(const std::string& text);

 private:
  CombinatorialPolytope() = default;
  void index_from_poset();

  int dim_ = 0;
  CellPoset poset_;
  int top_cell_ = -1;
  std::vector<int> facet_cells_;
  std::vector<std::string> facet_names_;
  std::vector<int> vertex_cells_;
  std::map<int, bool> ideal_;        // keyed by vertex cell id
  bool has_masks_ = false;
  std::vector<std::uint64_t> mask_;  // per cell id when has_masks_
  std::map<std::uint64_t, int> by_mask_;
};

CombinatorialPolytope product(const CombinatorialPolytope& left,
                              const CombinatorialPolytope& right);

}  // namespace torilink

#endif
