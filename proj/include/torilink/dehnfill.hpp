#ifndef TORILINK_DEHNFILL_HPP
#define TORILINK_DEHNFILL_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torilink/chain.hpp"
#include "torilink/colouring.hpp"
#include "torilink/cover.hpp"
#include "torilink/polytope.hpp"

namespace torilink {

// Per ideal vertex: either an explicit opposite facet pair of its cube
// link (by facet names) or the unique same-coloured pair.
class FillingChoice {
 public:
  static FillingChoice all_same_colour();
  static FillingChoice from_json(const std::string& text);
  std::string to_json() const;

  void set_same_colour(const std::string& vertex);
  void set_pair(const std::string& vertex, std::string facet_a,
                std::string facet_b);

  bool applies_to_all() const { return all_same_colour_; }
  // nullopt = same-colour (or vertex not mentioned while in the global
  // same-colour mode); throws when the vertex has no assignment at all.
  std::optional<std::pair<std::string, std::string>> pair_for(
      const std::string& vertex) const;

 private:
  bool all_same_colour_ = false;
  std::map<std::string, std::optional<std::pair<std::string, std::string>>>
      choices_;
};

struct CoreFace {
  int cell = -1;  // codim-2 cell of the filled polytope
  std::string ideal_vertex;
  std::pair<int, int> joined_facets{-1, -1};  // facet indices
};

// A filled polytope keeps its inherited facet colouring and the list of
// core faces created by the filling.
struct FilledPolytope {
  std::shared_ptr<const CombinatorialPolytope> polytope;
  std::vector<CoreFace> core;
  int rank = 0;
  std::vector<Gf2Vec> colours;
  bool smoothed = false;

  Colouring colouring() const {
    return Colouring(polytope, rank, colours);
  }
};

// Replaces each ideal vertex by the core face spanned by the chosen
// opposite pair of its cube link.
FilledPolytope dehn_fill(const Colouring& col, const FillingChoice& choice);

// Erases the core faces whose two facets share a colour by merging the
// facets, then dissolves the resulting flat faces until none remain.
FilledPolytope smooth(const FilledPolytope& fp);

// Name of the builtin shape isomorphic to the lattice, or "unknown".
std::string recognize(const CellPoset& poset);
std::string recognize(const CombinatorialPolytope& p);

struct CoreComponent {
  std::vector<QuotientCellRef> cells;  // core face copies
  int n_cells = 0;
  long chi = 0;
  bool is_closed = false;
  bool orientable = false;
  HomologySummary homology;
  std::vector<Gf2Vec> facet_colours;  // of the joined facet pair
  // For a same-coloured core face: its colour, when every carrier face
  // of the component contains that reflection direction.
  std::optional<Gf2Vec> invariant_direction;
};

// Connected components of the core face copies inside the cover of the
// unsmoothed filled polytope.
std::vector<CoreComponent> core_components(const FilledPolytope& fp);

// Homology of the cover of the smoothed filled polytope.
HomologySummary filled_manifold_homology(const FilledPolytope& fp);

}  // namespace torilink

#endif
