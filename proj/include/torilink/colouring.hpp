#ifndef TORILINK_COLOURING_HPP
#define TORILINK_COLOURING_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "torilink/gf2.hpp"
#include "torilink/polytope.hpp"

namespace torilink {

struct ColouringViolation {
  int cell_id;
  std::string cell_label;
  std::string reason;
};

// Assignment of nonzero vectors in (Z/2)^rank to facets.  A facet may be
// left unassigned (partial colouring); properness is then checked on the
// assigned facets only, so extending a colouring never removes a
// violation.
class Colouring {
 public:
  Colouring(std::shared_ptr<const CombinatorialPolytope> polytope, int rank,
            std::vector<Gf2Vec> colours);

  // Named colourings for the builtin polytopes; "basis" gives every
  // facet its own basis vector and works for any polytope.
  static Colouring builtin(std::shared_ptr<const CombinatorialPolytope> p,
                           const std::string& polytope_name,
                           const std::string& colouring_name);

  static Colouring from_json(std::shared_ptr<const CombinatorialPolytope> p,
                             const std::string& text);
  std::string to_json() const;

  const CombinatorialPolytope& polytope() const { return *polytope_; }
  std::shared_ptr<const CombinatorialPolytope> polytope_ptr() const {
    return polytope_;
  }
  int rank() const { return rank_; }
  Gf2Vec colour(int facet_index) const { return colours_[facet_index]; }
  const std::vector<Gf2Vec>& colours() const { return colours_; }
  bool complete() const;

  // Colour vectors on the facets through a cell (assigned ones only).
  std::vector<Gf2Vec> colours_at_cell(int cell_id) const;

  // allow_doubled admits each vector on up to two facets through the
  // cell, which is the correct local model along a filled core face.
  bool cell_colours_ok(int cell_id, bool allow_doubled) const;

  // Properness violations at all faces except the top cell and ideal
  // vertices.  Empty result means the colouring is proper.
  std::vector<ColouringViolation> validate() const;
  bool proper() const { return validate().empty(); }

  // A complete proper colouring is orientable when some GF(2) covector
  // evaluates to one on every facet colour.
  bool orientable() const;

 private:
  std::shared_ptr<const CombinatorialPolytope> polytope_;
  int rank_;
  std::vector<Gf2Vec> colours_;
};

struct ColourAutomorphism {
  std::vector<int> facet_perm;         // image facet per facet index
  std::map<Gf2Vec, Gf2Vec> class_map;  // induced permutation of colours
};

// Automorphisms of the facet adjacency graph mapping colour classes to
// colour classes, in lexicographic order of the facet permutation.
std::vector<ColourAutomorphism> colour_automorphisms(const Colouring& col);

}  // namespace torilink

#endif
