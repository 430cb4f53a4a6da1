#ifndef TORILINK_COVER_HPP
#define TORILINK_COVER_HPP

#include <gmpxx.h>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "torilink/colouring.hpp"
#include "torilink/poset.hpp"
#include "torilink/simplicial.hpp"

namespace torilink {

// Strict properness is the usual independence condition; DoubledAllowed
// additionally admits one repeated colour per face, the local model
// along the core faces produced by filling.
enum class Properness { Strict, DoubledAllowed };

struct QuotientCellRef {
  int cell;     // polytope poset id
  Gf2Vec rep;   // canonical coset representative
};

// Dual cube complex of the cover: one k-cube per codimension-k face
// copy, vertices are the chambers.  Edge i-cells remember which facet
// they cross.
struct Spine {
  CellPoset poset;
  std::vector<QuotientCellRef> info;
  std::vector<int> edge_facet;  // facet index per poset id, -1 elsewhere
  std::vector<int> counts() const { return poset.counts(); }
  long chi() const;
  HomologySummary homology() const;
};

struct Cusp {
  int vertex_cell = -1;
  std::string vertex_name;
  Gf2Vec rep = 0;
  int section_rank = 0;
  std::vector<std::pair<std::string, std::string>> same_colour_pairs;
  std::vector<long> section_counts;
  HomologySummary section_homology;
  bool section_orientable = false;
};

// The coloured cover: 2^rank copies of the polytope glued by
// reflections, with face copies indexed by cosets of the span of the
// adjacent facet colours.  Ideal vertices are not cells.
class QuotientComplex {
 public:
  QuotientComplex(Colouring colouring, Properness mode = Properness::Strict);

  const Colouring& colouring() const { return colouring_; }
  const CombinatorialPolytope& polytope() const {
    return colouring_.polytope();
  }

  // Face copies grouped by polytope face dimension 0..dim.
  const std::vector<std::vector<QuotientCellRef>>& cells() const {
    return cells_;
  }
  std::vector<long> counts() const;
  long total_cells() const;
  long chi() const;
  bool closed() const { return closed_; }

  // Exact coefficient of pi^2 in the hyperbolic volume (dimension 4).
  mpq_class volume_pi2_coeff() const;

  const Gf2Span& cell_span(int poly_cell) const { return spans_.at(poly_cell); }

  // Tessellation poset; only a closed cover is a genuine complex.
  const CellPoset& tessellation() const;
  const std::vector<QuotientCellRef>& tess_info() const;
  int tess_index(int poly_cell, Gf2Vec rep) const;
  HomologySummary homology() const;

  Spine spine() const;
  std::vector<Cusp> cusps() const;

 private:
  Colouring colouring_;
  bool closed_;
  std::vector<std::vector<QuotientCellRef>> cells_;
  std::map<int, Gf2Span> spans_;
  // The primal tessellation is built on first use, also behind const
  // accessors of long-lived shared instances.
  mutable bool have_tess_ = false;
  mutable CellPoset tess_;
  mutable std::vector<QuotientCellRef> tess_info_;
  mutable std::map<std::pair<int, Gf2Vec>, int> tess_index_;
  void build_tessellation() const;
};

QuotientComplex assemble(Colouring colouring,
                         Properness mode = Properness::Strict);

// Subcomplex of facet directions active at a chamber v of the P4 cover
// with the five-colouring: all faces whose colours lie in the support
// of v.  Depends only on the weight of v.
SimplicialComplex descending_link(const Colouring& col, Gf2Vec v);

}  // namespace torilink

#endif
