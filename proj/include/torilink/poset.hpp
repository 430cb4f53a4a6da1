#ifndef TORILINK_POSET_HPP
#define TORILINK_POSET_HPP

#include <string>
#include <utility>
#include <vector>

#include "torilink/chain.hpp"

namespace torilink {

struct Subposet;

// Face poset of a regular CW complex.  Cells are added bottom-up; the
// faces of a cell are its codimension-one faces and must already exist.
//
// Every complex in this project is regular, so incidence numbers are
// always 0 or +-1 and can be reconstructed from the poset alone: the
// boundary of each cell is a sphere, which pins the signs up to a global
// flip per cell (fixed deterministically).
class CellPoset {
 public:
  int add_cell(int dim, std::string label, std::vector<int> faces);

  int size() const { return static_cast<int>(dim_.size()); }
  int top_dim() const;
  int dim(int id) const { return dim_[id]; }
  const std::string& label(int id) const { return label_[id]; }
  const std::vector<int>& faces(int id) const { return faces_[id]; }
  const std::vector<int>& cofaces(int id) const;

  std::vector<int> cells_of_dim(int d) const;
  std::vector<int> counts() const;  // cell count per dimension

  // Grading and diamond conditions; throws on violation.
  void validate() const;

  // Signed boundary matrices.  Checks that the square of the boundary
  // vanishes before returning.
  ChainComplex chain_complex() const;

  // Downward closure of the seed cells as a poset of its own.
  Subposet closed_subposet(const std::vector<int>& seed) const;

  bool isomorphic_to(const CellPoset& other) const;

  // Edges of a 2-cell in cyclic order; the flag tells whether the edge
  // is traversed from faces[0] to faces[1].
  std::vector<std::pair<int, bool>> boundary_walk(int two_cell) const;

 private:
  std::vector<int> dim_;
  std::vector<std::string> label_;
  std::vector<std::vector<int>> faces_;
  mutable std::vector<std::vector<int>> cofaces_;
  mutable bool cofaces_valid_ = false;

  void build_cofaces() const;
  std::vector<std::vector<int>> sign_bits() const;
};

// Result of closed_subposet; new_id[old] is -1 outside the closure.
struct Subposet {
  CellPoset poset;
  std::vector<int> new_id;
};

}  // namespace torilink

#endif
