#ifndef TORILINK_CHAIN_HPP
#define TORILINK_CHAIN_HPP

#include <map>
#include <string>
#include <vector>

#include "torilink/snf.hpp"

namespace torilink {

// Finitely generated chain complex of free Z-modules.
// boundary[k] maps k-chains to (k-1)-chains; boundary[0] has zero rows.
struct ChainComplex {
  std::vector<int> cells;                 // cells[k] = rank in degree k
  std::vector<SparseIntMatrix> boundary;  // boundary.size() == cells.size()

  int top_dim() const { return static_cast<int>(cells.size()) - 1; }
  long euler_characteristic() const;

  // Throws when some composite boundary-of-boundary is nonzero.
  void check_boundary_squares_to_zero() const;
};

struct HomologySummary {
  std::vector<long> betti;  // betti[k], k = 0..top_dim
  // torsion[k] lists the invariant factors > 1 of H_k.
  std::vector<std::vector<mpz_class>> torsion;

  bool torsion_free() const;
  // Betti numbers as "(b0,b1,...)" for reports.
  std::string betti_string() const;
  bool operator==(const HomologySummary& o) const = default;
};

HomologySummary homology(const ChainComplex& c);

// Reduced Betti numbers keyed by degree.  The empty complex (no cells at
// all) reports rank one in degree -1; otherwise degree-0 rank drops by one.
std::map<int, long> reduced_betti(const ChainComplex& c);

}  // namespace torilink

#endif
