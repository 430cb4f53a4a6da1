#ifndef TORILINK_CHOIPARK_HPP
#define TORILINK_CHOIPARK_HPP

#include <string>
#include <vector>

#include "torilink/colouring.hpp"
#include "torilink/simplicial.hpp"

namespace torilink {

// Full subcomplex of the dual boundary complex spanned by the facets
// whose colour pairs to one against the covector omega.
SimplicialComplex k_omega(const Colouring& col, Gf2Vec omega);

struct OmegaContribution {
  Gf2Vec omega = 0;
  int degree = 0;     // homological degree receiving the contribution
  long rank = 0;      // rank of reduced H_{degree-1}(K_omega)
  std::string shape;  // coarse type of K_omega, may be empty
};

struct ChoiParkResult {
  std::vector<long> betti;                      // b_0..b_dim of the cover
  std::vector<OmegaContribution> contributors;  // nonzero summands only
};

// Rational Betti numbers of the coloured cover, as the sum over all
// covectors omega of the reduced homology of K_omega shifted up by one.
// The formula needs no properness, so branched colourings are fine.
ChoiParkResult choi_park_betti(const Colouring& col);

}  // namespace torilink

#endif
