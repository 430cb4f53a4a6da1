#include "torilink/choipark.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

namespace torilink {

namespace {

std::uint64_t selected_facets(const Colouring& col, Gf2Vec omega) {
  std::uint64_t mask = 0;
  for (int f = 0; f < col.polytope().facet_count(); ++f)
    if (gf2_dot(omega, col.colour(f))) mask |= std::uint64_t{1} << f;
  return mask;
}

}  // namespace

SimplicialComplex k_omega(const Colouring& col, Gf2Vec omega) {
  return col.polytope().dual_boundary_complex().induced(
      selected_facets(col, omega));
}

ChoiParkResult choi_park_betti(const Colouring& col) {
  if (!col.complete())
    throw std::invalid_argument("every facet needs a colour");
  const SimplicialComplex dual = col.polytope().dual_boundary_complex();

  ChoiParkResult res;
  res.betti.assign(col.polytope().dim() + 1, 0);
  const Gf2Vec end = Gf2Vec{1} << col.rank();
  for (Gf2Vec omega = 0; omega < end; ++omega) {
    const SimplicialComplex k = dual.induced(selected_facets(col, omega));
    for (const auto& [deg, rank] : k.reduced_betti()) {
      if (rank == 0) continue;
      const int target = deg + 1;
      if (target >= static_cast<int>(res.betti.size()))
        res.betti.resize(target + 1, 0);
      res.betti[target] += rank;
      res.contributors.push_back({omega, target, rank, k.describe()});
    }
  }
  return res;
}

}  // namespace torilink
