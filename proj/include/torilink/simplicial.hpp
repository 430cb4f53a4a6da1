#ifndef TORILINK_SIMPLICIAL_HPP
#define TORILINK_SIMPLICIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "torilink/chain.hpp"

namespace torilink {

// Finite abstract simplicial complex on at most 64 vertices, held as its
// maximal simplices.  Vertices not covered by any maximal simplex do not
// belong to the complex; the complex with no simplices at all is allowed.
class SimplicialComplex {
 public:
  SimplicialComplex(int n_vertices, std::vector<std::uint64_t> maximal,
                    std::vector<std::string> names = {});

  int n_vertices() const { return n_vertices_; }
  const std::vector<std::uint64_t>& maximal() const { return maximal_; }
  const std::string& vertex_name(int v) const { return names_[v]; }

  bool empty() const { return maximal_.empty(); }
  bool has_simplex(std::uint64_t s) const;

  // All simplices grouped by dimension (faces[k] lists k-simplices).
  std::vector<std::vector<std::uint64_t>> faces() const;
  std::vector<long> f_vector() const;
  long euler_characteristic() const;

  ChainComplex chain() const;
  HomologySummary homology() const;
  // Reduced Betti numbers; the empty complex has rank one in degree -1.
  std::map<int, long> reduced_betti() const;

  // Full subcomplex spanned by the given vertex set.
  SimplicialComplex induced(std::uint64_t vertex_set) const;

  static SimplicialComplex join(const SimplicialComplex& a,
                                const SimplicialComplex& b);

  // Coarse homeomorphism-type tag used in reports: "empty", "point",
  // "circle", "sphere(k)" or "" when none of those is detected.
  std::string describe() const;

 private:
  int n_vertices_;
  std::vector<std::uint64_t> maximal_;
  std::vector<std::string> names_;
};

}  // namespace torilink

#endif
