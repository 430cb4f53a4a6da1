#ifndef TORILINK_GF2_HPP
#define TORILINK_GF2_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace torilink {

// Vectors over GF(2) are stored as bitmasks, bit i = coordinate i.
// All ambient dimensions in this project are small (<= 32).
using Gf2Vec = std::uint32_t;

inline int gf2_dot(Gf2Vec a, Gf2Vec b) {
  return __builtin_popcount(a & b) & 1;
}

inline int gf2_weight(Gf2Vec a) { return __builtin_popcount(a); }

// Row-echelon subspace of (Z/2)^dim.  Basis rows have distinct pivot
// (highest set) bits, so reduce() yields a canonical coset representative.
class Gf2Span {
 public:
  explicit Gf2Span(int dim) : dim_(dim) {}

  // Returns true when v enlarges the span.
  bool insert(Gf2Vec v);

  int rank() const { return static_cast<int>(basis_.size()); }
  int dim() const { return dim_; }

  bool contains(Gf2Vec v) const { return reduce(v) == 0; }

  // Canonical representative of v + span.
  Gf2Vec reduce(Gf2Vec v) const;

  // Like reduce, but also reports which basis rows were xor-ed in,
  // as a bitmask over basis row indices.  Requires contains(v).
  Gf2Vec coordinates(Gf2Vec v) const;

  const std::vector<Gf2Vec>& basis() const { return basis_; }

  // All 2^rank elements of the subspace, sorted ascending.
  std::vector<Gf2Vec> elements() const;

  // Canonical representatives of all 2^(dim-rank) cosets, sorted ascending.
  std::vector<Gf2Vec> coset_reps() const;

  bool operator==(const Gf2Span& o) const {
    return dim_ == o.dim_ && basis_ == o.basis_;
  }

 private:
  int dim_;
  std::vector<Gf2Vec> basis_;  // kept fully reduced, pivots descending
};

// Builds the span of a list of vectors.
Gf2Span span_of(const std::vector<Gf2Vec>& vecs, int dim);

int gf2_rank(const std::vector<Gf2Vec>& vecs, int dim);

// Finds chi with <chi, v> = 1 for every v in vecs, if one exists.
// Free coordinates are set to zero, so the answer is deterministic.
std::optional<Gf2Vec> solve_all_ones_covector(const std::vector<Gf2Vec>& vecs,
                                              int dim);

// Dense GF(2) linear solve: rows a_i, targets b_i, solve a_i . x = b_i.
// Returns std::nullopt when inconsistent; free variables are zeroed.
std::optional<Gf2Vec> gf2_solve(const std::vector<Gf2Vec>& rows,
                                const std::vector<int>& rhs, int dim);

// Invertible dim x dim matrix over GF(2), given by columns (image of e_i).
std::vector<Gf2Vec> random_invertible_gf2(int dim, std::mt19937_64& rng);

// Applies a matrix given by columns to v.
Gf2Vec apply_gf2_matrix(const std::vector<Gf2Vec>& cols, Gf2Vec v);

}  // namespace torilink

#endif
