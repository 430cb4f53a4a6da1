#ifndef TORILINK_SNF_HPP
#define TORILINK_SNF_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

namespace torilink {

// Row-major sparse integer matrix.  Entries with value zero are not stored.
class SparseIntMatrix {
 public:
  SparseIntMatrix() = default;
  SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int r, int c, const mpz_class& v);
  void set(int r, int c, const mpz_class& v);
  mpz_class get(int r, int c) const;

  const std::map<int, mpz_class>& row(int r) const { return row_[r]; }

  long nonzeros() const;

  static SparseIntMatrix multiply(const SparseIntMatrix& a,
                                  const SparseIntMatrix& b);
  bool is_zero() const;

  std::vector<std::vector<mpz_class>> dense() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::map<int, mpz_class>> row_;
};

struct SnfResult {
  // Nonzero invariant factors d_1 | d_2 | ... | d_r, all positive.
  std::vector<mpz_class> factors;
  int rank() const { return static_cast<int>(factors.size()); }
};

// Diagonalizes the matrix by row and column operations over Z.
SnfResult smith_normal_form(const SparseIntMatrix& m);

// Rank over Q via fraction-free Bareiss elimination.  Used as an
// independent cross-check for the elimination above.
int rational_rank(const std::vector<std::vector<mpz_class>>& dense);

}  // namespace torilink

#endif
