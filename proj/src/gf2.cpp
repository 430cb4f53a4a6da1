#include "torilink/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace torilink {

namespace {
int high_bit(Gf2Vec v) { return 31 - __builtin_clz(v); }
}  // namespace

bool Gf2Span::insert(Gf2Vec v) {
  v = reduce(v);
  if (v == 0) return false;
  basis_.push_back(v);
  // Restore descending pivot order and keep rows mutually reduced.
  std::sort(basis_.begin(), basis_.end(),
            [](Gf2Vec a, Gf2Vec b) { return high_bit(a) > high_bit(b); });
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < basis_.size(); ++j)
      if (i != j && (basis_[i] >> high_bit(basis_[j])) & 1u)
        basis_[i] ^= basis_[j];
  return true;
}

Gf2Vec Gf2Span::reduce(Gf2Vec v) const {
  for (Gf2Vec row : basis_)
    if ((v >> high_bit(row)) & 1u) v ^= row;
  return v;
}

Gf2Vec Gf2Span::coordinates(Gf2Vec v) const {
  Gf2Vec used = 0;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if ((v >> high_bit(basis_[i])) & 1u) {
      v ^= basis_[i];
      used |= Gf2Vec{1} << i;
    }
  if (v != 0) throw std::invalid_argument("vector not in span");
  return used;
}

std::vector<Gf2Vec> Gf2Span::elements() const {
  std::vector<Gf2Vec> out;
  out.reserve(std::size_t{1} << basis_.size());
  for (Gf2Vec sel = 0; sel < (Gf2Vec{1} << basis_.size()); ++sel) {
    Gf2Vec v = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if ((sel >> i) & 1u) v ^= basis_[i];
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Gf2Vec> Gf2Span::coset_reps() const {
  std::vector<Gf2Vec> out;
  for (Gf2Vec v = 0; v < (Gf2Vec{1} << dim_); ++v)
    if (reduce(v) == v) out.push_back(v);
  return out;
}

Gf2Span span_of(const std::vector<Gf2Vec>& vecs, int dim) {
  Gf2Span s(dim);
  for (Gf2Vec v : vecs) s.insert(v);
  return s;
}

int gf2_rank(const std::vector<Gf2Vec>& vecs, int dim) {
  return span_of(vecs, dim).rank();
}

std::optional<Gf2Vec> gf2_solve(const std::vector<Gf2Vec>& rows,
                                const std::vector<int>& rhs, int dim) {
  // Augmented elimination with the constant column in bit `dim`.
  std::vector<Gf2Vec> aug;
  aug.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    aug.push_back(rows[i] | (Gf2Vec(rhs[i] & 1) << dim));
  std::vector<int> pivot_of_col(dim, -1);
  int nrows = static_cast<int>(aug.size());
  int r = 0;
  for (int c = 0; c < dim && r < nrows; ++c) {
    int p = -1;
    for (int i = r; i < nrows; ++i)
      if ((aug[i] >> c) & 1u) { p = i; break; }
    if (p < 0) continue;
    std::swap(aug[r], aug[p]);
    for (int i = 0; i < nrows; ++i)
      if (i != r && ((aug[i] >> c) & 1u)) aug[i] ^= aug[r];
    pivot_of_col[c] = r;
    ++r;
  }
  for (int i = r; i < nrows; ++i)
    if (aug[i] != 0) return std::nullopt;  // 0 = 1 row
  Gf2Vec x = 0;
  for (int c = 0; c < dim; ++c)
    if (pivot_of_col[c] >= 0 && ((aug[pivot_of_col[c]] >> dim) & 1u))
      x |= Gf2Vec{1} << c;
  return x;
}

std::optional<Gf2Vec> solve_all_ones_covector(const std::vector<Gf2Vec>& vecs,
                                              int dim) {
  std::vector<int> ones(vecs.size(), 1);
  return gf2_solve(vecs, ones, dim);
}

std::vector<Gf2Vec> random_invertible_gf2(int dim, std::mt19937_64& rng) {
  while (true) {
    std::vector<Gf2Vec> cols(dim);
    Gf2Vec mask = (dim == 32) ? ~Gf2Vec{0} : ((Gf2Vec{1} << dim) - 1);
    for (auto& c : cols) c = static_cast<Gf2Vec>(rng()) & mask;
    if (gf2_rank(cols, dim) == dim) return cols;
  }
}

Gf2Vec apply_gf2_matrix(const std::vector<Gf2Vec>& cols, Gf2Vec v) {
  Gf2Vec out = 0;
  for (std::size_t i = 0; i < cols.size(); ++i)
    if ((v >> i) & 1u) out ^= cols[i];
  return out;
}

}  // namespace torilink
