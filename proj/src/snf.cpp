#include "torilink/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace torilink {

void SparseIntMatrix::add(int r, int c, const mpz_class& v) {
  if (v == 0) return;
  auto it = row_[r].find(c);
  if (it == row_[r].end()) {
    row_[r].emplace(c, v);
  } else {
    it->second += v;
    if (it->second == 0) row_[r].erase(it);
  }
}

void SparseIntMatrix::set(int r, int c, const mpz_class& v) {
  if (v == 0)
    row_[r].erase(c);
  else
    row_[r][c] = v;
}

mpz_class SparseIntMatrix::get(int r, int c) const {
  auto it = row_[r].find(c);
  return it == row_[r].end() ? mpz_class(0) : it->second;
}

long SparseIntMatrix::nonzeros() const {
  long n = 0;
  for (const auto& r : row_) n += static_cast<long>(r.size());
  return n;
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& a,
                                          const SparseIntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix size mismatch in multiply");
  SparseIntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (const auto& [k, va] : a.row(i))
      for (const auto& [j, vb] : b.row(k)) out.add(i, j, va * vb);
  return out;
}

bool SparseIntMatrix::is_zero() const {
  for (const auto& r : row_)
    if (!r.empty()) return false;
  return true;
}

std::vector<std::vector<mpz_class>> SparseIntMatrix::dense() const {
  std::vector<std::vector<mpz_class>> d(rows_,
                                        std::vector<mpz_class>(cols_, 0));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : row_[r]) d[r][c] = v;
  return d;
}

namespace {

// Dense Smith reduction of whatever survives the sparse unit-pivot pass.
// Appends the nonzero invariant factors of `m` to `out`.
void dense_snf(std::vector<std::vector<mpz_class>> m,
               std::vector<mpz_class>& out) {
  const int n = static_cast<int>(m.size());
  const int k = n == 0 ? 0 : static_cast<int>(m[0].size());
  int t = 0;
  while (t < n && t < k) {
    // Smallest-magnitude nonzero entry of the trailing block becomes
    // the pivot candidate.
    int bi = -1, bj = -1;
    for (int i = t; i < n; ++i)
      for (int j = t; j < k; ++j)
        if (m[i][j] != 0 &&
            (bi < 0 || cmp(abs(m[i][j]), abs(m[bi][bj])) < 0)) {
          bi = i;
          bj = j;
        }
    if (bi < 0) break;
    std::swap(m[t], m[bi]);
    for (int i = 0; i < n; ++i) std::swap(m[i][t], m[i][bj]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (int i = t + 1; i < n; ++i) {
        if (m[i][t] == 0) continue;
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m[i][t].get_mpz_t(),
                    m[t][t].get_mpz_t());
        for (int j = t; j < k; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          // Remainder is strictly smaller; promote it to pivot.
          std::swap(m[t], m[i]);
          dirty = true;
        }
      }
      for (int j = t + 1; j < k; ++j) {
        if (m[t][j] == 0) continue;
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m[t][j].get_mpz_t(),
                    m[t][t].get_mpz_t());
        for (int i = t; i < n; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (int i = t; i < n; ++i) std::swap(m[i][t], m[i][j]);
          dirty = true;
        }
      }
      if (!dirty) {
        // Pivot must divide the rest of the block, otherwise fold the
        // offending row in and reduce again.
        for (int i = t + 1; i < n && !dirty; ++i)
          for (int j = t + 1; j < k && !dirty; ++j)
            if (m[i][j] % m[t][t] != 0) {
              for (int c = t; c < k; ++c) m[t][c] += m[i][c];
              dirty = true;
            }
      }
    }
    out.push_back(abs(m[t][t]));
    ++t;
  }
}

}  // namespace

SnfResult smith_normal_form(const SparseIntMatrix& m) {
  const int nr = m.rows(), nc = m.cols();
  std::vector<std::map<int, mpz_class>> rows(nr);
  for (int r = 0; r < nr; ++r) rows[r] = m.row(r);
  std::vector<std::set<int>> col_rows(nc);
  for (int r = 0; r < nr; ++r)
    for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);
  std::vector<bool> row_done(nr, false), col_done(nc, false);

  int unit_pivots = 0;
  while (true) {
    // Markowitz scan: cheapest +-1 pivot by fill-in estimate.
    long best = -1;
    int pr = -1, pc = -1;
    for (int r = 0; r < nr; ++r) {
      if (row_done[r]) continue;
      for (const auto& [c, v] : rows[r]) {
        if (col_done[c]) continue;
        if (v != 1 && v != -1) continue;
        long score = (static_cast<long>(rows[r].size()) - 1) *
                     (static_cast<long>(col_rows[c].size()) - 1);
        if (best < 0 || score < best) {
          best = score;
          pr = r;
          pc = c;
        }
        if (best == 0) break;
      }
      if (best == 0) break;
    }
    if (pr < 0) break;

    const mpz_class pv = rows[pr][pc];  // +-1
    std::vector<int> touched(col_rows[pc].begin(), col_rows[pc].end());
    for (int r : touched) {
      if (r == pr || row_done[r]) continue;
      mpz_class factor = rows[r][pc] * pv;
      for (const auto& [c, v] : rows[pr]) {
        if (col_done[c]) continue;
        auto it = rows[r].find(c);
        if (it == rows[r].end()) {
          rows[r].emplace(c, -factor * v);
          col_rows[c].insert(r);
        } else {
          it->second -= factor * v;
          if (it->second == 0) {
            rows[r].erase(it);
            col_rows[c].erase(r);
          }
        }
      }
    }
    // Implicit column operations clear the pivot row without touching
    // any other row, so the row and column just retire.
    row_done[pr] = true;
    col_done[pc] = true;
    ++unit_pivots;
  }

  // Compress the residue to a dense block.
  std::vector<int> live_rows, live_cols;
  for (int r = 0; r < nr; ++r)
    if (!row_done[r] && !rows[r].empty()) {
      bool any = false;
      for (const auto& [c, v] : rows[r])
        if (!col_done[c]) { any = true; break; }
      if (any) live_rows.push_back(r);
    }
  {
    std::set<int> cset;
    for (int r : live_rows)
      for (const auto& [c, v] : rows[r])
        if (!col_done[c]) cset.insert(c);
    live_cols.assign(cset.begin(), cset.end());
  }
  std::vector<std::vector<mpz_class>> block(
      live_rows.size(), std::vector<mpz_class>(live_cols.size(), 0));
  for (std::size_t i = 0; i < live_rows.size(); ++i) {
    std::size_t j = 0;
    for (int c : live_cols) {
      auto it = rows[live_rows[i]].find(c);
      if (it != rows[live_rows[i]].end()) block[i][j] = it->second;
      ++j;
    }
  }

  SnfResult res;
  res.factors.assign(unit_pivots, mpz_class(1));
  dense_snf(std::move(block), res.factors);
  for (std::size_t i = 1; i < res.factors.size(); ++i)
    if (res.factors[i] % res.factors[i - 1] != 0)
      throw std::logic_error("invariant factor chain broken");
  return res;
}

int rational_rank(const std::vector<std::vector<mpz_class>>& dense) {
  std::vector<std::vector<mpz_class>> m = dense;
  const int n = static_cast<int>(m.size());
  if (n == 0) return 0;
  const int k = static_cast<int>(m[0].size());
  mpz_class prev = 1;
  int rank = 0;
  for (int c = 0; c < k && rank < n; ++c) {
    int p = -1;
    for (int i = rank; i < n; ++i)
      if (m[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[rank], m[p]);
    for (int i = rank + 1; i < n; ++i) {
      for (int j = c + 1; j < k; ++j) {
        mpz_class num = m[rank][c] * m[i][j] - m[i][c] * m[rank][j];
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
                    prev.get_mpz_t());
        if (r != 0) throw std::logic_error("Bareiss division not exact");
        m[i][j] = q;
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace torilink
