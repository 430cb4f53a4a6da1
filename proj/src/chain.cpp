#include "torilink/chain.hpp"

#include <sstream>
#include <stdexcept>

namespace torilink {

long ChainComplex::euler_characteristic() const {
  long chi = 0;
  for (std::size_t k = 0; k < cells.size(); ++k)
    chi += (k % 2 == 0) ? cells[k] : -cells[k];
  return chi;
}

void ChainComplex::check_boundary_squares_to_zero() const {
  for (std::size_t k = 2; k < boundary.size(); ++k) {
    if (boundary[k].cols() == 0 || boundary[k - 1].cols() == 0) continue;
    if (!SparseIntMatrix::multiply(boundary[k - 1], boundary[k]).is_zero())
      throw std::logic_error("boundary composite nonzero in degree " +
                             std::to_string(k));
  }
}

HomologySummary homology(const ChainComplex& c) {
  const int top = c.top_dim();
  HomologySummary out;
  out.betti.assign(top + 1, 0);
  out.torsion.assign(top + 1, {});
  std::vector<SnfResult> snf(top + 2);
  for (int k = 0; k <= top; ++k) snf[k] = smith_normal_form(c.boundary[k]);
  for (int k = 0; k <= top; ++k) {
    int rank_k = snf[k].rank();
    int rank_k1 = (k + 1 <= top) ? snf[k + 1].rank() : 0;
    out.betti[k] = c.cells[k] - rank_k - rank_k1;
    if (out.betti[k] < 0)
      throw std::logic_error("negative Betti number: inconsistent ranks");
    if (k + 1 <= top)
      for (const auto& d : snf[k + 1].factors)
        if (d > 1) out.torsion[k].push_back(d);
  }
  return out;
}

std::map<int, long> reduced_betti(const ChainComplex& c) {
  bool empty = true;
  for (int n : c.cells)
    if (n > 0) empty = false;
  if (empty) return {{-1, 1}};
  HomologySummary h = homology(c);
  std::map<int, long> out;
  for (std::size_t k = 0; k < h.betti.size(); ++k) {
    long b = h.betti[k];
    if (k == 0) b -= 1;
    if (b != 0) out[static_cast<int>(k)] = b;
  }
  return out;
}

bool HomologySummary::torsion_free() const {
  for (const auto& t : torsion)
    if (!t.empty()) return false;
  return true;
}

std::string HomologySummary::betti_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < betti.size(); ++k) {
    if (k) os << ',';
    os << betti[k];
  }
  os << ')';
  return os.str();
}

}  // namespace torilink
