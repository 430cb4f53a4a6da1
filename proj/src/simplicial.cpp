#include "torilink/simplicial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace torilink {

SimplicialComplex::SimplicialComplex(int n_vertices,
                                     std::vector<std::uint64_t> maximal,
                                     std::vector<std::string> names)
    : n_vertices_(n_vertices), names_(std::move(names)) {
  if (n_vertices < 0 || n_vertices > 64)
    throw std::invalid_argument("vertex count out of range");
  if (names_.empty()) {
    for (int v = 0; v < n_vertices; ++v) names_.push_back("v" + std::to_string(v));
  }
  if (static_cast<int>(names_.size()) != n_vertices)
    throw std::invalid_argument("vertex name count mismatch");
  // Drop empties and simplices contained in another maximal simplex.
  std::sort(maximal.begin(), maximal.end());
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
  for (std::uint64_t m : maximal) {
    if (m == 0) continue;
    bool dominated = false;
    for (std::uint64_t o : maximal)
      if (o != m && (m & o) == m) { dominated = true; break; }
    if (!dominated) maximal_.push_back(m);
  }
}

bool SimplicialComplex::has_simplex(std::uint64_t s) const {
  if (s == 0) return false;
  for (std::uint64_t m : maximal_)
    if ((s & m) == s) return true;
  return false;
}

std::vector<std::vector<std::uint64_t>> SimplicialComplex::faces() const {
  std::set<std::uint64_t> all;
  for (std::uint64_t m : maximal_) {
    // All nonempty subsets of m, walked with the subset-mask trick.
    std::uint64_t s = m;
    while (true) {
      all.insert(s);
      if (s == 0) break;
      s = (s - 1) & m;
      if (s == 0) break;
    }
  }
  int top = 0;
  for (std::uint64_t m : maximal_)
    top = std::max(top, __builtin_popcountll(m) - 1);
  std::vector<std::vector<std::uint64_t>> out(maximal_.empty() ? 0 : top + 1);
  for (std::uint64_t s : all) out[__builtin_popcountll(s) - 1].push_back(s);
  return out;
}

std::vector<long> SimplicialComplex::f_vector() const {
  std::vector<long> f;
  for (const auto& level : faces()) f.push_back(static_cast<long>(level.size()));
  return f;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  int k = 0;
  for (long fk : f_vector()) chi += (k++ % 2 == 0) ? fk : -fk;
  return chi;
}

ChainComplex SimplicialComplex::chain() const {
  auto levels = faces();
  ChainComplex c;
  c.cells.resize(levels.size());
  c.boundary.resize(levels.size());
  std::vector<std::map<std::uint64_t, int>> index(levels.size());
  for (std::size_t k = 0; k < levels.size(); ++k) {
    c.cells[k] = static_cast<int>(levels[k].size());
    for (std::size_t i = 0; i < levels[k].size(); ++i)
      index[k][levels[k][i]] = static_cast<int>(i);
  }
  for (std::size_t k = 0; k < levels.size(); ++k) {
    c.boundary[k] = SparseIntMatrix(k == 0 ? 0 : c.cells[k - 1], c.cells[k]);
    if (k == 0) continue;
    for (std::size_t i = 0; i < levels[k].size(); ++i) {
      std::uint64_t s = levels[k][i];
      int sign = 1, pos = 0;
      for (int v = 0; v < n_vertices_; ++v) {
        if (!((s >> v) & 1)) continue;
        c.boundary[k].add(index[k - 1][s ^ (std::uint64_t{1} << v)],
                          static_cast<int>(i), sign);
        sign = -sign;
        ++pos;
      }
    }
  }
  c.check_boundary_squares_to_zero();
  return c;
}

HomologySummary SimplicialComplex::homology() const {
  if (empty()) throw std::logic_error("homology of the empty complex");
  return torilink::homology(chain());
}

std::map<int, long> SimplicialComplex::reduced_betti() const {
  if (empty()) return {{-1, 1}};
  return torilink::reduced_betti(chain());
}

SimplicialComplex SimplicialComplex::induced(std::uint64_t vertex_set) const {
  std::vector<std::uint64_t> m;
  for (std::uint64_t s : maximal_)
    if ((s & vertex_set) != 0) m.push_back(s & vertex_set);
  return SimplicialComplex(n_vertices_, std::move(m), names_);
}

SimplicialComplex SimplicialComplex::join(const SimplicialComplex& a,
                                          const SimplicialComplex& b) {
  if (a.n_vertices_ + b.n_vertices_ > 64)
    throw std::invalid_argument("join too large");
  std::vector<std::string> names = a.names_;
  names.insert(names.end(), b.names_.begin(), b.names_.end());
  std::vector<std::uint64_t> m;
  if (a.empty()) {
    for (std::uint64_t s : b.maximal_) m.push_back(s << a.n_vertices_);
  } else if (b.empty()) {
    m = a.maximal_;
  } else {
    for (std::uint64_t s : a.maximal_)
      for (std::uint64_t t : b.maximal_) m.push_back(s | (t << a.n_vertices_));
  }
  return SimplicialComplex(a.n_vertices_ + b.n_vertices_, std::move(m),
                           std::move(names));
}

std::string SimplicialComplex::describe() const {
  if (empty()) return "empty";
  auto f = f_vector();
  if (f.size() == 1) return f[0] == 1 ? "point" : "";
  auto rb = reduced_betti();
  if (f.size() == 2) {
    // Closed curve: connected, every vertex on exactly two edges.
    const auto fs = faces();
    std::vector<int> deg(n_vertices_, 0);
    for (std::uint64_t e : fs[1])
      for (int v = 0; v < n_vertices_; ++v)
        if ((e >> v) & 1) ++deg[v];
    bool regular = true;
    for (std::uint64_t s : fs[0]) {
      int v = __builtin_ctzll(s);
      if (deg[v] != 2) regular = false;
    }
    if (regular && rb == std::map<int, long>{{1, 1}}) return "circle";
  }
  int d = static_cast<int>(f.size()) - 1;
  if (rb == std::map<int, long>{{d, 1}}) return "sphere(" + std::to_string(d) + ")";
  return "";
}

}  // namespace torilink
