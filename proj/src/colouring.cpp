#include "torilink/colouring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace torilink {

Colouring::Colouring(std::shared_ptr<const CombinatorialPolytope> polytope,
                     int rank, std::vector<Gf2Vec> colours)
    : polytope_(std::move(polytope)), rank_(rank), colours_(std::move(colours)) {
  if (rank_ < 1 || rank_ > 31) throw std::invalid_argument("rank out of range");
  if (static_cast<int>(colours_.size()) != polytope_->facet_count())
    throw std::invalid_argument("one colour per facet expected");
  Gf2Vec limit = Gf2Vec{1} << rank_;
  for (Gf2Vec c : colours_)
    if (c >= limit) throw std::invalid_argument("colour exceeds rank");
}

bool Colouring::complete() const {
  for (Gf2Vec c : colours_)
    if (c == 0) return false;
  return true;
}

std::vector<Gf2Vec> Colouring::colours_at_cell(int cell_id) const {
  std::vector<Gf2Vec> out;
  for (int fi : polytope_->facets_of_cell(cell_id))
    if (colours_[fi] != 0) out.push_back(colours_[fi]);
  return out;
}

bool Colouring::cell_colours_ok(int cell_id, bool allow_doubled) const {
  auto vecs = colours_at_cell(cell_id);
  std::map<Gf2Vec, int> mult;
  for (Gf2Vec v : vecs) ++mult[v];
  std::vector<Gf2Vec> distinct;
  for (const auto& [v, m] : mult) {
    if (m > (allow_doubled ? 2 : 1)) return false;
    distinct.push_back(v);
  }
  return gf2_rank(distinct, rank_) == static_cast<int>(distinct.size());
}

std::vector<ColouringViolation> Colouring::validate() const {
  std::vector<ColouringViolation> out;
  const auto& poset = polytope_->poset();
  std::set<int> skip;
  skip.insert(polytope_->top_cell());
  for (int v : polytope_->ideal_vertices()) skip.insert(v);
  for (int id = 0; id < poset.size(); ++id) {
    if (skip.count(id)) continue;
    if (cell_colours_ok(id, false)) continue;
    auto vecs = colours_at_cell(id);
    std::set<Gf2Vec> distinct(vecs.begin(), vecs.end());
    std::string why = distinct.size() < vecs.size()
                          ? "repeated colour"
                          : "dependent colours";
    out.push_back({id, poset.label(id), why});
  }
  return out;
}

bool Colouring::orientable() const {
  if (!complete())
    throw std::logic_error("orientability needs a complete colouring");
  return solve_all_ones_covector(colours_, rank_).has_value();
}

namespace {

std::vector<Gf2Vec> basis_colours(const CombinatorialPolytope& p) {
  std::vector<Gf2Vec> out;
  for (int i = 0; i < p.facet_count(); ++i) out.push_back(Gf2Vec{1} << i);
  return out;
}

}  // namespace

Colouring Colouring::builtin(std::shared_ptr<const CombinatorialPolytope> p,
                             const std::string& polytope_name,
                             const std::string& colouring_name) {
  const std::string& cn = colouring_name;
  if (cn == "basis")
    return Colouring(p, p->facet_count(), basis_colours(*p));
  auto is_default = [&](const char* named) {
    return cn == "default" || cn == named;
  };
  if (polytope_name == "P4") {
    // Facet order 1a,1b,2a,2b,...: both facets of class c get colour c.
    if (is_default("rank5")) {
      std::vector<Gf2Vec> cols;
      for (int f = 0; f < 10; ++f) cols.push_back(Gf2Vec{1} << (f / 2));
      return Colouring(p, 5, cols);
    }
    if (cn == "rank4") {
      // Classes 1..4 keep basis vectors, class 5 folds onto their sum.
      std::vector<Gf2Vec> cols;
      for (int f = 0; f < 10; ++f) {
        int c = f / 2;
        cols.push_back(c < 4 ? (Gf2Vec{1} << c) : Gf2Vec{0b1111});
      }
      return Colouring(p, 4, cols);
    }
  }
  if (polytope_name == "P3" && is_default("rank3")) {
    // U_k -> e_k and D_k -> e_{k+1}.
    std::vector<Gf2Vec> cols(6);
    for (int k = 0; k < 3; ++k) {
      cols[k] = Gf2Vec{1} << k;
      cols[3 + k] = Gf2Vec{1} << ((k + 1) % 3);
    }
    return Colouring(p, 3, cols);
  }
  if (polytope_name == "cube3" && is_default("rank3")) {
    std::vector<Gf2Vec> cols(6);
    for (int a = 0; a < 3; ++a) cols[2 * a] = cols[2 * a + 1] = Gf2Vec{1} << a;
    return Colouring(p, 3, cols);
  }
  if (polytope_name == "cube2" && is_default("rank2")) {
    return Colouring(p, 2, {1, 1, 2, 2});
  }
  if (polytope_name == "pentagon_product" && is_default("rank6")) {
    // Left edges keep basis vectors; the right pentagon is read along
    // the pentagram 1,3,5,2,4 and shifted by e6, which keeps every
    // vertex of the product properly coloured.
    std::vector<Gf2Vec> cols(10);
    for (int i = 0; i < 5; ++i) cols[i] = Gf2Vec{1} << i;
    for (int pidx = 1; pidx <= 5; ++pidx) {
      int sigma = (2 * pidx - 2) % 5;  // 0-based image of the pentagram
      cols[5 + pidx - 1] = (Gf2Vec{1} << sigma) | (Gf2Vec{1} << 5);
    }
    return Colouring(p, 6, cols);
  }
  if (polytope_name.rfind("simplex(", 0) == 0 && cn == "default")
    return Colouring(p, p->facet_count(), basis_colours(*p));
  if (polytope_name == "pentagon" && cn == "default")
    return Colouring(p, p->facet_count(), basis_colours(*p));
  throw std::invalid_argument("unknown colouring '" + cn + "' for polytope '" +
                              polytope_name + "'");
}

Colouring Colouring::from_json(std::shared_ptr<const CombinatorialPolytope> p,
                               const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("rank")) throw std::invalid_argument("colouring needs rank");
  int rank = j.at("rank").get<int>();
  std::vector<Gf2Vec> cols(p->facet_count(), 0);
  for (const auto& [key, value] : j.items()) {
    if (key == "rank") continue;
    int fi = p->facet_index(key);
    if (fi < 0)
      throw std::invalid_argument("colouring names unknown facet " + key);
    auto bits = value.get<std::vector<int>>();
    if (static_cast<int>(bits.size()) != rank)
      throw std::invalid_argument("bit list length mismatch on facet " + key);
    Gf2Vec v = 0;
    for (int b = 0; b < rank; ++b)
      if (bits[b]) v |= Gf2Vec{1} << b;
    cols[fi] = v;
  }
  return Colouring(p, rank, cols);
}

std::string Colouring::to_json() const {
  nlohmann::ordered_json j;
  j["rank"] = rank_;
  for (int fi = 0; fi < polytope_->facet_count(); ++fi) {
    std::vector<int> bits(rank_, 0);
    for (int b = 0; b < rank_; ++b) bits[b] = (colours_[fi] >> b) & 1;
    j[polytope_->facet_names()[fi]] = bits;
  }
  return j.dump(2) + "\n";
}

namespace {

struct AutoSearch {
  const Colouring& col;
  int n;
  std::vector<std::vector<char>> adj;
  std::vector<int> perm;
  std::vector<char> used;
  std::map<Gf2Vec, Gf2Vec> class_map;
  std::set<Gf2Vec> class_used;
  std::vector<ColourAutomorphism> found;

  explicit AutoSearch(const Colouring& c) : col(c) {
    n = col.polytope().facet_count();
    adj.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && col.polytope().facets_adjacent(i, j)) adj[i][j] = 1;
    perm.assign(n, -1);
    used.assign(n, 0);
  }

  void rec(int i) {
    if (i == n) {
      found.push_back({perm, class_map});
      return;
    }
    Gf2Vec ci = col.colour(i);
    for (int j = 0; j < n; ++j) {
      if (used[j]) continue;
      bool ok = true;
      for (int k = 0; k < i && ok; ++k)
        if (adj[i][k] != adj[j][perm[k]]) ok = false;
      if (!ok) continue;
      Gf2Vec cj = col.colour(j);
      auto it = class_map.find(ci);
      bool fresh = (it == class_map.end());
      if (fresh) {
        if (class_used.count(cj)) continue;
      } else if (it->second != cj) {
        continue;
      }
      perm[i] = j;
      used[j] = 1;
      if (fresh) {
        class_map[ci] = cj;
        class_used.insert(cj);
      }
      rec(i + 1);
      if (fresh) {
        class_map.erase(ci);
        class_used.erase(cj);
      }
      perm[i] = -1;
      used[j] = 0;
    }
  }
};

}  // namespace

std::vector<ColourAutomorphism> colour_automorphisms(const Colouring& col) {
  AutoSearch search(col);
  search.rec(0);
  std::sort(search.found.begin(), search.found.end(),
            [](const ColourAutomorphism& a, const ColourAutomorphism& b) {
              return a.facet_perm < b.facet_perm;
            });
  return search.found;
}

}  // namespace torilink
