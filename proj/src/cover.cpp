#include "torilink/cover.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace torilink {

long Spine::chi() const {
  long chi = 0;
  auto c = counts();
  for (std::size_t k = 0; k < c.size(); ++k)
    chi += (k % 2 == 0) ? c[k] : -c[k];
  return chi;
}

HomologySummary Spine::homology() const {
  return torilink::homology(poset.chain_complex());
}

QuotientComplex::QuotientComplex(Colouring colouring, Properness mode)
    : colouring_(std::move(colouring)) {
  const auto& P = colouring_.polytope();
  const auto& poset = P.poset();
  const std::vector<int> ideal_list = P.ideal_vertices();
  const std::set<int> ideal(ideal_list.begin(), ideal_list.end());
  closed_ = ideal.empty();
  if (!colouring_.complete())
    throw std::invalid_argument("assembling needs a complete colouring");
  for (int id = 0; id < poset.size(); ++id) {
    if (id == P.top_cell() || ideal.count(id)) continue;
    if (!colouring_.cell_colours_ok(id, mode == Properness::DoubledAllowed))
      throw std::invalid_argument("colouring not proper at face " +
                                  poset.label(id));
  }
  // Span of the facet colours at each face; distinct vectors only, so a
  // doubled colour contributes one reflection direction.
  for (int id = 0; id < poset.size(); ++id) {
    if (ideal.count(id)) continue;
    std::vector<Gf2Vec> vecs =
        (id == P.top_cell()) ? std::vector<Gf2Vec>{}
                             : colouring_.colours_at_cell(id);
    spans_.emplace(id, span_of(vecs, colouring_.rank()));
  }
  cells_.assign(P.dim() + 1, {});
  for (int id = 0; id < poset.size(); ++id) {
    if (ideal.count(id)) continue;
    for (Gf2Vec rep : spans_.at(id).coset_reps())
      cells_[poset.dim(id)].push_back({id, rep});
  }
}

std::vector<long> QuotientComplex::counts() const {
  std::vector<long> out;
  for (const auto& level : cells_) out.push_back(static_cast<long>(level.size()));
  return out;
}

long QuotientComplex::total_cells() const {
  long t = 0;
  for (long c : counts()) t += c;
  return t;
}

long QuotientComplex::chi() const {
  long chi = 0;
  auto c = counts();
  for (std::size_t k = 0; k < c.size(); ++k)
    chi += (k % 2 == 0) ? c[k] : -c[k];
  return chi;
}

mpq_class QuotientComplex::volume_pi2_coeff() const {
  if (polytope().dim() != 4)
    throw std::logic_error("volume formula applies in dimension 4 only");
  return mpq_class(4 * chi(), 3);
}

void QuotientComplex::build_tessellation() const {
  if (!closed_)
    throw std::logic_error("tessellation of a cusped cover is not closed; "
                           "use the spine");
  const auto& poset = polytope().poset();
  for (std::size_t d = 0; d < cells_.size(); ++d) {
    for (const auto& qc : cells_[d]) {
      std::vector<int> faces;
      for (int g : poset.faces(qc.cell)) {
        Gf2Vec u = spans_.at(g).reduce(qc.rep);
        faces.push_back(tess_index_.at({g, u}));
      }
      std::string label = poset.label(qc.cell) + "@" + std::to_string(qc.rep);
      int id = tess_.add_cell(static_cast<int>(d), label, std::move(faces));
      tess_info_.push_back(qc);
      tess_index_[{qc.cell, qc.rep}] = id;
    }
  }
  tess_.validate();
  have_tess_ = true;
}

const CellPoset& QuotientComplex::tessellation() const {
  if (!have_tess_) build_tessellation();
  return tess_;
}

const std::vector<QuotientCellRef>& QuotientComplex::tess_info() const {
  tessellation();
  return tess_info_;
}

int QuotientComplex::tess_index(int poly_cell, Gf2Vec rep) const {
  tessellation();
  return tess_index_.at({poly_cell, spans_.at(poly_cell).reduce(rep)});
}

HomologySummary QuotientComplex::homology() const {
  return torilink::homology(tessellation().chain_complex());
}

Spine QuotientComplex::spine() const {
  const auto& P = polytope();
  const auto& poset = P.poset();
  const int d = P.dim();
  const std::vector<int> ideal_list = P.ideal_vertices();
  const std::set<int> ideal(ideal_list.begin(), ideal_list.end());
  for (const auto& [id, span] : spans_)
    if (span.rank() != d - poset.dim(id))
      throw std::logic_error(
          "spine needs strictly proper colours (face " + poset.label(id) +
          ")");
  Spine s;
  std::map<std::pair<int, Gf2Vec>, int> index;
  // Cube dimension is the codimension of the carrying face, so build by
  // descending face dimension; chambers (copies of the top cell) first.
  for (int k = 0; k <= d; ++k) {
    for (const auto& qc : cells_[d - k]) {
      std::vector<int> faces;
      if (k > 0) {
        for (int g : poset.cofaces(qc.cell)) {
          if (poset.dim(g) != d - k + 1) continue;  // top has no cofaces
          std::set<Gf2Vec> reps;
          for (Gf2Vec w : spans_.at(qc.cell).elements())
            reps.insert(spans_.at(g).reduce(qc.rep ^ w));
          if (reps.size() != 2)
            throw std::logic_error("face copy does not split in two");
          for (Gf2Vec u : reps) faces.push_back(index.at({g, u}));
        }
      }
      std::string label =
          poset.label(qc.cell) + "@" + std::to_string(qc.rep);
      int id = s.poset.add_cell(k, label, std::move(faces));
      s.info.push_back(qc);
      s.edge_facet.push_back(k == 1 ? P.facet_index_of_cell(qc.cell) : -1);
      index[{qc.cell, qc.rep}] = id;
    }
  }
  s.poset.validate();
  return s;
}

std::vector<Cusp> QuotientComplex::cusps() const {
  const auto& P = polytope();
  std::vector<Cusp> out;
  for (int w : P.ideal_vertices()) {
    auto link = std::make_shared<CombinatorialPolytope>(P.vertex_link(w));
    auto fw = P.facets_of_cell(w);
    std::vector<Gf2Vec> full;
    for (int fi : fw) full.push_back(colouring_.colour(fi));
    Gf2Span span = span_of(full, colouring_.rank());
    // Link colours rewritten in coordinates of the local span, which
    // preserves properness and orientability questions verbatim.
    std::vector<Gf2Vec> reduced;
    for (Gf2Vec v : full) reduced.push_back(span.coordinates(v));
    Colouring section_col(link, span.rank(), reduced);
    QuotientComplex section = assemble(section_col, Properness::Strict);
    std::vector<std::pair<std::string, std::string>> same;
    for (auto [a, b] : link->opposite_facet_pairs())
      if (full[a] == full[b])
        same.emplace_back(link->facet_names()[a], link->facet_names()[b]);
    HomologySummary h = section.homology();
    for (Gf2Vec rep : span.coset_reps()) {
      Cusp c;
      c.vertex_cell = w;
      c.vertex_name = P.poset().label(w);
      c.rep = rep;
      c.section_rank = span.rank();
      c.same_colour_pairs = same;
      c.section_counts = section.counts();
      c.section_homology = h;
      c.section_orientable = section_col.orientable();
      out.push_back(std::move(c));
    }
  }
  return out;
}

QuotientComplex assemble(Colouring colouring, Properness mode) {
  return QuotientComplex(std::move(colouring), mode);
}

SimplicialComplex descending_link(const Colouring& col, Gf2Vec v) {
  const auto& P = col.polytope();
  if (P.dim() != 4 || col.rank() != 5)
    throw std::invalid_argument("descending links need the five-coloured "
                                "ten-facet polytope");
  for (int fi = 0; fi < P.facet_count(); ++fi)
    if (gf2_weight(col.colour(fi)) != 1)
      throw std::invalid_argument("descending links need basis colours");
  const std::vector<int> ideal_list = P.ideal_vertices();
  const std::set<int> ideal(ideal_list.begin(), ideal_list.end());
  std::vector<std::uint64_t> simplices;
  const auto& poset = P.poset();
  for (int id = 0; id < poset.size(); ++id) {
    if (id == P.top_cell() || ideal.count(id)) continue;
    bool active = true;
    std::uint64_t m = 0;
    for (int fi : P.facets_of_cell(id)) {
      if ((v & col.colour(fi)) == 0) active = false;
      m |= std::uint64_t{1} << fi;
    }
    if (active) simplices.push_back(m);
  }
  return SimplicialComplex(P.facet_count(), std::move(simplices),
                           P.facet_names());
}

}  // namespace torilink
