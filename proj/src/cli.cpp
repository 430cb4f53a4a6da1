#include "torilink/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "torilink/alexander.hpp"
#include "torilink/choipark.hpp"
#include "torilink/colouring.hpp"
#include "torilink/cover.hpp"
#include "torilink/cyclic.hpp"
#include "torilink/dehnfill.hpp"
#include "torilink/polytope.hpp"
#include "torilink/report.hpp"
#include "torilink/symmetry.hpp"
#include "torilink/verify.hpp"
#include "torilink/words.hpp"

namespace torilink {

namespace {

// Signals a malformed invocation; mapped to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A file path overrides a builtin of the same name.
std::shared_ptr<const CombinatorialPolytope> load_polytope(
    const std::string& spec) {
  if (std::filesystem::exists(spec)) {
    try {
      return std::make_shared<const CombinatorialPolytope>(
          CombinatorialPolytope::from_json(slurp(spec)));
    } catch (const std::exception& e) {
      throw UsageError("bad polytope file " + spec + ": " + e.what());
    }
  }
  try {
    return std::make_shared<const CombinatorialPolytope>(
        CombinatorialPolytope::builtin(spec));
  } catch (const std::exception&) {
    throw UsageError("unknown polytope: " + spec);
  }
}

Colouring load_colouring(std::shared_ptr<const CombinatorialPolytope> p,
                         const std::string& polytope_spec,
                         const std::string& spec) {
  if (std::filesystem::exists(spec)) {
    try {
      return Colouring::from_json(p, slurp(spec));
    } catch (const std::exception& e) {
      throw UsageError("bad colouring file " + spec + ": " + e.what());
    }
  }
  try {
    return Colouring::builtin(p, polytope_spec, spec);
  } catch (const std::exception&) {
    throw UsageError("unknown colouring: " + spec);
  }
}

Presentation load_presentation(const std::string& spec) {
  if (spec == "ivansic") return ivansic_presentation();
  if (!std::filesystem::exists(spec))
    throw UsageError("unknown presentation: " + spec);
  try {
    return parse_presentation_text(slurp(spec));
  } catch (const std::exception& e) {
    throw UsageError("bad presentation file " + spec + ": " + e.what());
  }
}

OutputFormat load_format(const std::string& name) {
  try {
    return parse_format(name);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::vector<long> parse_phi(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad --phi entry: " + item);
    }
  }
  if (out.size() != 5) throw UsageError("--phi needs five comma-separated integers");
  return out;
}

std::pair<long, long> parse_range(const std::string& text) {
  const size_t dots = text.find("..");
  if (dots == std::string::npos)
    throw UsageError("bad --table range, expected LO..HI: " + text);
  try {
    const long lo = std::stol(text.substr(0, dots));
    const long hi = std::stol(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::exception&) {
    throw UsageError("bad --table range, expected LO..HI: " + text);
  }
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string torsion_string(const std::vector<mpz_class>& t) {
  if (t.empty()) return "-";
  std::string s;
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i].get_str();
  return s;
}

Table homology_table(const std::string& title, const HomologySummary& h) {
  Table t(title, {"degree", "betti", "torsion"});
  for (size_t k = 0; k < h.betti.size(); ++k)
    t.add_row({std::to_string(k), std::to_string(h.betti[k]),
               torsion_string(k < h.torsion.size() ? h.torsion[k]
                                                   : std::vector<mpz_class>{})});
  return t;
}

std::string opt_long(const std::optional<long>& v) {
  return v ? std::to_string(*v) : "inf";
}

std::string covector_bits(Gf2Vec v, int rank) {
  std::string s;
  for (int i = 0; i < rank; ++i) s += ((v >> i) & 1) ? '1' : '0';
  return s;
}

// ---- subcommand handlers ----

int run_cover(const std::string& polytope_spec, const std::string& colouring_spec,
              const std::string& report, OutputFormat fmt) {
  const auto p = load_polytope(polytope_spec);
  const Colouring col = load_colouring(p, polytope_spec, colouring_spec);
  std::vector<Table> tabs;

  if (report == "cells") {
    const QuotientComplex q = assemble(col);
    Table counts("cell counts", {"dimension", "count"});
    const auto c = q.counts();
    for (size_t d = 0; d < c.size(); ++d)
      counts.add_row({std::to_string(d), std::to_string(c[d])});
    tabs.push_back(counts);
    Table inv("invariants", {"name", "value"});
    inv.add_row({"total cells", std::to_string(q.total_cells())});
    inv.add_row({"euler characteristic", std::to_string(q.chi())});
    inv.add_row({"closed", yesno(q.closed())});
    if (p->dim() == 4)
      inv.add_row({"volume / pi^2", q.volume_pi2_coeff().get_str()});
    tabs.push_back(inv);
  } else if (report == "homology") {
    // Cusped covers have no closed tessellation; their spine carries the
    // homotopy type.
    const QuotientComplex q = assemble(col);
    const HomologySummary h =
        q.closed() ? q.homology() : q.spine().homology();
    tabs.push_back(homology_table(
        q.closed() ? "cover homology" : "cover homology (spine)", h));
  } else if (report == "cusps") {
    const QuotientComplex q = assemble(col);
    Table t("cusps", {"vertex", "same-colour pairs", "section homology",
                      "orientable"});
    for (const Cusp& c : q.cusps()) {
      std::string pairs;
      for (const auto& [a, b] : c.same_colour_pairs)
        pairs += (pairs.empty() ? "" : " ") + a + "=" + b;
      if (pairs.empty()) pairs = "-";
      t.add_row({c.vertex_name, pairs, c.section_homology.betti_string(),
                 yesno(c.section_orientable)});
    }
    tabs.push_back(t);
    Table s("spine", {"name", "value"});
    const Spine sp = q.spine();
    s.add_row({"homology", sp.homology().betti_string()});
    s.add_row({"euler characteristic", std::to_string(sp.chi())});
    tabs.push_back(s);
  } else if (report == "descending-links") {
    Table t("descending links", {"covector", "weight", "reduced betti"});
    for (Gf2Vec v = 1; v < (Gf2Vec{1} << col.rank()); ++v) {
      const SimplicialComplex sc = descending_link(col, v);
      const auto red = sc.reduced_betti();
      std::string ranks;
      for (int d = 0; d < p->dim() - 1; ++d) {
        const auto it = red.find(d);
        ranks += (d ? "," : "(") +
                 std::to_string(it == red.end() ? 0L : it->second);
      }
      ranks += ")";
      t.add_row({covector_bits(v, col.rank()), std::to_string(gf2_weight(v)),
                 ranks});
    }
    tabs.push_back(t);
  } else {
    throw UsageError("unknown cover report: " + report);
  }
  std::cout << render_tables(tabs, fmt);
  return 0;
}

int run_fill(const std::string& polytope_spec, const std::string& colouring_spec,
             const std::string& choice_spec, const std::string& report,
             OutputFormat fmt) {
  const auto p = load_polytope(polytope_spec);
  const Colouring col = load_colouring(p, polytope_spec, colouring_spec);
  FillingChoice choice;
  if (choice_spec == "same-colour") {
    choice = FillingChoice::all_same_colour();
  } else if (std::filesystem::exists(choice_spec)) {
    try {
      choice = FillingChoice::from_json(slurp(choice_spec));
    } catch (const std::exception& e) {
      throw UsageError("bad choice file " + choice_spec + ": " + e.what());
    }
  } else {
    throw UsageError("unknown filling choice: " + choice_spec);
  }

  const FilledPolytope fp = dehn_fill(col, choice);
  std::vector<Table> tabs;
  if (report == "polytope") {
    const FilledPolytope sm = smooth(fp);
    Table t("filled polytope", {"name", "value"});
    t.add_row({"shape", recognize(*fp.polytope)});
    t.add_row({"facets", std::to_string(fp.polytope->facet_count())});
    t.add_row({"vertices",
               std::to_string(fp.polytope->vertex_cells().size())});
    t.add_row({"core faces", std::to_string(fp.core.size())});
    t.add_row({"smoothed shape", recognize(*sm.polytope)});
    tabs.push_back(t);
  } else if (report == "red-cells") {
    Table t("red core components",
            {"component", "cells", "chi", "closed", "orientable", "homology"});
    const auto comps = core_components(fp);
    for (size_t i = 0; i < comps.size(); ++i) {
      const CoreComponent& c = comps[i];
      t.add_row({std::to_string(i + 1), std::to_string(c.n_cells),
                 std::to_string(c.chi), yesno(c.is_closed), yesno(c.orientable),
                 c.homology.betti_string()});
    }
    tabs.push_back(t);
  } else if (report == "homology") {
    tabs.push_back(homology_table("filled cover homology",
                                  filled_manifold_homology(smooth(fp))));
  } else {
    throw UsageError("unknown fill report: " + report);
  }
  std::cout << render_tables(tabs, fmt);
  return 0;
}

int run_betti(const std::string& polytope_spec, const std::string& colouring_spec,
              const std::string& method, OutputFormat fmt) {
  const auto p = load_polytope(polytope_spec);
  const Colouring col = load_colouring(p, polytope_spec, colouring_spec);
  std::vector<long> betti;
  if (method == "choi-park") {
    betti = choi_park_betti(col).betti;
  } else if (method == "cubical") {
    const QuotientComplex q = assemble(col);
    betti = (q.closed() ? q.homology() : q.spine().homology()).betti;
  } else {
    throw UsageError("unknown betti method: " + method);
  }
  Table t("betti", {"degree", "rank"});
  for (size_t k = 0; k < betti.size(); ++k)
    t.add_row({std::to_string(k), std::to_string(betti[k])});
  std::cout << render_tables({t}, fmt);
  return 0;
}

int run_alexander(const std::string& pres_spec, int minors, bool want_ideal,
                  bool want_polynomial, OutputFormat fmt) {
  const Presentation pres = load_presentation(pres_spec);
  const auto m = alexander_matrix(pres);
  const int ngens = static_cast<int>(pres.generators.size());
  const int k = minors > 0 ? minors : std::max(1, ngens - 1);
  std::vector<Table> tabs;

  if (!want_ideal && !want_polynomial) {
    std::vector<std::string> cols{"relator"};
    for (const std::string& g : pres.generators) cols.push_back("d/d" + g);
    Table t("fox matrix", cols);
    for (size_t i = 0; i < m.size(); ++i) {
      std::vector<std::string> row{pres.relators[i].str(pres.generators)};
      for (const Laurent& e : m[i]) row.push_back(e.str());
      t.add_row(row);
    }
    tabs.push_back(t);
    std::cout << render_tables(tabs, fmt);
    return 0;
  }

  const AlexanderIdeal ideal = alexander_ideal(m, k);
  if (want_ideal) {
    Table s("minor census", {"name", "value"});
    s.add_row({"minor size", std::to_string(ideal.k)});
    s.add_row({"minors", std::to_string(ideal.total)});
    s.add_row({"zero minors", std::to_string(ideal.zero)});
    s.add_row({"distinct generators", std::to_string(ideal.generators.size())});
    tabs.push_back(s);
    Table g("ideal generators", {"exponents", "generator"});
    for (const Laurent& gen : ideal.generators) {
      const auto exps = product_of_t_minus_one_exponents(gen);
      std::string e = "-";
      if (exps) {
        e.clear();
        for (size_t i = 0; i < exps->size(); ++i)
          e += (i ? "," : "") + std::to_string((*exps)[i]);
      }
      g.add_row({e, gen.str()});
    }
    tabs.push_back(g);
  }
  if (want_polynomial) {
    const std::string value = ideal.gcd ? ideal.gcd->str() : "unavailable";
    if (fmt == OutputFormat::Human && !want_ideal) {
      std::cout << value << "\n";
      return 0;
    }
    Table t("alexander polynomial", {"value"});
    t.add_row({value});
    tabs.push_back(t);
  }
  std::cout << render_tables(tabs, fmt);
  return 0;
}

int run_cyclic(const std::string& phi_spec, const std::string& range_spec,
               OutputFormat fmt, bool format_given) {
  if (range_spec.empty()) {
    const std::vector<long> phi = parse_phi(phi_spec);
    CyclicBetti b;
    try {
      b = cyclic_cover_betti(phi);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    if (fmt == OutputFormat::Human) {
      std::cout << "b1 = " << opt_long(b.b1) << "\n"
                << "b2 = " << opt_long(b.b2) << "\n"
                << "b3 = " << opt_long(b.b3) << "\n";
      return 0;
    }
    Table t("cyclic cover betti", {"invariant", "value"});
    t.add_row({"b1", opt_long(b.b1)});
    t.add_row({"b2", opt_long(b.b2)});
    t.add_row({"b3", opt_long(b.b3)});
    std::cout << render_tables({t}, fmt);
    return 0;
  }

  const auto [lo, hi] = parse_range(range_spec);
  Table t("cyclic cover betti table",
          {"phi1", "phi2", "phi3", "phi4", "phi5", "b1", "b2", "b3"});
  std::vector<long> phi(5);
  const auto emit = [&](const std::vector<long>& x) {
    long g = 0;
    for (const long v : x) g = std::gcd(g, std::abs(v));
    if (g != 1) return;  // only primitive classes index covers
    const CyclicBetti b = cyclic_cover_betti(x);
    std::vector<std::string> row;
    for (const long v : x) row.push_back(std::to_string(v));
    row.push_back(opt_long(b.b1));
    row.push_back(opt_long(b.b2));
    row.push_back(opt_long(b.b3));
    t.add_row(row);
  };
  for (phi[0] = lo; phi[0] <= hi; ++phi[0])
    for (phi[1] = lo; phi[1] <= hi; ++phi[1])
      for (phi[2] = lo; phi[2] <= hi; ++phi[2])
        for (phi[3] = lo; phi[3] <= hi; ++phi[3])
          for (phi[4] = lo; phi[4] <= hi; ++phi[4]) emit(phi);
  // Sweeps default to csv so the table can be piped into other tools.
  std::cout << render_tables({t}, format_given ? fmt : OutputFormat::Csv);
  return 0;
}

int run_symmetry(const std::string& report, OutputFormat fmt) {
  std::vector<Table> tabs;
  if (report == "orders") {
    Table t("group orders", {"group", "order"});
    t.add_row({"index group H", std::to_string(group_H().size())});
    t.add_row({"signed group G", std::to_string(group_G().size())});
    t.add_row({"borromean subgroup", std::to_string(borromean_symmetries().size())});
    tabs.push_back(t);
  } else if (report == "transitivity") {
    const auto H = group_H();
    Table t("orbits of k-subsets under H", {"k", "transitive", "orbit sizes"});
    for (int k = 1; k <= 5; ++k) {
      const OrbitReport r = transitivity_on_subsets(H, k);
      std::string sizes;
      for (size_t i = 0; i < r.orbit_sizes.size(); ++i)
        sizes += (i ? "," : "") + std::to_string(r.orbit_sizes[i]);
      t.add_row({std::to_string(k), yesno(r.transitive), sizes});
    }
    tabs.push_back(t);
  } else if (report == "borromean") {
    const auto B = borromean_symmetries();
    Table t("borromean symmetries", {"permutation", "signs"});
    for (const SignedPerm4& g : B) {
      std::string perm, signs;
      for (int i = 0; i < 4; ++i) {
        perm += (i ? "," : "") + std::to_string(g.perm[i] + 1);
        signs += (i ? "," : "") + std::string(g.sign[i] > 0 ? "+" : "-");
      }
      t.add_row({perm, signs});
    }
    tabs.push_back(t);
  } else if (report == "quadrics") {
    Table inter("pairwise quadric intersections", {"pair", "points"});
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) {
        const auto pts = quadric_intersection(i, j);
        std::string s;
        for (size_t n = 0; n < pts.size(); ++n) {
          s += n ? " " : "";
          s += "(";
          for (int c = 0; c < 5; ++c) s += (c ? "," : "") + pts[n][c].str();
          s += ")";
        }
        inter.add_row({"Q" + std::to_string(i + 1) + ",Q" + std::to_string(j + 1), s});
      }
    tabs.push_back(inter);
    Table crit("critical points of the height function",
               {"quadric", "point", "morse index", "lagrange"});
    for (int i = 0; i < 5; ++i)
      for (const CriticalPoint& c : quadric_critical_points(i)) {
        std::string pt = "(";
        for (int n = 0; n < 5; ++n) pt += (n ? "," : "") + c.x[n].str();
        pt += ")";
        crit.add_row({"Q" + std::to_string(i + 1), pt,
                      std::to_string(c.morse_index), yesno(c.lagrange_ok)});
      }
    tabs.push_back(crit);
    Table fam("invariance", {"name", "value"});
    fam.add_row({"G preserves the quadric family", yesno(quadric_family_preserved())});
    tabs.push_back(fam);
  } else {
    throw UsageError("unknown symmetry report: " + report);
  }
  std::cout << render_tables(tabs, fmt);
  return 0;
}

int run_verify(OutputFormat fmt) {
  bool all_pass = true;
  Table claims("claims", {"claim", "status", "detail"});
  for (const CheckResult& r : run_all_checks()) {
    claims.add_row({r.name, r.pass ? "pass" : "FAIL", r.detail});
    all_pass = all_pass && r.pass;
  }
  Table gate("acceptance criteria", {"criterion", "name", "status", "detail"});
  for (const CriterionResult& r : run_acceptance()) {
    gate.add_row({std::to_string(r.number), r.name, r.pass ? "pass" : "FAIL",
                  r.detail});
    all_pass = all_pass && r.pass;
  }
  std::cout << render_tables({claims, gate}, fmt);
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"combinatorics of the five-torus link and its cube cover"};
  app.require_subcommand(1);

  std::string polytope = "P4";
  std::string colouring = "default";
  std::string presentation = "ivansic";
  std::string choice = "same-colour";
  std::string phi = "1,1,1,1,1";
  std::string format = "human";
  std::string cover_report = "cells";
  std::string fill_report = "polytope";
  std::string symmetry_report = "orders";
  std::string method = "choi-park";
  std::string table_range;
  int minors = 0;
  int depth = 64;
  int jobs = 1;
  bool want_ideal = false, want_polynomial = false;

  app.add_option("--format", format, "output format: human, csv or json")
      ->capture_default_str();
  app.add_option("--depth", depth, "move bound for homotopy searches")
      ->capture_default_str();
  app.add_option("--jobs", jobs, "worker hint; all current reports are serial")
      ->capture_default_str();

  CLI::App* cover = app.add_subcommand("cover", "reflection cover of a coloured polytope");
  cover->add_option("--polytope", polytope, "builtin name or json file")
      ->capture_default_str();
  cover->add_option("--colouring", colouring, "builtin name or json file")
      ->capture_default_str();
  cover->add_option("--report", cover_report,
                    "cells, homology, cusps or descending-links")
      ->capture_default_str();

  CLI::App* fill = app.add_subcommand("fill", "fill the ideal vertices along chosen axes");
  fill->add_option("--polytope", polytope, "builtin name or json file")
      ->capture_default_str();
  fill->add_option("--colouring", colouring, "builtin name or json file")
      ->capture_default_str();
  fill->add_option("--choice", choice, "same-colour or a json file")
      ->capture_default_str();
  fill->add_option("--report", fill_report, "polytope, red-cells or homology")
      ->capture_default_str();

  CLI::App* betti = app.add_subcommand("betti", "rational betti numbers of the cover");
  betti->add_option("--polytope", polytope, "builtin name or json file")
      ->capture_default_str();
  betti->add_option("--colouring", colouring, "builtin name or json file")
      ->capture_default_str();
  betti->add_option("--method", method, "choi-park or cubical")
      ->capture_default_str();

  CLI::App* alexander = app.add_subcommand("alexander", "fox matrix and elementary ideal");
  alexander->add_option("--presentation", presentation, "ivansic or a text file")
      ->capture_default_str();
  alexander->add_option("--minors", minors, "minor size, default generators - 1");
  alexander->add_flag("--ideal", want_ideal, "report the minor census and generators");
  alexander->add_flag("--polynomial", want_polynomial, "report the generator gcd");

  CLI::App* cyclic = app.add_subcommand("cyclic", "betti numbers of cyclic covers");
  cyclic->add_option("--phi", phi, "five comma-separated integers")
      ->capture_default_str();
  cyclic->add_option("--table", table_range,
                     "sweep all primitive classes with entries in LO..HI");

  CLI::App* symmetry = app.add_subcommand("symmetry", "link symmetry groups and quadrics");
  symmetry->add_option("--report", symmetry_report,
                       "orders, transitivity, borromean or quadrics")
      ->capture_default_str();

  app.add_subcommand("verify-paper", "run every recorded claim and the acceptance gate");

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const OutputFormat fmt = load_format(format);
    const bool format_given = app.count("--format") > 0;
    if (app.got_subcommand("cover"))
      return run_cover(polytope, colouring, cover_report, fmt);
    if (app.got_subcommand("fill"))
      return run_fill(polytope, colouring, choice, fill_report, fmt);
    if (app.got_subcommand("betti"))
      return run_betti(polytope, colouring, method, fmt);
    if (app.got_subcommand("alexander"))
      return run_alexander(presentation, minors, want_ideal, want_polynomial, fmt);
    if (app.got_subcommand("cyclic"))
      return run_cyclic(phi, table_range, fmt, format_given);
    if (app.got_subcommand("symmetry"))
      return run_symmetry(symmetry_report, fmt);
    if (app.got_subcommand("verify-paper")) return run_verify(fmt);
    throw UsageError("missing subcommand");
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace torilink
