// qlk: command-line front end for the chord-diagram, Jones and quantum Lorentz pipelines.

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "criteria.hpp"
#include "qlk/braid.hpp"
#include "qlk/errors.hpp"
#include "qlk/io.hpp"
#include "qlk/jones.hpp"
#include "qlk/lorentz_invariants.hpp"
#include "qlk/lorentz_qgroup.hpp"
#include "qlk/weight_systems.hpp"

namespace {

using namespace qlk;

constexpr int kExitUsage = 2, kExitResource = 3, kExitConsistency = 4;
constexpr int kMaxOrder = 40;

struct RunConfig {
  int order = 6;
  unsigned precision = 60;
  int spin_cutoff = -1;
  std::string format = "json";
  std::string braid;
  int strands = 0;
  std::string knot;
  long m = 0;
  std::string p;
  int workers = 0;
  std::string cache_dir;
  bool order_given = false;
};

// A report is a JSON document plus the same content as a flat table for csv/pretty.
struct Report {
  Json doc;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void emit(const Report& r, const std::string& format) {
  if (format == "json") {
    std::cout << r.doc.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    auto line = [](const std::vector<std::string>& cells) {
      for (size_t k = 0; k < cells.size(); ++k) {
        const std::string& c = cells[k];
        bool quote = c.find_first_of(",\"") != std::string::npos;
        std::cout << (k ? "," : "");
        if (quote) {
          std::cout << '"';
          for (char ch : c) std::cout << (ch == '"' ? "\"\"" : std::string(1, ch));
          std::cout << '"';
        } else {
          std::cout << c;
        }
      }
      std::cout << "\n";
    };
    line(r.header);
    for (const auto& row : r.rows) line(row);
    return;
  }
  std::vector<size_t> width(r.header.size(), 0);
  for (size_t k = 0; k < r.header.size(); ++k) width[k] = r.header[k].size();
  for (const auto& row : r.rows)
    for (size_t k = 0; k < row.size() && k < width.size(); ++k) width[k] = std::max(width[k], row[k].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (size_t k = 0; k < cells.size(); ++k) {
      std::cout << (k ? "  " : "");
      if (k + 1 < cells.size())
        std::cout << std::left << std::setw(static_cast<int>(width[k])) << cells[k];
      else
        std::cout << cells[k];
    }
    std::cout << "\n";
  };
  line(r.header);
  for (const auto& row : r.rows) line(row);
}

int digits(const RunConfig& c) { return static_cast<int>(c.precision); }

BraidWord resolve_braid(const RunConfig& c, int* framing = nullptr, std::string* name = nullptr) {
  if (!c.braid.empty() && !c.knot.empty()) throw UsageError("give either --braid or --knot, not both");
  if (!c.knot.empty()) {
    KnotPresentation k = catalog_knot(c.knot);
    if (framing) *framing = k.framing;
    if (name) *name = k.name;
    return k.braid;
  }
  if (c.braid.empty()) throw UsageError("a braid (--braid) or catalog knot (--knot) is required");
  int strands = c.strands;
  if (strands <= 0) {
    // Smallest strand count that holds every generator.
    strands = 1;
    BraidWord probe = parse_braid(c.braid, 64);
    for (int l : probe.letters) strands = std::max(strands, std::abs(l) + 1);
  }
  if (name) *name = c.braid;
  return parse_braid(c.braid, strands);
}

Json braid_json(const BraidWord& b) { return {{"word", to_string(b)}, {"strands", b.strands}}; }

void add_series_rows(Report& r, const Series<GaussianRational>& s) {
  r.header = {"order", "coefficient"};
  for (int k = 0; k <= s.order(); ++k) r.rows.push_back({std::to_string(k), s[k].to_string()});
}

void add_series_rows(Report& r, const PolySeries& s, const std::string& var) {
  r.header = {"order", "coefficient"};
  for (int k = 0; k <= s.order(); ++k) r.rows.push_back({std::to_string(k), to_string(s[k], var)});
}

void add_series_rows(Report& r, const Series<BigComplex>& s, int d) {
  r.header = {"order", "re", "im"};
  for (int k = 0; k <= s.order(); ++k)
    r.rows.push_back({std::to_string(k), s[k].re().str(d, std::ios_base::scientific),
                      s[k].im().str(d, std::ios_base::scientific)});
}

GaussianRational parse_point(const std::string& text, const char* what) {
  try {
    return GaussianRational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
  }
}

// --- diagrams ----------------------------------------------------------------

struct DiagramsArgs {
  int chords = 2;
  bool four_t = false;
};

Report cmd_diagrams(const RunConfig&, const DiagramsArgs& a) {
  if (a.chords < 0) throw UsageError("--chords must be nonnegative");
  Report r;
  std::vector<ChordDiagram> ds = enumerate_diagrams(a.chords);
  Json words = Json::array();
  r.header = {"diagram"};
  for (const auto& d : ds) {
    words.push_back(d.to_string());
    r.rows.push_back({d.to_string().empty() ? "(empty)" : d.to_string()});
  }
  r.doc = {{"schema", "qlk.diagrams/1"}, {"chords", a.chords}, {"count", ds.size()}, {"diagrams", words}};
  if (a.four_t) {
    if (a.chords < 2) throw UsageError("four-term relations need at least two chords");
    Json gens = Json::array();
    for (const auto& g : four_t_generators(a.chords)) gens.push_back(to_json(g));
    r.doc["four_t"] = gens;
    r.doc["quotient_dimension"] = quotient_dimension(a.chords);
  }
  return r;
}

// --- weights -----------------------------------------------------------------

struct WeightsArgs {
  std::vector<std::string> diagrams;
  int chords = -1;
  std::vector<long> ms;
  std::string tensor = "jones";
  std::string route = "factorized";
};

Report cmd_weights(const RunConfig& c, const WeightsArgs& a) {
  std::vector<ChordDiagram> ds;
  for (const auto& w : a.diagrams) ds.push_back(ChordDiagram::parse(w));
  if (a.chords >= 0)
    for (const auto& d : enumerate_diagrams(a.chords)) ds.push_back(d);
  if (ds.empty()) throw UsageError("give --diagram or --chords");
  std::vector<long> ms = a.ms.empty() ? std::vector<long>{c.m} : a.ms;
  const InfinitesimalRMatrix& t = a.tensor == "jones" ? t_jones() : t_cartan_killing();
  Report r;
  r.header = {"diagram", "m", "lambda_z", "lambda_mp"};
  Json rows = Json::array();
  for (const auto& d : ds) {
    ParamPolynomial lz = lambda_z_sl2(d, t);
    for (long m : ms) {
      ParamPolynomial lmp;
      if (a.route == "direct") {
        lmp = lambda_mp_direct(d, m);
      } else {
        lmp = lambda_mp_factorized(d, Rational(m));
        if (a.route == "both" && lambda_mp_direct(d, m) != lmp)
          throw ConsistencyError("lambda_mp_direct = lambda_mp_factorized",
                                 "differs on " + d.to_string() + " at m=" + std::to_string(m));
      }
      rows.push_back({{"diagram", d.to_string()},
                      {"m", m},
                      {"lambda_z", to_json(lz)},
                      {"lambda_mp", to_json(lmp)}});
      r.rows.push_back({d.to_string(), std::to_string(m), to_string(lz, "z"), to_string(lmp, "p")});
    }
  }
  r.doc = {{"schema", "qlk.weights/1"}, {"tensor", t.name()}, {"route", a.route}, {"characters", rows}};
  return r;
}

// --- jones -------------------------------------------------------------------

struct JonesArgs {
  std::string spin;
  bool interpolate = false;
  std::string framing = "zero";
};

Report cmd_jones(const RunConfig& c, const JonesArgs& a) {
  BraidWord b = resolve_braid(c);
  Report r;
  r.doc = {{"schema", "qlk.jones/1"}, {"braid", braid_json(b)}, {"framing", a.framing}};
  if (!a.spin.empty() && a.interpolate) throw UsageError("--spin and --interpolate are exclusive");
  if (a.spin.empty()) {
    if (a.framing != "zero") throw UsageError("--interpolate works at zero framing");
    PolySeries s = jones_z_interpolated(b, c.order);
    r.doc["variable"] = "z";
    r.doc["series"] = to_json(s);
    add_series_rows(r, s, "z");
    return r;
  }
  GaussianRational spin = parse_point(a.spin, "spin");
  Rational two = spin.re() * 2;
  two.canonicalize();
  if (!spin.is_real() || two.get_den() != 1 || sgn(two) < 0)
    throw UsageError("--spin must be a nonnegative half-integer");
  int ta = static_cast<int>(two.get_num().get_si());
  Series<GaussianRational> s = a.framing == "zero" ? jones_unframed(b, ta, c.order) : jones_framed(b, ta, c.order);
  r.doc["spin"] = spin.to_string();
  r.doc["series"] = to_json(s);
  add_series_rows(r, s);
  return r;
}

// --- lorentz -----------------------------------------------------------------

struct LorentzArgs {
  int framing = 0;
  bool check_equivalence = false;
};

Report cmd_lorentz(const RunConfig& c, const LorentzArgs& a, int* exit_code) {
  BraidWord b = resolve_braid(c);
  Report r;
  r.doc = {{"schema", "qlk.lorentz/1"}, {"braid", braid_json(b)}, {"m", c.m}, {"framing", a.framing}};
  if (a.check_equivalence) {
    if (c.m != 0) throw UsageError("--check-equivalence needs m = 0");
    if (c.p.empty()) throw UsageError("--check-equivalence needs --p");
    GaussianRational p = parse_point(c.p, "p");
    if (!p.is_real() || p.re().get_den() != 1 || sgn(p.re()) <= 0)
      throw UsageError("--check-equivalence needs a positive integer p");
    long pv = p.re().get_num().get_si();
    EquivalenceReport e = equivalence_check(b, pv, c.order, c.spin_cutoff);
    Json diffs = Json::array();
    r.header = {"order", "braid_re", "braid_im", "jones_side", "diff"};
    for (int k = 0; k <= c.order; ++k) {
      std::string d = e.diffs[static_cast<size_t>(k)].str(3, std::ios_base::scientific);
      diffs.push_back(d);
      r.rows.push_back({std::to_string(k), e.braid_side[k].re().str(digits(c), std::ios_base::scientific),
                        e.braid_side[k].im().str(digits(c), std::ios_base::scientific),
                        e.jones_side[k].to_string(), d});
    }
    r.doc["p"] = pv;
    r.doc["equivalence"] = {{"pass", e.pass},
                            {"tolerance", e.tolerance.str(3, std::ios_base::scientific)},
                            {"max_diff", e.max_diff.str(3, std::ios_base::scientific)},
                            {"diffs", diffs},
                            {"braid_side", to_json(e.braid_side, digits(c))},
                            {"jones_side", to_json(e.jones_side)}};
    if (!e.pass) {
      std::cerr << "consistency failure: braid sum = Jones side (max diff "
                << e.max_diff.str(3, std::ios_base::scientific) << ")\n";
      *exit_code = kExitConsistency;
    }
    return r;
  }
  LorentzInvariant x = x_invariant_framed(b, c.m, c.order, a.framing);
  if (c.p.empty()) {
    r.doc["variable"] = "p";
    r.doc["series"] = to_json(x.series);
    add_series_rows(r, x.series, "p");
    return r;
  }
  GaussianRational p = parse_point(c.p, "p");
  Series<GaussianRational> s = specialize(x.series, p);
  r.doc["p"] = p.to_string();
  r.doc["series"] = to_json(s);
  // At m = 0 and integer p the braid-sum normalization of the same series.
  if (c.m == 0 && a.framing == 0 && p.is_real() && p.re().get_den() == 1 && sgn(p.re()) > 0)
    r.doc["braid_normalized"] = to_json(equivalence_rhs(b, p.re().get_num().get_si(), c.order));
  add_series_rows(r, s);
  return r;
}

// --- qlg ---------------------------------------------------------------------

struct QlgArgs {
  bool closed_sum = false;
};

std::string cache_file(const RunConfig& c) {
  std::string dir = c.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("QLK_CACHE_DIR")) dir = env;
  if (dir.empty()) return "";
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / ("cg-D" + std::to_string(c.precision) + ".bin")).string();
}

Report cmd_qlg(const RunConfig& c, const QlgArgs& a) {
  std::string cache = cache_file(c);
  if (!cache.empty() && std::filesystem::exists(cache)) {
    try {
      load_cg_cache(cache);
    } catch (const UsageError& e) {
      std::cerr << "ignoring cache: " << e.what() << "\n";
    }
  }
  Report r;
  BraidSumOptions opt{c.order, c.spin_cutoff};
  std::string p = c.p.empty() ? "symbolic" : c.p;
  if (a.closed_sum) {
    if (p == "symbolic") throw UsageError("--closed-sum needs a numeric --p");
    GaussianRational rho = parse_point(p, "p");
    Series<BigComplex> s = trefoil_closed_sum(BigComplex(rho), c.order, c.spin_cutoff);
    r.doc = {{"schema", "qlk.qlg/1"}, {"closed_sum", "trefoil"}, {"p", rho.to_string()},
             {"series", to_json(s, digits(c))}};
    add_series_rows(r, s, digits(c));
  } else {
    BraidWord b = resolve_braid(c);
    r.doc = {{"schema", "qlk.qlg/1"}, {"braid", braid_json(b)}};
    if (p == "symbolic") {
      Series<FloatPolynomial> s = braid_sum_symbolic(b, opt);
      r.doc["variable"] = "p";
      r.doc["series"] = to_json(s, digits(c));
      r.header = {"order", "degree", "re", "im"};
      for (int k = 0; k <= s.order(); ++k)
        for (int d = 0; d <= s[k].degree(); ++d)
          r.rows.push_back({std::to_string(k), std::to_string(d),
                            s[k].coefficient(d).re().str(digits(c), std::ios_base::scientific),
                            s[k].coefficient(d).im().str(digits(c), std::ios_base::scientific)});
    } else {
      GaussianRational rho = parse_point(p, "p");
      Series<BigComplex> s = braid_sum(b, BigComplex(rho), opt);
      r.doc["p"] = rho.to_string();
      r.doc["series"] = to_json(s, digits(c));
      add_series_rows(r, s, digits(c));
    }
  }
  r.doc["precision"] = c.precision;
  if (!cache.empty()) save_cg_cache(cache);
  return r;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::vector<int> only;
};

Report cmd_verify(const RunConfig& c, const VerifyArgs& a, int* exit_code) {
  acceptance::Options opt;
  opt.order_cap = c.order_given ? c.order : -1;
  opt.precision = c.precision;
  opt.only = a.only;
  for (int id : a.only)
    if (id < 1 || id > acceptance::criterion_count()) throw UsageError("no criterion " + std::to_string(id));
  bool pretty = c.format == "pretty";
  std::vector<acceptance::Result> results = acceptance::run_all(opt, [&](const acceptance::Result& r) {
    if (pretty) std::cout << acceptance::format_line(r) << std::endl;
  });
  Report r;
  Json list = Json::array();
  std::vector<std::string> failed;
  r.header = {"criterion", "status", "seconds", "title", "detail"};
  for (const auto& x : results) {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(2) << x.seconds;
    list.push_back({{"criterion", x.id}, {"title", x.title}, {"pass", x.pass}, {"seconds", x.seconds},
                    {"detail", x.detail}});
    r.rows.push_back({std::to_string(x.id), x.pass ? "PASS" : "FAIL", secs.str(), x.title, x.detail});
    if (!x.pass) failed.push_back(std::to_string(x.id) + " (" + x.title + ")");
  }
  r.doc = {{"schema", "qlk.verify/1"}, {"precision", c.precision}, {"order_cap", opt.order_cap},
           {"results", list}};
  if (!failed.empty()) {
    std::cerr << "consistency failure: acceptance criteria";
    for (const auto& f : failed) std::cerr << " " << f;
    std::cerr << "\n";
    *exit_code = kExitConsistency;
  }
  if (pretty) r.rows.clear(), r.header.clear();
  return r;
}

void validate(const RunConfig& c) {
  if (c.order < 0) throw UsageError("--order must be nonnegative");
  if (c.order > kMaxOrder) throw ResourceError("--order beyond " + std::to_string(kMaxOrder));
  if (c.precision < 30) throw UsageError("--precision must be at least 30 digits");
  if (c.precision > 2000) throw ResourceError("--precision beyond 2000 digits");
  if (c.spin_cutoff >= 0 && c.spin_cutoff < c.order) throw UsageError("--spin-cutoff must be at least --order");
  if (c.workers < 0) throw UsageError("--workers must be nonnegative");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perturbative knot invariants from chord diagrams, coloured Jones and quantum Lorentz braid sums"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with keys mirroring the flags (order, precision, ...)");
  RunConfig cfg;
  auto* order_opt = app.add_option("--order", cfg.order, "Truncation order N")->capture_default_str();
  app.add_option("--precision", cfg.precision, "Working precision in decimal digits")->capture_default_str();
  app.add_option("--spin-cutoff", cfg.spin_cutoff, "Largest crossing label in braid sums (default N)");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app.add_option("--braid", cfg.braid, "Braid word such as \"s1 -s2 s1 -s2\"");
  app.add_option("--strands", cfg.strands, "Strand count (default: inferred from the word)");
  app.add_option("--knot", cfg.knot, "Catalog knot: unknot, trefoil-right, trefoil-left, figure-eight");
  app.add_option("--m", cfg.m, "Lorentz parameter m")->capture_default_str();
  app.add_option("--p", cfg.p, "Lorentz parameter p: a Gaussian rational or \"symbolic\"");
  app.add_option("--workers", cfg.workers, "Worker count (computations run on one thread)");
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for the Clebsch-Gordan cache (env QLK_CACHE_DIR)");

  DiagramsArgs da;
  auto* diagrams = app.add_subcommand("diagrams", "Enumerate chord diagrams and four-term relations");
  diagrams->add_option("--chords", da.chords, "Number of chords")->required();
  diagrams->add_flag("--four-t", da.four_t, "Also list four-term generators and the quotient dimension");

  WeightsArgs wa;
  auto* weights = app.add_subcommand("weights", "Central characters of weight systems on diagrams");
  weights->add_option("--diagram", wa.diagrams, "Gauss word such as ABAB (repeatable)");
  weights->add_option("--chords", wa.chords, "All diagrams with this many chords");
  weights->add_option("--ms", wa.ms, "Values of m, comma separated (default: --m)")->delimiter(',');
  weights->add_option("--tensor", wa.tensor, "sl2 tensor for lambda_z")
      ->check(CLI::IsMember({"jones", "cartan-killing"}))
      ->capture_default_str();
  weights->add_option("--route", wa.route, "Lorentz character route")
      ->check(CLI::IsMember({"factorized", "direct", "both"}))
      ->capture_default_str();

  JonesArgs ja;
  auto* jones = app.add_subcommand("jones", "Coloured Jones expansion of a braid closure");
  jones->add_option("--spin", ja.spin, "Spin such as 3/2");
  jones->add_flag("--interpolate", ja.interpolate, "Polynomial dependence on the spin z (default)");
  jones->add_option("--framing", ja.framing, "zero or blackboard")
      ->check(CLI::IsMember({"zero", "blackboard"}))
      ->capture_default_str();

  LorentzArgs la;
  auto* lorentz = app.add_subcommand("lorentz", "Lorentz invariant X(m, p, K) from the Jones side");
  lorentz->add_option("--framing", la.framing, "Framing of the knot")->capture_default_str();
  lorentz->add_flag("--check-equivalence", la.check_equivalence, "Compare with the quantum Lorentz braid sum");

  QlgArgs qa;
  auto* qlg = app.add_subcommand("qlg", "Quantum Lorentz group braid sum S_b(q, p)");
  qlg->add_flag("--closed-sum", qa.closed_sum, "Trefoil closed-form label sum instead of a braid");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_option("--only", va.only, "Criterion numbers to run");

  for (auto* sub : {diagrams, weights, jones, lorentz, qlg, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  cfg.order_given = order_opt->count() > 0;

  int code = 0;
  try {
    validate(cfg);
    PrecisionGuard guard(cfg.precision);
    Report r;
    if (*diagrams) r = cmd_diagrams(cfg, da);
    else if (*weights) r = cmd_weights(cfg, wa);
    else if (*jones) r = cmd_jones(cfg, ja);
    else if (*lorentz) r = cmd_lorentz(cfg, la, &code);
    else if (*qlg) r = cmd_qlg(cfg, qa);
    else r = cmd_verify(cfg, va, &code);
    if (!(*verify && cfg.format == "pretty")) emit(r, cfg.format);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  }
  return code;
}
