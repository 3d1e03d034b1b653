// Command-line front end: smoothability analysis of monomial curves given by
// numerical semigroups and of cones over point configurations, plus the
// classification table over ranges of (n, r). Machine output is JSON on
// stdout; diagnostics go to stderr only.

#include <omp.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "curvesing/conet1.hpp"
#include "curvesing/errors.hpp"
#include "curvesing/exactmat.hpp"
#include "curvesing/presentation.hpp"
#include "curvesing/pointset.hpp"
#include "curvesing/semigroup.hpp"
#include "curvesing/verdict.hpp"

using json = nlohmann::json;
using namespace curvesing;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSemigroupInput = 3;
constexpr int kExitConfigInput = 4;

json verdict_to_json(const Verdict& v) {
  json w = json::object();
  for (const auto& [k, val] : v.witnesses) w[k] = val;
  return json{{"outcome", outcome_name(v.outcome)},
              {"provenance", v.provenance},
              {"witnesses", w}};
}

std::vector<long long> parse_generators(const std::string& text) {
  std::vector<long long> gens;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      gens.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      fail(Errc::ParseError, "bad generator '" + tok + "'");
    }
  }
  return gens;
}

// ---------------------------------------------------------------------------
// semigroup subcommand

struct SemigroupArgs {
  std::string generators;
  int kmax = 4;
  bool with_t1 = false;
  bool with_presentation = false;
  bool as_json = false;
};

int run_semigroup(const SemigroupArgs& args) {
  NumericalSemigroup s = NumericalSemigroup::from_generators(parse_generators(args.generators));
  SemigroupInvariants inv = invariants(s);

  json rep;
  rep["generators"] = s.generators();
  rep["gaps"] = s.gaps();
  rep["delta"] = s.genus();
  rep["frobenius"] = s.frobenius();
  rep["conductor"] = s.conductor();
  rep["type"] = inv.type;
  rep["pseudo_frobenius"] = inv.pseudo_frobenius;
  rep["symmetric"] = inv.symmetric;
  rep["deligne_e"] = inv.deligne_e;
  rep["mu"] = inv.mu;

  json dedekind = json::object();
  Verdict verdict = Verdict::unknown("Buchweitz lemma needs multiplicity >= 3");
  if (s.multiplicity() >= 3) {
    for (int k = 1; k <= args.kmax; ++k)
      dedekind[std::to_string(k)] = dedekind_dk(s, k);
    verdict = buchweitz_verdict(s, args.kmax);
  }
  rep["dedekind"] = dedekind;
  rep["verdict"] = verdict_to_json(verdict);

  BinomialPresentation pres{s, {}, {}};
  if (args.with_t1 || args.with_presentation) pres = minimal_presentation(s);

  if (args.with_presentation) {
    json rels = json::array();
    for (const auto& rel : pres.relations)
      rels.push_back(json{{"alpha", rel.alpha}, {"beta", rel.beta},
                          {"q", rel.degree}, {"v", rel.v}});
    rep["presentation"] = rels;
  }
  if (args.with_t1) {
    json prof = json::object();
    for (const auto& [ell, dim] : t1_profile(pres).by_degree)
      prof[std::to_string(ell)] = dim;
    rep["t1"] = prof;
  }

  if (args.as_json) {
    std::cout << rep.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "semigroup <";
  for (std::size_t i = 0; i < s.generators().size(); ++i)
    std::cout << (i ? "," : "") << s.generators()[i];
  std::cout << ">\n";
  std::cout << "  delta " << s.genus() << "  conductor " << s.conductor()
            << "  frobenius " << s.frobenius() << "  type " << inv.type
            << (inv.symmetric ? "  symmetric" : "") << "\n";
  std::cout << "  pseudo-Frobenius:";
  for (long long l : inv.pseudo_frobenius) std::cout << " " << l;
  std::cout << "\n  mu " << inv.mu << "  Deligne e " << inv.deligne_e << "\n";
  if (!dedekind.empty()) {
    std::cout << "  Dedekind d_k:";
    for (int k = 1; k <= args.kmax; ++k)
      std::cout << "  d_" << k << " = " << dedekind[std::to_string(k)].get<long long>();
    std::cout << "\n";
  }
  std::cout << "  verdict: " << outcome_name(verdict.outcome) << " (" << verdict.provenance
            << ")\n";
  if (args.with_presentation) {
    std::cout << "  relations (" << pres.relations.size() << "):\n";
    for (const auto& rel : pres.relations) {
      auto side = [&](const std::vector<long long>& e) {
        std::string out;
        for (std::size_t j = 0; j < e.size(); ++j) {
          if (e[j] == 0) continue;
          if (!out.empty()) out += " ";
          out += "x" + std::to_string(j + 1);
          if (e[j] > 1) out += "^" + std::to_string(e[j]);
        }
        return out.empty() ? std::string("1") : out;
      };
      std::cout << "    " << side(rel.alpha) << " - " << side(rel.beta) << " @ degree "
                << rel.degree << "\n";
    }
  }
  if (args.with_t1) {
    std::cout << "  T1 profile:";
    for (const auto& [ell, dim] : t1_profile(pres).by_degree)
      std::cout << "  " << ell << ":" << dim;
    std::cout << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// pointset subcommand

struct PointsetArgs {
  std::string file;
  std::string csv;
  std::string builder;
  std::vector<long long> random_nr;
  long long self_associated_n = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  long long box = 100;
  std::string gale_out;
  std::vector<long long> t1_window;
  bool as_json = false;
  std::string uniform_mode;  // "", "exhaustive", "sampled"
  int uniform_trials = 64;
};

PointConfiguration load_pointset(const PointsetArgs& args) {
  int sources = 0;
  sources += !args.file.empty();
  sources += !args.csv.empty();
  sources += !args.builder.empty();
  sources += !args.random_nr.empty();
  sources += args.self_associated_n > 0;
  if (sources != 1)
    fail(Errc::BadParameters,
         "exactly one of --file/--csv/--builder/--random/--self-associated");

  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) fail(Errc::ParseError, "cannot open " + args.file);
    std::stringstream buf;
    buf << in.rdbuf();
    return config_from_json(buf.str());
  }
  if (!args.csv.empty()) {
    std::ifstream in(args.csv);
    if (!in) fail(Errc::ParseError, "cannot open " + args.csv);
    std::stringstream buf;
    buf << in.rdbuf();
    return config_from_csv(buf.str());
  }
  if (!args.builder.empty()) {
    if (args.builder == "tetrahedron-midpoints") return tetrahedron_midpoints();
    fail(Errc::BadParameters, "unknown builder '" + args.builder + "'");
  }
  if (!args.random_nr.empty()) {
    if (args.random_nr.size() != 2) fail(Errc::BadParameters, "--random needs N R");
    if (!args.seed_set) fail(Errc::BadParameters, "--random requires --seed");
    return random_config(static_cast<int>(args.random_nr[0]),
                         static_cast<int>(args.random_nr[1]), args.seed, args.box);
  }
  if (!args.seed_set) fail(Errc::BadParameters, "--self-associated requires --seed");
  return random_self_associated(static_cast<int>(args.self_associated_n), args.seed);
}

int run_pointset(const PointsetArgs& args) {
  PointConfiguration g = load_pointset(args);
  json rep;
  rep["n"] = g.n();
  rep["r"] = g.r();
  if (!g.label().empty()) rep["label"] = g.label();

  rep["general_position"] = is_general_position(g);
  if (args.uniform_mode == "exhaustive" || (args.uniform_mode.empty() && g.r() <= 12)) {
    auto uc = is_uniform_position_exhaustive(g);
    rep["uniform_position"] = json{{"uniform", uc.uniform},
                                   {"certain", uc.certain},
                                   {"mode", "exhaustive"}};
  } else if (args.uniform_mode == "sampled") {
    if (!args.seed_set) fail(Errc::BadParameters, "sampled uniform check requires --seed");
    auto uc = is_uniform_position_sampled(g, args.seed + 1, args.uniform_trials);
    rep["uniform_position"] = json{{"uniform", uc.uniform},
                                   {"certain", uc.certain},
                                   {"mode", "sampled"}};
  }

  rep["delta"] = delta_cone(g);
  rep["quadric_deficiency"] = quadric_deficiency(g);
  if (g.r() == 2 * g.n()) rep["self_associated"] = is_self_associated(g);
  if (g.r() > g.n()) {
    auto inv = generic_invariants(g.n(), g.r());
    rep["generic"] = json{{"d", inv.d},         {"delta", inv.delta},
                          {"s", inv.s},         {"type", inv.type},
                          {"e", inv.deligne_e}, {"moduli", inv.moduli}};
    if (g.n() >= 4) rep["classify_generic"] = verdict_to_json(classify_generic(g.n(), g.r()));
  }

  const long long genus = g.r() - g.n();
  if (genus >= 4 && g.r() <= binom(g.n() + 1, 2))
    rep["quadric_test"] = verdict_to_json(cone_quadric_test(g, genus));

  std::optional<PointConfiguration> gale;
  if (!args.gale_out.empty()) {
    gale = gale_transform(g);
    const std::string payload = config_to_json(*gale);
    if (args.gale_out == "-") {
      if (args.as_json)
        rep["gale_config"] = json::parse(payload);  // keep stdout one document
      else
        std::cout << payload << "\n";
    } else {
      std::ofstream out(args.gale_out);
      if (!out) fail(Errc::ParseError, "cannot write " + args.gale_out);
      out << payload << "\n";
    }
    rep["gale"] = json{{"n", gale->n()},
                       {"r", gale->r()},
                       {"written_to", args.gale_out == "-" ? "stdout" : args.gale_out}};
  }

  if (!args.t1_window.empty()) {
    if (args.t1_window.size() != 2) fail(Errc::BadParameters, "--t1 needs LMIN LMAX");
    // With --gale the T1 report describes the cone over the transform.
    const PointConfiguration& target = gale ? *gale : g;
    rep["t1_target"] = gale ? "gale" : "input";
    GradedConeModel model = GradedConeModel::build(target);
    T1Report t1 = t1_report(model, static_cast<int>(args.t1_window[0]),
                            static_cast<int>(args.t1_window[1]));
    json dims = json::object();
    for (const auto& [ell, dim] : t1.t1) dims[std::to_string(ell)] = dim;
    json checks = {{"tplusnul", t1.tplusnul_ok}};
    checks["negatively_graded"] =
        t1.negatively_graded.has_value() ? json(*t1.negatively_graded) : json("n/a");
    rep["t1_report"] = json{{"window", json::array({t1.lmin, t1.lmax})},
                            {"t1", dims},
                            {"total", t1.total},
                            {"delta", t1.delta},
                            {"type", t1.type},
                            {"e", t1.deligne_e},
                            {"moduli", t1.moduli},
                            {"checks", checks}};
  }

  if (args.as_json) {
    std::cout << rep.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "point set: r = " << g.r() << " in P^" << (g.n() - 1);
  if (!g.label().empty()) std::cout << "  (" << g.label() << ")";
  std::cout << "\n  general position: " << (rep["general_position"].get<bool>() ? "yes" : "no");
  if (rep.contains("uniform_position"))
    std::cout << "  uniform: "
              << (rep["uniform_position"]["uniform"].get<bool>() ? "yes" : "no");
  std::cout << "\n  delta " << rep["delta"].get<long long>() << "  quadric deficiency "
            << rep["quadric_deficiency"].get<long long>() << "\n";
  if (rep.contains("self_associated"))
    std::cout << "  self-associated: " << (rep["self_associated"].get<bool>() ? "yes" : "no")
              << "\n";
  if (rep.contains("quadric_test"))
    std::cout << "  quadric test: " << rep["quadric_test"]["outcome"].get<std::string>() << "\n";
  if (rep.contains("classify_generic"))
    std::cout << "  generic verdict: " << rep["classify_generic"]["outcome"].get<std::string>()
              << "\n";
  if (rep.contains("t1_report")) {
    const auto& t1 = rep["t1_report"];
    std::cout << "  T1 over [" << t1["window"][0].get<int>() << ", "
              << t1["window"][1].get<int>() << "]: total " << t1["total"].get<long long>()
              << ", e " << t1["e"].get<long long>() << "\n   ";
    for (auto it = t1["t1"].begin(); it != t1["t1"].end(); ++it)
      if (it.value().get<long long>() != 0)
        std::cout << " T1(" << it.key() << ") = " << it.value().get<long long>();
    std::cout << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// table subcommand

struct TableArgs {
  std::string range;  // "6..10" or "6"
  std::string format = "table";
  std::string columns;
};

std::vector<std::pair<long long, long long>> runs_of(const std::vector<long long>& xs) {
  std::vector<std::pair<long long, long long>> runs;
  for (long long x : xs) {
    if (!runs.empty() && runs.back().second + 1 == x)
      runs.back().second = x;
    else
      runs.push_back({x, x});
  }
  return runs;
}

std::string render_set(const std::vector<std::pair<long long, long long>>& runs) {
  std::string singles, intervals;
  for (const auto& [a, b] : runs) {
    if (a == b) {
      singles += (singles.empty() ? "" : ",") + std::to_string(a);
    } else {
      if (!intervals.empty()) intervals += " u ";
      intervals += "[" + std::to_string(a) + "," + std::to_string(b) + "]";
    }
  }
  std::string out;
  if (!singles.empty()) out = "{" + singles + "}";
  if (!intervals.empty()) out += (out.empty() ? "" : " u ") + intervals;
  return out.empty() ? "{}" : out;
}

int run_table(const TableArgs& args) {
  long long n_lo = 0, n_hi = 0;
  const auto dots = args.range.find("..");
  try {
    if (dots == std::string::npos) {
      n_lo = n_hi = std::stoll(args.range);
    } else {
      n_lo = std::stoll(args.range.substr(0, dots));
      n_hi = std::stoll(args.range.substr(dots + 2));
    }
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad range '" + args.range + "'");
  }
  if (n_lo < 4 || n_hi < n_lo) fail(Errc::BadRange, "need 4 <= n_lo <= n_hi");

  std::vector<std::string> columns;
  if (!args.columns.empty()) {
    std::stringstream ss(args.columns);
    std::string tok;
    while (std::getline(ss, tok, ',')) columns.push_back(tok);
  }

  json rows = json::array();
  for (long long n = n_lo; n <= n_hi; ++n) {
    long long top = 3000;
    std::string m_exact = "n/a";
    if (n >= 6) {
      Rat m = m_bound(n);
      m_exact = rat_to_string(m);
      top = std::min<long long>(top, mpz_class(m.get_num() / m.get_den()).get_si() + 8);
    }
    std::vector<long long> rs;
    for (long long r = n + 1; r <= top; ++r) rs.push_back(r);

    // fan the r-cells out to a worker pool; merge in index order
    std::vector<Verdict> cells(rs.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < static_cast<long long>(rs.size()); ++i)
      cells[static_cast<std::size_t>(i)] = classify_generic(n, rs[static_cast<std::size_t>(i)]);

    std::vector<long long> nonsmoothable;
    std::string provenance;
    for (std::size_t i = 0; i < rs.size(); ++i)
      if (cells[i].outcome == Outcome::NonSmoothableGeneric) {
        nonsmoothable.push_back(rs[i]);
        provenance = cells[i].provenance;
      }
    json row;
    row["n"] = n;
    row["M"] = m_exact;
    row["non_smoothable_runs"] = runs_of(nonsmoothable);
    row["set"] = render_set(runs_of(nonsmoothable));
    row["provenance"] = provenance;
    if (!columns.empty()) {
      json detail = json::array();
      for (std::size_t i = 0; i < rs.size(); ++i) {
        if (cells[i].outcome == Outcome::Unknown) continue;
        json cell{{"r", rs[i]}, {"verdict", outcome_name(cells[i].outcome)}};
        auto inv = generic_invariants(n, rs[i]);
        for (const std::string& c : columns) {
          if (c == "e") cell["e"] = inv.deligne_e;
          else if (c == "moduli") cell["moduli"] = inv.moduli;
          else if (c == "delta") cell["delta"] = inv.delta;
          else if (c == "type") cell["type"] = inv.type;
          else fail(Errc::BadParameters, "unknown column '" + c + "'");
        }
        detail.push_back(std::move(cell));
      }
      row["cells"] = std::move(detail);
    }
    rows.push_back(std::move(row));
  }

  if (args.format == "json") {
    std::cout << json{{"table", rows}}.dump(2) << "\n";
  } else if (args.format == "csv") {
    std::cout << "n,M,non_smoothable\n";
    for (const auto& row : rows)
      std::cout << row["n"].get<long long>() << "," << row["M"].get<std::string>() << ",\""
                << row["set"].get<std::string>() << "\"\n";
  } else if (args.format == "table") {
    std::printf("%4s  %12s  %s\n", "n", "M(n)", "non-smoothable r");
    for (const auto& row : rows)
      std::printf("%4lld  %12s  %s\n", row["n"].get<long long>(),
                  row["M"].get<std::string>().c_str(), row["set"].get<std::string>().c_str());
    if (!columns.empty())
      for (const auto& row : rows)
        for (const auto& cell : row["cells"]) {
          std::printf("  n=%lld r=%lld %s", row["n"].get<long long>(),
                      cell["r"].get<long long>(), cell["verdict"].get<std::string>().c_str());
          for (const std::string& c : columns)
            std::printf("  %s=%lld", c.c_str(), cell[c].get<long long>());
          std::printf("\n");
        }
  } else {
    fail(Errc::BadParameters, "unknown format '" + args.format + "'");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"smoothability analysis for monomial curves and cones over point sets"};
  app.require_subcommand(1);

  SemigroupArgs sg;
  auto* sg_cmd = app.add_subcommand("semigroup", "analyze a numerical semigroup");
  sg_cmd->add_option("generators", sg.generators, "comma-separated generators")->required();
  sg_cmd->add_option("--kmax", sg.kmax, "largest Dedekind index to test");
  sg_cmd->add_flag("--t1", sg.with_t1, "graded T1 profile of the monomial curve");
  sg_cmd->add_flag("--presentation", sg.with_presentation, "minimal binomial presentation");
  sg_cmd->add_flag("--json", sg.as_json, "machine-readable report");

  PointsetArgs ps;
  auto* ps_cmd = app.add_subcommand("pointset", "analyze a cone over a point configuration");
  ps_cmd->add_option("--file", ps.file, "JSON configuration file");
  ps_cmd->add_option("--csv", ps.csv, "CSV configuration file (one point per line)");
  ps_cmd->add_option("--builder", ps.builder, "named configuration (tetrahedron-midpoints)");
  ps_cmd->add_option("--random", ps.random_nr, "random integer configuration: N R")
      ->expected(2);
  ps_cmd->add_option("--self-associated", ps.self_associated_n,
                     "random self-associated 2n points in P^{n-1}");
  auto* seed_opt = ps_cmd->add_option("--seed", ps.seed, "RNG seed (required for random modes)");
  ps_cmd->add_option("--box", ps.box, "coordinate box for --random");
  ps_cmd->add_option("--gale", ps.gale_out, "write the Gale transform (file or '-')");
  ps_cmd->add_option("--t1", ps.t1_window, "graded T1 report over [LMIN, LMAX]")->expected(2);
  ps_cmd->add_option("--uniform", ps.uniform_mode, "uniform-position check: exhaustive|sampled");
  ps_cmd->add_option("--trials", ps.uniform_trials, "subsets for the sampled uniform check");
  ps_cmd->add_flag("--json", ps.as_json, "machine-readable report");

  TableArgs tb;
  auto* tb_cmd = app.add_subcommand("table", "classification table over a range of n");
  tb_cmd->add_option("--n", tb.range, "ambient range, e.g. 6..10")->required();
  tb_cmd->add_option("--format", tb.format, "table|json|csv");
  tb_cmd->add_option("--columns", tb.columns, "per-r columns: e,moduli,delta,type");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sg_cmd->parsed()) return run_semigroup(sg);
    if (ps_cmd->parsed()) {
      ps.seed_set = seed_opt->count() > 0;
      return run_pointset(ps);
    }
    return run_table(tb);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::GcdNotOne:
      case Errc::EmptyInput:
      case Errc::NotMember:
      case Errc::MultiplicityTooSmall:
      case Errc::GenusTooSmall:
      case Errc::BelowConductor:
        return kExitSemigroupInput;
      case Errc::DegenerateConfig:
      case Errc::DuplicatePoint:
      case Errc::RankDeficient:
      case Errc::ZeroGaleColumn:
      case Errc::RetryExhausted:
      case Errc::HypothesisViolated:
        return kExitConfigInput;
      case Errc::Internal:
        return kExitInternal;
      case Errc::ParseError:
        // malformed configuration data counts as bad input, not bad usage
        return ps_cmd->parsed() ? kExitConfigInput : kExitUsage;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
