#include "monolab/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "monolab/records.hpp"

namespace monolab {

namespace {

using nlohmann::json;

VerifyCheck check(std::string name, double deviation, double tolerance) {
  return {std::move(name), deviation, tolerance, deviation <= tolerance};
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  return f;
}

void finish_output(std::ofstream& f, const std::string& path) {
  f.close();
  if (!f) throw std::runtime_error("failed writing " + path);
}

struct StateArgs {
  bool ghz = false;
  bool w = false;
  std::vector<double> g;
  double z_re = 1.0;
  double z_im = 0.0;
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

ParamRecord state_params(const StateArgs& a) {
  if (a.ghz == a.w) throw std::invalid_argument("choose exactly one of --ghz or --w");
  if (a.w) return WParams{a.t, a.x, a.y, a.z};
  if (a.g.size() != 3) throw std::invalid_argument("--g takes three comma-separated values");
  return GhzParams{{a.g[0], a.g[1], a.g[2]}, Complex{a.z_re, a.z_im}};
}

struct SampleArgs {
  std::string family;
  std::size_t n = 0;
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "csv";
};

void cmd_sample(const SampleArgs& a, std::ostream& out) {
  const auto family = parse_family(a.family);
  if (!family) throw std::invalid_argument("unknown family: " + a.family);
  const auto batch = batch_evaluate({*family, a.n, a.seed});
  auto f = open_output(a.out);
  if (a.format == "json") {
    json rows = json::array();
    for (const auto& r : batch.records) rows.push_back(to_json(r));
    f << rows.dump(1) << '\n';
  } else {
    write_csv(f, batch.records);
  }
  finish_output(f, a.out);
  json report = to_json(batch.summary);
  report["family"] = std::string(cli_name(*family));
  report["seed"] = a.seed;
  report["out"] = a.out;
  report["format"] = a.format;
  out << report.dump(2) << '\n';
}

struct ScanArgs {
  std::string case_id;
  std::size_t grid = 201;
  double r_slice = 0.5;
  std::string out;
  std::string format = "csv";
};

void cmd_scan(const ScanArgs& a, std::ostream& out) {
  const ScanOptions opt{a.grid, a.r_slice};
  const auto scan = scan_region(a.case_id, opt);
  auto f = open_output(a.out);
  if (a.format == "json") {
    json cells = json::array();
    for (const auto& c : scan.cells) {
      json j = to_json(c.record);
      j["coords"] = c.coords;
      cells.push_back(std::move(j));
    }
    f << cells.dump(1) << '\n';
  } else {
    write_csv(f, scan);
  }
  finish_output(f, a.out);

  std::vector<MeasureRecord> records;
  records.reserve(scan.cells.size());
  for (const auto& c : scan.cells) records.push_back(c.record);
  json report = to_json(summarize(records));
  json axes = json::array();
  for (const auto& ax : scan.axes) axes.push_back({{"name", ax.name}, {"lo", ax.lo}, {"hi", ax.hi}, {"points", ax.points}});
  report["case"] = a.case_id;
  report["axes"] = axes;
  report["r_slice"] = a.r_slice;
  report["out"] = a.out;
  report["format"] = a.format;
  out << report.dump(2) << '\n';
}

struct BoundaryArgs {
  std::string case_id;
  std::vector<double> fixed;
  std::string score = "m1";
  std::size_t grid = 201;
  double r_slice = 0.5;
};

void cmd_boundary(const BoundaryArgs& a, std::ostream& out) {
  const Score which = a.score == "m2" ? Score::M2 : Score::M1;
  const double root = find_boundary(a.case_id, a.fixed, which, {a.grid, a.r_slice});
  json report{{"case", a.case_id}, {"score", a.score}, {"fixed", a.fixed}, {"grid", a.grid}, {"root", root}};
  out << report.dump(2) << '\n';
}

int cmd_verify(std::uint64_t seed, std::ostream& out) {
  const auto checks = run_verify_checks(seed);
  bool all = true;
  json list = json::array();
  for (const auto& c : checks) {
    all = all && c.pass;
    list.push_back(
        {{"name", c.name}, {"deviation", c.deviation}, {"tolerance", c.tolerance}, {"status", c.pass ? "pass" : "fail"}});
  }
  out << json{{"seed", seed}, {"checks", list}, {"status", all ? "pass" : "fail"}}.dump(2) << '\n';
  return all ? 0 : 1;
}

}  // namespace

std::vector<VerifyCheck> run_verify_checks(std::uint64_t seed) {
  std::vector<VerifyCheck> checks;

  double oracle_gap = 0.0;
  for (FamilyTag f : kAllFamilies)
    for (const auto& p : sample_family({f, 1000, seed}))
      oracle_gap = std::max(oracle_gap, ConcurrenceTriple::max_deviation(closed_form_concurrences(p),
                                                                         reduced_pair_concurrences(build_state(p))));
  checks.push_back(check("concurrence closed form vs oracle", oracle_gap, 1e-9));

  const auto hand = reduced_pair_concurrences(build_ghz({{0.25, 0.0, 0.0}, 1.0}));
  checks.push_back(check("concurrence C23 at g=(0.25,0,0), z=1", std::abs(hand.c23 - 0.5), 1e-12));

  const auto w = evaluate(WParams{0.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  checks.push_back(check("W state E_ij", std::max({std::abs(w.e12 - 0.550048), std::abs(w.e13 - 0.550048),
                                                   std::abs(w.e23 - 0.550048)}),
                         1e-5));
  checks.push_back(check("W state M1, M2", std::max(std::abs(w.m1 - 0.0923424), std::abs(w.m2 - 0.0923424)), 1e-5));

  struct Point {
    const char* name;
    GhzParams p;
    double want;
    bool source;
  };
  const Point points[] = {
      {"source volume (0,0,0,r=0.25)", {{0, 0, 0}, 0.25}, 0.75, true},
      {"source volume (0.25,0,0,r=0.5)", {{0.25, 0, 0}, 0.5}, 0.125, true},
      {"source volume (0.1,0.2,0,r=0.5)", {{0.1, 0.2, 0}, 0.5}, 0.01, true},
      {"accessible volume (0,0,0,r=0.5)", {{0, 0, 0}, 0.5}, 0.375, false},
      {"accessible volume (0.25,0,0,r=0.5)", {{0.25, 0, 0}, 0.5}, 0.125, false},
      {"accessible volume (0.1,0.2,0,r=1)", {{0.1, 0.2, 0}, 1.0}, 0.12, false},
  };
  for (const auto& pt : points) {
    const auto est = pt.source ? estimate_source_volume(pt.p, 200000, seed) : estimate_accessible_volume(pt.p, 200000, seed);
    checks.push_back(check(pt.name, std::abs(est.mean - pt.want), 4.0 * est.std_error));
  }

  double grad = 0.0;
  constexpr double h = 1e-5;
  for (int i = 1; i <= 9; ++i) {
    const double f = 0.1 * i;
    const double fd = (source_bracket(f + h) - source_bracket(f - h)) / (2.0 * h);
    const double want = -0.5 * std::log(f) * std::log(f);
    grad = std::max(grad, std::abs(fd - want) / std::abs(want));
  }
  checks.push_back(check("source bracket gradient (relative)", grad, 1e-6));
  checks.push_back(check("source bracket at f=1", std::abs(source_bracket(1.0)), 1e-12));

  double ckw = 0.0;
  for (FamilyTag f : kAllFamilies)
    for (const auto& p : sample_family({f, 500, seed})) {
      const auto s = build_state(p);
      for (int a = 1; a <= 3; ++a) {
        const int b = a == 1 ? 2 : 1;
        const int c = 6 - a - b;
        const double whole = concurrence_pure_bipartition(s, a);
        const double cab = wootters_concurrence(partial_trace(s, a, b));
        const double cac = wootters_concurrence(partial_trace(s, a, c));
        ckw = std::max(ckw, cab * cab + cac * cac - whole * whole);
      }
    }
  checks.push_back(check("CKW inequality", std::max(ckw, 0.0), 1e-10));
  return checks;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-qubit monogamy lab"};
  app.require_subcommand(1);

  StateArgs st;
  auto* state = app.add_subcommand("state", "Evaluate one state and print its measures as JSON");
  state->add_flag("--ghz", st.ghz, "GHZ-class parameters");
  state->add_flag("--w", st.w, "W-class parameters");
  state->add_option("--g", st.g, "g1,g2,g3")->delimiter(',')->expected(3);
  state->add_option("--z-re", st.z_re, "Re z")->capture_default_str();
  state->add_option("--z-im", st.z_im, "Im z")->capture_default_str();
  state->add_option("--t", st.t, "W weight t");
  state->add_option("--x", st.x, "W weight x");
  state->add_option("--y", st.y, "W weight y");
  state->add_option("--z", st.z, "W weight z");

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "Evaluate seeded random states of one family");
  sample->add_option("--family", sa.family, "Family name, e.g. ghz-generic or w")->required();
  sample->add_option("--n", sa.n, "Number of samples")->required()->check(CLI::PositiveNumber);
  sample->add_option("--seed", sa.seed, "Seed")->capture_default_str();
  sample->add_option("--out", sa.out, "Output path")->required();
  sample->add_option("--format", sa.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  ScanArgs sc;
  auto* scan = app.add_subcommand("scan", "Evaluate a preset parameter grid");
  scan->add_option("--case", sc.case_id, "Preset name")->required()->check(CLI::IsMember(scan_cases()));
  scan->add_option("--grid", sc.grid, "Points per axis")->check(CLI::Range(std::size_t{2}, std::size_t{100000}))->capture_default_str();
  scan->add_option("--r-slice", sc.r_slice, "Radius for the case3 preset")->capture_default_str();
  scan->add_option("--out", sc.out, "Output path")->required();
  scan->add_option("--format", sc.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  BoundaryArgs bd;
  auto* boundary = app.add_subcommand("boundary", "Locate the sign change of a score along a preset's first axis");
  boundary->add_option("--case", bd.case_id, "Preset name")->required()->check(CLI::IsMember(scan_cases()));
  boundary->add_option("--fixed", bd.fixed, "Values of the remaining axes")->delimiter(',');
  boundary->add_option("--score", bd.score, "m1 or m2")->check(CLI::IsMember({"m1", "m2"}))->capture_default_str();
  boundary->add_option("--grid", bd.grid, "Bracketing grid points")->check(CLI::Range(std::size_t{2}, std::size_t{100000}))->capture_default_str();
  boundary->add_option("--r-slice", bd.r_slice, "Radius for the case3 preset")->capture_default_str();

  std::uint64_t verify_seed = 42;
  auto* verify = app.add_subcommand("verify", "Run the self-check suite");
  verify->add_option("--seed", verify_seed, "Seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return e.get_exit_code() == 0 ? 2 : e.get_exit_code();
  }

  try {
    if (*state) {
      out << to_json(evaluate(state_params(st))).dump(2) << '\n';
    } else if (*sample) {
      cmd_sample(sa, out);
    } else if (*scan) {
      cmd_scan(sc, out);
    } else if (*boundary) {
      cmd_boundary(bd, out);
    } else if (*verify) {
      return cmd_verify(verify_seed, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace monolab
