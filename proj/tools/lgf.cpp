// Command-line front end: analyze, sweep, simulate, errata.
//
// Exit codes: 0 ok, 2 usage/parse error, 3 domain error, 4 numerical failure.

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgf/equilibria.hpp"
#include "lgf/integrate.hpp"
#include "lgf/kernels.hpp"
#include "lgf/report.hpp"
#include "lgf/stability.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNumerical = 4;

// Invalid flag values discovered after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double m = NAN, a = NAN, lam = NAN, s = NAN;
  double x0 = NAN, y0 = NAN, t_end = NAN;
  double rtol = 1e-9, atol = 1e-12;
  std::string axis;
  double from = NAN, to = NAN;
  int steps = 0;
  int jobs = 1;
  std::string out;
  bool at_fold = false, at_hopf = false, cycles = false;
};

void add_params(CLI::App* sub, Options& o, bool with_s = true) {
  sub->add_option("--m", o.m, "Allee threshold, 0 < m < 1")->required();
  sub->add_option("--a", o.a, "predation pressure")->required();
  sub->add_option("--lam", o.lam, "fear intensity")->required();
  if (with_s) sub->add_option("--s", o.s, "predator growth rate")->required();
}

// Strictly positive finite values; the strong Allee regime when required.
lgf::Params checked_params(const Options& o, bool strong_allee) {
  for (double v : {o.m, o.a, o.lam, o.s}) {
    if (!(std::isfinite(v) && v > 0.0)) throw UsageError("parameters must be finite and > 0");
  }
  if (strong_allee && !(o.m < 1.0)) throw UsageError("--m must satisfy 0 < m < 1");
  return lgf::Params::make(o.m, o.a, o.lam, o.s);
}

std::string command_line(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

// Run metadata lives beside the data file so the data stays reproducible.
void write_sidecar(const std::string& out, const std::string& cmd, const nlohmann::json& extra) {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
  nlohmann::json meta = {{"schema_version", lgf::kSchemaVersion},
                         {"tool", "lgf"},
                         {"command", cmd},
                         {"created_utc", stamp},
                         {"kernel_backend", std::string(lgf::kernels::to_string(lgf::kernels::active_backend()))},
                         {"data_file", out}};
  meta.update(extra);
  std::ofstream f(out + ".meta.json");
  f << meta.dump(2) << '\n';
}

// Writes to --out when given, otherwise stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int cmd_analyze(const Options& o, const std::string& cmd) {
  lgf::Params p = checked_params(o, true);
  if (o.at_fold) p = p.with_lam(lgf::critical_fear(p.m, p.a));
  if (o.at_hopf) p = p.with_s(lgf::s_star(p));
  const nlohmann::json j = lgf::analysis_json(p);
  Sink sink(o.out);
  sink.stream() << j.dump(2) << '\n';
  if (!o.out.empty()) write_sidecar(o.out, cmd, {});
  return kExitOk;
}

int cmd_errata(const Options& o, const std::string& cmd) {
  const lgf::Params p = checked_params(o, true);
  const nlohmann::json j = lgf::errata_json(p);
  Sink sink(o.out);
  sink.stream() << j.dump(2) << '\n';
  if (!o.out.empty()) write_sidecar(o.out, cmd, {});
  return kExitOk;
}

int cmd_sweep(const Options& o, const std::string& cmd) {
  lgf::SweepSpec spec;
  try {
    spec.axis = lgf::parse_axis(o.axis);
  } catch (const lgf::DomainError& e) {
    throw UsageError(e.what());
  }
  spec.from = o.from;
  spec.to = o.to;
  spec.steps = o.steps;
  spec.jobs = o.jobs;
  spec.cycles = o.cycles;
  spec.m = o.m;
  spec.a = o.a;
  spec.lam = o.lam;
  spec.s = o.s;
  try {
    spec.validate();
  } catch (const lgf::DomainError& e) {
    throw UsageError(e.what());
  }
  // Fixed parameters must be present and positive; the swept one is not read.
  const struct {
    lgf::SweepAxis axis;
    double v;
    const char* name;
  } fixed[] = {{lgf::SweepAxis::M, o.m, "--m"},
               {lgf::SweepAxis::A, o.a, "--a"},
               {lgf::SweepAxis::Lam, o.lam, "--lam"},
               {lgf::SweepAxis::S, o.s, "--s"}};
  for (const auto& f : fixed) {
    if (f.axis != spec.axis && !(std::isfinite(f.v) && f.v > 0.0)) {
      throw UsageError(std::string(f.name) + " is required and must be > 0");
    }
  }

  const auto rows = lgf::run_sweep(spec);
  Sink sink(o.out);
  lgf::write_sweep_csv(sink.stream(), rows);
  if (!o.out.empty()) {
    std::ofstream gp(o.out + ".gp");
    lgf::write_plot_script(gp, spec, o.out);
    write_sidecar(o.out, cmd, {{"plot_script", o.out + ".gp"}, {"jobs", spec.jobs}});
  }
  return kExitOk;
}

int cmd_simulate(const Options& o, const std::string& cmd) {
  const lgf::Params p = checked_params(o, false);
  if (!(std::isfinite(o.t_end) && o.t_end > 0.0)) throw UsageError("--t-end must be > 0");
  if (!(std::isfinite(o.x0) && std::isfinite(o.y0))) throw UsageError("--x0 and --y0 must be finite");
  if (!(o.rtol > 0.0 && o.atol > 0.0)) throw UsageError("--rtol and --atol must be > 0");
  if (!(o.x0 > 0.0) || o.y0 < 0.0) throw lgf::DomainError("initial state needs x0 > 0 and y0 >= 0");

  lgf::IntegratorConfig cfg;
  cfg.rtol = o.rtol;
  cfg.atol = o.atol;
  const lgf::Trajectory tr = lgf::integrate(p, {o.x0, o.y0}, o.t_end, cfg);
  Sink sink(o.out);
  lgf::write_trajectory_csv(sink.stream(), tr);
  std::cerr << "status=" << lgf::to_string(tr.terminal_status) << " steps=" << tr.steps
            << " rejected=" << tr.rejected << " samples=" << tr.samples.size() << '\n';
  if (!o.out.empty()) {
    write_sidecar(o.out, cmd, {{"terminal_status", std::string(lgf::to_string(tr.terminal_status))},
                               {"steps", tr.steps},
                               {"rejected", tr.rejected}});
  }
  return tr.terminal_status == lgf::TerminalStatus::StepBudget ? kExitNumerical : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leslie-Gower predator-prey model with Allee and fear effects"};
  app.require_subcommand(1);
  Options o;

  auto* analyze = app.add_subcommand("analyze", "equilibria, stability and bifurcation report (JSON)");
  add_params(analyze, o);
  analyze->add_flag("--at-fold", o.at_fold, "replace lam by the fold value lam_SN(m, a)");
  analyze->add_flag("--at-hopf", o.at_hopf, "replace s by the E4 trace-zero rate s*");
  analyze->add_option("--out", o.out, "output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "one-parameter sweep (CSV)");
  sweep->add_option("--axis", o.axis, "swept parameter: lam, s, a or m")->required();
  sweep->add_option("--from", o.from, "start of the range")->required();
  sweep->add_option("--to", o.to, "end of the range")->required();
  sweep->add_option("--steps", o.steps, "number of grid points (>= 2)")->required();
  sweep->add_option("--m", o.m, "Allee threshold");
  sweep->add_option("--a", o.a, "predation pressure");
  sweep->add_option("--lam", o.lam, "fear intensity");
  sweep->add_option("--s", o.s, "predator growth rate");
  sweep->add_option("--jobs", o.jobs, "worker threads");
  sweep->add_flag("--cycles", o.cycles, "measure limit-cycle amplitude around unstable foci");
  sweep->add_option("--out", o.out, "CSV file (default stdout); also writes <out>.gp");

  auto* simulate = app.add_subcommand("simulate", "integrate one trajectory (CSV t,x,y)");
  add_params(simulate, o);
  simulate->add_option("--x0", o.x0, "initial prey")->required();
  simulate->add_option("--y0", o.y0, "initial predator")->required();
  simulate->add_option("--t-end", o.t_end, "final time")->required();
  simulate->add_option("--rtol", o.rtol, "relative tolerance");
  simulate->add_option("--atol", o.atol, "absolute tolerance");
  simulate->add_option("--out", o.out, "CSV file (default stdout)");

  auto* errata = app.add_subcommand("errata", "published formulas vs derived values (JSON)");
  add_params(errata, o);
  errata->add_option("--out", o.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const std::string cmd = command_line(argc, argv);
  try {
    if (analyze->parsed()) return cmd_analyze(o, cmd);
    if (sweep->parsed()) return cmd_sweep(o, cmd);
    if (simulate->parsed()) return cmd_simulate(o, cmd);
    if (errata->parsed()) return cmd_errata(o, cmd);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const lgf::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const lgf::NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}
