#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lgf/integrate.hpp"
#include "lgf/model.hpp"

namespace lgf {

inline constexpr int kSchemaVersion = 1;

// "%.17g"; NaN and infinities become the empty string (CSV) so that a
// missing value is distinguishable from a number.
std::string format_double(double v);

// Inverse of format_double; the empty string parses to NaN.
double parse_double(std::string_view s);

nlohmann::json params_json(const Params& p);

// Full single-point report: regime, equilibria with their linearization,
// thresholds, origin blow-up (with the simulation probe), Hopf data at E4
// and E5, fold data when Delta = 0, and the errata list.
nlohmann::json analysis_json(const Params& p);

// Errata list plus the origin probe verdict.
nlohmann::json errata_json(const Params& p);

// ---------------------------------------------------------------------------

enum class SweepAxis { Lam, S, A, M };

std::string_view to_string(SweepAxis a);
// Accepts "lam", "s", "a", "m"; throws DomainError otherwise.
SweepAxis parse_axis(std::string_view name);

struct SweepSpec {
  SweepAxis axis = SweepAxis::Lam;
  double from = 0.0;
  double to = 0.0;
  int steps = 2;
  // Values of the parameters that are not swept; the swept field is ignored.
  double m = 0.0, a = 0.0, lam = 0.0, s = 0.0;
  int jobs = 1;
  // Measure limit-cycle amplitudes around unstable interior foci.
  bool cycles = false;
  CycleSearchConfig cycle_cfg{};

  // Throws DomainError unless 0 < from < to, steps >= 2, jobs >= 1.
  void validate() const;
  double value(int i) const;
};

struct SweepRow {
  double param = 0.0;
  // Empty when the grid point itself is invalid (e.g. m >= 1).
  std::string kind;
  double x = 0.0, y = 0.0;
  // Empty when the point could not be classified.
  std::string label;
  double trace = 0.0, det = 0.0;
  // NaN unless measured.
  double amplitude = 0.0;
};

inline constexpr std::string_view kSweepHeader = "param,kind,x,y,label,trace,det,amplitude";

// Rows in grid order, then by equilibrium kind. Grid points are evaluated
// on up to spec.jobs threads.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

// Throws DomainError on a malformed header or row.
std::vector<SweepRow> read_sweep_csv(std::istream& is);

// gnuplot commands plotting x against the swept parameter, one series per
// equilibrium kind, filled points for stable labels.
void write_plot_script(std::ostream& os, const SweepSpec& spec, const std::string& csv_path);

}  // namespace lgf
