#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "lgf/model.hpp"

namespace lgf {

struct IntegratorConfig {
  double rtol = 1e-9;
  double atol = 1e-12;
  double h0 = 1e-3;
  double h_min = 1e-14;
  long max_steps = 2'000'000;
  // Prey level treated as extinction; reaching it ends the run.
  double x_floor = 1e-12;
  // Stop with Converged once |rhs|_inf drops below this value (0 disables).
  double rest_tol = 0.0;

  // Throws DomainError on inconsistent settings.
  void validate() const;
};

enum class TerminalStatus { TimeExhausted, StepBudget, DomainExit, Converged };

std::string_view to_string(TerminalStatus s);

struct Sample {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
};

struct Trajectory {
  std::vector<Sample> samples;
  TerminalStatus terminal_status = TerminalStatus::TimeExhausted;
  long steps = 0;
  long rejected = 0;
};

/// Adaptive Dormand-Prince 5(4) stepper with PI step-size control and the
/// free 4th-order continuous extension. Steps that would leave the
/// quadrant (x <= 0 or y < 0) are rejected and retried with a smaller h.
class DormandPrince {
 public:
  DormandPrince(const Params& p, State init, const IntegratorConfig& cfg, double t0 = 0.0);

  // Advances by one accepted step, never past t_limit. Returns false when
  // the step-size underflows h_min.
  bool step(double t_limit);

  double t() const { return t_; }
  State state() const { return y_; }
  double last_h() const { return h_prev_; }
  long rejected() const { return rejected_; }

  // Dense output on the last accepted step [t_prev, t].
  double t_prev() const { return t_prev_; }
  State interpolate(double t) const;

 private:
  void eval(State s, double out[2]) const;

  Params p_;
  IntegratorConfig cfg_;
  double t_ = 0.0, t_prev_ = 0.0;
  double h_ = 0.0, h_prev_ = 0.0;
  State y_{}, y_prev_{};
  double k1_[2]{}, k7_[2]{};
  double dense_[5][2]{};
  double err_prev_ = 1e-4;
  long rejected_ = 0;
};

// Every accepted step is recorded. Throws DomainError when init.x <= x_floor
// or t_end <= 0, NumericalFailure on step-size underflow.
Trajectory integrate(const Params& p, State init, double t_end, const IntegratorConfig& cfg);

// Classic fixed-step integration with the same 5th-order weights, used for
// convergence-order measurements.
State integrate_fixed(const Params& p, State init, double t_end, int n_steps);

void write_trajectory_csv(std::ostream& os, const Trajectory& tr);

// ---------------------------------------------------------------------------
// Limit cycles on the section {y = x, x increasing}.

struct Cycle {
  double period = 0.0;
  // max |x - mean(x)| over one period.
  double amplitude = 0.0;
  double mean_x = 0.0;
  State section_point{};
  int returns = 0;
};

enum class CycleStatus { CycleFound, ConvergedToEquilibrium, DomainExit, Inconclusive };

std::string_view to_string(CycleStatus s);

struct CycleSearchConfig {
  IntegratorConfig integrator{};
  // Transient before section sampling; <= 0 selects 50/s.
  double transient = 0.0;
  double position_rtol = 1e-6;
  double period_rtol = 1e-5;
  double rest_distance = 1e-8;
  // Total integration time allowed after the transient.
  double max_time = 2e5;
  int amplitude_samples = 4000;
};

struct CycleSearch {
  CycleStatus status = CycleStatus::Inconclusive;
  std::optional<Cycle> cycle;
  State final_state{};
  double final_time = 0.0;
};

CycleSearch search_limit_cycle(const Params& p, State init, const CycleSearchConfig& cfg = {});

// Cycle, or nullopt for convergence to an equilibrium or domain exit.
// Throws NumericalFailure when the search is inconclusive.
std::optional<Cycle> detect_limit_cycle(const Params& p, State init,
                                        const CycleSearchConfig& cfg = {});

// ---------------------------------------------------------------------------
// Behavior of orbits started near the origin.

enum class ProbeVerdict { Escapes, ConvergesToOrigin, Mixed };

std::string_view to_string(ProbeVerdict v);

struct ProbeConfig {
  IntegratorConfig integrator{};
  // Interior fan angles in (0, pi/2), plus the on-axis start (delta, 0).
  int fan = 12;
  double t_max = 1e5;
};

struct ProbeResult {
  ProbeVerdict verdict = ProbeVerdict::Mixed;
  int converged = 0;
  int escaped = 0;
  int total = 0;
};

// Requires 0 < delta <= 1e-2. Throws NumericalFailure on budget exhaustion.
ProbeResult origin_attraction_probe(const Params& p, double delta, const ProbeConfig& cfg = {});

}  // namespace lgf
