#include "lgf/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "lgf/equilibria.hpp"

namespace lgf {

namespace {

// Dormand-Prince 5(4) tableau.
// The field is autonomous, so the nodes c_i are not needed.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                 a75 = -2187.0 / 6784, a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Continuous extension coefficients.
constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                 d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                 d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;

// PI controller constants.
constexpr double kBeta = 0.04;
constexpr double kExpo = 0.2 - kBeta * 0.75;
constexpr double kSafe = 0.9;
constexpr double kMaxShrink = 5.0;
constexpr double kMaxGrow = 0.1;

void format_double(std::ostream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(rtol > 0.0) || !(atol > 0.0)) throw DomainError("rtol and atol must be positive");
  if (!(h_min > 0.0) || !(h0 > h_min)) throw DomainError("step sizes must satisfy 0 < h_min < h0");
  if (!(x_floor > 0.0)) throw DomainError("x_floor must be positive");
  if (max_steps <= 0) throw DomainError("max_steps must be positive");
  if (rest_tol < 0.0) throw DomainError("rest_tol must be non-negative");
}

std::string_view to_string(TerminalStatus s) {
  switch (s) {
    case TerminalStatus::TimeExhausted: return "TimeExhausted";
    case TerminalStatus::StepBudget: return "StepBudget";
    case TerminalStatus::DomainExit: return "DomainExit";
    case TerminalStatus::Converged: return "Converged";
  }
  return "?";
}

std::string_view to_string(CycleStatus s) {
  switch (s) {
    case CycleStatus::CycleFound: return "CycleFound";
    case CycleStatus::ConvergedToEquilibrium: return "ConvergedToEquilibrium";
    case CycleStatus::DomainExit: return "DomainExit";
    case CycleStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string_view to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::Escapes: return "Escapes";
    case ProbeVerdict::ConvergesToOrigin: return "ConvergesToOrigin";
    case ProbeVerdict::Mixed: return "Mixed";
  }
  return "?";
}

DormandPrince::DormandPrince(const Params& p, State init, const IntegratorConfig& cfg, double t0)
    : p_(p), cfg_(cfg), t_(t0), t_prev_(t0), h_(cfg.h0), y_(init), y_prev_(init) {
  cfg_.validate();
  if (!(init.x > 0.0) || init.y < 0.0) {
    throw DomainError("initial state must satisfy x > 0, y >= 0");
  }
  eval(y_, k1_);
}

// Raw field; callers reject stages with x <= 0 before use.
void DormandPrince::eval(State s, double out[2]) const {
  out[0] = s.x * (1.0 - s.x) * (s.x - p_.m) / (1.0 + p_.lam * s.y) - p_.a * s.x * s.y;
  out[1] = p_.s * s.y * (1.0 - s.y / s.x);
}

bool DormandPrince::step(double t_limit) {
  const double y0[2] = {y_.x, y_.y};
  double k2[2], k3[2], k4[2], k5[2], k6[2], k7[2], y1[2], st[2];

  while (true) {
    double h = std::min(h_, t_limit - t_);
    const bool clipped = h < h_;
    if (h < cfg_.h_min && !(clipped && h > 0.0)) return false;

    bool ok = true;
    auto stage = [&](double (&k)[2], double b1, double b2, double b3, double b4, double b5,
                     const double* q2, const double* q3, const double* q4, const double* q5) {
      for (int i = 0; i < 2; ++i) {
        st[i] = y0[i] + h * (b1 * k1_[i] + (q2 ? b2 * q2[i] : 0.0) + (q3 ? b3 * q3[i] : 0.0) +
                             (q4 ? b4 * q4[i] : 0.0) + (q5 ? b5 * q5[i] : 0.0));
      }
      if (!(st[0] > 0.0)) {
        ok = false;
        return;
      }
      eval({st[0], st[1]}, k);
    };
    stage(k2, a21, 0, 0, 0, 0, nullptr, nullptr, nullptr, nullptr);
    if (ok) stage(k3, a31, a32, 0, 0, 0, k2, nullptr, nullptr, nullptr);
    if (ok) stage(k4, a41, a42, a43, 0, 0, k2, k3, nullptr, nullptr);
    if (ok) stage(k5, a51, a52, a53, a54, 0, k2, k3, k4, nullptr);
    if (ok) {
      for (int i = 0; i < 2; ++i) {
        st[i] = y0[i] + h * (a61 * k1_[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
      }
      ok = st[0] > 0.0;
      if (ok) eval({st[0], st[1]}, k6);
    }
    if (ok) {
      for (int i = 0; i < 2; ++i) {
        y1[i] = y0[i] + h * (a71 * k1_[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
      }
      ok = y1[0] > 0.0 && !(y0[1] >= 0.0 && y1[1] < 0.0);
    }
    if (!ok) {
      // Left the quadrant: shrink and retry.
      ++rejected_;
      h_ = 0.5 * h;
      continue;
    }
    eval({y1[0], y1[1]}, k7);

    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double e = h * (e1 * k1_[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                            e7 * k7[i]);
      const double sk = cfg_.atol + cfg_.rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
      err += (e / sk) * (e / sk);
    }
    err = std::sqrt(err / 2.0);

    const double fac11 = std::pow(std::max(err, 1e-300), kExpo);
    if (err <= 1.0) {
      double fac = fac11 / std::pow(err_prev_, kBeta);
      fac = std::clamp(fac / kSafe, kMaxGrow, kMaxShrink);
      const double h_next = h / fac;
      err_prev_ = std::max(err, 1e-4);

      for (int i = 0; i < 2; ++i) {
        const double ydiff = y1[i] - y0[i];
        const double bspl = h * k1_[i] - ydiff;
        dense_[0][i] = y0[i];
        dense_[1][i] = ydiff;
        dense_[2][i] = bspl;
        dense_[3][i] = ydiff - h * k7[i] - bspl;
        dense_[4][i] = h * (d1 * k1_[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] +
                            d7 * k7[i]);
      }
      t_prev_ = t_;
      y_prev_ = y_;
      t_ = clipped ? t_limit : t_ + h;
      y_ = {y1[0], y1[1]};
      k1_[0] = k7[0];
      k1_[1] = k7[1];
      h_prev_ = h;
      h_ = h_next;
      return true;
    }
    ++rejected_;
    h_ = h / std::min(1.0 / 0.2, fac11 / kSafe);
  }
}

State DormandPrince::interpolate(double t) const {
  const double h = t_ - t_prev_;
  if (h <= 0.0) return y_;
  const double th = (t - t_prev_) / h, th1 = 1.0 - th;
  double out[2];
  for (int i = 0; i < 2; ++i) {
    out[i] = dense_[0][i] +
             th * (dense_[1][i] + th1 * (dense_[2][i] + th * (dense_[3][i] + th1 * dense_[4][i])));
  }
  return {out[0], out[1]};
}

Trajectory integrate(const Params& p, State init, double t_end, const IntegratorConfig& cfg) {
  cfg.validate();
  if (!(t_end > 0.0)) throw DomainError("t_end must be positive");
  if (!(init.x > cfg.x_floor)) throw DomainError("initial prey level must exceed x_floor");
  if (init.y < 0.0) throw DomainError("initial predator level must be non-negative");

  Trajectory tr;
  tr.samples.push_back({0.0, init.x, init.y});
  DormandPrince dp(p, init, cfg);
  while (dp.t() < t_end) {
    if (tr.steps >= cfg.max_steps) {
      tr.terminal_status = TerminalStatus::StepBudget;
      tr.rejected = dp.rejected();
      return tr;
    }
    if (!dp.step(t_end)) {
      std::ostringstream os;
      os << "step size fell below h_min at t = " << dp.t();
      throw NumericalFailure(os.str());
    }
    ++tr.steps;
    const State s = dp.state();
    tr.samples.push_back({dp.t(), s.x, s.y});
    if (s.x <= cfg.x_floor) {
      tr.terminal_status = TerminalStatus::DomainExit;
      break;
    }
    if (cfg.rest_tol > 0.0) {
      const Rate r = rhs(p, s);
      if (std::max(std::abs(r.dx), std::abs(r.dy)) < cfg.rest_tol) {
        tr.terminal_status = TerminalStatus::Converged;
        break;
      }
    }
  }
  tr.rejected = dp.rejected();
  return tr;
}

State integrate_fixed(const Params& p, State init, double t_end, int n_steps) {
  if (n_steps <= 0 || !(t_end > 0.0)) throw DomainError("fixed-step integration needs n > 0, t_end > 0");
  const double h = t_end / n_steps;
  auto f = [&](double x, double y) {
    const Rate r = rhs(p, {x, y});
    return std::array<double, 2>{r.dx, r.dy};
  };
  double y[2] = {init.x, init.y};
  for (int n = 0; n < n_steps; ++n) {
    const auto k1 = f(y[0], y[1]);
    const auto k2 = f(y[0] + h * a21 * k1[0], y[1] + h * a21 * k1[1]);
    const auto k3 = f(y[0] + h * (a31 * k1[0] + a32 * k2[0]), y[1] + h * (a31 * k1[1] + a32 * k2[1]));
    const auto k4 = f(y[0] + h * (a41 * k1[0] + a42 * k2[0] + a43 * k3[0]),
                      y[1] + h * (a41 * k1[1] + a42 * k2[1] + a43 * k3[1]));
    const auto k5 = f(y[0] + h * (a51 * k1[0] + a52 * k2[0] + a53 * k3[0] + a54 * k4[0]),
                      y[1] + h * (a51 * k1[1] + a52 * k2[1] + a53 * k3[1] + a54 * k4[1]));
    const auto k6 =
        f(y[0] + h * (a61 * k1[0] + a62 * k2[0] + a63 * k3[0] + a64 * k4[0] + a65 * k5[0]),
          y[1] + h * (a61 * k1[1] + a62 * k2[1] + a63 * k3[1] + a64 * k4[1] + a65 * k5[1]));
    for (int i = 0; i < 2; ++i) {
      y[i] += h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
    }
  }
  return {y[0], y[1]};
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr) {
  os << "t,x,y\n";
  for (const auto& s : tr.samples) {
    format_double(os, s.t);
    os << ',';
    format_double(os, s.x);
    os << ',';
    format_double(os, s.y);
    os << '\n';
  }
}

namespace {

double nearest_equilibrium_distance(const std::vector<Equilibrium>& eqs, State s) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : eqs) best = std::min(best, std::hypot(s.x - e.x, s.y - e.y));
  return best;
}

// Root of g = y - x on the last accepted step, by bisection on the dense output.
std::pair<double, State> locate_crossing(const DormandPrince& dp) {
  double lo = dp.t_prev(), hi = dp.t();
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const State s = dp.interpolate(mid);
    if (s.y - s.x > 0.0) lo = mid; else hi = mid;
  }
  const double tc = 0.5 * (lo + hi);
  return {tc, dp.interpolate(tc)};
}

Cycle measure_cycle(const Params& p, State start, double period, const CycleSearchConfig& cfg) {
  Cycle c;
  c.period = period;
  c.section_point = start;
  const int n = std::max(16, cfg.amplitude_samples);
  std::vector<double> xs;
  xs.reserve(n + 1);
  DormandPrince dp(p, start, cfg.integrator);
  xs.push_back(start.x);
  for (int k = 1; k <= n; ++k) {
    const double tk = period * k / n;
    while (dp.t() < tk) {
      if (!dp.step(period)) throw NumericalFailure("step size underflow while measuring a cycle");
    }
    xs.push_back(dp.interpolate(tk).x);
  }
  double mean = 0.0;
  for (int k = 0; k < n; ++k) mean += 0.5 * (xs[k] + xs[k + 1]);
  mean /= n;
  double amp = 0.0;
  for (double x : xs) amp = std::max(amp, std::abs(x - mean));
  c.mean_x = mean;
  c.amplitude = amp;
  return c;
}

}  // namespace

CycleSearch search_limit_cycle(const Params& p, State init, const CycleSearchConfig& cfg) {
  cfg.integrator.validate();
  const auto eqs = all_equilibria(p);
  const double transient = cfg.transient > 0.0 ? cfg.transient : 50.0 / p.s;
  const double t_stop = transient + cfg.max_time;

  DormandPrince dp(p, init, cfg.integrator);
  CycleSearch out;
  std::vector<std::pair<double, State>> crossings;
  long steps = 0;

  auto finish = [&](CycleStatus st) {
    out.status = st;
    out.final_state = dp.state();
    out.final_time = dp.t();
    return out;
  };

  while (dp.t() < t_stop) {
    if (++steps > cfg.integrator.max_steps) return finish(CycleStatus::Inconclusive);
    const State before = dp.state();
    if (!dp.step(t_stop)) return finish(CycleStatus::Inconclusive);
    const State s = dp.state();
    if (s.x <= cfg.integrator.x_floor) return finish(CycleStatus::DomainExit);
    const double dist = nearest_equilibrium_distance(eqs, s);
    if (dist < cfg.rest_distance) return finish(CycleStatus::ConvergedToEquilibrium);
    if (dp.t() <= transient) continue;

    if (before.y - before.x > 0.0 && s.y - s.x <= 0.0) {
      crossings.push_back(locate_crossing(dp));
      const std::size_t n = crossings.size();
      if (n >= 3) {
        const auto& [t2, s2] = crossings[n - 1];
        const auto& [t1, s1] = crossings[n - 2];
        const auto& [t0, s0] = crossings[n - 3];
        const double period = t2 - t1;
        const double dpos = std::hypot(s2.x - s1.x, s2.y - s1.y);
        const double dper = std::abs(period - (t1 - t0));
        const double sep = nearest_equilibrium_distance(eqs, s2);
        // A slowly converging spiral also has shrinking return differences;
        // require them to be small against the distance to the equilibria.
        if (dpos < cfg.position_rtol * std::hypot(s2.x, s2.y) && dper < cfg.period_rtol * period &&
            dpos < 1e-2 * sep) {
          out.cycle = measure_cycle(p, s2, period, cfg);
          out.cycle->returns = static_cast<int>(n);
          return finish(CycleStatus::CycleFound);
        }
      }
    }
  }
  return finish(CycleStatus::Inconclusive);
}

std::optional<Cycle> detect_limit_cycle(const Params& p, State init, const CycleSearchConfig& cfg) {
  const CycleSearch r = search_limit_cycle(p, init, cfg);
  if (r.status == CycleStatus::Inconclusive) {
    std::ostringstream os;
    os << "cycle search inconclusive at t = " << r.final_time;
    throw NumericalFailure(os.str());
  }
  return r.cycle;
}

ProbeResult origin_attraction_probe(const Params& p, double delta, const ProbeConfig& cfg) {
  if (!(delta > 0.0 && delta <= 1e-2)) throw DomainError("probe radius must lie in (0, 1e-2]");
  cfg.integrator.validate();
  if (cfg.fan < 1) throw DomainError("probe fan needs at least one interior ray");

  std::vector<State> starts;
  starts.push_back({delta, 0.0});
  for (int k = 0; k < cfg.fan; ++k) {
    const double th = (k + 0.5) * (0.5 * std::numbers::pi) / cfg.fan;
    starts.push_back({delta * std::cos(th), delta * std::sin(th)});
  }

  ProbeResult res;
  res.total = static_cast<int>(starts.size());
  for (const State& s0 : starts) {
    DormandPrince dp(p, s0, cfg.integrator);
    bool left = false, reentered = false, converged = false, decided = false;
    long steps = 0;
    while (dp.t() < cfg.t_max && steps < cfg.integrator.max_steps) {
      if (!dp.step(cfg.t_max)) throw NumericalFailure("step size underflow in origin probe");
      ++steps;
      const State s = dp.state();
      const double r = std::hypot(s.x, s.y);
      if (s.x <= cfg.integrator.x_floor) {
        converged = true;
        decided = true;
        break;
      }
      if (r > 10.0 * delta) {
        left = true;
      } else if (left) {
        reentered = true;
      }
      if (left && !reentered) {
        // Outside the ball: finished once the orbit settles away from 0.
        const Rate f = rhs(p, s);
        if (std::max(std::abs(f.dx), std::abs(f.dy)) < 1e-10) {
          decided = true;
          break;
        }
      }
    }
    if (!decided && !left) {
      throw NumericalFailure("origin probe exhausted its budget inside the ball");
    }
    if (converged) {
      ++res.converged;
    } else if (left && !reentered) {
      ++res.escaped;
    }
  }
  res.verdict = res.converged == res.total ? ProbeVerdict::ConvergesToOrigin
                : res.escaped == res.total ? ProbeVerdict::Escapes
                                           : ProbeVerdict::Mixed;
  return res;
}

}  // namespace lgf
