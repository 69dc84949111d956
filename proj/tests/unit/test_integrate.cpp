#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "lgf/bifurcation.hpp"
#include "lgf/equilibria.hpp"
#include "lgf/integrate.hpp"

using namespace lgf;

namespace {

const Params kP = Params::make(0.25, 0.2, 0.3, 0.1);
// Supercritical Hopf at E5 for this (m, a, lam).
const Params kSuper = Params::make(0.1, 0.3, 1.0, 0.1);

double hopf_rate(const Params& p) { return hopf_detect(p, EquilibriumKind::E5).s_star; }

}  // namespace

TEST_CASE("configuration is validated") {
  IntegratorConfig c;
  CHECK_NOTHROW(c.validate());
  c.rtol = 0.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = {};
  c.h_min = 1.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = {};
  c.x_floor = 0.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  CHECK_THROWS_AS(integrate(kP, {0.5, 0.5}, 0.0, {}), DomainError);
  CHECK_THROWS_AS(integrate(kP, {0.0, 0.5}, 1.0, {}), DomainError);
  CHECK_THROWS_AS(integrate(kP, {0.5, -0.1}, 1.0, {}), DomainError);
}

TEST_CASE("equilibria are stationary") {
  const Equilibrium e5 = interior_equilibrium(kP, EquilibriumKind::E5);
  const Trajectory tr = integrate(kP, e5.state(), 1e3, {});
  double drift = 0.0;
  for (const auto& s : tr.samples) drift = std::max(drift, std::hypot(s.x - e5.x, s.y - e5.y));
  CHECK(drift < 1e-6);
  CHECK(tr.terminal_status == TerminalStatus::TimeExhausted);

  const Trajectory axis = integrate(kP, {1.0, 0.0}, 100.0, {});
  for (const auto& s : axis.samples) {
    CHECK(s.x == 1.0);
    CHECK(s.y == 0.0);
  }
}

TEST_CASE("samples are strictly increasing in time and stay in the quadrant") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.01, 1.5);
  for (int i = 0; i < 30; ++i) {
    const Trajectory tr = integrate(kP, {u(rng), u(rng)}, 200.0, {});
    for (std::size_t k = 1; k < tr.samples.size(); ++k) CHECK(tr.samples[k].t > tr.samples[k - 1].t);
    for (std::size_t k = 0; k + 1 < tr.samples.size(); ++k) {
      CHECK(tr.samples[k].x > 0.0);
      CHECK(tr.samples[k].y >= 0.0);
    }
  }
}

TEST_CASE("extinction below the Allee threshold ends with DomainExit") {
  IntegratorConfig c;
  c.x_floor = 1e-8;
  const Trajectory tr = integrate(kP, {0.1, 0.0}, 1e4, c);
  CHECK(tr.terminal_status == TerminalStatus::DomainExit);
  for (std::size_t k = 1; k < tr.samples.size(); ++k) CHECK(tr.samples[k].x < tr.samples[k - 1].x);
}

TEST_CASE("step budget is reported") {
  IntegratorConfig c;
  c.max_steps = 10;
  CHECK(integrate(kP, {0.5, 0.3}, 1e3, c).terminal_status == TerminalStatus::StepBudget);
}

TEST_CASE("fixed-step self-convergence order is at least 4") {
  const State init{0.7, 0.3};
  const double T = 20.0;
  const State a = integrate_fixed(kP, init, T, 50), b = integrate_fixed(kP, init, T, 100),
              c = integrate_fixed(kP, init, T, 200);
  const double e1 = std::hypot(a.x - b.x, a.y - b.y), e2 = std::hypot(b.x - c.x, b.y - c.y);
  CHECK(std::log2(e1 / e2) >= 4.0);
}

TEST_CASE("adaptive error shrinks with the tolerance") {
  const State init{0.7, 0.3};
  IntegratorConfig ref;
  ref.rtol = 1e-13;
  ref.atol = 1e-15;
  const Sample r = integrate(kP, init, 50.0, ref).samples.back();
  double prev = 1.0;
  for (double tol : {1e-6, 1e-8, 1e-10}) {
    IntegratorConfig c;
    c.rtol = tol;
    c.atol = tol * 1e-2;
    const Sample s = integrate(kP, init, 50.0, c).samples.back();
    const double err = std::hypot(s.x - r.x, s.y - r.y);
    CHECK(err < prev);
    CHECK(err < 100 * tol);
    prev = err;
  }
}

TEST_CASE("dense output agrees with a stop at the same time") {
  DormandPrince dp(kP, {0.7, 0.3}, {});
  dp.step(100.0);
  dp.step(100.0);
  const double tm = 0.5 * (dp.t_prev() + dp.t());
  const State mid = dp.interpolate(tm);
  IntegratorConfig c;
  c.rtol = 1e-13;
  c.atol = 1e-15;
  const Sample ref = integrate(kP, {0.7, 0.3}, tm, c).samples.back();
  CHECK(std::abs(mid.x - ref.x) < 1e-8);
  CHECK(std::abs(mid.y - ref.y) < 1e-8);
}

TEST_CASE("trajectory CSV") {
  const Trajectory tr = integrate(kP, {1.0, 0.0}, 1.0, {});
  std::ostringstream a, b;
  write_trajectory_csv(a, tr);
  write_trajectory_csv(b, integrate(kP, {1.0, 0.0}, 1.0, {}));
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("t,x,y\n", 0) == 0);
}

TEST_CASE("stable cycle past a supercritical Hopf") {
  const double sh = hopf_rate(kSuper);
  const Equilibrium e5 = interior_equilibrium(kSuper, EquilibriumKind::E5);
  const Params p = kSuper.with_s(0.95 * sh);
  const CycleSearch cs = search_limit_cycle(p, {e5.x * 1.01, e5.y});
  REQUIRE(cs.status == CycleStatus::CycleFound);
  const Cycle c = *cs.cycle;
  CHECK(c.period > 0.0);
  CHECK(c.amplitude > 0.0);
  CHECK(c.period == doctest::Approx(2 * std::numbers::pi /
                                    hopf_detect(kSuper, EquilibriumKind::E5).omega).epsilon(0.1));

  // One more period returns to the section point.
  IntegratorConfig ic;
  ic.rtol = 1e-11;
  ic.atol = 1e-13;
  const Sample end = integrate(p, c.section_point, c.period, ic).samples.back();
  CHECK(std::hypot(end.x - c.section_point.x, end.y - c.section_point.y) <
        1e-5 * std::hypot(c.section_point.x, c.section_point.y));
}

TEST_CASE("amplitude shrinks towards onset") {
  const double sh = hopf_rate(kSuper);
  const Equilibrium e5 = interior_equilibrium(kSuper, EquilibriumKind::E5);
  const auto a95 = detect_limit_cycle(kSuper.with_s(0.95 * sh), {e5.x * 1.01, e5.y});
  const auto a99 = detect_limit_cycle(kSuper.with_s(0.99 * sh), {e5.x * 1.01, e5.y});
  REQUIRE(a95);
  REQUIRE(a99);
  CHECK(a99->amplitude < a95->amplitude);
}

TEST_CASE("no cycle above the Hopf rate: convergence to E5") {
  const double sh = hopf_rate(kSuper);
  const Equilibrium e5 = interior_equilibrium(kSuper, EquilibriumKind::E5);
  const CycleSearch cs = search_limit_cycle(kSuper.with_s(1.5 * sh), {e5.x * 1.01, e5.y});
  CHECK(cs.status == CycleStatus::ConvergedToEquilibrium);
  CHECK_FALSE(cs.cycle);
  CHECK(std::hypot(cs.final_state.x - e5.x, cs.final_state.y - e5.y) < 1e-8);
}

TEST_CASE("origin probe") {
  const ProbeResult r = origin_attraction_probe(kP, 1e-3);
  CHECK(r.total == 13);
  CHECK(r.verdict == ProbeVerdict::ConvergesToOrigin);
  CHECK(origin_attraction_probe(kP, 5e-4).verdict == r.verdict);
  CHECK_THROWS_AS(origin_attraction_probe(kP, 0.1), DomainError);
  CHECK_THROWS_AS(origin_attraction_probe(kP, 0.0), DomainError);
}
