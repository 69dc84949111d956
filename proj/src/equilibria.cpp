#include "lgf/equilibria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace lgf {

namespace {

constexpr double kDeltaRelTol = 1e-12;

}  // namespace

std::string_view to_string(EquilibriumKind k) {
  switch (k) {
    case EquilibriumKind::E1: return "E1";
    case EquilibriumKind::E2: return "E2";
    case EquilibriumKind::E3: return "E3";
    case EquilibriumKind::E4: return "E4";
    case EquilibriumKind::E5: return "E5";
  }
  return "?";
}

std::string_view to_string(RegimeLabel l) {
  switch (l) {
    case RegimeLabel::NoInterior: return "NoInterior";
    case RegimeLabel::OneDegenerate: return "OneDegenerate";
    case RegimeLabel::TwoInterior: return "TwoInterior";
  }
  return "?";
}

std::string_view to_string(RegimeReason r) {
  switch (r) {
    case RegimeReason::PredationAboveGrowth: return "PredationAboveGrowth";
    case RegimeReason::PressureAboveThreshold: return "PressureAboveThreshold";
    case RegimeReason::FearAboveFold: return "FearAboveFold";
    case RegimeReason::FearAtFold: return "FearAtFold";
    case RegimeReason::FearBelowFold: return "FearBelowFold";
  }
  return "?";
}

double allee_competition_threshold(double m) {
  if (!(m > 0.0 && m < 1.0)) {
    std::ostringstream os;
    os << "a1* is defined for 0 < m < 1 (m = " << m << ")";
    throw DomainError(os.str());
  }
  const double r = std::sqrt(m);
  return (1.0 - r) * (1.0 - r);
}

double critical_fear(double m, double a) {
  const double a1 = allee_competition_threshold(m);
  if (!(a > 0.0 && a < a1)) {
    std::ostringstream os;
    os << "lam_SN requires 0 < a < a1* = " << a1 << " (a = " << a << ")";
    throw DomainError(os.str());
  }
  // f(a) = (a - a1*)(a - a2*) factored to avoid cancellation near a1*.
  const double a2 = m + 1.0 + 2.0 * std::sqrt(m);
  return (a1 - a) * (a2 - a) / (4.0 * m * a);
}

double discriminant(double m, double a, double lam) {
  const double b = m + 1.0 - a;
  return b * b - 4.0 * m * (1.0 + lam * a);
}

bool discriminant_is_zero(double delta, double m, double a) {
  const double b = m + 1.0 - a;
  return std::abs(delta) < kDeltaRelTol * std::max(1.0, b * b);
}

double interior_quadratic(const Params& p, double x) {
  return (1.0 + p.lam * p.a) * x * x - (1.0 + p.m - p.a) * x + p.m;
}

std::vector<Equilibrium> boundary_equilibria(const Params& p) {
  return {{1.0, 0.0, EquilibriumKind::E1}, {p.m, 0.0, EquilibriumKind::E2}};
}

std::vector<Equilibrium> interior_equilibria(const Params& p) {
  require_strong_allee(p);
  const double b = 1.0 + p.m - p.a;
  if (b <= 0.0) return {};
  const double A = 1.0 + p.lam * p.a;
  const double delta = discriminant(p);
  if (discriminant_is_zero(delta, p.m, p.a)) {
    const double x3 = b / (2.0 * A);
    return {{x3, x3, EquilibriumKind::E3}};
  }
  if (delta < 0.0) return {};
  // Larger root first, the smaller one from the product of roots m/A.
  const double q = 0.5 * (b + std::sqrt(delta));
  const double x5 = q / A;
  const double x4 = p.m / q;
  return {{x4, x4, EquilibriumKind::E4}, {x5, x5, EquilibriumKind::E5}};
}

std::vector<Equilibrium> all_equilibria(const Params& p) {
  auto out = boundary_equilibria(p);
  for (const auto& e : interior_equilibria(p)) out.push_back(e);
  return out;
}

ExistenceRegime existence_regime(const Params& p) {
  require_strong_allee(p);
  ExistenceRegime r;
  r.delta = discriminant(p);
  r.a1_star = allee_competition_threshold(p.m);
  r.lam_crit = (p.a < r.a1_star) ? critical_fear(p.m, p.a)
                                 : std::numeric_limits<double>::quiet_NaN();
  if (p.a >= p.m + 1.0) {
    r.label = RegimeLabel::NoInterior;
    r.reason = RegimeReason::PredationAboveGrowth;
  } else if (p.a >= r.a1_star) {
    r.label = RegimeLabel::NoInterior;
    r.reason = RegimeReason::PressureAboveThreshold;
  } else if (discriminant_is_zero(r.delta, p.m, p.a)) {
    r.label = RegimeLabel::OneDegenerate;
    r.reason = RegimeReason::FearAtFold;
  } else if (r.delta < 0.0) {
    r.label = RegimeLabel::NoInterior;
    r.reason = RegimeReason::FearAboveFold;
  } else {
    r.label = RegimeLabel::TwoInterior;
    r.reason = RegimeReason::FearBelowFold;
  }
  return r;
}

Equilibrium interior_equilibrium(const Params& p, EquilibriumKind kind) {
  for (const auto& e : interior_equilibria(p)) {
    if (e.kind == kind) return e;
  }
  std::ostringstream os;
  os << to_string(kind) << " does not exist for (m=" << p.m << ", a=" << p.a
     << ", lam=" << p.lam << ")";
  throw DomainError(os.str());
}

}  // namespace lgf
