#pragma once

#include <string_view>
#include <vector>

#include "lgf/model.hpp"

namespace lgf {

enum class EquilibriumKind { E1, E2, E3, E4, E5 };

std::string_view to_string(EquilibriumKind k);

struct Equilibrium {
  double x = 0.0;
  double y = 0.0;
  EquilibriumKind kind = EquilibriumKind::E1;

  State state() const { return {x, y}; }
  bool interior() const { return kind != EquilibriumKind::E1 && kind != EquilibriumKind::E2; }
};

enum class RegimeLabel { NoInterior, OneDegenerate, TwoInterior };

// Which existence clause decided the regime.
enum class RegimeReason {
  PredationAboveGrowth,  // a >= m+1: the quadratic has no positive root
  PressureAboveThreshold,  // a1* <= a < m+1
  FearAboveFold,  // a < a1*, lam > lam_SN
  FearAtFold,  // a < a1*, lam = lam_SN
  FearBelowFold,  // a < a1*, lam < lam_SN
};

std::string_view to_string(RegimeLabel l);
std::string_view to_string(RegimeReason r);

struct ExistenceRegime {
  RegimeLabel label = RegimeLabel::NoInterior;
  double delta = 0.0;
  double a1_star = 0.0;
  // lam_SN; NaN when a >= a1* (no fold in lam).
  double lam_crit = 0.0;
  RegimeReason reason = RegimeReason::PredationAboveGrowth;
};

// a1* = m + 1 - 2 sqrt(m), requires 0 < m < 1.
double allee_competition_threshold(double m);

// Fear intensity at which the two interior equilibria merge:
// lam_SN = (a^2 - 2(m+1)a + (m-1)^2) / (4ma). Requires 0 < a < a1*.
double critical_fear(double m, double a);

// Discriminant of (1+lam*a) x^2 - (1+m-a) x + m = 0.
double discriminant(double m, double a, double lam);
inline double discriminant(const Params& p) { return discriminant(p.m, p.a, p.lam); }

// Scale used for the relative zero test on the discriminant.
bool discriminant_is_zero(double delta, double m, double a);

// Residual of the interior quadratic at x.
double interior_quadratic(const Params& p, double x);

std::vector<Equilibrium> boundary_equilibria(const Params& p);

// Interior equilibria on the diagonal y = x: empty, {E3} or {E4, E5} with x4 < x5.
std::vector<Equilibrium> interior_equilibria(const Params& p);

std::vector<Equilibrium> all_equilibria(const Params& p);

ExistenceRegime existence_regime(const Params& p);

// Returns the requested interior equilibrium or throws DomainError.
Equilibrium interior_equilibrium(const Params& p, EquilibriumKind kind);

}  // namespace lgf
