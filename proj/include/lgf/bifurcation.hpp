#pragma once

#include <array>
#include <string_view>

#include "lgf/equilibria.hpp"
#include "lgf/model.hpp"
#include "lgf/stability.hpp"

namespace lgf {

// Taylor coefficients of one component of a planar field expanded at a
// point, in shifted coordinates (u, v):
//   lin_u u + lin_v v + uu u^2 + uv u v + vv v^2 + uuu u^3 + uuv u^2 v + uvv u v^2 + vvv v^3
struct TaylorRow {
  double lin_u = 0.0, lin_v = 0.0;
  double uu = 0.0, uv = 0.0, vv = 0.0;
  double uuu = 0.0, uuv = 0.0, uvv = 0.0, vvv = 0.0;
};

struct TaylorCoeffs {
  TaylorRow prey;
  TaylorRow pred;
  int order = 3;

  Matrix2 linear() const { return {prey.lin_u, prey.lin_v, pred.lin_u, pred.lin_v}; }
};

// Expansion of the field at an interior equilibrium from its analytic
// partial derivatives. order is 2 (cubic terms zeroed) or 3.
TaylorCoeffs taylor_at(const Params& p, const Equilibrium& e, int order = 3);

// Quadratic part of a planar system after the linear change (u,v) = T z,
// i.e. T^{-1} Q(T z), with linear part T^{-1} J T. Cubic terms are dropped.
TaylorCoeffs transform_quadratic(const TaylorCoeffs& c, const Matrix2& T);

// ---------------------------------------------------------------------------
// Fold (saddle-node in lam) at E3.

struct SotomayorCheck {
  // Right null vector scaled to v.x = 1, left null vector scaled to |w|_inf = 1.
  std::array<double, 2> v{};
  std::array<double, 2> w{};
  // w^T dF/dlam and w^T D^2F(v, v).
  double t1 = 0.0;
  double t2 = 0.0;
  // Closed form of w^T dF/dlam at the fold, -a x3 y3^2 / (1 + lam y3) * w1.
  double t1_closed = 0.0;
  bool passes = false;
};

// Requires Delta = 0 and s away from s0.
SotomayorCheck sotomayor_saddle_node(const Params& p);

enum class SaddleNodeType { AttractingSaddleNode, RepellingSaddleNode };

std::string_view to_string(SaddleNodeType t);

struct SaddleNodeReport {
  SaddleNodeType type = SaddleNodeType::AttractingSaddleNode;
  // Nonzero eigenvalue of J(E3), equal to s0 - s.
  double transverse_eigenvalue = 0.0;
  // Coefficient of x~^2 and the linear coefficient d1 of y~ in the
  // normal form obtained with the eigenbasis and the time rescaling
  // dt = (s0 - s) d tau.
  double c1 = 0.0;
  double d1 = 0.0;
  // Sign of the time rescaling, sign(s0 - s).
  int time_sign = 1;
  // Quadratic coefficient of the flow restricted to the center manifold
  // (real time), w^T D^2F(v,v) / (2 w^T v).
  double center_coefficient = 0.0;
};

SaddleNodeReport saddle_node_type(const Params& p);

enum class CuspVerdict { CuspCodim2, Degenerate };

std::string_view to_string(CuspVerdict v);

struct CuspReport {
  CuspVerdict verdict = CuspVerdict::Degenerate;
  // Quadratic coefficients of X' = Y + e1 X^2 + e2 XY + e3 Y^2,
  // Y' = f1 X^2 + f2 XY + f3 Y^2.
  std::array<double, 3> e{};
  std::array<double, 3> f{};
  // f1 via the reduced closed form -b1^2 (a3 + a4 + a5).
  double f1_closed = 0.0;
  double f2_plus_2e1 = 0.0;
  double product = 0.0;
};

// Requires Delta = 0 and s = s0 (relative tolerance 1e-9).
CuspReport cusp_check(const Params& p);

// ---------------------------------------------------------------------------
// Hopf at an interior equilibrium, with s as the bifurcation parameter.

enum class HopfDirection { Supercritical, Subcritical, Undetermined };

std::string_view to_string(HopfDirection d);

struct HopfReport {
  EquilibriumKind at = EquilibriumKind::E4;
  double s_star = 0.0;
  // d/ds tr J at s*; the equilibrium does not move with s.
  double mu_prime = -1.0;
  double trace = 0.0;
  double det = 0.0;
  // sqrt(det) when det > 0, NaN otherwise.
  double omega = 0.0;
  // Pure imaginary pair at s* (det > 0).
  bool admissible = false;
  // Planar Lyapunov quantity for the general linear part (Perko's form)
  // and the normalized first Lyapunov coefficient from the complex
  // eigenvector formula. NaN unless admissible.
  double l1 = 0.0;
  double l1_normalized = 0.0;
  HopfDirection direction = HopfDirection::Undetermined;
};

// Trace derivative, threshold and spectrum at the threshold; l1 is left NaN.
HopfReport hopf_detect(const Params& p, EquilibriumKind at = EquilibriumKind::E4);

// hopf_detect plus both Lyapunov routes evaluated at s = s*.
HopfReport first_lyapunov(const Params& p, EquilibriumKind at = EquilibriumKind::E4);

// Lyapunov quantity of a planar system with zero-trace linear part
// (a b; c -a), ad - bc > 0:
//   -3 pi / (2 b Delta^{3/2}) * {quadratic bracket - (a^2 + bc) * cubic bracket}.
double lyapunov_general(const TaylorCoeffs& c);

// Quadratic and cubic brackets of lyapunov_general, exposed for checks.
struct LyapunovBrackets {
  double quadratic = 0.0;
  double cubic = 0.0;
};
LyapunovBrackets lyapunov_brackets(const TaylorCoeffs& c);

// First Lyapunov coefficient from the complex eigenvectors q, p of the
// linear part: Re[<p,C(q,q,qbar)> - 2<p,B(q,A^{-1}B(q,qbar))>
//   + <p,B(qbar,(2iw-A)^{-1}B(q,q))>] / (2w).
double lyapunov_invariant(const TaylorCoeffs& c);

}  // namespace lgf
