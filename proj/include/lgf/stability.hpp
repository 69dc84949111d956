#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include "lgf/equilibria.hpp"
#include "lgf/model.hpp"

namespace lgf {

enum class StabilityLabel {
  Saddle,
  StableNode,
  UnstableNode,
  StableFocus,
  UnstableFocus,
  WeakCenter,
  SaddleNodeDegenerate,
  NilpotentDegenerate,
};

std::string_view to_string(StabilityLabel l);

struct LinearAnalysis {
  Matrix2 jac;
  double trace = 0.0;
  double det = 0.0;
  std::complex<double> eig1, eig2;
  StabilityLabel label = StabilityLabel::Saddle;
  // trace^2 - 4 det == 0 within tolerance; labeled as the node variant.
  bool degenerate_node = false;
};

// Eigenvalues of a real 2x2 matrix, computed without cancellation in the
// real case. eig1 carries the larger real part (or positive imaginary part).
std::pair<std::complex<double>, std::complex<double>> eigenvalues(const Matrix2& j);

// Trace/determinant chart classification of a planar linearization.
LinearAnalysis classify_matrix(const Matrix2& j);

// Classifies an equilibrium of p; rejects points whose residual exceeds 1e-8.
LinearAnalysis classify(const Params& p, const Equilibrium& e);

// Value of s at which tr J vanishes at an interior equilibrium:
// x(m+1-2x)/(1+lam*x). Depends only on (m, a, lam).
double trace_zero_rate(const Params& p, const Equilibrium& e);

// s0 at the degenerate equilibrium E3; requires the fold (Delta = 0).
double s_zero(const Params& p);

// s* at E4; requires two interior equilibria.
double s_star(const Params& p);

// ---------------------------------------------------------------------------
// Directional blow-up of the origin: x = u, y = u v.

enum class OriginVerdict { Unstable, Attracting, SectorMixed };

std::string_view to_string(OriginVerdict v);

struct BlowupState {
  double u = 0.0;
  double v = 0.0;
};

Rate blowup_rhs(const Params& p, BlowupState st);
Matrix2 blowup_jacobian(const Params& p, BlowupState st);

// Central differences with steps hu = h/max(1, v) and hv = h. The u step
// shrinks with v because u enters the field through lam*u*v and a*u*v.
Matrix2 blowup_jacobian_fd(const Params& p, BlowupState st, double h = 1e-5);

// Flow along the exceptional divisor u = 0: v (s(1-v) + m).
double divisor_flow(const Params& p, double v);

struct DivisorSingularity {
  double v = 0.0;
  Matrix2 jac;
  LinearAnalysis linear;
  bool hyperbolic = true;
};

struct BlowupReport {
  std::vector<DivisorSingularity> singularities;
  OriginVerdict origin_verdict = OriginVerdict::SectorMixed;
  // Whether the verdict coincides with the published claim that the
  // origin is unstable.
  bool agrees_with_published = false;
  // v-coordinate printed for the second singularity, s/(s-m), and the
  // divisor flow evaluated there.
  double published_v = 0.0;
  double published_v_residual = 0.0;
};

BlowupReport origin_blowup(const Params& p);

}  // namespace lgf
