#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace lgf {

// Thrown when an input lies outside the domain of an operation (x <= 0,
// weak Allee parameters, missing equilibrium, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Thrown when a numerical procedure cannot reach a verdict (step budget,
// step-size underflow, inconclusive cycle search).
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nondimensional parameters of the prey/predator system
///
///   x' = x(1-x)(x-m)/(1+lam*y) - a*x*y
///   y' = s*y*(1 - y/x)
///
/// m is the Allee threshold, a the predation pressure, lam the fear intensity
/// and s the predator growth rate. All four must be strictly positive.
struct Params {
  double m = 0.0;
  double a = 0.0;
  double lam = 0.0;
  double s = 0.0;

  // Throws DomainError unless all fields are finite and positive.
  static Params make(double m, double a, double lam, double s);

  bool strong_allee() const { return m > 0.0 && m < 1.0; }

  Params with_s(double s_new) const { return make(m, a, lam, s_new); }
  Params with_lam(double lam_new) const { return make(m, a, lam_new, s); }
};

// Rejects parameters outside the strong Allee regime 0 < m < 1.
void require_strong_allee(const Params& p);

/// Dimensional parameters: r is the prey birth rate, K the carrying
/// capacity, h the prey-to-predator carrying ratio.
struct DimParams {
  double r = 0.0;
  double K = 0.0;
  double m_dim = 0.0;
  double a_dim = 0.0;
  double lam_dim = 0.0;
  double s_dim = 0.0;
  double h = 0.0;
};

struct State {
  double x = 0.0;
  double y = 0.0;
};

struct Rate {
  double dx = 0.0;
  double dy = 0.0;
};

// Row-major 2x2 matrix.
struct Matrix2 {
  double a11 = 0.0, a12 = 0.0;
  double a21 = 0.0, a22 = 0.0;

  double trace() const { return a11 + a22; }
  double det() const { return a11 * a22 - a12 * a21; }
  Matrix2 transposed() const { return {a11, a21, a12, a22}; }
};

Rate rhs(const Params& p, State st);

// Dimensional right-hand side, used to check the rescaling.
Rate rhs_dimensional(const DimParams& d, State st);

Params nondimensionalize(const DimParams& d);

// Time factor between the dimensional and nondimensional clocks: tau = r*K*t.
double time_scale(const DimParams& d);

// General partial derivatives, valid off-equilibrium.
Matrix2 jacobian(const Params& p, State st);

// Central differences with steps hx = h*min(1, x) and h. The x step shrinks
// with x so that the stencil stays inside x > 0 and its truncation error
// stays small relative to the 1/x^2 growth of the predator row.
Matrix2 jacobian_fd(const Params& p, State st, double h = 1e-5);

// d(rhs)/d(lam); the predator component is identically zero.
Rate d_rhs_d_lam(const Params& p, State st);

/// All partial derivatives of the field up to third order at one point.
/// Index order inside each group is (xx, xy, yy) and (xxx, xxy, xyy, yyy).
struct Partials {
  Matrix2 first;
  std::array<double, 3> prey2{};
  std::array<double, 3> pred2{};
  std::array<double, 4> prey3{};
  std::array<double, 4> pred3{};
};

Partials partials(const Params& p, State st);

}  // namespace lgf
