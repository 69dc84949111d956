#include "lgf/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

namespace lgf {

namespace {

using cd = std::complex<double>;
using CVec = std::array<cd, 2>;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kNondegenTol = 1e-9;
constexpr double kLyapunovTol = 1e-8;

Equilibrium require_fold(const Params& p) {
  const ExistenceRegime r = existence_regime(p);
  if (r.label != RegimeLabel::OneDegenerate) {
    std::ostringstream os;
    os << "fold analysis requires Delta = 0 (Delta = " << r.delta << ")";
    throw DomainError(os.str());
  }
  return interior_equilibrium(p, EquilibriumKind::E3);
}

bool at_s_zero(const Params& p, const Equilibrium& e3) {
  const double s0 = trace_zero_rate(p, e3);
  return std::abs(p.s - s0) <= kNondegenTol * std::max(1.0, s0);
}

Matrix2 inverse(const Matrix2& m) {
  const double d = m.det();
  if (d == 0.0) throw NumericalFailure("singular change of coordinates");
  return {m.a22 / d, -m.a12 / d, -m.a21 / d, m.a11 / d};
}

Matrix2 multiply(const Matrix2& x, const Matrix2& y) {
  return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
          x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

struct Quad {
  double uu, uv, vv;
};

// Q(T z) for Q = uu u^2 + uv u v + vv v^2.
Quad substitute(const Quad& q, const Matrix2& T) {
  const double t11 = T.a11, t12 = T.a12, t21 = T.a21, t22 = T.a22;
  return {q.uu * t11 * t11 + q.uv * t11 * t21 + q.vv * t21 * t21,
          q.uu * 2.0 * t11 * t12 + q.uv * (t11 * t22 + t12 * t21) + q.vv * 2.0 * t21 * t22,
          q.uu * t12 * t12 + q.uv * t12 * t22 + q.vv * t22 * t22};
}

// Second-derivative tensor applied to two real vectors.
std::array<double, 2> second_form(const TaylorCoeffs& c, std::array<double, 2> x,
                                  std::array<double, 2> y) {
  auto row = [&](const TaylorRow& r) {
    return 2.0 * r.uu * x[0] * y[0] + r.uv * (x[0] * y[1] + x[1] * y[0]) + 2.0 * r.vv * x[1] * y[1];
  };
  return {row(c.prey), row(c.pred)};
}

CVec bilinear(const TaylorCoeffs& c, const CVec& x, const CVec& y) {
  auto row = [&](const TaylorRow& r) {
    return 2.0 * r.uu * x[0] * y[0] + r.uv * (x[0] * y[1] + x[1] * y[0]) + 2.0 * r.vv * x[1] * y[1];
  };
  return {row(c.prey), row(c.pred)};
}

CVec trilinear(const TaylorCoeffs& c, const CVec& x, const CVec& y, const CVec& z) {
  auto row = [&](const TaylorRow& r) {
    return 6.0 * r.uuu * x[0] * y[0] * z[0] +
           2.0 * r.uuv * (x[0] * y[0] * z[1] + x[0] * y[1] * z[0] + x[1] * y[0] * z[0]) +
           2.0 * r.uvv * (x[0] * y[1] * z[1] + x[1] * y[0] * z[1] + x[1] * y[1] * z[0]) +
           6.0 * r.vvv * x[1] * y[1] * z[1];
  };
  return {row(c.prey), row(c.pred)};
}

// Solves (m11 m12; m21 m22) z = b.
CVec solve2(cd m11, cd m12, cd m21, cd m22, const CVec& b) {
  const cd d = m11 * m22 - m12 * m21;
  return {(b[0] * m22 - m12 * b[1]) / d, (m11 * b[1] - m21 * b[0]) / d};
}

cd inner(const CVec& p, const CVec& q) { return std::conj(p[0]) * q[0] + std::conj(p[1]) * q[1]; }

}  // namespace

std::string_view to_string(SaddleNodeType t) {
  return t == SaddleNodeType::AttractingSaddleNode ? "AttractingSaddleNode" : "RepellingSaddleNode";
}

std::string_view to_string(CuspVerdict v) {
  return v == CuspVerdict::CuspCodim2 ? "CuspCodim2" : "Degenerate";
}

std::string_view to_string(HopfDirection d) {
  switch (d) {
    case HopfDirection::Supercritical: return "Supercritical";
    case HopfDirection::Subcritical: return "Subcritical";
    case HopfDirection::Undetermined: return "Undetermined";
  }
  return "?";
}

TaylorCoeffs taylor_at(const Params& p, const Equilibrium& e, int order) {
  if (!e.interior()) throw DomainError("Taylor expansion is taken at interior equilibria only");
  if (order != 2 && order != 3) throw DomainError("expansion order must be 2 or 3");
  const Partials d = partials(p, e.state());
  auto fill = [&](double lu, double lv, const std::array<double, 3>& q,
                  const std::array<double, 4>& cu) {
    TaylorRow r;
    r.lin_u = lu;
    r.lin_v = lv;
    r.uu = q[0] / 2.0;
    r.uv = q[1];
    r.vv = q[2] / 2.0;
    if (order == 3) {
      r.uuu = cu[0] / 6.0;
      r.uuv = cu[1] / 2.0;
      r.uvv = cu[2] / 2.0;
      r.vvv = cu[3] / 6.0;
    }
    return r;
  };
  TaylorCoeffs c;
  c.order = order;
  c.prey = fill(d.first.a11, d.first.a12, d.prey2, d.prey3);
  c.pred = fill(d.first.a21, d.first.a22, d.pred2, d.pred3);
  return c;
}

TaylorCoeffs transform_quadratic(const TaylorCoeffs& c, const Matrix2& T) {
  const Matrix2 Ti = inverse(T);
  const Matrix2 L = multiply(Ti, multiply(c.linear(), T));
  const Quad q1 = substitute({c.prey.uu, c.prey.uv, c.prey.vv}, T);
  const Quad q2 = substitute({c.pred.uu, c.pred.uv, c.pred.vv}, T);
  TaylorCoeffs out;
  out.order = 2;
  out.prey.lin_u = L.a11;
  out.prey.lin_v = L.a12;
  out.pred.lin_u = L.a21;
  out.pred.lin_v = L.a22;
  out.prey.uu = Ti.a11 * q1.uu + Ti.a12 * q2.uu;
  out.prey.uv = Ti.a11 * q1.uv + Ti.a12 * q2.uv;
  out.prey.vv = Ti.a11 * q1.vv + Ti.a12 * q2.vv;
  out.pred.uu = Ti.a21 * q1.uu + Ti.a22 * q2.uu;
  out.pred.uv = Ti.a21 * q1.uv + Ti.a22 * q2.uv;
  out.pred.vv = Ti.a21 * q1.vv + Ti.a22 * q2.vv;
  return out;
}

SotomayorCheck sotomayor_saddle_node(const Params& p) {
  const Equilibrium e3 = require_fold(p);
  if (at_s_zero(p, e3)) throw DomainError("saddle-node conditions require s != s0");

  const Matrix2 J = jacobian(p, e3.state());
  SotomayorCheck out;

  // Right null vector from the dominant row, scaled so that v.x = 1.
  const double r1 = std::hypot(J.a11, J.a12), r2 = std::hypot(J.a21, J.a22);
  std::array<double, 2> v = r1 >= r2 ? std::array<double, 2>{-J.a12, J.a11}
                                     : std::array<double, 2>{-J.a22, J.a21};
  if (std::abs(v[0]) > 1e-14 * std::max(std::abs(v[0]), std::abs(v[1]))) {
    v = {1.0, v[1] / v[0]};
  } else {
    const double n = std::max(std::abs(v[0]), std::abs(v[1]));
    v = {v[0] / n, v[1] / n};
  }

  // Left null vector from the dominant column, |w|_inf = 1, w1 >= 0.
  const double c1 = std::hypot(J.a11, J.a21), c2 = std::hypot(J.a12, J.a22);
  std::array<double, 2> w = c1 >= c2 ? std::array<double, 2>{J.a21, -J.a11}
                                     : std::array<double, 2>{J.a22, -J.a12};
  const double wn = std::max(std::abs(w[0]), std::abs(w[1]));
  const double sign = w[0] < 0.0 ? -1.0 : 1.0;
  w = {sign * w[0] / wn, sign * w[1] / wn};

  const Rate f_lam = d_rhs_d_lam(p, e3.state());
  const TaylorCoeffs tc = taylor_at(p, e3, 2);
  const auto d2 = second_form(tc, v, v);

  out.v = v;
  out.w = w;
  out.t1 = w[0] * f_lam.dx + w[1] * f_lam.dy;
  out.t2 = w[0] * d2[0] + w[1] * d2[1];
  out.t1_closed = w[0] * (-p.a * e3.x * e3.y * e3.y / (1.0 + p.lam * e3.y));

  const double wnorm = std::abs(w[0]) + std::abs(w[1]);
  const double fl = std::max(std::abs(f_lam.dx), std::abs(f_lam.dy));
  const double dd = std::max(std::abs(d2[0]), std::abs(d2[1]));
  out.passes = std::abs(out.t1) > kNondegenTol * wnorm * fl &&
               std::abs(out.t2) > kNondegenTol * wnorm * dd;
  return out;
}

SaddleNodeReport saddle_node_type(const Params& p) {
  const Equilibrium e3 = require_fold(p);
  if (at_s_zero(p, e3)) throw DomainError("saddle-node type requires s != s0");

  const TaylorCoeffs tc = taylor_at(p, e3, 2);
  const double a1 = tc.prey.lin_u, a2 = tc.prey.lin_v, b1 = tc.pred.lin_u;
  const double s0 = trace_zero_rate(p, e3);

  SaddleNodeReport out;
  out.transverse_eigenvalue = s0 - p.s;
  out.time_sign = (s0 - p.s) > 0.0 ? 1 : -1;

  // Columns: null direction (a2, -a1) and the transverse eigenvector (a1, b1).
  const TaylorCoeffs nf = transform_quadratic(tc, {a2, a1, -a1, b1});
  const double tau = s0 - p.s;
  out.c1 = tau * nf.prey.uu;
  out.d1 = tau * nf.pred.lin_v;

  const SotomayorCheck sc = sotomayor_saddle_node(p);
  out.center_coefficient = sc.t2 / (2.0 * (sc.w[0] * sc.v[0] + sc.w[1] * sc.v[1]));

  // In tau-time the transverse direction grows (d1 > 0); mapping back to t
  // flips it when the rescaling is negative.
  const bool repelling = (out.d1 > 0.0) == (out.time_sign > 0);
  out.type = repelling ? SaddleNodeType::RepellingSaddleNode : SaddleNodeType::AttractingSaddleNode;
  return out;
}

CuspReport cusp_check(const Params& p) {
  const Equilibrium e3 = require_fold(p);
  if (!at_s_zero(p, e3)) throw DomainError("cusp check requires s = s0");

  const TaylorCoeffs tc = taylor_at(p, e3, 2);
  const double a1 = tc.prey.lin_u, a2 = tc.prey.lin_v, b1 = tc.pred.lin_u;
  const TaylorCoeffs nf = transform_quadratic(tc, {a2, 0.0, -a1, 1.0});

  CuspReport out;
  out.e = {nf.prey.uu, nf.prey.uv, nf.prey.vv};
  out.f = {nf.pred.uu, nf.pred.uv, nf.pred.vv};
  out.f1_closed = -b1 * b1 * (tc.prey.uu + tc.prey.uv + tc.prey.vv);
  out.f2_plus_2e1 = out.f[1] + 2.0 * out.e[0];
  out.product = out.f[0] * out.f2_plus_2e1;
  out.verdict = (std::abs(out.f[0]) > kNondegenTol && std::abs(out.f2_plus_2e1) > kNondegenTol)
                    ? CuspVerdict::CuspCodim2
                    : CuspVerdict::Degenerate;
  return out;
}

HopfReport hopf_detect(const Params& p, EquilibriumKind at) {
  if (at != EquilibriumKind::E4 && at != EquilibriumKind::E5) {
    throw DomainError("Hopf analysis is defined at E4 or E5");
  }
  const Equilibrium e = interior_equilibrium(p, at);
  HopfReport out;
  out.at = at;
  out.s_star = trace_zero_rate(p, e);
  if (!(out.s_star > 0.0)) {
    std::ostringstream os;
    os << "no positive rate s makes tr J(" << to_string(at) << ") vanish (s* = " << out.s_star << ")";
    throw DomainError(os.str());
  }
  const Params ps = p.with_s(out.s_star);
  // Only J22 = s(1 - 2y/x) depends on s; on the diagonal its slope is -1.
  out.mu_prime = 1.0 - 2.0 * e.y / e.x;
  const Matrix2 J = jacobian(ps, e.state());
  out.trace = J.trace();
  out.det = J.det();
  out.admissible = out.det > 0.0;
  out.omega = out.admissible ? std::sqrt(out.det) : kNaN;
  out.l1 = kNaN;
  out.l1_normalized = kNaN;
  out.direction = HopfDirection::Undetermined;
  return out;
}

HopfReport first_lyapunov(const Params& p, EquilibriumKind at) {
  HopfReport out = hopf_detect(p, at);
  if (!out.admissible) return out;
  const Params ps = p.with_s(out.s_star);
  const TaylorCoeffs tc = taylor_at(ps, interior_equilibrium(ps, at), 3);
  out.l1 = lyapunov_general(tc);
  out.l1_normalized = lyapunov_invariant(tc);
  if (out.l1 < -kLyapunovTol) {
    out.direction = HopfDirection::Supercritical;
  } else if (out.l1 > kLyapunovTol) {
    out.direction = HopfDirection::Subcritical;
  }
  return out;
}

LyapunovBrackets lyapunov_brackets(const TaylorCoeffs& t) {
  const double a = t.prey.lin_u, b = t.prey.lin_v, c = t.pred.lin_u;
  const double a20 = t.prey.uu, a11 = t.prey.uv, a02 = t.prey.vv;
  const double a30 = t.prey.uuu, a21 = t.prey.uuv, a12 = t.prey.uvv;
  const double b20 = t.pred.uu, b11 = t.pred.uv, b02 = t.pred.vv;
  const double b21 = t.pred.uuv, b12 = t.pred.uvv, b03 = t.pred.vvv;

  LyapunovBrackets out;
  out.quadratic = a * c * (a11 * a11 + a11 * b02 + a02 * b11) +
                  a * b * (b11 * b11 + a20 * b11 + a11 * b20) +
                  c * c * (a11 * a02 + 2.0 * a02 * b02) -
                  2.0 * a * c * (b02 * b02 - a20 * a02) -
                  2.0 * a * b * (a20 * a20 - b20 * b02) -
                  b * b * (2.0 * a20 * b20 + b11 * b20) +
                  (b * c - 2.0 * a * a) * (b11 * b02 - a11 * a20);
  out.cubic = 3.0 * (c * b03 - b * a30) + 2.0 * a * (a21 + b12) + (c * a12 - b * b21);
  return out;
}

double lyapunov_general(const TaylorCoeffs& t) {
  const double a = t.prey.lin_u, b = t.prey.lin_v, c = t.pred.lin_u, d = t.pred.lin_v;
  const double delta = a * d - b * c;
  if (!(delta > 0.0) || b == 0.0) return kNaN;
  const LyapunovBrackets br = lyapunov_brackets(t);
  return -3.0 * std::numbers::pi / (2.0 * b * std::pow(delta, 1.5)) *
         (br.quadratic - (a * a + b * c) * br.cubic);
}

double lyapunov_invariant(const TaylorCoeffs& t) {
  const Matrix2 A = t.linear();
  const double tr = A.trace();
  const double w2 = A.det() - 0.25 * tr * tr;
  if (!(w2 > 0.0)) return kNaN;
  const double w = std::sqrt(w2);
  const cd iw(0.0, w);

  // A q = i w q and A^T p = -i w p, normalized so that <p, q> = 1.
  CVec q = std::abs(A.a12) >= std::abs(A.a21) ? CVec{A.a12, iw - A.a11}
                                              : CVec{iw - A.a22, A.a21};
  const double qn = std::sqrt(std::norm(q[0]) + std::norm(q[1]));
  q = {q[0] / qn, q[1] / qn};
  CVec pv = std::abs(A.a21) >= std::abs(A.a12) ? CVec{A.a21, -(A.a11 + iw)}
                                               : CVec{-(A.a22 + iw), A.a12};
  const cd pq = inner(pv, q);
  pv = {pv[0] / std::conj(pq), pv[1] / std::conj(pq)};

  const CVec qb{std::conj(q[0]), std::conj(q[1])};
  const CVec c3 = trilinear(t, q, q, qb);
  const CVec bqqb = bilinear(t, q, qb);
  const CVec h11 = solve2(A.a11, A.a12, A.a21, A.a22, bqqb);
  const CVec bqq = bilinear(t, q, q);
  const CVec h20 = solve2(2.0 * iw - A.a11, -A.a12, -A.a21, 2.0 * iw - A.a22, bqq);

  const cd g = inner(pv, c3) - 2.0 * inner(pv, bilinear(t, q, h11)) + inner(pv, bilinear(t, qb, h20));
  return g.real() / (2.0 * w);
}

}  // namespace lgf
