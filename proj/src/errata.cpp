#include "lgf/errata.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "lgf/bifurcation.hpp"
#include "lgf/equilibria.hpp"
#include "lgf/stability.hpp"

namespace lgf {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

class Collector {
 public:
  explicit Collector(std::vector<ErratumItem>& out) : out_(out) {}

  void context(std::string ctx) { ctx_ = std::move(ctx); }

  // Agreement of two numbers to kErrataTol relative to max(1, |derived|).
  void numeric(std::string id, std::string published, std::string derived, double pv, double dv) {
    ErratumStatus st = ErratumStatus::NotApplicable;
    if (std::isfinite(pv) && std::isfinite(dv)) {
      st = std::abs(pv - dv) <= kErrataTol * std::max(1.0, std::abs(dv)) ? ErratumStatus::Agrees
                                                                         : ErratumStatus::Disagrees;
    }
    push(std::move(id), std::move(published), std::move(derived), pv, dv, st);
  }

  void claim(std::string id, std::string published, std::string derived, double pv, double dv,
             bool holds) {
    push(std::move(id), std::move(published), std::move(derived), pv, dv,
         holds ? ErratumStatus::Agrees : ErratumStatus::Disagrees);
  }

  void skipped(std::string id, std::string published, std::string why) {
    ErratumItem it;
    it.id = std::move(id);
    it.published = std::move(published);
    it.derived = std::move(why);
    it.context = "n/a";
    it.published_value = kNaN;
    it.derived_value = kNaN;
    it.status = ErratumStatus::NotApplicable;
    out_.push_back(std::move(it));
  }

  void push(std::string id, std::string published, std::string derived, double pv, double dv,
            ErratumStatus st) {
    ErratumItem it;
    it.id = std::move(id);
    it.published = std::move(published);
    it.derived = std::move(derived);
    it.context = ctx_;
    it.published_value = pv;
    it.derived_value = dv;
    it.status = st;
    out_.push_back(std::move(it));
  }

 private:
  std::vector<ErratumItem>& out_;
  std::string ctx_;
};

void origin_items(const Params& p, Collector& c) {
  c.context(fmt("origin blow-up y=uv, s=%.6g, m=%.6g", p.s, p.m));
  const BlowupReport rep = origin_blowup(p);
  const DivisorSingularity& p1 = rep.singularities.at(0);
  const DivisorSingularity& p2 = rep.singularities.at(1);

  c.numeric("origin.p1_j11", "J(P1)_11 = -m", "d(u h)/du at (0,0)", -p.m, p1.jac.a11);
  c.numeric("origin.p1_j22", "J(P1)_22 = s+m", "d(v(s(1-v)-h))/dv at (0,0)", p.s + p.m, p1.jac.a22);
  c.numeric("origin.p2_coordinate", "P2 at v = s/(s-m)", "root of v(s(1-v)+m): v = (s+m)/s",
            rep.published_v, p2.v);
  c.numeric("origin.p2_divisor_residual", "divisor flow vanishes at the printed P2",
            "divisor flow at v = s/(s-m)", 0.0, rep.published_v_residual);
  c.numeric("origin.p2_j11", "J(P2)_11 = m", "transverse eigenvalue -m at v = (s+m)/s", p.m,
            p2.jac.a11);
  c.numeric("origin.p2_j22", "J(P2)_22 = -(s^2+m^2)/(s-m)", "divisor eigenvalue -(s+m)",
            -(p.s * p.s + p.m * p.m) / (p.s - p.m), p2.jac.a22);
  c.claim("origin.verdict", "origin is an unstable equilibrium",
          std::string("blow-up verdict: ") + std::string(to_string(rep.origin_verdict)), kNaN, kNaN,
          rep.origin_verdict == OriginVerdict::Unstable);
}

struct Coeffs {
  double a1, a2, a3, a4, a5;
  double b1, b2, b3, b4, b5;
};

Coeffs coeffs_of(const TaylorCoeffs& t) {
  return {t.prey.lin_u, t.prey.lin_v, t.prey.uu, t.prey.uv, t.prey.vv,
          t.pred.lin_u, t.pred.lin_v, t.pred.uu, t.pred.uv, t.pred.vv};
}

void fold_items(const Params& p, Collector& c) {
  const double a1s = allee_competition_threshold(p.m);
  if (!(p.a < a1s)) {
    c.skipped("fold.*", "saddle-node and cusp formulas at lam_SN", "a >= a1*: no fold in lam");
    return;
  }
  const double lam_sn = critical_fear(p.m, p.a);
  const Params pf = Params::make(p.m, p.a, lam_sn, p.s);
  const Equilibrium e3 = interior_equilibrium(pf, EquilibriumKind::E3);
  const double x = e3.x, y = e3.y, lam = lam_sn, m = p.m, a = p.a, s = p.s;
  const double D = 1.0 + lam * y;
  const double g = x * (1.0 - x) * (x - m);
  const double g1 = (1.0 - 2.0 * x) * (x - m) + x * (1.0 - x);
  const double s0 = trace_zero_rate(pf, e3);

  c.context(fmt("E3, lam=lam_SN=%.9g, s=%.6g", lam, s));
  const Coeffs k = coeffs_of(taylor_at(pf, e3, 2));
  c.numeric("taylor.a1", "a1 = (-2x3^2+(m+1)x3)/(1+lam y3)", "dF1/dx", (-2.0 * x * x + (m + 1.0) * x) / D, k.a1);
  c.numeric("taylor.a2", "a2 = -lam x3(1-x3)(x3-m)/(1+lam y3)^2 - a x3", "dF1/dy", -lam * g / (D * D) - a * x, k.a2);
  c.numeric("taylor.a3", "a3 = (-3x3+(m+1))/(1+lam y3)", "d2F1/dx2 / 2", (m + 1.0 - 3.0 * x) / D, k.a3);
  c.numeric("taylor.a4", "a4 = -lam((1-2x3)(x3-m)+x3(1-x3))/(1+lam y3)^2 - a", "d2F1/dxdy", -lam * g1 / (D * D) - a, k.a4);
  c.numeric("taylor.a5", "a5 = 2 a lam^2 x3^2/(1+lam y3)^2", "d2F1/dy2 / 2 = a lam^2 x3^2/(1+lam y3)^2",
            2.0 * a * lam * lam * x * x / (D * D), k.a5);
  c.numeric("taylor.b1", "b1 = s", "dF2/dx", s, k.b1);
  c.numeric("taylor.b2", "b2 = -s", "dF2/dy", -s, k.b2);
  c.numeric("taylor.b3", "b3 = -s/x3", "d2F2/dx2 / 2", -s / x, k.b3);
  c.numeric("taylor.b4", "b4 = 2s/x3", "d2F2/dxdy", 2.0 * s / x, k.b4);
  c.numeric("taylor.b5", "b5 = -s/x3", "d2F2/dy2 / 2", -s / x, k.b5);

  if (std::abs(s - s0) <= 1e-9 * std::max(1.0, s0)) {
    c.skipped("sotomayor.*", "saddle-node nondegeneracy", "s = s0: the fold point is the cusp");
  } else {
    const SotomayorCheck sc = sotomayor_saddle_node(pf);
    // Published normalization w1 = s.
    const double w2_pub = -lam * a * x / D - a * x;
    const double w2_der = s * sc.w[1] / sc.w[0];
    c.numeric("sotomayor.w2", "w2 = -lam a x3/(1+lam y3) - a x3 (with w1 = s)",
              "w2 = J12 = -lam a x3 y3/(1+lam y3) - a x3 (with w1 = s)", w2_pub, w2_der);
    c.numeric("sotomayor.parameter_derivative",
              "w^T F_a = -s x3 y3 (derivative taken in a)",
              "w^T F_lam = -s a x3 y3^2/(1+lam y3) (with w1 = s)", -s * x * y,
              s * sc.t1 / sc.w[0]);
    const TaylorCoeffs t2 = taylor_at(pf, e3, 2);
    const double d2f1 = 2.0 * (t2.prey.uu + t2.prey.uv + t2.prey.vv);
    c.numeric("sotomayor.second_derivative", "[D^2F(v,v)]_1 = -2 lam^2 a x3^2/(1+lam y3)^2",
              "[D^2F(v,v)]_1 with v = (1,1)", -2.0 * lam * lam * a * x * x / (D * D), d2f1);
    c.claim("sotomayor.nondegenerate", "both transversality quantities are nonzero",
            sc.passes ? "both nonzero" : "a quantity vanishes", kNaN, kNaN, sc.passes);

    const SaddleNodeReport sn = saddle_node_type(pf);
    const double tau = s0 - s;
    c.context(fmt("E3, lam=lam_SN=%.9g, s=%.6g, s0=%.9g", lam, s, s0));
    c.numeric("saddle_node.d1", "d1 = (a1-b1)^2", "d1 from T^{-1} J T and dt = (s0-s) dtau",
              (k.a1 - k.b1) * (k.a1 - k.b1), sn.d1);
    const TaylorCoeffs nf = transform_quadratic(taylor_at(pf, e3, 2), {k.a2, k.a1, -k.a1, k.b1});
    c.numeric("saddle_node.d2", "d2 = a2^2(a3-b4) - a1 a2(a4-b4)", "coefficient of x~^2 in y~'",
              k.a2 * k.a2 * (k.a3 - k.b4) - k.a1 * k.a2 * (k.a4 - k.b4), tau * nf.pred.uu);
    const double c1_long = tau / k.a2 * (k.a2 * k.a2 * k.a3 - k.a1 * k.a2 * k.a4 + k.a1 * k.a1 * k.a5) +
                           k.a2 * k.a2 * (k.a3 - k.b3) - k.a1 * k.a2 * (k.a4 - k.b4) +
                           k.a2 * k.a2 * (k.a5 - k.b5);
    const double c1_short = -k.a1 * tau * (k.a3 + k.a4 + k.a5) +
                            k.a1 * k.a1 * (k.a3 - k.b3 + k.a4 - k.b4 + k.a5 - k.b5);
    c.numeric("saddle_node.c1", "c1 (expanded printed form)", "coefficient of x~^2 in x~'", c1_long, sn.c1);
    c.numeric("saddle_node.c1_reduced", "c1 = -a1(s0-s)(a3+a4+a5) + a1^2(a3-b3+a4-b4+a5-b5)",
              "coefficient of x~^2 in x~'", c1_short, sn.c1);
    const double sign_pub = s < s0 ? -1.0 : 1.0;
    c.claim("saddle_node.c1_sign", "c1 < 0 for s < s0 and c1 > 0 for s > s0", "sign of derived c1",
            sign_pub, sn.c1 > 0.0 ? 1.0 : -1.0, (sn.c1 > 0.0 ? 1.0 : -1.0) == sign_pub);
    const SaddleNodeType pub_type =
        s < s0 ? SaddleNodeType::RepellingSaddleNode : SaddleNodeType::AttractingSaddleNode;
    c.claim("saddle_node.type",
            std::string("E3 is a ") + std::string(to_string(pub_type)),
            std::string("derived: ") + std::string(to_string(sn.type)), kNaN, kNaN, pub_type == sn.type);
  }

  // Cusp point: same fold, s = s0.
  const Params pc = pf.with_s(s0);
  const Equilibrium e3c = interior_equilibrium(pc, EquilibriumKind::E3);
  const Coeffs q = coeffs_of(taylor_at(pc, e3c, 2));
  const CuspReport cr = cusp_check(pc);
  c.context(fmt("E3, lam=lam_SN=%.9g, s=s0=%.9g", lam, s0));
  c.numeric("cusp.e1", "e1 = a2 a3 - a1 a4 + a1^2 a5/a2", "coefficient of X^2 in X'",
            q.a2 * q.a3 - q.a1 * q.a4 + q.a1 * q.a1 * q.a5 / q.a2, cr.e[0]);
  c.numeric("cusp.e2", "e2 = a4 - 2 a1 a5/a2", "coefficient of XY in X'", q.a4 - 2.0 * q.a1 * q.a5 / q.a2, cr.e[1]);
  c.numeric("cusp.e3", "e3 = a5/a2", "coefficient of Y^2 in X'", q.a5 / q.a2, cr.e[2]);
  c.numeric("cusp.f1", "f1 = -a2^2(a3-b3) + a1 a2(a4-b4) - a1^2(a5-b5)", "coefficient of X^2 in Y'",
            -q.a2 * q.a2 * (q.a3 - q.b3) + q.a1 * q.a2 * (q.a4 - q.b4) - q.a1 * q.a1 * (q.a5 - q.b5), cr.f[0]);
  c.numeric("cusp.f1_reduced", "f1 = -b1^2(a3+a4+a5)", "coefficient of X^2 in Y'",
            -q.b1 * q.b1 * (q.a3 + q.a4 + q.a5), cr.f[0]);
  c.numeric("cusp.f2", "f2 = -a2(a4-b4) - 2 a1(a5-b5)", "coefficient of XY in Y'",
            -q.a2 * (q.a4 - q.b4) - 2.0 * q.a1 * (q.a5 - q.b5), cr.f[1]);
  c.numeric("cusp.f3", "f3 = -(a5-b5)", "coefficient of Y^2 in Y'", -(q.a5 - q.b5), cr.f[2]);
  c.numeric("cusp.f2_plus_2e1", "f2 + 2 e1 = -b1(2 a3 + a4)", "from the transformed coefficients",
            -q.b1 * (2.0 * q.a3 + q.a4), cr.f2_plus_2e1);
  c.claim("cusp.codim2", "f1(f2 + 2e1) != 0", std::string(to_string(cr.verdict)), kNaN, cr.product,
          cr.verdict == CuspVerdict::CuspCodim2);
}

void interior_items(const Params& p, Collector& c) {
  if (existence_regime(p).label != RegimeLabel::TwoInterior) {
    c.skipped("interior.*", "E4/E5 stability, Hopf coefficients", "fewer than two interior equilibria");
    return;
  }
  const Equilibrium e4 = interior_equilibrium(p, EquilibriumKind::E4);
  const Equilibrium e5 = interior_equilibrium(p, EquilibriumKind::E5);
  const double m = p.m, a = p.a, lam = p.lam;

  auto det_formula = [&](const Equilibrium& e) {
    const double x = e.x, D = 1.0 + lam * e.y;
    return p.s * (((x - m) - x * (1.0 - x)) / D + lam * x * (1.0 - x) * (x - m) / (D * D));
  };

  c.context(fmt("E4=(%.9g, %.9g), s=%.6g", e4.x, e4.y, p.s));
  const LinearAnalysis l4 = classify(p, e4);
  c.numeric("e4.det_formula", "det J(E4) = s(((x4-m)-x4(1-x4))/(1+lam y4) + lam x4(1-x4)(x4-m)/(1+lam y4)^2)",
            "det of the Jacobian from general partials", det_formula(e4), l4.det);
  c.claim("e4.det_positive", "det J(E4) > 0",
          "det J(E4) = s((1+lam a)x4^2 - m)/(1+lam x4), negative since x4 x5 = m/(1+lam a)", kNaN,
          l4.det, l4.det > 0.0);

  const double s4 = trace_zero_rate(p, e4);
  if (s4 > 0.0) {
    const Params ps = p.with_s(s4);
    const LinearAnalysis w = classify(ps, e4);
    c.context(fmt("E4=(%.9g, %.9g), s=s*=%.9g", e4.x, e4.y, s4));
    c.claim("e4.weak_center", "E4 is a weak center at s = s*",
            std::string("label at s*: ") + std::string(to_string(w.label)), kNaN, w.det,
            w.label == StabilityLabel::WeakCenter);
    const HopfReport h = first_lyapunov(p, EquilibriumKind::E4);
    c.claim("e4.hopf", "Hopf bifurcation at E4 as s crosses s*",
            h.admissible ? "pure imaginary pair at s*" : "real eigenvalues of opposite sign at s*",
            kNaN, h.det, h.admissible);
  }

  c.context(fmt("E5=(%.9g, %.9g), s=%.6g", e5.x, e5.y, p.s));
  const LinearAnalysis l5 = classify(p, e5);
  const double s5 = trace_zero_rate(p, e5);
  c.claim("e5.trace_rate_negative", "(-2x5^2+(m+1)x5)/(1+lam y5) < 0",
          "value of the trace-zero rate at E5", kNaN, s5, s5 < 0.0);
  c.claim("e5.trace_negative", "tr J(E5) < 0", "trace at E5 (positive whenever s < the E5 trace-zero rate)",
          kNaN, l5.trace, l5.trace < 0.0);
  c.numeric("e5.det_formula", "det J(E5) = s(((x5-m)-x5(1-x5))/(1+lam y5) + lam x5(1-x5)(x5-m)/(1+lam y5)^2)",
            "det of the Jacobian from general partials", det_formula(e5), l5.det);
  c.claim("e5.det_positive", "det J(E5) > 0", "det of the Jacobian from general partials", kNaN,
          l5.det, l5.det > 0.0);

  // Expansion at E4 with s = s* (or the given s when s* <= 0).
  const double s_ev = s4 > 0.0 ? s4 : p.s;
  const Params ps = p.with_s(s_ev);
  const TaylorCoeffs t = taylor_at(ps, e4, 3);
  const double x = e4.x, D = 1.0 + lam * e4.y, D5 = 1.0 + lam * e5.y;
  const double g = x * (1.0 - x) * (x - m);
  const double g1 = (1.0 - 2.0 * x) * (x - m) + x * (1.0 - x);
  c.context(fmt("E4=(%.9g, %.9g), s=%.9g", e4.x, e4.y, s_ev));

  c.numeric("taylor.m1", "m1 = ((1-2x4)(x4-m)+x4(1-x4))/(1+lam y4) - a y4", "dF1/dx", g1 / D - a * e4.y, t.prey.lin_u);
  c.numeric("taylor.m2", "m2 = -lam x4(1-x4)(x4-m)/(1+lam y4)^2 - a x4", "dF1/dy", -lam * g / (D * D) - a * x, t.prey.lin_v);
  c.numeric("taylor.m3", "m3 = (-(x4-m)+x4(1-x4))/(1+lam y4)", "d2F1/dx2 / 2 = (m+1-3x4)/(1+lam y4)",
            (-(x - m) + x * (1.0 - x)) / D, t.prey.uu);
  c.numeric("taylor.m4", "m4 = -lam((1-2x4)(x4-m)+x4(1-x4))/(1+lam y4)^2 - a", "d2F1/dxdy",
            -lam * g1 / (D * D) - a, t.prey.uv);
  c.numeric("taylor.m5", "m5 = lam^2 x4(1-x4)(x4-m)/(1+lam y4)^3 - a x4", "d2F1/dy2 / 2 = lam^2 x4(1-x4)(x4-m)/(1+lam y4)^3",
            lam * lam * g / (D * D * D) - a * x, t.prey.vv);
  c.numeric("taylor.m6", "m6 = -1/(1+lam y4)", "d3F1/dx3 / 6", -1.0 / D, t.prey.uuu);
  c.numeric("taylor.m7", "m7 = lam((x4-m)-(1-2x4))/(1+lam y4)^3", "d3F1/dx2dy / 2 = -lam(m+1-3x4)/(1+lam y4)^2",
            lam * ((x - m) - (1.0 - 2.0 * x)) / (D * D * D), t.prey.uuv);
  c.numeric("taylor.m8", "m8 = lam^2((1-2x4)(x4-m)+x4(1-x4))/(1+lam y5)^3", "d3F1/dxdy2 / 2 (denominator in y4)",
            lam * lam * g1 / (D5 * D5 * D5), t.prey.uvv);
  c.numeric("taylor.m9", "m9 = -lam^3 x4(1-x4)(x4-m)/(1+lam y4)^4", "d3F1/dy3 / 6",
            -lam * lam * lam * g / (D * D * D * D), t.prey.vvv);

  const double s = s_ev;
  c.numeric("taylor.n1", "n1 = s*", "dF2/dx", s, t.pred.lin_u);
  c.numeric("taylor.n2", "n2 = -s*", "dF2/dy", -s, t.pred.lin_v);
  c.numeric("taylor.n3", "n3 = -s*/x4^2", "d2F2/dx2 / 2 = -s*/x4", -s / (x * x), t.pred.uu);
  c.numeric("taylor.n4", "n4 = 2s*/x4", "d2F2/dxdy", 2.0 * s / x, t.pred.uv);
  c.numeric("taylor.n5", "n5 = -s*/x4", "d2F2/dy2 / 2", -s / x, t.pred.vv);
  c.numeric("taylor.n6", "n6 = s*/x4^3", "d3F2/dx3 / 6 = s*/x4^2", s / (x * x * x), t.pred.uuu);
  c.numeric("taylor.n7", "n7 = -s*/x4^3", "d3F2/dx2dy / 2 = -2s*/x4^2", -s / (x * x * x), t.pred.uuv);
  c.numeric("taylor.n8", "n8 = 2s*/x4^2", "d3F2/dxdy2 / 2 = s*/x4^2", 2.0 * s / (x * x), t.pred.uvv);

  // Lyapunov bracket terms, evaluated with the derived coefficients so that
  // only the structure of each printed term is tested.
  const double m1 = t.prey.lin_u, m2 = t.prey.lin_v, n1 = t.pred.lin_u;
  const double m3 = t.prey.uu, m4 = t.prey.uv;
  const double m6 = t.prey.uuu, m7 = t.prey.uuv, m8 = t.prey.uvv;
  const double n3 = t.pred.uu, n4 = t.pred.uv, n5 = t.pred.vv, n7 = t.pred.uuv, n8 = t.pred.uvv;
  c.push("lyapunov.psi2", "psi2 = n4^2 + m3 n4 + m4 n (last factor missing)",
         "psi2 = n4^2 + m3 n4 + m4 n3", kNaN, n4 * n4 + m3 * n4 + m4 * n3, ErratumStatus::Disagrees);
  const double psi7 = n4 * n5 - m4 * m3;
  c.numeric("lyapunov.psi7_term", "-(m2 n1 - 2 m1^2) psi7", "+(m2 n1 - 2 m1^2) psi7",
            -(m2 * n1 - 2.0 * m1 * m1) * psi7, (m2 * n1 - 2.0 * m1 * m1) * psi7);
  c.numeric("lyapunov.psi8", "psi8 = -3 m6 m2 + 2 m1(m7+n8) + (n1 n8 - m2 n7)",
            "psi8 = -3 m6 m2 + 2 m1(m7+n8) + (n1 m8 - m2 n7)",
            -3.0 * m6 * m2 + 2.0 * m1 * (m7 + n8) + (n1 * n8 - m2 * n7),
            -3.0 * m6 * m2 + 2.0 * m1 * (m7 + n8) + (n1 * m8 - m2 * n7));
  const LyapunovBrackets br = lyapunov_brackets(t);
  c.numeric("lyapunov.cubic_bracket", "psi8 as printed", "cubic bracket of the planar formula",
            -3.0 * m6 * m2 + 2.0 * m1 * (m7 + n8) + (n1 * n8 - m2 * n7), br.cubic);
}

}  // namespace

std::string_view to_string(ErratumStatus s) {
  switch (s) {
    case ErratumStatus::Agrees: return "agrees";
    case ErratumStatus::Disagrees: return "disagrees";
    case ErratumStatus::NotApplicable: return "n/a";
  }
  return "?";
}

std::vector<ErratumItem> errata_report(const Params& p) {
  require_strong_allee(p);
  std::vector<ErratumItem> out;
  Collector c(out);
  origin_items(p, c);
  fold_items(p, c);
  interior_items(p, c);
  return out;
}

}  // namespace lgf
