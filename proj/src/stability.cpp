#include "lgf/stability.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lgf {

namespace {

constexpr double kResidualTol = 1e-8;
constexpr double kDetTol = 1e-11;
constexpr double kWeakCenterTol = 1e-9;
constexpr double kNodeFocusTol = 1e-12;

}  // namespace

std::string_view to_string(StabilityLabel l) {
  switch (l) {
    case StabilityLabel::Saddle: return "Saddle";
    case StabilityLabel::StableNode: return "StableNode";
    case StabilityLabel::UnstableNode: return "UnstableNode";
    case StabilityLabel::StableFocus: return "StableFocus";
    case StabilityLabel::UnstableFocus: return "UnstableFocus";
    case StabilityLabel::WeakCenter: return "WeakCenter";
    case StabilityLabel::SaddleNodeDegenerate: return "SaddleNodeDegenerate";
    case StabilityLabel::NilpotentDegenerate: return "NilpotentDegenerate";
  }
  return "?";
}

std::string_view to_string(OriginVerdict v) {
  switch (v) {
    case OriginVerdict::Unstable: return "Unstable";
    case OriginVerdict::Attracting: return "Attracting";
    case OriginVerdict::SectorMixed: return "SectorMixed";
  }
  return "?";
}

std::pair<std::complex<double>, std::complex<double>> eigenvalues(const Matrix2& j) {
  const double tr = j.trace();
  const double half = 0.5 * tr;
  // Discriminant written as ((a11-a22)/2)^2 + a12 a21 to avoid tr^2 - 4det.
  const double dd = 0.5 * (j.a11 - j.a22);
  const double disc = dd * dd + j.a12 * j.a21;
  if (disc >= 0.0) {
    const double r = std::sqrt(disc);
    const double big = half + (half >= 0.0 ? r : -r);
    const double det = j.det();
    const double other = (big != 0.0) ? det / big : half - (half >= 0.0 ? r : -r);
    const double l1 = std::max(big, other), l2 = std::min(big, other);
    return {{l1, 0.0}, {l2, 0.0}};
  }
  const double w = std::sqrt(-disc);
  return {{half, w}, {half, -w}};
}

LinearAnalysis classify_matrix(const Matrix2& j) {
  LinearAnalysis out;
  out.jac = j;
  out.trace = j.trace();
  out.det = j.det();
  std::tie(out.eig1, out.eig2) = eigenvalues(j);

  const double tr = out.trace, det = out.det;
  if (std::abs(det) < kDetTol) {
    out.label = std::abs(tr) < kDetTol ? StabilityLabel::NilpotentDegenerate
                                       : StabilityLabel::SaddleNodeDegenerate;
  } else if (det < 0.0) {
    out.label = StabilityLabel::Saddle;
  } else if (std::abs(tr) < kWeakCenterTol * std::max(1.0, std::abs(det))) {
    out.label = StabilityLabel::WeakCenter;
  } else {
    const double dd = 0.5 * (j.a11 - j.a22);
    const double disc = dd * dd + j.a12 * j.a21;  // (tr^2 - 4 det) / 4
    const bool node = disc >= -kNodeFocusTol;
    out.degenerate_node = std::abs(disc) < kNodeFocusTol;
    if (tr < 0.0) {
      out.label = node ? StabilityLabel::StableNode : StabilityLabel::StableFocus;
    } else {
      out.label = node ? StabilityLabel::UnstableNode : StabilityLabel::UnstableFocus;
    }
  }
  return out;
}

LinearAnalysis classify(const Params& p, const Equilibrium& e) {
  const Rate r = rhs(p, e.state());
  const double res = std::max(std::abs(r.dx), std::abs(r.dy));
  if (!(res < kResidualTol)) {
    std::ostringstream os;
    os << "(" << e.x << ", " << e.y << ") is not an equilibrium (residual " << res << ")";
    throw DomainError(os.str());
  }
  return classify_matrix(jacobian(p, e.state()));
}

double trace_zero_rate(const Params& p, const Equilibrium& e) {
  if (!e.interior()) throw DomainError("trace-zero rate is defined at interior equilibria only");
  return e.x * (p.m + 1.0 - 2.0 * e.x) / (1.0 + p.lam * e.y);
}

double s_zero(const Params& p) {
  return trace_zero_rate(p, interior_equilibrium(p, EquilibriumKind::E3));
}

double s_star(const Params& p) {
  return trace_zero_rate(p, interior_equilibrium(p, EquilibriumKind::E4));
}

Rate blowup_rhs(const Params& p, BlowupState st) {
  const double u = st.u, v = st.v;
  const double h = (1.0 - u) * (u - p.m) / (1.0 + p.lam * u * v) - p.a * u * v;
  return {u * h, v * (p.s * (1.0 - v) - h)};
}

Matrix2 blowup_jacobian(const Params& p, BlowupState st) {
  const double u = st.u, v = st.v;
  const double E = 1.0 + p.lam * u * v;
  const double N = (1.0 - u) * (u - p.m);
  const double h = N / E - p.a * u * v;
  const double h_u = (1.0 + p.m - 2.0 * u) / E - N * p.lam * v / (E * E) - p.a * v;
  const double h_v = -N * p.lam * u / (E * E) - p.a * u;
  return {h + u * h_u, u * h_v,
          -v * h_u, p.s * (1.0 - v) - h - v * (p.s + h_v)};
}

Matrix2 blowup_jacobian_fd(const Params& p, BlowupState st, double h) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be > 0");
  const double hu = h / std::max(1.0, std::abs(st.v));
  const Rate up = blowup_rhs(p, {st.u + hu, st.v}), um = blowup_rhs(p, {st.u - hu, st.v});
  const Rate vp = blowup_rhs(p, {st.u, st.v + h}), vm = blowup_rhs(p, {st.u, st.v - h});
  return {(up.dx - um.dx) / (2 * hu), (vp.dx - vm.dx) / (2 * h),
          (up.dy - um.dy) / (2 * hu), (vp.dy - vm.dy) / (2 * h)};
}

double divisor_flow(const Params& p, double v) { return blowup_rhs(p, {0.0, v}).dy; }

BlowupReport origin_blowup(const Params& p) {
  BlowupReport rep;
  // On u = 0 the divisor flow is v (s(1-v) + m); its roots are v = 0 and
  // v = (s+m)/s, both in the closed first quadrant.
  for (double v : {0.0, (p.s + p.m) / p.s}) {
    DivisorSingularity sing;
    sing.v = v;
    sing.jac = blowup_jacobian(p, {0.0, v});
    sing.linear = classify_matrix(sing.jac);
    sing.hyperbolic = std::abs(sing.linear.eig1.real()) > kDetTol &&
                      std::abs(sing.linear.eig2.real()) > kDetTol;
    rep.singularities.push_back(sing);
  }

  // The exceptional divisor is invariant, so the singularities' eigenvalues
  // transverse to it (the u-direction, J11) decide whether nearby orbits in
  // the open quadrant fall into the origin. Flow on the divisor itself runs
  // from v = 0 towards (s+m)/s and from infinity down to (s+m)/s.
  bool all_in = true, all_out = true;
  for (const auto& sing : rep.singularities) {
    if (sing.jac.a11 >= 0.0) all_in = false;
    if (sing.jac.a11 <= 0.0) all_out = false;
  }
  rep.origin_verdict = all_in ? OriginVerdict::Attracting
                       : all_out ? OriginVerdict::Unstable
                                 : OriginVerdict::SectorMixed;
  rep.agrees_with_published = rep.origin_verdict == OriginVerdict::Unstable;

  rep.published_v = p.s / (p.s - p.m);
  rep.published_v_residual = divisor_flow(p, rep.published_v);
  return rep;
}

}  // namespace lgf
