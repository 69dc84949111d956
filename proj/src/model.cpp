#include "lgf/model.hpp"

#include <cmath>
#include <sstream>

namespace lgf {

namespace {

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

void require_domain(State st) {
  if (!(st.x > 0.0) || !std::isfinite(st.x) || !std::isfinite(st.y)) {
    std::ostringstream os;
    os << "state outside the domain x > 0 (x = " << st.x << ", y = " << st.y << ")";
    throw DomainError(os.str());
  }
}

// Prey growth polynomial g(x) = x(1-x)(x-m) and its derivatives.
struct Growth {
  double g, g1, g2;
};

Growth growth(double m, double x) {
  return {x * (1.0 - x) * (x - m), (1.0 - 2.0 * x) * (x - m) + x * (1.0 - x),
          2.0 * (1.0 + m) - 6.0 * x};
}

}  // namespace

Params Params::make(double m, double a, double lam, double s) {
  if (!positive(m) || !positive(a) || !positive(lam) || !positive(s)) {
    std::ostringstream os;
    os << "parameters must be finite and positive (m=" << m << ", a=" << a
       << ", lam=" << lam << ", s=" << s << ")";
    throw DomainError(os.str());
  }
  return Params{m, a, lam, s};
}

void require_strong_allee(const Params& p) {
  if (!p.strong_allee()) {
    std::ostringstream os;
    os << "strong Allee regime requires 0 < m < 1 (m = " << p.m << ")";
    throw DomainError(os.str());
  }
}

Rate rhs(const Params& p, State st) {
  require_domain(st);
  const double x = st.x, y = st.y;
  return {x * (1.0 - x) * (x - p.m) / (1.0 + p.lam * y) - p.a * x * y,
          p.s * y * (1.0 - y / x)};
}

Rate rhs_dimensional(const DimParams& d, State st) {
  require_domain(st);
  const double x = st.x, y = st.y;
  return {d.r * x / (1.0 + d.lam_dim * y) * (1.0 - x / d.K) * (x - d.m_dim) - d.a_dim * x * y,
          d.s_dim * y * (1.0 - y / (d.h * x))};
}

Params nondimensionalize(const DimParams& d) {
  for (double v : {d.r, d.K, d.m_dim, d.a_dim, d.lam_dim, d.s_dim, d.h}) {
    if (!positive(v)) throw DomainError("dimensional parameters must be finite and positive");
  }
  return Params::make(d.m_dim / d.K, d.h * d.a_dim / d.r, d.lam_dim * d.h * d.K,
                      d.s_dim / (d.r * d.K));
}

double time_scale(const DimParams& d) { return d.r * d.K; }

Matrix2 jacobian(const Params& p, State st) {
  require_domain(st);
  const double x = st.x, y = st.y;
  const double D = 1.0 + p.lam * y;
  const Growth G = growth(p.m, x);
  return {G.g1 / D - p.a * y, -p.lam * G.g / (D * D) - p.a * x,
          p.s * y * y / (x * x), p.s * (1.0 - 2.0 * y / x)};
}

Matrix2 jacobian_fd(const Params& p, State st, double h) {
  require_domain(st);
  if (!(h > 0.0)) throw DomainError("finite-difference step must be > 0");
  const double hx = h * std::min(1.0, st.x);
  const Rate xp = rhs(p, {st.x + hx, st.y}), xm = rhs(p, {st.x - hx, st.y});
  const Rate yp = rhs(p, {st.x, st.y + h}), ym = rhs(p, {st.x, st.y - h});
  return {(xp.dx - xm.dx) / (2 * hx), (yp.dx - ym.dx) / (2 * h),
          (xp.dy - xm.dy) / (2 * hx), (yp.dy - ym.dy) / (2 * h)};
}

Rate d_rhs_d_lam(const Params& p, State st) {
  require_domain(st);
  const double D = 1.0 + p.lam * st.y;
  return {-st.y * growth(p.m, st.x).g / (D * D), 0.0};
}

Partials partials(const Params& p, State st) {
  require_domain(st);
  const double x = st.x, y = st.y, s = p.s, l = p.lam;
  const double D = 1.0 + l * y;
  const double D2 = D * D, D3 = D2 * D, D4 = D3 * D;
  const Growth G = growth(p.m, x);

  Partials out;
  out.first = jacobian(p, st);
  out.prey2 = {G.g2 / D, -l * G.g1 / D2 - p.a, 2.0 * l * l * G.g / D3};
  out.pred2 = {-2.0 * s * y * y / (x * x * x), 2.0 * s * y / (x * x), -2.0 * s / x};
  out.prey3 = {-6.0 / D, -l * G.g2 / D2, 2.0 * l * l * G.g1 / D3, -6.0 * l * l * l * G.g / D4};
  out.pred3 = {6.0 * s * y * y / (x * x * x * x), -4.0 * s * y / (x * x * x), 2.0 * s / (x * x), 0.0};
  return out;
}

}  // namespace lgf
