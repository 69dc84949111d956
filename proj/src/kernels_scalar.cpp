#include "lgf/kernels.hpp"

namespace lgf::kernels::scalar {

void rhs(const Params& p, const double* x, const double* y, double* dx, double* dy, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i], yi = y[i];
    dx[i] = xi * (1.0 - xi) * (xi - p.m) / (1.0 + p.lam * yi) - p.a * xi * yi;
    dy[i] = p.s * yi * (1.0 - yi / xi);
  }
}

void jacobian(const Params& p, const double* x, const double* y, double* j11, double* j12,
              double* j21, double* j22, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = x[i], yi = y[i];
    const double D = 1.0 + p.lam * yi;
    const double g = xi * (1.0 - xi) * (xi - p.m);
    const double g1 = (1.0 - 2.0 * xi) * (xi - p.m) + xi * (1.0 - xi);
    const double r = yi / xi;
    j11[i] = g1 / D - p.a * yi;
    j12[i] = -p.lam * g / (D * D) - p.a * xi;
    j21[i] = p.s * r * r;
    j22[i] = p.s * (1.0 - 2.0 * r);
  }
}

void discriminant(const double* m, const double* a, const double* lam, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double b = m[i] + 1.0 - a[i];
    out[i] = b * b - 4.0 * m[i] * (1.0 + lam[i] * a[i]);
  }
}

}  // namespace lgf::kernels::scalar
