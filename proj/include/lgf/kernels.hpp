#pragma once

#include <span>
#include <string_view>

#include "lgf/model.hpp"

// Batched evaluation of the vector field, its Jacobian and the interior
// discriminant over arrays of points. A scalar reference implementation is
// always available; an AVX2/FMA variant is selected at runtime when the CPU
// supports it. Both produce the same values up to FMA rounding.
namespace lgf::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b);

// Best backend supported by the running CPU.
Backend detect_backend();
Backend active_backend();
// Forces a backend (used by equivalence tests). Throws DomainError when the
// CPU does not support it.
void set_backend(Backend b);

struct JacobianBatch {
  std::span<double> j11, j12, j21, j22;
};

// All spans must have equal length; every x must be > 0 (DomainError otherwise).
void rhs_batch(const Params& p, std::span<const double> x, std::span<const double> y,
               std::span<double> dx, std::span<double> dy);

void jacobian_batch(const Params& p, std::span<const double> x, std::span<const double> y,
                    JacobianBatch out);

// (m+1-a)^2 - 4m(1+lam a) for each (m, a, lam) triple.
void discriminant_batch(std::span<const double> m, std::span<const double> a,
                        std::span<const double> lam, std::span<double> out);

namespace scalar {
void rhs(const Params& p, const double* x, const double* y, double* dx, double* dy, std::size_t n);
void jacobian(const Params& p, const double* x, const double* y, double* j11, double* j12,
              double* j21, double* j22, std::size_t n);
void discriminant(const double* m, const double* a, const double* lam, double* out, std::size_t n);
}  // namespace scalar

namespace avx2 {
bool supported();
void rhs(const Params& p, const double* x, const double* y, double* dx, double* dy, std::size_t n);
void jacobian(const Params& p, const double* x, const double* y, double* j11, double* j12,
              double* j21, double* j22, std::size_t n);
void discriminant(const double* m, const double* a, const double* lam, double* out, std::size_t n);
}  // namespace avx2

}  // namespace lgf::kernels
