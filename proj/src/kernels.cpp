#include "lgf/kernels.hpp"

#include <atomic>
#include <sstream>

namespace lgf::kernels {

namespace {

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{detect_backend()};
  return b;
}

void require_same_size(std::size_t n, std::initializer_list<std::size_t> others) {
  for (std::size_t k : others) {
    if (k != n) throw DomainError("batch spans must have equal length");
  }
}

void require_positive_x(std::span<const double> x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0)) {
      std::ostringstream os;
      os << "batch point " << i << " outside the domain x > 0 (x = " << x[i] << ")";
      throw DomainError(os.str());
    }
  }
}

}  // namespace

std::string_view to_string(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

Backend detect_backend() { return avx2::supported() ? Backend::Avx2 : Backend::Scalar; }

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2::supported()) throw DomainError("AVX2/FMA not supported on this CPU");
  current().store(b, std::memory_order_relaxed);
}

void rhs_batch(const Params& p, std::span<const double> x, std::span<const double> y,
               std::span<double> dx, std::span<double> dy) {
  require_same_size(x.size(), {y.size(), dx.size(), dy.size()});
  require_positive_x(x);
  if (active_backend() == Backend::Avx2) {
    avx2::rhs(p, x.data(), y.data(), dx.data(), dy.data(), x.size());
  } else {
    scalar::rhs(p, x.data(), y.data(), dx.data(), dy.data(), x.size());
  }
}

void jacobian_batch(const Params& p, std::span<const double> x, std::span<const double> y,
                    JacobianBatch out) {
  require_same_size(x.size(), {y.size(), out.j11.size(), out.j12.size(), out.j21.size(), out.j22.size()});
  require_positive_x(x);
  if (active_backend() == Backend::Avx2) {
    avx2::jacobian(p, x.data(), y.data(), out.j11.data(), out.j12.data(), out.j21.data(),
                   out.j22.data(), x.size());
  } else {
    scalar::jacobian(p, x.data(), y.data(), out.j11.data(), out.j12.data(), out.j21.data(),
                     out.j22.data(), x.size());
  }
}

void discriminant_batch(std::span<const double> m, std::span<const double> a,
                        std::span<const double> lam, std::span<double> out) {
  require_same_size(m.size(), {a.size(), lam.size(), out.size()});
  if (active_backend() == Backend::Avx2) {
    avx2::discriminant(m.data(), a.data(), lam.data(), out.data(), m.size());
  } else {
    scalar::discriminant(m.data(), a.data(), lam.data(), out.data(), m.size());
  }
}

}  // namespace lgf::kernels
