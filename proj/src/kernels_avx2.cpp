// Compiled with -mavx2 -mfma on x86-64; only entered after a runtime CPU check.
#include "lgf/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#define LGF_HAVE_AVX2 1
#endif

namespace lgf::kernels::avx2 {

#ifdef LGF_HAVE_AVX2

bool supported() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

void rhs(const Params& p, const double* x, const double* y, double* dx, double* dy, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d m = _mm256_set1_pd(p.m);
  const __m256d a = _mm256_set1_pd(p.a);
  const __m256d lam = _mm256_set1_pd(p.lam);
  const __m256d s = _mm256_set1_pd(p.s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d yv = _mm256_loadu_pd(y + i);
    const __m256d D = _mm256_fmadd_pd(lam, yv, one);
    const __m256d g = _mm256_mul_pd(_mm256_mul_pd(xv, _mm256_sub_pd(one, xv)), _mm256_sub_pd(xv, m));
    const __m256d axy = _mm256_mul_pd(_mm256_mul_pd(a, xv), yv);
    _mm256_storeu_pd(dx + i, _mm256_sub_pd(_mm256_div_pd(g, D), axy));
    const __m256d r = _mm256_div_pd(yv, xv);
    _mm256_storeu_pd(dy + i, _mm256_mul_pd(_mm256_mul_pd(s, yv), _mm256_sub_pd(one, r)));
  }
  scalar::rhs(p, x + i, y + i, dx + i, dy + i, n - i);
}

void jacobian(const Params& p, const double* x, const double* y, double* j11, double* j12,
              double* j21, double* j22, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d m = _mm256_set1_pd(p.m);
  const __m256d a = _mm256_set1_pd(p.a);
  const __m256d lam = _mm256_set1_pd(p.lam);
  const __m256d s = _mm256_set1_pd(p.s);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d yv = _mm256_loadu_pd(y + i);
    const __m256d D = _mm256_fmadd_pd(lam, yv, one);
    const __m256d omx = _mm256_sub_pd(one, xv);
    const __m256d xmm = _mm256_sub_pd(xv, m);
    const __m256d g = _mm256_mul_pd(_mm256_mul_pd(xv, omx), xmm);
    // g' = (1 - 2x)(x - m) + x(1 - x)
    const __m256d g1 = _mm256_fmadd_pd(_mm256_fnmadd_pd(two, xv, one), xmm, _mm256_mul_pd(xv, omx));
    const __m256d r = _mm256_div_pd(yv, xv);
    _mm256_storeu_pd(j11 + i, _mm256_fnmadd_pd(a, yv, _mm256_div_pd(g1, D)));
    const __m256d lg = _mm256_div_pd(_mm256_mul_pd(lam, g), _mm256_mul_pd(D, D));
    _mm256_storeu_pd(j12 + i, _mm256_sub_pd(_mm256_sub_pd(_mm256_setzero_pd(), lg), _mm256_mul_pd(a, xv)));
    _mm256_storeu_pd(j21 + i, _mm256_mul_pd(s, _mm256_mul_pd(r, r)));
    _mm256_storeu_pd(j22 + i, _mm256_mul_pd(s, _mm256_fnmadd_pd(two, r, one)));
  }
  scalar::jacobian(p, x + i, y + i, j11 + i, j12 + i, j21 + i, j22 + i, n - i);
}

void discriminant(const double* m, const double* a, const double* lam, double* out, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d four = _mm256_set1_pd(4.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d mv = _mm256_loadu_pd(m + i);
    const __m256d av = _mm256_loadu_pd(a + i);
    const __m256d lv = _mm256_loadu_pd(lam + i);
    const __m256d b = _mm256_sub_pd(_mm256_add_pd(mv, one), av);
    const __m256d c = _mm256_mul_pd(_mm256_mul_pd(four, mv), _mm256_fmadd_pd(lv, av, one));
    _mm256_storeu_pd(out + i, _mm256_fmsub_pd(b, b, c));
  }
  scalar::discriminant(m + i, a + i, lam + i, out + i, n - i);
}

#else

bool supported() { return false; }

void rhs(const Params& p, const double* x, const double* y, double* dx, double* dy, std::size_t n) {
  scalar::rhs(p, x, y, dx, dy, n);
}

void jacobian(const Params& p, const double* x, const double* y, double* j11, double* j12,
              double* j21, double* j22, std::size_t n) {
  scalar::jacobian(p, x, y, j11, j12, j21, j22, n);
}

void discriminant(const double* m, const double* a, const double* lam, double* out, std::size_t n) {
  scalar::discriminant(m, a, lam, out, n);
}

#endif

}  // namespace lgf::kernels::avx2
