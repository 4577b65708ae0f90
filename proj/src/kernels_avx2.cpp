// AVX2+FMA variants of the rho-family batch kernels. Compiled with
// -mavx2 -mfma on x86-64 only; dispatch guarantees they run solely on
// CPUs that support both. Lane logic mirrors kernels_scalar.cpp branch
// for branch; tails of length < 4 fall back to the scalar reference.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstddef>

#include "robmon/kernels.hpp"

namespace robmon::kernels::detail {

namespace {

// select(mask, a, b): a where mask, else b
inline __m256d select(__m256d mask, __m256d a, __m256d b) {
  return _mm256_blendv_pd(b, a, mask);
}

inline double hsum(__m256d v) {
  // Fixed-order reduction: (v0 + v2) + (v1 + v3) lane pairing via hadd,
  // then low + high. Order never depends on data.
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

struct BisquareConsts {
  __m256d end, rho_max, inv_c, one, zero;
  explicit BisquareConsts(const RhoParams& rp)
      : end(_mm256_set1_pd(rp.end)),
        rho_max(_mm256_set1_pd(rp.rho_max)),
        inv_c(_mm256_set1_pd(rp.inv_c)),
        one(_mm256_set1_pd(1.0)),
        zero(_mm256_setzero_pd()) {}
};

struct CustomConsts {
  __m256d sqrt_p, end, rho_max, dim, one_plus_a, inv_2a, inv_a, half, two, one, zero;
  explicit CustomConsts(const RhoParams& rp)
      : sqrt_p(_mm256_set1_pd(rp.sqrt_p)),
        end(_mm256_set1_pd(rp.end)),
        rho_max(_mm256_set1_pd(rp.rho_max)),
        dim(_mm256_set1_pd(rp.dim)),
        one_plus_a(_mm256_set1_pd(rp.one_plus_a)),
        inv_2a(_mm256_set1_pd(rp.inv_2a)),
        inv_a(_mm256_set1_pd(rp.inv_a)),
        half(_mm256_set1_pd(0.5)),
        two(_mm256_set1_pd(2.0)),
        one(_mm256_set1_pd(1.0)),
        zero(_mm256_setzero_pd()) {}
};

inline __m256d rho_bisquare_vec(const BisquareConsts& k, __m256d d) {
  const __m256d t = _mm256_mul_pd(d, k.inv_c);
  const __m256d u = _mm256_fnmadd_pd(t, t, k.one);  // 1 - t*t
  const __m256d u3 = _mm256_mul_pd(_mm256_mul_pd(u, u), u);
  const __m256d body = _mm256_mul_pd(k.rho_max, _mm256_sub_pd(k.one, u3));
  const __m256d flat = _mm256_cmp_pd(d, k.end, _CMP_GE_OQ);
  return select(flat, k.rho_max, body);
}

inline __m256d psi_bisquare_vec(const BisquareConsts& k, __m256d d) {
  const __m256d t = _mm256_mul_pd(d, k.inv_c);
  const __m256d u = _mm256_fnmadd_pd(t, t, k.one);
  const __m256d body = _mm256_mul_pd(d, _mm256_mul_pd(u, u));
  const __m256d flat = _mm256_cmp_pd(d, k.end, _CMP_GE_OQ);
  return select(flat, k.zero, body);
}

inline __m256d weight_bisquare_vec(const BisquareConsts& k, __m256d d) {
  const __m256d t = _mm256_mul_pd(d, k.inv_c);
  const __m256d u = _mm256_fnmadd_pd(t, t, k.one);
  const __m256d body = _mm256_mul_pd(u, u);
  const __m256d flat = _mm256_cmp_pd(d, k.end, _CMP_GE_OQ);
  return select(flat, k.zero, body);
}

inline __m256d rho_custom_vec(const CustomConsts& k, __m256d d) {
  const __m256d quad = _mm256_mul_pd(k.half, _mm256_mul_pd(d, d));
  // ((1+a)*(2*sqrt_p*d - p) - d*d) / (2a)
  const __m256d lin = _mm256_fmsub_pd(_mm256_mul_pd(k.two, k.sqrt_p), d, k.dim);
  const __m256d mid =
      _mm256_mul_pd(_mm256_fmsub_pd(k.one_plus_a, lin, _mm256_mul_pd(d, d)), k.inv_2a);
  const __m256d in_first = _mm256_cmp_pd(d, k.sqrt_p, _CMP_LE_OQ);
  const __m256d in_mid = _mm256_cmp_pd(d, k.end, _CMP_LE_OQ);
  return select(in_first, quad, select(in_mid, mid, k.rho_max));
}

inline __m256d psi_custom_vec(const CustomConsts& k, __m256d d) {
  const __m256d mid =
      _mm256_mul_pd(_mm256_fmsub_pd(k.sqrt_p, k.one_plus_a, d), k.inv_a);
  const __m256d in_first = _mm256_cmp_pd(d, k.sqrt_p, _CMP_LE_OQ);
  const __m256d in_mid = _mm256_cmp_pd(d, k.end, _CMP_LE_OQ);
  return select(in_first, d, select(in_mid, mid, k.zero));
}

inline __m256d weight_custom_vec(const CustomConsts& k, __m256d d) {
  // Middle branch only applies for d > sqrt_p >= 1, so the division is safe;
  // lanes outside the branch are blended away.
  const __m256d mid = _mm256_div_pd(
      _mm256_mul_pd(_mm256_fmsub_pd(k.sqrt_p, k.one_plus_a, d), k.inv_a), d);
  const __m256d in_first = _mm256_cmp_pd(d, k.sqrt_p, _CMP_LE_OQ);
  const __m256d in_mid = _mm256_cmp_pd(d, k.end, _CMP_LE_OQ);
  return select(in_first, k.one, select(in_mid, mid, k.zero));
}

template <class Consts, __m256d (*Op)(const Consts&, __m256d)>
void map_kernel(const Consts& k, const RhoParams& rp, const double* d, double* out,
                std::size_t n, void (*tail)(const RhoParams&, const double*, double*,
                                            std::size_t)) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, Op(k, _mm256_loadu_pd(d + i)));
  }
  if (i < n) tail(rp, d + i, out + i, n - i);
}

}  // namespace

void rho_avx2(const RhoParams& rp, const double* d, double* out, std::size_t n) {
  if (rp.family == RhoParams::Family::bisquare) {
    map_kernel<BisquareConsts, rho_bisquare_vec>(BisquareConsts(rp), rp, d, out, n,
                                                 rho_scalar);
  } else {
    map_kernel<CustomConsts, rho_custom_vec>(CustomConsts(rp), rp, d, out, n,
                                             rho_scalar);
  }
}

void psi_avx2(const RhoParams& rp, const double* d, double* out, std::size_t n) {
  if (rp.family == RhoParams::Family::bisquare) {
    map_kernel<BisquareConsts, psi_bisquare_vec>(BisquareConsts(rp), rp, d, out, n,
                                                 psi_scalar);
  } else {
    map_kernel<CustomConsts, psi_custom_vec>(CustomConsts(rp), rp, d, out, n,
                                             psi_scalar);
  }
}

void weight_avx2(const RhoParams& rp, const double* d, double* out, std::size_t n) {
  if (rp.family == RhoParams::Family::bisquare) {
    map_kernel<BisquareConsts, weight_bisquare_vec>(BisquareConsts(rp), rp, d, out, n,
                                                    weight_scalar);
  } else {
    map_kernel<CustomConsts, weight_custom_vec>(CustomConsts(rp), rp, d, out, n,
                                                weight_scalar);
  }
}

double rho_sum_scaled_avx2(const RhoParams& rp, const double* d, std::size_t n,
                           double inv_s) {
  const __m256d vs = _mm256_set1_pd(inv_s);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  if (rp.family == RhoParams::Family::bisquare) {
    const BisquareConsts k(rp);
    for (; i + 4 <= n; i += 4) {
      acc = _mm256_add_pd(acc, rho_bisquare_vec(k, _mm256_mul_pd(_mm256_loadu_pd(d + i), vs)));
    }
  } else {
    const CustomConsts k(rp);
    for (; i + 4 <= n; i += 4) {
      acc = _mm256_add_pd(acc, rho_custom_vec(k, _mm256_mul_pd(_mm256_loadu_pd(d + i), vs)));
    }
  }
  double total = hsum(acc);
  if (i < n) total += rho_sum_scaled_scalar(rp, d + i, n - i, inv_s);
  return total;
}

}  // namespace robmon::kernels::detail

#endif  // x86-64
