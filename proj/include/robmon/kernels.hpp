#pragma once

#include <cstddef>
#include <cstdint>

// Batch kernels for the rho-family inner loops. These are the data-parallel
// hot paths of the whole library: every IRLS concentration step solves a
// scale equation by bisection (~60 evaluations of sum_i rho(d_i/s)) and the
// Monte-Carlo consistency constant evaluates rho over 10^6 draws.
//
// Each kernel exists as a scalar reference implementation and, on x86-64
// with AVX2+FMA, as a vectorized variant selected at runtime. The two are
// equivalence-tested; per process only one ISA is active, so results are
// deterministic for a given machine.

namespace robmon::kernels {

// Precomputed per-family constants. Built once per rho instance and shared
// by all batch calls; callers guarantee d >= 0.
struct RhoParams {
  enum class Family : std::uint8_t { bisquare, custom_a };

  Family family;
  double dim;         // p (custom_a only)
  double param;       // c for bisquare, a for custom_a
  double sqrt_p;      // custom_a
  double end;         // redescent endpoint: c, or (1+a)*sqrt(p)
  double rho_max;     // c^2/6, or p*(1+a)/2
  double inv_c;       // bisquare
  double one_plus_a;  // custom_a
  double inv_2a;      // custom_a (0 when a == 0; middle branch is then empty)
  double inv_a;       // custom_a (0 when a == 0)

  static RhoParams bisquare(double c);
  static RhoParams custom_a(double p, double a);
};

enum class Isa { scalar, avx2 };

// Active instruction set. The default is the best the CPU supports;
// set_isa returns false (and changes nothing) if the request is unsupported.
Isa active_isa();
Isa best_supported_isa();
bool set_isa(Isa isa);

void rho(const RhoParams& rp, const double* d, double* out, std::size_t n);
void psi(const RhoParams& rp, const double* d, double* out, std::size_t n);
void weight(const RhoParams& rp, const double* d, double* out, std::size_t n);

// sum_i rho(d[i] * inv_s); the bisection workhorse.
double rho_sum_scaled(const RhoParams& rp, const double* d, std::size_t n, double inv_s);

namespace detail {
// Reference implementations (always compiled; used for the tail of the
// vector variants and for equivalence tests).
void rho_scalar(const RhoParams&, const double*, double*, std::size_t);
void psi_scalar(const RhoParams&, const double*, double*, std::size_t);
void weight_scalar(const RhoParams&, const double*, double*, std::size_t);
double rho_sum_scaled_scalar(const RhoParams&, const double*, std::size_t, double);

#if defined(__x86_64__) || defined(_M_X64)
void rho_avx2(const RhoParams&, const double*, double*, std::size_t);
void psi_avx2(const RhoParams&, const double*, double*, std::size_t);
void weight_avx2(const RhoParams&, const double*, double*, std::size_t);
double rho_sum_scaled_avx2(const RhoParams&, const double*, std::size_t, double);
#endif
}  // namespace detail

}  // namespace robmon::kernels
