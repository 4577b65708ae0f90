#include <cmath>

#include "robmon/errors.hpp"
#include "robmon/kernels.hpp"

namespace robmon::kernels {

RhoParams RhoParams::bisquare(double c) {
  if (!(c > 0.0)) throw InputError("bisquare cutoff c must be > 0");
  RhoParams rp{};
  rp.family = Family::bisquare;
  rp.dim = 0.0;
  rp.param = c;
  rp.sqrt_p = 0.0;
  rp.end = c;
  rp.rho_max = c * c / 6.0;
  rp.inv_c = 1.0 / c;
  rp.one_plus_a = 0.0;
  rp.inv_2a = 0.0;
  rp.inv_a = 0.0;
  return rp;
}

RhoParams RhoParams::custom_a(double p, double a) {
  if (!(p >= 1.0)) throw InputError("custom_a: dimension p must be >= 1");
  if (!(a >= 0.0)) throw InputError("custom_a: flatness parameter a must be >= 0");
  RhoParams rp{};
  rp.family = Family::custom_a;
  rp.dim = p;
  rp.param = a;
  rp.sqrt_p = std::sqrt(p);
  rp.end = (1.0 + a) * rp.sqrt_p;
  rp.rho_max = p * (1.0 + a) / 2.0;
  rp.inv_c = 0.0;
  rp.one_plus_a = 1.0 + a;
  // With a == 0 the middle branch is the empty interval (sqrt_p, sqrt_p];
  // the stored reciprocals are never consumed, so park them at 0.
  rp.inv_2a = a > 0.0 ? 1.0 / (2.0 * a) : 0.0;
  rp.inv_a = a > 0.0 ? 1.0 / a : 0.0;
  return rp;
}

namespace detail {

// Branch layout follows the piecewise definitions: junctions belong to the
// leftmost branch (d <= sqrt_p, then d <= end, then the flat tail).

static inline double rho_one(const RhoParams& rp, double d) {
  if (rp.family == RhoParams::Family::bisquare) {
    if (d >= rp.end) return rp.rho_max;
    const double t = d * rp.inv_c;
    const double u = 1.0 - t * t;
    return rp.rho_max * (1.0 - u * u * u);
  }
  if (d <= rp.sqrt_p) return 0.5 * d * d;
  if (d <= rp.end)
    return (rp.one_plus_a * (2.0 * rp.sqrt_p * d - rp.dim) - d * d) * rp.inv_2a;
  return rp.rho_max;
}

static inline double psi_one(const RhoParams& rp, double d) {
  if (rp.family == RhoParams::Family::bisquare) {
    if (d >= rp.end) return 0.0;
    const double t = d * rp.inv_c;
    const double u = 1.0 - t * t;
    return d * u * u;
  }
  if (d <= rp.sqrt_p) return d;
  if (d <= rp.end) return (rp.sqrt_p * rp.one_plus_a - d) * rp.inv_a;
  return 0.0;
}

static inline double weight_one(const RhoParams& rp, double d) {
  if (rp.family == RhoParams::Family::bisquare) {
    if (d >= rp.end) return 0.0;
    const double t = d * rp.inv_c;
    const double u = 1.0 - t * t;
    return u * u;  // w(0) = 1 by continuous extension
  }
  if (d <= rp.sqrt_p) return 1.0;
  if (d <= rp.end) return (rp.sqrt_p * rp.one_plus_a - d) * rp.inv_a / d;
  return 0.0;
}

void rho_scalar(const RhoParams& rp, const double* d, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = rho_one(rp, d[i]);
}

void psi_scalar(const RhoParams& rp, const double* d, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = psi_one(rp, d[i]);
}

void weight_scalar(const RhoParams& rp, const double* d, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = weight_one(rp, d[i]);
}

double rho_sum_scaled_scalar(const RhoParams& rp, const double* d, std::size_t n,
                             double inv_s) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += rho_one(rp, d[i] * inv_s);
  return acc;
}

}  // namespace detail
}  // namespace robmon::kernels
