#include "robmon/stats.hpp"

#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/normal.hpp>

#include "robmon/errors.hpp"

namespace robmon::stats {

double chi2_cdf(double dof, double x) {
  if (x <= 0.0) return 0.0;
  return boost::math::cdf(boost::math::chi_squared(dof), x);
}

double chi2_sf(double dof, double x) {
  if (x <= 0.0) return 1.0;
  return boost::math::cdf(boost::math::complement(boost::math::chi_squared(dof), x));
}

double chi2_quantile(double dof, double q) {
  if (q <= 0.0 || q >= 1.0) throw InputError("chi2_quantile: q must lie in (0,1)");
  return boost::math::quantile(boost::math::chi_squared(dof), q);
}

double chi_pdf(double dof, double r) {
  if (r <= 0.0) return 0.0;
  // f(r) = r^{dof-1} e^{-r^2/2} / (2^{dof/2-1} Gamma(dof/2)), evaluated in logs.
  const double log_f = (dof - 1.0) * std::log(r) - 0.5 * r * r -
                       (0.5 * dof - 1.0) * std::log(2.0) - std::lgamma(0.5 * dof);
  return std::exp(log_f);
}

double normal_quantile(double q) {
  if (q <= 0.0 || q >= 1.0) throw InputError("normal_quantile: q must lie in (0,1)");
  return boost::math::quantile(boost::math::normal(), q);
}

}  // namespace robmon::stats
