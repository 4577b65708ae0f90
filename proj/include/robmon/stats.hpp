#pragma once

namespace robmon::stats {

// Chi-square distribution with `dof` degrees of freedom.
double chi2_cdf(double dof, double x);
double chi2_sf(double dof, double x);
double chi2_quantile(double dof, double q);

// Density of the chi distribution (the law of ||Z|| for Z ~ N(0, I_dof)).
double chi_pdf(double dof, double r);

// Standard normal quantile function.
double normal_quantile(double q);

}  // namespace robmon::stats
