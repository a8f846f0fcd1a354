#pragma once

namespace tailrate {

/// Standard normal CDF via erfc.
double normal_cdf(double z);

/// Inverse standard normal CDF for p in (0, 1); rational approximation
/// polished with one Halley step, accurate to ~1e-15.
double normal_quantile(double p);

/// Regularized incomplete beta function I_x(a, b), a,b > 0, x in [0, 1].
/// Continued-fraction evaluation.
double incomplete_beta(double a, double b, double x);

/// CDF of Student's t with dof degrees of freedom, via the incomplete
/// beta representation.
double student_t_cdf(double t, double dof);

/// Density of Student's t; used to polish quantile inversions.
double student_t_pdf(double t, double dof);

}  // namespace tailrate
