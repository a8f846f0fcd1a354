#include "tailrate/special.hpp"

#include <cmath>
#include <stdexcept>

namespace tailrate {

double normal_cdf(double z) {
  return 0.5 * std::erfc(-z * 0.7071067811865475244);
}

namespace {

// Acklam's rational approximation to the inverse normal CDF (~1.15e-9
// relative), then one Halley step to push it to full double precision.
double normal_quantile_approx(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

constexpr double kInvSqrt2Pi = 0.3989422804014326779;

}  // namespace

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("normal_quantile: p must lie in (0, 1)");
  }
  double x = normal_quantile_approx(p);
  const double e = normal_cdf(x) - p;
  const double u = e / (kInvSqrt2Pi * std::exp(-0.5 * x * x));
  x -= u / (1.0 + 0.5 * x * u);  // Halley
  return x;
}

namespace {

// Lentz continued fraction for the incomplete beta (Numerical Recipes
// form). The iteration cap is generous so large a (t CDF at dof ~ 1e6)
// still converges.
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 50000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  throw std::runtime_error("incomplete_beta: continued fraction did not converge");
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0 && b > 0.0)) {
    throw std::domain_error("incomplete_beta: a and b must be > 0");
  }
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("incomplete_beta: x must lie in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_cf(a, b, x) / a;
  }
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double dof) {
  if (!(dof > 0.0)) throw std::domain_error("student_t_cdf: dof must be > 0");
  if (t == 0.0) return 0.5;
  const double x = dof / (dof + t * t);
  const double half_tail = 0.5 * incomplete_beta(0.5 * dof, 0.5, x);
  return t > 0.0 ? 1.0 - half_tail : half_tail;
}

double student_t_pdf(double t, double dof) {
  if (!(dof > 0.0)) throw std::domain_error("student_t_pdf: dof must be > 0");
  const double ln_norm = std::lgamma(0.5 * (dof + 1.0)) - std::lgamma(0.5 * dof) -
                         0.5 * std::log(dof * 3.14159265358979323846);
  return std::exp(ln_norm - 0.5 * (dof + 1.0) * std::log1p(t * t / dof));
}

}  // namespace tailrate
