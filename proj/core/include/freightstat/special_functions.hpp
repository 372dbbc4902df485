#pragma once

namespace freightstat {

/// Standard normal CDF, evaluated through the complementary error
/// function: Phi(z) = erfc(-z/sqrt(2))/2. Absolute error below 1e-9
/// over the whole real line.
double std_normal_cdf(double z);

/// Standard normal density.
double std_normal_pdf(double z);

/// Regularized upper incomplete gamma function Q(a, x), a > 0, x >= 0.
/// Series expansion for x < a+1, continued fraction otherwise.
double regularized_gamma_q(double a, double x);

/// Upper-tail probability of a chi-square variate: P(X >= x) with df
/// degrees of freedom. Q(df/2, x/2).
double chi_square_upper_tail(double x, int df);

}  // namespace freightstat
