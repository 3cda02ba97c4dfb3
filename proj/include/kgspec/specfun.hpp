#pragma once

// Real-argument special functions used by the closed-form wavefunctions.

namespace kgspec::specfun {

struct JacobiParams {
  int degree = 0;
  double alpha = 0.0;
  double beta = 0.0;

  /// alpha > -1 and beta > -1, the range where P_n^{(alpha,beta)} is an
  /// orthogonal family on [-1, 1]. Evaluation does not require it.
  bool classical_range() const noexcept { return alpha > -1.0 && beta > -1.0; }
};

/// Gamma function for real x. Lanczos approximation (g = 7, 9 terms) with
/// reflection below 0.5. Throws Error(pole) at non-positive integers.
double gamma_real(double x);

/// Generalized binomial coefficient binom(top, k) = top (top-1) ... (top-k+1) / k!
/// for integer k >= 0 and any real top.
double binomial(double top, int k);

/// P_n^{(alpha,beta)}(x) by the three-term recurrence; falls back to the
/// explicit binomial sum when alpha + beta makes a recurrence denominator
/// vanish. Normalized so that P_n(1) = binom(n + alpha, n).
double jacobi_poly(const JacobiParams& p, double x);

/// 2F1(-n, b; c; x) as the finite sum over k = 0..n, accumulated with
/// compensated summation. Throws Error(parameter) if (c)_k vanishes for a
/// retained term.
double hyp2f1_terminating(int n, double b, double c, double x);

} // namespace kgspec::specfun
