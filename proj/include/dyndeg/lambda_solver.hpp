#pragma once

// Certified enclosure of the dynamical degree lambda, the positive root of
// sum_j d_j lambda^-j = 1, together with alpha = zeta / lambda and Phi(alpha).

#include <cstddef>

#include "dyndeg/gaussian.hpp"
#include "dyndeg/interval.hpp"

namespace dyndeg {

struct LambdaSettings {
  mpfr_prec_t initial_precision = 64;
  mpfr_prec_t precision_cap = 0;  ///< 0 means precision_cap()
  std::size_t initial_terms = 32;
};

struct LambdaResult {
  GaussianInt zeta;
  RealInterval lambda;
  Mpfr width;                ///< upper bound on lambda.hi - lambda.lo
  std::size_t n_used = 0;    ///< truncation order of the last decisive evaluation
  mpfr_prec_t precision_bits = 0;
  std::size_t bisections = 0;
};

/// Bisection in t = 1/lambda on exact dyadic points. The sequence of
/// brackets does not depend on target_width, so a smaller target always
/// returns a sub-interval of a larger one.
LambdaResult solve_lambda(const GaussianInt& zeta, const Dyadic& target_width,
                          const LambdaSettings& settings = {});

/// Enclosure of sum_{j>=1} d_j lambda^-j over the whole interval lambda,
/// using the first n terms plus the sqrt(5) geometric tail.
/// Requires lambda.lo > |zeta|.
RealInterval star_enclosure(const GaussianInt& zeta, const RealInterval& lambda, std::size_t n);

/// alpha = zeta / lambda, componentwise.
ComplexInterval alpha_of(const GaussianInt& zeta, const RealInterval& lambda);

struct PhiValue {
  ComplexInterval value;
  std::size_t n_terms = 0;
  Mpfr tail;  ///< widening applied to each component
};

/// Phi(alpha) = sum_j gamma(j) alpha^j with exactly n terms plus the
/// sqrt(20) tail bound. n = 0 gives the bare tail box.
PhiValue phi_eval_terms(const GaussianInt& zeta, const ComplexInterval& alpha, std::size_t n);

/// As above with n chosen so the tail widening is at most tail_tol.
PhiValue phi_eval(const GaussianInt& zeta, const ComplexInterval& alpha, const Dyadic& tail_tol);

/// sqrt(c) * s^{n+1} / (1 - s), rounded up; s must be < 1.
Mpfr geometric_tail(unsigned long c, mpfr_srcptr s, std::size_t n);

/// Smallest n with sqrt(c) s^{n+1}/(1-s) <= tol.
std::size_t terms_for_tail(mpfr_srcptr s, unsigned long c, const Dyadic& tol);

}  // namespace dyndeg
