#pragma once

// theta = Arg(zeta) / 2pi: rigorous continued fraction, octant classification
// of j*theta mod 1, n-irregular indices, Phi_n / Psi_n enclosures and
// finite-depth approximation diagnostics.

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "dyndeg/gaussian.hpp"
#include "dyndeg/interval.hpp"
#include "dyndeg/lambda_solver.hpp"

namespace dyndeg {

/// Immutable enclosure of theta. refined() returns a new context, so a
/// context shared between readers never changes underneath them.
class ThetaContext {
 public:
  ThetaContext(const GaussianInt& zeta, mpfr_prec_t precision_bits);

  const GaussianInt& zeta() const { return data_->zeta; }
  const RealInterval& theta() const { return data_->theta; }
  mpfr_prec_t precision_bits() const { return data_->precision_bits; }

  /// Context at a higher precision; nested inside this one.
  ThetaContext refined(mpfr_prec_t precision_bits) const;
  /// Doubles precision; throws PrecisionError past precision_cap().
  ThetaContext doubled() const;

 private:
  struct Data {
    GaussianInt zeta;
    RealInterval theta;
    mpfr_prec_t precision_bits;
  };
  std::shared_ptr<const Data> data_;
};

/// Outward enclosure of Arg(zeta)/2pi in (0, 1). Requires admissible zeta.
ThetaContext theta_interval(const GaussianInt& zeta, mpfr_prec_t precision_bits);

struct Convergent {
  Int m;
  Int n;
};

struct ContinuedFraction {
  std::vector<Int> coefficients;        ///< a_0 .. a_depth
  std::vector<Convergent> convergents;  ///< m_i / n_i for i = 0 .. depth
  ThetaContext context;                 ///< the precision that determined every a_i
  mpfr_prec_t precision_bits() const { return context.precision_bits(); }
};

/// Gauss map in interval arithmetic; refines precision until each floor is
/// unambiguous.
ContinuedFraction cf_expand(const ThetaContext& ctx, std::size_t depth);

struct OctantGamma {
  int octant = 0;
  GammaSymbol gamma = GammaSymbol::MinusTwo;
};

/// Octant k with j*theta mod 1 in (k/8, (k+1)/8), and the gamma it selects.
OctantGamma octant_gamma(const ThetaContext& ctx, unsigned long j);
/// j = 1..count, refining one shared working context as needed.
std::vector<OctantGamma> octant_gammas(const ThetaContext& ctx, unsigned long count);
GammaSymbol gamma_for_octant(int octant);

struct BetaEntry {
  unsigned long i = 0;
  unsigned long j = 0;
  GaussianInt value;
};

struct IrregularityReport {
  unsigned long n = 0;
  unsigned long window_end = 0;  ///< scanned window is (n, window_end]
  std::vector<unsigned long> irregular;
  std::optional<unsigned long> min_offset;         ///< min (j - n)
  std::optional<unsigned long> min_pairwise_gap;   ///< min |j - j'|, j != j'
  std::optional<unsigned long> min_shifted_gap;    ///< min |j - j' - n|, j != j' + n
  std::vector<BetaEntry> beta;                     ///< sorted by (i, j)
};

/// The gamma sequence comes from exact integer argmax (the ground truth);
/// octant_gamma is cross-checked against it in the tests.
IrregularityReport irregular_indices(const ThetaContext& ctx, unsigned long n,
                                     unsigned long window_end);

struct RegularWindowResult {
  unsigned long n = 0;
  mpq_class c;
  unsigned long window_end = 0;  ///< floor(C n)
  std::optional<unsigned long> first_irregular;
  mpq_class epsilon;        ///< 1 / (16 (C + 1))
  Int nearest_m;            ///< integer nearest to n theta
  bool hypothesis = false;  ///< certified |n theta - m| < epsilon / n
  bool passed() const { return !first_irregular.has_value(); }
};

RegularWindowResult regular_window_check(const ThetaContext& ctx, unsigned long n,
                                         const mpq_class& c);

struct ApproximationDiagnostics {
  Int max_coefficient;               ///< max a_i, i >= 1
  RealInterval kappa;                ///< min_{i>=1} n_i |n_i theta - m_i|
  RealInterval delta;                ///< kappa / 192
  mpq_class max_ratio;               ///< max n_{i+1} / n_i, i >= 1
  std::vector<RealInterval> scaled_errors;  ///< n_i |n_i theta - m_i|, i = 0..depth
  bool bounds_certified = false;     ///< every |n_i theta - m_i| < 1/n_i
  bool alternation_certified = false;  ///< sign of m_i - n_i theta alternates
};

ApproximationDiagnostics badly_approximable_diagnostics(const ContinuedFraction& cf);

/// Phi_n(alpha) = (sum_{j<=n} gamma(j) alpha^j) / (1 - alpha^n).
ComplexInterval phi_n_eval(const ThetaContext& ctx, unsigned long n, const ComplexInterval& alpha);

struct PsiValue {
  RealInterval value;          ///< intersection of both routes
  RealInterval via_phi;        ///< 2|1 - alpha^n|^2 Re(Phi - Phi_n)
  RealInterval via_beta;       ///< truncated beta expansion plus tail
  std::size_t beta_terms = 0;  ///< truncation T in i + j <= T
};

/// Throws InconsistencyError if the two routes give disjoint intervals.
PsiValue psi_n_eval(const ThetaContext& ctx, unsigned long n, const ComplexInterval& alpha,
                    const Dyadic& tail_tol);

/// Complex power by repeated squaring.
ComplexInterval pow(const ComplexInterval& z, unsigned long n);

struct LemmaCheck {
  unsigned long n = 0;
  int lambda_digits = 0;  ///< lambda width used, as 10^-digits
  RealInterval re_phi_n;
  PsiValue psi;
  bool re_phi_n_in_unit = false;  ///< certified 0 < Re Phi_n(alpha) < 1
  bool psi_in_unit = false;       ///< certified 0 < Psi_n(alpha) < 1
  bool routes_intersect = false;
  bool certified() const { return re_phi_n_in_unit && psi_in_unit && routes_intersect; }
};

/// Evaluates Re Phi_n(alpha) and Psi_n(alpha), doubling the lambda digits
/// from start_digits until both are certified inside (0, 1) or max_digits
/// is exceeded.
LemmaCheck lemma_check(const GaussianInt& zeta, unsigned long n, int start_digits = 30,
                       int max_digits = 2000);

}  // namespace dyndeg
