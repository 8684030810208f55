#include "dyndeg/diophantine.hpp"

#include <algorithm>
#include <stdexcept>

#include "dyndeg/errors.hpp"

namespace dyndeg {

namespace {

RealInterval compute_theta(const GaussianInt& zeta, mpfr_prec_t prec) {
  Mpfr a(exact_bits(zeta.re)), b(exact_bits(zeta.im));
  mpfr_set_z(a.get(), zeta.re.get_mpz_t(), MPFR_RNDN);
  mpfr_set_z(b.get(), zeta.im.get_mpz_t(), MPFR_RNDN);
  Mpfr lo(prec), hi(prec);
  mpfr_atan2(lo.get(), b.get(), a.get(), MPFR_RNDD);
  mpfr_atan2(hi.get(), b.get(), a.get(), MPFR_RNDU);
  RealInterval angle(std::move(lo), std::move(hi));
  RealInterval two_pi = RealInterval::pi(prec) * Int(2);
  RealInterval theta = angle / two_pi;
  if (sgn(zeta.im) < 0) theta = theta + RealInterval::from_long(1, prec);
  return theta;
}

RealInterval abs_of(const RealInterval& x) {
  if (mpfr_sgn(x.lo()) >= 0) return x;
  if (mpfr_sgn(x.hi()) <= 0) return -x;
  Mpfr m = x.mag();
  return RealInterval(Mpfr(x.prec()), std::move(m));
}

RealInterval min_of(const RealInterval& a, const RealInterval& b) {
  mpfr_prec_t p = std::max(a.prec(), b.prec());
  Mpfr lo(p), hi(p);
  mpfr_min(lo.get(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_min(hi.get(), a.hi(), b.hi(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

// Attempts the expansion at a fixed precision.
std::optional<std::vector<Int>> expand_at(const RealInterval& theta, std::size_t depth) {
  std::vector<Int> a;
  RealInterval x = theta;
  RealInterval one = RealInterval::from_long(1, theta.prec());
  Int q;
  if (!x.floor_if_unique(q)) return std::nullopt;
  a.push_back(q);
  x = x - RealInterval::from_int(q, theta.prec());
  for (std::size_t i = 1; i <= depth; ++i) {
    if (x.contains_zero()) return std::nullopt;
    x = one / x;
    if (!x.floor_if_unique(q)) return std::nullopt;
    a.push_back(q);
    x = x - RealInterval::from_int(q, theta.prec());
  }
  return a;
}

std::optional<OctantGamma> octant_at(const RealInterval& theta, unsigned long j) {
  mpfr_prec_t p = theta.prec();
  RealInterval y = theta * Int(j);
  Int whole;
  if (!y.floor_if_unique(whole)) return std::nullopt;
  RealInterval z = (y - RealInterval::from_int(whole, p)) * Int(8);
  Int k;
  if (!z.floor_if_unique(k)) return std::nullopt;
  // Open octant: the lower end must sit strictly above k/8.
  if (mpfr_integer_p(z.lo())) return std::nullopt;
  int octant = static_cast<int>(k.get_si());
  if (octant < 0 || octant > 7) return std::nullopt;
  return OctantGamma{octant, gamma_for_octant(octant)};
}

}  // namespace

ThetaContext::ThetaContext(const GaussianInt& zeta, mpfr_prec_t precision_bits) {
  require_admissible(zeta);
  if (precision_bits < 2) throw std::invalid_argument("theta precision must be at least 2 bits");
  if (precision_bits > precision_cap()) {
    throw PrecisionError("theta precision " + std::to_string(precision_bits) +
                         " exceeds the cap of " + std::to_string(precision_cap()));
  }
  data_ = std::make_shared<const Data>(Data{zeta, compute_theta(zeta, precision_bits), precision_bits});
}

ThetaContext ThetaContext::refined(mpfr_prec_t bits) const {
  if (bits <= precision_bits()) return *this;
  ThetaContext out(zeta(), bits);
  // Intersect so the refined enclosure nests inside this one.
  RealInterval nested = out.theta().intersect(theta().with_prec(bits));
  out.data_ = std::make_shared<const Data>(Data{zeta(), std::move(nested), bits});
  return out;
}

ThetaContext ThetaContext::doubled() const {
  mpfr_prec_t bits = precision_bits() * 2;
  if (bits > precision_cap()) {
    throw PrecisionError("theta refinement reached the precision cap (" +
                         std::to_string(precision_cap()) + " bits)");
  }
  return refined(bits);
}

ThetaContext theta_interval(const GaussianInt& zeta, mpfr_prec_t precision_bits) {
  return ThetaContext(zeta, precision_bits);
}

ContinuedFraction cf_expand(const ThetaContext& ctx, std::size_t depth) {
  ThetaContext c = ctx;
  std::optional<std::vector<Int>> a;
  while (!(a = expand_at(c.theta(), depth))) c = c.doubled();
  ContinuedFraction cf{std::move(*a), {}, c};
  Int m_prev = 1, n_prev = 0;
  Int m_cur = cf.coefficients[0], n_cur = 1;
  cf.convergents.push_back({m_cur, n_cur});
  for (std::size_t i = 1; i <= depth; ++i) {
    Int m_next = cf.coefficients[i] * m_cur + m_prev;
    Int n_next = cf.coefficients[i] * n_cur + n_prev;
    m_prev = std::move(m_cur);
    n_prev = std::move(n_cur);
    m_cur = std::move(m_next);
    n_cur = std::move(n_next);
    cf.convergents.push_back({m_cur, n_cur});
  }
  return cf;
}

GammaSymbol gamma_for_octant(int octant) {
  switch (octant) {
    case 0:
    case 1: return GammaSymbol::OneMinusTwoI;
    case 2: return GammaSymbol::MinusTwoI;
    case 3:
    case 4: return GammaSymbol::MinusTwo;
    case 5: return GammaSymbol::TwoI;
    case 6:
    case 7: return GammaSymbol::OnePlusTwoI;
    default: throw std::out_of_range("octant must be in 0..7");
  }
}

OctantGamma octant_gamma(const ThetaContext& ctx, unsigned long j) {
  if (j == 0) throw std::invalid_argument("octant_gamma: index must be positive");
  ThetaContext c = ctx;
  for (;;) {
    if (auto r = octant_at(c.theta(), j)) return *r;
    c = c.doubled();
  }
}

std::vector<OctantGamma> octant_gammas(const ThetaContext& ctx, unsigned long count) {
  std::vector<OctantGamma> out;
  out.reserve(count);
  ThetaContext c = ctx;
  for (unsigned long j = 1; j <= count; ++j) {
    std::optional<OctantGamma> r;
    while (!(r = octant_at(c.theta(), j))) c = c.doubled();
    out.push_back(*r);
  }
  return out;
}

IrregularityReport irregular_indices(const ThetaContext& ctx, unsigned long n,
                                     unsigned long window_end) {
  if (n == 0) throw std::invalid_argument("irregular_indices: n must be positive");
  if (window_end <= n) throw std::invalid_argument("irregular_indices: window_end must exceed n");
  std::vector<GammaSymbol> gamma = gamma_sequence(ctx.zeta(), window_end);
  IrregularityReport rep;
  rep.n = n;
  rep.window_end = window_end;
  for (unsigned long j = n + 1; j <= window_end; ++j) {
    if (gamma[j - 1] == gamma[j - n - 1]) continue;
    rep.irregular.push_back(j);
    GaussianInt delta = to_gaussian(gamma[j - 1]) - to_gaussian(gamma[j - n - 1]);
    rep.beta.push_back({j, 0, delta});
    rep.beta.push_back({0, j, delta.conj()});
    rep.beta.push_back({j, n, -delta});
    rep.beta.push_back({n, j, -delta.conj()});
  }
  std::sort(rep.beta.begin(), rep.beta.end(), [](const BetaEntry& a, const BetaEntry& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  const auto& irr = rep.irregular;
  if (irr.empty()) return rep;
  rep.min_offset = irr.front() - n;
  for (std::size_t k = 1; k < irr.size(); ++k) {
    unsigned long gap = irr[k] - irr[k - 1];
    if (!rep.min_pairwise_gap || gap < *rep.min_pairwise_gap) rep.min_pairwise_gap = gap;
  }
  // min |j - j' - n| over pairs with j' != j - n, via the neighbours of j - n.
  for (unsigned long j : irr) {
    long target = static_cast<long>(j) - static_cast<long>(n);
    auto it = std::lower_bound(irr.begin(), irr.end(), static_cast<unsigned long>(std::max(target, 0L)));
    std::size_t idx = static_cast<std::size_t>(it - irr.begin());
    for (long off = -2; off <= 2; ++off) {
      long pos = static_cast<long>(idx) + off;
      if (pos < 0 || pos >= static_cast<long>(irr.size())) continue;
      long jp = static_cast<long>(irr[static_cast<std::size_t>(pos)]);
      if (jp == target) continue;
      unsigned long gap = static_cast<unsigned long>(std::labs(jp - target));
      if (!rep.min_shifted_gap || gap < *rep.min_shifted_gap) rep.min_shifted_gap = gap;
    }
  }
  return rep;
}

RegularWindowResult regular_window_check(const ThetaContext& ctx, unsigned long n,
                                         const mpq_class& c) {
  if (n == 0) throw std::invalid_argument("regular_window_check: n must be positive");
  if (c < 1) throw std::invalid_argument("regular_window_check: C must be at least 1");
  RegularWindowResult res;
  res.n = n;
  res.c = c;
  Int cn = c.get_num() * Int(n);
  mpz_fdiv_q(cn.get_mpz_t(), cn.get_mpz_t(), c.get_den().get_mpz_t());
  res.window_end = cn.get_ui();
  res.epsilon = mpq_class(1) / (16 * (c + 1));
  res.epsilon.canonicalize();
  if (res.window_end > n) {
    std::vector<GammaSymbol> gamma = gamma_sequence(ctx.zeta(), res.window_end);
    for (unsigned long j = n + 1; j <= res.window_end; ++j) {
      if (gamma[j - 1] != gamma[j - n - 1]) {
        res.first_irregular = j;
        break;
      }
    }
  }
  // Hypothesis |n theta - m| < epsilon / n with m the nearest integer.
  ThetaContext cur = ctx;
  for (;;) {
    mpfr_prec_t p = cur.precision_bits();
    RealInterval y = cur.theta() * Int(n);
    RealInterval half = RealInterval::from_ratio(1, 2, p);
    Int m;
    if ((y + half).floor_if_unique(m)) {
      RealInterval scaled = abs_of(y - RealInterval::from_int(m, p)) * Int(n);
      RealInterval eps = RealInterval::from_ratio(res.epsilon.get_num(), res.epsilon.get_den(), p);
      if (scaled.certainly_less(eps)) {
        res.nearest_m = m;
        res.hypothesis = true;
        return res;
      }
      if (mpfr_greaterequal_p(scaled.lo(), eps.hi())) {
        res.nearest_m = m;
        res.hypothesis = false;
        return res;
      }
    }
    cur = cur.doubled();
  }
}

ApproximationDiagnostics badly_approximable_diagnostics(const ContinuedFraction& cf) {
  if (cf.coefficients.size() < 3) {
    throw std::invalid_argument("badly_approximable_diagnostics: depth must be at least 2");
  }
  const std::size_t depth = cf.coefficients.size() - 1;
  ApproximationDiagnostics d;
  d.max_coefficient = cf.coefficients[1];
  for (std::size_t i = 1; i <= depth; ++i) {
    d.max_coefficient = std::max(d.max_coefficient, cf.coefficients[i],
                                 [](const Int& a, const Int& b) { return a < b; });
  }
  d.max_ratio = mpq_class(cf.convergents[2].n, cf.convergents[1].n);
  for (std::size_t i = 1; i < depth; ++i) {
    mpq_class r(cf.convergents[i + 1].n, cf.convergents[i].n);
    r.canonicalize();
    if (r > d.max_ratio) d.max_ratio = r;
  }
  d.max_ratio.canonicalize();

  // Refine until every error term has a certified sign and bound.
  ThetaContext ctx = cf.context;
  for (;;) {
    mpfr_prec_t p = ctx.precision_bits();
    bool decided = true;
    bool bounds = true;
    bool alternates = true;
    int prev_sign = 0;
    std::vector<RealInterval> scaled;
    for (const Convergent& cv : cf.convergents) {
      RealInterval err = ctx.theta() * cv.n - RealInterval::from_int(cv.m, p);
      if (err.contains_zero()) {
        decided = false;
        break;
      }
      RealInterval s = abs_of(err) * cv.n;
      if (mpfr_cmp_ui(s.hi(), 1) >= 0) {
        if (mpfr_cmp_ui(s.lo(), 1) < 0) {
          decided = false;
          break;
        }
        bounds = false;
      }
      // sign of m_i - n_i theta
      int sign = err.is_positive() ? -1 : 1;
      if (prev_sign != 0 && sign == prev_sign) alternates = false;
      prev_sign = sign;
      scaled.push_back(std::move(s));
    }
    if (decided) {
      d.scaled_errors = std::move(scaled);
      d.bounds_certified = bounds;
      d.alternation_certified = alternates;
      break;
    }
    ctx = ctx.doubled();
  }
  d.kappa = d.scaled_errors[1];
  for (std::size_t i = 2; i <= depth; ++i) d.kappa = min_of(d.kappa, d.scaled_errors[i]);
  d.delta = d.kappa / RealInterval::from_long(192, d.kappa.prec());
  return d;
}

ComplexInterval pow(const ComplexInterval& z, unsigned long n) {
  ComplexInterval result = ComplexInterval::from_ints(1, 0, z.prec());
  ComplexInterval base = z;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

ComplexInterval phi_n_eval(const ThetaContext& ctx, unsigned long n, const ComplexInterval& alpha) {
  if (n == 0) throw std::invalid_argument("phi_n_eval: n must be positive");
  Mpfr s = alpha.mag();
  if (mpfr_cmp_ui(s.get(), 1) >= 0) throw std::invalid_argument("phi_n_eval: sup|alpha| must be < 1");
  const mpfr_prec_t p = alpha.prec();
  std::vector<GammaSymbol> gamma = gamma_sequence(ctx.zeta(), n);
  auto coeff = [&](unsigned long j) {
    GaussianInt g = to_gaussian(gamma[j - 1]);
    return ComplexInterval::from_ints(g.re, g.im, p);
  };
  ComplexInterval acc = coeff(n);
  for (unsigned long j = n - 1; j >= 1; --j) acc = acc * alpha + coeff(j);
  acc = acc * alpha;
  ComplexInterval den = ComplexInterval::from_ints(1, 0, p) - pow(alpha, n);
  return acc / den;
}

PsiValue psi_n_eval(const ThetaContext& ctx, unsigned long n, const ComplexInterval& alpha,
                    const Dyadic& tail_tol) {
  if (n == 0) throw std::invalid_argument("psi_n_eval: n must be positive");
  const mpfr_prec_t p = alpha.prec();
  const GaussianInt& zeta = ctx.zeta();
  PsiValue out;

  // Route (a): 2 |1 - alpha^n|^2 Re(Phi - Phi_n).
  ComplexInterval alpha_n = pow(alpha, n);
  ComplexInterval one_minus = ComplexInterval::from_ints(1, 0, p) - alpha_n;
  PhiValue phi = phi_eval(zeta, alpha, tail_tol);
  ComplexInterval phin = phi_n_eval(ctx, n, alpha);
  out.via_phi = one_minus.abs_sq() * (phi.value.re - phin.re) * Int(2);

  // Route (b): beta expansion over i + j <= T, plus 4 sqrt(20) s^{T+1}/(1-s).
  Mpfr s = alpha.mag();
  const std::size_t t = terms_for_tail(s.get(), 320, tail_tol);
  out.beta_terms = t;
  RealInterval sum = RealInterval::from_long(0, p);
  if (t > n) {
    std::vector<GammaSymbol> gamma = gamma_sequence(zeta, t);
    ComplexInterval alpha_n_bar = alpha_n.conj();
    ComplexInterval pw = alpha_n;
    for (unsigned long j = n + 1; j <= t; ++j) {
      pw = pw * alpha;
      if (gamma[j - 1] == gamma[j - n - 1]) continue;
      GaussianInt delta = to_gaussian(gamma[j - 1]) - to_gaussian(gamma[j - n - 1]);
      ComplexInterval term = mul_gaussian(delta.re, delta.im, pw);
      // beta_{j,0} and beta_{0,j}: 2 Re(delta alpha^j)
      sum = sum + term.re * Int(2);
      // beta_{j,n} and beta_{n,j}: -2 Re(delta alpha^j conj(alpha)^n)
      if (j + n <= t) sum = sum - (term * alpha_n_bar).re * Int(2);
    }
  }
  Mpfr tail = geometric_tail(320, s.get(), t);
  out.via_beta = sum.widened(tail.get());

  if (out.via_phi.disjoint(out.via_beta)) {
    throw InconsistencyError("Psi_n routes disagree: " + out.via_phi.to_string(12) + " vs " +
                             out.via_beta.to_string(12));
  }
  out.value = out.via_phi.intersect(out.via_beta);
  return out;
}

LemmaCheck lemma_check(const GaussianInt& zeta, unsigned long n, int start_digits, int max_digits) {
  require_admissible(zeta);
  LemmaCheck out;
  out.n = n;
  for (int digits = std::max(start_digits, 1);; digits *= 2) {
    const Dyadic width = Dyadic::from_decimal_digits(digits);
    LambdaResult lam = solve_lambda(zeta, width);
    ComplexInterval alpha = alpha_of(zeta, lam.lambda);
    ThetaContext ctx(zeta, std::max<mpfr_prec_t>(lam.precision_bits, 64));
    out.lambda_digits = digits;
    out.re_phi_n = phi_n_eval(ctx, n, alpha).re;
    out.psi = psi_n_eval(ctx, n, alpha, width);
    out.routes_intersect = true;
    out.re_phi_n_in_unit = out.re_phi_n.is_positive() && mpfr_cmp_ui(out.re_phi_n.hi(), 1) < 0;
    out.psi_in_unit = out.psi.value.is_positive() && mpfr_cmp_ui(out.psi.value.hi(), 1) < 0;
    if (out.certified() || digits * 2 > max_digits) return out;
  }
}

}  // namespace dyndeg
