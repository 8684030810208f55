#include "dyndeg/lambda_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "dyndeg/errors.hpp"

namespace dyndeg {

namespace {

constexpr std::size_t kMaxTerms = std::size_t{1} << 20;
constexpr long kBracketMargin = 10;  // t_hi = (1 - 2^-10) / |zeta|

// Upper bound on |zeta| at the given precision.
Mpfr abs_upper(const GaussianInt& zeta, mpfr_prec_t prec) {
  Mpfr r(prec);
  Int n = zeta.norm_sq();
  mpfr_set_z(r.get(), n.get_mpz_t(), MPFR_RNDU);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDU);
  return r;
}

// F_N(t) = sum_{j<=N} d_j t^j by Horner over a nonnegative interval t.
RealInterval partial_sum(const std::vector<Int>& d, std::size_t n, const RealInterval& t) {
  mpfr_prec_t p = t.prec();
  if (n == 0) return RealInterval(p);
  RealInterval acc = RealInterval::from_int(d[n - 1], p);
  for (std::size_t j = n - 1; j >= 1; --j) {
    acc = acc * t + RealInterval::from_int(d[j - 1], p);
  }
  return acc * t;
}

// Exact dyadic num / 2^k.
struct DyadicPoint {
  Int num;
  unsigned long k = 0;

  RealInterval enclose(mpfr_prec_t prec) const {
    return RealInterval::from_dyadic({num, -static_cast<long>(k)}, prec);
  }
};

enum class Side { Below, Above, Undecided };

struct Classifier {
  const GaussianInt& zeta;
  std::vector<Int> d;
  std::size_t n;
  mpfr_prec_t prec;
  Mpfr zabs;

  void ensure_terms() {
    if (d.size() < n) d = d_sequence(zeta, n).d.values;
  }

  Mpfr tail_at(const RealInterval& t) const {
    Mpfr r(prec);
    mpfr_mul(r.get(), zabs.get(), t.hi(), MPFR_RNDU);
    return geometric_tail(5, r.get(), n);
  }

  // Which side of the root t lies on, plus the bounds used to decide.
  // tail_dominant reports whether the tail bound exceeds the width of F_N.
  Side classify(const DyadicPoint& pt, Mpfr& f_lo, Mpfr& f_hi, bool& tail_dominant) {
    ensure_terms();
    RealInterval t = pt.enclose(prec);
    RealInterval f = partial_sum(d, n, t);
    Mpfr tail = tail_at(t);
    Mpfr w = f.width();
    tail_dominant = mpfr_greater_p(tail.get(), w.get());
    f_lo = Mpfr(prec);
    f_hi = Mpfr(prec);
    mpfr_set(f_lo.get(), f.lo(), MPFR_RNDD);
    mpfr_add(f_hi.get(), f.hi(), tail.get(), MPFR_RNDU);
    if (mpfr_cmp_ui(f_lo.get(), 1) > 0) return Side::Above;
    if (mpfr_cmp_ui(f_hi.get(), 1) < 0) return Side::Below;
    return Side::Undecided;
  }
};

}  // namespace

Mpfr geometric_tail(unsigned long c, mpfr_srcptr s, std::size_t n) {
  mpfr_prec_t p = std::max<mpfr_prec_t>(mpfr_get_prec(s), 64);
  if (mpfr_cmp_ui(s, 1) >= 0 || mpfr_sgn(s) < 0) {
    throw PrecisionError("geometric tail needs 0 <= s < 1");
  }
  Mpfr out(p), den(p);
  mpfr_pow_ui(out.get(), s, static_cast<unsigned long>(n) + 1, MPFR_RNDU);
  mpfr_ui_sub(den.get(), 1, s, MPFR_RNDD);
  mpfr_div(out.get(), out.get(), den.get(), MPFR_RNDU);
  Mpfr root(p);
  mpfr_set_ui(root.get(), c, MPFR_RNDU);
  mpfr_sqrt(root.get(), root.get(), MPFR_RNDU);
  mpfr_mul(out.get(), out.get(), root.get(), MPFR_RNDU);
  return out;
}

std::size_t terms_for_tail(mpfr_srcptr s, unsigned long c, const Dyadic& tol) {
  Mpfr t = tol.to_mpfr();
  if (mpfr_sgn(t.get()) <= 0) throw std::invalid_argument("tail tolerance must be positive");
  mpfr_prec_t p = std::max<mpfr_prec_t>(mpfr_get_prec(s), 64);
  Mpfr term = geometric_tail(c, s, 0);
  Mpfr sv(p);
  mpfr_set(sv.get(), s, MPFR_RNDU);
  std::size_t n = 0;
  while (mpfr_greater_p(term.get(), t.get())) {
    if (++n > kMaxTerms) throw PrecisionError("tail tolerance needs too many terms");
    mpfr_mul(term.get(), term.get(), sv.get(), MPFR_RNDU);
  }
  return n;
}

LambdaResult solve_lambda(const GaussianInt& zeta, const Dyadic& target_width,
                          const LambdaSettings& settings) {
  require_admissible(zeta);
  Mpfr target = target_width.to_mpfr();
  if (mpfr_sgn(target.get()) <= 0) throw std::invalid_argument("target width must be positive");
  mpfr_prec_t cap = settings.precision_cap > 0 ? settings.precision_cap : precision_cap();
  mpfr_prec_t prec = std::max<mpfr_prec_t>(settings.initial_precision, 64);
  if (prec > cap) throw PrecisionError("initial precision exceeds the precision cap");

  const std::size_t initial_terms = std::max<std::size_t>(settings.initial_terms, 1);
  Classifier cls{zeta, {}, initial_terms, prec, abs_upper(zeta, 64)};

  // Initial bracket as exact dyadics over a common denominator 2^k.
  DyadicPoint lo{Int(1), 64};
  DyadicPoint hi;
  {
    Mpfr th(64);
    mpfr_ui_div(th.get(), 1, cls.zabs.get(), MPFR_RNDD);
    Mpfr shrink(64);
    mpfr_set_ui(shrink.get(), 1, MPFR_RNDN);
    mpfr_div_2ui(shrink.get(), shrink.get(), kBracketMargin, MPFR_RNDN);
    mpfr_ui_sub(shrink.get(), 1, shrink.get(), MPFR_RNDN);
    mpfr_mul(th.get(), th.get(), shrink.get(), MPFR_RNDD);
    Int m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), th.get());
    if (e > -64) {
      hi = {m << static_cast<unsigned long>(e + 64), 64};
    } else {
      unsigned long k = static_cast<unsigned long>(-e);
      lo = {Int(1) << (k - 64), k};
      hi = {m, k};
    }
  }

  auto decide = [&](const DyadicPoint& pt, Mpfr& f_lo, Mpfr& f_hi) {
    for (;;) {
      cls.prec = prec;
      bool tail_dominant = false;
      Side s = cls.classify(pt, f_lo, f_hi, tail_dominant);
      if (s != Side::Undecided) return s;
      if (tail_dominant) {
        if (cls.n * 2 > kMaxTerms) throw PrecisionError("lambda truncation order exceeded");
        cls.n *= 2;
        continue;
      }
      if (prec * 2 > cap) {
        throw PrecisionError("lambda bisection undecided at the precision cap (" +
                             std::to_string(cap) + " bits)");
      }
      prec *= 2;
    }
  };

  Mpfr flo_lo, flo_hi, fhi_lo, fhi_hi;
  if (decide(lo, flo_lo, flo_hi) != Side::Below ||
      decide(hi, fhi_lo, fhi_hi) != Side::Above) {
    throw std::logic_error("solve_lambda: initial bracket does not enclose the root");
  }

  LambdaResult res;
  res.zeta = zeta;
  auto bracket_lambda = [&]() {
    RealInterval tl = lo.enclose(prec);
    RealInterval th = hi.enclose(prec);
    Mpfr l(prec), h(prec);
    mpfr_ui_div(l.get(), 1, th.hi(), MPFR_RNDD);
    mpfr_ui_div(h.get(), 1, tl.lo(), MPFR_RNDU);
    return RealInterval(std::move(l), std::move(h));
  };

  for (;;) {
    RealInterval lam = bracket_lambda();
    Mpfr w = lam.width();
    if (mpfr_lessequal_p(w.get(), target.get())) {
      res.lambda = std::move(lam);
      res.width = std::move(w);
      break;
    }
    // Keep t exactly representable with some headroom.
    while (static_cast<mpfr_prec_t>(hi.k) + 32 > prec) {
      if (prec * 2 > cap) {
        throw PrecisionError("target width needs more than the precision cap (" +
                             std::to_string(cap) + " bits)");
      }
      prec *= 2;
    }
    // N restarts from its initial value each step and doubles while the
    // worst tail on the bracket exceeds a quarter of the tracked variation
    // of F across it.
    cls.n = initial_terms;
    Mpfr variation(prec);
    mpfr_sub(variation.get(), fhi_lo.get(), flo_hi.get(), MPFR_RNDD);
    mpfr_div_2ui(variation.get(), variation.get(), 2, MPFR_RNDD);
    for (;;) {
      cls.prec = prec;
      Mpfr tail = cls.tail_at(hi.enclose(prec));
      if (!mpfr_greater_p(tail.get(), variation.get())) break;
      if (cls.n * 2 > kMaxTerms) throw PrecisionError("lambda truncation order exceeded");
      cls.n *= 2;
    }
    DyadicPoint mid{lo.num + hi.num, hi.k + 1};
    lo = {lo.num << 1, hi.k + 1};
    hi = {hi.num << 1, hi.k + 1};
    Mpfr m_lo, m_hi;
    if (decide(mid, m_lo, m_hi) == Side::Above) {
      hi = std::move(mid);
      fhi_lo = std::move(m_lo);
      fhi_hi = std::move(m_hi);
    } else {
      lo = std::move(mid);
      flo_lo = std::move(m_lo);
      flo_hi = std::move(m_hi);
    }
    ++res.bisections;
  }

  res.n_used = cls.n;
  res.precision_bits = prec;
  Int nsq = zeta.norm_sq();
  Mpfr lo2(prec);
  mpfr_sqr(lo2.get(), res.lambda.lo(), MPFR_RNDD);
  if (mpfr_cmp_z(lo2.get(), nsq.get_mpz_t()) <= 0) {
    throw std::logic_error("solve_lambda: enclosure does not exceed |zeta|");
  }
  return res;
}

RealInterval star_enclosure(const GaussianInt& zeta, const RealInterval& lambda, std::size_t n) {
  mpfr_prec_t p = lambda.prec();
  RealInterval one = RealInterval::from_long(1, p);
  RealInterval t = one / lambda;
  std::vector<Int> d = d_sequence(zeta, n).d.values;
  RealInterval f = partial_sum(d, n, t);
  Mpfr zabs = abs_upper(zeta, p);
  Mpfr r(p);
  mpfr_mul(r.get(), zabs.get(), t.hi(), MPFR_RNDU);
  Mpfr tail = geometric_tail(5, r.get(), n);
  Mpfr hi(p);
  mpfr_add(hi.get(), f.hi(), tail.get(), MPFR_RNDU);
  Mpfr lo(p);
  mpfr_set(lo.get(), f.lo(), MPFR_RNDD);
  return {std::move(lo), std::move(hi)};
}

ComplexInterval alpha_of(const GaussianInt& zeta, const RealInterval& lambda) {
  mpfr_prec_t p = lambda.prec();
  return {RealInterval::from_int(zeta.re, p) / lambda, RealInterval::from_int(zeta.im, p) / lambda};
}

PhiValue phi_eval_terms(const GaussianInt& zeta, const ComplexInterval& alpha, std::size_t n) {
  Mpfr s = alpha.mag();
  if (mpfr_cmp_ui(s.get(), 1) >= 0) throw std::invalid_argument("phi_eval: sup|alpha| must be < 1");
  mpfr_prec_t p = alpha.prec();
  PhiValue out;
  out.n_terms = n;
  out.tail = geometric_tail(20, s.get(), n);
  ComplexInterval acc(p);
  if (n > 0) {
    std::vector<GammaSymbol> gamma = gamma_sequence(zeta, n);
    auto term = [&](std::size_t j) {
      GaussianInt g = to_gaussian(gamma[j - 1]);
      return ComplexInterval::from_ints(g.re, g.im, p);
    };
    acc = term(n);
    for (std::size_t j = n - 1; j >= 1; --j) acc = acc * alpha + term(j);
    acc = acc * alpha;
  }
  out.value = acc.widened(out.tail.get());
  return out;
}

PhiValue phi_eval(const GaussianInt& zeta, const ComplexInterval& alpha, const Dyadic& tail_tol) {
  Mpfr s = alpha.mag();
  if (mpfr_cmp_ui(s.get(), 1) >= 0) throw std::invalid_argument("phi_eval: sup|alpha| must be < 1");
  return phi_eval_terms(zeta, alpha, terms_for_tail(s.get(), 20, tail_tol));
}

}  // namespace dyndeg
