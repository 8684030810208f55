#include "dyndeg/interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "dyndeg/errors.hpp"

namespace dyndeg {

namespace {

mpfr_prec_t max_prec(const RealInterval& a, const RealInterval& b) {
  return std::max(a.prec(), b.prec());
}

// Sets lo/hi of out from the four endpoint combinations of op.
template <typename Op>
RealInterval corners(const RealInterval& a, const RealInterval& b, Op op) {
  mpfr_prec_t p = max_prec(a, b);
  Mpfr lo(p), hi(p), t(p);
  mpfr_srcptr as[2] = {a.lo(), a.hi()};
  mpfr_srcptr bs[2] = {b.lo(), b.hi()};
  bool first = true;
  for (mpfr_srcptr x : as) {
    for (mpfr_srcptr y : bs) {
      op(t.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), lo.get())) mpfr_set(lo.get(), t.get(), MPFR_RNDD);
      op(t.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), hi.get())) mpfr_set(hi.get(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return RealInterval(std::move(lo), std::move(hi));
}

}  // namespace

Dyadic Dyadic::from_decimal_digits(int digits) {
  if (digits < 0) throw std::invalid_argument("digits must be nonnegative");
  if (digits == 0) return pow2(0);
  Int ten_d;
  mpz_ui_pow_ui(ten_d.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Int m1 = ten_d - 1;
  long e = static_cast<long>(mpz_sizeinbase(m1.get_mpz_t(), 2));
  return pow2(-e);
}

Mpfr Dyadic::to_mpfr() const {
  Mpfr out(exact_bits(mant));
  mpfr_set_z(out.get(), mant.get_mpz_t(), MPFR_RNDN);
  mpfr_mul_2si(out.get(), out.get(), exp, MPFR_RNDN);
  return out;
}

std::string Dyadic::to_string() const { return mant.get_str() + "*2^" + std::to_string(exp); }

mpfr_prec_t precision_cap() {
  if (const char* env = std::getenv("DYNDEG_PRECISION_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= MPFR_PREC_MIN) return static_cast<mpfr_prec_t>(v);
  }
  return kDefaultPrecisionCap;
}

mpfr_prec_t exact_bits(const Int& v) {
  std::size_t b = mpz_sizeinbase(v.get_mpz_t(), 2);
  return static_cast<mpfr_prec_t>(std::max<std::size_t>(b, 2));
}

std::string format_mpfr(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*R*g", digits, rnd, x) < 0) {
    throw std::runtime_error("mpfr_asprintf failed");
  }
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

RealInterval::RealInterval(Mpfr lo, Mpfr hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_.prec() != lo_.prec()) {
    Mpfr h(lo_.prec());
    mpfr_set(h.get(), hi_.get(), MPFR_RNDU);
    hi_ = std::move(h);
  }
  if (mpfr_nan_p(lo_.get()) || mpfr_nan_p(hi_.get()) || mpfr_greater_p(lo_.get(), hi_.get())) {
    throw std::logic_error("RealInterval: invalid endpoints");
  }
}

RealInterval RealInterval::from_int(const Int& v, mpfr_prec_t prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_set_z(lo.get(), v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.get(), v.get_mpz_t(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RealInterval RealInterval::from_long(long v, mpfr_prec_t prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_set_si(lo.get(), v, MPFR_RNDD);
  mpfr_set_si(hi.get(), v, MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RealInterval RealInterval::from_ratio(const Int& p, const Int& q, mpfr_prec_t prec) {
  if (sgn(q) == 0) throw std::invalid_argument("from_ratio: zero denominator");
  mpq_class r(p, q);
  r.canonicalize();
  Mpfr lo(prec), hi(prec);
  mpfr_set_q(lo.get(), r.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi.get(), r.get_mpq_t(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RealInterval RealInterval::from_dyadic(const Dyadic& d, mpfr_prec_t prec) {
  Mpfr exact = d.to_mpfr();
  Mpfr lo(prec), hi(prec);
  mpfr_set(lo.get(), exact.get(), MPFR_RNDD);
  mpfr_set(hi.get(), exact.get(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RealInterval RealInterval::from_decimal(const std::string& s, mpfr_prec_t prec) {
  Mpfr lo(prec), hi(prec);
  if (mpfr_set_str(lo.get(), s.c_str(), 10, MPFR_RNDD) != 0) {
    throw std::invalid_argument("from_decimal: bad literal " + s);
  }
  mpfr_set_str(hi.get(), s.c_str(), 10, MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RealInterval RealInterval::hull(const RealInterval& a, const RealInterval& b) {
  mpfr_prec_t p = max_prec(a, b);
  Mpfr lo(p), hi(p);
  mpfr_min(lo.get(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_max(hi.get(), a.hi(), b.hi(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RealInterval RealInterval::symmetric(mpfr_srcptr r, mpfr_prec_t prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_neg(lo.get(), r, MPFR_RNDD);
  mpfr_set(hi.get(), r, MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RealInterval RealInterval::pi(mpfr_prec_t prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

bool RealInterval::contains(const RealInterval& o) const {
  return mpfr_lessequal_p(lo(), o.lo()) && mpfr_lessequal_p(o.hi(), hi());
}

bool RealInterval::contains(mpfr_srcptr x) const {
  return mpfr_lessequal_p(lo(), x) && mpfr_lessequal_p(x, hi());
}

bool RealInterval::contains_decimal(const std::string& s) const {
  mpfr_prec_t p = std::max<mpfr_prec_t>(prec(), 64) + 4 * static_cast<mpfr_prec_t>(s.size()) + 64;
  return contains(from_decimal(s, p));
}

namespace {

// Enclosures of s and 10^-k at a precision comfortably above both inputs.
std::pair<RealInterval, RealInterval> decimal_and_ulp(const RealInterval& x, const std::string& s) {
  mpfr_prec_t p = std::max<mpfr_prec_t>(x.prec(), 64) + 4 * static_cast<mpfr_prec_t>(s.size()) + 64;
  std::size_t dot = s.find('.');
  unsigned long k = dot == std::string::npos ? 0 : static_cast<unsigned long>(s.size() - dot - 1);
  Int ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, k);
  return {RealInterval::from_decimal(s, p), RealInterval::from_ratio(1, ten, p)};
}

}  // namespace

bool RealInterval::truncates_to(const std::string& s) const {
  auto [v, ulp] = decimal_and_ulp(*this, s);
  RealInterval top = v + ulp;
  return mpfr_greaterequal_p(lo(), v.hi()) && mpfr_lessequal_p(hi(), top.lo());
}

bool RealInterval::rounds_near(const std::string& s) const {
  auto [v, ulp] = decimal_and_ulp(*this, s);
  RealInterval bottom = v - ulp, top = v + ulp;
  return mpfr_greaterequal_p(lo(), bottom.hi()) && mpfr_lessequal_p(hi(), top.lo());
}

bool RealInterval::disjoint(const RealInterval& o) const {
  return mpfr_less_p(hi(), o.lo()) || mpfr_less_p(o.hi(), lo());
}

bool RealInterval::certainly_less(const RealInterval& o) const { return mpfr_less_p(hi(), o.lo()); }

Mpfr RealInterval::width() const {
  Mpfr w(prec());
  mpfr_sub(w.get(), hi(), lo(), MPFR_RNDU);
  return w;
}

Mpfr RealInterval::mag() const {
  Mpfr a(prec()), b(prec());
  mpfr_abs(a.get(), lo(), MPFR_RNDU);
  mpfr_abs(b.get(), hi(), MPFR_RNDU);
  if (mpfr_less_p(a.get(), b.get())) return b;
  return a;
}

Mpfr RealInterval::mig() const {
  Mpfr out(prec());
  if (contains_zero()) return out;
  Mpfr a(prec()), b(prec());
  mpfr_abs(a.get(), lo(), MPFR_RNDD);
  mpfr_abs(b.get(), hi(), MPFR_RNDD);
  return mpfr_less_p(a.get(), b.get()) ? a : b;
}

Mpfr RealInterval::mid() const {
  Mpfr m(prec() + 1);
  mpfr_add(m.get(), lo(), hi(), MPFR_RNDN);
  mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
  return m;
}

RealInterval RealInterval::with_prec(mpfr_prec_t p) const {
  Mpfr l(p), h(p);
  mpfr_set(l.get(), lo(), MPFR_RNDD);
  mpfr_set(h.get(), hi(), MPFR_RNDU);
  return {std::move(l), std::move(h)};
}

RealInterval RealInterval::intersect(const RealInterval& o) const {
  if (disjoint(o)) throw std::logic_error("intersect: disjoint intervals");
  mpfr_prec_t p = max_prec(*this, o);
  Mpfr l(p), h(p);
  mpfr_max(l.get(), lo(), o.lo(), MPFR_RNDD);
  mpfr_min(h.get(), hi(), o.hi(), MPFR_RNDU);
  return {std::move(l), std::move(h)};
}

RealInterval RealInterval::widened(mpfr_srcptr r) const {
  Mpfr l(prec()), h(prec());
  mpfr_sub(l.get(), lo(), r, MPFR_RNDD);
  mpfr_add(h.get(), hi(), r, MPFR_RNDU);
  return {std::move(l), std::move(h)};
}

bool RealInterval::floor_if_unique(Int& out) const {
  Int a, b;
  mpfr_get_z(a.get_mpz_t(), lo(), MPFR_RNDD);
  mpfr_get_z(b.get_mpz_t(), hi(), MPFR_RNDD);
  if (a != b) return false;
  out = a;
  return true;
}

std::string RealInterval::to_string(int digits) const {
  return "[" + lo_string(digits) + ", " + hi_string(digits) + "]";
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  mpfr_prec_t p = max_prec(a, b);
  Mpfr lo(p), hi(p);
  mpfr_add(lo.get(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(hi.get(), a.hi(), b.hi(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  mpfr_prec_t p = max_prec(a, b);
  Mpfr lo(p), hi(p);
  mpfr_sub(lo.get(), a.lo(), b.hi(), MPFR_RNDD);
  mpfr_sub(hi.get(), a.hi(), b.lo(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RealInterval operator-(const RealInterval& a) {
  Mpfr lo(a.prec()), hi(a.prec());
  mpfr_neg(lo.get(), a.hi(), MPFR_RNDD);
  mpfr_neg(hi.get(), a.lo(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  return corners(a, b, [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
    mpfr_mul(r, x, y, rnd);
  });
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
  if (b.contains_zero()) throw PrecisionError("interval division by an interval containing 0");
  return corners(a, b, [](mpfr_ptr r, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) {
    mpfr_div(r, x, y, rnd);
  });
}

RealInterval operator*(const RealInterval& a, const Int& k) {
  Mpfr lo(a.prec()), hi(a.prec());
  if (sgn(k) >= 0) {
    mpfr_mul_z(lo.get(), a.lo(), k.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(hi.get(), a.hi(), k.get_mpz_t(), MPFR_RNDU);
  } else {
    mpfr_mul_z(lo.get(), a.hi(), k.get_mpz_t(), MPFR_RNDD);
    mpfr_mul_z(hi.get(), a.lo(), k.get_mpz_t(), MPFR_RNDU);
  }
  return {std::move(lo), std::move(hi)};
}

bool identical(const RealInterval& a, const RealInterval& b) {
  return a.prec() == b.prec() && mpfr_equal_p(a.lo(), b.lo()) && mpfr_equal_p(a.hi(), b.hi());
}

RealInterval sqr(const RealInterval& a) {
  mpfr_prec_t p = a.prec();
  Mpfr lo(p), hi(p);
  if (mpfr_sgn(a.lo()) >= 0) {
    mpfr_sqr(lo.get(), a.lo(), MPFR_RNDD);
    mpfr_sqr(hi.get(), a.hi(), MPFR_RNDU);
  } else if (mpfr_sgn(a.hi()) <= 0) {
    mpfr_sqr(lo.get(), a.hi(), MPFR_RNDD);
    mpfr_sqr(hi.get(), a.lo(), MPFR_RNDU);
  } else {
    Mpfr m = a.mag();
    mpfr_sqr(hi.get(), m.get(), MPFR_RNDU);
  }
  return {std::move(lo), std::move(hi)};
}

RealInterval sqrt(const RealInterval& a) {
  if (a.is_negative()) throw std::domain_error("sqrt of a negative interval");
  mpfr_prec_t p = a.prec();
  Mpfr lo(p), hi(p);
  if (mpfr_sgn(a.lo()) > 0) mpfr_sqrt(lo.get(), a.lo(), MPFR_RNDD);
  mpfr_sqrt(hi.get(), a.hi(), MPFR_RNDU);
  return {std::move(lo), std::move(hi)};
}

RealInterval pow(const RealInterval& a, unsigned long n) {
  RealInterval result = RealInterval::from_long(1, a.prec());
  RealInterval base = a;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n > 0) base = sqr(base);
  }
  return result;
}

ComplexInterval ComplexInterval::from_ints(const Int& r, const Int& i, mpfr_prec_t prec) {
  return {RealInterval::from_int(r, prec), RealInterval::from_int(i, prec)};
}

RealInterval ComplexInterval::abs_sq() const { return sqr(re) + sqr(im); }

Mpfr ComplexInterval::mag() const {
  Mpfr a = re.mag();
  Mpfr b = im.mag();
  Mpfr out(prec());
  mpfr_sqr(a.get(), a.get(), MPFR_RNDU);
  mpfr_sqr(b.get(), b.get(), MPFR_RNDU);
  mpfr_add(out.get(), a.get(), b.get(), MPFR_RNDU);
  mpfr_sqrt(out.get(), out.get(), MPFR_RNDU);
  return out;
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval operator*(const ComplexInterval& a, const RealInterval& b) {
  return {a.re * b, a.im * b};
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  RealInterval den = b.abs_sq();
  return (a * b.conj()) / den;
}

ComplexInterval operator/(const ComplexInterval& a, const RealInterval& b) {
  return {a.re / b, a.im / b};
}

ComplexInterval mul_gaussian(const Int& x, const Int& y, const ComplexInterval& z) {
  return {z.re * x - z.im * y, z.re * y + z.im * x};
}

}  // namespace dyndeg
