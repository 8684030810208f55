#pragma once

// Outward-rounded interval arithmetic on MPFR endpoints. Every operation
// passes its rounding mode explicitly; nothing touches global MPFR state
// except the exponent range, which is left at the library default.

#include <mpfr.h>

#include <string>
#include <utility>

#include "dyndeg/bigint.hpp"

namespace dyndeg {

/// Owning handle for one mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Mpfr(const Mpfr& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mpfr(Mpfr&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Mpfr& operator=(const Mpfr& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Mpfr& operator=(Mpfr&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Mpfr() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

/// Exact binary fraction mant * 2^exp.
struct Dyadic {
  Int mant;
  long exp = 0;

  static Dyadic pow2(long e) { return {Int(1), e}; }
  /// Largest power of two not exceeding 10^-digits.
  static Dyadic from_decimal_digits(int digits);

  /// Exact conversion; the precision is chosen to hold mant.
  Mpfr to_mpfr() const;
  /// The same value scaled by 2^k.
  Dyadic shifted(long k) const { return {mant, exp + k}; }
  std::string to_string() const;
};

inline constexpr mpfr_prec_t kDefaultPrecisionCap = 65536;

/// Working-precision ceiling: DYNDEG_PRECISION_CAP if set to a valid
/// integer, otherwise kDefaultPrecisionCap.
mpfr_prec_t precision_cap();

/// Number of bits needed to hold |v| exactly (at least 2).
mpfr_prec_t exact_bits(const Int& v);

/// Decimal rendering of x rounded in direction rnd with `digits` significant digits.
std::string format_mpfr(mpfr_srcptr x, int digits, mpfr_rnd_t rnd);

class RealInterval {
 public:
  explicit RealInterval(mpfr_prec_t prec = 64) : lo_(prec), hi_(prec) {}
  RealInterval(Mpfr lo, Mpfr hi);

  static RealInterval from_int(const Int& v, mpfr_prec_t prec);
  static RealInterval from_long(long v, mpfr_prec_t prec);
  /// Enclosure of p/q.
  static RealInterval from_ratio(const Int& p, const Int& q, mpfr_prec_t prec);
  static RealInterval from_dyadic(const Dyadic& d, mpfr_prec_t prec);
  /// Enclosure of the decimal literal s.
  static RealInterval from_decimal(const std::string& s, mpfr_prec_t prec);
  /// Smallest interval containing both.
  static RealInterval hull(const RealInterval& a, const RealInterval& b);
  /// [-r, r] for r >= 0.
  static RealInterval symmetric(mpfr_srcptr r, mpfr_prec_t prec);
  static RealInterval pi(mpfr_prec_t prec);

  mpfr_srcptr lo() const { return lo_.get(); }
  mpfr_srcptr hi() const { return hi_.get(); }
  mpfr_prec_t prec() const { return lo_.prec(); }

  bool is_positive() const { return mpfr_sgn(lo_.get()) > 0; }
  bool is_negative() const { return mpfr_sgn(hi_.get()) < 0; }
  bool contains_zero() const { return !is_positive() && !is_negative(); }
  bool contains(const RealInterval& o) const;
  bool contains(mpfr_srcptr x) const;
  bool contains_decimal(const std::string& s) const;
  /// Every point lies in [s, s + 10^-k], k = fractional digits of s, so s
  /// is the certified truncation of the enclosed value.
  bool truncates_to(const std::string& s) const;
  /// Every point lies in [s - 10^-k, s + 10^-k].
  bool rounds_near(const std::string& s) const;
  bool disjoint(const RealInterval& o) const;
  /// Certified sup(this) < inf(o).
  bool certainly_less(const RealInterval& o) const;

  /// Upper bound on hi - lo.
  Mpfr width() const;
  /// Upper bound on sup |x|.
  Mpfr mag() const;
  /// Lower bound on inf |x|.
  Mpfr mig() const;
  /// Nearest-rounded midpoint, for display only.
  Mpfr mid() const;

  /// The same enclosure carried at a different precision (outward if shrinking).
  RealInterval with_prec(mpfr_prec_t prec) const;
  /// Intersection; caller checks !disjoint first.
  RealInterval intersect(const RealInterval& o) const;
  /// Widen both ends by r >= 0.
  RealInterval widened(mpfr_srcptr r) const;

  /// floor is constant on the interval; on success stores it in out.
  bool floor_if_unique(Int& out) const;

  std::string lo_string(int digits) const { return format_mpfr(lo(), digits, MPFR_RNDD); }
  std::string hi_string(int digits) const { return format_mpfr(hi(), digits, MPFR_RNDU); }
  std::string to_string(int digits = 20) const;

  friend RealInterval operator+(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator-(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator-(const RealInterval& a);
  friend RealInterval operator*(const RealInterval& a, const RealInterval& b);
  /// Throws PrecisionError when b contains zero.
  friend RealInterval operator/(const RealInterval& a, const RealInterval& b);
  friend RealInterval operator*(const RealInterval& a, const Int& k);
  friend bool identical(const RealInterval& a, const RealInterval& b);

 private:
  Mpfr lo_;
  Mpfr hi_;
};

RealInterval sqr(const RealInterval& a);
RealInterval sqrt(const RealInterval& a);
/// a^n by repeated squaring; even powers use sqr so they stay nonnegative.
RealInterval pow(const RealInterval& a, unsigned long n);

class ComplexInterval {
 public:
  explicit ComplexInterval(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  ComplexInterval(RealInterval r, RealInterval i) : re(std::move(r)), im(std::move(i)) {}

  static ComplexInterval from_ints(const Int& r, const Int& i, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return re.prec(); }
  ComplexInterval conj() const { return {re, -im}; }
  /// Enclosure of |z|^2.
  RealInterval abs_sq() const;
  /// Upper bound on sup |z| over the box.
  Mpfr mag() const;
  /// Widen both components by r >= 0.
  ComplexInterval widened(mpfr_srcptr r) const { return {re.widened(r), im.widened(r)}; }
  bool contains(const ComplexInterval& o) const { return re.contains(o.re) && im.contains(o.im); }

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator*(const ComplexInterval& a, const RealInterval& b);
  /// Division via conj(b)/|b|^2; throws PrecisionError if |b|^2 may vanish.
  friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator/(const ComplexInterval& a, const RealInterval& b);

  RealInterval re;
  RealInterval im;
};

/// (x + iy) * z computed with exact integer x, y.
ComplexInterval mul_gaussian(const Int& x, const Int& y, const ComplexInterval& z);

}  // namespace dyndeg
