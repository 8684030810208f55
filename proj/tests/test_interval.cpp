#include <doctest.h>

#include <cstdlib>

#include "dyndeg/errors.hpp"
#include "dyndeg/interval.hpp"
#include "support/gen.hpp"

using namespace dyndeg;

namespace {

bool contains_rational(const RealInterval& x, const mpq_class& q) {
  mpq_class lo, hi;
  mpfr_get_q(lo.get_mpq_t(), x.lo());
  mpfr_get_q(hi.get_mpq_t(), x.hi());
  return lo <= q && q <= hi;
}

mpq_class random_rational(testgen::Rng& r) {
  mpq_class q(r.range(-100000, 100000), r.range(1, 100000));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("dyadic widths") {
  for (int d : {1, 5, 12, 30, 100}) {
    Dyadic w = Dyadic::from_decimal_digits(d);
    Mpfr v = w.to_mpfr();
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v.get());
    mpz_class ten;
    mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(d));
    mpq_class bound(1, ten);
    CHECK(q <= bound);
    CHECK(2 * q > bound);
  }
}

TEST_CASE("decimal literals are enclosed") {
  RealInterval x = RealInterval::from_decimal("0.1", 64);
  CHECK(x.contains_decimal("0.1"));
  CHECK_FALSE(x.contains_decimal("0.1000001"));
  CHECK(contains_rational(x, mpq_class(1, 10)));
  CHECK_THROWS(RealInterval::from_decimal("zero point one", 64));
}

TEST_CASE("arithmetic encloses exact rational results") {
  testgen::Rng rng(2024);
  for (int k = 0; k < 2000; ++k) {
    mpq_class a = random_rational(rng), b = random_rational(rng);
    const mpfr_prec_t p = 24 + rng.range(0, 100);
    RealInterval x = RealInterval::from_ratio(a.get_num(), a.get_den(), p);
    RealInterval y = RealInterval::from_ratio(b.get_num(), b.get_den(), p);
    REQUIRE(contains_rational(x + y, a + b));
    REQUIRE(contains_rational(x - y, a - b));
    REQUIRE(contains_rational(x * y, a * b));
    REQUIRE(contains_rational(sqr(x), a * a));
    if (b != 0) REQUIRE(contains_rational(x / y, a / b));
    REQUIRE(contains_rational(x * Int(7), a * 7));
  }
}

TEST_CASE("complex products enclose exact values") {
  testgen::Rng rng(7);
  for (int k = 0; k < 500; ++k) {
    long a = rng.range(-50, 50), b = rng.range(-50, 50), c = rng.range(-50, 50), d = rng.range(-50, 50);
    ComplexInterval x = ComplexInterval::from_ints(a, b, 53);
    ComplexInterval y = ComplexInterval::from_ints(c, d, 53);
    ComplexInterval p = x * y;
    REQUIRE(contains_rational(p.re, mpq_class(a * c - b * d)));
    REQUIRE(contains_rational(p.im, mpq_class(a * d + b * c)));
    ComplexInterval g = mul_gaussian(a, b, y);
    REQUIRE(contains_rational(g.re, mpq_class(a * c - b * d)));
    REQUIRE(contains_rational(x.abs_sq(), mpq_class(a * a + b * b)));
  }
}

TEST_CASE("floor decisions and division") {
  Int q;
  CHECK(RealInterval::from_ratio(7, 2, 64).floor_if_unique(q));
  CHECK(q == 3);
  CHECK(RealInterval::from_ratio(-7, 2, 64).floor_if_unique(q));
  CHECK(q == -4);
  RealInterval straddle = RealInterval::hull(RealInterval::from_ratio(19, 10, 64), RealInterval::from_ratio(21, 10, 64));
  CHECK_FALSE(straddle.floor_if_unique(q));
  RealInterval around_zero = RealInterval::hull(RealInterval::from_long(-1, 64), RealInterval::from_long(1, 64));
  CHECK_THROWS_AS(RealInterval::from_long(1, 64) / around_zero, PrecisionError);
}

TEST_CASE("pi and square roots") {
  RealInterval pi = RealInterval::pi(200);
  CHECK(pi.rounds_near("3.14159265358979323846264338327950288"));
  CHECK(pi.truncates_to("3.1415926535897932384626433832795028"));
  CHECK_FALSE(pi.truncates_to("3.1415926535897932384626433832795029"));
  RealInterval r = sqrt(RealInterval::from_long(2, 128));
  CHECK(r.rounds_near("1.41421356237309504880168872420969807"));
  CHECK_FALSE(r.rounds_near("1.41421356237309504880168872420971"));
  CHECK(pow(RealInterval::from_long(3, 64), 5).contains_decimal("243"));
}

TEST_CASE("precision cap environment override") {
  ::setenv("DYNDEG_PRECISION_CAP", "4096", 1);
  CHECK(precision_cap() == 4096);
  ::setenv("DYNDEG_PRECISION_CAP", "not a number", 1);
  CHECK(precision_cap() == kDefaultPrecisionCap);
  ::unsetenv("DYNDEG_PRECISION_CAP");
  CHECK(precision_cap() == kDefaultPrecisionCap);
}
