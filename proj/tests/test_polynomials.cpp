#include <doctest.h>

#include <map>

#include "dyndeg/homopoly.hpp"
#include "dyndeg/kernels.hpp"
#include "dyndeg/modular.hpp"
#include "dyndeg/poly_gcd.hpp"
#include "support/gen.hpp"

using namespace dyndeg;
namespace mp = dyndeg::modp;

namespace {

HomoPoly random_poly(testgen::Rng& r, unsigned degree, int terms, long coeff) {
  std::vector<Term> t;
  for (int k = 0; k < terms; ++k) {
    auto e0 = static_cast<std::uint32_t>(r.range(0, degree));
    auto e1 = static_cast<std::uint32_t>(r.range(0, degree - e0));
    long c = r.range(-coeff, coeff);
    if (c != 0) t.push_back({{e0, e1, degree - e0 - e1}, Int(c)});
  }
  if (t.empty()) t.push_back({{degree, 0, 0}, Int(1)});
  return HomoPoly::from_terms(degree, std::move(t));
}

// Schoolbook product through an ordered map.
HomoPoly naive_product(const HomoPoly& a, const HomoPoly& b) {
  std::map<Exponent, Int> acc;
  for (const Term& x : a.terms()) {
    for (const Term& y : b.terms()) {
      acc[{x.e[0] + y.e[0], x.e[1] + y.e[1], x.e[2] + y.e[2]}] += x.c * y.c;
    }
  }
  std::vector<Term> t;
  for (auto& [e, c] : acc) t.push_back({e, c});
  return HomoPoly::from_terms(a.degree() + b.degree(), std::move(t));
}

ZPoly random_zpoly(testgen::Rng& r, int degree, long coeff) {
  ZPoly f;
  for (int k = 0; k <= degree; ++k) f.push_back(r.range(-coeff, coeff));
  if (sgn(f.back()) == 0) f.back() = 1;
  return f;
}

}  // namespace

TEST_CASE("homogeneous polynomial construction") {
  HomoPoly p = HomoPoly::from_terms(2, {{{1, 1, 0}, Int(3)}, {{2, 0, 0}, Int(1)}, {{1, 1, 0}, Int(-3)}, {{0, 0, 2}, Int(4)}});
  CHECK(p.size() == 2);
  CHECK(p.leading().e == Exponent{2, 0, 0});
  CHECK(p.content() == 1);
  CHECK_THROWS(HomoPoly::from_terms(2, {{{1, 0, 0}, Int(1)}}));
  CHECK(HomoPoly::variable(1).to_string().find("x1") != std::string::npos);
  CHECK(pack(unpack(pack({5, 7, 9}))) == pack({5, 7, 9}));
  HomoPoly q = p.times_monomial({1, 2, 3});
  CHECK(q.degree() == 8);
  CHECK(q.over_monomial({1, 2, 3}) == p);
  CHECK(q.min_exponents() == Exponent{1, 2, 3});
  CHECK(p.scaled(6).divided_by(3) == p.scaled(2));
  CHECK((p - p).is_zero());
  CHECK(p.eval({Int(1), Int(2), Int(3)}) == 1 + 36);
}

TEST_CASE("serial and parallel products agree with a naive oracle") {
  testgen::Rng rng(11);
  for (int k = 0; k < 60; ++k) {
    HomoPoly a = random_poly(rng, static_cast<unsigned>(rng.range(0, 12)), static_cast<int>(rng.range(1, 40)), 1000);
    HomoPoly b = random_poly(rng, static_cast<unsigned>(rng.range(0, 12)), static_cast<int>(rng.range(1, 40)), 1000);
    HomoPoly s = kernels::mul_serial(a, b);
    REQUIRE(s == naive_product(a, b));
    REQUIRE(kernels::mul_parallel(a, b) == s);
  }
  HomoPoly big = pow(random_poly(rng, 3, 8, 9), 6);
  HomoPoly other = pow(random_poly(rng, 4, 10, 9), 4);
  REQUIRE(big.size() * other.size() >= 4096);
  CHECK(kernels::mul_parallel(big, other) == kernels::mul_serial(big, other));
  CHECK(kernels::mul_serial(big, other) == naive_product(big, other));
}

TEST_CASE("exact division") {
  testgen::Rng rng(12);
  for (int k = 0; k < 40; ++k) {
    HomoPoly a = random_poly(rng, static_cast<unsigned>(rng.range(1, 6)), 6, 20);
    HomoPoly b = random_poly(rng, static_cast<unsigned>(rng.range(1, 6)), 6, 20);
    auto q = divide_exact(a * b, b);
    REQUIRE(q.has_value());
    REQUIRE(*q == a);
  }
  HomoPoly x0 = HomoPoly::variable(0), x1 = HomoPoly::variable(1);
  CHECK_FALSE(divide_exact(x0 * x0 + x1 * x1, x0 + x1).has_value());
}

TEST_CASE("modular primitives") {
  const mp::u64 p = (mp::u64{1} << 61) - 1;
  testgen::Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    mp::u64 a = static_cast<mp::u64>(rng.range(1, 1L << 60));
    REQUIRE(mp::mul(a, mp::inv(a, p), p) == 1);
    REQUIRE(mp::pow(a, p - 1, p) == 1);
  }
  for (mp::u64 n = 0; n < 20000; ++n) {
    bool trial = n >= 2;
    for (mp::u64 d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
    REQUIRE(mp::is_prime(n) == trial);
  }
  mp::PrimeSequence seq;
  mp::u64 prev = mp::u64{1} << 62;
  for (int k = 0; k < 5; ++k) {
    mp::u64 q = seq.next();
    CHECK(q < prev);
    CHECK(mp::is_prime(q));
    prev = q;
  }
  CHECK(mp::residue(Int(-1), 7) == 6);
  CHECK(mp::residue(Int("123456789012345678901234567890"), 1000003) ==
        static_cast<mp::u64>(mpz_class(Int("123456789012345678901234567890") % 1000003).get_ui()));
}

TEST_CASE("interpolation and univariate gcd mod p") {
  const mp::u64 p = 1000000007;
  testgen::Rng rng(6);
  for (int k = 0; k < 20; ++k) {
    mp::UPoly f;
    for (int i = 0; i < 12; ++i) f.push_back(static_cast<mp::u64>(rng.range(0, p - 1)));
    mp::trim(f);
    std::vector<mp::u64> xs, ys;
    for (mp::u64 x = 0; x < 12; ++x) {
      xs.push_back(x * 7 + 3);
      ys.push_back(mp::eval(f, x * 7 + 3, p));
    }
    REQUIRE(mp::interpolate(xs, ys, p) == f);
    REQUIRE(mp::Interpolator(xs, p)(ys) == f);
  }
  mp::UPoly c{3, 1};          // X + 3
  mp::UPoly a{1, 0, 1};       // X^2 + 1
  mp::UPoly b{5, 1};          // X + 5
  auto prod = [&](const mp::UPoly& u, const mp::UPoly& v) {
    mp::UPoly out(u.size() + v.size() - 1);
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) out[i + j] = mp::add(out[i + j], mp::mul(u[i], v[j], p), p);
    return out;
  };
  CHECK(mp::gcd(prod(a, c), prod(b, c), p) == c);
  CHECK(mp::degree(mp::UPoly{}) == -1);
}

TEST_CASE("univariate integer gcd") {
  testgen::Rng rng(21);
  for (int k = 0; k < 60; ++k) {
    ZPoly a = random_zpoly(rng, static_cast<int>(rng.range(0, 8)), 30);
    ZPoly b = random_zpoly(rng, static_cast<int>(rng.range(0, 8)), 30);
    ZPoly c = random_zpoly(rng, static_cast<int>(rng.range(0, 5)), 30);
    ZPoly g = gcd(mul(a, c), mul(b, c));
    REQUIRE(divide_exact(g, c).has_value());
    REQUIRE(divide_exact(mul(a, c), g).has_value());
    REQUIRE(divide_exact(mul(b, c), g).has_value());
    ZPoly base = gcd(a, b);
    ZPoly expect = mul(base, c);
    if (sgn(expect.back()) < 0) for (Int& v : expect) v = -v;
    REQUIRE(g == expect);
  }
  CHECK(gcd(ZPoly{Int(6)}, ZPoly{Int(4)}) == ZPoly{Int(2)});
  CHECK(content(ZPoly{Int(6), Int(-9)}) == 3);
}

TEST_CASE("dehomogenize and homogenize round trip") {
  testgen::Rng rng(31);
  for (int k = 0; k < 40; ++k) {
    HomoPoly f = random_poly(rng, static_cast<unsigned>(rng.range(1, 9)), 8, 100);
    if (f.min_exponents()[0] > 0) f = f.over_monomial({f.min_exponents()[0], 0, 0});
    BiPoly b = dehomogenize(f);
    REQUIRE(homogenize(b) == f);
  }
}

TEST_CASE("homogeneous gcd recovers planted factors") {
  testgen::Rng rng(41);
  for (int k = 0; k < 40; ++k) {
    HomoPoly a = random_poly(rng, static_cast<unsigned>(rng.range(1, 5)), 5, 20);
    HomoPoly b = random_poly(rng, static_cast<unsigned>(rng.range(1, 5)), 5, 20);
    HomoPoly c = random_poly(rng, static_cast<unsigned>(rng.range(1, 4)), 4, 20);
    if (rng.coin()) c = c.times_monomial({1, 0, 2});
    HomoPoly g = gcd(a * c, b * c);
    HomoPoly expect = gcd(a, b) * c;
    REQUIRE((g == expect || g == -expect));
    REQUIRE(sgn(g.leading().c) > 0);
  }
  HomoPoly x0 = HomoPoly::variable(0), x1 = HomoPoly::variable(1), x2 = HomoPoly::variable(2);
  CHECK(gcd(x0 * x1, x1 * x2) == x1);
  CHECK(gcd(x0 * x0 - x1 * x1, x0 * x2 + x1 * x2) == x0 + x1);
  CHECK(gcd(x0.scaled(6), x0.scaled(4)) == x0.scaled(2));
}

TEST_CASE("evaluation kernels agree") {
  const mp::u64 p = mp::PrimeSequence().next();
  testgen::Rng rng(51);
  HomoPoly f = pow(random_poly(rng, 3, 9, 1000), 5);
  kernels::ModHomoPoly m = kernels::reduce_mod(f, p);
  std::vector<kernels::ModPoint> pts;
  for (int k = 0; k < 300; ++k) {
    pts.push_back({static_cast<mp::u64>(rng.range(0, 1L << 40)), static_cast<mp::u64>(rng.range(0, 1L << 40)),
                   static_cast<mp::u64>(rng.range(0, 1L << 40))});
  }
  std::vector<mp::u64> s = kernels::eval_many_serial(m, pts, p);
  CHECK(kernels::eval_many_parallel(m, pts, p) == s);
  for (int k = 0; k < 5; ++k) {
    std::array<Int, 3> x{Int(std::to_string(pts[k][0])), Int(std::to_string(pts[k][1])), Int(std::to_string(pts[k][2]))};
    CHECK(mp::residue(f.eval(x), p) == s[k]);
  }

  kernels::ModPoint u = pts[0], v = pts[1];
  mp::UPoly line = kernels::line_restriction_serial(m, u, v, p);
  CHECK(kernels::line_restriction_parallel(m, u, v, p) == line);
  for (mp::u64 t : {0ULL, 1ULL, 12345ULL}) {
    kernels::ModPoint q;
    for (int i = 0; i < 3; ++i) q[i] = mp::add(mp::mul(t, u[i], p), v[i], p);
    CHECK(mp::eval(line, t, p) == kernels::eval_many_serial(m, {q}, p)[0]);
  }

  kernels::ModBiPoly bi;
  for (int i = 0; i < 30; ++i) {
    mp::UPoly row;
    for (int j = 0; j < 25; ++j) row.push_back(static_cast<mp::u64>(rng.range(0, 1L << 50)));
    bi.rows.push_back(row);
  }
  std::vector<mp::u64> ys;
  for (int k = 0; k < 64; ++k) ys.push_back(static_cast<mp::u64>(rng.range(0, 1L << 50)));
  CHECK(kernels::eval_y_many_parallel(bi, ys, p) == kernels::eval_y_many_serial(bi, ys, p));
}
