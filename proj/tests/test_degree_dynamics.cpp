#include <doctest.h>

#include "dyndeg/degree_dynamics.hpp"
#include "support/gen.hpp"

using namespace dyndeg;

namespace {

// e_n from the recursion, written against plain vectors.
std::vector<Int> naive_e(const std::vector<Int>& d, std::size_t n) {
  std::vector<Int> e(n + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Int s = d[k - 1];
    for (std::size_t j = 0; j < k; ++j) s += e[j] * d[k - j - 1];
    e[k] = s;
  }
  return e;
}

std::vector<Int> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("truncated series arithmetic") {
  TruncatedIntSeries a(ints({1, 2, 3}), 2);
  TruncatedIntSeries b(ints({4, 5, 6, 7}), 3);
  TruncatedIntSeries p = a * b;
  CHECK(p.order() == 2);
  CHECK(p.coefficients() == ints({4, 13, 28}));
  TruncatedIntSeries s = a + TruncatedIntSeries(ints({1, 1, 1}), 2);
  CHECK(s.coefficients() == ints({2, 3, 4}));
  CHECK((s - a).coefficients() == ints({1, 1, 1}));
}

TEST_CASE("e sequence for 1+2i") {
  MonomialDegrees md = d_sequence({1, 2}, 6);
  DegreeSequence e = e_sequence(md.d, 6);
  CHECK(e.first_index == 0);
  CHECK(e.origin == SequenceOrigin::ComposedE);
  CHECK(e.values == ints({1, 10, 66, 454, 3114, 21368, 146488}));
  CHECK(e_sequence(md.d, 0).values == ints({1}));
}

TEST_CASE("e sequences agree with an independent recursion") {
  const std::vector<GaussianInt> zetas{{1, 2}, {-3, 4}, {2, 1}, {3, 2}};
  for (const auto& z : zetas) {
    MonomialDegrees md = d_sequence(z, 60);
    CHECK(e_sequence(md.d, 60).values == naive_e(md.d.values, 60));
  }
  CHECK(e_sequence(d_sequence({-3, 4}, 3).d, 3).values == ints({1, 16, 224, 2970}));
  CHECK(e_sequence(d_sequence({2, 1}, 3).d, 3).values == ints({1, 8, 54, 352}));
  CHECK(e_sequence(d_sequence({3, 2}, 3).d, 3).values == ints({1, 14, 156, 1682}));
}

TEST_CASE("series identity holds through order 50") {
  for (GaussianInt z : {GaussianInt{1, 2}, GaussianInt{-3, 4}, GaussianInt{2, 1}, GaussianInt{3, 2}}) {
    MonomialDegrees md = d_sequence(z, 50);
    DegreeSequence e = e_sequence(md.d, 50);
    CHECK(series_identity_check(md.d, e, 50) == 50);
  }
}

TEST_CASE("series identity locates a corrupted coefficient") {
  MonomialDegrees md = d_sequence({1, 2}, 30);
  DegreeSequence e = e_sequence(md.d, 30);
  e.values[17] += 1;
  CHECK(series_identity_check(md.d, e, 30) == 16);
  DegreeSequence e1 = e_sequence(md.d, 30);
  e1.values[1] = 11;
  CHECK(series_identity_check(md.d, e1, 30) == 0);
  DegreeSequence e2 = e_sequence(md.d, 30);
  e2.values[1] -= 1;
  CHECK(series_identity_check(md.d, e2, 30) == 0);
}

TEST_CASE("e sequence growth properties") {
  testgen::Rng rng(4242);
  for (int k = 0; k < 15; ++k) {
    GaussianInt z = testgen::admissible(rng, 7);
    const std::size_t n = 30;
    DegreeSequence e = e_sequence(d_sequence(z, n).d, n);
    for (std::size_t m = 0; m < n; ++m) REQUIRE(e.at(m + 1) > e.at(m));
    for (std::size_t a = 0; a <= n; ++a) {
      for (std::size_t b = 0; a + b <= n; ++b) REQUIRE(e.at(a + b) <= e.at(a) * e.at(b));
    }
  }
}

TEST_CASE("topological degree") {
  CHECK(lambda2({1, 2}) == 5);
  CHECK(lambda2({-3, 4}) == 25);
  CHECK(lambda2({1, 0}) == 1);
}
