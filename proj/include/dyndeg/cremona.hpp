#pragma once

// Plane rational maps as triples of homogeneous integer polynomials:
// the involution g, monomial maps h_Lambda, composition with common-factor
// removal, iterate degrees, and an independent random-line degree check.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dyndeg/gaussian.hpp"
#include "dyndeg/homopoly.hpp"

namespace dyndeg {

struct PlaneRationalMap {
  std::array<HomoPoly, 3> f;
  bool reduced = false;

  unsigned degree() const;
  std::array<Int, 3> eval(const std::array<Int, 3>& x) const;
  /// Compares components only; the reduced flag is bookkeeping.
  friend bool operator==(const PlaneRationalMap& a, const PlaneRationalMap& b) { return a.f == b.f; }
};

/// Caps on composition size; exceeding either raises ResourceExhausted.
struct ResourceBudget {
  unsigned max_degree = 1000;
  std::size_t max_monomials = 10'000'000;
};

PlaneRationalMap identity_map();
/// [x0(x1+x2-x0) : x1(x2+x0-x1) : x2(x0+x1-x2)].
PlaneRationalMap g_map();
/// Homogenized y -> (y1^a11 y2^a12, y1^a21 y2^a22), y_k = x_k / x0.
PlaneRationalMap monomial_map(const IntMatrix2x2& m);
/// Linear map with integer matrix rows: component i = sum_j a[i][j] x_j.
PlaneRationalMap linear_map(const std::array<std::array<long, 3>, 3>& a);
/// The standard quadratic involution [x1x2 : x0x2 : x0x1].
PlaneRationalMap standard_cremona();

/// Substitution outer(inner) without removing common factors.
PlaneRationalMap compose_raw(const PlaneRationalMap& outer, const PlaneRationalMap& inner,
                             const ResourceBudget& budget = {});
/// compose_raw followed by reduce.
PlaneRationalMap compose(const PlaneRationalMap& outer, const PlaneRationalMap& inner,
                         const ResourceBudget& budget = {});

/// Divides out the common polynomial factor and the integer content, then
/// scales so the first nonzero coefficient is positive.
PlaneRationalMap reduce(const HomoPoly& f0, const HomoPoly& f1, const HomoPoly& f2);
inline PlaneRationalMap reduce(const PlaneRationalMap& m) { return reduce(m.f[0], m.f[1], m.f[2]); }

struct IterateOptions {
  ResourceBudget budget;
  bool skip_reduce = false;  ///< test hook: compose without reduction
};

/// Degree of map^n, folding compose(map, acc) from acc = map.
unsigned long degree_of_iterate(const PlaneRationalMap& map, unsigned n,
                                const IterateOptions& opts = {});
/// map^n itself (n >= 1).
PlaneRationalMap iterate(const PlaneRationalMap& map, unsigned n, const IterateOptions& opts = {});

/// D minus the degree of the gcd of the three restrictions to random lines,
/// computed modulo several primes. Throws OracleInconsistency if the
/// trials disagree.
unsigned long random_line_degree_check(const HomoPoly& f0, const HomoPoly& f1, const HomoPoly& f2,
                                       unsigned trials = 3, std::uint64_t seed = 0);

struct InvolutionReport {
  bool g_squared_is_identity = false;
  bool conjugate_is_standard = false;
  /// line_collapse[j][k]: k-th sample point of L_j maps to p_j.
  std::array<std::array<bool, 3>, 3> line_collapse{};
  std::vector<std::string> failures;

  bool all_passed() const { return failures.empty(); }
};

/// Runs every identity and collects failures without throwing.
InvolutionReport involution_report();
/// Same checks; throws CheckFailed naming the first failing identity.
InvolutionReport involution_checks();

}  // namespace dyndeg
