#pragma once

// Exact gcds over Z. Univariate and bivariate gcds use the modular
// (Brown) scheme: images modulo 62-bit primes at evaluation points,
// interpolation, Chinese remaindering, and a final exact-division test that
// makes the answer certain rather than probable.

#include <optional>
#include <vector>

#include "dyndeg/bigint.hpp"
#include "dyndeg/homopoly.hpp"

namespace dyndeg {

using ZPoly = std::vector<Int>;  ///< coefficients low to high, no trailing zeros

void trim(ZPoly& f);
Int content(const ZPoly& f);
ZPoly mul(const ZPoly& a, const ZPoly& b);
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);
/// gcd in Z[Y], normalized to a positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Polynomial in X with coefficients in Z[Y]; rows[i] multiplies X^i.
struct BiPoly {
  std::vector<ZPoly> rows;

  long degree_x() const { return static_cast<long>(rows.size()) - 1; }
  long degree_y() const;
  long total_degree() const;
  bool is_zero() const { return rows.empty(); }
  void trim();
};

/// F(1, X, Y) with X = x1, Y = x2.
BiPoly dehomogenize(const HomoPoly& f);
/// x0^{d} b(x1/x0, x2/x0) with d the total degree of b.
HomoPoly homogenize(const BiPoly& b);

/// gcd in Z[X, Y], up to sign.
BiPoly gcd(const BiPoly& f, const BiPoly& g);

/// gcd in Z[x0, x1, x2] of homogeneous inputs, with positive leading
/// coefficient. Zero only if both inputs are zero.
HomoPoly gcd(const HomoPoly& f, const HomoPoly& g);

}  // namespace dyndeg
