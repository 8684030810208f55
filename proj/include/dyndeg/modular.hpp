#pragma once

// Arithmetic modulo word-sized primes and dense univariate polynomials over
// Z/p, used by the gcd and random-line routines.

#include <cstdint>
#include <vector>

#include "dyndeg/bigint.hpp"

namespace dyndeg::modp {

using u64 = std::uint64_t;
using UPoly = std::vector<u64>;  ///< coefficients low to high, no trailing zeros

inline u64 mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}
inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 pow(u64 a, u64 e, u64 p);
/// Inverse of a nonzero residue; p must be prime.
u64 inv(u64 a, u64 p);
/// v mod p in [0, p).
u64 residue(const Int& v, u64 p);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);

/// Primes below 2^62 in decreasing order, starting from the largest.
class PrimeSequence {
 public:
  u64 next();

 private:
  u64 last_ = (u64{1} << 62);
};

void trim(UPoly& f);
/// -1 for the zero polynomial.
long degree(const UPoly& f);
u64 eval(const UPoly& f, u64 x, u64 p);
/// Remainder of a by b (b nonzero).
UPoly rem(UPoly a, const UPoly& b, u64 p);
void make_monic(UPoly& f, u64 p);
/// Monic gcd; zero only if both inputs are zero.
UPoly gcd(UPoly a, UPoly b, u64 p);
/// Lagrange interpolation on a fixed node set; each call is O(n^2) with
/// no inversions.
class Interpolator {
 public:
  /// The xs must be distinct mod p.
  Interpolator(std::vector<u64> xs, u64 p);
  UPoly operator()(const std::vector<u64>& ys) const;
  std::size_t size() const { return xs_.size(); }

 private:
  std::vector<u64> xs_;
  u64 p_;
  std::vector<u64> basis_;  ///< row k: coefficients of L_k(X)
};

/// Coefficients of the unique polynomial of degree < n through (xs[k], ys[k]).
/// The xs must be distinct mod p.
UPoly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p);

}  // namespace dyndeg::modp
