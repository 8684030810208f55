#pragma once

// Sparse homogeneous polynomials in x0, x1, x2 with big-integer
// coefficients. Terms are kept sorted lex-descending on (e0, e1, e2) with no
// zero coefficients, so equality is a syntactic comparison.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dyndeg/bigint.hpp"

namespace dyndeg {

using Exponent = std::array<std::uint32_t, 3>;

/// Exponents must stay below 2^21 so they pack into one 64-bit key.
inline constexpr std::uint32_t kMaxExponent = (1u << 21) - 1;

inline std::uint64_t pack(const Exponent& e) {
  return (std::uint64_t{e[0]} << 42) | (std::uint64_t{e[1]} << 21) | e[2];
}
inline Exponent unpack(std::uint64_t k) {
  return {static_cast<std::uint32_t>(k >> 42), static_cast<std::uint32_t>((k >> 21) & kMaxExponent),
          static_cast<std::uint32_t>(k & kMaxExponent)};
}

struct Term {
  Exponent e;
  Int c;
  friend bool operator==(const Term&, const Term&) = default;
};

class HomoPoly {
 public:
  /// The zero polynomial, nominally of the given degree.
  explicit HomoPoly(unsigned degree = 0) : degree_(degree) {}

  /// Sorts, merges equal exponents and drops zeros. Throws if a term's
  /// exponents do not sum to degree.
  static HomoPoly from_terms(unsigned degree, std::vector<Term> terms);
  /// Trusts the caller: terms already canonical.
  static HomoPoly from_sorted(unsigned degree, std::vector<Term> terms);
  static HomoPoly monomial(Int c, const Exponent& e);
  /// x_k.
  static HomoPoly variable(int k);

  unsigned degree() const { return degree_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const Term& leading() const { return terms_.front(); }

  /// gcd of the coefficients (0 for the zero polynomial).
  Int content() const;
  /// Componentwise minimum exponent over all terms.
  Exponent min_exponents() const;
  Exponent max_exponents() const;

  HomoPoly operator-() const;
  HomoPoly scaled(const Int& k) const;
  /// Exact division of every coefficient; throws if one is not divisible.
  HomoPoly divided_by(const Int& k) const;
  /// Multiply by x^e.
  HomoPoly times_monomial(const Exponent& e) const;
  /// Divide by x^e; every term must be divisible.
  HomoPoly over_monomial(const Exponent& e) const;

  Int eval(const std::array<Int, 3>& x) const;

  friend HomoPoly operator+(const HomoPoly& a, const HomoPoly& b);
  friend HomoPoly operator-(const HomoPoly& a, const HomoPoly& b);
  /// Uses the parallel kernel.
  friend HomoPoly operator*(const HomoPoly& a, const HomoPoly& b);
  friend bool operator==(const HomoPoly&, const HomoPoly&) = default;

  std::string to_string() const;

 private:
  unsigned degree_ = 0;
  std::vector<Term> terms_;
};

/// a^n by repeated squaring.
HomoPoly pow(const HomoPoly& a, unsigned n);

/// F / G when G divides F exactly in Z[x0, x1, x2], otherwise nullopt.
std::optional<HomoPoly> divide_exact(const HomoPoly& f, const HomoPoly& g);

}  // namespace dyndeg
