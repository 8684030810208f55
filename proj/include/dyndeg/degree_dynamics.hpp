#pragma once

// Degree recursion for f = g o h_zeta and the generating-function identity
// (2 + Delta_f)(1 - Delta_h) = 2 checked on truncated series.

#include <cstddef>
#include <vector>

#include "dyndeg/bigint.hpp"
#include "dyndeg/degree_sequence.hpp"
#include "dyndeg/gaussian.hpp"

namespace dyndeg {

/// Integer power series c_0 + c_1 z + ... + c_N z^N, exact modulo z^{N+1}.
class TruncatedIntSeries {
 public:
  explicit TruncatedIntSeries(std::size_t order) : c_(order + 1) {}
  TruncatedIntSeries(std::vector<Int> coeffs, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const Int& operator[](std::size_t k) const { return c_[k]; }
  Int& operator[](std::size_t k) { return c_[k]; }
  const std::vector<Int>& coefficients() const { return c_; }

  TruncatedIntSeries& operator+=(const TruncatedIntSeries& o);
  TruncatedIntSeries& operator-=(const TruncatedIntSeries& o);
  friend TruncatedIntSeries operator+(TruncatedIntSeries a, const TruncatedIntSeries& b) {
    return a += b;
  }
  friend TruncatedIntSeries operator-(TruncatedIntSeries a, const TruncatedIntSeries& b) {
    return a -= b;
  }
  /// Product truncated to min of the two orders.
  friend TruncatedIntSeries operator*(const TruncatedIntSeries& a, const TruncatedIntSeries& b);
  friend bool operator==(const TruncatedIntSeries&, const TruncatedIntSeries&) = default;

 private:
  std::vector<Int> c_;
};

/// e_0..e_N from e_n = d_n + sum_{j<n} e_j d_{n-j}, e_0 = 1.
/// d must cover indices 1..N.
DegreeSequence e_sequence(const DegreeSequence& d, std::size_t n);

/// Largest M <= N such that (2 + Delta_f)(1 - Delta_h) = 2 mod z^{M+1}.
/// Returns -1 when even the constant term differs from 2.
long series_identity_check(const DegreeSequence& d, const DegreeSequence& e, std::size_t n);

/// Topological degree |zeta|^2.
Int lambda2(const GaussianInt& zeta);

}  // namespace dyndeg
