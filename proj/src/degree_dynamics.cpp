#include "dyndeg/degree_dynamics.hpp"

#include <algorithm>
#include <stdexcept>

namespace dyndeg {

TruncatedIntSeries::TruncatedIntSeries(std::vector<Int> coeffs, std::size_t order)
    : c_(std::move(coeffs)) {
  c_.resize(order + 1);
}

TruncatedIntSeries& TruncatedIntSeries::operator+=(const TruncatedIntSeries& o) {
  std::size_t n = std::min(c_.size(), o.c_.size());
  c_.resize(n);
  for (std::size_t k = 0; k < n; ++k) c_[k] += o.c_[k];
  return *this;
}

TruncatedIntSeries& TruncatedIntSeries::operator-=(const TruncatedIntSeries& o) {
  std::size_t n = std::min(c_.size(), o.c_.size());
  c_.resize(n);
  for (std::size_t k = 0; k < n; ++k) c_[k] -= o.c_[k];
  return *this;
}

TruncatedIntSeries operator*(const TruncatedIntSeries& a, const TruncatedIntSeries& b) {
  std::size_t order = std::min(a.order(), b.order());
  TruncatedIntSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      mpz_addmul(out.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return out;
}

DegreeSequence e_sequence(const DegreeSequence& d, std::size_t n) {
  if (n > 0 && (!d.has(1) || !d.has(n))) {
    throw std::invalid_argument("e_sequence: d must cover indices 1.." + std::to_string(n));
  }
  DegreeSequence e;
  e.first_index = 0;
  e.origin = SequenceOrigin::ComposedE;
  e.values.reserve(n + 1);
  e.values.emplace_back(1);
  for (std::size_t k = 1; k <= n; ++k) {
    Int v = d.at(k);
    for (std::size_t j = 0; j < k; ++j) {
      mpz_addmul(v.get_mpz_t(), e.values[j].get_mpz_t(), d.at(k - j).get_mpz_t());
    }
    e.values.push_back(std::move(v));
  }
  return e;
}

long series_identity_check(const DegreeSequence& d, const DegreeSequence& e, std::size_t n) {
  TruncatedIntSeries lhs(n);
  TruncatedIntSeries rhs(n);
  lhs[0] = 2;
  rhs[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    if (!e.has(k) || !d.has(k)) {
      throw std::invalid_argument("series_identity_check: sequences too short");
    }
    lhs[k] = e.at(k);
    rhs[k] = -d.at(k);
  }
  TruncatedIntSeries prod = lhs * rhs;
  if (prod[0] != 2) return -1;
  for (std::size_t k = 1; k <= n; ++k) {
    if (sgn(prod[k]) != 0) return static_cast<long>(k) - 1;
  }
  return static_cast<long>(n);
}

Int lambda2(const GaussianInt& zeta) { return zeta.norm_sq(); }

}  // namespace dyndeg
