#pragma once

// Exact arithmetic in Z[i] and the combinatorial degree formulas for the
// monomial maps h_zeta: psi, the gamma(j) selector, admissibility and d_j.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dyndeg/bigint.hpp"
#include "dyndeg/degree_sequence.hpp"

namespace dyndeg {

struct GaussianInt {
  Int re;
  Int im;

  GaussianInt() = default;
  GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
  GaussianInt(long r, long i) : re(r), im(i) {}

  Int norm_sq() const { return re * re + im * im; }
  GaussianInt conj() const { return {re, -im}; }
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }

  GaussianInt& operator+=(const GaussianInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianInt& operator-=(const GaussianInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianInt& operator*=(const GaussianInt& o) {
    Int r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }

  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
  friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
  friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }
  friend GaussianInt operator-(const GaussianInt& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// Canonical text form: "1+2i", "-3-4i", "5", "2i", "0".
std::string to_string(const GaussianInt& z);

/// The five elements of Gamma_0, in the fixed order (-2, 2i, -2i, 1+2i, 1-2i).
enum class GammaSymbol : std::uint8_t { MinusTwo, TwoI, MinusTwoI, OnePlusTwoI, OneMinusTwoI };

inline constexpr std::array<GammaSymbol, 5> kGammaOrder = {
    GammaSymbol::MinusTwo, GammaSymbol::TwoI, GammaSymbol::MinusTwoI, GammaSymbol::OnePlusTwoI,
    GammaSymbol::OneMinusTwoI};

GaussianInt to_gaussian(GammaSymbol g);
std::string_view to_string(GammaSymbol g);

/// Re(gamma * z), computed without forming the product.
Int re_gamma_times(GammaSymbol g, const GaussianInt& z);

struct IntMatrix2x2 {
  Int a11, a12, a21, a22;

  Int det() const { return a11 * a22 - a12 * a21; }

  /// Matrix of multiplication by zeta on R^2 = C: ((re, -im), (im, re)).
  static IntMatrix2x2 of(const GaussianInt& zeta) {
    return {zeta.re, -zeta.im, zeta.im, zeta.re};
  }
  static IntMatrix2x2 identity() { return {1, 0, 0, 1}; }

  friend IntMatrix2x2 operator*(const IntMatrix2x2& a, const IntMatrix2x2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
  }
  friend bool operator==(const IntMatrix2x2&, const IntMatrix2x2&) = default;
};

IntMatrix2x2 matrix_pow(const IntMatrix2x2& m, unsigned long n);

GaussianInt gi_pow(const GaussianInt& z, unsigned long n);

/// max over Gamma_0 of Re(gamma * z). Zero exactly when z = 0.
Int psi(const GaussianInt& z);

/// The unique maximizer of Re(gamma * w) over Gamma_0 for a given w.
/// Throws AdmissibilityError when two candidates tie.
GammaSymbol gamma_of(const GaussianInt& w);

/// gamma(j): the maximizer for w = zeta^j. Requires j >= 1.
GammaSymbol gamma_argmax(const GaussianInt& zeta, unsigned long j);

/// True iff zeta^n is never real for n >= 1, i.e. zeta is not an integer
/// multiple of 1, i, 1+i or 1-i.
bool is_admissible(const GaussianInt& zeta);

/// Throws AdmissibilityError naming the failed criterion.
void require_admissible(const GaussianInt& zeta);

/// Degree of the monomial map y -> (y1^a11 y2^a12, y1^a21 y2^a22).
/// Throws DegenerateMatrix when det = 0.
Int monomial_degree(const IntMatrix2x2& m);

struct MonomialDegrees {
  DegreeSequence d;                ///< d_1..d_N, origin monomial_d
  std::vector<GammaSymbol> gamma;  ///< gamma[j-1] = gamma(j)
};

/// d_j = psi(zeta^j) for j = 1..count, together with gamma(j).
MonomialDegrees d_sequence(const GaussianInt& zeta, std::size_t count);

/// gamma(1..count) only; the exact ground truth used by the diophantine module.
std::vector<GammaSymbol> gamma_sequence(const GaussianInt& zeta, std::size_t count);

}  // namespace dyndeg
