#include "dyndeg/gaussian.hpp"

#include <algorithm>

#include "dyndeg/errors.hpp"

namespace dyndeg {

std::string_view to_string(SequenceOrigin o) {
  switch (o) {
    case SequenceOrigin::MonomialD: return "monomial_d";
    case SequenceOrigin::ComposedE: return "composed_e";
    case SequenceOrigin::Oracle: return "oracle";
  }
  return "unknown";
}

std::string to_string(const GaussianInt& z) {
  if (sgn(z.im) == 0) return z.re.get_str();
  std::string out;
  if (sgn(z.re) != 0) out = z.re.get_str();
  if (sgn(z.im) > 0 && !out.empty()) out += '+';
  out += z.im.get_str();
  out += 'i';
  return out;
}

GaussianInt to_gaussian(GammaSymbol g) {
  switch (g) {
    case GammaSymbol::MinusTwo: return {-2, 0};
    case GammaSymbol::TwoI: return {0, 2};
    case GammaSymbol::MinusTwoI: return {0, -2};
    case GammaSymbol::OnePlusTwoI: return {1, 2};
    case GammaSymbol::OneMinusTwoI: return {1, -2};
  }
  return {0, 0};
}

std::string_view to_string(GammaSymbol g) {
  switch (g) {
    case GammaSymbol::MinusTwo: return "-2";
    case GammaSymbol::TwoI: return "2i";
    case GammaSymbol::MinusTwoI: return "-2i";
    case GammaSymbol::OnePlusTwoI: return "1+2i";
    case GammaSymbol::OneMinusTwoI: return "1-2i";
  }
  return "?";
}

Int re_gamma_times(GammaSymbol g, const GaussianInt& z) {
  // Re((x + iy)(a + ib)) = xa - yb
  switch (g) {
    case GammaSymbol::MinusTwo: return -2 * z.re;
    case GammaSymbol::TwoI: return -2 * z.im;
    case GammaSymbol::MinusTwoI: return 2 * z.im;
    case GammaSymbol::OnePlusTwoI: return z.re - 2 * z.im;
    case GammaSymbol::OneMinusTwoI: return z.re + 2 * z.im;
  }
  return 0;
}

IntMatrix2x2 matrix_pow(const IntMatrix2x2& m, unsigned long n) {
  IntMatrix2x2 result = IntMatrix2x2::identity();
  IntMatrix2x2 base = m;
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

GaussianInt gi_pow(const GaussianInt& z, unsigned long n) {
  GaussianInt result{1, 0};
  GaussianInt base = z;
  while (n > 0) {
    if (n & 1UL) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Int psi(const GaussianInt& z) {
  Int best = re_gamma_times(kGammaOrder[0], z);
  for (std::size_t k = 1; k < kGammaOrder.size(); ++k) {
    Int v = re_gamma_times(kGammaOrder[k], z);
    if (v > best) best = std::move(v);
  }
  return best;
}

GammaSymbol gamma_of(const GaussianInt& w) {
  GammaSymbol best = kGammaOrder[0];
  Int best_value = re_gamma_times(best, w);
  bool tied = false;
  for (std::size_t k = 1; k < kGammaOrder.size(); ++k) {
    Int v = re_gamma_times(kGammaOrder[k], w);
    int c = cmp(v, best_value);
    if (c > 0) {
      best = kGammaOrder[k];
      best_value = std::move(v);
      tied = false;
    } else if (c == 0) {
      tied = true;
    }
  }
  if (tied) {
    throw AdmissibilityError("gamma argmax is not unique for w = " + to_string(w) +
                             " (w lies on a ray where two elements of Gamma_0 tie)");
  }
  return best;
}

GammaSymbol gamma_argmax(const GaussianInt& zeta, unsigned long j) {
  if (j == 0) throw std::invalid_argument("gamma_argmax: index must be positive");
  return gamma_of(gi_pow(zeta, j));
}

bool is_admissible(const GaussianInt& zeta) {
  if (sgn(zeta.re) == 0 || sgn(zeta.im) == 0) return false;
  return abs(zeta.re) != abs(zeta.im);
}

void require_admissible(const GaussianInt& zeta) {
  if (is_admissible(zeta)) return;
  throw AdmissibilityError("zeta = " + to_string(zeta) +
                           " is inadmissible: it is an integer multiple of 1, i or 1+-i, "
                           "so some power of zeta is real");
}

Int monomial_degree(const IntMatrix2x2& m) {
  if (sgn(m.det()) == 0) throw DegenerateMatrix("monomial_degree: det = 0");
  // Exponent of x_k that must be cleared in the homogenized triple
  // [1 : y1^a11 y2^a12 : y1^a21 y2^a22], y_k = x_k / x_0.
  auto max3 = [](const Int& a, const Int& b, const Int& c) {
    return std::max({a, b, c}, [](const Int& u, const Int& v) { return u < v; });
  };
  Int zero = 0;
  Int clear_x0 = max3(zero, Int(m.a11 + m.a12), Int(m.a21 + m.a22));
  Int clear_x1 = max3(zero, Int(-m.a11), Int(-m.a21));
  Int clear_x2 = max3(zero, Int(-m.a12), Int(-m.a22));
  return clear_x0 + clear_x1 + clear_x2;
}

MonomialDegrees d_sequence(const GaussianInt& zeta, std::size_t count) {
  require_admissible(zeta);
  MonomialDegrees out;
  out.d.first_index = 1;
  out.d.origin = SequenceOrigin::MonomialD;
  out.d.values.reserve(count);
  out.gamma.reserve(count);
  GaussianInt power{1, 0};
  for (std::size_t j = 1; j <= count; ++j) {
    power *= zeta;
    GammaSymbol g = gamma_of(power);
    out.gamma.push_back(g);
    out.d.values.push_back(re_gamma_times(g, power));
  }
  return out;
}

std::vector<GammaSymbol> gamma_sequence(const GaussianInt& zeta, std::size_t count) {
  require_admissible(zeta);
  std::vector<GammaSymbol> out;
  out.reserve(count);
  GaussianInt power{1, 0};
  for (std::size_t j = 1; j <= count; ++j) {
    power *= zeta;
    out.push_back(gamma_of(power));
  }
  return out;
}

}  // namespace dyndeg
