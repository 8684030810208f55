#pragma once

// Hot loops with a serial reference and an OpenMP version each. Results of
// the two are bit-identical: all arithmetic is exact, and parallel work is
// split so every output cell has a single writer.

#include <array>
#include <vector>

#include "dyndeg/homopoly.hpp"
#include "dyndeg/modular.hpp"

namespace dyndeg::kernels {

HomoPoly mul_serial(const HomoPoly& a, const HomoPoly& b);
HomoPoly mul_parallel(const HomoPoly& a, const HomoPoly& b);

/// A homogeneous polynomial with coefficients reduced mod p.
struct ModHomoPoly {
  unsigned degree = 0;
  std::vector<Exponent> exps;
  std::vector<modp::u64> coeffs;
};
ModHomoPoly reduce_mod(const HomoPoly& f, modp::u64 p);

using ModPoint = std::array<modp::u64, 3>;

std::vector<modp::u64> eval_many_serial(const ModHomoPoly& f, const std::vector<ModPoint>& pts,
                                        modp::u64 p);
std::vector<modp::u64> eval_many_parallel(const ModHomoPoly& f, const std::vector<ModPoint>& pts,
                                          modp::u64 p);

/// Coefficients (in s) of f(s*u + v) mod p, via evaluation at s = 0..D and
/// interpolation.
modp::UPoly line_restriction_serial(const ModHomoPoly& f, const ModPoint& u, const ModPoint& v,
                                    modp::u64 p);
modp::UPoly line_restriction_parallel(const ModHomoPoly& f, const ModPoint& u, const ModPoint& v,
                                      modp::u64 p);

/// Bivariate polynomial mod p stored by X-degree: rows[i] is the
/// coefficient of X^i as a polynomial in Y.
struct ModBiPoly {
  std::vector<modp::UPoly> rows;
};

/// out[k] = f(X, ys[k]) as a polynomial in X.
std::vector<modp::UPoly> eval_y_many_serial(const ModBiPoly& f, const std::vector<modp::u64>& ys,
                                            modp::u64 p);
std::vector<modp::UPoly> eval_y_many_parallel(const ModBiPoly& f,
                                              const std::vector<modp::u64>& ys, modp::u64 p);

}  // namespace dyndeg::kernels
