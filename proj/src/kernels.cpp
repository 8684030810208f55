#include "dyndeg/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#include <omp.h>

namespace dyndeg::kernels {

namespace {

struct Row {
  std::uint32_t e0;
  std::size_t begin;
  std::size_t end;
};

std::vector<Row> rows_of(const HomoPoly& f) {
  std::vector<Row> rows;
  const auto& t = f.terms();
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i;
    while (j < t.size() && t[j].e[0] == t[i].e[0]) ++j;
    rows.push_back({t[i].e[0], i, j});
    i = j;
  }
  return rows;
}

// Scratch space for accumulating one output row.
struct RowAccumulator {
  std::vector<Int> acc;
  std::vector<char> used;
  std::vector<std::uint32_t> touched;

  explicit RowAccumulator(unsigned d) : acc(d + 1), used(d + 1, 0) {}
};

// Output row e0 = r: all pairs with a.e0 + b.e0 = r, dense over e1.
void product_row(const HomoPoly& a, const HomoPoly& b, const std::vector<Row>& arows,
                 const std::vector<Row>& brows, const std::vector<long>& brow_of, unsigned r,
                 unsigned d, RowAccumulator& scratch, std::vector<Term>& out) {
  const auto& at = a.terms();
  const auto& bt = b.terms();
  for (const Row& ar : arows) {
    if (ar.e0 > r) continue;
    std::uint32_t need = r - ar.e0;
    if (need >= brow_of.size() || brow_of[need] < 0) continue;
    const Row& br = brows[static_cast<std::size_t>(brow_of[need])];
    for (std::size_t i = ar.begin; i < ar.end; ++i) {
      for (std::size_t j = br.begin; j < br.end; ++j) {
        std::uint32_t idx = at[i].e[1] + bt[j].e[1];
        if (!scratch.used[idx]) {
          scratch.used[idx] = 1;
          scratch.touched.push_back(idx);
        }
        mpz_addmul(scratch.acc[idx].get_mpz_t(), at[i].c.get_mpz_t(), bt[j].c.get_mpz_t());
      }
    }
  }
  std::sort(scratch.touched.begin(), scratch.touched.end(), std::greater<>());
  for (std::uint32_t idx : scratch.touched) {
    Int& cell = scratch.acc[idx];
    if (sgn(cell) != 0) {
      out.push_back({{r, idx, d - r - idx}, cell});
      cell = 0;
    }
    scratch.used[idx] = 0;
  }
  scratch.touched.clear();
}

HomoPoly multiply(const HomoPoly& a, const HomoPoly& b, bool parallel) {
  const unsigned d = a.degree() + b.degree();
  if (a.is_zero() || b.is_zero()) return HomoPoly(d);
  if (d > kMaxExponent) throw std::overflow_error("product degree exceeds exponent packing");
  std::vector<Row> arows = rows_of(a);
  std::vector<Row> brows = rows_of(b);
  std::vector<long> brow_of(brows.front().e0 + 1, -1);
  for (std::size_t k = 0; k < brows.size(); ++k) brow_of[brows[k].e0] = static_cast<long>(k);

  const unsigned r_hi = arows.front().e0 + brows.front().e0;
  const unsigned r_lo = arows.back().e0 + brows.back().e0;
  const long nrows = static_cast<long>(r_hi - r_lo) + 1;
  std::vector<std::vector<Term>> out(static_cast<std::size_t>(nrows));

  if (parallel) {
#pragma omp parallel
    {
      RowAccumulator scratch(d);
#pragma omp for schedule(dynamic, 4)
      for (long k = 0; k < nrows; ++k) {
        product_row(a, b, arows, brows, brow_of, r_hi - static_cast<unsigned>(k), d, scratch,
                    out[static_cast<std::size_t>(k)]);
      }
    }
  } else {
    RowAccumulator scratch(d);
    for (long k = 0; k < nrows; ++k) {
      product_row(a, b, arows, brows, brow_of, r_hi - static_cast<unsigned>(k), d, scratch,
                  out[static_cast<std::size_t>(k)]);
    }
  }

  std::size_t total = 0;
  for (const auto& row : out) total += row.size();
  std::vector<Term> terms;
  terms.reserve(total);
  for (auto& row : out) {
    for (Term& t : row) terms.push_back(std::move(t));
  }
  return HomoPoly::from_sorted(d, std::move(terms));
}

// Powers x^0..x^m mod p.
std::vector<modp::u64> powers(modp::u64 x, std::uint32_t m, modp::u64 p) {
  std::vector<modp::u64> pw(m + 1);
  pw[0] = 1 % p;
  for (std::uint32_t k = 1; k <= m; ++k) pw[k] = modp::mul(pw[k - 1], x, p);
  return pw;
}

modp::u64 eval_point(const ModHomoPoly& f, const ModPoint& x, const Exponent& maxe, modp::u64 p) {
  std::vector<modp::u64> pw[3];
  for (int k = 0; k < 3; ++k) pw[k] = powers(x[k], maxe[k], p);
  modp::u64 sum = 0;
  for (std::size_t i = 0; i < f.exps.size(); ++i) {
    const Exponent& e = f.exps[i];
    modp::u64 v = modp::mul(f.coeffs[i], pw[0][e[0]], p);
    v = modp::mul(v, modp::mul(pw[1][e[1]], pw[2][e[2]], p), p);
    sum = modp::add(sum, v, p);
  }
  return sum;
}

Exponent max_exps(const ModHomoPoly& f) {
  Exponent m{0, 0, 0};
  for (const Exponent& e : f.exps) {
    for (int k = 0; k < 3; ++k) m[k] = std::max(m[k], e[k]);
  }
  return m;
}

std::vector<ModPoint> line_points(unsigned d, const ModPoint& u, const ModPoint& v, modp::u64 p) {
  std::vector<ModPoint> pts(d + 1);
  for (unsigned s = 0; s <= d; ++s) {
    for (int k = 0; k < 3; ++k) pts[s][k] = modp::add(modp::mul(s, u[k], p), v[k], p);
  }
  return pts;
}

std::vector<modp::u64> nodes(unsigned d) {
  std::vector<modp::u64> xs(d + 1);
  for (unsigned s = 0; s <= d; ++s) xs[s] = s;
  return xs;
}

modp::UPoly eval_rows(const ModBiPoly& f, modp::u64 y, modp::u64 p) {
  modp::UPoly out(f.rows.size());
  for (std::size_t i = 0; i < f.rows.size(); ++i) out[i] = modp::eval(f.rows[i], y, p);
  modp::trim(out);
  return out;
}

}  // namespace

HomoPoly mul_serial(const HomoPoly& a, const HomoPoly& b) { return multiply(a, b, false); }

HomoPoly mul_parallel(const HomoPoly& a, const HomoPoly& b) {
  // Tiny products are not worth a parallel region.
  if (a.size() * b.size() < 4096) return multiply(a, b, false);
  return multiply(a, b, true);
}

ModHomoPoly reduce_mod(const HomoPoly& f, modp::u64 p) {
  ModHomoPoly out;
  out.degree = f.degree();
  out.exps.reserve(f.size());
  out.coeffs.reserve(f.size());
  for (const Term& t : f.terms()) {
    modp::u64 c = modp::residue(t.c, p);
    if (c == 0) continue;
    out.exps.push_back(t.e);
    out.coeffs.push_back(c);
  }
  return out;
}

std::vector<modp::u64> eval_many_serial(const ModHomoPoly& f, const std::vector<ModPoint>& pts,
                                        modp::u64 p) {
  Exponent maxe = max_exps(f);
  std::vector<modp::u64> out(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) out[k] = eval_point(f, pts[k], maxe, p);
  return out;
}

std::vector<modp::u64> eval_many_parallel(const ModHomoPoly& f, const std::vector<ModPoint>& pts,
                                          modp::u64 p) {
  Exponent maxe = max_exps(f);
  std::vector<modp::u64> out(pts.size());
  const long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] = eval_point(f, pts[static_cast<std::size_t>(k)], maxe, p);
  }
  return out;
}

modp::UPoly line_restriction_serial(const ModHomoPoly& f, const ModPoint& u, const ModPoint& v,
                                    modp::u64 p) {
  auto vals = eval_many_serial(f, line_points(f.degree, u, v, p), p);
  return modp::interpolate(nodes(f.degree), vals, p);
}

modp::UPoly line_restriction_parallel(const ModHomoPoly& f, const ModPoint& u, const ModPoint& v,
                                      modp::u64 p) {
  auto vals = eval_many_parallel(f, line_points(f.degree, u, v, p), p);
  return modp::interpolate(nodes(f.degree), vals, p);
}

std::vector<modp::UPoly> eval_y_many_serial(const ModBiPoly& f, const std::vector<modp::u64>& ys,
                                            modp::u64 p) {
  std::vector<modp::UPoly> out(ys.size());
  for (std::size_t k = 0; k < ys.size(); ++k) out[k] = eval_rows(f, ys[k], p);
  return out;
}

std::vector<modp::UPoly> eval_y_many_parallel(const ModBiPoly& f,
                                              const std::vector<modp::u64>& ys, modp::u64 p) {
  std::vector<modp::UPoly> out(ys.size());
  const long n = static_cast<long>(ys.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] = eval_rows(f, ys[static_cast<std::size_t>(k)], p);
  }
  return out;
}

}  // namespace dyndeg::kernels
