#include "dyndeg/poly_gcd.hpp"

#include <algorithm>

#include "dyndeg/errors.hpp"
#include "dyndeg/kernels.hpp"
#include "dyndeg/modular.hpp"

namespace dyndeg {

namespace {

using modp::u64;
using modp::UPoly;

constexpr int kMaxPrimes = 200;

UPoly reduce(const ZPoly& f, u64 p) {
  UPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = modp::residue(f[i], p);
  modp::trim(out);
  return out;
}

// Symmetric residue of r mod p as an integer.
Int symmetric(u64 r, u64 p) {
  Int v(static_cast<unsigned long>(r));
  if (r > p / 2) v -= Int(static_cast<unsigned long>(p));
  return v;
}

// Incremental Chinese remaindering of a coefficient vector kept in
// symmetric representation modulo m.
class CrtVector {
 public:
  bool empty() const { return sgn(m_) == 0; }
  void reset() { m_ = 0; }

  /// Folds in residues mod p; returns true if no coefficient changed.
  bool absorb(const std::vector<u64>& r, u64 p) {
    if (empty()) {
      value_.resize(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) value_[i] = symmetric(r[i], p);
      m_ = Int(static_cast<unsigned long>(p));
      return false;
    }
    if (r.size() != value_.size()) throw std::logic_error("CrtVector: shape changed");
    Int pz(static_cast<unsigned long>(p));
    u64 m_inv = modp::inv(modp::residue(m_, p), p);
    Int new_m = m_ * pz;
    Int half = new_m / 2;
    bool stable = true;
    for (std::size_t i = 0; i < r.size(); ++i) {
      u64 cur = modp::residue(value_[i], p);
      u64 delta = modp::mul(modp::sub(r[i], cur, p), m_inv, p);
      if (delta == 0) continue;
      stable = false;
      value_[i] += m_ * Int(static_cast<unsigned long>(delta));
      if (value_[i] > half) value_[i] -= new_m;
    }
    m_ = std::move(new_m);
    return stable;
  }

  const std::vector<Int>& value() const { return value_; }

 private:
  Int m_ = 0;
  std::vector<Int> value_;
};

ZPoly primitive_sign(ZPoly f) {
  trim(f);
  if (!f.empty() && sgn(f.back()) < 0) {
    for (Int& v : f) v = -v;
  }
  return f;
}

ZPoly primitive(ZPoly f) {
  Int c = content(f);
  if (sgn(c) == 0) return f;
  if (!f.empty() && sgn(f.back()) < 0) c = -c;
  for (Int& v : f) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  return f;
}

ZPoly scale(ZPoly f, const Int& k) {
  for (Int& v : f) v *= k;
  trim(f);
  return f;
}

// Evaluate a bivariate at X = a mod p, giving a polynomial in Y.
UPoly eval_x(const std::vector<UPoly>& rows, u64 a, u64 p) {
  std::size_t ny = 0;
  for (const UPoly& r : rows) ny = std::max(ny, r.size());
  UPoly out(ny, 0);
  for (std::size_t i = rows.size(); i-- > 0;) {
    for (u64& c : out) c = modp::mul(c, a, p);
    for (std::size_t j = 0; j < rows[i].size(); ++j) out[j] = modp::add(out[j], rows[i][j], p);
  }
  modp::trim(out);
  return out;
}

// Content in Z[Y] of a bivariate viewed as a polynomial in X.
ZPoly content_x(const BiPoly& f) {
  ZPoly c;
  for (const ZPoly& r : f.rows) {
    if (r.empty()) continue;
    c = c.empty() ? primitive_sign(r) : gcd(c, r);
    if (c.size() == 1) {
      // Degree zero: only the integer content of the rest matters.
      Int g = c[0];
      for (const ZPoly& s : f.rows) {
        for (const Int& v : s) {
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
          if (g == 1) return {Int(1)};
        }
      }
      return {abs(g)};
    }
  }
  return c;
}

BiPoly divide_rows(const BiPoly& f, const ZPoly& c) {
  BiPoly out;
  out.rows.reserve(f.rows.size());
  for (const ZPoly& r : f.rows) {
    if (r.empty()) {
      out.rows.emplace_back();
      continue;
    }
    auto q = divide_exact(r, c);
    if (!q) throw ReductionFailure("content division left a remainder");
    out.rows.push_back(std::move(*q));
  }
  return out;
}

BiPoly multiply_rows(const BiPoly& f, const ZPoly& c) {
  BiPoly out;
  for (const ZPoly& r : f.rows) out.rows.push_back(mul(r, c));
  out.trim();
  return out;
}

kernels::ModBiPoly reduce(const BiPoly& f, u64 p) {
  kernels::ModBiPoly out;
  out.rows.reserve(f.rows.size());
  for (const ZPoly& r : f.rows) out.rows.push_back(reduce(r, p));
  return out;
}

// gcd of primitive bivariates with deg_X >= 1 each.
BiPoly primitive_gcd(const BiPoly& f, const BiPoly& g) {
  const ZPoly gamma = gcd(f.rows.back(), g.rows.back());
  const long deg_gamma = static_cast<long>(gamma.size()) - 1;
  const long fy = f.degree_y();
  const long gy = g.degree_y();

  modp::PrimeSequence primes;
  CrtVector crt;
  long crt_dx = -1;
  long crt_rows = 0;
  long crt_cols = 0;

  for (int attempt = 0; attempt < kMaxPrimes; ++attempt) {
    const u64 p = primes.next();
    kernels::ModBiPoly fp = reduce(f, p);
    kernels::ModBiPoly gp = reduce(g, p);
    UPoly lf = fp.rows.back();
    UPoly lg = gp.rows.back();
    UPoly gam = reduce(gamma, p);
    if (lf.empty() || lg.empty() || gam.empty()) continue;

    // Bound on deg_Y of the gcd from one X-evaluation that keeps both Y-degrees.
    long ybound = -1;
    for (u64 a = 1; a <= 64 && ybound < 0; ++a) {
      UPoly fa = eval_x(fp.rows, a, p);
      UPoly ga = eval_x(gp.rows, a, p);
      if (modp::degree(fa) != fy || modp::degree(ga) != gy) continue;
      ybound = modp::degree(modp::gcd(fa, ga, p));
    }
    if (ybound < 0) continue;
    const std::size_t npts = static_cast<std::size_t>(deg_gamma + ybound + 1);

    // Images at Y = b, keeping only those of minimal X-degree.
    std::vector<u64> xs;
    std::vector<UPoly> images;
    long dx = -1;
    u64 next_b = 1;
    bool coprime = false;
    while (images.size() < npts && !coprime) {
      std::vector<u64> batch;
      while (batch.size() < npts - images.size()) {
        u64 b = next_b++;
        if (modp::eval(lf, b, p) && modp::eval(lg, b, p) && modp::eval(gam, b, p)) {
          batch.push_back(b);
        }
      }
      auto fimg = kernels::eval_y_many_parallel(fp, batch, p);
      auto gimg = kernels::eval_y_many_parallel(gp, batch, p);
      for (std::size_t k = 0; k < batch.size(); ++k) {
        UPoly h = modp::gcd(std::move(fimg[k]), std::move(gimg[k]), p);
        long dh = modp::degree(h);
        if (dh == 0) {
          coprime = true;
          break;
        }
        if (dx < 0 || dh < dx) {
          dx = dh;
          xs.clear();
          images.clear();
        } else if (dh > dx) {
          continue;
        }
        u64 s = modp::eval(gam, batch[k], p);
        for (u64& c : h) c = modp::mul(c, s, p);
        xs.push_back(batch[k]);
        images.push_back(std::move(h));
        if (images.size() == npts) break;
      }
    }
    if (coprime) return BiPoly{{ZPoly{Int(1)}}};

    // Interpolate each X-coefficient in Y, flattened row-major.
    modp::Interpolator interp(xs, p);
    const long rows = dx + 1;
    const long cols = static_cast<long>(npts);
    std::vector<u64> flat(static_cast<std::size_t>(rows * cols), 0);
    std::vector<u64> ys(npts);
    for (long i = 0; i < rows; ++i) {
      for (std::size_t k = 0; k < npts; ++k) ys[k] = images[k][static_cast<std::size_t>(i)];
      UPoly r = interp(ys);
      std::copy(r.begin(), r.end(), flat.begin() + i * cols);
    }

    if (crt.empty() || dx < crt_dx) {
      crt.reset();
      crt_dx = dx;
      crt_rows = rows;
      crt_cols = cols;
      crt.absorb(flat, p);
      continue;
    }
    if (dx > crt_dx || cols != crt_cols) continue;
    if (!crt.absorb(flat, p)) continue;

    // Stable across a prime: candidate is the primitive part in X.
    BiPoly cand;
    const auto& v = crt.value();
    for (long i = 0; i < crt_rows; ++i) {
      ZPoly r(v.begin() + i * crt_cols, v.begin() + (i + 1) * crt_cols);
      trim(r);
      cand.rows.push_back(std::move(r));
    }
    cand.trim();
    ZPoly cc = content_x(cand);
    cand = divide_rows(cand, cc);
    if (!cand.rows.back().empty() && sgn(cand.rows.back().back()) < 0) {
      for (ZPoly& r : cand.rows) {
        for (Int& c : r) c = -c;
      }
    }
    HomoPoly hc = homogenize(cand);
    if (divide_exact(homogenize(f), hc) && divide_exact(homogenize(g), hc)) return cand;
  }
  throw ReductionFailure("bivariate gcd did not stabilize within the prime budget");
}

}  // namespace

void trim(ZPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

Int content(const ZPoly& f) {
  Int g = 0;
  for (const Int& v : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(out);
  return out;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("divide_exact: zero divisor");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1);
  const Int& lead = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Int& top = r[k + b.size() - 1];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (const Int& v : r) {
    if (sgn(v) != 0) return std::nullopt;
  }
  trim(q);
  return q;
}

ZPoly gcd(const ZPoly& a_in, const ZPoly& b_in) {
  ZPoly a = a_in;
  ZPoly b = b_in;
  trim(a);
  trim(b);
  if (a.empty()) return primitive_sign(b);
  if (b.empty()) return primitive_sign(a);
  Int ca = content(a);
  Int cb = content(b);
  Int c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.size() == 1 || b.size() == 1) return {c};
  a = primitive(std::move(a));
  b = primitive(std::move(b));
  Int gamma;
  mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

  modp::PrimeSequence primes;
  CrtVector crt;
  long crt_deg = -1;
  for (int attempt = 0; attempt < kMaxPrimes; ++attempt) {
    const u64 p = primes.next();
    if (modp::residue(a.back(), p) == 0 || modp::residue(b.back(), p) == 0) continue;
    UPoly h = modp::gcd(reduce(a, p), reduce(b, p), p);
    long dh = modp::degree(h);
    if (dh == 0) return {c};
    u64 s = modp::residue(gamma, p);
    for (u64& v : h) v = modp::mul(v, s, p);
    if (crt.empty() || dh < crt_deg) {
      crt.reset();
      crt_deg = dh;
      crt.absorb(h, p);
      continue;
    }
    if (dh > crt_deg) continue;
    if (!crt.absorb(h, p)) continue;
    ZPoly cand = crt.value();
    trim(cand);
    cand = primitive(std::move(cand));
    if (divide_exact(a, cand) && divide_exact(b, cand)) return scale(std::move(cand), c);
  }
  throw ReductionFailure("univariate gcd did not stabilize within the prime budget");
}

long BiPoly::degree_y() const {
  long d = -1;
  for (const ZPoly& r : rows) d = std::max(d, static_cast<long>(r.size()) - 1);
  return d;
}

long BiPoly::total_degree() const {
  long d = -1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].empty()) d = std::max(d, static_cast<long>(i + rows[i].size() - 1));
  }
  return d;
}

void BiPoly::trim() {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
}

BiPoly dehomogenize(const HomoPoly& f) {
  BiPoly out;
  for (const Term& t : f.terms()) {
    if (out.rows.size() <= t.e[1]) out.rows.resize(t.e[1] + 1);
    ZPoly& r = out.rows[t.e[1]];
    if (r.size() <= t.e[2]) r.resize(t.e[2] + 1);
    r[t.e[2]] += t.c;
  }
  for (ZPoly& r : out.rows) dyndeg::trim(r);
  out.trim();
  return out;
}

HomoPoly homogenize(const BiPoly& b) {
  long d = b.total_degree();
  if (d < 0) return HomoPoly(0);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    for (std::size_t j = 0; j < b.rows[i].size(); ++j) {
      if (sgn(b.rows[i][j]) == 0) continue;
      terms.push_back({{static_cast<std::uint32_t>(d - static_cast<long>(i + j)),
                        static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)},
                       b.rows[i][j]});
    }
  }
  return HomoPoly::from_terms(static_cast<unsigned>(d), std::move(terms));
}

BiPoly gcd(const BiPoly& f_in, const BiPoly& g_in) {
  BiPoly f = f_in;
  BiPoly g = g_in;
  f.trim();
  g.trim();
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  ZPoly cf = content_x(f);
  ZPoly cg = content_x(g);
  ZPoly c = gcd(cf, cg);
  BiPoly f1 = divide_rows(f, cf);
  BiPoly g1 = divide_rows(g, cg);
  if (f1.degree_x() == 0 || g1.degree_x() == 0) return BiPoly{{c}};
  return multiply_rows(primitive_gcd(f1, g1), c);
}

HomoPoly gcd(const HomoPoly& f, const HomoPoly& g) {
  auto positive = [](HomoPoly h) { return sgn(h.leading().c) < 0 ? -h : h; };
  if (f.is_zero() && g.is_zero()) return HomoPoly(0);
  if (f.is_zero()) return positive(g);
  if (g.is_zero()) return positive(f);
  Exponent mf = f.min_exponents();
  Exponent mg = g.min_exponents();
  Exponent m{std::min(mf[0], mg[0]), std::min(mf[1], mg[1]), std::min(mf[2], mg[2])};
  HomoPoly f1 = f.over_monomial(m);
  HomoPoly g1 = g.over_monomial(m);
  if (f1.is_monomial() || g1.is_monomial()) {
    Int c;
    Int cf = f1.content();
    Int cg = g1.content();
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    return HomoPoly::monomial(c, m);
  }
  HomoPoly h = homogenize(gcd(dehomogenize(f1), dehomogenize(g1)));
  return positive(h.times_monomial(m));
}

}  // namespace dyndeg
