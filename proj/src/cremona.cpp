#include "dyndeg/cremona.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

#include "dyndeg/errors.hpp"
#include "dyndeg/kernels.hpp"
#include "dyndeg/modular.hpp"
#include "dyndeg/poly_gcd.hpp"

namespace dyndeg {

namespace {

HomoPoly x(int k) { return HomoPoly::variable(k); }

HomoPoly linear(long a0, long a1, long a2) {
  return HomoPoly::from_terms(1, {{{1, 0, 0}, Int(a0)}, {{0, 1, 0}, Int(a1)}, {{0, 0, 1}, Int(a2)}});
}

PlaneRationalMap make(HomoPoly a, HomoPoly b, HomoPoly c, bool reduced) {
  return PlaneRationalMap{{std::move(a), std::move(b), std::move(c)}, reduced};
}

void check_monomials(std::size_t n, const ResourceBudget& budget) {
  if (n > budget.max_monomials) {
    throw ResourceExhausted("composition needs " + std::to_string(n) +
                            " stored monomials, budget is " +
                            std::to_string(budget.max_monomials));
  }
}

// Uniform integer in [lo, hi] by rejection, independent of the standard
// library's distribution implementation.
long draw(std::mt19937_64& rng, long lo, long hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return lo + static_cast<long>(v % range);
}

modp::u64 residue_of(long v, modp::u64 p) {
  long r = v % static_cast<long>(p);
  return static_cast<modp::u64>(r < 0 ? r + static_cast<long>(p) : r);
}

bool projectively_equal(const std::array<Int, 3>& a, const std::array<Int, 3>& b) {
  bool a_zero = sgn(a[0]) == 0 && sgn(a[1]) == 0 && sgn(a[2]) == 0;
  bool b_zero = sgn(b[0]) == 0 && sgn(b[1]) == 0 && sgn(b[2]) == 0;
  if (a_zero || b_zero) return false;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

}  // namespace

unsigned PlaneRationalMap::degree() const {
  for (const HomoPoly& c : f) {
    if (!c.is_zero()) return c.degree();
  }
  return f[0].degree();
}

std::array<Int, 3> PlaneRationalMap::eval(const std::array<Int, 3>& pt) const {
  return {f[0].eval(pt), f[1].eval(pt), f[2].eval(pt)};
}

PlaneRationalMap identity_map() { return make(x(0), x(1), x(2), true); }

PlaneRationalMap g_map() {
  return make(x(0) * linear(-1, 1, 1), x(1) * linear(1, -1, 1), x(2) * linear(1, 1, -1), true);
}

PlaneRationalMap standard_cremona() {
  return make(x(1) * x(2), x(0) * x(2), x(0) * x(1), true);
}

PlaneRationalMap linear_map(const std::array<std::array<long, 3>, 3>& a) {
  return reduce(linear(a[0][0], a[0][1], a[0][2]), linear(a[1][0], a[1][1], a[1][2]),
                linear(a[2][0], a[2][1], a[2][2]));
}

PlaneRationalMap monomial_map(const IntMatrix2x2& m) {
  if (sgn(m.det()) == 0) throw DegenerateMatrix("monomial_map: det = 0");
  // Laurent exponent vectors of [1 : y1^a11 y2^a12 : y1^a21 y2^a22] in x.
  std::array<std::array<Int, 3>, 3> e = {{{Int(0), Int(0), Int(0)},
                                          {Int(-m.a11 - m.a12), m.a11, m.a12},
                                          {Int(-m.a21 - m.a22), m.a21, m.a22}}};
  std::array<Int, 3> shift;
  for (int k = 0; k < 3; ++k) {
    Int lo = std::min({e[0][k], e[1][k], e[2][k]});
    shift[k] = -lo;
  }
  std::array<HomoPoly, 3> comps;
  for (int i = 0; i < 3; ++i) {
    Exponent ex;
    for (int k = 0; k < 3; ++k) {
      Int v = e[i][k] + shift[k];
      if (v > kMaxExponent) throw ResourceExhausted("monomial_map: exponent too large");
      ex[k] = static_cast<std::uint32_t>(v.get_ui());
    }
    comps[i] = HomoPoly::monomial(Int(1), ex);
  }
  return make(comps[0], comps[1], comps[2], true);
}

PlaneRationalMap compose_raw(const PlaneRationalMap& outer, const PlaneRationalMap& inner,
                             const ResourceBudget& budget) {
  const unsigned long target =
      static_cast<unsigned long>(outer.degree()) * static_cast<unsigned long>(inner.degree());
  if (target > budget.max_degree) {
    throw ResourceExhausted("composition degree " + std::to_string(target) +
                            " exceeds the budget of " + std::to_string(budget.max_degree));
  }
  // Powers of each inner component that the outer terms ask for.
  std::array<std::map<std::uint32_t, HomoPoly>, 3> powers;
  std::size_t stored = 0;
  for (int k = 0; k < 3; ++k) {
    std::vector<std::uint32_t> need;
    for (const HomoPoly& c : outer.f) {
      for (const Term& t : c.terms()) need.push_back(t.e[k]);
    }
    std::sort(need.begin(), need.end());
    need.erase(std::unique(need.begin(), need.end()), need.end());
    std::uint32_t prev = 0;
    HomoPoly cur = HomoPoly::monomial(Int(1), {0, 0, 0});
    for (std::uint32_t n : need) {
      if (n != prev) cur = cur * pow(inner.f[k], n - prev);
      prev = n;
      stored += cur.size();
      check_monomials(stored, budget);
      powers[k].emplace(n, cur);
    }
  }
  std::array<HomoPoly, 3> out;
  for (int i = 0; i < 3; ++i) {
    HomoPoly acc(static_cast<unsigned>(target));
    for (const Term& t : outer.f[i].terms()) {
      std::array<const HomoPoly*, 3> fac = {&powers[0].at(t.e[0]), &powers[1].at(t.e[1]),
                                            &powers[2].at(t.e[2])};
      std::sort(fac.begin(), fac.end(),
                [](const HomoPoly* a, const HomoPoly* b) { return a->size() < b->size(); });
      HomoPoly prod = (*fac[0] * *fac[1]);
      check_monomials(stored + prod.size(), budget);
      prod = prod * *fac[2];
      check_monomials(stored + prod.size(), budget);
      acc = acc + prod.scaled(t.c);
      check_monomials(stored + acc.size(), budget);
    }
    if (acc.is_zero()) acc = HomoPoly(static_cast<unsigned>(target));
    stored += acc.size();
    out[i] = std::move(acc);
  }
  return make(std::move(out[0]), std::move(out[1]), std::move(out[2]), false);
}

PlaneRationalMap compose(const PlaneRationalMap& outer, const PlaneRationalMap& inner,
                         const ResourceBudget& budget) {
  return reduce(compose_raw(outer, inner, budget));
}

PlaneRationalMap reduce(const HomoPoly& f0, const HomoPoly& f1, const HomoPoly& f2) {
  std::array<HomoPoly, 3> f = {f0, f1, f2};
  long degree = -1;
  for (const HomoPoly& c : f) {
    if (c.is_zero()) continue;
    if (degree >= 0 && static_cast<long>(c.degree()) != degree) {
      throw std::invalid_argument("reduce: components have different degrees");
    }
    degree = c.degree();
  }
  if (degree < 0) throw std::invalid_argument("reduce: all components are zero");

  // Common monomial factor.
  Exponent m{kMaxExponent, kMaxExponent, kMaxExponent};
  for (const HomoPoly& c : f) {
    if (c.is_zero()) continue;
    Exponent e = c.min_exponents();
    for (int k = 0; k < 3; ++k) m[k] = std::min(m[k], e[k]);
  }
  for (HomoPoly& c : f) {
    if (!c.is_zero()) c = c.over_monomial(m);
  }
  degree -= static_cast<long>(m[0] + m[1] + m[2]);

  // Polynomial gcd; a monomial component forces it to be a constant.
  bool any_monomial = std::any_of(f.begin(), f.end(), [](const HomoPoly& c) { return c.is_monomial(); });
  if (!any_monomial) {
    HomoPoly g(0);
    for (const HomoPoly& c : f) {
      if (c.is_zero()) continue;
      g = g.is_zero() ? c : gcd(g, c);
      if (g.degree() == 0) break;
    }
    if (g.degree() > 0) {
      g = g.divided_by(g.content());
      for (HomoPoly& c : f) {
        if (c.is_zero()) continue;
        auto q = divide_exact(c, g);
        if (!q) throw ReductionFailure("gcd does not divide a component: " + g.to_string());
        c = std::move(*q);
      }
      degree -= g.degree();
    }
  }

  Int content = 0;
  for (const HomoPoly& c : f) {
    Int k = c.content();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), k.get_mpz_t());
  }
  bool negate = false;
  for (const HomoPoly& c : f) {
    if (!c.is_zero()) {
      negate = sgn(c.leading().c) < 0;
      break;
    }
  }
  if (negate) content = -content;
  for (HomoPoly& c : f) {
    c = c.is_zero() ? HomoPoly(static_cast<unsigned>(degree)) : c.divided_by(content);
  }
  return make(std::move(f[0]), std::move(f[1]), std::move(f[2]), true);
}

PlaneRationalMap iterate(const PlaneRationalMap& map, unsigned n, const IterateOptions& opts) {
  if (n == 0) return identity_map();
  PlaneRationalMap acc = map;
  for (unsigned k = 2; k <= n; ++k) {
    acc = opts.skip_reduce ? compose_raw(map, acc, opts.budget) : compose(map, acc, opts.budget);
  }
  return acc;
}

unsigned long degree_of_iterate(const PlaneRationalMap& map, unsigned n,
                                const IterateOptions& opts) {
  return iterate(map, n, opts).degree();
}

unsigned long random_line_degree_check(const HomoPoly& f0, const HomoPoly& f1, const HomoPoly& f2,
                                       unsigned trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("random_line_degree_check: trials must be positive");
  std::vector<const HomoPoly*> comps;
  for (const HomoPoly* c : {&f0, &f1, &f2}) {
    if (!c->is_zero()) comps.push_back(c);
  }
  if (comps.empty()) throw std::invalid_argument("random_line_degree_check: all components zero");
  const unsigned d = comps.front()->degree();
  for (const HomoPoly* c : comps) {
    if (c->degree() != d) throw std::invalid_argument("random_line_degree_check: unequal degrees");
  }
  constexpr long kRange = 1'000'000;
  constexpr int kPrimesPerTrial = 3;

  std::mt19937_64 rng(seed);
  modp::PrimeSequence primes;
  long agreed = -1;
  for (unsigned trial = 0; trial < trials; ++trial) {
    std::array<long, 3> u, v;
    for (long& c : u) c = draw(rng, -kRange, kRange);
    for (long& c : v) c = draw(rng, -kRange, kRange);
    long best = static_cast<long>(d);
    int used = 0;
    for (int attempt = 0; used < kPrimesPerTrial && attempt < 32; ++attempt) {
      const modp::u64 p = primes.next();
      kernels::ModPoint up, vp;
      for (int k = 0; k < 3; ++k) {
        up[k] = residue_of(u[k], p);
        vp[k] = residue_of(v[k], p);
      }
      modp::UPoly g;
      bool degenerate = false;
      for (const HomoPoly* c : comps) {
        kernels::ModHomoPoly cm = kernels::reduce_mod(*c, p);
        // The leading coefficient in s is F(u); it must survive mod p.
        if (kernels::eval_many_serial(cm, {up}, p)[0] == 0) {
          degenerate = true;
          break;
        }
        modp::UPoly r = kernels::line_restriction_parallel(cm, up, vp, p);
        g = g.empty() ? r : modp::gcd(g, r, p);
      }
      if (degenerate) continue;
      modp::make_monic(g, p);
      best = std::min(best, modp::degree(g));
      ++used;
    }
    if (used == 0) throw OracleInconsistency("no usable prime for a random line");
    long value = static_cast<long>(d) - best;
    if (agreed >= 0 && value != agreed) {
      throw OracleInconsistency("random-line trials disagree: " + std::to_string(agreed) +
                                " vs " + std::to_string(value));
    }
    agreed = value;
  }
  return static_cast<unsigned long>(agreed);
}

InvolutionReport involution_report() {
  InvolutionReport rep;
  const PlaneRationalMap g = g_map();
  rep.g_squared_is_identity = (compose(g, g) == identity_map());
  if (!rep.g_squared_is_identity) rep.failures.push_back("g o g is not the identity");

  const PlaneRationalMap a = linear_map({{{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}}});
  const PlaneRationalMap a_inv = linear_map({{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}});
  rep.conjugate_is_standard = (compose(a, compose(g, a_inv)) == standard_cremona());
  if (!rep.conjugate_is_standard) {
    rep.failures.push_back("A o g o A^-1 is not [x1x2 : x2x0 : x0x1]");
  }

  const std::array<std::array<long, 2>, 3> samples = {{{1, 1}, {1, 2}, {2, 3}}};
  const std::array<std::array<Int, 3>, 3> targets = {
      {{Int(0), Int(1), Int(1)}, {Int(1), Int(0), Int(1)}, {Int(1), Int(1), Int(0)}}};
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      Int s = samples[k][0];
      Int t = samples[k][1];
      // L_j: x_j = sum of the other two coordinates.
      std::array<Int, 3> pt;
      if (j == 0) pt = {s + t, s, t};
      if (j == 1) pt = {s, s + t, t};
      if (j == 2) pt = {s, t, s + t};
      bool ok = projectively_equal(g.eval(pt), targets[j]);
      rep.line_collapse[j][k] = ok;
      if (!ok) {
        rep.failures.push_back("g does not contract L" + std::to_string(j) + " to p" +
                               std::to_string(j) + " at sample " + std::to_string(k));
      }
    }
  }
  return rep;
}

InvolutionReport involution_checks() {
  InvolutionReport rep = involution_report();
  if (!rep.all_passed()) throw CheckFailed(rep.failures.front());
  return rep;
}

}  // namespace dyndeg
