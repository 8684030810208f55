#include "dyndeg/homopoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "dyndeg/kernels.hpp"

namespace dyndeg {

namespace {

bool key_greater(const Term& a, const Term& b) { return pack(a.e) > pack(b.e); }

// Dense scan is used up to this dividend degree; above it a sparse
// ordered map keeps memory proportional to the number of terms.
constexpr unsigned kDenseDivisionDegree = 1200;

std::optional<HomoPoly> divide_dense(const HomoPoly& f, const HomoPoly& g) {
  const unsigned d = f.degree();
  std::vector<std::size_t> row(d + 2, 0);
  for (unsigned e0 = 0; e0 <= d; ++e0) row[e0 + 1] = row[e0] + (d - e0 + 1);
  auto index = [&](std::uint32_t e0, std::uint32_t e1) { return row[e0] + e1; };

  std::vector<Int> acc(row[d + 1]);
  for (const Term& t : f.terms()) acc[index(t.e[0], t.e[1])] = t.c;

  const Term& lead = g.leading();
  std::vector<Term> quotient;
  Int q;
  for (unsigned e0 = d + 1; e0-- > 0;) {
    for (unsigned e1 = d - e0 + 1; e1-- > 0;) {
      Int& cell = acc[index(e0, e1)];
      if (sgn(cell) == 0) continue;
      unsigned e2 = d - e0 - e1;
      if (e0 < lead.e[0] || e1 < lead.e[1] || e2 < lead.e[2]) return std::nullopt;
      if (!mpz_divisible_p(cell.get_mpz_t(), lead.c.get_mpz_t())) return std::nullopt;
      mpz_divexact(q.get_mpz_t(), cell.get_mpz_t(), lead.c.get_mpz_t());
      Exponent qe{e0 - lead.e[0], e1 - lead.e[1], e2 - lead.e[2]};
      for (const Term& t : g.terms()) {
        Int& target = acc[index(qe[0] + t.e[0], qe[1] + t.e[1])];
        mpz_submul(target.get_mpz_t(), q.get_mpz_t(), t.c.get_mpz_t());
      }
      quotient.push_back({qe, q});
    }
  }
  return HomoPoly::from_sorted(f.degree() - g.degree(), std::move(quotient));
}

std::optional<HomoPoly> divide_sparse(const HomoPoly& f, const HomoPoly& g) {
  std::map<std::uint64_t, Int, std::greater<>> rem;
  for (const Term& t : f.terms()) rem.emplace(pack(t.e), t.c);
  const Term& lead = g.leading();
  std::vector<Term> quotient;
  Int q;
  while (!rem.empty()) {
    auto it = rem.begin();
    Exponent e = unpack(it->first);
    if (e[0] < lead.e[0] || e[1] < lead.e[1] || e[2] < lead.e[2]) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), lead.c.get_mpz_t())) return std::nullopt;
    mpz_divexact(q.get_mpz_t(), it->second.get_mpz_t(), lead.c.get_mpz_t());
    Exponent qe{e[0] - lead.e[0], e[1] - lead.e[1], e[2] - lead.e[2]};
    for (const Term& t : g.terms()) {
      Exponent te{qe[0] + t.e[0], qe[1] + t.e[1], qe[2] + t.e[2]};
      auto [slot, inserted] = rem.try_emplace(pack(te));
      mpz_submul(slot->second.get_mpz_t(), q.get_mpz_t(), t.c.get_mpz_t());
      if (sgn(slot->second) == 0) rem.erase(slot);
    }
    quotient.push_back({qe, q});
  }
  return HomoPoly::from_sorted(f.degree() - g.degree(), std::move(quotient));
}

}  // namespace

HomoPoly HomoPoly::from_terms(unsigned degree, std::vector<Term> terms) {
  for (const Term& t : terms) {
    if (std::uint64_t{t.e[0]} + t.e[1] + t.e[2] != degree) {
      throw std::invalid_argument("HomoPoly: term degree differs from " + std::to_string(degree));
    }
    if (t.e[0] > kMaxExponent || t.e[1] > kMaxExponent || t.e[2] > kMaxExponent) {
      throw std::invalid_argument("HomoPoly: exponent too large");
    }
  }
  std::stable_sort(terms.begin(), terms.end(), key_greater);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (Term& t : terms) {
    if (!merged.empty() && merged.back().e == t.e) {
      merged.back().c += t.c;
    } else {
      if (!merged.empty() && sgn(merged.back().c) == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && sgn(merged.back().c) == 0) merged.pop_back();
  return from_sorted(degree, std::move(merged));
}

HomoPoly HomoPoly::from_sorted(unsigned degree, std::vector<Term> terms) {
  HomoPoly p(degree);
  p.terms_ = std::move(terms);
  return p;
}

HomoPoly HomoPoly::monomial(Int c, const Exponent& e) {
  unsigned d = e[0] + e[1] + e[2];
  if (sgn(c) == 0) return HomoPoly(d);
  return from_terms(d, {Term{e, std::move(c)}});
}

HomoPoly HomoPoly::variable(int k) {
  if (k < 0 || k > 2) throw std::out_of_range("HomoPoly::variable");
  Exponent e{0, 0, 0};
  e[static_cast<std::size_t>(k)] = 1;
  return monomial(Int(1), e);
}

Int HomoPoly::content() const {
  Int g = 0;
  for (const Term& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Exponent HomoPoly::min_exponents() const {
  if (terms_.empty()) return {0, 0, 0};
  Exponent m = terms_.front().e;
  for (const Term& t : terms_) {
    for (int k = 0; k < 3; ++k) m[k] = std::min(m[k], t.e[k]);
  }
  return m;
}

Exponent HomoPoly::max_exponents() const {
  Exponent m{0, 0, 0};
  for (const Term& t : terms_) {
    for (int k = 0; k < 3; ++k) m[k] = std::max(m[k], t.e[k]);
  }
  return m;
}

HomoPoly HomoPoly::operator-() const {
  HomoPoly out = *this;
  for (Term& t : out.terms_) t.c = -t.c;
  return out;
}

HomoPoly HomoPoly::scaled(const Int& k) const {
  if (sgn(k) == 0) return HomoPoly(degree_);
  HomoPoly out = *this;
  for (Term& t : out.terms_) t.c *= k;
  return out;
}

HomoPoly HomoPoly::divided_by(const Int& k) const {
  HomoPoly out = *this;
  for (Term& t : out.terms_) {
    if (!mpz_divisible_p(t.c.get_mpz_t(), k.get_mpz_t())) {
      throw std::domain_error("HomoPoly::divided_by: coefficient not divisible");
    }
    mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), k.get_mpz_t());
  }
  return out;
}

HomoPoly HomoPoly::times_monomial(const Exponent& e) const {
  HomoPoly out(degree_ + e[0] + e[1] + e[2]);
  out.terms_ = terms_;
  for (Term& t : out.terms_) {
    for (int k = 0; k < 3; ++k) t.e[k] += e[k];
  }
  return out;
}

HomoPoly HomoPoly::over_monomial(const Exponent& e) const {
  unsigned s = e[0] + e[1] + e[2];
  if (s > degree_) throw std::domain_error("HomoPoly::over_monomial: degree too small");
  HomoPoly out(degree_ - s);
  out.terms_ = terms_;
  for (Term& t : out.terms_) {
    for (int k = 0; k < 3; ++k) {
      if (t.e[k] < e[k]) throw std::domain_error("HomoPoly::over_monomial: not divisible");
      t.e[k] -= e[k];
    }
  }
  return out;
}

Int HomoPoly::eval(const std::array<Int, 3>& x) const {
  Int sum = 0;
  Int term, pw;
  for (const Term& t : terms_) {
    term = t.c;
    for (int k = 0; k < 3; ++k) {
      mpz_pow_ui(pw.get_mpz_t(), x[k].get_mpz_t(), t.e[k]);
      term *= pw;
    }
    sum += term;
  }
  return sum;
}

HomoPoly operator+(const HomoPoly& a, const HomoPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() != b.degree()) throw std::invalid_argument("HomoPoly: adding unequal degrees");
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  while (i != a.terms().end() || j != b.terms().end()) {
    if (j == b.terms().end() || (i != a.terms().end() && pack(i->e) > pack(j->e))) {
      out.push_back(*i++);
    } else if (i == a.terms().end() || pack(j->e) > pack(i->e)) {
      out.push_back(*j++);
    } else {
      Int c = i->c + j->c;
      if (sgn(c) != 0) out.push_back({i->e, std::move(c)});
      ++i;
      ++j;
    }
  }
  return HomoPoly::from_sorted(a.degree(), std::move(out));
}

HomoPoly operator-(const HomoPoly& a, const HomoPoly& b) { return a + (-b); }

HomoPoly operator*(const HomoPoly& a, const HomoPoly& b) { return kernels::mul_parallel(a, b); }

std::string HomoPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    Int mag = abs(t.c);
    if (first) {
      if (sgn(t.c) < 0) out += "-";
    } else {
      out += sgn(t.c) < 0 ? " - " : " + ";
    }
    bool unit = (mag == 1);
    bool any_var = false;
    std::string vars;
    for (int k = 0; k < 3; ++k) {
      if (t.e[k] == 0) continue;
      if (any_var) vars += "*";
      vars += "x" + std::to_string(k);
      if (t.e[k] > 1) vars += "^" + std::to_string(t.e[k]);
      any_var = true;
    }
    if (!unit || !any_var) {
      out += mag.get_str();
      if (any_var) out += "*";
    }
    out += vars;
    first = false;
  }
  return out;
}

HomoPoly pow(const HomoPoly& a, unsigned n) {
  HomoPoly result = HomoPoly::monomial(Int(1), {0, 0, 0});
  HomoPoly base = a;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::optional<HomoPoly> divide_exact(const HomoPoly& f, const HomoPoly& g) {
  if (g.is_zero()) throw std::domain_error("divide_exact: zero divisor");
  if (g.degree() > f.degree()) {
    if (f.is_zero()) return HomoPoly(0);
    return std::nullopt;
  }
  if (f.is_zero()) return HomoPoly(f.degree() - g.degree());
  if (g.is_monomial()) {
    const Term& m = g.leading();
    std::vector<Term> out;
    out.reserve(f.size());
    for (const Term& t : f.terms()) {
      if (t.e[0] < m.e[0] || t.e[1] < m.e[1] || t.e[2] < m.e[2]) return std::nullopt;
      if (!mpz_divisible_p(t.c.get_mpz_t(), m.c.get_mpz_t())) return std::nullopt;
      Int q;
      mpz_divexact(q.get_mpz_t(), t.c.get_mpz_t(), m.c.get_mpz_t());
      out.push_back({{t.e[0] - m.e[0], t.e[1] - m.e[1], t.e[2] - m.e[2]}, std::move(q)});
    }
    return HomoPoly::from_sorted(f.degree() - g.degree(), std::move(out));
  }
  if (f.degree() <= kDenseDivisionDegree) return divide_dense(f, g);
  return divide_sparse(f, g);
}

}  // namespace dyndeg
