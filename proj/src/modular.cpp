#include "dyndeg/modular.hpp"

#include <stdexcept>

namespace dyndeg::modp {

u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("modp::inv of zero");
  return pow(a, p - 2, p);
}

u64 residue(const Int& v, u64 p) {
  static_assert(sizeof(unsigned long) == sizeof(u64));
  return mpz_fdiv_ui(v.get_mpz_t(), p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 PrimeSequence::next() {
  do {
    --last_;
  } while (!is_prime(last_));
  return last_;
}

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const UPoly& f) { return static_cast<long>(f.size()) - 1; }

u64 eval(const UPoly& f, u64 x, u64 p) {
  u64 acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = add(mul(acc, x, p), *it, p);
  return acc;
}

UPoly rem(UPoly a, const UPoly& b, u64 p) {
  trim(a);
  long db = degree(b);
  if (db < 0) throw std::domain_error("modp::rem by zero");
  u64 lead_inv = inv(b.back(), p);
  while (degree(a) >= db) {
    std::size_t shift = a.size() - b.size();
    u64 q = mul(a.back(), lead_inv, p);
    for (std::size_t k = 0; k < b.size(); ++k) {
      a[shift + k] = sub(a[shift + k], mul(q, b[k], p), p);
    }
    trim(a);
  }
  return a;
}

void make_monic(UPoly& f, u64 p) {
  trim(f);
  if (f.empty()) return;
  u64 li = inv(f.back(), p);
  for (u64& c : f) c = mul(c, li, p);
}

UPoly gcd(UPoly a, UPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = rem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a, p);
  return a;
}

Interpolator::Interpolator(std::vector<u64> xs, u64 p) : xs_(std::move(xs)), p_(p) {
  std::size_t n = xs_.size();
  // master = prod (X - x_k), low to high, degree n
  UPoly master(n + 1, 0);
  master[0] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = k + 1; i >= 1; --i) {
      master[i] = sub(master[i - 1], mul(master[i], xs_[k], p), p);
    }
    master[0] = sub(0, mul(master[0], xs_[k], p), p);
  }
  basis_.assign(n * n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    // q = master / (X - x_k) by synthetic division, then scale by 1 / q(x_k)
    u64* q = &basis_[k * n];
    u64 carry = 0;
    for (std::size_t i = n; i >= 1; --i) {
      carry = add(master[i], mul(carry, xs_[k], p), p);
      q[i - 1] = carry;
    }
    u64 denom = 0;
    for (std::size_t i = n; i-- > 0;) denom = add(mul(denom, xs_[k], p), q[i], p);
    u64 scale = inv(denom, p);
    for (std::size_t i = 0; i < n; ++i) q[i] = mul(q[i], scale, p);
  }
}

UPoly Interpolator::operator()(const std::vector<u64>& ys) const {
  std::size_t n = xs_.size();
  if (ys.size() != n) throw std::invalid_argument("interpolate: size mismatch");
  UPoly out(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (ys[k] == 0) continue;
    const u64* q = &basis_[k * n];
    for (std::size_t i = 0; i < n; ++i) out[i] = add(out[i], mul(ys[k], q[i], p_), p_);
  }
  trim(out);
  return out;
}

UPoly interpolate(const std::vector<u64>& xs, const std::vector<u64>& ys, u64 p) {
  return Interpolator(xs, p)(ys);
}

}  // namespace dyndeg::modp
