#include "torusjump/gfext.hpp"

#include <algorithm>
#include <sstream>

#include "torusjump/coeff.hpp"
#include "torusjump/errors.hpp"

namespace torusjump {

namespace {

long mulmod(long a, long b, long p) {
  return static_cast<long>(static_cast<unsigned __int128>(a) * b % p);
}

long addmod(long a, long b, long p) { return (a + b) % p; }

long submod(long a, long b, long p) { return ((a - b) % p + p) % p; }

long invmod(long a, long p) {
  long t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    long q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (r != 1) throw DomainError("not invertible mod p");
  return ((t % p) + p) % p;
}

using Poly = std::vector<long>;  // little-endian, may carry trailing zeros

int deg(const Poly& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly polymul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = addmod(c[i + j], mulmod(a[i], b[j], p), p);
  }
  return c;
}

// Remainder modulo a monic f.
Poly polymod(Poly a, const Poly& f, long p) {
  int df = deg(f);
  for (int i = deg(a); i >= df; --i) {
    long c = a[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (int j = 0; j <= df; ++j) {
      std::size_t k = static_cast<std::size_t>(i - df + j);
      a[k] = submod(a[k], mulmod(c, f[static_cast<std::size_t>(j)], p), p);
    }
  }
  a.resize(static_cast<std::size_t>(std::max(df, 1)), 0);
  return a;
}

Poly polypow_mod(Poly base, unsigned long e, const Poly& f, long p) {
  Poly acc{1};
  base = polymod(std::move(base), f, p);
  while (e) {
    if (e & 1) acc = polymod(polymul(acc, base, p), f, p);
    base = polymod(polymul(base, base, p), f, p);
    e >>= 1;
  }
  return acc;
}

Poly polygcd(Poly a, Poly b, long p) {
  while (deg(b) >= 0) {
    // a mod b with b made monic first
    long lc = b[static_cast<std::size_t>(deg(b))];
    long lcinv = invmod(lc, p);
    Poly bm(b.begin(), b.begin() + deg(b) + 1);
    for (long& c : bm) c = mulmod(c, lcinv, p);
    a = polymod(std::move(a), bm, p);
    std::swap(a, b);
  }
  return a;
}

// x^{p^k} mod f by iterated powering.
Poly frobenius_iterate(const Poly& f, long p, int k) {
  Poly x{0, 1};
  Poly g = polymod(x, f, p);
  for (int i = 0; i < k; ++i)
    g = polypow_mod(g, static_cast<unsigned long>(p), f, p);
  return g;
}

bool poly_eq_x(const Poly& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    long want = (i == 1) ? 1 : 0;
    if (g[i] != want) return false;
  }
  return g.size() >= 2;
}

bool is_irreducible(const Poly& f, long p, int r) {
  if (r == 1) return true;
  Poly top = frobenius_iterate(f, p, r);
  if (!poly_eq_x(top)) return false;
  // Prime divisors of r for r in {2,3,4}: the single relevant proper power.
  int sub = (r == 4) ? 2 : 1;
  Poly h = frobenius_iterate(f, p, sub);
  if (static_cast<std::size_t>(1) >= h.size()) h.resize(2, 0);
  h[1] = submod(h[1], 1, p);
  Poly g = polygcd(f, h, p);
  return deg(g) == 0;
}

}  // namespace

GFExt::GFExt(long p, int r) : p_(p), r_(r) {
  if (!is_prime(p) || p >= (1L << 31))
    throw DomainError("extension base must be a prime below 2^31");
  if (r < 1 || r > 4)
    throw UnsupportedError("extension degree " + std::to_string(r) +
                           " out of supported range 1..4");
  std::size_t n = static_cast<std::size_t>(r);
  // Enumerate lower coefficients as base-p digits until irreducible.
  for (unsigned long k = 0;; ++k) {
    Poly f(n + 1, 0);
    f[n] = 1;
    unsigned long v = k;
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = static_cast<long>(v % static_cast<unsigned long>(p));
      v /= static_cast<unsigned long>(p);
    }
    if (v != 0) throw Error("no irreducible modulus found");
    if (is_irreducible(f, p, r)) {
      mod_ = std::move(f);
      break;
    }
  }
}

GFExt::Elem GFExt::from_int(long v) const {
  Elem e = zero();
  e[0] = ((v % p_) + p_) % p_;
  return e;
}

GFExt::Elem GFExt::make(std::vector<long> coeffs) const {
  Poly a(coeffs.begin(), coeffs.end());
  for (long& c : a) c = ((c % p_) + p_) % p_;
  a = polymod(std::move(a), mod_, p_);
  a.resize(static_cast<std::size_t>(r_), 0);
  return a;
}

bool GFExt::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](long c) { return c == 0; });
}

GFExt::Elem GFExt::add(const Elem& a, const Elem& b) const {
  Elem c = zero();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = addmod(a[i], b[i], p_);
  return c;
}

GFExt::Elem GFExt::sub(const Elem& a, const Elem& b) const {
  Elem c = zero();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = submod(a[i], b[i], p_);
  return c;
}

GFExt::Elem GFExt::neg(const Elem& a) const { return sub(zero(), a); }

GFExt::Elem GFExt::mul(const Elem& a, const Elem& b) const {
  Poly c = polymod(polymul(Poly(a.begin(), a.end()),
                           Poly(b.begin(), b.end()), p_),
                   mod_, p_);
  c.resize(static_cast<std::size_t>(r_), 0);
  return c;
}

GFExt::Elem GFExt::inv(const Elem& a) const {
  if (is_zero(a)) throw DomainError("division by zero in the extension field");
  // Extended Euclid against the modulus.
  Poly r0 = mod_, r1(a.begin(), a.end());
  Poly s0{}, s1{1};
  while (deg(r1) >= 0) {
    long lc = r1[static_cast<std::size_t>(deg(r1))];
    long lcinv = invmod(lc, p_);
    // quotient of r0 by r1
    Poly q(static_cast<std::size_t>(
               std::max(deg(r0) - deg(r1) + 1, 1)),
           0);
    Poly rem = r0;
    for (int i = deg(rem); i >= deg(r1); --i) {
      long c = rem[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      long f = mulmod(c, lcinv, p_);
      q[static_cast<std::size_t>(i - deg(r1))] = f;
      for (int j = 0; j <= deg(r1); ++j) {
        std::size_t k = static_cast<std::size_t>(i - deg(r1) + j);
        rem[k] = submod(rem[k],
                        mulmod(f, r1[static_cast<std::size_t>(j)], p_), p_);
      }
    }
    Poly s2 = s0;
    Poly qs1 = polymul(q, s1, p_);
    s2.resize(std::max(s2.size(), qs1.size()), 0);
    for (std::size_t i = 0; i < qs1.size(); ++i)
      s2[i] = submod(s2[i], qs1[i], p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (deg(r0) != 0) throw DomainError("element not invertible");
  long scale = invmod(r0[0], p_);
  Poly res = s0;
  for (long& c : res) c = mulmod(c, scale, p_);
  res = polymod(std::move(res), mod_, p_);
  res.resize(static_cast<std::size_t>(r_), 0);
  return res;
}

GFExt::Elem GFExt::pow(const Elem& a, std::uint64_t e) const {
  Elem acc = one(), base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::string GFExt::to_string(const Elem& a) const {
  if (r_ == 1) return std::to_string(a[0]);
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out << ",";
    out << a[i];
  }
  out << "]";
  return out.str();
}

}  // namespace torusjump
