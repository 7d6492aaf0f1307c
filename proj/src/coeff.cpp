#include "torusjump/coeff.hpp"

#include <stdexcept>

#include "torusjump/errors.hpp"

namespace torusjump {

bool is_prime(long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

CoeffDomain CoeffDomain::prime_field(long p) {
  if (p < 2 || p >= (1L << 31))
    throw DomainError("prime field characteristic out of range: " +
                      std::to_string(p));
  if (!is_prime(p))
    throw DomainError("not a prime: " + std::to_string(p));
  return CoeffDomain(CoeffKind::PrimeField, p);
}

mpq_class CoeffDomain::normalize(const mpq_class& v) const {
  switch (kind_) {
    case CoeffKind::Rational:
      return v;
    case CoeffKind::Integer:
      if (v.get_den() != 1)
        throw DomainError("not an integer: " + v.get_str());
      return v;
    case CoeffKind::PrimeField: {
      mpz_class p(p_);
      mpz_class den = v.get_den() % p;
      if (den == 0)
        throw DomainError("denominator of " + v.get_str() +
                          " vanishes mod " + std::to_string(p_));
      mpz_class deninv;
      mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      mpz_class r = (v.get_num() % p) * deninv % p;
      if (r < 0) r += p;
      return mpq_class(r);
    }
  }
  throw std::logic_error("bad coeff kind");
}

bool CoeffDomain::is_canonical(const mpq_class& v) const {
  switch (kind_) {
    case CoeffKind::Rational:
      return true;
    case CoeffKind::Integer:
      return v.get_den() == 1;
    case CoeffKind::PrimeField:
      return v.get_den() == 1 && v.get_num() >= 0 && v.get_num() < p_;
  }
  return false;
}

mpq_class CoeffDomain::add(const mpq_class& a, const mpq_class& b) const {
  mpq_class r = a + b;
  return kind_ == CoeffKind::PrimeField ? normalize(r) : r;
}

mpq_class CoeffDomain::sub(const mpq_class& a, const mpq_class& b) const {
  mpq_class r = a - b;
  return kind_ == CoeffKind::PrimeField ? normalize(r) : r;
}

mpq_class CoeffDomain::mul(const mpq_class& a, const mpq_class& b) const {
  mpq_class r = a * b;
  return kind_ == CoeffKind::PrimeField ? normalize(r) : r;
}

mpq_class CoeffDomain::neg(const mpq_class& a) const {
  return kind_ == CoeffKind::PrimeField ? normalize(-a) : mpq_class(-a);
}

mpq_class CoeffDomain::inv(const mpq_class& a) const {
  if (a == 0) throw DomainError("division by zero");
  switch (kind_) {
    case CoeffKind::Rational:
      return 1 / a;
    case CoeffKind::Integer:
      if (a != 1 && a != -1)
        throw DomainError("not invertible over the integers: " + a.get_str());
      return a;
    case CoeffKind::PrimeField: {
      mpq_class c = normalize(a);
      if (c == 0) throw DomainError("division by zero");
      mpz_class p(p_), r;
      mpz_class num = c.get_num();
      mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
      if (r < 0) r += p;
      return mpq_class(r);
    }
  }
  throw std::logic_error("bad coeff kind");
}

mpq_class CoeffDomain::div(const mpq_class& a, const mpq_class& b) const {
  return mul(a, inv(b));
}

mpq_class CoeffDomain::pow(const mpq_class& a, std::uint64_t e) const {
  mpq_class acc = 1, base = normalize(a);
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

bool CoeffDomain::is_invertible(const mpq_class& a) const {
  if (kind_ == CoeffKind::Integer) return a == 1 || a == -1;
  return normalize(a) != 0;
}

std::string CoeffDomain::to_string() const {
  switch (kind_) {
    case CoeffKind::Rational:
      return "QQ";
    case CoeffKind::Integer:
      return "ZZ";
    case CoeffKind::PrimeField:
      return "F" + std::to_string(p_);
  }
  return "?";
}

CoeffDomain CoeffDomain::parse(const std::string& text) {
  if (text == "QQ" || text == "qq") return rationals();
  if (text == "ZZ" || text == "zz") return integers();
  std::string body;
  if (text.size() > 3 && (text.rfind("fp:", 0) == 0 || text.rfind("Fp:", 0) == 0))
    body = text.substr(3);
  else if (text.size() > 1 && (text[0] == 'F' || text[0] == 'f'))
    body = text.substr(1);
  if (!body.empty()) {
    try {
      std::size_t used = 0;
      long p = std::stol(body, &used);
      if (used == body.size()) return prime_field(p);
    } catch (const std::logic_error&) {
    }
  }
  throw ParseError("unknown coefficient domain: " + text);
}

}  // namespace torusjump
