#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace torusjump {

bool is_prime(long n);

enum class CoeffKind { Rational, PrimeField, Integer };

// Coefficient domain descriptor plus exact element arithmetic.  Elements are
// carried as mpq_class in every domain: prime-field elements are residues
// with denominator 1 in [0, p), integers have denominator 1.
class CoeffDomain {
public:
  static CoeffDomain rationals() { return CoeffDomain(CoeffKind::Rational, 0); }
  static CoeffDomain integers() { return CoeffDomain(CoeffKind::Integer, 0); }
  static CoeffDomain prime_field(long p);

  CoeffKind kind() const { return kind_; }
  long prime() const { return p_; }
  bool is_field() const { return kind_ != CoeffKind::Integer; }
  bool operator==(const CoeffDomain&) const = default;

  // Canonical representative: reduces mod p, rejects non-integers over Z and
  // residue denominators divisible by p.
  mpq_class normalize(const mpq_class& v) const;
  bool is_canonical(const mpq_class& v) const;

  mpq_class add(const mpq_class& a, const mpq_class& b) const;
  mpq_class sub(const mpq_class& a, const mpq_class& b) const;
  mpq_class mul(const mpq_class& a, const mpq_class& b) const;
  mpq_class neg(const mpq_class& a) const;
  mpq_class inv(const mpq_class& a) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const;
  mpq_class pow(const mpq_class& a, std::uint64_t e) const;
  bool is_invertible(const mpq_class& a) const;

  std::string to_string() const;
  static CoeffDomain parse(const std::string& text);

private:
  CoeffDomain(CoeffKind kind, long p) : kind_(kind), p_(p) {}
  CoeffKind kind_;
  long p_;
};

}  // namespace torusjump
