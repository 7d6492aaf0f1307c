#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "torusjump/coeff.hpp"
#include "torusjump/monomial.hpp"

namespace torusjump {

// k[t1..tN] with torus geometry supplied by saturation at t1*...*tN.
class LaurentRing {
public:
  LaurentRing(int num_vars, CoeffDomain coeff);

  int num_vars() const { return nvars_; }
  const CoeffDomain& coeff() const { return coeff_; }
  bool operator==(const LaurentRing&) const = default;

  // Same variables plus `extra` fresh ones appended at the end.
  LaurentRing extended(int extra = 1) const;
  LaurentRing with_coeff(CoeffDomain c) const { return LaurentRing(nvars_, c); }

  std::string variable_name(int i) const;
  std::string to_string() const;

private:
  int nvars_;
  CoeffDomain coeff_;
};

struct Term {
  Monomial mono;
  mpq_class coeff;
  bool operator==(const Term&) const = default;
};

// Terms are kept nonzero, coefficient-canonical, and sorted degrevlex
// descending; equal polynomials are representation-equal.
class Polynomial {
public:
  explicit Polynomial(LaurentRing ring) : ring_(std::move(ring)) {}

  static Polynomial zero(const LaurentRing& r) { return Polynomial(r); }
  static Polynomial constant(const LaurentRing& r, const mpq_class& c);
  static Polynomial one(const LaurentRing& r) { return constant(r, 1); }
  // i is 0-based; t1 is variable(r, 0).
  static Polynomial variable(const LaurentRing& r, int i);
  static Polynomial monomial(const LaurentRing& r, Monomial m,
                             const mpq_class& c);
  static Polynomial from_terms(const LaurentRing& r, std::vector<Term> terms);

  const LaurentRing& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  std::uint64_t degree() const;  // total degree; 0 for the zero polynomial
  std::size_t term_count() const { return terms_.size(); }
  // Coefficient of m (zero if absent).
  mpq_class coefficient(const Monomial& m) const;

  const Term& leading_term(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  bool operator==(const Polynomial& g) const;

  Polynomial scaled(const mpq_class& c) const;
  Polynomial times_monomial(const Monomial& m, const mpq_class& c) const;
  // Exact quotient; throws DomainError when g does not divide this.
  Polynomial exact_div(const Polynomial& g) const;

  // Point evaluation; every coordinate must be a nonzero element of the
  // coefficient domain.
  mpq_class evaluate(std::span<const mpq_class> point) const;
  // Substitution t_i -> lambda_i * t_i; every lambda_i must be invertible.
  Polynomial scale_vars(std::span<const mpq_class> lambda) const;
  // Z -> QQ or Z -> Fp coefficient reduction.
  Polynomial reduce_coefficients(const CoeffDomain& target) const;
  // Same exponents read in a ring with extra trailing variables.
  Polynomial lift_to(const LaurentRing& bigger) const;
  // Drop trailing variables; they must not occur.
  Polynomial restrict_to(const LaurentRing& smaller) const;

  std::string to_string() const;
  static Polynomial parse(const LaurentRing& r, std::string_view text);

private:
  LaurentRing ring_;
  std::vector<Term> terms_;
};

inline Polynomial operator*(const mpq_class& c, const Polynomial& f) {
  return f.scaled(c);
}

// Deterministic total order on same-ring polynomials (degrevlex on the term
// lists); used to keep generator sets sorted.
bool poly_less(const Polynomial& f, const Polynomial& g);

}  // namespace torusjump
