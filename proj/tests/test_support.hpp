#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "torusjump/groebner.hpp"
#include "torusjump/polynomial.hpp"

namespace tjtest {

using namespace torusjump;

inline CoeffDomain qq() { return CoeffDomain::rationals(); }
inline CoeffDomain zz() { return CoeffDomain::integers(); }
inline CoeffDomain fp(long p) { return CoeffDomain::prime_field(p); }

inline LaurentRing qring(int n) { return LaurentRing(n, qq()); }

inline Polynomial P(const LaurentRing& r, const std::string& text) {
  return Polynomial::parse(r, text);
}

inline Ideal ideal_of(const LaurentRing& r,
                      const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(r, g));
  return Ideal(r, std::move(ps));
}

inline std::vector<mpq_class> point(const std::vector<std::string>& coords) {
  std::vector<mpq_class> out;
  for (const auto& c : coords) {
    mpq_class v(c);
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

// Term-map multiplication oracle, independent of Polynomial's internals.
inline Polynomial naive_mul(const Polynomial& a, const Polynomial& b) {
  const CoeffDomain& dom = a.ring().coeff();
  std::map<std::vector<std::uint32_t>, mpq_class> acc;
  for (const Term& s : a.terms())
    for (const Term& t : b.terms())
      acc[(s.mono * t.mono).exponents()] =
          dom.add(acc[(s.mono * t.mono).exponents()],
                  dom.mul(s.coeff, t.coeff));
  std::vector<Term> terms;
  for (auto& [e, c] : acc)
    if (c != 0) terms.push_back({Monomial(e), c});
  return Polynomial::from_terms(a.ring(), std::move(terms));
}

// Deterministic sampler; raw modulo keeps the stream identical across
// standard libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next(std::uint64_t bound) { return eng_() % bound; }
  long coeff_int(long half_range) {
    return static_cast<long>(next(2 * static_cast<std::uint64_t>(half_range) +
                                  1)) -
           half_range;
  }

  Polynomial poly(const LaurentRing& r, std::size_t max_terms,
                  std::uint32_t max_exp, long coeff_range = 5) {
    std::vector<Term> terms;
    std::size_t nterms = 1 + next(max_terms);
    for (std::size_t k = 0; k < nterms; ++k) {
      Monomial m(static_cast<std::size_t>(r.num_vars()));
      for (int i = 0; i < r.num_vars(); ++i)
        m[static_cast<std::size_t>(i)] =
            static_cast<std::uint32_t>(next(max_exp + 1));
      mpq_class c(coeff_int(coeff_range));
      c = r.coeff().normalize(c);
      if (c != 0) terms.push_back({m, c});
    }
    return Polynomial::from_terms(r, std::move(terms));
  }

private:
  std::mt19937_64 eng_;
};

}  // namespace tjtest
