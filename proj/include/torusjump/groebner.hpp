#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "torusjump/polynomial.hpp"

namespace torusjump {

// Resource limits; exceeding any cap raises ResourceLimitError instead of
// running unbounded.
struct Caps {
  std::uint64_t max_degree = 200;
  std::size_t max_basis = 5000;
  std::size_t max_minors = 100000;
};

class Ideal {
public:
  Ideal(LaurentRing ring, std::vector<Polynomial> generators);

  static Ideal zero(const LaurentRing& r) { return Ideal(r, {}); }
  static Ideal unit(const LaurentRing& r) {
    return Ideal(r, {Polynomial::one(r)});
  }

  const LaurentRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  // No generators: V(I) is the whole space.
  bool has_no_generators() const { return gens_.empty(); }

  // Reduced degrevlex basis, computed once per value and shared by copies.
  const std::vector<Polynomial>& groebner(const Caps& caps = {}) const;

private:
  LaurentRing ring_;
  std::vector<Polynomial> gens_;
  struct GbCache {
    std::once_flag once;
    std::optional<std::vector<Polynomial>> basis;
  };
  std::shared_ptr<GbCache> cache_;
};

// Reduced Groebner basis of the span of `gens` under `order`: monic, pairwise
// non-dividing leading monomials, every element fully reduced, sorted by
// leading monomial ascending.  The unit ideal yields {1}, the zero ideal {}.
std::vector<Polynomial> groebner_basis(const LaurentRing& ring,
                                       const std::vector<Polynomial>& gens,
                                       const MonomialOrder& order,
                                       const Caps& caps = {});

// Remainder of the division of f by `basis` under `order`; zero iff f lies in
// the span when `basis` is a Groebner basis.
Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis,
                       const MonomialOrder& order);

bool ideal_membership(const Polynomial& f, const Ideal& I,
                      const Caps& caps = {});

// f in rad(I), decided by adjoining 1 - y*f and testing for the unit ideal.
bool radical_membership(const Polynomial& f, const Ideal& I,
                        const Caps& caps = {});

bool is_unit_ideal(const Ideal& I, const Caps& caps = {});

// I : f^infinity via elimination of the auxiliary variable.
Ideal saturate(const Ideal& I, const Polynomial& f, const Caps& caps = {});

// Saturation at t1*...*tN; restricts loci to the torus.
Ideal saturate_torus(const Ideal& I, const Caps& caps = {});

struct DimensionResult {
  int dim;    // -1 encodes the empty locus (unit ideal)
  int codim;  // num_vars - dim
  bool operator==(const DimensionResult&) const = default;
};

// Krull dimension of V(I) from the initial ideal: the largest variable subset
// meeting no leading-monomial support.  Callers pass saturated ideals when
// torus geometry is intended.
DimensionResult dimension(const Ideal& I, const Caps& caps = {});

// V(J) contained in V(K): every generator of K lies in rad(J).
bool variety_containment(const Ideal& J, const Ideal& K,
                         const Caps& caps = {});

// Equality of varieties, containment both ways.
bool same_variety(const Ideal& J, const Ideal& K, const Caps& caps = {});

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);

}  // namespace torusjump
