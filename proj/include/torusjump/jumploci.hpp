#pragma once

#include <memory>
#include <span>
#include <vector>

#include "torusjump/chaincx.hpp"
#include "torusjump/gfext.hpp"
#include "torusjump/groebner.hpp"

namespace torusjump {

struct RankTriple {
  std::size_t rank_in;   // rank of the incoming differential
  std::size_t rank_out;  // rank of the outgoing differential
  int rank_free;         // rank of the free module in this degree
  bool operator==(const RankTriple&) const = default;
};

struct DegreeLocus {
  Ideal ideal;  // jumping ideal, saturated at t1*...*tN
  RankTriple ranks;
  DimensionResult dim;
  bool whole_torus;  // saturated ideal has no generators
  bool empty;        // saturated ideal is the unit ideal
};

// Saturated jump loci of a complex, one record per degree lo..hi.  Holds the
// complex the loci were computed from so downstream checks can re-evaluate
// fibers.
class JumpLocusSet {
public:
  const FreeComplex& source() const { return *source_; }
  std::shared_ptr<const FreeComplex> source_ptr() const { return source_; }
  const LaurentRing& ring() const { return source_->ring(); }
  int lo() const { return source_->lo(); }
  int hi() const { return source_->hi(); }
  // Record for lo <= degree <= hi; other degrees have empty loci.
  const DegreeLocus& at(int degree) const;
  // True when integer coefficients were reduced to rationals up front.
  bool reduced_from_integers() const { return reduced_; }
  long long euler_characteristic() const {
    return source_->euler_characteristic();
  }

private:
  friend JumpLocusSet jump_loci(const FreeComplex&, const Caps&);
  std::shared_ptr<const FreeComplex> source_;
  std::vector<DegreeLocus> records_;
  bool reduced_ = false;
};

// I_{rank d^i}(d^i), unsaturated; degrees outside [lo, hi] give <1>.
Ideal fitting_ideal(const FreeComplex& c, int i, const Caps& caps = {});

// I_{rank F^i}(d^{i-1} (+) d^i), saturated at the product of the variables.
Ideal jumping_ideal(const FreeComplex& c, int i, const Caps& caps = {});

JumpLocusSet jump_loci(const FreeComplex& c, const Caps& caps = {});

// Point of the locus in degree i: every generator of the saturated jumping
// ideal vanishes at chi.
bool membership(const JumpLocusSet& l, int i, std::span<const mpq_class> chi);

// Same over an extension F_{p^r} of the prime coefficient field.
bool membership(const JumpLocusSet& l, int i, const GFExt& field,
                std::span<const GFExt::Elem> chi);

long long euler_characteristic(const FreeComplex& c);

// Evaluation of f over F_{p^r}; requires matching prime coefficients and
// invertible (nonzero) coordinates.
GFExt::Elem evaluate_ext(const Polynomial& f, const GFExt& field,
                         std::span<const GFExt::Elem> chi);

}  // namespace torusjump
