#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "torusjump/polymat.hpp"

namespace torusjump {

// Bounded complex of free modules; differentials raise degree and act on
// column vectors.
class FreeComplex {
public:
  // ranks[k] is the rank in degree lo+k; diffs[k] maps degree lo+k to
  // lo+k+1, so diffs.size() == ranks.size()-1.  Validates on construction.
  FreeComplex(LaurentRing ring, int lo, std::vector<int> ranks,
              std::vector<PolyMatrix> diffs);

  const LaurentRing& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(ranks_.size()) - 1; }
  int rank_at(int degree) const;
  const std::vector<int>& ranks() const { return ranks_; }
  // The stored matrix for lo <= degree < hi, the appropriate empty-shape
  // matrix otherwise.
  PolyMatrix differential(int degree) const;

  long long euler_characteristic() const;

  FreeComplex reduce_coefficients(const CoeffDomain& target) const;
  // Character twist t_i -> lambda_i * t_i.
  FreeComplex twisted(std::span<const mpq_class> lambda) const;
  // Degree i of the result is degree i+s of the input; differentials pick up
  // the sign (-1)^s.
  FreeComplex shifted(int s) const;

  bool operator==(const FreeComplex& other) const;

private:
  void validate() const;
  LaurentRing ring_;
  int lo_;
  std::vector<int> ranks_;
  std::vector<PolyMatrix> diffs_;
};

// Koszul cochain complex on (t1-1, ..., tN-1): degrees 0..N, rank C(N,i).
FreeComplex koszul_torus(int n, const CoeffDomain& coeff);

// R -> R^k with column (t1-1, ..., tk-1); the free-group case of fox_complex.
FreeComplex wedge_of_circles(int k, const CoeffDomain& coeff);

// Genus-g closed orientable surface presentation, ranks (1, 2g, 1).
FreeComplex surface_complex(int genus, const CoeffDomain& coeff);

enum class TensorMode { SameRing, Concatenate };

// Total complex with Koszul signs; Concatenate re-reads b over fresh trailing
// variables so the result lives over N_a + N_b variables.
FreeComplex tensor_product(const FreeComplex& a, const FreeComplex& b,
                           TensorMode mode);

struct GroupPresentation {
  int num_generators = 0;
  std::vector<std::vector<int>> relators;  // signed 1-based indices

  // Canonicalizes: validates indices, freely reduces every word.
  static GroupPresentation make(int num_generators,
                                std::vector<std::vector<int>> relators);
  // "abAB" -> {1, 2, -1, -2}
  static std::vector<int> word_from_string(const std::string& word);
};

// Presentation 2-complex with the abelianized free-derivative matrix in
// degree 1; rows are cleared of negative exponents by a monomial unit.
FreeComplex fox_complex(const GroupPresentation& pres,
                        const CoeffDomain& coeff);

FreeComplex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const FreeComplex& c);
// Canonical serialization: sorted keys, two-space indent, trailing newline;
// save/load round-trips byte-identically.
std::string complex_to_canonical_text(const FreeComplex& c);
FreeComplex load_complex(const std::string& path);
void save_complex(const FreeComplex& c, const std::string& path);

}  // namespace torusjump
