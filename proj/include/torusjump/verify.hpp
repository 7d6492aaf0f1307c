#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "torusjump/intmat.hpp"
#include "torusjump/jumploci.hpp"

namespace torusjump {

// Degree labeling for the propagation checks.  Perverse relabels the top
// record degree to 0 and counts down (loci V^0, V^-1, ...); Space(n) uses
// record degrees 0..n directly (loci V^n down to V^0).
class IndexingMode {
public:
  static IndexingMode perverse() { return IndexingMode(true, 0); }
  static IndexingMode space(int n) { return IndexingMode(false, n); }

  bool is_perverse() const { return perverse_; }
  int space_dim() const { return n_; }
  std::string label() const {
    return perverse_ ? "perverse" : "space(" + std::to_string(n_) + ")";
  }

private:
  IndexingMode(bool perverse, int n) : perverse_(perverse), n_(n) {}
  bool perverse_;
  int n_;
};

struct PropertyResult {
  enum class Status { Pass, Fail, Skipped };
  Status status = Status::Skipped;
  std::string witness;

  static PropertyResult pass(std::string w) {
    return {Status::Pass, std::move(w)};
  }
  static PropertyResult fail(std::string w) {
    return {Status::Fail, std::move(w)};
  }
  static PropertyResult skipped(std::string w) {
    return {Status::Skipped, std::move(w)};
  }
};

// Results of the propagation checks, keyed "i", "ii", "iii", "iv",
// "iv_purity", "v", "vi".  Skipped entries do not fail the report.
struct VerificationReport {
  std::string mode_label;
  std::map<std::string, PropertyResult> properties;

  bool all_pass() const;
  nlohmann::json to_json() const;
};

VerificationReport verify_propagation(const JumpLocusSet& l,
                                      const IndexingMode& mode,
                                      const Caps& caps = {});

// Checks user-supplied irreducible components of the top locus: cover, the
// codimension-indexed containment, and pure-dimensionality.  Fills only the
// "iii" and "iv_purity" keys.
VerificationReport verify_components(const JumpLocusSet& l,
                                     const IndexingMode& mode,
                                     const std::vector<Ideal>& components,
                                     const Caps& caps = {});

struct FiberBetti {
  int lo = 0;
  std::vector<int> betti;  // betti[k] is dim H^(lo+k) of the fiber
  std::string point_desc;

  int at(int degree) const {
    int k = degree - lo;
    if (k < 0 || k >= static_cast<int>(betti.size())) return 0;
    return betti[static_cast<std::size_t>(k)];
  }
  long long euler() const;
};

// Exact fiber cohomology dimensions of c evaluated at chi over `field`
// (integer complexes are reduced first).
FiberBetti fiber_betti(const FreeComplex& c, std::span<const mpq_class> chi,
                       const CoeffDomain& field);

// Fiber over an extension F_{p^r} of the prime coefficient field.
FiberBetti fiber_betti_ext(const FreeComplex& c, const GFExt& field,
                           std::span<const GFExt::Elem> chi);

struct AcyclicityResult {
  bool acyclic = false;
  // First failing position counted from the top degree (1 = just below the
  // top); 0 when acyclic.
  int position = 0;
  std::string reason;
};

// Rank-and-codimension exactness test: cohomology of c tensored down to the
// coefficient field vanishes in every degree except n.  Requires rank 0
// above n.
AcyclicityResult acyclic_off_top(const FreeComplex& c, int n,
                                 const Caps& caps = {});

inline constexpr const char* kDualityCaveat =
    "torsion-freeness certified only for the primes tested";

struct DualityVerdict {
  enum class Kind { Abelian, Partial, No };
  Kind kind = Kind::No;
  int n = 0;
  std::vector<long> primes_tested;
  std::string caveat = kDualityCaveat;
  // Set only for a No verdict.
  std::string witness_field;
  int witness_degree = 0;
  std::string witness_reason;

  bool positive() const { return kind != Kind::No; }
  nlohmann::json to_json() const;
};

// Single-degree cohomology over QQ and over F_p for each requested prime,
// decided degree by degree via acyclic_off_top.  `full_abelianization`
// selects the Abelian (vs Partial) label on success.  Primes dividing
// elementary divisors of integer-evaluated differentials are added to the
// requested list automatically.
DualityVerdict duality_check(const FreeComplex& c, int n,
                             std::vector<long> primes,
                             bool full_abelianization, const Caps& caps = {});

// Below the top degree of an exact-off-top complex the saturated jumping and
// fitting ideals cut out the same variety; `bad_degree` receives the first
// degree where they do not.
bool jumping_matches_fitting(const FreeComplex& c, int n,
                             int* bad_degree = nullptr, const Caps& caps = {});

struct BettiBoundsReport {
  std::string mode_label;
  std::vector<int> betti;  // fiber dimensions at the trivial character
  PropertyResult positivity;    // betti[i] > 0 for 0 <= i <= n-r
  PropertyResult b1_bound;      // betti[1] >= n-r
  PropertyResult signed_euler;  // (-1)^n chi >= 0; checked only when r = 0

  bool all_pass() const;
  nlohmann::json to_json() const;
};

BettiBoundsReport betti_bounds(const JumpLocusSet& l, int n, int r,
                               const IndexingMode& mode);

// Elementary divisors d1 | d2 | ... of a constant integer matrix.
std::vector<mpz_class> smith_normal_form(const IntMatrix& a);

struct SamplePlan {
  std::uint64_t seed = 20260822;
  std::size_t num_points = 50;  // base-field points, trivial included
  int max_extension_degree = 4;  // prime fields only; 1 disables extensions
};

struct OracleRow {
  std::string field;
  std::string point;
  std::vector<int> betti;    // by record degree lo..hi
  std::vector<bool> member;  // same indexing
  bool consistent = false;
};

struct OracleReport {
  std::size_t points_tested = 0;
  std::size_t mismatches = 0;
  std::vector<OracleRow> rows;

  nlohmann::json to_json() const;
};

// Membership-vs-fiber agreement at deterministically sampled points: the
// trivial character, points solved from the loci, seeded palette points, and
// extension-field points for prime coefficients.
OracleReport run_oracle(const JumpLocusSet& l, const SamplePlan& plan = {},
                        const Caps& caps = {});

}  // namespace torusjump
