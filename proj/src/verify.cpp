#include "torusjump/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "torusjump/errors.hpp"

namespace torusjump {

namespace {

int parity_sign(int i) { return ((i % 2) + 2) % 2 == 0 ? 1 : -1; }

std::string status_str(PropertyResult::Status s) {
  switch (s) {
    case PropertyResult::Status::Pass:
      return "pass";
    case PropertyResult::Status::Fail:
      return "fail";
    case PropertyResult::Status::Skipped:
      return "skipped";
  }
  return "skipped";
}

std::string point_to_string(std::span<const mpq_class> p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ", ";
    s += p[i].get_str();
  }
  return s + ")";
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const auto& [key, res] : properties)
    if (res.status == PropertyResult::Status::Fail) return false;
  return true;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json props = nlohmann::json::object();
  for (const auto& [key, res] : properties)
    props[key] = {{"status", status_str(res.status)},
                  {"witness", res.witness}};
  return {{"mode", mode_label}, {"properties", props}};
}

namespace {

// Record degree bounds and labels for a mode; space(n) requires records
// inside [0, n].
struct ModeFrame {
  int top;
  int bottom;
  bool perverse;

  std::string name(int d) const {
    if (perverse)
      return "V^" + std::to_string(d - top) + " (degree " + std::to_string(d) +
             ")";
    return "V^" + std::to_string(d);
  }
};

ModeFrame mode_frame(const JumpLocusSet& l, const IndexingMode& mode) {
  if (mode.is_perverse()) return {l.hi(), l.lo(), true};
  int n = mode.space_dim();
  if (n < 0) throw DomainError("space dimension must be non-negative");
  if (l.lo() < 0 || l.hi() > n)
    throw DomainError("space(" + std::to_string(n) +
                      ") expects record degrees inside [0, " +
                      std::to_string(n) + "]");
  return {n, 0, false};
}

}  // namespace

VerificationReport verify_propagation(const JumpLocusSet& l,
                                      const IndexingMode& mode,
                                      const Caps& caps) {
  VerificationReport rep;
  rep.mode_label = mode.label();
  ModeFrame fr = mode_frame(l, mode);
  const LaurentRing& ring = l.ring();
  DegreeLocus outside{Ideal::unit(ring), RankTriple{0, 0, 0},
                      DimensionResult{-1, ring.num_vars() + 1}, false, true};
  auto locus = [&](int d) -> const DegreeLocus& {
    return (d >= l.lo() && d <= l.hi()) ? l.at(d) : outside;
  };

  // (i) containment chain, top down
  {
    PropertyResult r = PropertyResult::pass(
        "containments hold from " + fr.name(fr.top) + " down to " +
        fr.name(fr.bottom));
    for (int d = fr.top; d > fr.bottom; --d) {
      if (!variety_containment(locus(d - 1).ideal, locus(d).ideal, caps)) {
        r = PropertyResult::fail(fr.name(d - 1) + " is not contained in " +
                                 fr.name(d));
        break;
      }
    }
    rep.properties["i"] = r;
  }

  // (ii) codimension lower bound
  {
    PropertyResult r =
        PropertyResult::pass("codimension bounds hold at every level");
    for (int i = 0; i <= fr.top - fr.bottom; ++i) {
      const DegreeLocus& rec = locus(fr.top - i);
      if (rec.empty) continue;
      if (rec.dim.codim < i) {
        r = PropertyResult::fail("codim " + fr.name(fr.top - i) + " = " +
                                 std::to_string(rec.dim.codim) + " < " +
                                 std::to_string(i));
        break;
      }
    }
    rep.properties["ii"] = r;
  }

  rep.properties["iii"] = PropertyResult::skipped(
      "needs component data; run the component checks");

  // (iv) equality down to the codimension, then a strict drop
  {
    const DegreeLocus& toprec = locus(fr.top);
    if (toprec.empty) {
      rep.properties["iv"] = PropertyResult::pass(
          fr.name(fr.top) + " is empty; the codimension hypothesis is vacuous");
    } else {
      int d = toprec.dim.codim;
      PropertyResult r = PropertyResult::pass(
          "codim " + fr.name(fr.top) + " = " + std::to_string(d) +
          "; equality down to " + fr.name(fr.top - d) +
          " and a strict drop at " + fr.name(fr.top - d - 1));
      for (int k = 1; k <= d; ++k) {
        if (!same_variety(locus(fr.top - k).ideal, toprec.ideal, caps)) {
          r = PropertyResult::fail(fr.name(fr.top - k) + " differs from " +
                                   fr.name(fr.top) +
                                   " inside the equality range (codim = " +
                                   std::to_string(d) + ")");
          break;
        }
      }
      if (r.status == PropertyResult::Status::Pass &&
          same_variety(locus(fr.top - d - 1).ideal, locus(fr.top - d).ideal,
                       caps))
        r = PropertyResult::fail("no strict drop: " + fr.name(fr.top - d - 1) +
                                 " equals " + fr.name(fr.top - d));
      rep.properties["iv"] = r;
    }
  }

  rep.properties["iv_purity"] = PropertyResult::skipped(
      "needs component data; run the component checks");

  // (v) generic vanishing: everything below the top is proper
  {
    PropertyResult r = PropertyResult::pass(
        "every locus below " + fr.name(fr.top) +
        " is a proper subvariety; its complement is a nonempty open set");
    for (int i = 1; i <= fr.top - fr.bottom; ++i) {
      if (locus(fr.top - i).whole_torus) {
        r = PropertyResult::fail(fr.name(fr.top - i) + " is the whole torus");
        break;
      }
    }
    rep.properties["v"] = r;
  }

  // (vi) signed Euler characteristic, equality iff the top locus is proper
  {
    long long signed_chi = parity_sign(fr.top) * l.euler_characteristic();
    bool whole = locus(fr.top).whole_torus;
    PropertyResult r;
    if (signed_chi < 0)
      r = PropertyResult::fail("signed Euler characteristic = " +
                               std::to_string(signed_chi) + " < 0");
    else if (signed_chi == 0 && whole)
      r = PropertyResult::fail("signed Euler characteristic is 0 but " +
                               fr.name(fr.top) + " is the whole torus");
    else if (signed_chi > 0 && !whole)
      r = PropertyResult::fail("signed Euler characteristic = " +
                               std::to_string(signed_chi) + " > 0 but " +
                               fr.name(fr.top) + " is a proper subvariety");
    else
      r = PropertyResult::pass(
          "signed Euler characteristic = " + std::to_string(signed_chi) +
          (signed_chi == 0
               ? "; equality holds and " + fr.name(fr.top) +
                     " is a proper subvariety"
               : "; strict and " + fr.name(fr.top) + " is the whole torus"));
    rep.properties["vi"] = r;
  }

  return rep;
}

VerificationReport verify_components(const JumpLocusSet& l,
                                     const IndexingMode& mode,
                                     const std::vector<Ideal>& components,
                                     const Caps& caps) {
  VerificationReport rep;
  rep.mode_label = mode.label();
  if (components.empty()) {
    rep.properties["iii"] = PropertyResult::skipped("no components supplied");
    rep.properties["iv_purity"] =
        PropertyResult::skipped("no components supplied");
    return rep;
  }
  ModeFrame fr = mode_frame(l, mode);
  const LaurentRing& ring = l.ring();
  DegreeLocus outside{Ideal::unit(ring), RankTriple{0, 0, 0},
                      DimensionResult{-1, ring.num_vars() + 1}, false, true};
  auto locus = [&](int d) -> const DegreeLocus& {
    return (d >= l.lo() && d <= l.hi()) ? l.at(d) : outside;
  };
  const DegreeLocus& toprec = locus(fr.top);

  std::vector<Ideal> sat;
  for (const Ideal& comp : components) {
    if (comp.ring() != ring)
      throw RingMismatchError("component ideal over the wrong ring");
    sat.push_back(saturate_torus(comp, caps));
  }

  PropertyResult riii = PropertyResult::pass("");
  Ideal prod = sat[0];
  for (std::size_t j = 1; j < sat.size(); ++j)
    prod = ideal_product(prod, sat[j]);
  if (!variety_containment(toprec.ideal, prod, caps))
    riii = PropertyResult::fail("the component union does not cover " +
                                fr.name(fr.top));
  for (std::size_t j = 0;
       j < sat.size() && riii.status == PropertyResult::Status::Pass; ++j)
    if (!variety_containment(sat[j], toprec.ideal, caps))
      riii = PropertyResult::fail("component " + std::to_string(j + 1) +
                                  " is not contained in " + fr.name(fr.top));

  std::vector<int> codims;
  for (std::size_t j = 0; j < sat.size(); ++j) {
    int d = dimension(sat[j], caps).codim;
    codims.push_back(d);
    if (riii.status != PropertyResult::Status::Pass) continue;
    if (!variety_containment(sat[j], locus(fr.top - d).ideal, caps))
      riii = PropertyResult::fail(
          "component " + std::to_string(j + 1) + " of codimension " +
          std::to_string(d) + " is not contained in " + fr.name(fr.top - d));
  }
  if (riii.status == PropertyResult::Status::Pass) {
    std::string w = std::to_string(sat.size()) + " component(s) cover " +
                    fr.name(fr.top) + "; codimensions:";
    for (int d : codims) w += " " + std::to_string(d);
    riii.witness = w;
  }
  rep.properties["iii"] = riii;

  bool pure = std::all_of(codims.begin(), codims.end(),
                          [&](int d) { return d == codims[0]; });
  std::string cw;
  for (int d : codims) cw += (cw.empty() ? "" : ", ") + std::to_string(d);
  rep.properties["iv_purity"] =
      pure ? PropertyResult::pass("all components have codimension " + cw)
           : PropertyResult::fail("mixed component codimensions: " + cw);
  return rep;
}

namespace {

// Row-echelon rank over any field presenting is_zero/mul/sub/inv.
template <class F>
std::size_t scalar_rank(const F& f, std::vector<typename F::Elem>& m,
                        std::size_t rows, std::size_t cols) {
  std::size_t rk = 0;
  for (std::size_t col = 0; col < cols && rk < rows; ++col) {
    std::size_t piv = rk;
    while (piv < rows && f.is_zero(m[piv * cols + col])) ++piv;
    if (piv == rows) continue;
    if (piv != rk)
      for (std::size_t j = col; j < cols; ++j)
        std::swap(m[piv * cols + j], m[rk * cols + j]);
    auto inv = f.inv(m[rk * cols + col]);
    for (std::size_t i = rk + 1; i < rows; ++i) {
      if (f.is_zero(m[i * cols + col])) continue;
      auto factor = f.mul(m[i * cols + col], inv);
      for (std::size_t j = col; j < cols; ++j)
        m[i * cols + j] =
            f.sub(m[i * cols + j], f.mul(factor, m[rk * cols + j]));
    }
    ++rk;
  }
  return rk;
}

struct DomainField {
  using Elem = mpq_class;
  CoeffDomain dom;
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem mul(const Elem& a, const Elem& b) const { return dom.mul(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return dom.sub(a, b); }
  Elem inv(const Elem& a) const { return dom.inv(a); }
};

}  // namespace

long long FiberBetti::euler() const {
  long long chi = 0;
  for (std::size_t k = 0; k < betti.size(); ++k)
    chi += parity_sign(lo + static_cast<int>(k)) * betti[k];
  return chi;
}

FiberBetti fiber_betti(const FreeComplex& c0, std::span<const mpq_class> chi,
                       const CoeffDomain& field) {
  if (!field.is_field())
    throw DomainError("fiber dimensions need field coefficients");
  std::optional<FreeComplex> reduced;
  const FreeComplex* c = &c0;
  if (!(c0.ring().coeff() == field)) {
    if (c0.ring().coeff().kind() != CoeffKind::Integer)
      throw RingMismatchError(
          "complex coefficients do not match the requested field");
    reduced = c0.reduce_coefficients(field);
    c = &*reduced;
  }
  DomainField f{field};
  std::vector<std::size_t> dr;
  for (int d = c->lo() - 1; d <= c->hi(); ++d) {
    PolyMatrix m = c->differential(d);
    std::vector<mpq_class> vals;
    vals.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        vals.push_back(m.at(i, j).evaluate(chi));
    dr.push_back(scalar_rank(f, vals, m.rows(), m.cols()));
  }
  FiberBetti out;
  out.lo = c->lo();
  out.point_desc = point_to_string(chi);
  for (int d = c->lo(); d <= c->hi(); ++d) {
    std::size_t k = static_cast<std::size_t>(d - c->lo());
    out.betti.push_back(c->rank_at(d) - static_cast<int>(dr[k]) -
                        static_cast<int>(dr[k + 1]));
  }
  return out;
}

FiberBetti fiber_betti_ext(const FreeComplex& c0, const GFExt& field,
                           std::span<const GFExt::Elem> chi) {
  std::optional<FreeComplex> reduced;
  const FreeComplex* c = &c0;
  if (c0.ring().coeff().kind() == CoeffKind::Integer) {
    reduced = c0.reduce_coefficients(CoeffDomain::prime_field(field.p()));
    c = &*reduced;
  }
  if (c->ring().coeff().kind() != CoeffKind::PrimeField ||
      c->ring().coeff().prime() != field.p())
    throw RingMismatchError(
        "extension evaluation needs matching prime coefficients");
  std::vector<std::size_t> dr;
  for (int d = c->lo() - 1; d <= c->hi(); ++d) {
    PolyMatrix m = c->differential(d);
    std::vector<GFExt::Elem> vals;
    vals.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        vals.push_back(evaluate_ext(m.at(i, j), field, chi));
    dr.push_back(scalar_rank(field, vals, m.rows(), m.cols()));
  }
  FiberBetti out;
  out.lo = c->lo();
  std::string s = "(";
  for (std::size_t i = 0; i < chi.size(); ++i) {
    if (i) s += ", ";
    s += field.to_string(chi[i]);
  }
  out.point_desc = s + ")";
  for (int d = c->lo(); d <= c->hi(); ++d) {
    std::size_t k = static_cast<std::size_t>(d - c->lo());
    out.betti.push_back(c->rank_at(d) - static_cast<int>(dr[k]) -
                        static_cast<int>(dr[k + 1]));
  }
  return out;
}

AcyclicityResult acyclic_off_top(const FreeComplex& c, int n,
                                 const Caps& caps) {
  if (!c.ring().coeff().is_field())
    throw DomainError("acyclicity test needs field coefficients; reduce first");
  for (int d = n + 1; d <= c.hi(); ++d)
    if (c.rank_at(d) != 0)
      throw DomainError("complex has nonzero rank in degree " +
                        std::to_string(d) + ", above the requested top " +
                        std::to_string(n));
  std::map<int, std::size_t> cache;
  auto drank = [&](int d) {
    auto it = cache.find(d);
    if (it == cache.end())
      it = cache.emplace(d, rank(c.differential(d), caps)).first;
    return it->second;
  };
  for (int j = 1; j <= n - c.lo(); ++j) {
    int d = n - j;
    std::size_t out_rank = drank(d);
    std::size_t in_rank = drank(d - 1);
    if (static_cast<std::size_t>(c.rank_at(d)) != out_rank + in_rank)
      return {false, j,
              "rank additivity fails at position " + std::to_string(j) +
                  " (degree " + std::to_string(d) + "): module rank " +
                  std::to_string(c.rank_at(d)) + " vs " +
                  std::to_string(out_rank) + " + " + std::to_string(in_rank)};
    Ideal fit =
        saturate_torus(determinantal_ideal(c.differential(d), out_rank, caps),
                       caps);
    if (is_unit_ideal(fit, caps)) continue;
    int codim = dimension(fit, caps).codim;
    if (codim < j)
      return {false, j,
              "codimension fails at position " + std::to_string(j) +
                  " (degree " + std::to_string(d) + "): codim " +
                  std::to_string(codim) + " < " + std::to_string(j)};
  }
  return {true, 0, ""};
}

namespace {

mpz_class eval_int(const Polynomial& f, const std::vector<long>& pt) {
  mpz_class total = 0;
  for (const Term& t : f.terms()) {
    mpz_class v = t.coeff.get_num();
    for (std::size_t i = 0; i < pt.size(); ++i)
      for (std::uint32_t e = 0; e < t.mono[i]; ++e) v *= pt[i];
    total += v;
  }
  return total;
}

void add_prime_factors(const mpz_class& d0, std::set<long>& out) {
  mpz_class d = abs(d0);
  if (d <= 1) return;
  for (long p = 2; mpz_class(p) * p <= d && p < 100000; p += (p == 2 ? 1 : 2))
    while (d % p == 0) {
      out.insert(p);
      d /= p;
    }
  if (d > 1 && d.fits_slong_p()) {
    long v = d.get_si();
    if (v < (1L << 31) && is_prime(v)) out.insert(v);
  }
}

}  // namespace

DualityVerdict duality_check(const FreeComplex& c, int n,
                             std::vector<long> primes,
                             bool full_abelianization, const Caps& caps) {
  if (c.ring().coeff().kind() != CoeffKind::Integer)
    throw DomainError("duality check needs integer coefficients");
  if (primes.empty()) throw DomainError("at least one prime is required");
  std::set<long> pset;
  for (long p : primes) {
    if (!is_prime(p))
      throw DomainError(std::to_string(p) + " is not a prime");
    pset.insert(p);
  }

  // Elementary divisors of the differentials at integer sample points flag
  // candidate torsion primes.
  std::size_t nv = static_cast<std::size_t>(c.ring().num_vars());
  std::vector<std::vector<long>> int_points(2, std::vector<long>(nv));
  for (std::size_t v = 0; v < nv; ++v) {
    int_points[0][v] = static_cast<long>(v) + 2;
    int_points[1][v] = -(static_cast<long>(v) + 2);
  }
  for (int d = c.lo(); d < c.hi(); ++d) {
    PolyMatrix m = c.differential(d);
    if (m.rows() == 0 || m.cols() == 0) continue;
    for (const std::vector<long>& pt : int_points) {
      IntMatrix im(m.rows(), m.cols());
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          im.at(i, j) = eval_int(m.at(i, j), pt);
      for (const mpz_class& e : smith_divisors(im)) add_prime_factors(e, pset);
    }
  }

  DualityVerdict out;
  out.n = n;
  out.primes_tested.assign(pset.begin(), pset.end());

  AcyclicityResult q =
      acyclic_off_top(c.reduce_coefficients(CoeffDomain::rationals()), n, caps);
  if (!q.acyclic) {
    out.kind = DualityVerdict::Kind::No;
    out.witness_field = "QQ";
    out.witness_degree = n - q.position;
    out.witness_reason = q.reason;
    return out;
  }
  for (long p : out.primes_tested) {
    AcyclicityResult r = acyclic_off_top(
        c.reduce_coefficients(CoeffDomain::prime_field(p)), n, caps);
    if (!r.acyclic) {
      out.kind = DualityVerdict::Kind::No;
      out.witness_field = "F" + std::to_string(p);
      out.witness_degree = n - r.position;
      out.witness_reason = r.reason;
      return out;
    }
  }
  out.kind = full_abelianization ? DualityVerdict::Kind::Abelian
                                 : DualityVerdict::Kind::Partial;
  return out;
}

nlohmann::json DualityVerdict::to_json() const {
  std::string v;
  switch (kind) {
    case Kind::Abelian:
      v = "abelian-duality";
      break;
    case Kind::Partial:
      v = "partial-abelian-duality";
      break;
    case Kind::No:
      v = "no";
      break;
  }
  nlohmann::json j{{"verdict", v},
                   {"n", n},
                   {"primes_tested", primes_tested},
                   {"caveat", caveat}};
  if (kind == Kind::No)
    j["witness"] = {{"field", witness_field},
                    {"degree", witness_degree},
                    {"reason", witness_reason}};
  return j;
}

bool jumping_matches_fitting(const FreeComplex& c, int n, int* bad_degree,
                             const Caps& caps) {
  for (int i = c.lo(); i < n; ++i) {
    Ideal j = jumping_ideal(c, i, caps);
    Ideal f = saturate_torus(fitting_ideal(c, i, caps), caps);
    if (!same_variety(j, f, caps)) {
      if (bad_degree) *bad_degree = i;
      return false;
    }
  }
  return true;
}

bool BettiBoundsReport::all_pass() const {
  for (const PropertyResult* r : {&positivity, &b1_bound, &signed_euler})
    if (r->status == PropertyResult::Status::Fail) return false;
  return true;
}

nlohmann::json BettiBoundsReport::to_json() const {
  auto prop = [](const PropertyResult& r) {
    return nlohmann::json{{"status", status_str(r.status)},
                          {"witness", r.witness}};
  };
  return {{"mode", mode_label},
          {"betti", betti},
          {"positivity", prop(positivity)},
          {"b1_bound", prop(b1_bound)},
          {"signed_euler", prop(signed_euler)}};
}

BettiBoundsReport betti_bounds(const JumpLocusSet& l, int n, int r,
                               const IndexingMode& mode) {
  if (n < 0 || r < 0 || r > n)
    throw DomainError("need 0 <= r <= n for the Betti bounds");
  BettiBoundsReport rep;
  rep.mode_label = mode.label();
  const FreeComplex& c = l.source();
  std::vector<mpq_class> ones(static_cast<std::size_t>(c.ring().num_vars()),
                              1);
  FiberBetti fb = fiber_betti(c, ones, c.ring().coeff());
  rep.betti = fb.betti;
  int bound = n - r;

  rep.positivity = PropertyResult::pass(
      "betti 0.." + std::to_string(bound) + " are all positive");
  for (int k = 0; k <= bound; ++k)
    if (fb.at(c.lo() + k) <= 0) {
      rep.positivity = PropertyResult::fail(
          "betti " + std::to_string(k) + " = " +
          std::to_string(fb.at(c.lo() + k)) + " is not positive");
      break;
    }

  int b1 = fb.at(c.lo() + 1);
  rep.b1_bound =
      b1 >= bound
          ? PropertyResult::pass("betti 1 = " + std::to_string(b1) +
                                 " >= " + std::to_string(bound))
          : PropertyResult::fail("betti 1 = " + std::to_string(b1) + " < " +
                                 std::to_string(bound));

  if (r != 0) {
    rep.signed_euler =
        PropertyResult::skipped("checked only when the defect is 0");
  } else {
    long long s = parity_sign(n) * l.euler_characteristic();
    rep.signed_euler =
        s >= 0 ? PropertyResult::pass("signed Euler characteristic = " +
                                      std::to_string(s) + " >= 0")
               : PropertyResult::fail("signed Euler characteristic = " +
                                      std::to_string(s) + " < 0");
  }
  return rep;
}

std::vector<mpz_class> smith_normal_form(const IntMatrix& a) {
  return smith_divisors(a);
}

namespace {

// a*t_v + b with a nonzero: returns (v, -b/a).
std::optional<std::pair<int, mpq_class>> univariate_linear(
    const Polynomial& g) {
  if (g.is_zero() || g.term_count() > 2) return std::nullopt;
  const Term& lead = g.terms().front();
  int v = -1;
  for (std::size_t i = 0; i < lead.mono.nvars(); ++i)
    if (lead.mono[i]) {
      if (v >= 0 || lead.mono[i] != 1) return std::nullopt;
      v = static_cast<int>(i);
    }
  if (v < 0) return std::nullopt;
  mpq_class b = 0;
  if (g.term_count() == 2) {
    const Term& tail = g.terms().back();
    if (!tail.mono.is_one()) return std::nullopt;
    b = tail.coeff;
  }
  const CoeffDomain& dom = g.ring().coeff();
  return std::make_pair(v, dom.div(dom.neg(b), lead.coeff));
}

std::optional<std::vector<mpq_class>> solved_point(const Ideal& I,
                                                   const Caps& caps) {
  std::size_t n = static_cast<std::size_t>(I.ring().num_vars());
  const std::vector<Polynomial>& gb = I.groebner(caps);
  if (gb.size() != n) return std::nullopt;
  std::vector<std::optional<mpq_class>> coord(n);
  for (const Polynomial& g : gb) {
    auto lin = univariate_linear(g);
    if (!lin) return std::nullopt;
    auto [v, root] = *lin;
    if (root == 0 || coord[static_cast<std::size_t>(v)]) return std::nullopt;
    coord[static_cast<std::size_t>(v)] = root;
  }
  std::vector<mpq_class> out;
  for (const auto& c : coord) {
    if (!c) return std::nullopt;
    out.push_back(*c);
  }
  return out;
}

}  // namespace

nlohmann::json OracleReport::to_json() const {
  nlohmann::json rws = nlohmann::json::array();
  for (const OracleRow& r : rows) {
    nlohmann::json member = nlohmann::json::array();
    for (bool b : r.member) member.push_back(b);
    rws.push_back({{"field", r.field},
                   {"point", r.point},
                   {"betti", r.betti},
                   {"member", member},
                   {"consistent", r.consistent}});
  }
  return {{"points_tested", points_tested},
          {"mismatches", mismatches},
          {"rows", rws}};
}

OracleReport run_oracle(const JumpLocusSet& l, const SamplePlan& plan,
                        const Caps& caps) {
  const FreeComplex& c = l.source();
  const LaurentRing& ring = l.ring();
  const CoeffDomain& dom = ring.coeff();
  std::size_t n = static_cast<std::size_t>(ring.num_vars());
  std::mt19937_64 eng(plan.seed);

  std::vector<std::vector<mpq_class>> pts;
  std::set<std::string> seen;
  auto add_pt = [&](std::vector<mpq_class> p) {
    for (mpq_class& x : p) {
      x = dom.normalize(x);
      if (x == 0 || !dom.is_invertible(x)) return;
    }
    if (seen.insert(point_to_string(p)).second) pts.push_back(std::move(p));
  };

  add_pt(std::vector<mpq_class>(n, 1));
  for (int d = l.lo(); d <= l.hi(); ++d) {
    const Ideal& I = l.at(d).ideal;
    if (auto p = solved_point(I, caps)) add_pt(*p);
    for (const Polynomial& g : I.generators())
      if (auto lin = univariate_linear(g)) {
        auto [v, root] = *lin;
        if (root == 0) continue;
        std::vector<mpq_class> p(n, 1);
        p[static_cast<std::size_t>(v)] = root;
        add_pt(std::move(p));
      }
  }
  // Palette sampling is with replacement: small fields and the fixed
  // rational palette cannot fill the quota with distinct points.
  std::vector<mpq_class> palette{2, 3, 5, 7, -1, mpq_class(1, 2)};
  while (pts.size() < plan.num_points) {
    std::vector<mpq_class> p(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (dom.kind() == CoeffKind::Rational)
        p[i] = palette[eng() % palette.size()];
      else
        p[i] = static_cast<long>(eng() % static_cast<std::uint64_t>(
                                             dom.prime() - 1)) +
               1;
    }
    pts.push_back(std::move(p));
  }

  OracleReport rep;
  auto push_row = [&](OracleRow row) {
    ++rep.points_tested;
    if (!row.consistent) ++rep.mismatches;
    rep.rows.push_back(std::move(row));
  };

  for (const std::vector<mpq_class>& p : pts) {
    FiberBetti fb = fiber_betti(c, p, dom);
    OracleRow row;
    row.field = dom.to_string();
    row.point = fb.point_desc;
    row.consistent = true;
    for (int d = l.lo(); d <= l.hi(); ++d) {
      bool mem = membership(l, d, p);
      row.betti.push_back(fb.at(d));
      row.member.push_back(mem);
      if (mem != (fb.at(d) != 0)) row.consistent = false;
    }
    push_row(std::move(row));
  }

  if (dom.kind() == CoeffKind::PrimeField && plan.max_extension_degree >= 2) {
    long p = dom.prime();
    std::size_t per_degree = std::max<std::size_t>(plan.num_points / 5, 4);
    int max_r = std::min(plan.max_extension_degree, 4);
    for (int r = 2; r <= max_r; ++r) {
      GFExt field(p, r);
      for (std::size_t made = 0; made < per_degree; ++made) {
        std::vector<GFExt::Elem> chi(n);
        for (std::size_t i = 0; i < n; ++i) {
          GFExt::Elem e;
          do {
            std::vector<long> coeffs(static_cast<std::size_t>(r));
            for (long& x : coeffs)
              x = static_cast<long>(eng() %
                                    static_cast<std::uint64_t>(p));
            e = field.make(std::move(coeffs));
          } while (field.is_zero(e));
          chi[i] = std::move(e);
        }
        FiberBetti fb = fiber_betti_ext(c, field, chi);
        OracleRow row;
        row.field = "F" + std::to_string(p) + "^" + std::to_string(r);
        row.point = fb.point_desc;
        row.consistent = true;
        for (int d = l.lo(); d <= l.hi(); ++d) {
          bool mem = membership(l, d, field, chi);
          row.betti.push_back(fb.at(d));
          row.member.push_back(mem);
          if (mem != (fb.at(d) != 0)) row.consistent = false;
        }
        push_row(std::move(row));
      }
    }
  }
  return rep;
}

}  // namespace torusjump
