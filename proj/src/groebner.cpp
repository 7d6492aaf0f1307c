#include "torusjump/groebner.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "torusjump/errors.hpp"

namespace torusjump {

namespace {

void require_field(const LaurentRing& ring) {
  if (!ring.coeff().is_field())
    throw DomainError("coefficients must form a field; reduce coefficients first");
}

Polynomial monic(const Polynomial& f, const MonomialOrder& order) {
  const mpq_class& lc = f.leading_term(order).coeff;
  return f.scaled(f.ring().coeff().inv(lc));
}

Polynomial spoly(const Polynomial& f, const Polynomial& g,
                 const MonomialOrder& order) {
  const Term& lf = f.leading_term(order);
  const Term& lg = g.leading_term(order);
  Monomial m = lcm(lf.mono, lg.mono);
  const CoeffDomain& dom = f.ring().coeff();
  Polynomial a = f.times_monomial(m.quotient_by(lf.mono), dom.inv(lf.coeff));
  Polynomial b = g.times_monomial(m.quotient_by(lg.mono), dom.inv(lg.coeff));
  return a - b;
}

struct SPair {
  std::size_t i, j;
  Monomial lcm_mono;
};

// Pair-set maintenance with the Gebauer-Moeller lcm-divisibility and
// coprimality prunings plus backward pruning of old pairs.
void update_pairs(std::vector<SPair>& pairs,
                  const std::vector<Polynomial>& basis, std::size_t t,
                  const MonomialOrder& order) {
  const Monomial& lth = basis[t].leading_term(order).mono;
  std::vector<SPair> cand;
  cand.reserve(t);
  for (std::size_t i = 0; i < t; ++i)
    cand.push_back(
        SPair{i, t, lcm(basis[i].leading_term(order).mono, lth)});

  std::vector<bool> in_c(cand.size(), true);
  std::vector<SPair> kept;
  for (std::size_t a = 0; a < cand.size(); ++a) {
    in_c[a] = false;
    bool coprime_pair =
        coprime(basis[cand[a].i].leading_term(order).mono, lth);
    bool dominated = false;
    if (!coprime_pair) {
      for (std::size_t b = a + 1; b < cand.size() && !dominated; ++b)
        if (in_c[b] && cand[b].lcm_mono.divides(cand[a].lcm_mono))
          dominated = true;
      for (const SPair& d : kept)
        if (d.lcm_mono.divides(cand[a].lcm_mono)) {
          dominated = true;
          break;
        }
    }
    if (coprime_pair || !dominated) kept.push_back(cand[a]);
  }
  std::erase_if(kept, [&](const SPair& p) {
    return coprime(basis[p.i].leading_term(order).mono, lth);
  });

  std::erase_if(pairs, [&](const SPair& p) {
    const Monomial& l1 = lcm(basis[p.i].leading_term(order).mono, lth);
    const Monomial& l2 = lcm(basis[p.j].leading_term(order).mono, lth);
    return lth.divides(p.lcm_mono) && l1 != p.lcm_mono && l2 != p.lcm_mono;
  });
  pairs.insert(pairs.end(), kept.begin(), kept.end());
}

void check_caps(const Polynomial& f, std::size_t basis_size,
                const Caps& caps) {
  if (f.degree() > caps.max_degree)
    throw ResourceLimitError("degree cap " + std::to_string(caps.max_degree) +
                             " exceeded during basis computation");
  if (basis_size > caps.max_basis)
    throw ResourceLimitError("basis size cap " +
                             std::to_string(caps.max_basis) + " exceeded");
}

}  // namespace

Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis,
                       const MonomialOrder& order) {
  const CoeffDomain& dom = f.ring().coeff();
  Polynomial r = f;
  std::vector<Term> irreducible;
  while (!r.is_zero()) {
    const Term& lt = r.leading_term(order);
    const Polynomial* reducer = nullptr;
    for (const Polynomial& g : basis)
      if (!g.is_zero() &&
          g.leading_term(order).mono.divides(lt.mono)) {
        reducer = &g;
        break;
      }
    if (reducer) {
      const Term& glt = reducer->leading_term(order);
      r = r - reducer->times_monomial(lt.mono.quotient_by(glt.mono),
                                      dom.div(lt.coeff, glt.coeff));
    } else {
      irreducible.push_back(lt);
      r = r - Polynomial::monomial(r.ring(), lt.mono, lt.coeff);
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(irreducible));
}

std::vector<Polynomial> groebner_basis(const LaurentRing& ring,
                                       const std::vector<Polynomial>& gens,
                                       const MonomialOrder& order,
                                       const Caps& caps) {
  require_field(ring);
  std::vector<Polynomial> basis;
  std::vector<SPair> pairs;
  std::vector<Polynomial> input;
  for (const Polynomial& g : gens) {
    if (g.ring() != ring)
      throw RingMismatchError("generator outside the ideal's ring");
    if (!g.is_zero()) input.push_back(monic(g, order));
  }
  std::sort(input.begin(), input.end(), poly_less);
  input.erase(std::unique(input.begin(), input.end()), input.end());
  for (const Polynomial& g : input) {
    Polynomial h = normal_form(g, basis, order);
    if (h.is_zero()) continue;
    check_caps(h, basis.size() + 1, caps);
    basis.push_back(monic(h, order));
    update_pairs(pairs, basis, basis.size() - 1, order);
  }

  while (!pairs.empty()) {
    // Normal strategy: smallest lcm in the order, ties by index.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      int c = order.compare(pairs[k].lcm_mono, pairs[best].lcm_mono);
      if (c < 0 || (c == 0 && (pairs[k].i < pairs[best].i ||
                               (pairs[k].i == pairs[best].i &&
                                pairs[k].j < pairs[best].j))))
        best = k;
    }
    SPair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    Polynomial h =
        normal_form(spoly(basis[p.i], basis[p.j], order), basis, order);
    if (h.is_zero()) continue;
    check_caps(h, basis.size() + 1, caps);
    basis.push_back(monic(h, order));
    update_pairs(pairs, basis, basis.size() - 1, order);
  }

  // Minimalize: drop elements whose leading monomial another one divides.
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.less(basis[a].leading_term(order).mono,
                      basis[b].leading_term(order).mono);
  });
  std::vector<Polynomial> minimal;
  for (std::size_t k : idx) {
    const Monomial& m = basis[k].leading_term(order).mono;
    bool redundant = false;
    for (const Polynomial& g : minimal)
      if (g.leading_term(order).mono.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(basis[k]);
  }

  // Interreduce tails to the unique reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t l = 0; l < minimal.size(); ++l)
        if (l != k) others.push_back(minimal[l]);
      Polynomial r = normal_form(minimal[k], others, order);
      if (!(r == minimal[k])) {
        minimal[k] = monic(r, order);
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.less(a.leading_term(order).mono,
                                b.leading_term(order).mono);
            });
  return minimal;
}

Ideal::Ideal(LaurentRing ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<GbCache>()) {
  for (Polynomial& g : generators) {
    if (g.ring() != ring_)
      throw RingMismatchError("generator outside the ideal's ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end(), poly_less);
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

const std::vector<Polynomial>& Ideal::groebner(const Caps& caps) const {
  std::call_once(cache_->once, [&] {
    cache_->basis =
        groebner_basis(ring_, gens_, MonomialOrder::degrevlex(), caps);
  });
  return *cache_->basis;
}

bool ideal_membership(const Polynomial& f, const Ideal& I, const Caps& caps) {
  if (f.is_zero()) return true;
  return normal_form(f, I.groebner(caps), MonomialOrder::degrevlex())
      .is_zero();
}

bool is_unit_ideal(const Ideal& I, const Caps& caps) {
  const auto& gb = I.groebner(caps);
  return gb.size() == 1 && gb[0].is_one();
}

bool radical_membership(const Polynomial& f, const Ideal& I,
                        const Caps& caps) {
  require_field(I.ring());
  LaurentRing big = I.ring().extended(1);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators()) gens.push_back(g.lift_to(big));
  Polynomial y = Polynomial::variable(big, big.num_vars() - 1);
  gens.push_back(Polynomial::one(big) - y * f.lift_to(big));
  auto gb = groebner_basis(big, gens, MonomialOrder::degrevlex(), caps);
  return gb.size() == 1 && gb[0].is_one();
}

Ideal saturate(const Ideal& I, const Polynomial& f, const Caps& caps) {
  require_field(I.ring());
  if (f.is_zero()) throw DomainError("saturation at the zero polynomial");
  LaurentRing big = I.ring().extended(1);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators()) gens.push_back(g.lift_to(big));
  Polynomial y = Polynomial::variable(big, big.num_vars() - 1);
  gens.push_back(Polynomial::one(big) - y * f.lift_to(big));
  auto gb = groebner_basis(big, gens, MonomialOrder::elimination(1), caps);
  std::vector<Polynomial> kept;
  int yindex = big.num_vars() - 1;
  for (const Polynomial& g : gb) {
    bool uses_y = false;
    for (const Term& t : g.terms())
      if (t.mono[static_cast<std::size_t>(yindex)] != 0) {
        uses_y = true;
        break;
      }
    if (!uses_y) kept.push_back(g.restrict_to(I.ring()));
  }
  return Ideal(I.ring(), std::move(kept));
}

Ideal saturate_torus(const Ideal& I, const Caps& caps) {
  Monomial m(I.ring().num_vars());
  for (std::size_t i = 0; i < m.nvars(); ++i) m[i] = 1;
  return saturate(I, Polynomial::monomial(I.ring(), m, 1), caps);
}

DimensionResult dimension(const Ideal& I, const Caps& caps) {
  require_field(I.ring());
  int n = I.ring().num_vars();
  if (n > 24)
    throw ResourceLimitError("dimension search over 2^" + std::to_string(n) +
                             " variable subsets is out of range");
  if (I.has_no_generators()) return DimensionResult{n, 0};
  const auto& gb = I.groebner(caps);
  if (gb.size() == 1 && gb[0].is_one()) return DimensionResult{-1, n + 1};
  std::vector<std::uint32_t> supports;
  supports.reserve(gb.size());
  for (const Polynomial& g : gb) {
    const Monomial& m = g.leading_term(MonomialOrder::degrevlex()).mono;
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (m[static_cast<std::size_t>(i)] != 0)
        mask |= (std::uint32_t{1} << i);
    supports.push_back(mask);
  }
  int best = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    bool independent = true;
    for (std::uint32_t sup : supports)
      if ((sup & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, std::popcount(s));
  }
  return DimensionResult{best, n - best};
}

bool variety_containment(const Ideal& J, const Ideal& K, const Caps& caps) {
  for (const Polynomial& k : K.generators())
    if (!radical_membership(k, J, caps)) return false;
  return true;
}

bool same_variety(const Ideal& J, const Ideal& K, const Caps& caps) {
  return variety_containment(J, K, caps) && variety_containment(K, J, caps);
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring()) throw RingMismatchError("ideal sum across rings");
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring())
    throw RingMismatchError("ideal product across rings");
  std::vector<Polynomial> gens;
  for (const Polynomial& f : I.generators())
    for (const Polynomial& g : J.generators()) gens.push_back(f * g);
  return Ideal(I.ring(), std::move(gens));
}

}  // namespace torusjump
