#include "torusjump/jumploci.hpp"

#include <stdexcept>

#include "torusjump/errors.hpp"

namespace torusjump {

const DegreeLocus& JumpLocusSet::at(int degree) const {
  if (degree < lo() || degree > hi())
    throw std::out_of_range("no locus record at degree " +
                            std::to_string(degree));
  return records_[static_cast<std::size_t>(degree - lo())];
}

Ideal fitting_ideal(const FreeComplex& c, int i, const Caps& caps) {
  if (!c.ring().coeff().is_field())
    throw DomainError("coefficients must form a field; reduce first");
  PolyMatrix d = c.differential(i);
  return determinantal_ideal(d, rank(d, caps), caps);
}

Ideal jumping_ideal(const FreeComplex& c, int i, const Caps& caps) {
  if (!c.ring().coeff().is_field())
    throw DomainError("coefficients must form a field; reduce first");
  PolyMatrix blocks = block_diagonal(c.differential(i - 1), c.differential(i));
  Ideal raw = determinantal_ideal(blocks,
                                  static_cast<std::size_t>(c.rank_at(i)), caps);
  return saturate_torus(raw, caps);
}

JumpLocusSet jump_loci(const FreeComplex& c, const Caps& caps) {
  JumpLocusSet out;
  out.reduced_ = c.ring().coeff().kind() == CoeffKind::Integer;
  out.source_ = std::make_shared<const FreeComplex>(
      out.reduced_ ? c.reduce_coefficients(CoeffDomain::rationals()) : c);
  const FreeComplex& cx = *out.source_;

  // Each differential's rank feeds two adjacent degrees; compute once.
  std::vector<std::size_t> dranks;
  for (int d = cx.lo() - 1; d <= cx.hi(); ++d)
    dranks.push_back(rank(cx.differential(d), caps));
  auto drank = [&](int d) {
    return dranks[static_cast<std::size_t>(d - cx.lo() + 1)];
  };

  for (int i = cx.lo(); i <= cx.hi(); ++i) {
    PolyMatrix blocks =
        block_diagonal(cx.differential(i - 1), cx.differential(i));
    Ideal raw = determinantal_ideal(
        blocks, static_cast<std::size_t>(cx.rank_at(i)), caps);
    Ideal sat = saturate_torus(raw, caps);
    DegreeLocus rec{
        sat,
        RankTriple{drank(i - 1), drank(i), cx.rank_at(i)},
        dimension(sat, caps),
        sat.has_no_generators(),
        is_unit_ideal(sat, caps),
    };
    out.records_.push_back(std::move(rec));
  }
  return out;
}

bool membership(const JumpLocusSet& l, int i, std::span<const mpq_class> chi) {
  if (i < l.lo() || i > l.hi()) return false;
  for (const Polynomial& g : l.at(i).ideal.generators())
    if (g.evaluate(chi) != 0) return false;
  return true;
}

GFExt::Elem evaluate_ext(const Polynomial& f, const GFExt& field,
                         std::span<const GFExt::Elem> chi) {
  const LaurentRing& ring = f.ring();
  if (ring.coeff().kind() != CoeffKind::PrimeField ||
      ring.coeff().prime() != field.p())
    throw RingMismatchError(
        "extension evaluation needs matching prime coefficients");
  if (chi.size() != static_cast<std::size_t>(ring.num_vars()))
    throw ShapeError("point arity does not match the ring");
  for (const GFExt::Elem& x : chi)
    if (field.is_zero(x)) throw DomainError("not a torus point");
  GFExt::Elem acc = field.zero();
  for (const Term& t : f.terms()) {
    // Canonical prime-field coefficients are integer residues.
    GFExt::Elem v = field.from_int(t.coeff.get_num().get_si());
    for (std::size_t j = 0; j < chi.size(); ++j)
      if (t.mono[j] != 0) v = field.mul(v, field.pow(chi[j], t.mono[j]));
    acc = field.add(acc, v);
  }
  return acc;
}

bool membership(const JumpLocusSet& l, int i, const GFExt& field,
                std::span<const GFExt::Elem> chi) {
  if (i < l.lo() || i > l.hi()) return false;
  for (const Polynomial& g : l.at(i).ideal.generators())
    if (!field.is_zero(evaluate_ext(g, field, chi))) return false;
  return true;
}

long long euler_characteristic(const FreeComplex& c) {
  return c.euler_characteristic();
}

}  // namespace torusjump
