#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groebner_cases.hpp"
#include "test_support.hpp"
#include "torusjump/errors.hpp"

using namespace tjtest;

TEST_CASE("fixed engine suite passes case by case") {
  for (const GroebnerCase& c : groebner_cases()) {
    CAPTURE(c.name);
    CHECK(c.run());
  }
}

TEST_CASE("the fixed suite has thirty cases") {
  CHECK(groebner_cases().size() == 30);
}

TEST_CASE("reduced basis shape") {
  LaurentRing r = qring(2);
  MonomialOrder o = MonomialOrder::degrevlex();
  std::vector<Polynomial> gens = {P(r, "2*t1^2 + 2*t2"),
                                  P(r, "3*t1*t2 - 3"),
                                  P(r, "t2 - t1*t2 + t1^2 + t2")};
  std::vector<Polynomial> basis = groebner_basis(r, gens, o);
  REQUIRE(!basis.empty());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Polynomial& f = basis[i];
    CHECK(f.leading_term(o).coeff == 1);
    // Every monomial of every element is reduced against the other leads.
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& lmj = basis[j].leading_term(o).mono;
      for (const Term& t : f.terms()) CHECK_FALSE(lmj.divides(t.mono));
    }
    if (i + 1 < basis.size())
      CHECK(o.less(f.leading_term(o).mono,
                   basis[i + 1].leading_term(o).mono));
  }
}

TEST_CASE("groebner basis of the zero ideal is empty") {
  LaurentRing r = qring(2);
  CHECK(groebner_basis(r, {}, MonomialOrder::degrevlex()).empty());
  CHECK(groebner_basis(r, {Polynomial::zero(r)},
                       MonomialOrder::degrevlex())
            .empty());
}

TEST_CASE("integer coefficients are rejected by the basis engine") {
  LaurentRing rz(2, zz());
  CHECK_THROWS_WITH_AS(
      groebner_basis(rz, {P(rz, "t1 - 1")}, MonomialOrder::degrevlex()),
      doctest::Contains("reduce"), DomainError);
}

TEST_CASE("normal form is a canonical remainder") {
  LaurentRing r = qring(2);
  MonomialOrder o = MonomialOrder::degrevlex();
  Ideal I = ideal_of(r, {"t1^2 - t2", "t2^2 - 1"});
  const std::vector<Polynomial>& basis = I.groebner();
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial f = rng.poly(r, 5, 4);
    Polynomial nf = normal_form(f, basis, o);
    for (const Term& t : nf.terms())
      for (const Polynomial& g : basis)
        CHECK_FALSE(g.leading_term(o).mono.divides(t.mono));
    CHECK(ideal_membership(f - nf, I));
    CHECK(normal_form(nf, basis, o) == nf);
  }
}

TEST_CASE("membership decisions") {
  LaurentRing r = qring(2);
  CHECK(ideal_membership(P(r, "t1*t2 - t1 - t2 + 1"),
                         ideal_of(r, {"t1 - 1", "t2 - 1"})));
  CHECK_FALSE(ideal_membership(P(r, "t1"), ideal_of(r, {"t1 - 1"})));
  // t1*t2 - t1 = t1*(t2 - 1), so the pair generates just <t1>.
  CHECK_FALSE(
      ideal_membership(P(r, "t2 - 1"), ideal_of(r, {"t1*t2 - t1", "t1"})));
  CHECK(ideal_membership(Polynomial::zero(r), Ideal::zero(r)));
  CHECK_FALSE(ideal_membership(P(r, "t1"), Ideal::zero(r)));
}

TEST_CASE("members vanish wherever all generators vanish") {
  LaurentRing r = qring(2);
  Ideal I = ideal_of(r, {"t1 - 2", "t2 + 1"});
  std::vector<mpq_class> x = point({"2", "-1"});
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial f = rng.poly(r, 3, 2) * P(r, "t1 - 2") +
                   rng.poly(r, 3, 2) * P(r, "t2 + 1");
    CHECK(ideal_membership(f, I));
    CHECK(f.evaluate(x) == 0);
  }
}

TEST_CASE("unit ideal detection") {
  LaurentRing r = qring(2);
  CHECK(is_unit_ideal(ideal_of(r, {"t1", "t1 - 1"})));
  CHECK_FALSE(is_unit_ideal(ideal_of(r, {"t1 - 1"})));
  CHECK_FALSE(is_unit_ideal(Ideal::zero(r)));
  LaurentRing r5(1, fp(5));
  CHECK(is_unit_ideal(ideal_of(r5, {"t1 - 2", "t1 - 3"})));
}

TEST_CASE("dimension of independent linear forms") {
  Rng rng(21);
  for (int n = 2; n <= 4; ++n) {
    LaurentRing r = qring(n);
    for (int k = 1; k <= n; ++k) {
      // L_i = t_i + (random combination of later variables) + constant.
      std::vector<Polynomial> gens;
      for (int i = 0; i < k; ++i) {
        Polynomial f = Polynomial::variable(r, i) -
                       Polynomial::constant(r, 1 + rng.coeff_int(2));
        for (int j = i + 1; j < n; ++j)
          f = f + Polynomial::constant(r, rng.coeff_int(2)) *
                      Polynomial::variable(r, j);
        gens.push_back(f);
      }
      DimensionResult d = dimension(Ideal(r, gens));
      CHECK(d.dim == n - k);
      CHECK(d.codim == k);
    }
  }
}

TEST_CASE("variety containment and equality") {
  LaurentRing r = qring(2);
  Ideal pt = ideal_of(r, {"t1 - 1", "t2 - 1"});
  Ideal hyp = ideal_of(r, {"t1 - 1"});
  Ideal hyp2 = ideal_of(r, {"t1^2 - 2*t1 + 1"});
  CHECK(variety_containment(pt, hyp));
  CHECK_FALSE(variety_containment(hyp, pt));
  CHECK(variety_containment(hyp2, hyp));
  CHECK(variety_containment(hyp, hyp2));
  CHECK(same_variety(hyp, hyp2));
  CHECK_FALSE(same_variety(pt, hyp));
}

TEST_CASE("containment is reflexive and transitive on a chain") {
  LaurentRing r = qring(2);
  std::vector<Ideal> chain = {Ideal::zero(r), ideal_of(r, {"t1 - 1"}),
                              ideal_of(r, {"t1 - 1", "t2 - 1"}),
                              Ideal::unit(r)};
  for (const Ideal& I : chain) CHECK(variety_containment(I, I));
  // V(unit) subset V(point) subset V(hyp) subset V(0) = everything.
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      CHECK(variety_containment(chain[i], chain[j]));
}

TEST_CASE("sums and products of ideals") {
  LaurentRing r = qring(2);
  Ideal a = ideal_of(r, {"t1 - 1"});
  Ideal b = ideal_of(r, {"t2 - 1"});
  Ideal prod = ideal_product(a, b);
  CHECK(prod.groebner() ==
        ideal_of(r, {"t1*t2 - t1 - t2 + 1"}).groebner());
  CHECK(ideal_product(a, Ideal::unit(r)).groebner() == a.groebner());
  CHECK(ideal_product(a, Ideal::zero(r)).groebner().empty());
  Ideal sum = ideal_sum(ideal_of(r, {"t1"}), ideal_of(r, {"t2"}));
  CHECK(sum.groebner() == ideal_of(r, {"t1", "t2"}).groebner());
}

TEST_CASE("groebner cache is computed once and shared") {
  LaurentRing r = qring(2);
  Ideal I = ideal_of(r, {"t1^2 - t2", "t2^2 - t1"});
  const std::vector<Polynomial>* first = &I.groebner();
  CHECK(first == &I.groebner());
  Ideal copy = I;
  CHECK(first == &copy.groebner());
}

TEST_CASE("degree and basis caps abort cleanly") {
  LaurentRing r = qring(2);
  // Leads t1^2 and t1*t2 share a factor, so the S-polynomial is formed and
  // its degree-3 remainder trips the cap.
  Caps tight_degree;
  tight_degree.max_degree = 2;
  CHECK_THROWS_AS(
      groebner_basis(r, {P(r, "t1^2 + t2^2 - 1"), P(r, "t1*t2 - 1")},
                     MonomialOrder::degrevlex(), tight_degree),
      ResourceLimitError);
  Caps tight_basis;
  tight_basis.max_basis = 1;
  CHECK_THROWS_AS(
      groebner_basis(r, {P(r, "t1^2 + t2^2 - 1"), P(r, "t1*t2 - 1")},
                     MonomialOrder::degrevlex(), tight_basis),
      ResourceLimitError);
}

TEST_CASE("radical membership respects saturation geometry") {
  LaurentRing r = qring(2);
  // After torus saturation the hyperplane component at t1 = 0 is gone.
  Ideal I = saturate_torus(ideal_of(r, {"t1*t2 - t1"}));
  CHECK(radical_membership(P(r, "t2 - 1"), I));
  CHECK_FALSE(radical_membership(P(r, "t1"), I));
}
