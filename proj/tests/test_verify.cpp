#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "torusjump/errors.hpp"
#include "torusjump/verify.hpp"

using namespace tjtest;

namespace {

FreeComplex fox_z2(const CoeffDomain& dom) {
  return fox_complex(
      GroupPresentation::make(2,
                              {GroupPresentation::word_from_string("abAB")}),
      dom);
}

std::vector<std::vector<mpq_class>> generic_points(int nvars, int count,
                                                   std::uint64_t seed) {
  const long palette[] = {2, 3, 5, 7, -1};
  Rng rng(seed);
  std::vector<std::vector<mpq_class>> out;
  for (int k = 0; k < count; ++k) {
    std::vector<mpq_class> x;
    for (int i = 0; i < nvars; ++i) {
      if (rng.next(6) == 0)
        x.push_back(mpq_class(1, 2));
      else
        x.push_back(palette[rng.next(5)]);
    }
    out.push_back(x);
  }
  return out;
}

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows[0].size();
  IntMatrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("smith normal form elementary divisors") {
  CHECK(smith_normal_form(int_matrix({{1, 0}, {0, 1}})) ==
        std::vector<mpz_class>{1, 1});
  CHECK(smith_normal_form(int_matrix({{2, 0}, {0, 6}})) ==
        std::vector<mpz_class>{2, 6});
  CHECK(smith_normal_form(int_matrix({{2, 4}, {6, 8}})) ==
        std::vector<mpz_class>{2, 4});
  CHECK(smith_normal_form(int_matrix({{0, 0}, {0, 0}})).empty());
  CHECK(smith_normal_form(int_matrix({{6, 10, 15}})) ==
        std::vector<mpz_class>{1});
  // Divisibility chain on a denser example.
  std::vector<mpz_class> d =
      smith_normal_form(int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
  REQUIRE(d.size() == 3);
  CHECK(d[1] % d[0] == 0);
  CHECK(d[2] % d[1] == 0);
}

TEST_CASE("finite field extensions behave like fields") {
  GFExt f4(2, 2);
  // First irreducible monic quadratic over F2 is x^2 + x + 1.
  CHECK(f4.modulus() == std::vector<long>{1, 1, 1});
  std::vector<GFExt::Elem> elems;
  for (long a = 0; a < 2; ++a)
    for (long b = 0; b < 2; ++b) elems.push_back(f4.make({a, b}));
  for (const auto& a : elems) {
    CHECK(f4.add(a, f4.zero()) == a);
    CHECK(f4.mul(a, f4.one()) == a);
    CHECK(f4.is_zero(f4.sub(a, a)));
    if (!f4.is_zero(a)) {
      CHECK(f4.mul(a, f4.inv(a)) == f4.one());
      CHECK(f4.pow(a, 3) == f4.one());  // multiplicative group has order 3
    }
    for (const auto& b : elems) {
      CHECK(f4.mul(a, b) == f4.mul(b, a));
      for (const auto& c : elems)
        CHECK(f4.mul(a, f4.add(b, c)) ==
              f4.add(f4.mul(a, b), f4.mul(a, c)));
    }
  }
  CHECK_THROWS_AS(f4.inv(f4.zero()), DomainError);

  GFExt f27(3, 3);
  GFExt::Elem g = f27.make({1, 1, 0});
  CHECK(f27.pow(g, 26) == f27.one());
  CHECK(f27.mul(g, f27.inv(g)) == f27.one());
  CHECK(f27.from_int(-1) == f27.make({2, 0, 0}));
}

TEST_CASE("fiber dimensions at rational points") {
  FreeComplex k2 = koszul_torus(2, qq());
  FiberBetti triv = fiber_betti(k2, point({"1", "1"}), qq());
  CHECK(triv.betti == std::vector<int>{1, 2, 1});
  CHECK(triv.euler() == 0);
  FiberBetti gen = fiber_betti(k2, point({"2", "3"}), qq());
  CHECK(gen.betti == std::vector<int>{0, 0, 0});
  CHECK(gen.at(0) == 0);
  CHECK(gen.at(99) == 0);

  FiberBetti w = fiber_betti(wedge_of_circles(2, qq()), point({"2", "3"}),
                             qq());
  CHECK(w.at(0) == 0);
  CHECK(w.at(1) == 1);

  CHECK_THROWS_AS(fiber_betti(k2, point({"0", "1"}), qq()), DomainError);
  CHECK_THROWS_AS(fiber_betti(k2, point({"1"}), qq()), ShapeError);
}

TEST_CASE("fibers of integer complexes reduce to the requested field") {
  FreeComplex kz = koszul_torus(2, zz());
  FiberBetti over_q = fiber_betti(kz, point({"-1", "-1"}), qq());
  CHECK(over_q.betti == std::vector<int>{0, 0, 0});
  FiberBetti over_f2 = fiber_betti(kz, point({"1", "1"}), fp(2));
  CHECK(over_f2.betti == std::vector<int>{1, 2, 1});
  // Mismatched field for a rational complex.
  CHECK_THROWS_AS(fiber_betti(koszul_torus(2, qq()), point({"1", "1"}),
                              fp(5)),
                  RingMismatchError);
  CHECK_THROWS_AS(fiber_betti(kz, point({"1", "1"}), zz()), DomainError);
}

TEST_CASE("fiber dimensions over extension fields") {
  FreeComplex w2 = wedge_of_circles(2, fp(5));
  GFExt f25(5, 2);
  std::vector<GFExt::Elem> x = {f25.make({2, 1}), f25.make({4, 3})};
  FiberBetti fb = fiber_betti_ext(w2, f25, x);
  CHECK(fb.at(0) == 0);
  CHECK(fb.at(1) == 1);
  std::vector<GFExt::Elem> ones = {f25.one(), f25.one()};
  CHECK(fiber_betti_ext(w2, f25, ones).betti == std::vector<int>{1, 2});
  // Integer complexes reduce mod p on the way in.
  CHECK(fiber_betti_ext(wedge_of_circles(2, zz()), f25, x).at(1) == 1);
  CHECK_THROWS_AS(fiber_betti_ext(wedge_of_circles(2, fp(3)), f25, x),
                  RingMismatchError);
}

TEST_CASE("fiber euler characteristic is constant in the point") {
  std::vector<FreeComplex> corpus = {koszul_torus(2, qq()), fox_z2(qq()),
                                     wedge_of_circles(3, qq()),
                                     surface_complex(2, qq())};
  for (const FreeComplex& c : corpus) {
    long long chi = euler_characteristic(c);
    auto pts = generic_points(c.ring().num_vars(), 8, 101);
    pts.push_back(std::vector<mpq_class>(
        static_cast<std::size_t>(c.ring().num_vars()), 1));
    for (const auto& x : pts)
      CHECK(fiber_betti(c, x, qq()).euler() == chi);
  }
}

TEST_CASE("acyclicity of the torus complexes") {
  for (int n = 1; n <= 3; ++n) {
    AcyclicityResult r = acyclic_off_top(koszul_torus(n, qq()), n);
    CHECK(r.acyclic);
    CHECK(r.position == 0);
    // Sampled generic fibers vanish away from the top degree.
    FreeComplex c = koszul_torus(n, qq());
    for (const auto& x : generic_points(n, 20, 202)) {
      FiberBetti fb = fiber_betti(c, x, qq());
      for (int i = 0; i < n; ++i) CHECK(fb.at(i) == 0);
    }
  }
  CHECK(acyclic_off_top(wedge_of_circles(4, qq()), 1).acyclic);
  CHECK(acyclic_off_top(fox_z2(qq()), 2).acyclic);
}

TEST_CASE("surfaces fail acyclicity with a rank witness") {
  AcyclicityResult r = acyclic_off_top(surface_complex(2, qq()), 2);
  CHECK_FALSE(r.acyclic);
  CHECK(r.position == 1);
  CHECK(r.reason.find("rank additivity") != std::string::npos);
  // The witness degree really jumps at generic points.
  FreeComplex g2 = surface_complex(2, qq());
  FiberBetti fb = fiber_betti(g2, point({"2", "3", "5", "7"}), qq());
  CHECK(fb.at(1) == 2);
  CHECK(fb.at(2) == 0);
}

TEST_CASE("acyclicity rejects bad inputs") {
  CHECK_THROWS_AS(acyclic_off_top(koszul_torus(2, zz()), 2), DomainError);
  // Nonzero ranks above the requested top degree.
  CHECK_THROWS_AS(acyclic_off_top(koszul_torus(2, qq()), 1), DomainError);
}

TEST_CASE("propagation report for the two-torus in space mode") {
  JumpLocusSet l = jump_loci(koszul_torus(2, qq()));
  VerificationReport rep = verify_propagation(l, IndexingMode::space(2));
  CHECK(rep.mode_label == "space(2)");
  CHECK(rep.all_pass());
  CHECK(rep.properties.at("i").status == PropertyResult::Status::Pass);
  CHECK(rep.properties.at("ii").status == PropertyResult::Status::Pass);
  CHECK(rep.properties.at("iii").status == PropertyResult::Status::Skipped);
  CHECK(rep.properties.at("iv").status == PropertyResult::Status::Pass);
  CHECK(rep.properties.at("v").status == PropertyResult::Status::Pass);
  CHECK(rep.properties.at("vi").status == PropertyResult::Status::Pass);
  CHECK(rep.properties.at("vi").witness.find("= 0") != std::string::npos);

  nlohmann::json j = rep.to_json();
  CHECK(j["mode"] == "space(2)");
  CHECK(j["properties"]["vi"]["status"] == "pass");
}

TEST_CASE("propagation report for the surface fails the signed euler") {
  JumpLocusSet l = jump_loci(surface_complex(2, qq()));
  VerificationReport rep = verify_propagation(l, IndexingMode::space(2));
  CHECK_FALSE(rep.all_pass());
  CHECK(rep.properties.at("vi").status == PropertyResult::Status::Fail);
  CHECK(rep.properties.at("vi").witness.find("-2") != std::string::npos);
}

TEST_CASE("propagation report for the wedge in space mode") {
  JumpLocusSet l = jump_loci(wedge_of_circles(2, qq()));
  VerificationReport rep = verify_propagation(l, IndexingMode::space(1));
  CHECK(rep.all_pass());
  // chi = -1, signed by (-1)^1: strictly positive, and the top locus is the
  // whole torus, which is exactly the allowed strict case.
  CHECK(rep.properties.at("vi").status == PropertyResult::Status::Pass);
  CHECK(rep.properties.at("v").status == PropertyResult::Status::Pass);
}

TEST_CASE("perverse mode never fails on exact-off-top complexes") {
  std::vector<FreeComplex> corpus = {koszul_torus(1, qq()),
                                     koszul_torus(2, qq()),
                                     koszul_torus(3, qq()),
                                     wedge_of_circles(1, qq()),
                                     wedge_of_circles(5, qq()),
                                     fox_z2(qq())};
  std::vector<mpq_class> lam = {2, mpq_class(1, 3)};
  corpus.push_back(koszul_torus(2, qq()).twisted(lam));
  for (const FreeComplex& c : corpus) {
    REQUIRE(acyclic_off_top(c, c.hi()).acyclic);
    VerificationReport rep =
        verify_propagation(jump_loci(c), IndexingMode::perverse());
    CHECK(rep.mode_label == "perverse");
    for (const auto& [key, res] : rep.properties) {
      CAPTURE(key);
      CHECK(res.status != PropertyResult::Status::Fail);
    }
  }
}

TEST_CASE("space mode validates the degree span") {
  JumpLocusSet l = jump_loci(koszul_torus(2, qq()));
  CHECK_THROWS_AS(verify_propagation(l, IndexingMode::space(1)), DomainError);
  JumpLocusSet shifted = jump_loci(koszul_torus(2, qq()).shifted(1));
  CHECK_THROWS_AS(verify_propagation(shifted, IndexingMode::space(2)),
                  DomainError);
  CHECK_NOTHROW(verify_propagation(shifted, IndexingMode::perverse()));
}

TEST_CASE("component verification accepts the true component") {
  JumpLocusSet l = jump_loci(koszul_torus(2, qq()));
  LaurentRing r = qring(2);
  VerificationReport rep =
      verify_components(l, IndexingMode::space(2),
                        {ideal_of(r, {"t1 - 1", "t2 - 1"})});
  CHECK(rep.properties.at("iii").status == PropertyResult::Status::Pass);
  CHECK(rep.properties.at("iv_purity").status ==
        PropertyResult::Status::Pass);
}

TEST_CASE("component verification follows twists") {
  std::vector<mpq_class> lam = {2, 1};
  JumpLocusSet l = jump_loci(koszul_torus(2, qq()).twisted(lam));
  LaurentRing r = qring(2);
  VerificationReport rep =
      verify_components(l, IndexingMode::space(2),
                        {ideal_of(r, {"2*t1 - 1", "t2 - 1"})});
  CHECK(rep.properties.at("iii").status == PropertyResult::Status::Pass);
}

TEST_CASE("component verification rejects a wrong component") {
  JumpLocusSet l = jump_loci(koszul_torus(2, qq()));
  LaurentRing r = qring(2);
  VerificationReport rep = verify_components(l, IndexingMode::space(2),
                                             {ideal_of(r, {"t1 - 1"})});
  CHECK(rep.properties.at("iii").status == PropertyResult::Status::Fail);
  CHECK_FALSE(rep.all_pass());

  VerificationReport none =
      verify_components(l, IndexingMode::space(2), {});
  CHECK(none.properties.at("iii").status == PropertyResult::Status::Skipped);
}

TEST_CASE("duality verdicts for tori and wedges") {
  for (int n = 1; n <= 3; ++n) {
    DualityVerdict v = duality_check(koszul_torus(n, zz()), n,
                                     {2, 3, 5, 7, 11}, true);
    CHECK(v.kind == DualityVerdict::Kind::Abelian);
    CHECK(v.n == n);
    CHECK(v.positive());
    CHECK(v.caveat == std::string(kDualityCaveat));
    // The requested primes all got tested.
    for (long p : {2L, 3L, 5L, 7L, 11L})
      CHECK(std::find(v.primes_tested.begin(), v.primes_tested.end(), p) !=
            v.primes_tested.end());
  }
  DualityVerdict w = duality_check(wedge_of_circles(2, zz()), 1, {2, 3, 5},
                                   true);
  CHECK(w.kind == DualityVerdict::Kind::Abelian);
  CHECK(w.n == 1);
}

TEST_CASE("duality verdict for the surface is negative with a witness") {
  DualityVerdict v =
      duality_check(surface_complex(2, zz()), 2, {2, 3, 5}, true);
  CHECK(v.kind == DualityVerdict::Kind::No);
  CHECK_FALSE(v.positive());
  CHECK(v.witness_field == "QQ");
  CHECK(v.witness_degree == 1);
  nlohmann::json j = v.to_json();
  CHECK(j["verdict"] == "no");
  CHECK(j["witness"]["field"] == "QQ");
  CHECK(j["caveat"] == std::string(kDualityCaveat));
}

TEST_CASE("partial label and input validation for duality") {
  DualityVerdict v = duality_check(koszul_torus(1, zz()), 1, {2}, false);
  CHECK(v.kind == DualityVerdict::Kind::Partial);
  CHECK(v.to_json()["verdict"] == "partial-abelian-duality");
  CHECK_THROWS_AS(duality_check(koszul_torus(1, qq()), 1, {2}, true),
                  DomainError);
  CHECK_THROWS_AS(duality_check(koszul_torus(1, zz()), 1, {}, true),
                  DomainError);
  CHECK_THROWS_AS(duality_check(koszul_torus(1, zz()), 1, {6}, true),
                  DomainError);
}

TEST_CASE("positive duality implies space mode propagation over each field") {
  FreeComplex kz = koszul_torus(2, zz());
  DualityVerdict v = duality_check(kz, 2, {2, 3, 5}, true);
  REQUIRE(v.positive());
  std::vector<CoeffDomain> fields = {qq()};
  for (long p : v.primes_tested) fields.push_back(fp(p));
  for (const CoeffDomain& k : fields) {
    JumpLocusSet l = jump_loci(kz.reduce_coefficients(k));
    VerificationReport rep = verify_propagation(l, IndexingMode::space(2));
    CAPTURE(k.to_string());
    CHECK(rep.all_pass());
  }
}

TEST_CASE("below the top the jumping and fitting loci agree") {
  CHECK(jumping_matches_fitting(koszul_torus(2, qq()), 2));
  CHECK(jumping_matches_fitting(koszul_torus(3, qq()), 3));
  CHECK(jumping_matches_fitting(wedge_of_circles(3, qq()), 1));
  int bad = -99;
  CHECK(jumping_matches_fitting(fox_z2(qq()), 2, &bad));
  CHECK(bad == -99);  // untouched on success
}

TEST_CASE("betti bounds at the trivial character") {
  BettiBoundsReport k =
      betti_bounds(jump_loci(koszul_torus(2, qq())), 2, 0,
                   IndexingMode::space(2));
  CHECK(k.betti == std::vector<int>{1, 2, 1});
  CHECK(k.all_pass());
  CHECK(k.signed_euler.status == PropertyResult::Status::Pass);

  BettiBoundsReport w =
      betti_bounds(jump_loci(wedge_of_circles(2, qq())), 1, 0,
                   IndexingMode::space(1));
  CHECK(w.all_pass());

  BettiBoundsReport g =
      betti_bounds(jump_loci(surface_complex(2, qq())), 2, 0,
                   IndexingMode::space(2));
  CHECK_FALSE(g.all_pass());
  CHECK(g.signed_euler.status == PropertyResult::Status::Fail);
  CHECK(g.signed_euler.witness.find("-2") != std::string::npos);
  CHECK(g.positivity.status == PropertyResult::Status::Pass);

  // A positive defect weakens the checked range and skips the euler clause.
  BettiBoundsReport g1 =
      betti_bounds(jump_loci(surface_complex(2, qq())), 2, 1,
                   IndexingMode::space(2));
  CHECK(g1.signed_euler.status == PropertyResult::Status::Skipped);
  CHECK(g1.all_pass());
  CHECK_THROWS_AS(betti_bounds(jump_loci(koszul_torus(2, qq())), 2, 3,
                               IndexingMode::space(2)),
                  DomainError);
}

TEST_CASE("oracle agrees on the stock complexes") {
  OracleReport rep = run_oracle(jump_loci(koszul_torus(2, qq())));
  CHECK(rep.points_tested >= 50);
  CHECK(rep.mismatches == 0);
  REQUIRE(!rep.rows.empty());
  // The trivial character leads and is a member of every locus.
  CHECK(rep.rows[0].point == "(1, 1)");
  CHECK(rep.rows[0].betti == std::vector<int>{1, 2, 1});
  CHECK(rep.rows[0].member == std::vector<bool>{true, true, true});
  for (const OracleRow& row : rep.rows) CHECK(row.consistent);
  nlohmann::json j = rep.to_json();
  CHECK(j["mismatches"] == 0);
  CHECK(j["points_tested"] == rep.points_tested);
}

TEST_CASE("oracle solves zero dimensional loci for on-locus points") {
  std::vector<mpq_class> lam = {2};
  OracleReport rep = run_oracle(jump_loci(koszul_torus(1, qq()).twisted(lam)));
  CHECK(rep.mismatches == 0);
  bool found_half = false;
  for (const OracleRow& row : rep.rows)
    if (row.point == "(1/2)" && row.member[0]) found_half = true;
  CHECK(found_half);
}

TEST_CASE("oracle visits extension points over prime fields") {
  OracleReport rep = run_oracle(jump_loci(wedge_of_circles(2, fp(5))));
  CHECK(rep.points_tested >= 50);
  CHECK(rep.mismatches == 0);
  bool saw_ext = false;
  for (const OracleRow& row : rep.rows)
    if (row.field == "F5^2") saw_ext = true;
  CHECK(saw_ext);
  // Whole-torus degree: every sampled point is a member with a jump.
  for (const OracleRow& row : rep.rows) {
    CHECK(row.member[1]);
    CHECK(row.betti[1] >= 1);
  }
}

TEST_CASE("oracle runs are deterministic in the seed") {
  JumpLocusSet l = jump_loci(koszul_torus(2, fp(2)));
  OracleReport a = run_oracle(l);
  OracleReport b = run_oracle(l);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].point == b.rows[i].point);
    CHECK(a.rows[i].field == b.rows[i].field);
  }
  SamplePlan other;
  other.seed = 7;
  OracleReport c = run_oracle(l, other);
  CHECK(c.mismatches == 0);
}
