#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "modsat/brauer.hpp"

using namespace modsat;

static RootDatum mk(CartanSeries s, int r, Isogeny i = Isogeny::SimplyConnected) {
  return build_root_datum({s, r}, i);
}

TEST_CASE("inner setup with toral H: br sends chi(w) to monomials") {
  RootDatum a1 = mk(CartanSeries::A, 1);
  auto inn = inner_torsion_automorphism(a1, {1}, 3);
  SatakeSetup s = make_satake_setup(inn);
  CHECK(s.h_datum.rank == 1);
  CHECK(s.h_datum.n_roots() == 0);

  CharRing f3{3};
  auto chi = weyl_character(a1, {1}, f3);
  auto br = normalized_brauer(chi, s);
  CHECK(br.coeff({3}) == 1);
  CHECK(br.coeff({-3}) == 1);
  CHECK(br.coeff({1}) == 0);

  auto cf = brauer_closed_form(chi, s);
  cf.frob_twist = br.frob_twist;
  CHECK(cf == br);
}

TEST_CASE("base change A1 ell=3 decomposes as chi(3) + 2 chi(1)") {
  RootDatum a1 = mk(CartanSeries::A, 1);
  SatakeSetup s = make_satake_setup(block_cyclic_automorphism(a1, 3));
  CHECK(s.h_datum.rank == 1);
  CHECK(s.h_datum.n_roots() == 2);

  CharRing f3{3};
  CharacterElement boxed = char_one(3, f3);
  for (int b = 0; b < 3; ++b) {
    CharacterElement t = char_zero(3, f3);
    Vec p(3, 0), m(3, 0);
    p[b] = 1;
    m[b] = -1;
    t.support[p] = 1;
    t.support[m] = 1;
    boxed = multiply(boxed, t);
  }
  auto br = normalized_brauer(boxed, s);
  auto dec = decompose(s.h_datum, br, 48);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].weight == Vec{3});
  CHECK(mod_norm(dec[0].coeff, 3) == 1);
  CHECK(dec[1].weight == Vec{1});
  CHECK(mod_norm(dec[1].coeff, 3) == 2);
}

TEST_CASE("fold setup is multiplicative over F_2") {
  RootDatum pgl3 = mk(CartanSeries::A, 2, Isogeny::Adjoint);
  Mat sw(2, 2);
  sw(0, 1) = 1;
  sw(1, 0) = 1;
  auto fold = general_automorphism(pgl3, sw, 2, RootDatum{}, Mat(2, 0), Mat(0, 2));
  SatakeSetup s = make_satake_setup(fold);
  CHECK(s.h_datum.simple_roots[0] == Vec{2});
  CHECK(s.h_datum.simple_coroots[0] == Vec{1});

  CharRing f2{2};
  auto chi = weyl_character(pgl3, {1, 1}, f2);
  auto br = normalized_brauer(chi, s);
  auto cf = brauer_closed_form(chi, s);
  cf.frob_twist = br.frob_twist;
  CHECK(cf == br);
  CHECK(normalized_brauer(multiply(chi, chi), s) == multiply(br, br));
  CHECK(normalized_brauer(add(chi, chi), s) == add(br, br));
}

TEST_CASE("characteristic zero control fails multiplicativity") {
  RootDatum a1 = mk(CartanSeries::A, 1);
  SatakeSetup s = make_satake_setup(block_cyclic_automorphism(a1, 2));
  CharRing z{0};
  CharacterElement f = char_zero(2, z);
  f.support[{1, 0}] = 1;
  f.support[{0, 1}] = 1;
  auto bf = brauer_restrict(f, s);
  auto bff = brauer_restrict(multiply(f, f), s);
  CHECK_FALSE(bff == multiply(bf, bf));
}

TEST_CASE("satake matrix shape, liftability and the hypothesis gate") {
  RootDatum a1 = mk(CartanSeries::A, 1);
  auto inn = inner_torsion_automorphism(a1, {1}, 3);
  SatakeSetup s = make_satake_setup(inn);
  SatakeMatrix m = satake_matrix(s, 4);
  CHECK(m.col_weights.size() >= 3);
  CHECK(m.entries.cols() == static_cast<int>(m.col_weights.size()));
  CHECK(char_zero_liftability(s, 4).all_lift);
  for (i64 e : m.entries.col(0)) CHECK((e >= 0 && e < 3));

  // ell = 2 with a C3 factor violates the excluded-prime hypothesis
  RootDatum c3 = mk(CartanSeries::C, 3);
  SatakeSetup s2 = make_satake_setup(inner_torsion_automorphism(c3, {1, 0, 0}, 2));
  CHECK_THROWS_AS((void)satake_matrix(s2, 2), hypothesis_error);
}

TEST_CASE("brauer restrict rejects non-invariant input") {
  RootDatum a1 = mk(CartanSeries::A, 1);
  SatakeSetup s = make_satake_setup(block_cyclic_automorphism(a1, 2));
  CharRing f2{2};
  CharacterElement f = char_monomial(2, f2, {1, 0});
  CHECK_THROWS_AS((void)brauer_restrict(f, s), input_error);
}
