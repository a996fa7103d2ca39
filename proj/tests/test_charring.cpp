#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "modsat/charring.hpp"

using namespace modsat;

static RootDatum mk(CartanSeries s, int r, Isogeny i = Isogeny::SimplyConnected) {
  return build_root_datum({s, r}, i);
}

TEST_CASE("weyl characters and dimensions") {
  CharRing z{0};
  RootDatum a1 = mk(CartanSeries::A, 1);
  auto chi = weyl_character(a1, {1}, z);
  CHECK(chi.dimension() == 2);
  CHECK(chi.coeff({1}) == 1);
  CHECK(chi.coeff({-1}) == 1);

  RootDatum a2 = mk(CartanSeries::A, 2);
  auto ad = weyl_character(a2, {1, 1}, z);
  CHECK(ad.dimension() == 8);
  CHECK(ad.coeff({0, 0}) == 2);
  CHECK(weyl_dimension(a2, {1, 1}) == 8);

  RootDatum g2 = mk(CartanSeries::G, 2);
  CHECK(weyl_dimension(g2, {1, 0}) == 14);
  CHECK(weyl_dimension(g2, {0, 1}) == 7);

  RootDatum b3 = mk(CartanSeries::B, 3);
  CHECK(weyl_dimension(b3, {0, 0, 1}) == 8);  // spin
  auto spin = weyl_character(b3, {0, 0, 1}, z);
  CHECK(spin.dimension() == 8);
}

TEST_CASE("clebsch gordan on A1") {
  CharRing z{0};
  RootDatum a1 = mk(CartanSeries::A, 1);
  auto chi = weyl_character(a1, {1}, z);
  auto dec = decompose(a1, multiply(chi, chi));
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].weight == Vec{2});
  CHECK(dec[0].coeff == 1);
  CHECK(dec[1].weight == Vec{0});
  CHECK(dec[1].coeff == 1);
}

TEST_CASE("spin square identity in types B2 and B3") {
  CharRing z{0};
  for (int n : {2, 3}) {
    RootDatum b = mk(CartanSeries::B, n);
    Vec spin_wt(n, 0);
    spin_wt[n - 1] = 1;
    auto spin = weyl_character(b, spin_wt, z);
    auto dec = decompose(b, multiply(spin, spin));
    REQUIRE(static_cast<int>(dec.size()) == n + 1);
    // 2*spin, then each fundamental down the chain, then the trivial
    Vec top(n, 0);
    top[n - 1] = 2;
    CHECK(dec[0].weight == top);
    std::set<Vec> rest;
    for (size_t i = 1; i < dec.size(); ++i) {
      CHECK(dec[i].coeff == 1);
      rest.insert(dec[i].weight);
    }
    std::set<Vec> expect;
    for (int i = 0; i < n - 1; ++i) {
      Vec w(n, 0);
      w[i] = 1;
      expect.insert(w);
    }
    expect.insert(Vec(n, 0));
    CHECK(rest == expect);
    CHECK(dec[0].coeff == 1);
  }
}

TEST_CASE("weight classification") {
  RootDatum a2 = mk(CartanSeries::A, 2);
  CHECK(classify_weight(a2, {1, 0}) == WeightClass::Minuscule);
  CHECK(classify_weight(a2, {1, 1}) == WeightClass::QuasiMinuscule);
  RootDatum a1 = mk(CartanSeries::A, 1);
  CHECK(classify_weight(a1, {2}) == WeightClass::QuasiMinuscule);
  RootDatum b2 = mk(CartanSeries::B, 2);
  CHECK(classify_weight(b2, {0, 2}) == WeightClass::Neither);
}

TEST_CASE("weyl invariance and dominant representatives") {
  CharRing z{0};
  RootDatum b2 = mk(CartanSeries::B, 2);
  auto chi = weyl_character(b2, {1, 1}, z);
  CHECK(is_weyl_invariant(b2, chi));
  chi.support[{9, 9}] = 1;
  CHECK_FALSE(is_weyl_invariant(b2, chi));
}

TEST_CASE("norm character and goodness") {
  RootDatum a1 = mk(CartanSeries::A, 1);
  auto inn = inner_torsion_automorphism(a1, {0}, 3);
  CharRing f3{3}, z{0};
  auto chi = weyl_character(a1, {1}, f3);
  auto nm = norm_character(chi, inn);
  // (e + e^{-1})^3 has top coefficient 1 and coeff(1) = 3 = 0 mod 3
  CHECK(nm.coeff({3}) == 1);
  CHECK(nm.coeff({1}) == 0);

  GoodnessReport rep = goodness_of_norm(weyl_character(a1, {1}, z), inn);
  CHECK(rep.all_good);
  // weight 3w of Nm(std) carries exactly the diagonal fixed tuple
  bool saw_top = false;
  for (const auto& w : rep.weights)
    if (w.weight == Vec{3}) {
      saw_top = true;
      CHECK(w.fixed_points == 1);
    }
  CHECK(saw_top);
}

TEST_CASE("restrict along a lattice map") {
  CharRing z{0};
  CharacterElement f = char_monomial(2, z, {1, 2});
  Mat m = Mat::from_rows({{1, 0}});  // project to the first coordinate
  CharacterElement g = restrict_along(f, m, 1);
  CHECK(g.rank == 1);
  CHECK(g.coeff({1}) == 1);
}
