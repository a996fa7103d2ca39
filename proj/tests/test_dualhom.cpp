#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "modsat/dualhom.hpp"

using namespace modsat;

TEST_CASE("fraction arithmetic in Q/Z") {
  CHECK(Frac::make(3, 6) == Frac{1, 2});
  CHECK(Frac::make(-1, 4) == Frac{3, 4});
  CHECK(Frac::make(1, 3) + Frac::make(2, 3) == Frac{0, 1});
  CHECK(Frac::make(1, 5).scaled(3) == Frac{3, 5});
  CHECK_THROWS_AS((void)Frac::make(1, 0), input_error);
}

TEST_CASE("canonical embedding cocycle") {
  RootDatum a2 = build_root_datum({CartanSeries::A, 2}, Isogeny::SimplyConnected);
  auto d0 = canonical_embedding_cocycle(a2, {});
  CHECK(d0.torus_map.is_identity());
  CHECK(d0.cocycle.is_identity());
  auto d1 = canonical_embedding_cocycle(a2, {0, 1});
  CHECK(d1.cocycle == a2.simple_reflection(0) * a2.simple_reflection(1));
  CHECK_THROWS_AS((void)canonical_embedding_cocycle(a2, {7}), input_error);
}

TEST_CASE("inner case dual hom scales by ell and twists") {
  RootDatum a1 = build_root_datum({CartanSeries::A, 1}, Isogeny::Adjoint);
  SatakeSetup s = make_satake_setup(inner_torsion_automorphism(a1, {1}, 3));
  DualHomData dh = inner_case_dual_hom(s, {});
  CHECK(dh.torus_map == scalar_mul(3, Mat::identity(1)));
  CHECK(dh.frob_twist == 1);

  TorusCharacter th{Frac::make(2, 5)};
  auto p1 = toral_parameter(th, dh, 3);
  auto p2 = frobenius_twist_parameter(
      toral_parameter(th, canonical_embedding_cocycle(a1, {}), 3), 3);
  CHECK(p1 == p2);
  CHECK(p1.torus_part[0] == Frac{1, 5});

  // denominators divisible by ell are outside the prime-to-ell torus
  CHECK_THROWS_AS((void)toral_parameter({Frac::make(1, 3)}, dh, 3), input_error);
}

TEST_CASE("inner case requires ell above the excluded-prime bound") {
  RootDatum c3 = build_root_datum({CartanSeries::C, 3}, Isogeny::SimplyConnected);
  SatakeSetup s = make_satake_setup(inner_torsion_automorphism(c3, {1, 0, 0}, 2));
  CHECK_THROWS_AS((void)inner_case_dual_hom(s, {}), hypothesis_error);
}

TEST_CASE("normal form is constant on conjugacy classes") {
  RootDatum a2 = build_root_datum({CartanSeries::A, 2}, Isogeny::SimplyConnected);
  UnramLParameter rho;
  rho.torus_part = {Frac::make(1, 4), Frac::make(1, 2)};
  rho.weyl_part = a2.simple_reflection(0);
  auto nf = parameter_normal_form(a2, rho);
  WeylGroup w = WeylGroup::generate(a2);
  for (size_t i = 0; i < w.order(); ++i) {
    const Mat& v = w.elements[i];
    Mat vinv(2, 2);
    for (int j = 0; j < 2; ++j) {
      Vec e(2, 0);
      e[j] = 1;
      vinv.set_col(j, *solve_integer(v, e));
    }
    UnramLParameter conj;
    conj.torus_part = transport(rho.torus_part, transpose(v));
    conj.weyl_part = v * rho.weyl_part * vinv;
    CHECK(parameter_normal_form(a2, conj) == nf);
  }
  // distinct classes stay distinct
  UnramLParameter other = rho;
  other.frob_twist = 1;
  CHECK_FALSE(parameter_normal_form(a2, other) == nf);
}

TEST_CASE("dual hom action on characters is monomial") {
  RootDatum a1 = build_root_datum({CartanSeries::A, 1}, Isogeny::Adjoint);
  SatakeSetup s = make_satake_setup(inner_torsion_automorphism(a1, {1}, 3));
  DualHomData dh = inner_case_dual_hom(s, {});
  CharRing f3{3};
  CharacterElement mono = char_monomial(1, f3, {2});
  CharacterElement img = dualhom_on_character(mono, dh);
  CHECK(img.coeff({6}) == 1);
  CHECK(img.frob_twist == 1);
}

TEST_CASE("sigma dual torus map is the norm") {
  RootDatum a1 = build_root_datum({CartanSeries::A, 1}, Isogeny::SimplyConnected);
  SatakeSetup s = make_satake_setup(block_cyclic_automorphism(a1, 2));
  Mat n = sigma_dual_torus_map(s);
  CHECK(n == s.n_map());
  // N of the shift on Z^2 is the all-ones matrix
  CHECK(n == Mat::from_rows({{1, 1}, {1, 1}}));
}
