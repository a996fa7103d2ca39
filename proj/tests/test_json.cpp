#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "modsat/json_io.hpp"

using namespace modsat;

TEST_CASE("root datum round trip") {
  RootDatum b2 = build_root_datum({CartanSeries::B, 2}, Isogeny::SimplyConnected);
  json j = datum_to_json(b2);
  RootDatum back = datum_from_json(j);
  CHECK(back.n_roots() == b2.n_roots());
  CHECK(back.simple_roots == b2.simple_roots);
  CHECK(datum_to_json(back) == j);
}

TEST_CASE("root datum rejects inconsistent input") {
  RootDatum a1 = build_root_datum({CartanSeries::A, 1}, Isogeny::SimplyConnected);
  json j = datum_to_json(a1);
  j["roots"][0][0] = 5;  // no longer a root system
  CHECK_THROWS_AS((void)datum_from_json(j), input_error);
  json missing;
  missing["rank"] = 1;
  CHECK_THROWS_AS((void)datum_from_json(missing), input_error);
}

TEST_CASE("automorphism round trips") {
  RootDatum a3 = build_root_datum({CartanSeries::A, 3}, Isogeny::SimplyConnected);
  auto fold = pinned_automorphism(a3, {2, 1, 0});
  DatumAutomorphism fb = auto_from_json(auto_to_json(fold), a3);
  CHECK(fb.matrix == fold.matrix);
  CHECK(fb.fixed.n_roots() == fold.fixed.n_roots());

  RootDatum b2 = build_root_datum({CartanSeries::B, 2}, Isogeny::SimplyConnected);
  auto inn = inner_torsion_automorphism(b2, {1, 0}, 3);
  DatumAutomorphism ib = auto_from_json(auto_to_json(inn), b2);
  CHECK(ib.t == inn.t);
  CHECK(ib.matrix == inn.matrix);

  auto bc = block_cyclic_automorphism(b2, 2);
  DatumAutomorphism bb = auto_from_json(auto_to_json(bc), b2);
  CHECK(bb.matrix == bc.matrix);

  RootDatum pgl3 = build_root_datum({CartanSeries::A, 2}, Isogeny::Adjoint);
  Mat sw(2, 2);
  sw(0, 1) = 1;
  sw(1, 0) = 1;
  auto gen = general_automorphism(pgl3, sw, 2, RootDatum{}, Mat(2, 0), Mat(0, 2));
  DatumAutomorphism gb = auto_from_json(auto_to_json(gen), pgl3);
  CHECK(gb.matrix == gen.matrix);
  CHECK(gb.cochar_embedding == gen.cochar_embedding);
}

TEST_CASE("sigma module and character round trips") {
  SigmaModule rm = regular_module(Coeff::Fl, 3);
  SigmaModule rb = sigma_module_from_json(sigma_module_to_json(rm));
  CHECK(rb.sigma == rm.sigma);
  CHECK(rb.coeff == rm.coeff);

  RootDatum b2 = build_root_datum({CartanSeries::B, 2}, Isogeny::SimplyConnected);
  CharRing f3{3};
  CharacterElement chi = weyl_character(b2, {1, 0}, f3);
  CharacterElement cb = character_from_json(character_to_json(chi, "b2"), 2);
  CHECK(cb == chi);
}

TEST_CASE("parameter serialization") {
  RootDatum b2 = build_root_datum({CartanSeries::B, 2}, Isogeny::SimplyConnected);
  UnramLParameter p;
  p.torus_part = {Frac::make(1, 5), Frac::make(2, 7)};
  p.weyl_part = b2.simple_reflection(0);
  p.weyl_word = {0};
  p.frob_twist = 1;
  json j = parameter_to_json(p);
  CHECK(j["frob_twist"] == 1);
  CHECK(theta_from_json(j) == p.torus_part);
}

TEST_CASE("writers are byte stable") {
  RootDatum g2 = build_root_datum({CartanSeries::G, 2}, Isogeny::Adjoint);
  CHECK(datum_to_json(g2).dump() == datum_to_json(g2).dump());
  auto s = make_satake_setup(
      inner_torsion_automorphism(
          build_root_datum({CartanSeries::A, 1}, Isogeny::Adjoint), {1}, 3));
  SatakeMatrix m = satake_matrix(s, 4);
  CHECK(satake_matrix_to_json(m, 3).dump() ==
        satake_matrix_to_json(satake_matrix(s, 4), 3).dump());
}
