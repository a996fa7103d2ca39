#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "modsat/grcombi.hpp"

using namespace modsat;

TEST_CASE("iwahori orbit dimensions") {
  RootDatum a2 = build_root_datum({CartanSeries::A, 2}, Isogeny::SimplyConnected);
  Vec lam{2, 1};
  CHECK(iwahori_orbit_dimension(a2, lam) == dot(a2.two_rho, lam));
  // a reflection strictly drops the dimension
  Vec ref = a2.simple_reflection_cochar(0) * lam;
  CHECK(iwahori_orbit_dimension(a2, ref) < iwahori_orbit_dimension(a2, lam));
  CHECK(iwahori_orbit_dimension(a2, Vec{0, 0}) == 0);
}

TEST_CASE("fixed strata of the A3 fold") {
  RootDatum a3 = build_root_datum({CartanSeries::A, 3}, Isogeny::SimplyConnected);
  auto fold = pinned_automorphism(a3, {2, 1, 0});
  Vec lh{1, 1};  // dominant coweight of the fixed datum
  REQUIRE(fold.fixed.dominant_coweight(lh));
  Vec lam = fold.cochar_embedding * lh;
  FixedStratum fs = fixed_stratum(fold, lam);
  REQUIRE_FALSE(fs.empty);
  CHECK(fs.h_lambda == lh);
  CHECK(fs.dim == dot(fold.fixed.two_rho, lh));
  // a non-dominant fixed coweight still lands in H, just off the formula
  FixedStratum nd = fixed_stratum(fold, fold.cochar_embedding * Vec{1, 0});
  CHECK_FALSE(nd.empty);
  CHECK(fixed_stratum(fold, {1, 0, 0}).empty);
}

TEST_CASE("pariversities") {
  RootDatum a2 = build_root_datum({CartanSeries::A, 2}, Isogeny::SimplyConnected);
  CHECK(pariversity(a2, {1, 1}) == 0);
  RootDatum a3 = build_root_datum({CartanSeries::A, 3}, Isogeny::SimplyConnected);
  auto fold = pinned_automorphism(a3, {2, 1, 0});
  Vec lam = fold.cochar_embedding * Vec{1, 0};
  i64 rp = relative_pariversity(fold, lam);
  CHECK((rp == 0 || rp == 1));
  CHECK_THROWS_AS((void)relative_pariversity(fold, {1, 0, 0}), input_error);
}

TEST_CASE("deligne lusztig tate multisets") {
  RootDatum a1 = build_root_datum({CartanSeries::A, 1}, Isogeny::SimplyConnected);
  Mat s = a1.simple_reflection(0);
  TorusCharacter th{Frac::make(1, 5)};
  // A1 Coxeter: twist by the Coxeter element s, full Weyl group supplied
  auto res = dl_tate_multiset({s}, s, Mat::identity(1), th);
  CHECK(res.subgroup_order == 2);
  CHECK(res.fixed_count == 2);
  REQUIRE(res.multiset.size() == 2);
  CHECK(res.multiset[0][0] == Frac{1, 5});
  CHECK(res.multiset[1][0] == Frac{4, 5});

  // A2 Coxeter: centralizer of the Coxeter element has order 3
  RootDatum a2 = build_root_datum({CartanSeries::A, 2}, Isogeny::SimplyConnected);
  Mat s1 = a2.simple_reflection(0), s2 = a2.simple_reflection(1);
  auto res2 = dl_tate_multiset({s1, s2}, s1 * s2, Mat::identity(2),
                               {Frac::make(1, 7), Frac::make(2, 7)});
  CHECK(res2.subgroup_order == 6);
  CHECK(res2.fixed_count == 3);
  CHECK(res2.multiset.size() == 3);
}

TEST_CASE("permutation groups") {
  Perm r{1, 2, 0}, t{1, 0, 2};
  PermGroup s3 = PermGroup::generate(3, {r, t});
  CHECK(s3.order() == 6);
  CHECK(s3.contains(perm_compose(r, t)));
  CHECK(perm_compose(r, perm_inverse(r)) == perm_identity(3));
  // generator words reproduce the elements
  for (size_t i = 0; i < s3.order(); ++i) {
    Perm m = perm_identity(3);
    for (int g : s3.words[i]) m = perm_compose(m, s3.gens[g]);
    CHECK(m == s3.elements[i]);
  }
}

TEST_CASE("coset fixed points: bijective case and witnessed failure") {
  {
    Perm r{1, 2, 0}, t{1, 0, 2};
    PermGroup gamma = PermGroup::generate(3, {r, t});
    auto rep = coset_fixed_points(gamma, {r}, {perm_inverse(r), t}, 2);
    CHECK(rep.hypothesis);
    CHECK(rep.bijective);
    CHECK(rep.coset_fixed == 2);
  }
  {
    Perm r{1, 2, 3, 0};
    PermGroup gamma = PermGroup::generate(4, {r});
    Perm r2 = perm_compose(r, r);
    auto rep = coset_fixed_points(gamma, {r2}, {perm_inverse(r)}, 2);
    CHECK_FALSE(rep.hypothesis);
    CHECK_FALSE(rep.bijective);
    CHECK(rep.coset_fixed == 2);
    CHECK(rep.fixed_cosets == 1);
  }
  {
    // non-homomorphic generator images are rejected
    Perm r{1, 2, 0}, t{1, 0, 2};
    PermGroup gamma = PermGroup::generate(3, {r, t});
    CHECK_THROWS_AS((void)coset_fixed_points(gamma, {r}, {t, t}, 2), input_error);
  }
}
