#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "modsat/linalg.hpp"

using namespace modsat;

TEST_CASE("smith normal form diagonalizes and tracks transforms") {
  Mat m = Mat::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  SmithResult s = smith_normal_form(m);
  CHECK(s.u * m * s.v == s.d);
  // invariant factors divide successively
  for (size_t i = 0; i + 1 < s.divisors.size(); ++i) {
    CHECK(s.divisors[i] != 0);
    CHECK(s.divisors[i + 1] % s.divisors[i] == 0);
  }
}

TEST_CASE("integer kernel and solve") {
  Mat m = Mat::from_rows({{1, 2, 3}, {2, 4, 6}});
  Mat k = integer_kernel(m);
  CHECK(k.cols() == 2);
  for (int j = 0; j < k.cols(); ++j) CHECK(is_zero(m * k.col(j)));

  auto sol = solve_integer(m, {6, 12});
  REQUIRE(sol.has_value());
  CHECK(m * *sol == Vec{6, 12});
  CHECK_FALSE(solve_integer(m, {1, 0}).has_value());
}

TEST_CASE("lattice membership and quotient invariants") {
  Mat l = Mat::from_cols({{2, 0}, {0, 3}});
  CHECK(in_lattice(l, {4, 3}));
  CHECK_FALSE(in_lattice(l, {1, 0}));
  QuotientInvariants q = lattice_quotient(Mat::identity(2), l);
  CHECK(q.free_rank == 0);
  // Z^2 / (2Z + 3Z) is cyclic of order 6
  CHECK(q.divisors == std::vector<i64>{6});
}

TEST_CASE("preimage lattice") {
  // f: Z^2 -> Z, (x, y) -> x + 2y; preimage of 2Z
  Mat f = Mat::from_rows({{1, 2}});
  Mat p = Mat::from_cols({{2}});
  Mat pre = preimage_lattice(f, p);
  CHECK(in_lattice(pre, {2, 0}));
  CHECK(in_lattice(pre, {0, 1}));
  CHECK_FALSE(in_lattice(pre, {1, 0}));
}

TEST_CASE("F_p linear algebra") {
  FpMat m(2, 3, 5);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 0; m(1, 1) = 1; m(1, 2) = 4;
  CHECK(fp_rank(m) == 2);
  FpMat k = fp_kernel(m);
  CHECK(k.cols() == 1);
  auto sol = fp_solve(m, {3, 1});  // col0 + col1
  REQUIRE(sol.has_value());

  FpMat sing = FpMat::reduce(Mat::from_rows({{1, 2}, {2, 4}}), 5);
  CHECK(fp_rank(sing) == 1);
}

TEST_CASE("primality and modular inverse") {
  CHECK(is_prime(2));
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(21));
  CHECK(mod_norm(mod_inv(3, 7) * 3, 7) == 1);
}

TEST_CASE("lattice basis and equality") {
  Mat g = Mat::from_cols({{2, 0}, {0, 2}, {2, 2}});
  Mat b = lattice_basis(g);
  CHECK(b.cols() == 2);
  CHECK(same_lattice(b, Mat::from_cols({{2, 0}, {0, 2}})));
  CHECK_FALSE(same_lattice(b, Mat::identity(2)));
}
