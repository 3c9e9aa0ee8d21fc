#include <stdexcept>

#include "doctest.h"
#include "grassmann/fqcount.hpp"
#include "oracles.hpp"

using gr::Int;
using gr::Poly;

TEST_CASE("prime field construction") {
  auto f5 = gr::make_prime_field(5);
  CHECK(f5.q == 5);
  CHECK((f5.sqrt_minus_one * f5.sqrt_minus_one) % 5 == 4);
  auto f13 = gr::make_prime_field(13);
  CHECK((f13.sqrt_minus_one * f13.sqrt_minus_one) % 13 == 12);

  CHECK_THROWS_AS(gr::make_prime_field(2), std::invalid_argument);
  CHECK_THROWS_AS(gr::make_prime_field(3), std::invalid_argument);
  CHECK_THROWS_AS(gr::make_prime_field(7), std::invalid_argument);   // 3 mod 4
  CHECK_THROWS_AS(gr::make_prime_field(9), std::invalid_argument);   // 3^2
  CHECK_THROWS_AS(gr::make_prime_field(25), std::invalid_argument);  // 5^2
}

TEST_CASE("closed-form point counts, small spaces") {
  CHECK(gr::grass_points_closed(1, 2).coeffs() == std::vector<Int>{-1, 1});
  CHECK(gr::grass_points_closed(1, 3).coeffs() == std::vector<Int>{0, 0, 1});
  CHECK(gr::grass_points_closed(1, 4).coeffs() ==
        std::vector<Int>{0, -1, 0, 1});
  CHECK(gr::grass_points_closed(2, 4).coeffs() ==
        std::vector<Int>{0, 0, 1, 0, 1});
  CHECK(gr::grass_points_closed(2, 5).coeffs() ==
        std::vector<Int>{0, 0, 0, 0, 1, 0, 1});
}

TEST_CASE("point count at q = 1 is the euler characteristic") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(gr::grass_points_closed(k, n).eval(1) == gr::euler_char(k, n));
}

TEST_CASE("sphere point counts") {
  CHECK(gr::sphere_points(0) == Poly::constant(2));
  CHECK(gr::sphere_points(1).coeffs() == std::vector<Int>{-1, 1});
  CHECK(gr::sphere_points(2).coeffs() == std::vector<Int>{0, 1, 1});
  CHECK(gr::sphere_points(3).coeffs() == std::vector<Int>{0, -1, 0, 1});
  for (int n = 0; n <= 4; ++n) {
    CHECK(gr::sphere_points(n).eval(5) == oracle::count_sphere_points(n, 5));
  }
  for (int n = 0; n <= 3; ++n)
    CHECK(gr::sphere_points(n).eval(13) ==
          oracle::count_sphere_points(n, 13));
}

TEST_CASE("isotropic cone counts") {
  CHECK(gr::isotropic_zero_count(1) == Poly::constant(1));
  CHECK(gr::isotropic_zero_count(3).coeffs() == std::vector<Int>{0, 0, 1});
  CHECK(gr::isotropic_zero_count(4).coeffs() ==
        std::vector<Int>{0, -1, 1, 1});
  for (int n = 1; n <= 5; ++n)
    CHECK(gr::isotropic_zero_count(n).eval(5) ==
          oracle::count_isotropic_vectors(n, 5));
  for (int n = 1; n <= 4; ++n)
    CHECK(gr::isotropic_zero_count(n).eval(13) ==
          oracle::count_isotropic_vectors(n, 13));
}

TEST_CASE("lines counted three ways") {
  for (int n = 2; n <= 5; ++n) {
    long brute = oracle::count_lines(n, 5);
    CHECK(gr::grass_points_closed(1, n).eval(5) == brute);
    CHECK(gr::oracle_count(1, n, gr::make_prime_field(5)) == brute);
  }
}

TEST_CASE("rotation group orders") {
  CHECK(gr::so_order(2).coeffs() == std::vector<Int>{-2, 2});
  CHECK(gr::so_order(3).coeffs() == std::vector<Int>{0, -2, 0, 2});
  for (int n = 2; n <= 9; ++n) {
    Poly p = gr::so_order(n);  // the tower identity is asserted inside
    CHECK(p.degree() == n * (n - 1) / 2);
  }
}

TEST_CASE("subspace enumeration oracle, pinned values") {
  auto f5 = gr::make_prime_field(5);
  CHECK(gr::oracle_count(1, 2, f5) == 4);
  CHECK(gr::oracle_count(1, 3, f5) == 25);
  CHECK(gr::oracle_count(1, 4, f5) == 120);
  CHECK(gr::oracle_count(2, 4, f5) == 650);
  auto f13 = gr::make_prime_field(13);
  CHECK(gr::oracle_count(1, 3, f13) == 169);
}

TEST_CASE("oracle budget guard") {
  auto f13 = gr::make_prime_field(13);
  CHECK_THROWS_AS(gr::oracle_count(2, 6, f13), std::length_error);
  CHECK_THROWS_AS(gr::oracle_count(3, 8, f13), std::length_error);
}

TEST_CASE("the blow-up polynomial predicts the point count") {
  auto f5 = gr::make_prime_field(5);
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k) {
      auto chk = gr::verify_p_relation(k, n, f5);
      CHECK(chk.ok);
      CHECK(chk.closed == chk.oracle);
      CHECK(chk.closed == chk.via_p);
    }
  auto chk24 = gr::verify_p_relation(2, 4, f5);
  CHECK(chk24.closed == 650);
}
