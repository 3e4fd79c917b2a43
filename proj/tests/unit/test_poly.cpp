#include <doctest.h>

#include <random>

#include "mjsing/poly_ops.hpp"
#include "support.hpp"

using namespace mjsing;
using namespace mjsing::testing;

TEST_CASE("multiplicity at the origin") {
  auto v = vars_of({"x", "y"});
  CHECK(mult_at_origin(P("x^2 + y^3", v)) == 2);
  CHECK(mult_at_origin(Polynomial(v)) == kInfinity);
  auto w = vars_of({"x1", "x2", "x3", "x4"});
  CHECK(mult_at_origin(P("x1*x3 - x2*x4", w)) == 2);
}

TEST_CASE("initial forms") {
  auto v = vars_of({"x", "y", "z"});
  CHECK(initial_form(P("x^2 - y^3", v)).poly() == P("x^2", v));
  CHECK(initial_form(P("x^2 + y^2 + z^5", v)).poly() == P("x^2 + y^2", v));
  auto w = vars_of({"x1", "x2", "x3", "x4"});
  CHECK(initial_form(P("x1*x3 + x4^5", w)).poly() == P("x1*x3", w));
  CHECK_THROWS_AS(initial_form(Polynomial(v)), Error);
  CHECK_THROWS_AS(HomogeneousForm(P("x + y^2", v)), Error);
}

TEST_CASE("linear changes of coordinates") {
  auto v = vars_of({"x", "y"});
  Matrix<Rational> h{{1, 1}, {1, -1}};
  CHECK(linear_change(P("x*y", v), h) == P("x^2 - y^2", v));
  Matrix<Rational> id{{1, 0}, {0, 1}};
  CHECK(linear_change(P("x^3 - 2*x*y + 7", v), id) == P("x^3 - 2*x*y + 7", v));
  Matrix<Rational> swap{{0, 1}, {1, 0}};
  CHECK(linear_change(P("x^2", v), swap) == P("y^2", v));
  Matrix<Rational> singular{{1, 1}, {2, 2}};
  CHECK_THROWS_AS(linear_change(P("x", v), singular), Error);
}

TEST_CASE("jacobian rank at the origin") {
  auto v = vars_of({"x", "y", "z"});
  CHECK(jacobian_rank_at_origin({P("x*y", v), P("y*z", v), P("z*x", v)}) == 0);
  auto w = vars_of({"x", "y"});
  CHECK(jacobian_rank_at_origin({P("x", w)}) == 1);
  CHECK(jacobian_rank_at_origin({P("x + y^2", v), P("y + z^3", v)}) == 2);
}

TEST_CASE("binary multiplicity patterns") {
  auto v = vars_of({"y", "z"});
  using PE = PatternEntry;
  CHECK(binary_multiplicity_pattern(HomogeneousForm(P("y^2*z", v))) == std::vector<PE>{{2, 1}, {1, 1}});
  CHECK(binary_multiplicity_pattern(HomogeneousForm(P("y^3", v))) == std::vector<PE>{{3, 1}});
  CHECK(binary_multiplicity_pattern(HomogeneousForm(P("y^4 + z^4", v))) ==
        std::vector<PE>{{1, 1}, {1, 1}, {1, 1}, {1, 1}});
  CHECK(binary_multiplicity_pattern(HomogeneousForm(P("z^3*y", v))) == std::vector<PE>{{3, 1}, {1, 1}});
  CHECK(binary_multiplicity_pattern(HomogeneousForm(P("(y^2 + z^2)^2", v))) == std::vector<PE>{{2, 1}, {2, 1}});
}

TEST_CASE("perfect cubes of linear forms") {
  auto v = vars_of({"y", "z"});
  auto c = is_perfect_cube_of_linear(HomogeneousForm(P("(y + 2*z)^3", v)));
  CHECK(c.is_cube);
  REQUIRE(c.linear);
  CHECK(*c.linear == P("y + 2*z", v));
  CHECK_FALSE(is_perfect_cube_of_linear(HomogeneousForm(P("y^2*z", v))).is_cube);
  CHECK_FALSE(is_perfect_cube_of_linear(HomogeneousForm(P("y^3 + z^3", v))).is_cube);
}

TEST_CASE("multiplicity is additive and initial forms multiply") {
  std::mt19937 rng(3);
  auto v = vars_of({"x", "y", "z"});
  for (int k = 0; k < 40; ++k) {
    Polynomial f = random_poly(v, rng, 5, 1, 4), g = random_poly(v, rng, 5, 1, 4);
    if (f.is_zero() || g.is_zero()) continue;
    CHECK(mult_at_origin(f * g) == mult_at_origin(f) + mult_at_origin(g));
    CHECK(initial_form(f * g).poly() == initial_form(f).poly() * initial_form(g).poly());
  }
}

TEST_CASE("linear change is a group action") {
  std::mt19937 rng(9);
  auto v = vars_of({"x", "y", "z"});
  for (int k = 0; k < 20; ++k) {
    Polynomial f = random_poly(v, rng, 6, 0, 3);
    Matrix<Rational> m = random_invertible_matrix(3, 100 + k), m2 = random_invertible_matrix(3, 200 + k);
    Matrix<Rational> prod(3, std::vector<Rational>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) prod[i][j] += m[i][l] * m2[l][j];
    CHECK(linear_change(linear_change(f, m), m2) == linear_change(f, prod));
  }
}

TEST_CASE("patterns are invariant and weigh up to the degree") {
  auto v = vars_of({"y", "z"});
  for (const char* text : {"y^2*z", "y^3", "y^4 + z^4", "y*z^3", "(y - z)^2*(y + 3*z)^2", "y^5 - y*z^4", "(y^2 + z^2)*y^3"}) {
    HomogeneousForm g(P(text, v));
    auto pattern = binary_multiplicity_pattern(g);
    int total = 0;
    for (const auto& e : pattern) total += e.multiplicity * e.degree;
    CHECK(total == g.degree());
    for (int k = 0; k < 10; ++k) {
      Matrix<Rational> m = random_invertible_matrix(2, 31 * k + 7);
      CHECK(binary_multiplicity_pattern(HomogeneousForm(linear_change(g.poly(), m))) == pattern);
    }
  }
}

TEST_CASE("serialization follows graded reverse lexicographic order") {
  auto v = vars_of({"x", "y", "z"});
  CHECK(P("z + y^2 + x*z + x^2 + 1", v).to_string() == "x^2 + y^2 + x*z + z + 1");
  CHECK(P("x^2 + (1/2)*y*z", v).coefficient(Monomial{0, 1, 1}) == Rational(1, 2));
}
