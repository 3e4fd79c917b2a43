#include <doctest.h>

#include <random>

#include "mjsing/jets.hpp"
#include "mjsing/poly_ops.hpp"
#include "support.hpp"

using namespace mjsing;
using namespace mjsing::testing;

TEST_CASE("jet equations of xy") {
  auto v = vars_of({"x", "y"});
  JetSystem js = jet_equations(P("x*y", v), 2, false);
  REQUIRE(js.equations.size() == 3);
  const VarListPtr& j = js.jet_vars;
  CHECK(js.equations[0] == P("x_0*y_0", j));
  CHECK(js.equations[1] == P("x_0*y_1 + x_1*y_0", j));
  CHECK(js.equations[2] == P("x_0*y_2 + x_1*y_1 + x_2*y_0", j));
}

TEST_CASE("fiber equations below and at the multiplicity") {
  auto v = vars_of({"x", "y"});
  JetSystem cube = jet_equations(P("x^3", v), 2, true);
  for (const auto& e : cube.equations) CHECK(e.is_zero());
  JetSystem cusp = jet_equations(P("x^2 - y^3", v), 2, true);
  CHECK(cusp.equations[2] == P("x_1^2", cusp.jet_vars));
}

TEST_CASE("jet fiber dimensions") {
  auto v = vars_of({"x", "y"});
  CHECK(jet_fiber_dim(ideal(v, {"x*y"}), 2) == 3);
  CHECK(jet_fiber_dim(ideal(v, {"x"}), 3) == 3);
  auto w = vars_of({"x1", "x2", "x3", "x4", "x5", "x6"});
  CHECK(jet_fiber_dim(ideal(w, {"x3*x4 - x5*x6", "x1*x2", "x1*x3^3 - x5^5", "x2*x3^2 - x6^5"}), 2) == 10);
  CHECK_THROWS_AS(jet_fiber_dim(ideal(v, {"x - 1"}), 2), Error);
  CHECK_THROWS_AS(jet_fiber_dim(ideal(v, {"x"}), 0), Error);
}

TEST_CASE("plain bounds") {
  auto v2 = vars_of({"x", "y"});
  MldBound node = mld_upper_bound(ideal(v2, {"x*y"}), 1, 3);
  CHECK_FALSE(node.minus_infinity);
  REQUIRE(node.terms.size() == 3);
  for (const auto& t : node.terms) CHECK(t.value == 0);

  auto v3 = vars_of({"x", "y", "z"});
  MldBound axes = mld_upper_bound(ideal(v3, {"x*y", "y*z", "z*x"}), 1, 1);
  CHECK(axes.minus_infinity);
  CHECK(axes.terms[0].value == -1);

  MldBound cusp = mld_upper_bound(ideal(v2, {"x^2 - y^3"}), 1, 5);
  CHECK(cusp.minus_infinity);
  CHECK(cusp.witness_n == 5);
  CHECK(cusp.terms[4].fiber_dim == 7);
  CHECK(cusp.terms[4].value == -1);
  for (int n = 0; n < 4; ++n) CHECK(cusp.terms[n].value >= 0);

  CHECK_THROWS_AS(mld_upper_bound(ideal(v2, {"x*y"}), 2, 2), Error);
}

TEST_CASE("mixed bounds") {
  auto v2 = vars_of({"x", "y"});
  MldBound line = mld_mixed_upper_bound(ideal(v2, {"x"}), 1, ideal(v2, {"y"}), 1, 2, 2);
  CHECK(line.value == 0);
  auto v3 = vars_of({"x", "y", "z"});
  MldBound nc = mld_mixed_upper_bound(ideal(v3, {"x*y"}), 1, ideal(v3, {"1"}), 0, 2, 2);
  CHECK(nc.value == 1);
  MldBound plain = mld_upper_bound(ideal(v3, {"x*y"}), 2, 2);
  CHECK(plain.value == nc.value);
  CHECK_THROWS_AS(mld_mixed_upper_bound(ideal(v3, {"x*y"}), 2, ideal(v3, {"1"}), 0, 2, 2), Error);
}

TEST_CASE("bounds do not increase with the level") {
  auto v = vars_of({"x", "y", "z"});
  for (const char* f : {"x*y", "x^2 + y^2 + z^2", "x^2 + y^3 + z^3", "x*y*z"}) {
    Rational previous = 1000;
    for (int level = 1; level <= 3; ++level) {
      MldBound b = mld_upper_bound(ideal(v, {f}), 2, level);
      CHECK(b.value <= previous);
      previous = b.value;
    }
  }
}

TEST_CASE("smooth germs have bound equal to their dimension") {
  auto v = vars_of({"x", "y", "z", "w"});
  CHECK(mld_upper_bound(ideal(v, {"x"}), 3, 3).value == 3);
  CHECK(mld_upper_bound(ideal(v, {"x", "y"}), 2, 3).value == 2);
  CHECK(mld_upper_bound(ideal(v, {"x", "y", "z"}), 1, 3).value == 1);
}

TEST_CASE("jet equations expand f along a series") {
  std::mt19937 rng(61);
  auto v = vars_of({"x", "y", "z"});
  auto t = vars_of({"t"});
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 3;
    Polynomial f = random_poly(v, rng, 4, 1, 3, 4);
    bool fiber = trial % 2 == 0;
    JetSystem js = jet_equations(f, m, fiber);
    std::vector<Rational> point;
    std::vector<Polynomial> series(3, Polynomial(t));
    int first = fiber ? 1 : 0;
    for (int j = first; j <= m; ++j)
      for (int i = 0; i < 3; ++i) {
        Rational c = coeff(rng);
        point.push_back(c);
        series[i] += Polynomial::term(t, c, Monomial{unsigned(j)});
      }
    Polynomial composed = f.substitute(series, m);
    for (int j = 0; j <= m; ++j) CHECK(js.equations[j].evaluate(point) == composed.coefficient(Monomial{unsigned(j)}));
  }
}

TEST_CASE("fiber equations vanish below the multiplicity") {
  std::mt19937 rng(67);
  auto v = vars_of({"x", "y", "z"});
  for (int trial = 0; trial < 25; ++trial) {
    Polynomial f = random_poly(v, rng, 5, 1, 4, 4);
    if (f.is_zero()) continue;
    int mult = mult_at_origin(f);
    JetSystem js = jet_equations(f, 4, true);
    for (int j = 1; j < mult && j <= 4; ++j) CHECK(js.equations[j].is_zero());
    if (mult <= 4) {
      std::vector<Polynomial> first;
      for (std::size_t i = 0; i < 3; ++i) first.push_back(Polynomial::variable(js.jet_vars, i));
      CHECK(js.equations[mult] == initial_form(f).poly().substitute(first));
    }
  }
}
