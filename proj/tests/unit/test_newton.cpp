#include <doctest.h>

#include <random>

#include "mjsing/newton.hpp"
#include "mjsing/simplex.hpp"
#include "support.hpp"

using namespace mjsing;
using namespace mjsing::testing;

namespace {

std::vector<Rational> ones(std::size_t n) { return std::vector<Rational>(n, Rational(1)); }

// Whether the integer point p lies in the hull plus orthant, by scanning
// integer weight vectors w >= 0 up to a bound: p is outside iff some w has
// w.p < min over the support of w.s.
bool grid_contains(const NewtonPolygon& poly, const std::vector<long>& p, long bound) {
  std::size_t n = poly.dimension();
  std::vector<long> w(n, 0);
  while (true) {
    long wp = 0;
    for (std::size_t i = 0; i < n; ++i) wp += w[i] * p[i];
    long best = -1;
    for (const auto& s : poly.support()) {
      long ws = 0;
      for (std::size_t i = 0; i < n; ++i) ws += w[i] * long(s[i]);
      if (best < 0 || ws < best) best = ws;
    }
    if (wp < best) return false;
    std::size_t i = 0;
    while (i < n && w[i] == bound) w[i++] = 0;
    if (i == n) return true;
    ++w[i];
  }
}

}  // namespace

TEST_CASE("exact simplex") {
  lp::Problem p;
  p.a = {{1, 1}, {1, -1}};
  p.relation = {lp::Relation::LessEqual, lp::Relation::LessEqual};
  p.b = {4, 2};
  p.objective = {1, 2};
  auto s = lp::maximize(p);
  CHECK(s.status == lp::Status::Optimal);
  CHECK(s.value == 8);
  p.relation = {lp::Relation::GreaterEqual, lp::Relation::LessEqual};
  p.a = {{1, 0}, {1, 0}};
  p.b = {3, 2};
  CHECK(lp::maximize(p).status == lp::Status::Infeasible);
  p.a = {{1, -1}};
  p.relation = {lp::Relation::LessEqual};
  p.b = {1};
  CHECK(lp::maximize(p).status == lp::Status::Unbounded);
  lp::Problem q;
  q.a = {{Rational(1, 3), Rational(1, 2)}};
  q.relation = {lp::Relation::Equal};
  q.b = {1};
  q.objective = {1, 0};
  auto t = lp::maximize(q);
  CHECK(t.value == 3);
}

TEST_CASE("Newton polygon supports") {
  auto v2 = vars_of({"x", "y"});
  auto v3 = vars_of({"x", "y", "z"});
  using S = std::vector<std::vector<unsigned>>;
  auto sorted = [](S s) {
    std::sort(s.begin(), s.end());
    return s;
  };
  CHECK(sorted(newton_polygon(P("x^2 + y^3", v2)).support()) == sorted({{2, 0}, {0, 3}}));
  CHECK(newton_polygon(P("x*y", v2)).support() == S{{1, 1}});
  CHECK(sorted(newton_polygon(P("x^2 + y^5 + z^5", v3)).support()) == sorted({{2, 0, 0}, {0, 5, 0}, {0, 0, 5}}));
  CHECK_THROWS_AS(newton_polygon(Polynomial(v3)), Error);
}

TEST_CASE("membership of the point (1,...,1)") {
  auto v2 = vars_of({"x", "y"});
  auto v3 = vars_of({"x", "y", "z"});
  CHECK_FALSE(contains_point(newton_polygon(P("x^2 + y^5 + z^5", v3)), ones(3), false));
  auto boundary = newton_polygon(P("x^2 + y^3 + z^6", v3));
  CHECK(contains_point(boundary, ones(3), false));
  CHECK_FALSE(contains_point(boundary, ones(3), true));
  CHECK(contains_point(newton_polygon(P("x*y", v2)), ones(2), false));
}

TEST_CASE("Newton certificates") {
  auto v = vars_of({"x", "y", "z"});
  CHECK(newton_nonlc_certificate(P("x^2 + y^5 + z^5", v)) == NewtonCertificate::NotLc);
  CHECK(newton_nonlc_certificate(P("x^2 + y^3 + z^6", v)) == NewtonCertificate::NotCanonical);
  CHECK(newton_nonlc_certificate(P("x^2 + y^2 + z^2", v)) == NewtonCertificate::NoCertificate);
  CHECK(to_string(NewtonCertificate::NotLc) == "NOT_LC");
  CHECK_THROWS_AS(newton_nonlc_certificate(P("1 + x", v)), Error);
}

TEST_CASE("membership is monotone and agrees with a weight grid") {
  std::mt19937 rng(41);
  auto v = vars_of({"x", "y", "z"});
  for (int k = 0; k < 30; ++k) {
    Polynomial f = random_poly(v, rng, 3, 1, 5, 2);
    if (f.is_zero()) continue;
    auto poly = newton_polygon(f);
    bool in = contains_point(poly, ones(3), false);
    bool interior = contains_point(poly, ones(3), true);
    if (interior) CHECK(in);
    CHECK(in == grid_contains(poly, {1, 1, 1}, 60));
    Polynomial g = f + random_poly(v, rng, 2, 1, 5, 2);
    if (!g.is_zero() && in) {
      bool superset = true;
      for (const auto& [m, c] : f.terms()) superset = superset && g.coefficient(m) != 0;
      if (superset) CHECK(contains_point(newton_polygon(g), ones(3), false));
    }
  }
}
