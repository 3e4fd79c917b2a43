#include <doctest.h>

#include "mjsing/classify.hpp"
#include "mjsing/poly_ops.hpp"
#include "support.hpp"

using namespace mjsing;
using namespace mjsing::testing;

namespace {

Verdict surface(const char* f) {
  auto v = vars_of({"x", "y", "z"});
  return classify_surface_germ(ideal(v, {f})).verdict;
}

std::string ade(const char* f) {
  auto v = vars_of({"x", "y", "z"});
  return ade_recognize(P(f, v), 12).label;
}

}  // namespace

TEST_CASE("embedding dimension") {
  auto v = vars_of({"x", "y", "z"});
  CHECK(emb_dim_at_origin(ideal(v, {"x*y", "y*z", "z*x"})) == 3);
  auto w = vars_of({"x", "y"});
  CHECK(emb_dim_at_origin(ideal(w, {"x^2 - y^3"})) == 2);
  CHECK(emb_dim_at_origin(ideal(w, {"y - x^2"})) == 1);
  CHECK_THROWS_AS(emb_dim_at_origin(ideal(w, {"y - 1"})), Error);
}

TEST_CASE("splitting off squares") {
  auto v = vars_of({"x", "y", "z"});
  auto a = split_off_squares(P("x^2 + y^2 + z^3", v), 12);
  CHECK(a.tau == 2);
  CHECK(a.residual == P("z^3", a.residual.vars_ptr()));
  auto b = split_off_squares(P("x*y + z^3", v), 12);
  CHECK(b.tau == 2);
  CHECK(b.residual == P("z^3", b.residual.vars_ptr()));
  auto c = split_off_squares(P("x^2 + x*y^2 + z^3", v), 12);
  CHECK(c.tau == 1);
  CHECK(c.residual == P("z^3 - (1/4)*y^4", c.residual.vars_ptr()));
  CHECK_THROWS_AS(split_off_squares(P("x^3 + y^3", v), 12), Error);
  CHECK_THROWS_AS(split_off_squares(P("x^2 + y^3", v), 7), Error);
}

TEST_CASE("the substitution brings f to the split form") {
  auto v = vars_of({"x", "y", "z"});
  for (const char* text : {"x^2 + x*y^2 + z^3", "x*y + x*z^2 + y^3 + z^5", "x^2 + 2*x*y + y*z^2 + z^4 + x*z^3"}) {
    Polynomial f = P(text, v);
    auto s = split_off_squares(f, 10);
    Polynomial g = f.substitute(s.substitution, 10);
    std::vector<Polynomial> restrict_images;
    for (std::size_t i = 0; i < 3; ++i) restrict_images.push_back(Polynomial::variable(v, i));
    for (std::size_t i : s.square_variables) restrict_images[i] = Polynomial(v);
    CHECK(g.substitute(restrict_images) == s.residual.rename_into(v));
    for (std::size_t k = 0; k < s.square_variables.size(); ++k) {
      Polynomial linear = g.derivative(s.square_variables[k]).substitute(restrict_images);
      CHECK(linear.is_zero());
    }
  }
}

TEST_CASE("E-series invariants") {
  auto v = vars_of({"y", "z"});
  auto a = e_series_invariants(P("y^3 + y*z^4 + z^6", v), 12);
  CHECK(a.alpha.to_string() == "4");
  CHECK(a.beta.to_string() == "6");
  auto b = e_series_invariants(P("y^3 + z^7", v), 12);
  CHECK(b.alpha.at_least);
  CHECK(b.beta.to_string() == "7");
  auto c = e_series_invariants(P("y^3 + y^2*z^3", v), 12);
  CHECK(c.alpha.to_string() == "6");
  CHECK(c.beta.to_string() == "9");
  CHECK_THROWS_AS(e_series_invariants(P("y^3 + z^7", v), 11), Error);
}

TEST_CASE("ADE recognition") {
  CHECK(ade("x^2 + y^2 + z^5") == "A4");
  CHECK(ade("x^2 + y^3 + z^4") == "E6");
  CHECK(ade("x^2 + y^4 + z^4") == "NONE");
  CHECK(ade("x^2 + y^2 + z^2") == "A1");
  CHECK(ade("x^2 + y^2*z + z^5") == "D6");
  CHECK(ade("x^2 + y^3 + y*z^3") == "E7");
  CHECK(ade("x^2 + y^3 + z^5") == "E8");
  CHECK(ade("x*y + z^9") == "A8");
}

TEST_CASE("surface germs") {
  CHECK(surface("x^2 + y^2*z") == Verdict::MjLogCanonicalOnly);
  CHECK(surface("x^2 + y^3 + z^7") == Verdict::NotMjLogCanonical);
  CHECK(surface("x^2 + y^2 + z^2") == Verdict::MjCanonical);
  CHECK(surface("x^3 + y^3 + z^3") == Verdict::MjLogCanonicalOnly);
  CHECK(surface("x^4 + y^4 + z^4") == Verdict::NotMjLogCanonical);
  auto w = vars_of({"x1", "x2", "x3", "x4"});
  CHECK(classify_surface_germ(ideal(w, {"x1*x3", "x2*x4"})).verdict == Verdict::MjLogCanonicalOnly);
  CHECK(classify_surface_germ(ideal(w, {"x1^2", "x2*x4"})).verdict == Verdict::NotMjLogCanonical);
}

TEST_CASE("curve germs") {
  auto v = vars_of({"x", "y"});
  CHECK(classify_curve_germ(ideal(v, {"x*y"})).verdict == Verdict::MjLogCanonicalOnly);
  CHECK(classify_curve_germ(ideal(v, {"x^2 - y^3"})).verdict == Verdict::NotMjLogCanonical);
  CHECK(classify_curve_germ(ideal(v, {"y - x^2"})).verdict == Verdict::MjCanonical);
  auto w = vars_of({"x", "y", "z"});
  CHECK(classify_curve_germ(ideal(w, {"x*y", "y*z", "z*x"})).verdict == Verdict::NotMjLogCanonical);
  CHECK_THROWS_AS(classify_curve_germ(ideal(w, {"x*y"})), Error);
}

TEST_CASE("cones over smooth bases") {
  auto c = cone_criterion(4, 3, 2);
  CHECK(c.canonical);
  CHECK(c.log_canonical);
  auto s23 = cone_criterion(12, 6, 2);
  CHECK_FALSE(s23.canonical);
  CHECK(s23.log_canonical);
  auto s33 = cone_criterion(16, 7, 2);
  CHECK_FALSE(s33.canonical);
  CHECK_FALSE(s33.log_canonical);
  CHECK_THROWS_AS(cone_criterion(3, 4, 2), Error);
}

TEST_CASE("verdict tokens") {
  CHECK(to_string(Verdict::MjCanonical) == "MJ_CANONICAL");
  CHECK(to_string(Verdict::MjLogCanonicalOnly) == "MJ_LOG_CANONICAL_ONLY");
  CHECK(to_string(Verdict::NotMjLogCanonical) == "NOT_MJ_LOG_CANONICAL");
  CHECK(to_string(Verdict::Inconclusive) == "INCONCLUSIVE");
}
