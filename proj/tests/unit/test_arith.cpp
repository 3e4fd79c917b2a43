#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "mjsing/error.hpp"
#include "mjsing/factor.hpp"
#include "mjsing/number_field.hpp"

using namespace mjsing;

namespace {

std::vector<std::pair<std::string, int>> shape(const std::vector<Factor>& fs) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& f : fs) out.emplace_back(f.poly.to_string(), f.multiplicity);
  std::sort(out.begin(), out.end());
  return out;
}

UPoly random_upoly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> c(-6, 6);
  std::vector<Rational> v;
  for (int i = 0; i <= degree; ++i) v.emplace_back(c(rng));
  if (v.back() == 0) v.back() = 1;
  return UPoly(v);
}

}  // namespace

TEST_CASE("factor small polynomials over Q") {
  CHECK(shape(univariate_factor(UPoly{0, -1, 0, 1})) ==
        shape({{UPoly{0, 1}, 1}, {UPoly{-1, 1}, 1}, {UPoly{1, 1}, 1}}));
  auto f = univariate_factor(UPoly{1, 0, 1});
  REQUIRE(f.size() == 1);
  CHECK(f[0].poly == UPoly{1, 0, 1});
  CHECK(shape(univariate_factor(UPoly{-4, 0, 0, 0, 1})) == shape({{UPoly{-2, 0, 1}, 1}, {UPoly{2, 0, 1}, 1}}));
  CHECK(is_irreducible(UPoly{1, 0, 0, 0, 1}));
  CHECK_FALSE(is_irreducible(UPoly{4, 0, 0, 0, 1}));  // z^4 + 4 = (z^2+2z+2)(z^2-2z+2)
}

TEST_CASE("factor keeps multiplicities and rejects zero") {
  UPoly p = UPoly{-1, 1} * UPoly{-1, 1} * UPoly{-1, 1} * UPoly{1, 0, 1};
  auto f = univariate_factor(p * Rational(7, 3));
  CHECK(shape(f) == shape({{UPoly{-1, 1}, 3}, {UPoly{1, 0, 1}, 1}}));
  CHECK_THROWS_AS(univariate_factor(UPoly{}), Error);
}

TEST_CASE("factorization of a product merges the factorizations") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    UPoly p = random_upoly(rng, 1 + trial % 4), q = random_upoly(rng, 1 + (trial * 7) % 5);
    std::map<std::string, int> merged;
    for (const auto& f : univariate_factor(p)) merged[f.poly.to_string()] += f.multiplicity;
    for (const auto& f : univariate_factor(q)) merged[f.poly.to_string()] += f.multiplicity;
    std::map<std::string, int> direct;
    for (const auto& f : univariate_factor(p * q)) direct[f.poly.to_string()] += f.multiplicity;
    CHECK(merged == direct);
  }
}

TEST_CASE("square-free decomposition and gcd") {
  UPoly p = UPoly{1, 1} * UPoly{1, 1} * UPoly{0, 1};
  auto sf = squarefree_decomposition(p);
  REQUIRE(sf.size() == 2);
  CHECK(sf[0] == std::pair<UPoly, int>{UPoly{0, 1}, 1});
  CHECK(sf[1] == std::pair<UPoly, int>{UPoly{1, 1}, 2});
  CHECK(gcd(UPoly{-1, 0, 1}, UPoly{1, 2, 1}) == UPoly{1, 1});
  auto eg = extended_gcd(UPoly{-2, 0, 1}, UPoly{1, 1});
  CHECK(eg.s * UPoly{-2, 0, 1} + eg.t * UPoly{1, 1} == eg.g);
  CHECK_THROWS_AS(divmod(UPoly{1, 1}, UPoly{}), Error);
}

TEST_CASE("adjoining roots") {
  auto [f2, a] = ext_root(UPoly{-2, 0, 1});
  CHECK(a * a == Scalar(2));
  auto [fi, i] = ext_root(UPoly{1, 0, 1}, "i");
  CHECK(i * i == Scalar(-1));
  auto [f3, c] = ext_root(UPoly{-2, 0, 0, 1});
  CHECK(f3->degree() == 3);
  CHECK(c * c * c == Scalar(2));
  CHECK_THROWS_AS(ext_root(UPoly{-4, 0, 1}), Error);
}

TEST_CASE("scalar inverses") {
  CHECK(scalar_inverse(Scalar(Rational(3, 4))) == Scalar(Rational(4, 3)));
  auto [f2, a] = ext_root(UPoly{-2, 0, 1});
  CHECK(scalar_inverse(a) == a * Scalar(Rational(1, 2)));
  auto [fi, i] = ext_root(UPoly{1, 0, 1});
  CHECK(scalar_inverse(Scalar(1) + i) == (Scalar(1) - i) * Scalar(Rational(1, 2)));
  CHECK_THROWS_AS(scalar_inverse(Scalar(0)), Error);
}

TEST_CASE("every nonzero scalar times its inverse is one") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-9, 9);
  auto [field, a] = ext_root(UPoly{-2, 0, 0, 1});
  for (int k = 0; k < 50; ++k) {
    Scalar s = Scalar(c(rng)) + Scalar(c(rng)) * a + Scalar(c(rng)) * a * a;
    if (s.is_zero()) continue;
    CHECK(s * scalar_inverse(s) == Scalar(1));
  }
}

TEST_CASE("a root of p is a zero of p") {
  for (const UPoly& p : {UPoly{-2, 0, 1}, UPoly{1, 1, 1}, UPoly{-5, 0, 0, 1}, UPoly{1, 0, 0, 0, 1}, UPoly{1, -1, 0, 0, 0, 1}}) {
    REQUIRE(is_irreducible(p));
    auto [field, a] = ext_root(p);
    CHECK(evaluate(p, a).is_zero());
  }
}

TEST_CASE("scalars from different fields do not mix") {
  auto [f1, a] = ext_root(UPoly{-2, 0, 1});
  auto [f2, b] = ext_root(UPoly{-3, 0, 1});
  CHECK_THROWS_AS(a + b, Error);
}
