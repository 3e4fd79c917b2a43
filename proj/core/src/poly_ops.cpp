#include "mjsing/poly_ops.hpp"

#include <algorithm>
#include <random>

#include "mjsing/error.hpp"

namespace mjsing {

HomogeneousForm::HomogeneousForm(Polynomial p) : p_(std::move(p)) {
  if (!p_.is_homogeneous()) throw Error("form is not homogeneous");
}

int mult_at_origin(const Polynomial& f) { return f.min_degree(); }

HomogeneousForm initial_form(const Polynomial& f) {
  if (f.is_zero()) throw Error("zero input");
  return HomogeneousForm(f.homogeneous_part(f.min_degree()));
}

Matrix<Rational> random_invertible_matrix(std::size_t n, std::uint64_t seed, int bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-bound, bound);
  while (true) {
    Matrix<Rational> m(n, std::vector<Rational>(n));
    for (auto& row : m)
      for (auto& v : row) v = dist(rng);
    if (rank(m) == n) return m;
  }
}

Polynomial linear_change(const Polynomial& f, const Matrix<Rational>& m) {
  const std::size_t n = f.nvars();
  if (m.size() != n) throw Error("matrix size does not match variable count");
  for (const auto& row : m)
    if (row.size() != n) throw Error("matrix size does not match variable count");
  if (n > 0 && determinant(m) == 0) throw Error("non-invertible change");
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial im(f.vars_ptr());
    for (std::size_t j = 0; j < n; ++j) im.add_term(Monomial::variable(n, j), m[i][j]);
    images.push_back(std::move(im));
  }
  return f.substitute(images);
}

Matrix<Rational> linear_parts(const std::vector<Polynomial>& gens) {
  Matrix<Rational> a;
  for (const auto& g : gens) {
    std::vector<Rational> row(g.nvars());
    for (std::size_t j = 0; j < g.nvars(); ++j) row[j] = g.coefficient(Monomial::variable(g.nvars(), j));
    a.push_back(std::move(row));
  }
  return a;
}

int jacobian_rank_at_origin(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw Error("empty generator list");
  return static_cast<int>(rank_fraction_free(linear_parts(gens)));
}

namespace {

void require_binary(const HomogeneousForm& g) {
  if (g.poly().is_zero()) throw Error("zero input");
  if (g.poly().nvars() != 2) throw Error("binary form needs exactly 2 variables");
}

// g(y, 1) as a univariate polynomial in y.
UPoly dehomogenize(const HomogeneousForm& g) {
  std::vector<Rational> c(g.degree() + 1);
  for (const auto& [m, v] : g.poly().terms()) c[m[0]] = v;
  return UPoly(std::move(c));
}

}  // namespace

std::vector<PatternEntry> binary_multiplicity_pattern(const HomogeneousForm& g) {
  require_binary(g);
  std::vector<PatternEntry> out;
  UPoly p = dehomogenize(g);
  int deficit = g.degree() - p.degree();
  if (deficit > 0) out.push_back({deficit, 1});
  if (p.degree() > 0) {
    for (const auto& [s, k] : squarefree_decomposition(p))
      for (int i = 0; i < s.degree(); ++i) out.push_back({k, 1});
  }
  std::sort(out.begin(), out.end(), [](const PatternEntry& a, const PatternEntry& b) {
    return a.multiplicity > b.multiplicity;
  });
  return out;
}

CubeTest is_perfect_cube_of_linear(const HomogeneousForm& g) {
  require_binary(g);
  if (g.degree() != 3) return {};
  auto pattern = binary_multiplicity_pattern(g);
  if (pattern.size() != 1) return {};
  const auto& vars = g.poly().vars_ptr();
  UPoly p = dehomogenize(g);
  Polynomial l(vars);
  if (p.degree() == 0) {
    l = Polynomial::variable(vars, 1);
  } else {
    // g = c (y + b z)^3 with c = coeff(y^3) and 3cb = coeff(y^2 z).
    Rational b = p.coeff(2) / (3 * p.coeff(3));
    l = Polynomial::variable(vars, 0) + Polynomial::variable(vars, 1) * b;
  }
  return {true, primitive(l)};
}

}  // namespace mjsing
