#include "mjsing/normal_form.hpp"

#include <algorithm>

#include "mjsing/error.hpp"
#include "mjsing/groebner.hpp"

namespace mjsing {

namespace {

std::vector<Polynomial> identity_images(const VarListPtr& vars) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < vars->size(); ++i) images.push_back(Polynomial::variable(vars, i));
  return images;
}

Rational quad_coeff(const Polynomial& q, std::size_t i, std::size_t j) {
  const std::size_t n = q.nvars();
  if (i == j) return q.coefficient(Monomial::variable(n, i, 2));
  Monomial m(n);
  m.set(i, 1);
  m.set(j, 1);
  return q.coefficient(m) / 2;
}

// Number of variables needed to write a form: the rank of its first partials.
int essential_variables(const Polynomial& form) {
  Matrix<Rational> rows;
  std::vector<Monomial> columns;
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < form.nvars(); ++i) partials.push_back(form.derivative(i));
  for (const auto& p : partials)
    for (const auto& [m, c] : p.terms())
      if (std::find(columns.begin(), columns.end(), m) == columns.end()) columns.push_back(m);
  for (const auto& p : partials) {
    std::vector<Rational> row;
    for (const auto& m : columns) row.push_back(p.coefficient(m));
    rows.push_back(std::move(row));
  }
  return static_cast<int>(rank_fraction_free(rows));
}

}  // namespace

SplitResult split_off_squares(const Polynomial& f, int order) {
  if (mult_at_origin(f) != 2) throw Error("multiplicity is not 2");
  if (order < 8) throw Error("truncation order below minimum");
  const VarListPtr& vars = f.vars_ptr();
  const std::size_t n = f.nvars();
  Polynomial g = f.truncate(order);
  std::vector<Polynomial> phi = identity_images(vars);
  auto apply = [&](const std::vector<Polynomial>& sub) {
    g = g.substitute(sub, order);
    for (auto& p : phi) p = p.substitute(sub, order);
  };

  // Lagrange diagonalization of the quadratic part.
  std::vector<char> remaining(n, 1);
  std::vector<std::size_t> pivots;
  while (true) {
    Polynomial q = g.homogeneous_part(2);
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n && pivot == n; ++i)
      if (remaining[i] && quad_coeff(q, i, i) != 0) pivot = i;
    if (pivot == n) {
      bool mixed = false;
      for (std::size_t i = 0; i < n && !mixed; ++i)
        for (std::size_t j = i + 1; j < n && !mixed; ++j) {
          if (!remaining[i] || !remaining[j] || quad_coeff(q, i, j) == 0) continue;
          auto sub = identity_images(vars);
          sub[i] = sub[i] + Polynomial::variable(vars, j);
          apply(sub);
          mixed = true;
        }
      if (!mixed) break;
      continue;
    }
    Rational a = quad_coeff(q, pivot, pivot);
    auto sub = identity_images(vars);
    for (std::size_t j = 0; j < n; ++j)
      if (j != pivot && remaining[j]) sub[pivot] -= Polynomial::variable(vars, j) * (quad_coeff(q, pivot, j) / a);
    apply(sub);
    remaining[pivot] = 0;
    pivots.push_back(pivot);
  }

  // Move to the critical point in the square variables: x_p = phi_p(rest)
  // solves dg/dx_p = 0, and the residual is g restricted to that point.
  SplitResult out;
  for (std::size_t p : pivots) {
    out.square_variables.push_back(p);
    out.square_coefficients.push_back(g.coefficient(Monomial::variable(n, p, 2)));
  }
  std::vector<Polynomial> point = identity_images(vars);
  for (std::size_t p : pivots) point[p] = Polynomial(vars);
  std::vector<Polynomial> higher;
  for (std::size_t k = 0; k < pivots.size(); ++k)
    higher.push_back(g.derivative(pivots[k]) - Polynomial::variable(vars, pivots[k]) * (2 * out.square_coefficients[k]));
  // Each pass fixes one more degree of phi, whose order is at least 2.
  for (int precision = 2; precision <= order && !pivots.empty(); ++precision) {
    std::vector<Polynomial> next = point;
    for (std::size_t k = 0; k < pivots.size(); ++k)
      next[pivots[k]] = higher[k].substitute(point, precision) * (Rational(-1) / (2 * out.square_coefficients[k]));
    point = std::move(next);
  }
  Polynomial rest = g.substitute(point, order);
  auto shift = identity_images(vars);
  for (std::size_t p : pivots) shift[p] += point[p];
  for (auto& q : phi) q = q.substitute(shift, order);
  g = rest;
  for (std::size_t k = 0; k < pivots.size(); ++k)
    g += Polynomial::term(vars, out.square_coefficients[k], Monomial::variable(n, pivots[k], 2));

  out.tau = static_cast<int>(pivots.size());
  out.order = order;
  VarList names;
  for (std::size_t i = 0; i < n; ++i)
    if (remaining[i]) names.push_back(f.vars()[i]);
  out.residual = rest.rename_into(make_vars(names));
  out.substitution = std::move(phi);
  out.normal_form = std::move(g);
  return out;
}

std::string OrderValue::to_string() const {
  return at_least ? ">=" + std::to_string(value) : std::to_string(value);
}

ESeries e_series_invariants(const Polynomial& g, int order) {
  if (g.nvars() != 2) throw Error("binary germ needs exactly 2 variables");
  if (mult_at_origin(g) != 3) throw Error("multiplicity is not 3");
  if (order < 12) throw Error("truncation order below minimum");
  CubeTest cube = is_perfect_cube_of_linear(initial_form(g));
  if (!cube.is_cube) throw Error("cubic part is not a cube of a linear form");
  const VarListPtr& vars = g.vars_ptr();
  Polynomial y = Polynomial::variable(vars, 0), z = Polynomial::variable(vars, 1);
  Rational ly = cube.linear->coefficient(Monomial::variable(2, 0));
  Rational lz = cube.linear->coefficient(Monomial::variable(2, 1));
  std::vector<Polynomial> sub;
  if (ly != 0) sub = {(y - z * lz) * (Rational(1) / ly), z};
  else sub = {z, y * (Rational(1) / lz)};
  Polynomial h = g.substitute(sub, order);
  h *= Rational(1) / h.coefficient(Monomial::variable(2, 0, 3));

  // Make the pure-y part exactly y^3 by multiplying with a unit in y.
  Polynomial pure(vars), mixed(vars);
  for (const auto& [m, c] : h.terms()) (m[1] == 0 ? pure : mixed).add_term(m, c);
  Polynomial e(vars);
  for (const auto& [m, c] : pure.terms()) e.add_term(Monomial::variable(2, 0, m[0] - 3), c);
  Polynomial one = Polynomial::constant(vars, 1);
  Polynomial inv = one, step = one, dev = one - e;
  for (int k = 1; k <= order; ++k) {
    step = Polynomial::mul_truncated(step, dev, order);
    if (step.is_zero()) break;
    inv += step;
  }
  Polynomial b = Polynomial::mul_truncated(mixed, inv, order);

  // Weierstrass division of y^3 by y^3 + b.
  Polynomial rem(vars), num = y.pow(3);
  for (int iter = 0; iter <= 3 * order + 3 && !num.is_zero(); ++iter) {
    Polynomial quotient(vars);
    for (const auto& [m, c] : num.terms()) {
      if (m[0] >= 3) quotient.add_term(Monomial{m[0] - 3, m[1]}, c);
      else rem.add_term(m, c);
    }
    num = -Polynomial::mul_truncated(quotient, b, order);
  }
  if (!num.is_zero()) throw Error("Weierstrass division did not stabilize");

  // y^3 - rem = y^3 + a2 y^2 + a1 y + a0.
  std::vector<UPoly> a(3);
  for (int k = 0; k < 3; ++k) {
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : rem.terms()) {
      if (int(m[0]) != k) continue;
      if (coeffs.size() <= m[1]) coeffs.resize(m[1] + 1);
      coeffs[m[1]] = -c;
    }
    a[k] = UPoly(coeffs);
  }
  auto trunc = [&](const UPoly& p, int deg) {
    std::vector<Rational> c = p.coeffs();
    if (int(c.size()) > deg + 1) c.resize(std::size_t(deg) + 1);
    return UPoly(c);
  };
  UPoly a1 = trunc(a[1] - a[2] * a[2] * Rational(1, 3), order - 1);
  UPoly a0 = trunc(a[0] - a[1] * a[2] * Rational(1, 3) + a[2] * a[2] * a[2] * Rational(2, 27), order);
  auto ord = [](const UPoly& p, int cap) {
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
      if (p.coeffs()[k] != 0) return OrderValue{int(k), false};
    return OrderValue{cap, true};
  };
  return {ord(a1, order), ord(a0, order + 1)};
}

DoublePointData analyze_double_point(const Polynomial& f, int order) {
  DoublePointData d;
  d.split = split_off_squares(f, order);
  if (d.split.tau != 1) return d;
  const Polynomial& g = d.split.residual;
  d.m2 = mult_at_origin(g);
  if (d.m2 == kInfinity) return d;
  HomogeneousForm lead = initial_form(g);
  d.tau2 = essential_variables(lead.poly());
  if (d.m2 <= 4) d.pattern = binary_multiplicity_pattern(lead);
  if (d.m2 == 3 && d.pattern.size() == 1 && order >= 12) d.e_series = e_series_invariants(g, order);
  return d;
}

AdeResult ade_from_data(const Polynomial& f, const DoublePointData& d) {
  AdeResult r;
  const SplitResult& s = d.split;
  if (s.tau >= 3) {
    r.label = "A1";
    r.reason = "quadratic part of rank 3";
    return r;
  }
  if (s.tau == 2) {
    int k = mult_at_origin(s.residual);
    if (k != kInfinity) {
      r.label = "A" + std::to_string(k - 1);
      r.reason = "rank-2 quadratic part with residual of order " + std::to_string(k);
      return r;
    }
    int mu = milnor_number(f);
    if (mu == kInfinity) {
      r.reason = "non-isolated singularity";
      return r;
    }
    r.label = "A" + std::to_string(mu);
    r.reason = "residual order beyond " + std::to_string(s.order) + "; Milnor number " + std::to_string(mu);
    return r;
  }
  if (s.tau == 0) {
    r.reason = "multiplicity above 2";
    return r;
  }
  if (d.m2 == kInfinity) {
    r.reason = "residual vanishes to order " + std::to_string(s.order);
    r.undetermined = milnor_number(f) != kInfinity;
    return r;
  }
  if (d.m2 >= 4) {
    r.reason = "residual of multiplicity " + std::to_string(d.m2);
    return r;
  }
  if (d.pattern.size() == 3) {
    r.label = "D4";
    r.reason = "residual cubic with three distinct lines";
    return r;
  }
  if (d.pattern.size() == 2) {
    int mu = milnor_number(f);
    if (mu == kInfinity) {
      r.reason = "non-isolated singularity";
      return r;
    }
    r.label = "D" + std::to_string(mu);
    r.reason = "residual cubic with a double line; Milnor number " + std::to_string(mu);
    return r;
  }
  if (!d.e_series) {
    r.undetermined = true;
    r.reason = "working order too small for the E-series test";
    return r;
  }
  const OrderValue& al = d.e_series->alpha;
  const OrderValue& be = d.e_series->beta;
  std::string ab = " (alpha " + al.to_string() + ", beta " + be.to_string() + ")";
  if (!be.at_least && be.value == 4) {
    r.label = "E6";
  } else if (!al.at_least && al.value == 3 && be.value >= 5) {
    r.label = "E7";
  } else if (al.value >= 4 && !be.at_least && be.value == 5) {
    r.label = "E8";
  } else {
    r.reason = "cubic residual beyond E8" + ab;
    return r;
  }
  r.reason = "cubic residual a perfect cube" + ab;
  return r;
}

AdeResult ade_recognize(const Polynomial& f, int order) {
  if (f.nvars() != 3) throw Error("surface germ needs exactly 3 variables");
  return ade_from_data(f, analyze_double_point(f, order));
}

}  // namespace mjsing
