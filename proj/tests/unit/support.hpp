#pragma once

#include <random>
#include <string>
#include <vector>

#include "mjsing/groebner.hpp"
#include "mjsing/parser.hpp"

namespace mjsing::testing {

inline VarListPtr vars_of(std::initializer_list<const char*> names) {
  VarList v;
  for (const char* n : names) v.emplace_back(n);
  return make_vars(std::move(v));
}

inline Polynomial P(const std::string& text, const VarListPtr& vars) { return cli::parse_poly(text, vars); }

inline IdealPresentation ideal(const VarListPtr& vars, const std::vector<const char*>& gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(P(s, vars));
  return IdealPresentation(vars, std::move(g));
}

/// Random polynomial with small integer coefficients and total degree in
/// [min_degree, max_degree].
inline Polynomial random_poly(const VarListPtr& vars, std::mt19937& rng, int terms, int min_degree, int max_degree,
                              int coeff_bound = 5) {
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<int> deg(min_degree, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, vars->size() - 1);
  Polynomial f(vars);
  for (int k = 0; k < terms; ++k) {
    Monomial m(vars->size());
    int d = deg(rng);
    for (int i = 0; i < d; ++i) {
      std::size_t v = var(rng);
      m.set(v, m[v] + 1);
    }
    int c = coeff(rng);
    if (c != 0) f.add_term(m, c);
  }
  return f;
}

}  // namespace mjsing::testing
