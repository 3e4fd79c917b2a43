#include "mjsing/jets.hpp"

#include <algorithm>
#include <future>

#include "mjsing/error.hpp"

namespace mjsing {

VarListPtr jet_variables(const VarList& base, int level, bool fiber) {
  VarList names;
  for (int j = fiber ? 1 : 0; j <= level; ++j)
    for (const auto& b : base) names.push_back(b + "_" + std::to_string(j));
  return make_vars(std::move(names));
}

namespace {

using Series = std::vector<Polynomial>;  // coefficients of t^0..t^m

Series series_mul(const Series& a, const Series& b, int m, const VarListPtr& vars) {
  Series r(std::size_t(m) + 1, Polynomial(vars));
  for (int i = 0; i <= m; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= m; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

}  // namespace

JetSystem jet_equations(const Polynomial& f, int m, bool fiber) {
  if (m < 0) throw Error("negative level");
  JetSystem sys;
  sys.level = m;
  sys.fiber = fiber;
  sys.base_vars = f.vars_ptr();
  sys.jet_vars = jet_variables(f.vars(), m, fiber);
  const std::size_t n = f.nvars();
  const VarListPtr& jv = sys.jet_vars;
  const int first = fiber ? 1 : 0;

  // powers[i][e] = (sum_j x_i^(j) t^j)^e truncated at t^m.
  std::vector<std::vector<Series>> powers(n);
  auto power = [&](std::size_t i, unsigned e) -> const Series& {
    auto& pw = powers[i];
    if (pw.empty()) {
      Series one(std::size_t(m) + 1, Polynomial(jv));
      one[0] = Polynomial::constant(jv, 1);
      pw.push_back(one);
      Series s(std::size_t(m) + 1, Polynomial(jv));
      for (int j = first; j <= m; ++j) s[j] = Polynomial::variable(jv, std::size_t(j - first) * n + i);
      pw.push_back(s);
    }
    while (pw.size() <= e) pw.push_back(series_mul(pw.back(), pw[1], m, jv));
    return pw[e];
  };

  Series total(std::size_t(m) + 1, Polynomial(jv));
  for (const auto& [mono, c] : f.terms()) {
    if (fiber && int(mono.degree()) > m) continue;
    Series term(std::size_t(m) + 1, Polynomial(jv));
    term[0] = Polynomial::constant(jv, c);
    for (std::size_t i = 0; i < n; ++i)
      if (mono[i]) term = series_mul(term, power(i, mono[i]), m, jv);
    for (int j = 0; j <= m; ++j) total[j] += term[j];
  }
  sys.equations = std::move(total);
  return sys;
}

namespace {

// Fiber equations F^(j), 1 <= j <= level, of every generator, inside the
// jet ring of `ring_level`.
std::vector<Polynomial> fiber_equations(const IdealPresentation& ideal, int level,
                                        const VarListPtr& ring) {
  std::vector<Polynomial> eqs;
  for (const auto& g : ideal.generators()) {
    JetSystem sys = jet_equations(g, level, true);
    for (int j = 1; j <= level; ++j)
      if (!sys.equations[j].is_zero()) eqs.push_back(sys.equations[j].rename_into(ring));
  }
  return eqs;
}

void require_origin(const IdealPresentation& ideal) {
  if (!vanishes_at_origin(ideal)) throw Error("germ not at origin");
}

}  // namespace

int jet_fiber_dim(const IdealPresentation& ideal, int m) {
  require_origin(ideal);
  if (m < 1) throw Error("level must be at least 1");
  VarListPtr ring = jet_variables(ideal.vars(), m, true);
  int dim = ideal_dimension(IdealPresentation(ring, fiber_equations(ideal, m, ring)));
  if (dim == kEmptyDimension) throw Error("empty jet fiber");
  return dim;
}

namespace {

void finish(MldBound& b) {
  bool found = false;
  for (const auto& t : b.terms) {
    if (t.value < 0 && !b.minus_infinity) {
      b.minus_infinity = true;
      b.witness_m = t.m;
      b.witness_n = t.n;
    }
    if (!found || t.value < b.value) {
      found = true;
      b.value = t.value;
      if (!b.minus_infinity) {
        b.witness_m = t.m;
        b.witness_n = t.n;
      }
    }
  }
}

}  // namespace

MldBound mld_upper_bound(const IdealPresentation& ideal, int d, int max_level) {
  require_origin(ideal);
  if (max_level < 1) throw Error("level must be at least 1");
  if (ideal_dimension(ideal) != d) throw Error("inconsistent dimension");
  std::vector<std::future<int>> dims;
  for (int n = 1; n <= max_level; ++n)
    dims.push_back(std::async(std::launch::async, [&ideal, n] { return jet_fiber_dim(ideal, n); }));
  MldBound b;
  for (int n = 1; n <= max_level; ++n) {
    int dim = dims[n - 1].get();
    b.terms.push_back({n, n, dim, Rational((n + 1) * d - dim)});
  }
  finish(b);
  return b;
}

MldBound mld_mixed_upper_bound(const IdealPresentation& ideal_x, int c, const IdealPresentation& a,
                               const Rational& t, int max_m, int max_n) {
  require_origin(ideal_x);
  if (max_m < 1 || max_n < 1) throw Error("level must be at least 1");
  const int big_n = static_cast<int>(ideal_x.nvars());
  int dim_x = ideal_dimension(ideal_x);
  if (dim_x == kEmptyDimension || c != big_n - dim_x) throw Error("inconsistent codimension");
  if (!same_vars(a.vars_ptr(), ideal_x.vars_ptr())) throw Error("variable lists differ");
  if (t < 0) throw Error("negative exponent t");
  const bool unit = !vanishes_at_origin(a);

  struct Cell {
    int m, n;
  };
  std::vector<Cell> cells;
  if (unit) {
    for (int n = 1; n <= max_n; ++n) cells.push_back({0, n});
  } else {
    for (int m = 1; m <= max_m; ++m)
      for (int n = 1; n <= max_n; ++n) cells.push_back({m, n});
  }
  std::vector<std::future<int>> dims;
  for (const auto& cell : cells) {
    dims.push_back(std::async(std::launch::async, [&, cell] {
      int big_m = std::max(cell.m, cell.n);
      VarListPtr ring = jet_variables(ideal_x.vars(), big_m, true);
      auto eqs = fiber_equations(ideal_x, cell.n, ring);
      if (cell.m > 0) {
        auto more = fiber_equations(a, cell.m, ring);
        eqs.insert(eqs.end(), more.begin(), more.end());
      }
      int dim = ideal_dimension(IdealPresentation(ring, eqs));
      if (dim == kEmptyDimension) throw Error("empty jet fiber");
      return dim;
    }));
  }
  MldBound b;
  b.mode = MldBound::Mode::Mixed;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    int dim = dims[k].get();
    const auto& cell = cells[k];
    int big_m = std::max(cell.m, cell.n);
    Rational v = Rational((big_m + 1) * big_n - (cell.n + 1) * c - dim);
    if (cell.m > 0) v -= (cell.m + 1) * t;
    b.terms.push_back({cell.m, cell.n, dim, v});
  }
  finish(b);
  return b;
}

}  // namespace mjsing
