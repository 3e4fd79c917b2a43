#include "mjsing/simplex.hpp"

#include "mjsing/error.hpp"

namespace mjsing::lp {

namespace {

// Dense tableau; row r reads  basis[r] = rhs[r] - sum_j t[r][j] x_j.
struct Tableau {
  std::vector<std::vector<Rational>> t;
  std::vector<Rational> rhs;
  std::vector<std::size_t> basis;
  std::size_t cols = 0;

  void pivot(std::size_t r, std::size_t c) {
    Rational p = t[r][c];
    for (auto& v : t[r]) v /= p;
    rhs[r] /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rational f = t[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
      rhs[i] -= f * rhs[r];
    }
    basis[r] = c;
  }

  // Maximizes cost . x over the columns allowed; false if unbounded.
  bool optimize(const std::vector<Rational>& cost, const std::vector<char>& allowed) {
    while (true) {
      // Reduced cost of column j: cost_j - sum_r cost_{basis r} t[r][j].
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols && enter == cols; ++j) {
        if (!allowed[j]) continue;
        Rational rc = cost[j];
        for (std::size_t r = 0; r < t.size(); ++r) rc -= cost[basis[r]] * t[r][j];
        if (rc > 0) enter = j;
      }
      if (enter == cols) return true;
      std::size_t leave = t.size();
      Rational best;
      for (std::size_t r = 0; r < t.size(); ++r) {
        if (t[r][enter] <= 0) continue;
        Rational ratio = rhs[r] / t[r][enter];
        if (leave == t.size() || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == t.size()) return false;
      pivot(leave, enter);
    }
  }

  Rational value(const std::vector<Rational>& cost) const {
    Rational v = 0;
    for (std::size_t r = 0; r < t.size(); ++r) v += cost[basis[r]] * rhs[r];
    return v;
  }
};

}  // namespace

Solution maximize(const Problem& problem) {
  const std::size_t m = problem.a.size();
  const std::size_t n = problem.objective.size();
  if (problem.relation.size() != m || problem.b.size() != m) throw Error("malformed linear program");
  for (const auto& row : problem.a)
    if (row.size() != n) throw Error("malformed linear program");

  // Columns: originals, one slack or surplus per inequality, one artificial
  // per row that lacks a natural basic column.
  std::vector<std::vector<Rational>> rows = problem.a;
  std::vector<Rational> b = problem.b;
  std::vector<Relation> rel = problem.relation;
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) {
      for (auto& v : rows[i]) v = -v;
      b[i] = -b[i];
      if (rel[i] == Relation::LessEqual) rel[i] = Relation::GreaterEqual;
      else if (rel[i] == Relation::GreaterEqual) rel[i] = Relation::LessEqual;
    }
  }
  std::size_t slack_count = 0, art_count = 0;
  for (auto r : rel) {
    if (r != Relation::Equal) ++slack_count;
    if (r != Relation::LessEqual) ++art_count;
  }
  Tableau tab;
  tab.cols = n + slack_count + art_count;
  tab.t.assign(m, std::vector<Rational>(tab.cols));
  tab.rhs = b;
  tab.basis.assign(m, 0);
  std::vector<char> artificial(tab.cols, 0);
  std::size_t s = n, a = n + slack_count;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = rows[i][j];
    if (rel[i] == Relation::LessEqual) {
      tab.t[i][s] = 1;
      tab.basis[i] = s++;
    } else {
      if (rel[i] == Relation::GreaterEqual) tab.t[i][s++] = -1;
      tab.t[i][a] = 1;
      artificial[a] = 1;
      tab.basis[i] = a++;
    }
  }

  std::vector<char> all(tab.cols, 1);
  if (art_count) {
    std::vector<Rational> phase1(tab.cols);
    for (std::size_t j = 0; j < tab.cols; ++j)
      if (artificial[j]) phase1[j] = -1;
    tab.optimize(phase1, all);
    if (tab.value(phase1) < 0) return {Status::Infeasible, 0, {}};
    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t r = 0; r < tab.t.size();) {
      if (!artificial[tab.basis[r]]) {
        ++r;
        continue;
      }
      std::size_t c = 0;
      while (c < tab.cols && (artificial[c] || tab.t[r][c] == 0)) ++c;
      if (c < tab.cols) {
        tab.pivot(r, c);
        ++r;
      } else {
        tab.t.erase(tab.t.begin() + long(r));
        tab.rhs.erase(tab.rhs.begin() + long(r));
        tab.basis.erase(tab.basis.begin() + long(r));
      }
    }
  }
  std::vector<char> allowed(tab.cols, 1);
  for (std::size_t j = 0; j < tab.cols; ++j)
    if (artificial[j]) allowed[j] = 0;
  std::vector<Rational> cost(tab.cols);
  for (std::size_t j = 0; j < n; ++j) cost[j] = problem.objective[j];
  if (!tab.optimize(cost, allowed)) return {Status::Unbounded, 0, {}};
  Solution sol;
  sol.status = Status::Optimal;
  sol.value = tab.value(cost);
  sol.x.assign(n, 0);
  for (std::size_t r = 0; r < tab.t.size(); ++r)
    if (tab.basis[r] < n) sol.x[tab.basis[r]] = tab.rhs[r];
  return sol;
}

}  // namespace mjsing::lp
