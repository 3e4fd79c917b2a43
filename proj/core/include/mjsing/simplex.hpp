#pragma once

#include <vector>

#include "mjsing/upoly.hpp"

namespace mjsing::lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

/// maximize objective . x subject to rows (a . x REL b) and x >= 0.
struct Problem {
  std::vector<std::vector<Rational>> a;
  std::vector<Relation> relation;
  std::vector<Rational> b;
  std::vector<Rational> objective;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

/// Exact two-phase simplex with Bland's rule.
Solution maximize(const Problem& problem);

}  // namespace mjsing::lp
