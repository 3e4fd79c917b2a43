#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mjsing/groebner.hpp"

namespace mjsing {

/// Jet-scheme equations of one polynomial up to a level.
struct JetSystem {
  int level = 0;
  bool fiber = false;
  VarListPtr base_vars;
  /// x_i^(j) is named base_j; level-major order, starting at level 1 in
  /// fiber mode and 0 otherwise.
  VarListPtr jet_vars;
  /// equations[j] = F^(j), j = 0..level (identically zero below the
  /// multiplicity in fiber mode).
  std::vector<Polynomial> equations;
};

VarListPtr jet_variables(const VarList& base, int level, bool fiber);

/// Coefficients of t^0..t^m in f(sum_j x^(j) t^j); fiber mode sets x^(0) = 0.
JetSystem jet_equations(const Polynomial& f, int m, bool fiber);

/// Dimension of the level-m jets of V(I) lying over the origin.
int jet_fiber_dim(const IdealPresentation& ideal, int m);

struct MldTerm {
  int m = 0;  // level of the a-part (equals n in plain mode)
  int n = 0;
  int fiber_dim = 0;
  Rational value;
};

struct MldBound {
  enum class Mode { Plain, Mixed };
  Mode mode = Mode::Plain;
  bool minus_infinity = false;
  /// Minimum of the computed terms (meaningful when !minus_infinity).
  Rational value;
  /// Level pair attaining the minimum, or the first negative term.
  int witness_m = 0;
  int witness_n = 0;
  std::vector<MldTerm> terms;
};

/// min over 1 <= n <= max_level of (n+1)d - jet_fiber_dim(I, n).
/// Throws "inconsistent dimension" unless d = ideal_dimension(I).
MldBound mld_upper_bound(const IdealPresentation& ideal, int d, int max_level);

/// The mixed bound (M+1)N - (m+1)t - (n+1)c - dim over 1 <= m <= max_m,
/// 1 <= n <= max_n with M = max(m, n). A unit ideal a drops the a-part.
MldBound mld_mixed_upper_bound(const IdealPresentation& ideal_x, int c, const IdealPresentation& a,
                               const Rational& t, int max_m, int max_n);

}  // namespace mjsing
