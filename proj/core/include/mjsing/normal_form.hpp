#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mjsing/poly_ops.hpp"

namespace mjsing {

/// Result of completing squares in a double point f, valid modulo terms of
/// total degree > order.
struct SplitResult {
  int tau = 0;
  int order = 0;
  /// Pivot variables (original indices) and the coefficients a_i of a_i x_i^2.
  std::vector<std::size_t> square_variables;
  std::vector<Rational> square_coefficients;
  /// The residual, over the non-pivot variables in their original order.
  Polynomial residual;
  /// Images of the original variables in the new coordinates. f(substitution)
  /// has quadratic part sum a_i x_i^2, no terms linear in the x_i, and equals
  /// the residual on x_i = 0, modulo degree order+1.
  std::vector<Polynomial> substitution;
  /// sum a_i x_i^2 + residual over the full variable list; right equivalent
  /// to f modulo degree order+1.
  Polynomial normal_form;
};

/// Splits squares off a germ of multiplicity 2. Requires order >= 8.
SplitResult split_off_squares(const Polynomial& f, int order);

/// A z-order known exactly, or only bounded below.
struct OrderValue {
  int value = 0;
  bool at_least = false;
  std::string to_string() const;
};

struct ESeries {
  OrderValue alpha;
  OrderValue beta;
};

/// For a binary germ whose cubic part is a perfect cube l^3: the z-orders of
/// the y-coefficient and the constant coefficient of its depressed
/// Weierstrass cubic in the coordinates where l = y. Requires order >= 12.
ESeries e_series_invariants(const Polynomial& g, int order);

/// Everything read off a double point on the way to its ADE type.
struct DoublePointData {
  SplitResult split;
  /// Multiplicity of the residual (tau == 1 only); kInfinity if it vanishes
  /// to the working order.
  int m2 = kInfinity;
  std::optional<int> tau2;
  std::vector<PatternEntry> pattern;  // of the leading form of the residual
  std::optional<ESeries> e_series;
};

DoublePointData analyze_double_point(const Polynomial& f, int order);

struct AdeResult {
  /// "A4", "D5", "E6", ... or "NONE".
  std::string label = "NONE";
  /// Set when the label is NONE only because the working order ran out.
  bool undetermined = false;
  std::string reason;

  bool is_ade() const { return label != "NONE"; }
};

AdeResult ade_recognize(const Polynomial& f, int order);
AdeResult ade_from_data(const Polynomial& f, const DoublePointData& data);

}  // namespace mjsing
