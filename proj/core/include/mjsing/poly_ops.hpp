#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mjsing/linalg.hpp"
#include "mjsing/polynomial.hpp"

namespace mjsing {

/// A polynomial all of whose terms share one total degree. The zero
/// polynomial is accepted and has degree -1.
class HomogeneousForm {
 public:
  explicit HomogeneousForm(Polynomial p);
  const Polynomial& poly() const { return p_; }
  int degree() const { return p_.total_degree(); }

 private:
  Polynomial p_;
};

/// Lowest total degree of a term; kInfinity for zero.
int mult_at_origin(const Polynomial& f);

/// Sum of the lowest-degree terms; throws "zero input".
HomogeneousForm initial_form(const Polynomial& f);

/// f(M x), i.e. x_i -> sum_j M[i][j] x_j. Throws "non-invertible change".
Polynomial linear_change(const Polynomial& f, const Matrix<Rational>& m);

/// Invertible integer matrix with entries in [-bound, bound], drawn from a
/// generator seeded with `seed`.
Matrix<Rational> random_invertible_matrix(std::size_t n, std::uint64_t seed, int bound = 3);

/// Matrix of first partials at the origin: one row per generator.
Matrix<Rational> linear_parts(const std::vector<Polynomial>& gens);
int jacobian_rank_at_origin(const std::vector<Polynomial>& gens);

/// Pattern entry: an irreducible factor over the algebraic closure (always of
/// degree 1 for binary forms) and its multiplicity.
struct PatternEntry {
  int multiplicity;
  int degree;
  friend bool operator==(const PatternEntry&, const PatternEntry&) = default;
};

/// Factorization pattern of a binary form over the algebraic closure,
/// sorted by decreasing multiplicity.
std::vector<PatternEntry> binary_multiplicity_pattern(const HomogeneousForm& g);

struct CubeTest {
  bool is_cube = false;
  /// l with g = c * l^3; primitive, positive leading coefficient.
  std::optional<Polynomial> linear;
};

CubeTest is_perfect_cube_of_linear(const HomogeneousForm& g);

}  // namespace mjsing
