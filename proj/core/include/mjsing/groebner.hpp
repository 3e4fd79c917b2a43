#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mjsing/polynomial.hpp"

namespace mjsing {

/// Ideal given by generators over one variable list. Zero generators are
/// dropped on construction.
class IdealPresentation {
 public:
  IdealPresentation() : vars_(make_vars({})) {}
  IdealPresentation(VarListPtr vars, std::vector<Polynomial> generators);

  const VarListPtr& vars_ptr() const { return vars_; }
  const VarList& vars() const { return *vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_homogeneous() const;

 private:
  VarListPtr vars_;
  std::vector<Polynomial> gens_;
};

class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Weighted };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, {}); }
  /// Lexicographic with x_0 > x_1 > ... .
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }
  /// Compare by each weight row in turn, then grevlex.
  static MonomialOrder weighted(std::vector<std::vector<int>> rows) {
    return MonomialOrder(Kind::Weighted, std::move(rows));
  }

  Kind kind() const { return kind_; }
  const std::vector<std::vector<int>>& weights() const { return rows_; }
  int compare(const Monomial& a, const Monomial& b) const;
  std::string name() const;

 private:
  MonomialOrder(Kind k, std::vector<std::vector<int>> rows) : kind_(k), rows_(std::move(rows)) {}
  Kind kind_;
  std::vector<std::vector<int>> rows_;
};

/// Reduced Gröbner basis: primitive integer polynomials with positive
/// leading coefficient, sorted by increasing leading monomial.
struct GroebnerBasis {
  VarListPtr vars;
  MonomialOrder order = MonomialOrder::grevlex();
  std::vector<Polynomial> basis;
  std::vector<Monomial> leading;

  bool is_unit() const;
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
};

/// Leading monomial of f under the order; f must be nonzero.
Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order);

/// Budget for S-pair reductions in one Buchberger run; 0 means unlimited.
/// Initialized from MJ_SINGULAR_MAX_GB_STEPS; exceeding it raises
/// ResourceLimit.
void set_groebner_step_limit(std::uint64_t steps);
std::uint64_t groebner_step_limit();

GroebnerBasis groebner_basis(const IdealPresentation& ideal,
                             const MonomialOrder& order = MonomialOrder::grevlex());

/// Krull dimension value reported for the empty scheme (1 in I).
inline constexpr int kEmptyDimension = -1;

/// Krull dimension of V(I) from the leading ideal under grevlex;
/// kEmptyDimension iff 1 in I.
int ideal_dimension(const IdealPresentation& ideal);
int dimension_from_leading(const std::vector<Monomial>& leading, std::size_t nvars);

/// True iff the affine cone V(I) is at most the origin. Throws on a
/// non-homogeneous generator.
bool projective_is_empty(const IdealPresentation& ideal);

/// Whether the germ passes through the origin: every generator vanishes there.
bool vanishes_at_origin(const IdealPresentation& ideal);

/// Local standard basis at the origin, via homogenization. `basis` holds the
/// dehomogenized elements, `local_leading` their leading monomials in the
/// local degree order (lowest degree first, grevlex ties).
struct LocalBasis {
  std::vector<Polynomial> basis;
  std::vector<Monomial> local_leading;
};
LocalBasis local_standard_basis(const IdealPresentation& ideal);

/// The ideal of initial forms of all elements of I. Throws "germ not at origin".
IdealPresentation tangent_cone(const IdealPresentation& ideal);

/// Dimension of the germ of V(I) at the origin; kEmptyDimension when some
/// generator is a unit there.
int local_dimension(const IdealPresentation& ideal);

/// Milnor number of f at the origin: the colength of the Jacobian ideal in
/// the local ring. 0 at a smooth point; kInfinity when not isolated.
int milnor_number(const Polynomial& f);

/// Number of monomials outside the monomial ideal; kInfinity if infinite.
int count_standard_monomials(const std::vector<Monomial>& leading, std::size_t nvars);

/// Minimal polynomial of variable i in Q[x]/I for zero-dimensional I.
UPoly variable_minimal_polynomial(const GroebnerBasis& gb, std::size_t i);

}  // namespace mjsing
