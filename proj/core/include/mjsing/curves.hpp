#pragma once

#include <string>
#include <vector>

#include "mjsing/groebner.hpp"
#include "mjsing/poly_ops.hpp"

namespace mjsing {

struct NodalVerdict {
  bool reduced = false;
  bool singular_locus_finite = false;
  bool all_nodes = false;
  /// Set when point extraction ran out of budget; the booleans are then
  /// not a verdict.
  bool inconclusive = false;
  std::vector<std::string> witnesses;

  bool pass() const { return !inconclusive && reduced && singular_locus_finite && all_nodes; }
};

/// A closed point of projective space. One representative is kept per
/// Galois orbit; `conjugates` is the orbit size (the degree of its field).
struct ProjectivePoint {
  std::vector<Scalar> coords;  // last nonzero coordinate equals 1
  FieldPtr field;
  int conjugates = 1;

  std::string to_string() const;
};

/// Point-free test that the plane curve V(F) is reduced with only ordinary nodes.
NodalVerdict plane_curve_nodal(const HomogeneousForm& f);

/// All points of a zero-dimensional projective scheme, each with
/// coordinates in Q or in one simple extension. Throws on a
/// positive-dimensional input and "extension too deep" when no coordinate
/// change brings the radical into shape position.
std::vector<ProjectivePoint> singular_points(const IdealPresentation& ideal);

/// Reduced curve in P^3 with at worst ordinary nodes, tested point by point:
/// at each singular point the Jacobian has rank 1 and the second-order parts
/// on the smooth surface through the point span one nondegenerate binary
/// quadratic form.
NodalVerdict space_curve_nodal(const IdealPresentation& ideal);

NodalVerdict ci_space_curve_nodal(const HomogeneousForm& q1, const HomogeneousForm& q2);

/// Ideal of the 2x2 minors of a polynomial matrix.
std::vector<Polynomial> two_by_two_minors(const std::vector<std::vector<Polynomial>>& m);

}  // namespace mjsing
