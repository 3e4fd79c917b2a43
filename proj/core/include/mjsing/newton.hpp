#pragma once

#include <string_view>
#include <vector>

#include "mjsing/polynomial.hpp"

namespace mjsing {

/// Convex hull of the support translated by the positive orthant.
class NewtonPolygon {
 public:
  NewtonPolygon(std::size_t dimension, std::vector<std::vector<unsigned>> support);
  std::size_t dimension() const { return dim_; }
  const std::vector<std::vector<unsigned>>& support() const { return support_; }

 private:
  std::size_t dim_;
  std::vector<std::vector<unsigned>> support_;
};

NewtonPolygon newton_polygon(const Polynomial& f);

/// Membership of p in the polygon, or in its interior when strict.
bool contains_point(const NewtonPolygon& polygon, const std::vector<Rational>& p, bool strict);

enum class NewtonCertificate { NotLc, NotCanonical, NoCertificate };
std::string_view to_string(NewtonCertificate c);

/// Whether the point (1, ..., 1) certifies failure of (log) canonicity.
NewtonCertificate newton_nonlc_certificate(const Polynomial& f);

}  // namespace mjsing
