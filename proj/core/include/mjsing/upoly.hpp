#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mjsing {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over Q. Coefficients are stored from the
/// constant term upwards; the top coefficient is never zero, so the zero
/// polynomial has no coefficients at all.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(std::initializer_list<long> coeffs);

  static UPoly constant(const Rational& c);
  static UPoly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  /// Degree of the polynomial; -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rational& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  Rational eval(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// Primitive integer multiple with positive leading coefficient.
  UPoly primitive() const;
  /// Integer coefficients of primitive(), for the integer-only algorithms.
  std::vector<Integer> integer_coeffs() const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Euclidean division; throws on a zero divisor.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly operator%(const UPoly& a, const UPoly& b);
/// Monic gcd (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  UPoly g, s, t;
};
ExtendedGcd extended_gcd(const UPoly& a, const UPoly& b);

/// Yun's square-free decomposition of a nonzero polynomial: pairs
/// (s_i, i) with s_i monic square-free, pairwise coprime and
/// p = lc(p) * prod s_i^i. Factors equal to 1 are omitted.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);
UPoly squarefree_part(const UPoly& p);

}  // namespace mjsing
