#pragma once

#include <memory>
#include <string>
#include <utility>

#include "mjsing/upoly.hpp"

namespace mjsing {

/// A simple extension Q[z]/(m(z)) with m monic and irreducible over Q.
/// Irreducibility is verified on construction.
class ExtField {
 public:
  static std::shared_ptr<const ExtField> create(const UPoly& minimal_polynomial,
                                                std::string symbol = "a");

  const UPoly& minimal_polynomial() const { return minpoly_; }
  const std::string& symbol() const { return symbol_; }
  int degree() const { return minpoly_.degree(); }

 private:
  ExtField(UPoly m, std::string s) : minpoly_(std::move(m)), symbol_(std::move(s)) {}
  UPoly minpoly_;
  std::string symbol_;
};

using FieldPtr = std::shared_ptr<const ExtField>;

/// Element of Q or of one ExtField. Rational scalars mix freely with any
/// field; two scalars from different fields never mix.
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Rational& r) : residue_(UPoly::constant(r)) {}  // NOLINT: implicit by design of Q ⊂ Q(a)
  Scalar(long v) : Scalar(Rational(v)) {}                     // NOLINT
  /// Residue class of r modulo the field's minimal polynomial.
  Scalar(FieldPtr field, const UPoly& r);

  static Scalar generator(const FieldPtr& field);

  bool is_zero() const { return residue_.is_zero(); }
  bool is_rational() const { return residue_.degree() <= 0; }
  /// The rational value; throws if the scalar is irrational.
  Rational rational() const;
  const FieldPtr& field() const { return field_; }
  const UPoly& residue() const { return residue_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar inverse() const;
  std::string to_string() const;

 private:
  void adopt_field(const Scalar& o);
  FieldPtr field_;
  UPoly residue_;
};

/// Adjoins a root of an irreducible p (degree >= 2): returns Q(a) and a.
/// Throws "not irreducible" on reducible input.
std::pair<FieldPtr, Scalar> ext_root(const UPoly& p, std::string symbol = "a");

/// s^{-1}; throws "division by zero".
inline Scalar scalar_inverse(const Scalar& s) { return s.inverse(); }

/// p(s) for a rational univariate p.
Scalar evaluate(const UPoly& p, const Scalar& s);

}  // namespace mjsing
