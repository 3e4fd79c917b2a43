#include "mjsing/number_field.hpp"

#include "mjsing/error.hpp"
#include "mjsing/factor.hpp"

namespace mjsing {

FieldPtr ExtField::create(const UPoly& minimal_polynomial, std::string symbol) {
  if (minimal_polynomial.degree() < 1) throw Error("not irreducible");
  if (!is_irreducible(minimal_polynomial)) throw Error("not irreducible");
  return FieldPtr(new ExtField(minimal_polynomial.monic(), std::move(symbol)));
}

Scalar::Scalar(FieldPtr field, const UPoly& r) : field_(std::move(field)) {
  residue_ = field_ ? r % field_->minimal_polynomial() : r;
  if (residue_.degree() > 0 && !field_) throw Error("irrational residue without a field");
  if (residue_.degree() <= 0) field_.reset();
}

Scalar Scalar::generator(const FieldPtr& field) { return Scalar(field, UPoly{0, 1}); }

Rational Scalar::rational() const {
  if (!is_rational()) throw Error("scalar is not rational");
  return residue_.coeff(0);
}

void Scalar::adopt_field(const Scalar& o) {
  if (!o.field_) return;
  if (!field_) {
    field_ = o.field_;
    return;
  }
  if (field_ != o.field_ &&
      !(field_->minimal_polynomial() == o.field_->minimal_polynomial()))
    throw Error("scalars from different extension fields");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.residue_ = -r.residue_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  adopt_field(o);
  residue_ += o.residue_;
  if (residue_.degree() <= 0) field_.reset();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  adopt_field(o);
  residue_ -= o.residue_;
  if (residue_.degree() <= 0) field_.reset();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  adopt_field(o);
  residue_ *= o.residue_;
  if (field_) residue_ = residue_ % field_->minimal_polynomial();
  if (residue_.degree() <= 0) field_.reset();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return a.residue_ == b.residue_;
  Scalar d = a - b;
  return d.is_zero();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (is_rational()) return Scalar(Rational(1) / residue_.coeff(0));
  // s * residue + t * m = 1, so residue^{-1} = s mod m.
  auto eg = extended_gcd(residue_, field_->minimal_polynomial());
  if (eg.g.degree() != 0) throw Error("division by zero");
  return Scalar(field_, eg.s);
}

std::string Scalar::to_string() const {
  if (is_rational()) return residue_.coeff(0).get_str();
  return "(" + residue_.to_string(field_->symbol()) + ")";
}

std::pair<FieldPtr, Scalar> ext_root(const UPoly& p, std::string symbol) {
  auto field = ExtField::create(p, std::move(symbol));
  if (field->degree() == 1) {
    // The root is rational: -c0 for the monic linear polynomial.
    return {field, Scalar(-field->minimal_polynomial().coeff(0))};
  }
  return {field, Scalar::generator(field)};
}

Scalar evaluate(const UPoly& p, const Scalar& s) {
  Scalar acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * s + Scalar(p.coeff(i));
  return acc;
}

}  // namespace mjsing
