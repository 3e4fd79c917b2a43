#pragma once

#include <array>
#include <climits>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mjsing/number_field.hpp"
#include "mjsing/upoly.hpp"

namespace mjsing {

/// Largest number of ring variables; jet rings of the supported sizes stay
/// well below it and support sets fit in a 64-bit mask.
inline constexpr std::size_t kMaxVars = 48;

/// Order of a germ that vanishes identically (mult of the zero polynomial).
inline constexpr int kInfinity = INT_MAX;

/// Exponent vector of fixed capacity.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exps);
  static Monomial variable(std::size_t nvars, std::size_t i, unsigned e = 1);

  std::size_t size() const { return n_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return deg_; }
  std::uint64_t support() const;

  bool divides(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  /// Exact quotient; requires o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint32_t deg_ = 0;
  std::uint8_t n_ = 0;
};

/// Graded reverse lexicographic comparison: -1, 0, +1.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;

VarListPtr make_vars(VarList names);

/// Multivariate polynomial over Q on a named, ordered variable list.
/// Terms are kept in descending grevlex order with no zero coefficients;
/// that order is also the serialization order.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

  Polynomial() : vars_(make_vars({})) {}
  explicit Polynomial(VarListPtr vars) : vars_(std::move(vars)) {}

  static Polynomial constant(VarListPtr vars, const Rational& c);
  static Polynomial variable(VarListPtr vars, std::size_t i);
  static Polynomial term(VarListPtr vars, const Rational& c, const Monomial& m);

  const VarListPtr& vars_ptr() const { return vars_; }
  const VarList& vars() const { return *vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_homogeneous() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Highest total degree; -1 for zero.
  int total_degree() const;
  /// Lowest total degree; kInfinity for zero.
  int min_degree() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator+(Polynomial a, const Rational& c) {
    a.add_term(Monomial(a.nvars()), c);
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Rational& c) {
    a.add_term(Monomial(a.nvars()), -c);
    return a;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;
  /// Product truncated to total degree <= max_degree.
  static Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, int max_degree);

  Polynomial homogeneous_part(int d) const;
  /// Drops every term of total degree > max_degree.
  Polynomial truncate(int max_degree) const;
  Polynomial derivative(std::size_t i) const;

  /// f(images): x_i replaced by images[i]; all images share one variable
  /// list, which becomes the result's. With max_degree >= 0 intermediate
  /// products are truncated to that total degree.
  Polynomial substitute(std::span<const Polynomial> images, int max_degree = -1) const;
  /// Same polynomial over another list that contains all used variables
  /// (matched by name).
  Polynomial rename_into(const VarListPtr& target) const;

  Rational evaluate(std::span<const Rational> point) const;
  Scalar evaluate(std::span<const Scalar> point) const;

  /// Univariate polynomial in variable i; throws if other variables occur.
  UPoly to_univariate(std::size_t i) const;

  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& o) const;
  VarListPtr vars_;
  TermMap terms_;
};

bool same_vars(const VarListPtr& a, const VarListPtr& b);

/// The same polynomial with denominators cleared and content removed,
/// leading (grevlex) coefficient positive.
Polynomial primitive(const Polynomial& f);

}  // namespace mjsing
