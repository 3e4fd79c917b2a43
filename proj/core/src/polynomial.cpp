#include "mjsing/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "mjsing/error.hpp"

namespace mjsing {

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVars) throw Error("too many variables");
  n_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
  std::size_t i = 0;
  for (unsigned e : exps) set(i++, e);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, unsigned e) {
  Monomial m(nvars);
  m.set(i, e);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 0xFFFF) throw Error("exponent too large");
  deg_ = deg_ - e_[i] + e;
  e_[i] = static_cast<std::uint16_t>(e);
}

std::uint64_t Monomial::support() const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i]) s |= std::uint64_t{1} << i;
  return s;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& o) const { return (support() & o.support()) == 0; }

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    unsigned e = unsigned(e_[i]) + o.e_[i];
    if (e > 0xFFFF) throw Error("exponent too large");
    r.e_[i] = static_cast<std::uint16_t>(e);
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
  r.deg_ = deg_ - o.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.set(i, std::max(e_[i], o.e_[i]));
  return r;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

VarListPtr make_vars(VarList names) {
  if (names.size() > kMaxVars) throw Error("too many variables");
  return std::make_shared<const VarList>(std::move(names));
}

bool same_vars(const VarListPtr& a, const VarListPtr& b) { return a == b || *a == *b; }

Polynomial Polynomial::constant(VarListPtr vars, const Rational& c) {
  Polynomial p(vars);
  p.add_term(Monomial(p.nvars()), c);
  return p;
}

Polynomial Polynomial::variable(VarListPtr vars, std::size_t i) {
  Polynomial p(vars);
  if (i >= p.nvars()) throw Error("variable index out of range");
  p.add_term(Monomial::variable(p.nvars(), i), 1);
  return p;
}

Polynomial Polynomial::term(VarListPtr vars, const Rational& c, const Monomial& m) {
  Polynomial p(vars);
  p.add_term(m, c);
  return p;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (!same_vars(vars_, o.vars_)) throw Error("variable lists differ");
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars())); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

int Polynomial::min_degree() const {
  return terms_.empty() ? kInfinity : static_cast<int>(terms_.rbegin()->first.degree());
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars()) throw Error("monomial size does not match variable count");
  if (c == 0) return;
  auto it = terms_.lower_bound(m);
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.emplace_hint(it, m, c);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Polynomial Polynomial::mul_truncated(const Polynomial& a, const Polynomial& b, int max_degree) {
  a.check_compatible(b);
  Polynomial r(a.vars_);
  Rational product;
  for (const auto& [ma, ca] : a.terms_) {
    if (max_degree >= 0 && int(ma.degree()) > max_degree) continue;
    for (const auto& [mb, cb] : b.terms_) {
      if (max_degree >= 0 && int(ma.degree() + mb.degree()) > max_degree) continue;
      Monomial m = ma * mb;
      mpq_mul(product.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto it = r.terms_.lower_bound(m);
      if (it != r.terms_.end() && it->first == m) it->second += product;
      else r.terms_.emplace_hint(it, m, product);
    }
  }
  std::erase_if(r.terms_, [](const auto& t) { return t.second == 0; });
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return Polynomial::mul_truncated(a, b, -1);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_vars(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::homogeneous_part(int d) const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_)
    if (int(m.degree()) == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Polynomial Polynomial::truncate(int max_degree) const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_)
    if (int(m.degree()) <= max_degree) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial d = m;
    d.set(i, m[i] - 1);
    r.add_term(d, c * m[i]);
  }
  return r;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images, int max_degree) const {
  if (images.size() != nvars()) throw Error("substitution needs one image per variable");
  VarListPtr target = images.empty() ? make_vars({}) : images.front().vars_ptr();
  for (const auto& im : images)
    if (!same_vars(im.vars_ptr(), target)) throw Error("variable lists differ");
  // powers[i][e] = images[i]^e, built on demand.
  std::vector<std::vector<Polynomial>> powers(nvars());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(constant(target, 1));
    while (pw.size() <= e) pw.push_back(mul_truncated(pw.back(), images[i], max_degree));
    return pw[e];
  };
  // Variables mapped to themselves only shift exponents.
  std::vector<char> fixed(nvars(), 0);
  if (same_vars(vars_, target))
    for (std::size_t i = 0; i < nvars(); ++i)
      fixed[i] = images[i].size() == 1 && images[i].terms_.begin()->first == Monomial::variable(nvars(), i) &&
                 images[i].terms_.begin()->second == 1;
  Polynomial result(target);
  for (const auto& [m, c] : terms_) {
    Monomial shift(target->size());
    for (std::size_t i = 0; i < nvars(); ++i)
      if (fixed[i]) shift.set(i, m[i]);
    if (max_degree >= 0 && int(shift.degree()) > max_degree) continue;
    Polynomial t = constant(target, c);
    for (std::size_t i = 0; i < nvars() && !t.is_zero(); ++i)
      if (m[i] && !fixed[i]) t = mul_truncated(t, power(i, m[i]), max_degree - (max_degree >= 0 ? int(shift.degree()) : 0));
    for (const auto& [tm, tc] : t.terms_) result.add_term(tm * shift, tc);
  }
  return result;
}

Polynomial Polynomial::rename_into(const VarListPtr& target) const {
  std::vector<std::size_t> where(nvars(), SIZE_MAX);
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
    if (it != target->end()) where[i] = std::size_t(it - target->begin());
  }
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Monomial t(target->size());
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (!m[i]) continue;
      if (where[i] == SIZE_MAX) throw Error("variable '" + (*vars_)[i] + "' missing from target");
      t.set(where[i], m[i]);
    }
    r.add_term(t, c);
  }
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw Error("point dimension does not match variable count");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != nvars()) throw Error("point dimension does not match variable count");
  Scalar sum;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < nvars(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

UPoly Polynomial::to_univariate(std::size_t i) const {
  std::vector<Rational> c;
  for (const auto& [m, v] : terms_) {
    if (m.degree() != m[i]) throw Error("polynomial is not univariate");
    if (c.size() <= m[i]) c.resize(m[i] + 1);
    c[m[i]] = v;
  }
  return UPoly(std::move(c));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool one = a == 1 && m.degree() > 0;
    if (!one) {
      if (a.get_den() != 1 && m.degree() > 0) os << "(" << a.get_str() << ")";
      else os << a.get_str();
    }
    bool need_star = !one;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (!m[i]) continue;
      if (need_star) os << "*";
      os << (*vars_)[i];
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial primitive(const Polynomial& f) {
  if (f.is_zero()) return f;
  Integer den = 1, num = 0;
  for (const auto& [m, c] : f.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational s(den, num);
  s.canonicalize();
  if (f.terms().begin()->second < 0) s = -s;
  return f * s;
}

}  // namespace mjsing
