#include "mjsing/newton.hpp"

#include <algorithm>

#include "mjsing/error.hpp"
#include "mjsing/simplex.hpp"

namespace mjsing {

NewtonPolygon::NewtonPolygon(std::size_t dimension, std::vector<std::vector<unsigned>> support)
    : dim_(dimension), support_(std::move(support)) {
  if (support_.empty()) throw Error("zero input");
  for (const auto& s : support_)
    if (s.size() != dim_) throw Error("dimension mismatch");
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
}

NewtonPolygon newton_polygon(const Polynomial& f) {
  if (f.is_zero()) throw Error("zero input");
  std::vector<std::vector<unsigned>> support;
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) e[i] = m[i];
    support.push_back(std::move(e));
  }
  return NewtonPolygon(f.nvars(), std::move(support));
}

bool contains_point(const NewtonPolygon& polygon, const std::vector<Rational>& p, bool strict) {
  const std::size_t n = polygon.dimension();
  if (p.size() != n) throw Error("dimension mismatch");
  const auto& s = polygon.support();
  const std::size_t k = s.size();
  // Variables: lambda_1..lambda_k, then epsilon when strict.
  const std::size_t vars = k + (strict ? 1 : 0);
  lp::Problem prob;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(vars);
    for (std::size_t j = 0; j < k; ++j) row[j] = s[j][i];
    if (strict) row[k] = 1;
    prob.a.push_back(std::move(row));
    prob.relation.push_back(lp::Relation::LessEqual);
    prob.b.push_back(p[i]);
  }
  std::vector<Rational> ones(vars, 1);
  if (strict) ones[k] = 0;
  prob.a.push_back(ones);
  prob.relation.push_back(lp::Relation::Equal);
  prob.b.push_back(1);
  prob.objective.assign(vars, 0);
  if (strict) {
    std::vector<Rational> cap(vars, 0);
    cap[k] = 1;
    prob.a.push_back(cap);
    prob.relation.push_back(lp::Relation::LessEqual);
    prob.b.push_back(1);
    prob.objective[k] = 1;
  }
  lp::Solution sol = lp::maximize(prob);
  if (sol.status != lp::Status::Optimal) return false;
  return !strict || sol.value > 0;
}

std::string_view to_string(NewtonCertificate c) {
  switch (c) {
    case NewtonCertificate::NotLc: return "NOT_LC";
    case NewtonCertificate::NotCanonical: return "NOT_CANONICAL";
    case NewtonCertificate::NoCertificate: return "NO_CERTIFICATE";
  }
  return "?";
}

NewtonCertificate newton_nonlc_certificate(const Polynomial& f) {
  if (f.is_zero()) throw Error("zero input");
  if (f.constant_term() != 0) throw Error("nonzero constant term");
  NewtonPolygon poly = newton_polygon(f);
  std::vector<Rational> one(f.nvars(), 1);
  if (!contains_point(poly, one, false)) return NewtonCertificate::NotLc;
  if (!contains_point(poly, one, true)) return NewtonCertificate::NotCanonical;
  return NewtonCertificate::NoCertificate;
}

}  // namespace mjsing
