#include "mjsing/curves.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "mjsing/error.hpp"
#include "mjsing/factor.hpp"
#include "mjsing/linalg.hpp"

namespace mjsing {

std::string ProjectivePoint::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords.size(); ++i) os << (i ? " : " : "") << coords[i].to_string();
  os << ")";
  if (field) os << " over Q[" << field->symbol() << "]/(" << field->minimal_polynomial().to_string(field->symbol()) << ")";
  return os.str();
}

std::vector<Polynomial> two_by_two_minors(const std::vector<std::vector<Polynomial>>& m) {
  std::vector<Polynomial> out;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t r1 = 0; r1 < rows; ++r1)
    for (std::size_t r2 = r1 + 1; r2 < rows; ++r2)
      for (std::size_t c1 = 0; c1 < cols; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < cols; ++c2) {
          Polynomial d = m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
          if (!d.is_zero()) out.push_back(std::move(d));
        }
  return out;
}

namespace {

std::vector<std::vector<Polynomial>> jacobian(const std::vector<Polynomial>& gens) {
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (std::size_t i = 0; i < g.nvars(); ++i) row.push_back(g.derivative(i));
    jac.push_back(std::move(row));
  }
  return jac;
}

std::vector<Polynomial> gradient(const Polynomial& f) {
  std::vector<Polynomial> g;
  for (std::size_t i = 0; i < f.nvars(); ++i) g.push_back(f.derivative(i));
  return g;
}

Polynomial from_univariate(const UPoly& p, const VarListPtr& vars, std::size_t i) {
  Polynomial out(vars);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    out.add_term(Monomial::variable(vars->size(), i, unsigned(k)), p.coeffs()[k]);
  return out;
}

struct AffinePoint {
  std::vector<Scalar> coords;
  FieldPtr field;
  int conjugates = 1;
};

Matrix<Rational> random_change(std::size_t m, unsigned attempt) {
  Matrix<Rational> a(m, std::vector<Rational>(m, 0));
  if (attempt < m) {
    // Plain coordinates first, then each variable moved to the last slot.
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    if (attempt > 0) std::swap(perm[attempt - 1], perm[m - 1]);
    for (std::size_t i = 0; i < m; ++i) a[i][perm[i]] = 1;
    return a;
  }
  std::mt19937 rng(0x5eedu + attempt);
  std::uniform_int_distribution<int> dist(-3, 3);
  do {
    for (auto& row : a)
      for (auto& v : row) v = dist(rng);
  } while (determinant(a) == 0);
  return a;
}

// Points of a zero-dimensional affine ideal J.
std::vector<AffinePoint> solve_affine(const IdealPresentation& j) {
  const std::size_t m = j.nvars();
  GroebnerBasis gb = groebner_basis(j);
  if (!j.generators().empty() && gb.is_unit()) return {};
  if (m == 0) return {AffinePoint{}};
  if (j.generators().empty() || count_standard_monomials(gb.leading, m) == kInfinity)
    throw Error("positive-dimensional input");

  // Radical by adjoining square-free parts of each coordinate's eliminant.
  std::vector<Polynomial> rad = gb.basis;
  for (std::size_t i = 0; i < m; ++i)
    rad.push_back(from_univariate(squarefree_part(variable_minimal_polynomial(gb, i)), j.vars_ptr(), i));

  const unsigned kAttempts = unsigned(m) + 12;
  for (unsigned attempt = 0; attempt < kAttempts; ++attempt) {
    Matrix<Rational> change = random_change(m, attempt);
    std::vector<Polynomial> changed;
    for (const auto& g : rad) changed.push_back(linear_change(g, change));
    GroebnerBasis lex = groebner_basis(IdealPresentation(j.vars_ptr(), changed), MonomialOrder::lex());
    if (lex.basis.size() != m) continue;
    const std::size_t last = m - 1;
    const Polynomial* eliminant = nullptr;
    std::vector<const Polynomial*> coordinate(m, nullptr);
    bool shape = true;
    for (std::size_t k = 0; k < m && shape; ++k) {
      const Monomial& lm = lex.leading[k];
      const Polynomial& g = lex.basis[k];
      if (lm.degree() == lm[last]) {
        eliminant = &g;
        continue;
      }
      std::size_t var = 0;
      while (var < m && lm[var] == 0) ++var;
      if (lm.degree() != 1 || var >= last) {
        shape = false;
        break;
      }
      for (const auto& [mono, c] : g.terms())
        if (!(mono == lm) && mono.degree() != mono[last]) shape = false;
      coordinate[var] = &g;
    }
    if (!shape || !eliminant) continue;

    std::vector<AffinePoint> out;
    for (const auto& factor : univariate_factor(eliminant->to_univariate(last))) {
      AffinePoint p;
      Scalar alpha;
      if (factor.poly.degree() == 1) {
        alpha = Rational(-factor.poly.coeff(0) / factor.poly.coeff(1));
      } else {
        auto [field, root] = ext_root(factor.poly);
        p.field = field;
        p.conjugates = field->degree();
        alpha = root;
      }
      std::vector<Scalar> y(m);
      y[last] = alpha;
      for (std::size_t i = 0; i < last; ++i) {
        const Polynomial& g = *coordinate[i];
        Monomial lm = Monomial::variable(m, i);
        Rational c = g.coefficient(lm);
        Polynomial rest = g - Polynomial::term(g.vars_ptr(), c, lm);
        y[i] = -evaluate(rest.to_univariate(last), alpha) / Scalar(c);
      }
      p.coords.assign(m, Scalar(0));
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c)
          if (change[r][c] != 0) p.coords[r] += Scalar(change[r][c]) * y[c];
      out.push_back(std::move(p));
    }
    return out;
  }
  throw Error("extension too deep");
}

}  // namespace

std::vector<ProjectivePoint> singular_points(const IdealPresentation& ideal) {
  if (!ideal.is_homogeneous()) throw Error("non-homogeneous generator");
  int dim = ideal_dimension(ideal);
  if (dim > 1) throw Error("positive-dimensional input");
  std::vector<ProjectivePoint> points;
  if (dim <= 0) return points;
  const std::size_t n = ideal.nvars();
  // Points whose last nonzero coordinate is x_k, found in the chart x_k = 1
  // with x_j = 0 for j > k.
  for (std::size_t k = 0; k < n; ++k) {
    VarList names(ideal.vars().begin(), ideal.vars().begin() + long(k));
    VarListPtr chart = make_vars(names);
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < n; ++i) {
      if (i < k) images.push_back(Polynomial::variable(chart, i));
      else images.push_back(Polynomial::constant(chart, i == k ? 1 : 0));
    }
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators()) gens.push_back(g.substitute(images));
    for (auto& a : solve_affine(IdealPresentation(chart, gens))) {
      ProjectivePoint p;
      p.coords = std::move(a.coords);
      p.coords.push_back(Scalar(1));
      p.coords.resize(n, Scalar(0));
      p.field = a.field;
      p.conjugates = a.conjugates;
      points.push_back(std::move(p));
    }
  }
  return points;
}

NodalVerdict plane_curve_nodal(const HomogeneousForm& f) {
  const Polynomial& F = f.poly();
  if (F.nvars() != 3) throw Error("plane curve needs exactly 3 variables");
  if (F.is_zero() || F.total_degree() < 1) throw Error("zero input");
  NodalVerdict v;
  auto grad = gradient(F);
  IdealPresentation sigma(F.vars_ptr(), grad);
  int dim = ideal_dimension(sigma);
  v.reduced = v.singular_locus_finite = dim <= 1;
  if (!v.singular_locus_finite) {
    v.witnesses.push_back("singular locus of the curve has positive dimension");
    return v;
  }
  std::vector<std::vector<Polynomial>> hess;
  for (const auto& g : grad) hess.push_back(gradient(g));
  std::vector<Polynomial> gens = grad;
  for (auto& m : two_by_two_minors(hess)) gens.push_back(std::move(m));
  v.all_nodes = projective_is_empty(IdealPresentation(F.vars_ptr(), gens));
  if (!v.all_nodes) v.witnesses.push_back("a singular point has Hessian rank below 2");
  return v;
}

namespace {

// Whether the curve is an ordinary node at p; appends a reason if not.
bool node_at(const std::vector<Polynomial>& gens, const ProjectivePoint& p, std::string& reason) {
  const std::size_t n = p.coords.size();
  std::size_t chart = n;
  while (chart > 0 && p.coords[chart - 1].is_zero()) --chart;
  --chart;
  Matrix<Scalar> jac;
  for (const auto& g : gens) {
    std::vector<Scalar> row;
    for (std::size_t i = 0; i < n; ++i) row.push_back(g.derivative(i).evaluate(p.coords));
    jac.push_back(std::move(row));
  }
  std::size_t r = rank(jac);
  if (r == 0) {
    reason = "embedding dimension 3 at " + p.to_string();
    return false;
  }
  if (r >= 2) return true;
  std::size_t pivot = 0;
  while (std::all_of(jac[pivot].begin(), jac[pivot].end(), [](const Scalar& s) { return s.is_zero(); })) ++pivot;
  std::size_t lead = 0;
  while (jac[pivot][lead].is_zero()) ++lead;

  Matrix<Scalar> cut(2, std::vector<Scalar>(n, Scalar(0)));
  cut[0][chart] = 1;
  cut[1] = jac[pivot];
  auto plane = kernel(cut, n);

  auto hessian = [&](const Polynomial& g) {
    Matrix<Scalar> h(n, std::vector<Scalar>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) h[a][b] = g.derivative(a).derivative(b).evaluate(p.coords);
    return h;
  };
  auto restrict = [&](const Matrix<Scalar>& h) {
    std::vector<Scalar> q(3, Scalar(0));
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = a; b < 2; ++b) {
        Scalar s;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t k = 0; k < n; ++k) s += plane[a][i] * h[i][k] * plane[b][k];
        q[a + b] = s;
      }
    return q;
  };
  Matrix<Scalar> hp = hessian(gens[pivot]);
  Matrix<Scalar> forms;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (j == pivot) continue;
    Scalar lambda = jac[j][lead] / jac[pivot][lead];
    Matrix<Scalar> h = hessian(gens[j]);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) h[a][b] -= lambda * hp[a][b];
    forms.push_back(restrict(h));
  }
  std::size_t span = forms.empty() ? 0 : rank(forms);
  if (span == 0) {
    reason = "multiplicity at least 3 at " + p.to_string();
    return false;
  }
  if (span > 1) {
    reason = "non-planar singularity at " + p.to_string();
    return false;
  }
  for (const auto& q : forms) {
    if (std::all_of(q.begin(), q.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
    Scalar disc = q[1] * q[1] - q[0] * q[2];
    if (disc.is_zero()) {
      reason = "tangent lines coincide at " + p.to_string();
      return false;
    }
    return true;
  }
  return false;
}

}  // namespace

NodalVerdict space_curve_nodal(const IdealPresentation& ideal) {
  if (ideal.nvars() != 4) throw Error("space curve needs exactly 4 variables");
  if (!ideal.is_homogeneous()) throw Error("non-homogeneous generator");
  NodalVerdict v;
  int dim = ideal_dimension(ideal);
  if (dim != 2) {
    v.witnesses.push_back("affine cone has dimension " + std::to_string(dim) + ", not 2");
    return v;
  }
  std::vector<Polynomial> gens = ideal.generators();
  std::vector<Polynomial> sigma = gens;
  for (auto& m : two_by_two_minors(jacobian(gens))) sigma.push_back(std::move(m));
  IdealPresentation sing(ideal.vars_ptr(), sigma);
  v.reduced = v.singular_locus_finite = ideal_dimension(sing) <= 1;
  if (!v.singular_locus_finite) {
    v.witnesses.push_back("singular locus of the curve has positive dimension");
    return v;
  }
  std::vector<ProjectivePoint> points;
  try {
    points = singular_points(sing);
  } catch (const ResourceLimit&) {
    throw;
  } catch (const Error& e) {
    if (std::string(e.what()) != "extension too deep") throw;
    v.inconclusive = true;
    v.witnesses.push_back("singular points need a tower of extensions");
    return v;
  }
  v.all_nodes = true;
  for (const auto& p : points) {
    std::string reason;
    if (!node_at(gens, p, reason)) {
      v.all_nodes = false;
      v.witnesses.push_back(reason);
    }
  }
  return v;
}

NodalVerdict ci_space_curve_nodal(const HomogeneousForm& q1, const HomogeneousForm& q2) {
  if (q1.poly().is_zero() || q2.poly().is_zero()) throw Error("zero input");
  return space_curve_nodal(IdealPresentation(q1.poly().vars_ptr(), {q1.poly(), q2.poly()}));
}

}  // namespace mjsing
