#include "mjsing/classify.hpp"

#include <algorithm>

#include "mjsing/curves.hpp"
#include "mjsing/error.hpp"
#include "mjsing/jets.hpp"
#include "mjsing/linalg.hpp"
#include "mjsing/newton.hpp"

namespace mjsing {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::MjCanonical: return "MJ_CANONICAL";
    case Verdict::MjLogCanonicalOnly: return "MJ_LOG_CANONICAL_ONLY";
    case Verdict::NotMjLogCanonical: return "NOT_MJ_LOG_CANONICAL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

bool is_log_canonical(Verdict v) { return v == Verdict::MjCanonical || v == Verdict::MjLogCanonicalOnly; }

int emb_dim_at_origin(const IdealPresentation& ideal) {
  if (!vanishes_at_origin(ideal)) throw Error("germ not at origin");
  if (ideal.generators().empty()) return static_cast<int>(ideal.nvars());
  return static_cast<int>(ideal.nvars()) - jacobian_rank_at_origin(ideal.generators());
}

ConeVerdict cone_criterion(int n, int d, int a) {
  if (d < 1 || d >= n || a < 1) throw Error("parameter out of range");
  return {a * (n - d) <= n - 1, a * (n - d) <= n};
}

namespace {

// Basis of the common kernel of the linear forms among `gens`, and the
// names of the free coordinates that index it.
struct LinearSection {
  std::vector<std::vector<Rational>> basis;
  VarListPtr vars;
};

LinearSection linear_section(const std::vector<Polynomial>& gens, const VarListPtr& vars) {
  std::vector<Polynomial> linear;
  for (const auto& g : gens)
    if (g.total_degree() == 1) linear.push_back(g);
  const std::size_t n = vars->size();
  Matrix<Rational> a = linear_parts(linear);
  LinearSection s;
  s.basis = kernel(a, n);
  // Kernel vectors come one per free column, in column order.
  Matrix<Rational> echelon = a;
  auto pivots = row_reduce(echelon);
  VarList names;
  for (std::size_t k = 0; k < n; ++k)
    if (std::find(pivots.begin(), pivots.end(), k) == pivots.end()) names.push_back((*vars)[k]);
  s.vars = make_vars(names);
  return s;
}

std::vector<Polynomial> restrict_to(const std::vector<Polynomial>& gens, const LinearSection& s) {
  const std::size_t n = s.basis.empty() ? 0 : s.basis[0].size();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial im(s.vars);
    for (std::size_t k = 0; k < s.basis.size(); ++k)
      im.add_term(Monomial::variable(s.basis.size(), k), s.basis[k][i]);
    images.push_back(std::move(im));
  }
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    if (g.total_degree() <= 1) continue;
    Polynomial r = g.substitute(images);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

Verdict newton_guard(GermReport& r, const Polynomial& f) {
  NewtonCertificate c = newton_nonlc_certificate(f);
  r.cite("Newton polygon", std::string(to_string(c)));
  return c == NewtonCertificate::NotLc ? Verdict::NotMjLogCanonical : Verdict::Inconclusive;
}

}  // namespace

GermReport classify_curve_germ(const IdealPresentation& ideal) {
  if (!vanishes_at_origin(ideal)) throw Error("germ not at origin");
  GermReport r;
  r.dim = local_dimension(ideal);
  if (r.dim != 1) throw Error("dimension is not 1");
  r.emb_dim = emb_dim_at_origin(ideal);
  if (r.emb_dim >= 3) {
    r.verdict = Verdict::NotMjLogCanonical;
    r.cite("embedding dimension bound", "emb " + std::to_string(r.emb_dim) + " exceeds twice the dimension");
    return r;
  }
  if (r.emb_dim <= 1) {
    r.mult = 1;
    r.verdict = Verdict::MjCanonical;
    r.cite("smooth curve", "emb " + std::to_string(r.emb_dim));
    return r;
  }
  IdealPresentation cone = tangent_cone(ideal);
  LinearSection plane = linear_section(cone.generators(), ideal.vars_ptr());
  std::vector<Polynomial> forms = restrict_to(cone.generators(), plane);
  int mult = kInfinity;
  for (const auto& q : forms) mult = std::min(mult, q.total_degree());
  r.mult = mult;
  if (mult != 2) {
    r.verdict = Verdict::NotMjLogCanonical;
    r.cite("planar curve", "multiplicity " + (mult == kInfinity ? std::string("infinite") : std::to_string(mult)) +
                               ", not a node");
    return r;
  }
  Matrix<Rational> coeffs;
  for (const auto& q : forms) {
    if (q.total_degree() != 2) continue;
    coeffs.push_back({q.coefficient(Monomial{2, 0}), q.coefficient(Monomial{1, 1}), q.coefficient(Monomial{0, 2})});
  }
  if (rank_fraction_free(coeffs) != 1) {
    r.verdict = Verdict::Inconclusive;
    r.cite("planar curve", "tangent cone is not a single binary quadric");
    return r;
  }
  const auto& c = coeffs.front();
  if (c[1] * c[1] - 4 * c[0] * c[2] != 0) {
    r.verdict = Verdict::MjLogCanonicalOnly;
    r.cite("planar curve", "ordinary node");
  } else {
    r.verdict = Verdict::NotMjLogCanonical;
    r.cite("planar curve", "double point with one tangent line");
  }
  return r;
}

std::optional<Polynomial> hypersurface_equation(const IdealPresentation& ideal, int order) {
  const std::size_t n = ideal.nvars();
  const auto& gens = ideal.generators();
  if (n == 3) {
    GroebnerBasis gb = groebner_basis(ideal);
    if (gb.basis.size() == 1) return gb.basis.front();
    return std::nullopt;
  }
  // Solve the equations with independent linear parts for their pivot
  // variables as series in the three free ones.
  const std::size_t r = gens.size();
  Matrix<Rational> aug = linear_parts(gens);
  for (std::size_t i = 0; i < r; ++i) {
    aug[i].resize(n + r, 0);
    aug[i][n + i] = 1;
  }
  auto pivots = row_reduce(aug);
  std::vector<std::size_t> pivot_vars;
  std::vector<Polynomial> solved;
  for (std::size_t t = 0; t < pivots.size() && pivots[t] < n; ++t) {
    pivot_vars.push_back(pivots[t]);
    Polynomial combo(ideal.vars_ptr());
    for (std::size_t s = 0; s < r; ++s)
      if (aug[t][n + s] != 0) combo += gens[s] * aug[t][n + s];
    solved.push_back(std::move(combo));
  }
  if (n - pivot_vars.size() != 3) return std::nullopt;
  VarList names;
  std::vector<std::size_t> where(n, SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(pivot_vars.begin(), pivot_vars.end(), i) == pivot_vars.end()) {
      where[i] = names.size();
      names.push_back(ideal.vars()[i]);
    }
  VarListPtr free = make_vars(names);
  std::vector<Polynomial> images(n, Polynomial(free));
  for (std::size_t i = 0; i < n; ++i)
    if (where[i] != SIZE_MAX) images[i] = Polynomial::variable(free, where[i]);
  for (int iter = 0; iter <= order + 1; ++iter) {
    std::vector<Polynomial> next = images;
    for (std::size_t t = 0; t < pivot_vars.size(); ++t)
      next[pivot_vars[t]] = images[pivot_vars[t]] - solved[t].substitute(images, order);
    images = std::move(next);
  }
  std::vector<Polynomial> rest;
  for (const auto& g : gens) {
    Polynomial h = g.substitute(images, order);
    if (!h.is_zero()) rest.push_back(primitive(h));
  }
  if (rest.empty()) return std::nullopt;
  for (const auto& h : rest)
    if (!(h == rest.front())) return std::nullopt;
  return rest.front();
}

int curve_degree(const IdealPresentation& ideal) {
  GroebnerBasis gb = groebner_basis(ideal);
  const std::size_t n = ideal.nvars();
  unsigned maxdeg = 1;
  for (const auto& m : gb.leading) maxdeg = std::max(maxdeg, m.degree());
  auto hilbert = [&](unsigned s) {
    long count = 0;
    Monomial cur(n);
    // Enumerate exponent vectors of total degree s.
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
      if (i + 1 == n) {
        cur.set(i, left);
        if (std::none_of(gb.leading.begin(), gb.leading.end(), [&](const Monomial& l) { return l.divides(cur); }))
          ++count;
        return;
      }
      for (unsigned e = 0; e <= left; ++e) {
        cur.set(i, e);
        self(self, i + 1, left - e);
      }
      cur.set(i, 0);
    };
    rec(rec, 0, s);
    return count;
  };
  unsigned s = 4 * maxdeg + 4;
  return static_cast<int>(hilbert(s + 1) - hilbert(s));
}

namespace {

std::string pattern_text(const std::vector<PatternEntry>& p) {
  std::string s;
  for (const auto& e : p) s += (s.empty() ? "" : " ") + std::to_string(e.multiplicity);
  return "multiplicities {" + s + "}";
}

void classify_hypersurface(GermReport& r, const IdealPresentation& ideal, const Polynomial& f,
                           const ClassifyOptions& opt) {
  int mult = mult_at_origin(f);
  r.mult = mult;
  if (mult >= 4) {
    int dim = jet_fiber_dim(ideal, 3);
    int term = 8 - dim;
    r.cite("multiplicity at least 4", "level-3 jet fiber dimension " + std::to_string(dim) + ", bound " +
                                          std::to_string(term));
    r.verdict = term < 0 ? Verdict::NotMjLogCanonical : Verdict::Inconclusive;
    return;
  }
  if (mult == 3) {
    NodalVerdict nv = plane_curve_nodal(initial_form(f));
    if (nv.pass()) {
      r.verdict = Verdict::MjLogCanonicalOnly;
      r.cite("triple point", "projective tangent cone is reduced with only ordinary nodes");
    } else {
      r.verdict = Verdict::NotMjLogCanonical;
      for (const auto& w : nv.witnesses) r.cite("triple point", w);
    }
    return;
  }

  DoublePointData d = analyze_double_point(f, opt.order);
  r.tau = d.split.tau;
  bool lc = false;
  if (d.split.tau >= 2) {
    lc = true;
    r.cite("double point, quadratic rank " + std::to_string(d.split.tau), "sum of two squares plus g(z)");
  } else {
    r.m2 = d.m2;
    r.tau2 = d.tau2;
    r.pattern = d.pattern;
    if (d.m2 >= 5) {
      r.cite("double point, residual multiplicity " + (d.m2 == kInfinity ? std::string(">=") + std::to_string(opt.order + 1)
                                                                          : std::to_string(d.m2)),
             "residual multiplicity at least 5");
      Polynomial nf = d.split.normal_form;
      newton_guard(r, nf);
      r.verdict = Verdict::NotMjLogCanonical;
      return;
    }
    if (d.m2 == 4) {
      lc = std::all_of(d.pattern.begin(), d.pattern.end(), [](const PatternEntry& e) { return e.multiplicity <= 2; });
      r.cite("double point, residual quartic", pattern_text(d.pattern));
    } else if (d.pattern.size() > 1) {
      lc = true;
      r.cite("double point, residual cubic not a cube", pattern_text(d.pattern));
    } else {
      if (!d.e_series) throw Error("truncation order below minimum");
      r.alpha = d.e_series->alpha;
      r.beta = d.e_series->beta;
      const auto& al = *r.alpha;
      const auto& be = *r.beta;
      lc = (!al.at_least && al.value <= 4) || (!be.at_least && be.value <= 6);
      r.cite("double point, residual cubic a perfect cube",
             "alpha " + al.to_string() + ", beta " + be.to_string());
    }
  }
  if (!lc) {
    r.verdict = Verdict::NotMjLogCanonical;
    return;
  }
  AdeResult ade = ade_from_data(f, d);
  r.ade = ade.label;
  if (ade.is_ade()) {
    r.verdict = Verdict::MjCanonical;
    r.cite("rational double point", ade.label + ": " + ade.reason);
  } else if (ade.undetermined) {
    r.verdict = Verdict::Inconclusive;
    r.cite("rational double point", "undetermined at order " + std::to_string(opt.order));
  } else {
    r.verdict = Verdict::MjLogCanonicalOnly;
    r.cite("not a rational double point", ade.reason);
  }
}

bool regular_pair(const Polynomial& a, const Polynomial& b) {
  return ideal_dimension(IdealPresentation(a.vars_ptr(), {a, b})) == static_cast<int>(a.nvars()) - 2;
}

// Nonzero integer vectors in [-bound, bound]^k with positive first nonzero
// entry, by increasing 1-norm.
std::vector<std::vector<int>> small_combinations(std::size_t k, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, -bound);
  while (true) {
    auto first = std::find_if(cur.begin(), cur.end(), [](int v) { return v != 0; });
    if (first != cur.end() && *first > 0) out.push_back(cur);
    std::size_t i = 0;
    while (i < k && cur[i] == bound) cur[i++] = -bound;
    if (i == k) break;
    ++cur[i];
  }
  auto norm = [](const std::vector<int>& v) {
    int s = 0;
    for (int x : v) s += std::abs(x);
    return s;
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return norm(a) < norm(b); });
  return out;
}

void classify_emb4(GermReport& r, const IdealPresentation& ideal, const ClassifyOptions& opt) {
  IdealPresentation cone = tangent_cone(ideal);
  LinearSection section = linear_section(cone.generators(), ideal.vars_ptr());
  IdealPresentation t(section.vars, restrict_to(cone.generators(), section));
  GroebnerBasis gb = groebner_basis(t);
  std::vector<Polynomial> quadrics;
  for (const auto& g : gb.basis)
    if (g.total_degree() == 2) quadrics.push_back(g);
  r.mult = gb.basis.empty() ? kInfinity : gb.basis.front().total_degree();

  auto combos = small_combinations(quadrics.size(), std::max(1, opt.search_bound));
  auto combine = [&](const std::vector<int>& c) {
    Polynomial q(section.vars);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i]) q += quadrics[i] * Rational(c[i]);
    return q;
  };
  std::optional<std::pair<Polynomial, Polynomial>> regular;
  for (std::size_t a = 0; a < combos.size() && !regular; ++a)
    for (std::size_t b = a + 1; b < combos.size() && !regular; ++b) {
      Polynomial p = combine(combos[a]), q = combine(combos[b]);
      if (regular_pair(p, q)) regular.emplace(p, q);
    }
  if (!regular) {
    r.verdict = Verdict::NotMjLogCanonical;
    r.cite("embedding dimension 4", "no two quadrics of the tangent cone form a regular sequence");
    return;
  }

  bool complete_intersection = false;
  if (quadrics.size() == 2) {
    GroebnerBasis pair = groebner_basis(IdealPresentation(section.vars, quadrics));
    complete_intersection = pair.basis == gb.basis;
  }
  if (complete_intersection) {
    NodalVerdict nv = ci_space_curve_nodal(HomogeneousForm(quadrics[0]), HomogeneousForm(quadrics[1]));
    if (nv.inconclusive) {
      r.verdict = Verdict::Inconclusive;
      r.cite("complete intersection of two quadrics", nv.witnesses.empty() ? "" : nv.witnesses.front());
    } else if (nv.pass()) {
      r.verdict = Verdict::MjLogCanonicalOnly;
      r.cite("complete intersection of two quadrics", "tangent cone is a reduced nodal curve in P^3");
    } else {
      r.verdict = Verdict::NotMjLogCanonical;
      for (const auto& w : nv.witnesses) r.cite("complete intersection of two quadrics", w);
    }
    return;
  }

  if (ideal_dimension(t) != 2) {
    r.verdict = Verdict::NotMjLogCanonical;
    r.cite("embedding dimension 4", "projective tangent cone is not a curve");
    return;
  }
  int degree = curve_degree(t);
  if (degree > 3) {
    r.verdict = Verdict::NotMjLogCanonical;
    r.cite("embedding dimension 4", "projective tangent cone has degree " + std::to_string(degree) + " > 3");
    return;
  }
  NodalVerdict nv = space_curve_nodal(t);
  if (nv.inconclusive) {
    r.verdict = Verdict::Inconclusive;
    r.cite("embedding dimension 4", "nodal test needs a tower of extensions");
    return;
  }
  if (!nv.pass()) {
    r.verdict = Verdict::NotMjLogCanonical;
    for (const auto& w : nv.witnesses) r.cite("embedding dimension 4", w);
    return;
  }
  for (std::size_t a = 0; a < combos.size(); ++a)
    for (std::size_t b = a + 1; b < combos.size(); ++b) {
      Polynomial p = combine(combos[a]), q = combine(combos[b]);
      if (!regular_pair(p, q)) continue;
      NodalVerdict ci = ci_space_curve_nodal(HomogeneousForm(p), HomogeneousForm(q));
      if (ci.pass()) {
        r.verdict = Verdict::MjLogCanonicalOnly;
        r.cite("embedding dimension 4, contained in a complete intersection",
               "V(" + p.to_string() + ", " + q.to_string() + ") is a reduced nodal curve");
        return;
      }
    }
  r.verdict = Verdict::Inconclusive;
  r.cite("embedding dimension 4", "no nodal complete intersection of quadrics found within bound " +
                                      std::to_string(opt.search_bound));
}

}  // namespace

GermReport classify_surface_germ(const IdealPresentation& ideal, const ClassifyOptions& options) {
  if (!vanishes_at_origin(ideal)) throw Error("germ not at origin");
  GermReport r;
  r.dim = local_dimension(ideal);
  if (r.dim != 2) throw Error("dimension is not 2");
  r.emb_dim = emb_dim_at_origin(ideal);
  if (r.emb_dim <= 2) {
    r.mult = 1;
    r.verdict = Verdict::MjCanonical;
    r.cite("smooth surface", "emb " + std::to_string(r.emb_dim));
    return r;
  }
  if (r.emb_dim >= 5) {
    r.verdict = Verdict::NotMjLogCanonical;
    r.cite("embedding dimension bound", "emb " + std::to_string(r.emb_dim) + " exceeds twice the dimension");
    return r;
  }
  try {
    if (r.emb_dim == 3) {
      auto f = hypersurface_equation(ideal, options.order);
      if (!f) {
        r.verdict = Verdict::Inconclusive;
        r.cite("embedding dimension 3", "could not reduce to a single equation");
        return r;
      }
      classify_hypersurface(r, ideal, *f, options);
    } else {
      classify_emb4(r, ideal, options);
    }
  } catch (const ResourceLimit& e) {
    r.verdict = Verdict::Inconclusive;
    r.cite("resource limit", e.what());
  }
  return r;
}

}  // namespace mjsing
