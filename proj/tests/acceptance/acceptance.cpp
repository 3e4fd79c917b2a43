// Acceptance checks: one PASS/FAIL line per criterion. With an argument N
// only criterion N runs.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <random>
#include <sstream>

#include "mjsing/classify.hpp"
#include "mjsing/curves.hpp"
#include "mjsing/jets.hpp"
#include "mjsing/newton.hpp"
#include "mjsing/poly_ops.hpp"
#include "mjsing/report.hpp"

using namespace mjsing;
using namespace mjsing::cli;

namespace {

struct SuiteCase {
  std::string name;
  InputDocument doc;
  std::string expect;
  std::string ade;
};

std::vector<SuiteCase> load_suite() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(MJSING_SUITE_DIR))
    if (e.path().extension() == ".txt") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<SuiteCase> out;
  for (const auto& f : files) {
    SuiteCase c{f.stem().string(), load_document(f), "", ""};
    std::ifstream in(f);
    std::string line;
    while (std::getline(in, line)) {
      if (line.rfind("# expect: ", 0) == 0) c.expect = line.substr(10);
      if (line.rfind("# ade: ", 0) == 0) c.ade = line.substr(7);
    }
    out.push_back(std::move(c));
  }
  return out;
}

const std::vector<SuiteCase>& suite() {
  static const std::vector<SuiteCase> cases = load_suite();
  return cases;
}

const SuiteCase& suite_case(const std::string& name) {
  for (const auto& c : suite())
    if (c.name == name) return c;
  throw Error("missing suite case " + name);
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

/// Runs `work` over the inputs concurrently and returns the results in order.
template <class T, class R>
std::vector<R> parallel_map(const std::vector<T>& inputs, std::function<R(const T&)> work) {
  std::vector<std::future<R>> tasks;
  for (const auto& x : inputs) tasks.push_back(std::async(std::launch::async, work, std::cref(x)));
  std::vector<R> out;
  for (auto& t : tasks) out.push_back(t.get());
  return out;
}

std::string verdict_of(const SuiteCase& c, bool with_jets = false) {
  RunOptions opt;
  opt.skip_jets = !with_jets;
  return std::string(to_string(analyze(c.doc, opt).verdict));
}

Outcome check_verdicts(const std::vector<std::string>& names) {
  Outcome o;
  std::vector<const SuiteCase*> cases;
  for (const auto& n : names) cases.push_back(&suite_case(n));
  auto got = parallel_map<const SuiteCase*, std::string>(cases, [](const SuiteCase* const& c) { return verdict_of(*c); });
  int ok = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    bool match = got[i] == cases[i]->expect;
    ok += match;
    o.expect(match, cases[i]->name + ": expected " + cases[i]->expect + ", got " + got[i]);
  }
  o.detail = std::to_string(ok) + "/" + std::to_string(cases.size()) + " verdicts";
  return o;
}

std::vector<std::string> names_with_prefix(const std::string& prefix) {
  std::vector<std::string> out;
  for (const auto& c : suite())
    if (c.name.rfind(prefix, 0) == 0) out.push_back(c.name);
  return out;
}

Outcome criterion_curves() {
  return check_verdicts({"curve_smooth_line", "curve_node", "curve_cusp", "curve_tacnode", "curve_three_axes"});
}

Outcome criterion_rdp() {
  Outcome o;
  std::vector<const SuiteCase*> cases;
  for (const auto& c : suite())
    if (c.name.rfind("ade_", 0) == 0 || c.name.rfind("rdp_", 0) == 0) cases.push_back(&c);
  auto got = parallel_map<const SuiteCase*, std::pair<std::string, std::string>>(cases, [](const SuiteCase* const& c) {
    RunOptions opt;
    opt.skip_jets = true;
    Analysis a = analyze(c->doc, opt);
    std::string label = a.germ && a.germ->ade ? *a.germ->ade : "NONE";
    return std::make_pair(std::string(to_string(a.verdict)), label);
  });
  int ok = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    bool match = got[i].first == cases[i]->expect && got[i].second == cases[i]->ade;
    ok += match;
    o.expect(match, cases[i]->name + ": expected " + cases[i]->expect + " " + cases[i]->ade + ", got " + got[i].first + " " +
                        got[i].second);
  }
  o.detail = std::to_string(ok) + "/" + std::to_string(cases.size()) + " fixtures";
  return o;
}

Outcome criterion_hypersurface_branches() {
  Outcome o = check_verdicts(names_with_prefix("hyp_"));
  // Each branch needs fixtures on both sides of the lc boundary where it has two sides.
  std::map<std::string, std::pair<int, int>> sides;
  for (const auto& name : names_with_prefix("hyp_")) {
    std::string branch = name.substr(4, name.find('_', 4) - 4);
    bool lc = suite_case(name).expect != "NOT_MJ_LOG_CANONICAL";
    (lc ? sides[branch].first : sides[branch].second)++;
  }
  // rank2 and cubic are lc throughout, so they have no non-lc side.
  const std::vector<std::pair<std::string, bool>> branches{
      {"triple", true}, {"rank2", false}, {"cubic", false}, {"cube", true}, {"quartic", true}};
  for (const auto& [branch, two_sided] : branches) {
    o.expect(sides[branch].first >= 2, "branch " + branch + " has fewer than two lc fixtures");
    o.expect(!two_sided || sides[branch].second >= 2, "branch " + branch + " has fewer than two non-lc fixtures");
  }
  o.detail += ", " + std::to_string(branches.size()) + " branches";
  return o;
}

Outcome criterion_ci() {
  Outcome o = check_verdicts({"ci_four_cycle", "ci_twisted_cubic_pencil", "ci_double_plane"});
  const auto& gens = suite_case("ci_twisted_cubic_pencil").doc.generators;
  NodalVerdict nodal = ci_space_curve_nodal(HomogeneousForm(gens[0]), HomogeneousForm(gens[1]));
  o.expect(nodal.pass(), "twisted cubic pencil is not nodal");
  o.detail += nodal.pass() ? ", nodal PASS" : ", nodal FAIL";
  return o;
}

Outcome criterion_terminal_quotient() {
  Outcome o;
  InputDocument doc = parse_document(
      "vars: x1, x2, x3, x4, x5, x6\n"
      "gen: x3*x4 - x5*x6\ngen: x1*x2 - x4^5\ngen: x1*x3^3 - x5^5\ngen: x2*x3^2 - x6^5\n");
  int fiber = jet_fiber_dim(doc.ideal(), 2);
  o.expect(fiber == 10, "level-2 fiber dimension " + std::to_string(fiber));
  MldBound b = mld_upper_bound(doc.ideal(), 3, 2);
  o.expect(b.terms.size() == 2 && b.terms[1].value == -1, "level-2 term is not -1");
  RunOptions opt;
  Analysis a = analyze(doc, opt);
  o.expect(a.verdict == Verdict::NotMjLogCanonical, "verdict " + std::string(to_string(a.verdict)));
  o.detail = "fiber dim " + std::to_string(fiber) + ", term " + (b.terms.size() > 1 ? b.terms[1].value.get_str() : "?") +
             ", " + std::string(to_string(a.verdict));
  return o;
}

Outcome criterion_cones() {
  Outcome o;
  int ok = 0;
  for (int r = 1; r <= 5; ++r)
    for (int m = 1; m <= 5; ++m) {
      ConeVerdict v = cone_criterion((r + 1) * (m + 1), r + m + 1, 2);
      int k = (r - 1) * (m - 1);
      bool match = v.log_canonical == (k <= 2) && v.canonical == (k <= 1);
      ok += match;
      o.expect(match, "Segre r=" + std::to_string(r) + " m=" + std::to_string(m));
    }
  ConeVerdict q = cone_criterion(4, 3, 2);
  o.expect(q.canonical && q.log_canonical, "quadric cone");
  o.detail = std::to_string(ok) + "/25 Segre cases, quadric cone " + (q.canonical ? "canonical" : "not canonical");
  return o;
}

Outcome criterion_newton_soundness() {
  Outcome o;
  std::vector<const SuiteCase*> cases;
  for (const auto& c : suite())
    if (c.doc.generators.size() == 1) cases.push_back(&c);
  auto got = parallel_map<const SuiteCase*, std::pair<NewtonCertificate, Verdict>>(cases, [](const SuiteCase* const& c) {
    RunOptions opt;
    opt.skip_jets = true;
    return std::make_pair(newton_nonlc_certificate(c->doc.generators.front()), analyze(c->doc, opt).verdict);
  });
  int certified = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    auto [cert, verdict] = got[i];
    if (cert == NewtonCertificate::NotLc) {
      ++certified;
      o.expect(verdict == Verdict::NotMjLogCanonical, cases[i]->name + ": NOT_LC but " + std::string(to_string(verdict)));
    }
    if (cert == NewtonCertificate::NotCanonical)
      o.expect(verdict != Verdict::MjCanonical, cases[i]->name + ": NOT_CANONICAL but MJ_CANONICAL");
  }
  o.detail = std::to_string(cases.size()) + " hypersurfaces, " + std::to_string(certified) + " NOT_LC, " +
             std::to_string(o.failures.size()) + " violations";
  return o;
}

Outcome criterion_jet_soundness() {
  Outcome o;
  std::vector<const SuiteCase*> cases;
  for (const auto& c : suite()) cases.push_back(&c);
  auto got = parallel_map<const SuiteCase*, Analysis>(cases, [](const SuiteCase* const& c) { return analyze(c->doc, {}); });
  int certified = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Analysis& a = got[i];
    bool minus_infinity = a.jets && a.jets->minus_infinity;
    certified += minus_infinity;
    o.expect(!(minus_infinity && is_log_canonical(a.verdict)), cases[i]->name + ": jets certify but verdict is lc");
    o.expect(a.violations.empty(), cases[i]->name + ": cross-check violation");
  }
  o.detail = std::to_string(cases.size()) + " inputs, " + std::to_string(certified) + " certified by jets, " +
             std::to_string(o.failures.size()) + " violations";
  return o;
}

struct Invariants {
  Verdict verdict;
  std::optional<int> tau, m2, tau2;
  std::vector<PatternEntry> pattern;
  bool operator==(const Invariants&) const = default;
};

Invariants invariants(const InputDocument& doc) {
  RunOptions opt;
  opt.skip_jets = true;
  Analysis a = analyze(doc, opt);
  Invariants inv{a.verdict, {}, {}, {}, {}};
  if (a.germ) {
    inv.tau = a.germ->tau;
    inv.m2 = a.germ->m2;
    inv.tau2 = a.germ->tau2;
    inv.pattern = a.germ->pattern;
  }
  return inv;
}

Outcome criterion_invariance() {
  Outcome o;
  std::vector<const SuiteCase*> cases;
  for (const auto& c : suite()) cases.push_back(&c);
  auto got = parallel_map<const SuiteCase*, std::vector<std::string>>(cases, [](const SuiteCase* const& c) {
    std::vector<std::string> bad;
    Invariants base = invariants(c->doc);
    std::size_t n = c->doc.vars->size();
    for (int k = 0; k < 10; ++k) {
      Matrix<Rational> m = random_invertible_matrix(n, 1000 + 17 * k);
      InputDocument changed = c->doc;
      for (auto& g : changed.generators) g = linear_change(g, m);
      if (!(invariants(changed) == base)) bad.push_back(c->name + " change " + std::to_string(k));
    }
    return bad;
  });
  for (const auto& bad : got)
    for (const auto& b : bad) o.expect(false, b);
  o.detail = std::to_string(cases.size()) + " inputs x 10 changes, " + std::to_string(o.failures.size()) + " violations";
  return o;
}

Polynomial random_poly(const VarListPtr& vars, std::mt19937& rng, int min_degree, int max_degree) {
  std::uniform_int_distribution<int> coeff(-5, 5), deg(min_degree, max_degree), terms(1, 6);
  std::uniform_int_distribution<std::size_t> var(0, vars->size() - 1);
  Polynomial f(vars);
  while (f.is_zero()) {
    int t = terms(rng);
    for (int k = 0; k < t; ++k) {
      Monomial m(vars->size());
      int d = deg(rng);
      for (int i = 0; i < d; ++i) {
        std::size_t v = var(rng);
        m.set(v, m[v] + 1);
      }
      f.add_term(m, coeff(rng));
    }
  }
  return f;
}

Outcome criterion_jet_laws() {
  Outcome o;
  std::mt19937 rng(2024);
  auto vars = make_vars({"x", "y", "z"});
  auto tvar = make_vars({"t"});
  int law = 0, oracle = 0;
  for (int k = 0; k < 50; ++k) {
    Polynomial f = random_poly(vars, rng, 1, 4);
    int mult = mult_at_origin(f);
    JetSystem js = jet_equations(f, 5, true);
    bool ok = true;
    for (int j = 1; j < mult && j <= 5; ++j) ok = ok && js.equations[j].is_zero();
    if (mult <= 5) {
      std::vector<Polynomial> first;
      for (std::size_t i = 0; i < 3; ++i) first.push_back(Polynomial::variable(js.jet_vars, i));
      ok = ok && js.equations[mult] == initial_form(f).poly().substitute(first);
    }
    law += ok;
    o.expect(ok, "fiber law fails for " + f.to_string());
  }
  std::uniform_int_distribution<int> coeff(-6, 6);
  for (int k = 0; k < 50; ++k) {
    const int m = 4;
    Polynomial f = random_poly(vars, rng, 1, 4);
    JetSystem js = jet_equations(f, m, true);
    std::vector<Rational> point;
    std::vector<Polynomial> series(3, Polynomial(tvar));
    for (int j = 1; j <= m; ++j)
      for (int i = 0; i < 3; ++i) {
        Rational c = coeff(rng);
        point.push_back(c);
        series[i] += Polynomial::term(tvar, c, Monomial{unsigned(j)});
      }
    Polynomial composed = f.substitute(series, m);
    bool ok = true;
    for (int j = 0; j <= m; ++j) ok = ok && js.equations[j].evaluate(point) == composed.coefficient(Monomial{unsigned(j)});
    oracle += ok;
    o.expect(ok, "substitution oracle fails for " + f.to_string());
  }
  o.detail = std::to_string(law) + "/50 fiber laws, " + std::to_string(oracle) + "/50 series";
  return o;
}

Outcome criterion_blowup() {
  Outcome o;
  auto xyz = make_vars({"x", "y", "z"});
  auto uvw = make_vars({"u", "v", "w"});
  const std::vector<std::pair<int, int>> samples{{1, 0}, {0, 1}, {1, 1}, {-3, 2}};
  int ok = 0;
  for (auto [a, b] : samples) {
    std::string fa = std::to_string(a), fb = std::to_string(b);
    Polynomial f = parse_poly("x^2 + y^3 + (" + fa + ")*y*z^4 + (" + fb + ")*z^6", xyz);
    Verdict germ = classify_surface_germ(IdealPresentation(xyz, {f})).verdict;
    // z-chart of the blow-up of the origin: x = u w, y = v w, z = w.
    Polynomial u = Polynomial::variable(uvw, 0), v = Polynomial::variable(uvw, 1), w = Polynomial::variable(uvw, 2);
    Polynomial total = f.substitute(std::vector<Polynomial>{u * w, v * w, w});
    Polynomial strict(uvw);
    for (const auto& [m, c] : total.terms()) {
      Monomial d = m;
      d.set(2, m[2] - 2);
      strict.add_term(d, c);
    }
    Polynomial expected = parse_poly("u^2 + v^3*w + (" + fa + ")*v*w^3 + (" + fb + ")*w^4", uvw);
    bool chart_ok = strict == expected;
    // Singular points on the exceptional divisor w = 0: only the origin.
    std::vector<Polynomial> sing{strict, strict.derivative(0), strict.derivative(1), strict.derivative(2), w};
    GroebnerBasis gb = groebner_basis(IdealPresentation(uvw, sing), MonomialOrder::lex());
    bool origin_only = !gb.is_unit() && ideal_dimension(IdealPresentation(uvw, sing)) == 0;
    for (std::size_t i = 0; i < 3 && origin_only; ++i) {
      UPoly mp = variable_minimal_polynomial(gb, i);
      origin_only = mp.degree() >= 1 && mp == UPoly::monomial(1, std::size_t(mp.degree()));
    }
    Verdict chart = classify_surface_germ(IdealPresentation(uvw, {strict})).verdict;
    bool match = chart_ok && origin_only && is_log_canonical(germ) && is_log_canonical(chart);
    ok += match;
    o.expect(match, "(a, b) = (" + fa + ", " + fb + "): germ " + std::string(to_string(germ)) + ", chart " +
                        std::string(to_string(chart)) + (chart_ok ? "" : ", unexpected chart equation") +
                        (origin_only ? "" : ", extra singular points"));
  }
  o.detail = std::to_string(ok) + "/" + std::to_string(samples.size()) + " samples";
  return o;
}

struct Criterion {
  int id;
  const char* title;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "dimension-1 table", criterion_curves},
    {2, "rational double points", criterion_rdp},
    {3, "embedding dimension 3 branches", criterion_hypersurface_branches},
    {4, "complete intersections of two quadrics", criterion_ci},
    {5, "terminal quotient threefold", criterion_terminal_quotient},
    {6, "cones and Segre tables", criterion_cones},
    {7, "Newton soundness", criterion_newton_soundness},
    {8, "jet and classifier cross-soundness", criterion_jet_soundness},
    {9, "coordinate invariance", criterion_invariance},
    {10, "fiber vanishing and jet substitution", criterion_jet_laws},
    {11, "blow-up chart consistency", criterion_blowup},
};

}  // namespace

int main(int argc, char** argv) {
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failed = 0, ran = 0;
  for (const auto& c : kCriteria) {
    if (only && c.id != only) continue;
    ++ran;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << ": " << o.detail << " (" << secs << " s)";
    std::cout << line.str() << "\n";
    for (const auto& f : o.failures) std::cout << "      " << f << "\n";
    failed += !o.pass;
  }
  if (!ran) {
    std::cerr << "no criterion " << only << "\n";
    return 1;
  }
  return failed ? 1 : 0;
}
