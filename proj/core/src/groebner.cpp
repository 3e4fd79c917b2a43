#include "mjsing/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <map>

#include "mjsing/error.hpp"

namespace mjsing {

IdealPresentation::IdealPresentation(VarListPtr vars, std::vector<Polynomial> generators)
    : vars_(std::move(vars)) {
  for (auto& g : generators) {
    if (!same_vars(g.vars_ptr(), vars_)) throw Error("variable lists differ");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

bool IdealPresentation::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == Kind::Lex) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  for (const auto& row : rows_) {
    long wa = 0, wb = 0;
    for (std::size_t i = 0; i < a.size() && i < row.size(); ++i) {
      wa += long(row[i]) * a[i];
      wb += long(row[i]) * b[i];
    }
    if (wa != wb) return wa > wb ? 1 : -1;
  }
  return grevlex_compare(a, b);
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Grevlex: return "GREVLEX";
    case Kind::Lex: return "LEX";
    case Kind::Weighted: return "WEIGHTED";
  }
  return "?";
}

Monomial leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error("zero input");
  if (order.kind() == MonomialOrder::Kind::Grevlex) return f.terms().begin()->first;
  const Monomial* best = nullptr;
  for (const auto& [m, c] : f.terms())
    if (!best || order.compare(m, *best) > 0) best = &m;
  return *best;
}

namespace {

std::atomic<std::uint64_t>& step_limit_storage() {
  static std::atomic<std::uint64_t> limit = [] {
    const char* env = std::getenv("MJ_SINGULAR_MAX_GB_STEPS");
    if (!env || !*env) return std::uint64_t{0};
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    return (end && *end == '\0') ? std::uint64_t(v) : std::uint64_t{0};
  }();
  return limit;
}

struct Term {
  Monomial m;
  Integer c;
};
using GPoly = std::vector<Term>;

class Engine {
 public:
  explicit Engine(const MonomialOrder& order) : order_(order) {}

  GPoly convert(const Polynomial& f) const {
    Polynomial p = primitive(f);
    GPoly g;
    g.reserve(p.size());
    for (const auto& [m, c] : p.terms()) g.push_back({m, c.get_num()});
    sort(g);
    normalize(g);
    return g;
  }

  Polynomial back(const GPoly& g, const VarListPtr& vars) const {
    Polynomial p(vars);
    for (const auto& t : g) p.add_term(t.m, Rational(t.c));
    return p;
  }

  void sort(GPoly& g) const {
    if (order_.kind() == MonomialOrder::Kind::Grevlex) {
      std::sort(g.begin(), g.end(), [](const Term& a, const Term& b) { return grevlex_compare(a.m, b.m) > 0; });
    } else {
      std::sort(g.begin(), g.end(), [this](const Term& a, const Term& b) { return order_.compare(a.m, b.m) > 0; });
    }
  }

  static void normalize(GPoly& g) {
    if (g.empty()) return;
    Integer content = 0;
    for (const auto& t : g) {
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.c.get_mpz_t());
      if (content == 1) break;
    }
    if (g.front().c < 0) content = -content;
    if (content == 1) return;
    for (auto& t : g) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), content.get_mpz_t());
  }

  // a*h[from..] - b*shift*g[1..], merged in descending order.
  GPoly combine(const GPoly& h, std::size_t from, const Integer& a, const Integer& b,
                const Monomial& shift, const GPoly& g) const {
    GPoly out;
    out.reserve(h.size() - from + g.size());
    std::size_t i = from, j = 1;
    while (i < h.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back({h[i].m, a * h[i].c});
        ++i;
        continue;
      }
      Monomial gm = g[j].m * shift;
      int cmp = i < h.size() ? order_.compare(h[i].m, gm) : -1;
      if (cmp > 0) {
        out.push_back({h[i].m, a * h[i].c});
        ++i;
      } else if (cmp < 0) {
        out.push_back({gm, -b * g[j].c});
        ++j;
      } else {
        Integer c = a * h[i].c - b * g[j].c;
        if (c != 0) out.push_back({gm, std::move(c)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  const GPoly* find_reducer(const Monomial& m, const std::vector<GPoly>& basis,
                            const std::vector<char>* active) const {
    const GPoly* best = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (active && !(*active)[k]) continue;
      if (basis[k].front().m.divides(m) && (!best || basis[k].size() < best->size())) best = &basis[k];
    }
    return best;
  }

  // Full reduction; the result is primitive with positive leading coefficient.
  GPoly reduce(GPoly h, const std::vector<GPoly>& basis, const std::vector<char>* active = nullptr) const {
    std::size_t i = 0;
    while (i < h.size()) {
      const GPoly* g = find_reducer(h[i].m, basis, active);
      if (!g) {
        ++i;
        continue;
      }
      Integer gg;
      mpz_gcd(gg.get_mpz_t(), g->front().c.get_mpz_t(), h[i].c.get_mpz_t());
      Integer a = g->front().c / gg, b = h[i].c / gg;
      GPoly next;
      next.reserve(h.size() + g->size());
      for (std::size_t k = 0; k < i; ++k) next.push_back({h[k].m, a * h[k].c});
      GPoly tail = combine(h, i + 1, a, b, h[i].m / g->front().m, *g);
      for (auto& t : tail) next.push_back(std::move(t));
      h = std::move(next);
      normalize(h);
    }
    return h;
  }

  GPoly spoly(const GPoly& f, const GPoly& g) const {
    Monomial l = f.front().m.lcm(g.front().m);
    Integer gg;
    mpz_gcd(gg.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    Integer a = g.front().c / gg, b = f.front().c / gg;
    // a*(l/LM f)*f - b*(l/LM g)*g with the leading terms cancelling.
    GPoly fs;
    Monomial sf = l / f.front().m;
    fs.reserve(f.size());
    for (const auto& t : f) fs.push_back({t.m * sf, t.c});
    GPoly out = combine(fs, 1, a, b, l / g.front().m, g);
    normalize(out);
    return out;
  }

  const MonomialOrder& order() const { return order_; }

 private:
  const MonomialOrder& order_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

}  // namespace

void set_groebner_step_limit(std::uint64_t steps) { step_limit_storage() = steps; }
std::uint64_t groebner_step_limit() { return step_limit_storage(); }

GroebnerBasis groebner_basis(const IdealPresentation& ideal, const MonomialOrder& order) {
  Engine eng(order);
  const std::uint64_t limit = groebner_step_limit();
  GroebnerBasis out;
  out.vars = ideal.vars_ptr();
  out.order = order;
  const std::size_t n = ideal.nvars();

  std::vector<GPoly> basis;
  std::vector<Pair> pairs;
  std::vector<std::vector<char>> pending;
  bool unit = false;

  auto add = [&](GPoly h) {
    if (h.empty()) return;
    if (h.front().m.degree() == 0) {
      unit = true;
      return;
    }
    std::size_t idx = basis.size();
    basis.push_back(std::move(h));
    for (auto& row : pending) row.push_back(0);
    pending.emplace_back(basis.size(), 0);
    for (std::size_t k = 0; k < idx; ++k) {
      pairs.push_back({k, idx, basis[k].front().m.lcm(basis[idx].front().m)});
      pending[k][idx] = pending[idx][k] = 1;
    }
  };

  for (const auto& g : ideal.generators()) {
    add(eng.reduce(eng.convert(g), basis));
    if (unit) break;
  }

  std::uint64_t steps = 0;
  while (!unit && !pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (order.compare(pairs[k].lcm, pairs[best].lcm) < 0) best = k;
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + long(best));
    pending[p.i][p.j] = pending[p.j][p.i] = 0;

    const Monomial& li = basis[p.i].front().m;
    const Monomial& lj = basis[p.j].front().m;
    if (li.coprime(lj)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (pending[p.i][k] || pending[p.j][k]) continue;
      if (basis[k].front().m.divides(p.lcm)) chain = true;
    }
    if (chain) continue;

    if (limit && ++steps > limit) throw ResourceLimit("Groebner step limit exceeded");
    add(eng.reduce(eng.spoly(basis[p.i], basis[p.j]), basis));
  }

  if (unit) {
    out.basis.push_back(Polynomial::constant(out.vars, 1));
    out.leading.push_back(Monomial(n));
    return out;
  }

  // Minimalize, then interreduce.
  std::vector<char> keep(basis.size(), 1);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      const Monomial& la = basis[a].front().m;
      const Monomial& lb = basis[b].front().m;
      if (lb.divides(la) && (!(la == lb) || b < a)) keep[a] = 0;
    }
  }
  std::vector<GPoly> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (keep[a]) minimal.push_back(basis[a]);
  std::vector<GPoly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<char> active(minimal.size(), 1);
    active[a] = 0;
    reduced.push_back(eng.reduce(minimal[a], minimal, &active));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const GPoly& a, const GPoly& b) { return order.compare(a.front().m, b.front().m) < 0; });
  for (const auto& g : reduced) {
    out.basis.push_back(eng.back(g, out.vars));
    out.leading.push_back(g.front().m);
  }
  return out;
}

bool GroebnerBasis::is_unit() const { return basis.size() == 1 && basis.front().is_constant(); }

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!same_vars(f.vars_ptr(), vars)) throw Error("variable lists differ");
  const MonomialOrder& ord = order;
  auto greater = [&ord](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; };
  std::map<Monomial, Rational, decltype(greater)> h(greater);
  for (const auto& [m, c] : f.terms()) h.emplace(m, c);
  std::vector<Rational> lcs;
  for (std::size_t k = 0; k < basis.size(); ++k) lcs.push_back(basis[k].coefficient(leading[k]));
  Polynomial r(vars);
  while (!h.empty()) {
    auto it = h.begin();
    Monomial m = it->first;
    Rational c = it->second;
    std::size_t k = 0;
    while (k < basis.size() && !leading[k].divides(m)) ++k;
    if (k == basis.size()) {
      r.add_term(m, c);
      h.erase(it);
      continue;
    }
    Rational q = c / lcs[k];
    Monomial shift = m / leading[k];
    for (const auto& [gm, gc] : basis[k].terms()) {
      Monomial t = gm * shift;
      auto [pos, inserted] = h.emplace(t, -q * gc);
      if (!inserted) {
        pos->second -= q * gc;
        if (pos->second == 0) h.erase(pos);
      }
    }
  }
  return r;
}

int dimension_from_leading(const std::vector<Monomial>& leading, std::size_t nvars) {
  std::vector<std::uint64_t> edges;
  for (const auto& m : leading) {
    if (m.degree() == 0) return kEmptyDimension;
    edges.push_back(m.support());
  }
  std::sort(edges.begin(), edges.end(),
            [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint64_t> minimal;
  for (auto e : edges) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [e](std::uint64_t f) { return (f & e) == f; });
    if (!redundant) minimal.push_back(e);
  }
  int best = static_cast<int>(nvars);
  auto search = [&](auto&& self, std::uint64_t chosen, int count) -> void {
    if (count >= best) return;
    const std::uint64_t* open = nullptr;
    for (const auto& e : minimal) {
      if (e & chosen) continue;
      if (!open || std::popcount(e) < std::popcount(*open)) open = &e;
    }
    if (!open) {
      best = count;
      return;
    }
    for (std::uint64_t rest = *open; rest; rest &= rest - 1)
      self(self, chosen | (rest & -rest), count + 1);
  };
  search(search, 0, 0);
  return static_cast<int>(nvars) - best;
}

int ideal_dimension(const IdealPresentation& ideal) {
  if (ideal.generators().empty()) return static_cast<int>(ideal.nvars());
  GroebnerBasis gb = groebner_basis(ideal);
  if (gb.is_unit()) return kEmptyDimension;
  return dimension_from_leading(gb.leading, ideal.nvars());
}

bool projective_is_empty(const IdealPresentation& ideal) {
  if (!ideal.is_homogeneous()) throw Error("non-homogeneous generator");
  return ideal_dimension(ideal) <= 0;
}

bool vanishes_at_origin(const IdealPresentation& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [](const Polynomial& g) { return g.constant_term() == 0; });
}

LocalBasis local_standard_basis(const IdealPresentation& ideal) {
  LocalBasis out;
  if (ideal.generators().empty()) return out;
  const std::size_t n = ideal.nvars();
  VarList names = ideal.vars();
  std::string t = "t";
  while (std::find(names.begin(), names.end(), t) != names.end()) t += "_";
  names.push_back(t);
  VarListPtr hv = make_vars(names);

  std::vector<Polynomial> hom;
  for (const auto& g : ideal.generators()) {
    int d = g.total_degree();
    Polynomial h(hv);
    for (const auto& [m, c] : g.terms()) {
      Monomial hm(n + 1);
      for (std::size_t i = 0; i < n; ++i) hm.set(i, m[i]);
      hm.set(n, unsigned(d) - m.degree());
      h.add_term(hm, c);
    }
    hom.push_back(std::move(h));
  }
  std::vector<int> all(n + 1, 1), tw(n + 1, 0);
  tw[n] = 1;
  GroebnerBasis gb = groebner_basis(IdealPresentation(hv, hom), MonomialOrder::weighted({all, tw}));
  for (std::size_t k = 0; k < gb.basis.size(); ++k) {
    Polynomial g(ideal.vars_ptr());
    for (const auto& [m, c] : gb.basis[k].terms()) {
      Monomial dm(n);
      for (std::size_t i = 0; i < n; ++i) dm.set(i, m[i]);
      g.add_term(dm, c);
    }
    Monomial lead(n);
    for (std::size_t i = 0; i < n; ++i) lead.set(i, gb.leading[k][i]);
    if (g.is_zero()) continue;
    out.basis.push_back(std::move(g));
    out.local_leading.push_back(lead);
  }
  return out;
}

IdealPresentation tangent_cone(const IdealPresentation& ideal) {
  if (!vanishes_at_origin(ideal)) throw Error("germ not at origin");
  LocalBasis lb = local_standard_basis(ideal);
  std::vector<Polynomial> forms;
  for (const auto& g : lb.basis) forms.push_back(g.homogeneous_part(g.min_degree()));
  if (forms.empty()) return IdealPresentation(ideal.vars_ptr(), {});
  GroebnerBasis gb = groebner_basis(IdealPresentation(ideal.vars_ptr(), forms));
  return IdealPresentation(ideal.vars_ptr(), gb.basis);
}

int local_dimension(const IdealPresentation& ideal) {
  if (!vanishes_at_origin(ideal)) return kEmptyDimension;
  return ideal_dimension(tangent_cone(ideal));
}

int count_standard_monomials(const std::vector<Monomial>& leading, std::size_t nvars) {
  std::vector<unsigned> bound(nvars, 0);
  for (const auto& m : leading) {
    if (m.degree() == 0) return 0;
    if (std::popcount(m.support()) != 1) continue;
    std::size_t i = std::size_t(std::countr_zero(m.support()));
    if (bound[i] == 0 || m[i] < bound[i]) bound[i] = m[i];
  }
  double total = 1;
  for (auto b : bound) {
    if (b == 0) return kInfinity;
    total *= b;
  }
  if (total > 2e7) throw Error("standard monomial count too large");
  int count = 0;
  Monomial cur(nvars);
  while (true) {
    bool standard = std::none_of(leading.begin(), leading.end(), [&](const Monomial& l) { return l.divides(cur); });
    if (standard) ++count;
    std::size_t i = 0;
    while (i < nvars && cur[i] + 1 == bound[i]) {
      cur.set(i, 0);
      ++i;
    }
    if (i == nvars) break;
    cur.set(i, cur[i] + 1);
  }
  return count;
}

int milnor_number(const Polynomial& f) {
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < f.nvars(); ++i) partials.push_back(f.derivative(i));
  IdealPresentation jac(f.vars_ptr(), partials);
  if (!vanishes_at_origin(jac)) return 0;
  if (jac.generators().empty()) return f.nvars() == 0 ? 0 : kInfinity;
  LocalBasis lb = local_standard_basis(jac);
  return count_standard_monomials(lb.local_leading, f.nvars());
}

UPoly variable_minimal_polynomial(const GroebnerBasis& gb, std::size_t i) {
  const std::size_t n = gb.vars->size();
  if (gb.is_unit()) throw Error("empty variety");
  int deg = count_standard_monomials(gb.leading, n);
  if (deg == kInfinity) throw Error("ideal is not zero-dimensional");
  struct Row {
    Polynomial vec;
    UPoly combo;
  };
  std::map<Monomial, Row, GrevlexGreater> rows;
  Polynomial power = gb.normal_form(Polynomial::constant(gb.vars, 1));
  Polynomial x = Polynomial::variable(gb.vars, i);
  for (int k = 0; k <= deg; ++k) {
    if (k > 0) power = gb.normal_form(power * x);
    Polynomial v = power;
    UPoly combo = UPoly::monomial(1, std::size_t(k));
    while (!v.is_zero()) {
      auto lead = *v.terms().begin();
      auto it = rows.find(lead.first);
      if (it == rows.end()) break;
      Rational q = lead.second / it->second.vec.terms().begin()->second;
      v -= it->second.vec * q;
      combo -= it->second.combo * q;
    }
    if (v.is_zero()) return combo.monic();
    Monomial pivot = v.terms().begin()->first;
    rows.emplace(pivot, Row{std::move(v), std::move(combo)});
  }
  throw Error("minimal polynomial not found");
}

}  // namespace mjsing
