#include "mjsing/report.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include <json.hpp>

#include "mjsing/poly_ops.hpp"

#ifndef MJSING_VERSION
#define MJSING_VERSION "0.0.0"
#endif

namespace mjsing::cli {

using Json = nlohmann::ordered_json;

std::string version() { return MJSING_VERSION; }

int exit_code(Verdict v) { return v == Verdict::Inconclusive ? 2 : 0; }

namespace {

Json optional_int(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json header(const std::string& command) {
  Json j;
  j["tool"] = "mjsing";
  j["version"] = version();
  j["command"] = command;
  return j;
}

Json input_json(const InputDocument& doc) {
  Json j;
  j["vars"] = *doc.vars;
  Json gens = Json::array();
  for (const auto& g : doc.generators) gens.push_back(g.to_string());
  j["generators"] = gens;
  if (doc.has_weight_ideal()) {
    Json a = Json::array();
    for (const auto& g : doc.ideal_a) a.push_back(g.to_string());
    j["ideal_a"] = a;
  }
  if (doc.t) j["t"] = doc.t->get_str();
  return j;
}

Json certificate_json(const std::vector<CertificateEntry>& cert) {
  Json out = Json::array();
  for (const auto& c : cert) out.push_back({{"branch", c.branch}, {"evidence", c.evidence}});
  return out;
}

Json germ_json(const GermReport& g) {
  Json j;
  j["dim"] = g.dim;
  j["emb_dim"] = g.emb_dim;
  j["mult"] = optional_int(g.mult);
  j["tau"] = optional_int(g.tau);
  j["m2"] = optional_int(g.m2);
  j["tau2"] = optional_int(g.tau2);
  j["alpha"] = g.alpha ? Json(g.alpha->to_string()) : Json(nullptr);
  j["beta"] = g.beta ? Json(g.beta->to_string()) : Json(nullptr);
  Json pattern = Json::array();
  for (const auto& p : g.pattern) pattern.push_back({{"multiplicity", p.multiplicity}, {"degree", p.degree}});
  j["pattern"] = pattern;
  j["ade"] = g.ade ? Json(*g.ade) : Json(nullptr);
  j["verdict"] = std::string(to_string(g.verdict));
  j["certificate"] = certificate_json(g.certificate);
  return j;
}

std::string status_token(const MldBound& b) { return b.minus_infinity ? "MINUS_INFINITY_CERTIFIED" : "FINITE"; }

Json jets_json(const MldBound& b, int levels) {
  Json j;
  j["mode"] = b.mode == MldBound::Mode::Plain ? "plain" : "mixed";
  j["levels"] = levels;
  j["status"] = status_token(b);
  j["value"] = b.value.get_str();
  j["witness"] = {{"m", b.witness_m}, {"n", b.witness_n}};
  Json terms = Json::array();
  for (const auto& t : b.terms)
    terms.push_back({{"m", t.m}, {"n", t.n}, {"fiber_dim", t.fiber_dim}, {"value", t.value.get_str()}});
  j["terms"] = terms;
  return j;
}

const MldTerm& witness_term(const MldBound& b) {
  for (const auto& t : b.terms)
    if (t.m == b.witness_m && t.n == b.witness_n) return t;
  throw Error("missing witness term");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

MldBound compute_bound(const InputDocument& doc, const IdealPresentation& ideal, int dim, int levels) {
  if (doc.has_weight_ideal()) {
    int c = static_cast<int>(ideal.nvars()) - dim;
    IdealPresentation a(doc.vars, doc.ideal_a);
    return mld_mixed_upper_bound(ideal, c, a, doc.t.value_or(Rational(0)), levels, levels);
  }
  return mld_upper_bound(ideal, dim, levels);
}

std::string plain_jets(const MldBound& b) {
  std::ostringstream os;
  os << (b.mode == MldBound::Mode::Plain ? "plain" : "mixed") << ", " << status_token(b) << ", value " << b.value.get_str()
     << " at (m, n) = (" << b.witness_m << ", " << b.witness_n << ")";
  return os.str();
}

}  // namespace

Analysis analyze(const InputDocument& doc, const RunOptions& options) {
  auto start = std::chrono::steady_clock::now();
  Analysis a;
  IdealPresentation ideal = doc.ideal();
  if (!vanishes_at_origin(ideal)) throw Error("germ not at origin");
  try {
    a.dimension = local_dimension(ideal);
  } catch (const ResourceLimit& e) {
    a.certificate.push_back({"resource limit", e.what()});
    a.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return a;
  }
  if (a.dimension == kEmptyDimension) throw Error("empty germ");
  if (a.dimension == 0) throw Error("germ of dimension 0");
  a.order = options.order.value_or(doc.order.value_or(12));
  a.levels = options.levels.value_or(doc.levels.value_or(a.dimension == 1 ? 5 : 3));
  if (a.levels < 1) throw Error("levels must be at least 1");

  try {
    if (a.dimension == 1) a.germ = classify_curve_germ(ideal);
    if (a.dimension == 2) a.germ = classify_surface_germ(ideal, {a.order, options.search_bound});
  } catch (const ResourceLimit& e) {
    GermReport g;
    g.dim = a.dimension;
    g.verdict = Verdict::Inconclusive;
    g.cite("resource limit", e.what());
    a.germ = g;
  }

  if (a.dimension >= 3 || !options.skip_jets) {
    try {
      if (!doc.has_weight_ideal() && ideal_dimension(ideal) != a.dimension)
        a.jets_note = "global dimension differs from the local one";
      else
        a.jets = compute_bound(doc, ideal, a.dimension, a.levels);
    } catch (const ResourceLimit& e) {
      a.jets_note = e.what();
    }
  } else {
    a.jets_note = "skipped";
  }

  if (doc.generators.size() == 1 && doc.vars->size() == static_cast<std::size_t>(a.dimension) + 1)
    a.newton = newton_nonlc_certificate(doc.generators.front());

  if (a.germ) {
    a.verdict = a.germ->verdict;
    a.certificate = a.germ->certificate;
  }
  bool jet_cert = a.jets && a.jets->mode == MldBound::Mode::Plain && a.jets->minus_infinity;
  bool newton_cert = a.newton == NewtonCertificate::NotLc;
  if (is_log_canonical(a.verdict)) {
    if (jet_cert) a.violations.push_back("jet bound is negative but the classifier reports " + std::string(to_string(a.verdict)));
    if (newton_cert) a.violations.push_back("Newton polygon excludes (1,...,1) but the classifier reports " + std::string(to_string(a.verdict)));
  }
  if (a.verdict == Verdict::MjCanonical && a.newton == NewtonCertificate::NotCanonical)
    a.violations.push_back("Newton polygon contains (1,...,1) only on its boundary but the classifier reports MJ_CANONICAL");
  if (a.verdict == Verdict::Inconclusive && (jet_cert || newton_cert)) {
    a.verdict = Verdict::NotMjLogCanonical;
    if (a.germ) a.certificate.clear();
    if (jet_cert) {
      const MldTerm& w = witness_term(*a.jets);
      a.certificate.push_back({"jet level " + std::to_string(w.n), "bound " + w.value.get_str()});
    }
    if (newton_cert) a.certificate.push_back({"Newton polygon", "(1,...,1) lies outside"});
  }
  if (a.verdict == Verdict::Inconclusive && a.certificate.empty())
    a.certificate.push_back({"no certificate", "jet and Newton tests passed up to level " + std::to_string(a.levels)});

  if (options.self_checks > 0 && a.dimension <= 2) {
    SelfCheck sc;
    sc.seed = options.seed;
    RunOptions sub = options;
    sub.self_checks = 0;
    sub.skip_jets = true;
    sub.levels = a.levels;
    sub.order = a.order;
    std::size_t n = doc.vars->size();
    for (int k = 0; k < options.self_checks; ++k) {
      Matrix<Rational> m = random_invertible_matrix(n, options.seed + static_cast<std::uint64_t>(k));
      InputDocument changed = doc;
      for (auto& g : changed.generators) g = linear_change(g, m);
      for (auto& g : changed.ideal_a) g = linear_change(g, m);
      ++sc.trials;
      if (analyze(changed, sub).verdict == a.verdict) ++sc.agreeing;
    }
    a.self_check = sc;
  }

  a.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return a;
}

std::string classify_report(const InputDocument& doc, const RunOptions& options, const Analysis& a, bool plain) {
  if (plain) {
    std::ostringstream os;
    os << "verdict: " << to_string(a.verdict) << "\n";
    os << "dimension: " << a.dimension << "\n";
    if (a.germ) {
      os << "embedding dimension: " << a.germ->emb_dim << "\n";
      if (a.germ->mult) os << "multiplicity: " << *a.germ->mult << "\n";
      if (a.germ->ade) os << "ade: " << *a.germ->ade << "\n";
    }
    for (const auto& c : a.certificate) os << "certificate: " << c.branch << ": " << c.evidence << "\n";
    if (a.jets) os << "jet bound: " << plain_jets(*a.jets) << "\n";
    else os << "jet bound: " << a.jets_note << "\n";
    if (a.newton) os << "newton: " << to_string(*a.newton) << "\n";
    for (const auto& v : a.violations) os << "cross-check violation: " << v << "\n";
    if (a.self_check)
      os << "self-check: " << a.self_check->agreeing << "/" << a.self_check->trials << " coordinate changes agree\n";
    if (options.timing) os << "elapsed: " << a.elapsed_ms << " ms\n";
    return os.str();
  }
  Json j = header("classify");
  j["input"] = input_json(doc);
  j["options"] = {{"levels", a.levels},
                  {"order", a.order},
                  {"search_bound", options.search_bound},
                  {"seed", options.seed},
                  {"self_checks", options.self_checks}};
  j["dimension"] = a.dimension;
  j["germ"] = a.germ ? germ_json(*a.germ) : Json(nullptr);
  if (a.jets) j["jet_bound"] = jets_json(*a.jets, a.levels);
  else j["jet_bound"] = {{"status", "SKIPPED"}, {"note", a.jets_note}};
  j["newton"] = a.newton ? Json(std::string(to_string(*a.newton))) : Json(nullptr);
  j["verdict"] = std::string(to_string(a.verdict));
  j["certificate"] = certificate_json(a.certificate);
  j["cross_check"] = {{"consistent", a.violations.empty()}, {"violations", a.violations}};
  if (a.self_check)
    j["self_check"] = {{"seed", a.self_check->seed}, {"trials", a.self_check->trials}, {"agreeing", a.self_check->agreeing}};
  if (options.timing) j["timing"] = {{"elapsed_ms", a.elapsed_ms}};
  return dump(j);
}

std::string jet_dim_report(const InputDocument& doc, int level, bool plain) {
  int d = jet_fiber_dim(doc.ideal(), level);
  if (plain) return "jet fiber dimension at level " + std::to_string(level) + ": " + std::to_string(d) + "\n";
  Json j = header("jet-dim");
  j["input"] = input_json(doc);
  j["level"] = level;
  j["jet_fiber_dim"] = d;
  return dump(j);
}

std::string mld_bound_report(const InputDocument& doc, const RunOptions& options, bool plain) {
  IdealPresentation ideal = doc.ideal();
  int dim = ideal_dimension(ideal);
  if (dim == kEmptyDimension) throw Error("empty germ");
  int levels = options.levels.value_or(doc.levels.value_or(dim == 1 ? 5 : 3));
  MldBound b = compute_bound(doc, ideal, dim, levels);
  if (plain) {
    std::ostringstream os;
    os << "mld bound: " << plain_jets(b) << "\n";
    for (const auto& t : b.terms)
      os << "  m=" << t.m << " n=" << t.n << " fiber_dim=" << t.fiber_dim << " value=" << t.value.get_str() << "\n";
    return os.str();
  }
  Json j = header("mld-bound");
  j["input"] = input_json(doc);
  j["dimension"] = dim;
  j["jet_bound"] = jets_json(b, levels);
  return dump(j);
}

std::string newton_report(const InputDocument& doc, bool plain) {
  if (doc.generators.size() != 1) throw Error("newton needs a single generator");
  NewtonCertificate c = newton_nonlc_certificate(doc.generators.front());
  if (plain) return "newton: " + std::string(to_string(c)) + "\n";
  Json j = header("newton");
  j["input"] = input_json(doc);
  j["newton"] = std::string(to_string(c));
  return dump(j);
}

std::string emb_dim_report(const InputDocument& doc, bool plain) {
  int e = emb_dim_at_origin(doc.ideal());
  if (plain) return "embedding dimension: " + std::to_string(e) + "\n";
  Json j = header("emb-dim");
  j["input"] = input_json(doc);
  j["emb_dim"] = e;
  return dump(j);
}

std::string cone_report(int n, int d, int a, bool plain) {
  ConeVerdict v = cone_criterion(n, d, a);
  if (plain)
    return std::string("canonical: ") + (v.canonical ? "yes" : "no") + "\nlog canonical: " + (v.log_canonical ? "yes" : "no") + "\n";
  Json j = header("cone");
  j["N"] = n;
  j["d"] = d;
  j["a"] = a;
  j["canonical"] = v.canonical;
  j["log_canonical"] = v.log_canonical;
  return dump(j);
}

std::string error_report(const std::string& command, const std::string& message, bool plain) {
  if (plain) return "error: " + message + "\n";
  Json j = header(command);
  j["error"] = message;
  return dump(j);
}

std::string batch_summary(const std::vector<BatchEntry>& entries, bool plain) {
  std::map<std::string, int> counts;
  for (const auto& e : entries) ++counts[e.verdict ? std::string(to_string(*e.verdict)) : "ERROR"];
  if (plain) {
    std::ostringstream os;
    os << "files: " << entries.size() << "\n";
    for (const auto& [k, v] : counts) os << k << ": " << v << "\n";
    return os.str();
  }
  Json j = header("batch");
  Json files = Json::array();
  for (const auto& e : entries) {
    Json f;
    f["file"] = e.file;
    if (e.verdict) f["verdict"] = std::string(to_string(*e.verdict));
    else f["error"] = e.error;
    files.push_back(f);
  }
  j["files"] = files;
  Json c = Json::object();
  for (const auto& [k, v] : counts) c[k] = v;
  j["counts"] = c;
  return dump(j);
}

}  // namespace mjsing::cli
