#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mjsing/groebner.hpp"
#include "mjsing/normal_form.hpp"

namespace mjsing {

enum class Verdict { MjCanonical, MjLogCanonicalOnly, NotMjLogCanonical, Inconclusive };

/// The report token: MJ_CANONICAL, MJ_LOG_CANONICAL_ONLY, ...
std::string_view to_string(Verdict v);
bool is_log_canonical(Verdict v);

struct CertificateEntry {
  std::string branch;
  std::string evidence;
};

struct GermReport {
  int dim = 0;
  int emb_dim = 0;
  std::optional<int> mult;
  std::optional<int> tau;
  std::optional<int> m2;
  std::optional<int> tau2;
  std::optional<OrderValue> alpha;
  std::optional<OrderValue> beta;
  std::vector<PatternEntry> pattern;
  std::optional<std::string> ade;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<CertificateEntry> certificate;

  void cite(std::string branch, std::string evidence) {
    certificate.push_back({std::move(branch), std::move(evidence)});
  }
};

struct ClassifyOptions {
  /// Truncation order for power-series normal forms.
  int order = 12;
  /// Coefficient bound for the quadric-pair search at embedding dimension 4.
  int search_bound = 2;
};

/// N minus the rank of the Jacobian at the origin. Throws "germ not at origin".
int emb_dim_at_origin(const IdealPresentation& ideal);

struct ConeVerdict {
  bool canonical = false;
  bool log_canonical = false;
};

/// Cone over a smooth projectively normal base cut out by forms of degree a.
ConeVerdict cone_criterion(int n, int d, int a);

GermReport classify_curve_germ(const IdealPresentation& ideal);
GermReport classify_surface_germ(const IdealPresentation& ideal, const ClassifyOptions& options = {});

/// Equation of a germ with embedding dimension 3 in the three coordinates
/// left free after solving the equations with independent linear parts,
/// modulo degree order+1.
/// Empty when the remaining equations do not reduce to a single one.
std::optional<Polynomial> hypersurface_equation(const IdealPresentation& ideal, int order);

/// Degree of the projective scheme of a homogeneous ideal with
/// two-dimensional affine cone, from its Hilbert polynomial.
int curve_degree(const IdealPresentation& ideal);

}  // namespace mjsing
