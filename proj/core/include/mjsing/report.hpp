#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mjsing/classify.hpp"
#include "mjsing/jets.hpp"
#include "mjsing/newton.hpp"
#include "mjsing/parser.hpp"

namespace mjsing::cli {

std::string version();

struct RunOptions {
  /// Jet levels; defaults to the document's value, then 5 for curves and 3 otherwise.
  std::optional<int> levels;
  /// Truncation order; defaults to the document's value, then 12.
  std::optional<int> order;
  int search_bound = 2;
  bool timing = true;
  std::uint64_t seed = 1;
  /// Number of random coordinate changes re-classified as a self-check
  /// (curve and surface germs only).
  int self_checks = 0;
  /// Skip the jet bound when classifying a curve or surface germ.
  bool skip_jets = false;
};

struct SelfCheck {
  int trials = 0;
  int agreeing = 0;
  std::uint64_t seed = 0;
};

struct Analysis {
  int dimension = 0;
  int levels = 0;
  int order = 0;
  std::optional<GermReport> germ;
  std::optional<MldBound> jets;
  std::string jets_note;
  std::optional<NewtonCertificate> newton;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<CertificateEntry> certificate;
  /// Disagreements between the classifier and the jet or Newton certificates.
  std::vector<std::string> violations;
  std::optional<SelfCheck> self_check;
  double elapsed_ms = 0;
};

/// Runs the classifier for curve and surface germs and the jet and Newton
/// tests in every dimension. Throws Error for an empty or zero-dimensional germ.
Analysis analyze(const InputDocument& doc, const RunOptions& options);

/// 0 for a verdict, 2 for INCONCLUSIVE.
int exit_code(Verdict v);

std::string classify_report(const InputDocument& doc, const RunOptions& options, const Analysis& a, bool plain);

std::string jet_dim_report(const InputDocument& doc, int level, bool plain);
std::string mld_bound_report(const InputDocument& doc, const RunOptions& options, bool plain);
std::string newton_report(const InputDocument& doc, bool plain);
std::string emb_dim_report(const InputDocument& doc, bool plain);
std::string cone_report(int n, int d, int a, bool plain);
std::string error_report(const std::string& command, const std::string& message, bool plain);

struct BatchEntry {
  std::string file;
  std::optional<Verdict> verdict;
  std::string error;
};

std::string batch_summary(const std::vector<BatchEntry>& entries, bool plain);

}  // namespace mjsing::cli
