// mjsing: command line front end for the singularity classifier.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "mjsing/groebner.hpp"
#include "mjsing/report.hpp"

namespace fs = std::filesystem;
using namespace mjsing;
using namespace mjsing::cli;

namespace {

struct FileResult {
  std::string report;
  std::optional<Verdict> verdict;
  std::string error;
};

FileResult classify_file(const fs::path& path, const RunOptions& options, bool plain) {
  FileResult r;
  try {
    InputDocument doc = load_document(path);
    Analysis a = analyze(doc, options);
    r.verdict = a.verdict;
    r.report = classify_report(doc, options, a, plain);
  } catch (const std::exception& e) {
    r.error = e.what();
    r.report = error_report("classify", path.string() + ": " + r.error, plain);
  }
  return r;
}

int run_batch(const fs::path& dir, const RunOptions& options, bool plain, const std::string& out_dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (!out_dir.empty()) fs::create_directories(out_dir);

  std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  std::vector<BatchEntry> summary;
  bool any_error = false, any_inconclusive = false;
  for (std::size_t begin = 0; begin < files.size(); begin += width) {
    std::size_t end = std::min(files.size(), begin + width);
    std::vector<std::future<FileResult>> tasks;
    for (std::size_t i = begin; i < end; ++i)
      tasks.push_back(std::async(std::launch::async, classify_file, files[i], options, plain));
    for (std::size_t i = begin; i < end; ++i) {
      FileResult r = tasks[i - begin].get();
      if (out_dir.empty()) {
        if (plain) std::cout << "==> " << files[i].filename().string() << " <==\n";
        std::cout << r.report;
      } else {
        std::ofstream(fs::path(out_dir) / (files[i].stem().string() + (plain ? ".txt" : ".json"))) << r.report;
      }
      any_error = any_error || !r.verdict;
      any_inconclusive = any_inconclusive || r.verdict == Verdict::Inconclusive;
      summary.push_back({files[i].filename().string(), r.verdict, r.error});
    }
  }
  std::cout << batch_summary(summary, plain);
  return any_error ? 1 : any_inconclusive ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mather-Jacobian classification of curve and surface singularities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());

  bool plain = false;
  bool no_timing = false;
  app.add_flag("--plain", plain, "Human-readable summary instead of JSON");
  app.add_flag("--no-timing", no_timing, "Omit the timing field");

  RunOptions options;
  std::string path;
  std::string out_dir;
  int level = 1;
  int levels = 0;
  int order = 0;
  int cone_n = 0, cone_d = 0, cone_a = 0;

  auto* classify = app.add_subcommand("classify", "Classify a germ, or every file in a directory");
  classify->add_option("input", path, "Input file or directory")->required();
  classify->add_option("--levels,--level", levels, "Jet levels for the corroborating bound")->check(CLI::PositiveNumber);
  classify->add_option("--order", order, "Truncation order of power-series computations")->check(CLI::PositiveNumber);
  classify->add_option("--search-bound", options.search_bound, "Coefficient bound of the quadric-pair search")
      ->check(CLI::NonNegativeNumber);
  classify->add_option("--seed", options.seed, "Seed of the random coordinate changes");
  classify->add_option("--self-check", options.self_checks, "Re-classify after this many random coordinate changes")
      ->check(CLI::NonNegativeNumber);
  classify->add_option("--out-dir", out_dir, "Batch mode: write one report per input file here");

  auto* jet_dim = app.add_subcommand("jet-dim", "Dimension of the jets over the origin");
  jet_dim->add_option("input", path, "Input file")->required()->check(CLI::ExistingFile);
  jet_dim->add_option("--level,--levels", level, "Jet level")->check(CLI::PositiveNumber);

  auto* mld = app.add_subcommand("mld-bound", "Upper bound for the minimal log discrepancy");
  mld->add_option("input", path, "Input file")->required()->check(CLI::ExistingFile);
  mld->add_option("--levels,--level", levels, "Highest jet level")->check(CLI::PositiveNumber);

  auto* newton = app.add_subcommand("newton", "Newton polygon certificate of a hypersurface");
  newton->add_option("input", path, "Input file")->required()->check(CLI::ExistingFile);

  auto* emb = app.add_subcommand("emb-dim", "Embedding dimension at the origin");
  emb->add_option("input", path, "Input file")->required()->check(CLI::ExistingFile);

  auto* cone = app.add_subcommand("cone", "Criterion for cones over smooth bases");
  cone->add_option("--N", cone_n, "Ambient dimension of the cone")->required();
  cone->add_option("--d", cone_d, "Dimension of the cone")->required();
  cone->add_option("--a", cone_a, "Degree of the defining forms")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  options.timing = !no_timing;
  if (levels > 0) options.levels = levels;
  if (order > 0) options.order = order;

  std::string command = app.get_subcommands().front()->get_name();
  try {
    if (*classify) {
      if (fs::is_directory(path)) return run_batch(path, options, plain, out_dir);
      InputDocument doc = load_document(path);
      Analysis a = analyze(doc, options);
      std::cout << classify_report(doc, options, a, plain);
      return exit_code(a.verdict);
    }
    if (*jet_dim) std::cout << jet_dim_report(load_document(path), level, plain);
    if (*mld) std::cout << mld_bound_report(load_document(path), options, plain);
    if (*newton) std::cout << newton_report(load_document(path), plain);
    if (*emb) std::cout << emb_dim_report(load_document(path), plain);
    if (*cone) std::cout << cone_report(cone_n, cone_d, cone_a, plain);
    return 0;
  } catch (const std::exception& e) {
    std::cout << error_report(command, e.what(), plain);
    std::cerr << "mjsing: " << e.what() << "\n";
    return 1;
  }
}
