// fimod: bound tables, testbed generation and analysis of truncated FI-modules.
//
// Exit codes: 0 success, 2 invalid input file, 3 truncation cap exceeded,
// 4 unknown preset or bad command line.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <regex>
#include <string>

#include <CLI11.hpp>

#include "fimod/analysis.hpp"
#include "fimod/config_cohomology.hpp"
#include "fimod/io.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitCap = 3;
constexpr int kExitUsage = 4;

int truncation_cap() {
  const char* env = std::getenv("FIMOD_TRUNCATION_CAP");
  if (env == nullptr || *env == '\0') return fimod::kDefaultTruncationCap;
  try {
    std::size_t used = 0;
    int cap = std::stoi(env, &used);
    if (used == std::string(env).size() && cap >= 0) return cap;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError("FIMOD_TRUNCATION_CAP", "must be a nonnegative integer");
}

std::pair<int, int> parse_window(const std::string& s) {
  static const std::regex re(R"((\d+)\.\.(\d+))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw CLI::ValidationError("--window", "expected A..B");
  return {std::stoi(m[1]), std::stoi(m[2])};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Truncated FI-modules over Q: degree bounds, testbeds and stability analysis"};
  app.require_subcommand(1);

  std::string format = "json";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* bounds = app.add_subcommand("bounds", "Derive bound tables (mcg, mcg-boundary, diffeo, hyperelliptic, config)");
  std::string preset;
  long k = 0, q = 0;
  int lambda = 1, dim = 2, orientable = 1;
  bounds->add_option("preset", preset, "Preset name or 'config'")->required();
  bounds->add_option("--k", k, "Cohomological degree")->check(CLI::NonNegativeNumber);
  bounds->add_option("--lambda", lambda, "1 for orientable surfaces, 0 otherwise")->check(CLI::IsMember({0, 1}));
  bounds->add_option("--dim", dim, "Manifold dimension (config)")->check(CLI::Range(2, 1 << 20));
  bounds->add_option("--orientable", orientable, "Orientability (config)")->check(CLI::IsMember({0, 1}));
  bounds->add_option("--q", q, "Cohomological degree (config)")->check(CLI::NonNegativeNumber);
  add_format(bounds);

  auto* generate = app.add_subcommand("generate", "Write H^k(PConf_n(disk)) for n <= N as an FI-module file");
  int genK = 0, maxLevel = 0;
  std::string out;
  generate->add_option("--k", genK, "Cohomological degree")->required()->check(CLI::NonNegativeNumber);
  generate->add_option("--max-level", maxLevel, "Truncation level N")->required()->check(CLI::NonNegativeNumber);
  generate->add_option("--out", out, "Output path")->required();

  auto* analyze = app.add_subcommand("analyze", "Observed degrees and representation stability of a module file");
  std::string path, window;
  int maxDegree = 4;
  analyze->add_option("path", path, "FI-module JSON file")->required();
  analyze->add_option("--max-degree", maxDegree, "Largest character polynomial degree tried")
      ->check(CLI::NonNegativeNumber);
  analyze->add_option("--window", window, "Fit window A..B (default: stabilization onset..N)");
  add_format(analyze);

  auto* table = app.add_subcommand("character-table", "Character table of S_n as JSON");
  int tableN = 0;
  table->add_option("--n", tableN, "n")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const int cap = truncation_cap();
    if (bounds->parsed()) {
      if (preset == "config") {
        std::cout << (format == "json" ? fimod::dump(fimod::config_bounds_to_json(dim, orientable == 1, q))
                                       : fimod::config_bounds_to_text(dim, orientable == 1, q));
      } else {
        auto t = fimod::preset_pipeline(fimod::parse_preset(preset), k, lambda);
        std::cout << (format == "json" ? fimod::dump(fimod::bound_table_to_json(t)) : fimod::bound_table_to_text(t));
      }
    } else if (generate->parsed()) {
      auto v = fimod::build_conf_module({genK, maxLevel}, cap);
      fimod::save_module(v, out);
      // The file has to load back through the validating reader.
      if (fimod::load_module(out).dims() != v.dims()) {
        std::cerr << "error: " << out << " does not round-trip\n";
        return kExitInvalid;
      }
    } else if (analyze->parsed()) {
      fimod::AnalysisOptions opts;
      opts.maxDegree = maxDegree;
      opts.cap = cap;
      if (!window.empty()) opts.window = parse_window(window);
      auto v = fimod::load_module(path);
      auto a = fimod::analyze(v, opts);
      std::cout << (format == "json" ? fimod::dump(fimod::analysis_to_json(a)) : fimod::analysis_to_text(a));
    } else if (table->parsed()) {
      std::cout << fimod::dump(fimod::character_table_to_json(fimod::character_table(tableN, cap)));
    }
  } catch (const fimod::UnknownPreset& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fimod::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const fimod::InvalidModuleFile& e) {
    std::cerr << "invalid module: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return 0;
}
