// Copyright 2026 The Graphonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// graphonlab: command line front end.
//
//   graphonlab density     --pattern k12.json --kernel two_block:0.5
//   graphonlab regularity  --pattern k12 --kernel product --m 256
//   graphonlab constants   --pattern k12 --kernel two_block:0.5
//   graphonlab spectrum    --kernel two_block:0.5 [--pattern k12]
//   graphonlab simulate    --config exp.json --out results/
//   graphonlab selftest
//
// Exit codes: 0 success, 1 failed check, 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "graphonlab/density.h"
#include "graphonlab/graph.h"
#include "graphonlab/graphon.h"
#include "graphonlab/json_io.h"
#include "graphonlab/limits.h"
#include "graphonlab/simulate.h"
#include "graphonlab/spectral.h"
#include "selftest.h"

namespace {

using namespace graphonlab;

constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;

struct KernelOptions {
  std::string kernel;
  int m = 256;
};

MultiGraph LoadPattern(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    return MultiGraphFromJson(ReadJsonFile(arg));
  }
  return MultiGraph(BuiltinPattern(arg));
}

LabeledGraph LoadSimplePattern(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    return GraphFromJson(ReadJsonFile(arg));
  }
  return BuiltinPattern(arg);
}

StepGraphon LoadKernel(const KernelOptions& opts) {
  if (std::filesystem::is_regular_file(opts.kernel)) {
    const Json j = ReadJsonFile(opts.kernel);
    if (j.contains("kind")) return Materialize(KernelSpecFromJson(j), opts.m);
    return GraphonFromJson(j);
  }
  return Materialize(ParseKernelShorthand(opts.kernel), opts.m);
}

void AddKernelOptions(CLI::App* cmd, KernelOptions& opts) {
  cmd->add_option("--kernel", opts.kernel,
                  "constant:P | product | two_block:P | JSON file")
      ->required();
  cmd->add_option("--m", opts.m, "blocks used to discretize analytic kernels")
      ->check(CLI::PositiveNumber);
}

std::string Join(const std::vector<double>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += FormatDouble(values[i]);
  }
  return out + "]";
}

int RunDensity(const std::string& pattern, const KernelOptions& kernel) {
  std::cout << FormatDouble(HomDensity(LoadPattern(pattern), LoadKernel(kernel)))
            << "\n";
  return 0;
}

int RunRegularity(const std::string& pattern, const KernelOptions& kernel,
                  double tolerance) {
  const RegularityReport report =
      RegularityDefect(LoadSimplePattern(pattern), LoadKernel(kernel));
  std::cout << "density = " << FormatDouble(report.density) << "\n"
            << "defect = " << FormatDouble(report.defect) << "\n";
  if (report.degenerate()) {
    std::cout << "verdict = degenerate (" << DegeneracyName(report.degeneracy)
              << ")\n";
  } else {
    std::cout << "verdict = "
              << (report.IsRegular(tolerance) ? "regular" : "not regular")
              << "\n";
  }
  return 0;
}

int RunConstants(const std::string& pattern, const KernelOptions& kernel,
                 double tolerance) {
  const LabeledGraph h = LoadSimplePattern(pattern);
  const LimitAnalysis a = AnalyzeLimit(h, LoadKernel(kernel), tolerance);
  std::cout << "density = " << FormatDouble(a.regularity.density) << "\n"
            << "regularity_defect = " << FormatDouble(a.regularity.defect)
            << "\n"
            << "regular = " << (a.regular ? "true" : "false") << "\n"
            << "tau2 = " << FormatDouble(a.tau2) << "\n"
            << "sigma2 = " << FormatDouble(a.sigma2) << "\n"
            << "d_WH = " << FormatDouble(a.degree_eigenvalue.value)
            << (a.regular ? "" : " (advisory: W is not H-regular)") << "\n";
  if (a.two_point_spectrum) {
    std::cout << "spectrum = " << Join(a.two_point_spectrum->eigenvalues)
              << "\n"
              << "spec_minus = " << Join(*a.spec_minus) << "\n";
  } else {
    std::cout << "spec_minus = n/a\n";
  }
  std::cout << "law = " << ToJson(a.law).dump() << "\n";
  return 0;
}

int RunSpectrum(const std::optional<std::string>& pattern,
                const KernelOptions& kernel) {
  StepGraphon w = LoadKernel(kernel);
  if (pattern) w = TwoPointGraphon(LoadSimplePattern(*pattern), w);
  std::cout << ToJson(ComputeSpectrum(w)).dump(2) << "\n";
  return 0;
}

int RunSimulate(const std::string& config_path, const std::string& out_dir,
                int threads) {
  const ExperimentConfig config = ConfigFromJson(ReadJsonFile(config_path));
  const ExperimentResult result =
      RunExperiment(config, threads > 0 ? threads : DefaultWorkerCount());
  std::filesystem::create_directories(out_dir);
  const auto dir = std::filesystem::path(out_dir);
  {
    std::ofstream json(dir / "result.json");
    json << ToJson(result, config).dump(2) << "\n";
  }
  {
    std::ofstream csv(dir / "replicates.csv");
    WriteReplicatesCsv(csv, result.records);
  }
  std::cout << "law = " << ToJson(result.law).dump() << "\n"
            << "ks_distance = " << FormatDouble(result.ks_distance)
            << (result.ks_pass ? " (pass)" : " (FAIL)") << "\n"
            << "empirical_variance = "
            << FormatDouble(result.empirical.variance) << "\n"
            << "law_variance = " << FormatDouble(result.law_variance) << "\n"
            << "raw_count_mean = " << FormatDouble(result.raw_count_mean)
            << " expected " << FormatDouble(result.expected_count)
            << (result.mean_pass ? " (pass)" : " (FAIL)") << "\n";
  if (result.variance_pass) {
    std::cout << "variance check " << (*result.variance_pass ? "pass" : "FAIL")
              << "\n";
  }
  return result.passed() ? 0 : kExitFailedCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphonlab: subgraph count fluctuations in W-random graphs"};
  app.require_subcommand(1);

  std::string pattern;
  KernelOptions kernel;
  double tolerance = kDefaultRegularityTolerance;

  auto* density = app.add_subcommand("density", "print t(F, W)");
  density->add_option("--pattern", pattern, "graph JSON file or builtin name")
      ->required();
  AddKernelOptions(density, kernel);

  auto* regularity =
      app.add_subcommand("regularity", "print the H-regularity defect");
  regularity->add_option("--pattern", pattern)->required();
  AddKernelOptions(regularity, kernel);
  regularity->add_option("--tol", tolerance, "regularity tolerance");

  auto* constants = app.add_subcommand(
      "constants", "print tau2, sigma2, d_WH, Spec^- and the limit law");
  constants->add_option("--pattern", pattern)->required();
  AddKernelOptions(constants, kernel);
  constants->add_option("--tol", tolerance, "regularity tolerance");

  std::optional<std::string> spectrum_pattern;
  auto* spectrum = app.add_subcommand(
      "spectrum", "print the spectrum of W, or of W_H with --pattern");
  spectrum->add_option("--pattern", spectrum_pattern);
  AddKernelOptions(spectrum, kernel);

  std::string config_path, out_dir = ".";
  int threads = 0;
  auto* simulate =
      app.add_subcommand("simulate", "run a Monte Carlo experiment");
  simulate->add_option("--config", config_path, "experiment JSON")->required();
  simulate->add_option("--out", out_dir, "output directory");
  simulate->add_option("--threads", threads,
                       "worker threads (default: GRAPHONLAB_THREADS or all)");

  auto* selftest =
      app.add_subcommand("selftest", "run the closed-form oracle suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*density) return RunDensity(pattern, kernel);
    if (*regularity) return RunRegularity(pattern, kernel, tolerance);
    if (*constants) return RunConstants(pattern, kernel, tolerance);
    if (*spectrum) return RunSpectrum(spectrum_pattern, kernel);
    if (*simulate) return RunSimulate(config_path, out_dir, threads);
    if (*selftest) {
      return graphonlab::tools::RunSelfTest(std::cout) ? 0 : kExitFailedCheck;
    }
  } catch (const DegenerateGraphonError& e) {
    std::cerr << "error: " << e.what() << " [" << DegeneracyName(e.kind())
              << "]\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailedCheck;
  }
  std::cerr << app.help();
  return kExitUsage;
}
