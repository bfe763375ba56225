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

// Monte Carlo experiments comparing the normalized count statistic with its
// limit law.

#ifndef GRAPHONLAB_SIMULATE_H_
#define GRAPHONLAB_SIMULATE_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphonlab/graph.h"
#include "graphonlab/graphon.h"
#include "graphonlab/json_io.h"
#include "graphonlab/limits.h"
#include "graphonlab/sampler.h"

namespace graphonlab {

inline constexpr int kSchemaVersion = 1;

// Two-sample Kolmogorov-Smirnov statistic sup_x |F_a(x) - F_b(x)|. Throws
// std::invalid_argument if either sample is empty.
double KsDistance(std::span<const double> a, std::span<const double> b);

struct ExperimentTolerances {
  double regularity = kDefaultRegularityTolerance;
  double ks_threshold = 0.08;
  // Relative tolerance on the empirical variance; unchecked when empty.
  std::optional<double> variance_relative;
  double mean_standard_errors = 4.0;
};

struct ExperimentConfig {
  LabeledGraph pattern = patterns::Star(2);
  KernelSpec kernel = ConstantKernel{0.5};
  int discretization = 256;
  std::int64_t n = 100;
  std::int64_t replicates = 1000;
  std::int64_t reference_draws = 100000;
  std::uint64_t master_seed = 1;
  ExperimentTolerances tolerances;
};

// Throws std::invalid_argument on violated constraints.
void ValidateConfig(const ExperimentConfig& config);
ExperimentConfig ConfigFromJson(const Json& j);
Json ToJson(const ExperimentConfig& config);

struct SampleSummary {
  double mean = 0.0;
  double variance = 0.0;
};
// Mean and unbiased variance.
SampleSummary Summarize(std::span<const double> values);

struct ExperimentResult {
  LimitLaw law;
  double regularity_defect = 0.0;
  double density = 0.0;
  double expected_count = 0.0;
  SampleSummary empirical;
  SampleSummary reference;
  double law_variance = 0.0;
  double raw_count_mean = 0.0;
  double raw_count_standard_error = 0.0;
  double ks_distance = 0.0;
  bool ks_pass = false;
  bool mean_pass = false;
  // Empty when the config does not check the variance.
  std::optional<bool> variance_pass;
  // Sorted by replicate index.
  std::vector<SampleRecord> records;

  bool passed() const {
    return ks_pass && mean_pass && variance_pass.value_or(true);
  }
};

// Replicate seeds and reference draws are derived from master_seed, so the
// result does not depend on the number of worker threads.
ExperimentResult RunExperiment(const ExperimentConfig& config);
ExperimentResult RunExperiment(const ExperimentConfig& config, int threads);

Json ToJson(const ExperimentResult& result, const ExperimentConfig& config);
// Columns replicate, seed, raw_count, normalized with a header row.
void WriteReplicatesCsv(std::ostream& out,
                        std::span<const SampleRecord> records);

// Shortest decimal text that reads back as the same double.
std::string FormatDouble(double x);

// GRAPHONLAB_THREADS if set to a positive integer, else the hardware
// concurrency (at least 1).
int DefaultWorkerCount();

}  // namespace graphonlab

#endif  // GRAPHONLAB_SIMULATE_H_
