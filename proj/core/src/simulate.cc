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

#include "graphonlab/simulate.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "graphonlab/density.h"
#include "graphonlab/random.h"

namespace graphonlab {
namespace {

constexpr std::uint64_t kReplicateDomain = 1;
constexpr std::uint64_t kReferenceDomain = 2;

// Runs body(i) for i in [0, count) on `threads` workers; rethrows the first
// exception raised by any worker.
template <typename Body>
void ParallelFor(std::int64_t count, int threads, Body body) {
  threads = static_cast<int>(std::clamp<std::int64_t>(threads, 1, count));
  if (threads == 1) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      try {
        for (std::int64_t i = next++; i < count; i = next++) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& worker : pool) worker.join();
  if (failure) std::rethrow_exception(failure);
}

template <typename T>
T Get(const Json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad config field \"") + key +
                                "\": " + e.what());
  }
}

}  // namespace

double KsDistance(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("KS distance needs two non-empty samples");
  }
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double sup = 0.0;
  // Both empirical CDFs are evaluated after consuming every tie at a point.
  while (i < x.size() || j < y.size()) {
    double point;
    if (j == y.size() || (i < x.size() && x[i] <= y[j])) {
      point = x[i];
    } else {
      point = y[j];
    }
    while (i < x.size() && x[i] == point) ++i;
    while (j < y.size() && y[j] == point) ++j;
    sup = std::max(sup, std::abs(i / nx - j / ny));
  }
  return sup;
}

void ValidateConfig(const ExperimentConfig& config) {
  if (config.replicates < 1) {
    throw std::invalid_argument("config: replicates must be >= 1");
  }
  if (config.n < config.pattern.vertex_count()) {
    throw std::invalid_argument("config: n must be >= |V(H)|");
  }
  if (config.reference_draws < 1000) {
    throw std::invalid_argument("config: reference_draws must be >= 1000");
  }
  if (config.discretization < 1) {
    throw std::invalid_argument("config: discretization must be >= 1");
  }
  ValidateKernelSpec(config.kernel);
}

ExperimentConfig ConfigFromJson(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be an object");
  const int version = Get<int>(j, "schema_version", kSchemaVersion);
  if (version != kSchemaVersion) {
    throw std::invalid_argument("unsupported schema_version " +
                                std::to_string(version));
  }
  ExperimentConfig config;
  if (!j.contains("pattern") || !j.contains("kernel")) {
    throw std::invalid_argument("config needs \"pattern\" and \"kernel\"");
  }
  const Json& pattern = j.at("pattern");
  config.pattern = pattern.is_string()
                       ? BuiltinPattern(pattern.get<std::string>())
                       : GraphFromJson(pattern);
  const Json& kernel = j.at("kernel");
  config.kernel = kernel.is_string()
                      ? ParseKernelShorthand(kernel.get<std::string>())
                      : KernelSpecFromJson(kernel);
  config.discretization = Get<int>(j, "discretization", config.discretization);
  config.n = Get<std::int64_t>(j, "n", config.n);
  config.replicates = Get<std::int64_t>(j, "replicates", config.replicates);
  config.reference_draws =
      Get<std::int64_t>(j, "reference_draws", config.reference_draws);
  config.master_seed = Get<std::uint64_t>(j, "master_seed", config.master_seed);
  if (j.contains("tolerances")) {
    const Json& t = j.at("tolerances");
    auto& tol = config.tolerances;
    tol.regularity = Get<double>(t, "regularity", tol.regularity);
    tol.ks_threshold = Get<double>(t, "ks_threshold", tol.ks_threshold);
    tol.mean_standard_errors =
        Get<double>(t, "mean_standard_errors", tol.mean_standard_errors);
    if (t.contains("variance_relative") && !t.at("variance_relative").is_null()) {
      tol.variance_relative = Get<double>(t, "variance_relative", 0.0);
    }
  }
  ValidateConfig(config);
  return config;
}

Json ToJson(const ExperimentConfig& config) {
  Json tol{{"regularity", config.tolerances.regularity},
           {"ks_threshold", config.tolerances.ks_threshold},
           {"mean_standard_errors", config.tolerances.mean_standard_errors},
           {"variance_relative", nullptr}};
  if (config.tolerances.variance_relative) {
    tol["variance_relative"] = *config.tolerances.variance_relative;
  }
  return Json{{"schema_version", kSchemaVersion},
              {"pattern", ToJson(config.pattern)},
              {"kernel", ToJson(config.kernel)},
              {"discretization", config.discretization},
              {"n", config.n},
              {"replicates", config.replicates},
              {"reference_draws", config.reference_draws},
              {"master_seed", config.master_seed},
              {"tolerances", tol}};
}

SampleSummary Summarize(std::span<const double> values) {
  SampleSummary s;
  if (values.empty()) return s;
  double sum = 0.0;
  for (double x : values) sum += x;
  s.mean = sum / values.size();
  if (values.size() > 1) {
    double squares = 0.0;
    for (double x : values) squares += (x - s.mean) * (x - s.mean);
    s.variance = squares / (values.size() - 1);
  }
  return s;
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  return RunExperiment(config, DefaultWorkerCount());
}

ExperimentResult RunExperiment(const ExperimentConfig& config, int threads) {
  ValidateConfig(config);
  const StepGraphon w = Materialize(config.kernel, config.discretization);
  const LabeledGraph& h = config.pattern;
  const LimitAnalysis analysis =
      AnalyzeLimit(h, w, config.tolerances.regularity);

  ExperimentResult result;
  result.law = analysis.law;
  result.regularity_defect = analysis.regularity.defect;
  result.density = analysis.regularity.density;
  result.expected_count = MeanCount(h, result.density, config.n);
  result.law_variance = LawVariance(result.law);
  const double exponent = ScaleExponent(result.law);

  const std::uint64_t replicate_root =
      SplitKey(config.master_seed, kReplicateDomain);
  result.records.resize(config.replicates);
  ParallelFor(config.replicates, threads, [&](std::int64_t i) {
    const std::uint64_t seed = SplitKey(replicate_root, i);
    const LabeledGraph g = SampleGraph(w, config.n, seed);
    result.records[i] =
        NormalizedStatistic(h, g, result.expected_count, exponent, seed);
  });

  std::vector<double> normalized, raw;
  normalized.reserve(result.records.size());
  raw.reserve(result.records.size());
  for (const auto& r : result.records) {
    normalized.push_back(r.normalized);
    raw.push_back(static_cast<double>(r.raw_count));
  }
  result.empirical = Summarize(normalized);
  const SampleSummary raw_summary = Summarize(raw);
  result.raw_count_mean = raw_summary.mean;
  result.raw_count_standard_error =
      std::sqrt(raw_summary.variance / static_cast<double>(raw.size()));

  const std::uint64_t reference_seed =
      SplitKey(config.master_seed, kReferenceDomain);
  std::vector<double> reference(config.reference_draws);
  ParallelFor(config.reference_draws, threads, [&](std::int64_t i) {
    reference[i] = SampleLimitDraw(result.law, reference_seed, i);
  });
  result.reference = Summarize(reference);
  result.ks_distance = KsDistance(normalized, reference);

  const auto& tol = config.tolerances;
  result.ks_pass = result.ks_distance < tol.ks_threshold;
  result.mean_pass = std::abs(result.raw_count_mean - result.expected_count) <=
                     tol.mean_standard_errors * result.raw_count_standard_error;
  if (tol.variance_relative) {
    result.variance_pass =
        std::abs(result.empirical.variance - result.law_variance) <=
        *tol.variance_relative * result.law_variance;
  }
  return result;
}

Json ToJson(const ExperimentResult& result, const ExperimentConfig& config) {
  Json records = Json::array();
  for (const auto& r : result.records) {
    records.push_back(Json{{"n", r.n},
                           {"seed", r.seed},
                           {"raw_count", r.raw_count},
                           {"normalized", r.normalized}});
  }
  Json checks{{"ks", result.ks_pass},
              {"mean", result.mean_pass},
              {"variance", nullptr},
              {"passed", result.passed()}};
  if (result.variance_pass) checks["variance"] = *result.variance_pass;
  return Json{
      {"schema_version", kSchemaVersion},
      {"config", ToJson(config)},
      {"limit_law", ToJson(result.law)},
      {"regularity_defect", result.regularity_defect},
      {"density", result.density},
      {"expected_count", result.expected_count},
      {"raw_count_mean", result.raw_count_mean},
      {"raw_count_standard_error", result.raw_count_standard_error},
      {"empirical", {{"mean", result.empirical.mean},
                     {"variance", result.empirical.variance}}},
      {"reference", {{"mean", result.reference.mean},
                     {"variance", result.reference.variance}}},
      {"law_variance", result.law_variance},
      {"ks_distance", result.ks_distance},
      {"checks", checks},
      {"records", records}};
}

std::string FormatDouble(double x) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
  if (ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buffer, end);
}

void WriteReplicatesCsv(std::ostream& out,
                        std::span<const SampleRecord> records) {
  out << "replicate,seed,raw_count,normalized\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    out << i << ',' << records[i].seed << ',' << records[i].raw_count << ','
        << FormatDouble(records[i].normalized) << '\n';
  }
}

int DefaultWorkerCount() {
  if (const char* env = std::getenv("GRAPHONLAB_THREADS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace graphonlab
