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

#include "graphonlab/json_io.h"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <type_traits>

namespace graphonlab {
namespace {

template <typename T>
T Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing JSON field \"") + key +
                                "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON field \"") + key +
                                "\": " + e.what());
  }
}

std::vector<Edge> EdgeList(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& pair : Field<std::vector<std::vector<int>>>(j, "edges")) {
    if (pair.size() != 2) {
      throw std::invalid_argument("each edge must be a pair [a, b]");
    }
    edges.emplace_back(pair[0], pair[1]);
  }
  return edges;
}

double ParseNumber(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: " + std::string(text));
  }
  return value;
}

int ParseDigits(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad pattern size: " + std::string(text));
  }
  return value;
}

}  // namespace

Json ToJson(const LabeledGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

Json ToJson(const MultiGraph& g) {
  Json edges = Json::array();
  Json mult = Json::array();
  for (const auto& we : g.edges()) {
    edges.push_back({we.edge.first, we.edge.second});
    mult.push_back(we.multiplicity);
  }
  return Json{{"n", g.vertex_count()}, {"edges", edges}, {"mult", mult}};
}

Json ToJson(const StepGraphon& w) {
  return Json{{"pi", w.block_weights()}, {"B", w.values()}};
}

Json ToJson(const KernelSpec& spec) {
  return std::visit(
      [](const auto& kernel) -> Json {
        using T = std::decay_t<decltype(kernel)>;
        if constexpr (std::is_same_v<T, ConstantKernel>) {
          return {{"kind", "constant"}, {"p", kernel.p}};
        } else if constexpr (std::is_same_v<T, ProductKernel>) {
          return {{"kind", "product"}};
        } else if constexpr (std::is_same_v<T, TwoBlockDiagonalKernel>) {
          return {{"kind", "two_block"}, {"p", kernel.p}};
        } else {
          return {{"kind", "custom"},
                  {"pi", kernel.block_weights},
                  {"B", kernel.values}};
        }
      },
      spec);
}

Json ToJson(const Spectrum& spectrum) {
  return Json{{"eigenvalues", spectrum.eigenvalues},
              {"eigenvectors", spectrum.eigenvectors},
              {"pi", spectrum.block_weights}};
}

Json ToJson(const LimitLaw& law) {
  if (const auto* g = std::get_if<GaussianLaw>(&law)) {
    return Json{{"kind", "gaussian"},
                {"tau2", g->tau2},
                {"lambdas", Json::array()},
                {"scale_exponent", g->scale_exponent}};
  }
  const auto& m = std::get<MixtureLaw>(law);
  return Json{{"kind", "mixture"},
              {"sigma2", m.sigma2},
              {"lambdas", m.lambdas},
              {"scale_exponent", m.scale_exponent}};
}

LabeledGraph GraphFromJson(const Json& j) {
  if (j.contains("mult")) {
    for (int m : Field<std::vector<int>>(j, "mult")) {
      if (m != 1) {
        throw std::invalid_argument("expected a simple graph, got multiplicity " +
                                    std::to_string(m));
      }
    }
  }
  return LabeledGraph(Field<int>(j, "n"), EdgeList(j));
}

MultiGraph MultiGraphFromJson(const Json& j) {
  const std::vector<Edge> edges = EdgeList(j);
  std::vector<int> mult(edges.size(), 1);
  if (j.contains("mult")) {
    mult = Field<std::vector<int>>(j, "mult");
    if (mult.size() != edges.size()) {
      throw std::invalid_argument("\"mult\" must have one entry per edge");
    }
  }
  std::vector<MultiGraph::WeightedEdge> weighted;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    weighted.push_back({edges[i], mult[i]});
  }
  return MultiGraph(Field<int>(j, "n"), std::move(weighted));
}

StepGraphon GraphonFromJson(const Json& j) {
  return StepGraphon(Field<std::vector<double>>(j, "pi"),
                     Field<std::vector<std::vector<double>>>(j, "B"));
}

KernelSpec KernelSpecFromJson(const Json& j) {
  const auto kind = Field<std::string>(j, "kind");
  KernelSpec spec;
  if (kind == "constant") {
    spec = ConstantKernel{Field<double>(j, "p")};
  } else if (kind == "product") {
    spec = ProductKernel{};
  } else if (kind == "two_block") {
    spec = TwoBlockDiagonalKernel{Field<double>(j, "p")};
  } else if (kind == "custom") {
    spec = CustomGridKernel{Field<std::vector<double>>(j, "pi"),
                            Field<std::vector<std::vector<double>>>(j, "B")};
  } else {
    throw std::invalid_argument("unknown kernel kind \"" + kind + "\"");
  }
  ValidateKernelSpec(spec);
  return spec;
}

LimitLaw LimitLawFromJson(const Json& j) {
  const auto kind = Field<std::string>(j, "kind");
  const auto exponent = Field<double>(j, "scale_exponent");
  if (kind == "gaussian") return GaussianLaw{Field<double>(j, "tau2"), exponent};
  if (kind == "mixture") {
    return MixtureLaw{Field<double>(j, "sigma2"),
                      Field<std::vector<double>>(j, "lambdas"), exponent};
  }
  throw std::invalid_argument("unknown limit law kind \"" + kind + "\"");
}

KernelSpec ParseKernelShorthand(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const bool has_arg = colon != std::string_view::npos;
  KernelSpec spec;
  if (kind == "product" && !has_arg) {
    spec = ProductKernel{};
  } else if (kind == "constant" && has_arg) {
    spec = ConstantKernel{ParseNumber(text.substr(colon + 1))};
  } else if (kind == "two_block" && has_arg) {
    spec = TwoBlockDiagonalKernel{ParseNumber(text.substr(colon + 1))};
  } else {
    throw std::invalid_argument(
        "bad kernel \"" + std::string(text) +
        "\"; expected constant:P, product, two_block:P or a JSON file");
  }
  ValidateKernelSpec(spec);
  return spec;
}

LabeledGraph BuiltinPattern(std::string_view name) {
  if (name.size() == 2 && name[0] == 'k') return patterns::Complete(ParseDigits(name.substr(1)));
  if (name.size() == 3 && name.substr(0, 2) == "k1") {
    return patterns::Star(ParseDigits(name.substr(2)));
  }
  if (name.starts_with("star")) return patterns::Star(ParseDigits(name.substr(4)));
  if (name.size() >= 2 && name[0] == 'p') return patterns::Path(ParseDigits(name.substr(1)));
  throw std::invalid_argument("unknown pattern \"" + std::string(name) + "\"");
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace graphonlab
