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

// JSON encodings of graphs, graphons, kernel specs, spectra and limit laws.
//
//   graph       {"n": 3, "edges": [[1, 2], [1, 3]]}
//   multigraph  {"n": 3, "edges": [[1, 2], [1, 3]], "mult": [2, 1]}
//   graphon     {"pi": [0.5, 0.5], "B": [[0.5, 0], [0, 0.5]]}
//   kernel      {"kind": "constant" | "product" | "two_block" | "custom", ...}
//   spectrum    {"eigenvalues": [...], "eigenvectors": [[...]], "pi": [...]}
//   limit law   {"kind": "gaussian" | "mixture", "tau2" | "sigma2": x,
//                "lambdas": [...], "scale_exponent": e}
//
// Decoders throw std::invalid_argument on malformed input.

#ifndef GRAPHONLAB_JSON_IO_H_
#define GRAPHONLAB_JSON_IO_H_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "graphonlab/graph.h"
#include "graphonlab/graphon.h"
#include "graphonlab/limits.h"
#include "graphonlab/spectral.h"

namespace graphonlab {

using Json = nlohmann::json;

Json ToJson(const LabeledGraph& g);
Json ToJson(const MultiGraph& g);
Json ToJson(const StepGraphon& w);
Json ToJson(const KernelSpec& spec);
Json ToJson(const Spectrum& spectrum);
Json ToJson(const LimitLaw& law);

LabeledGraph GraphFromJson(const Json& j);
// Accepts plain graphs too (all multiplicities 1).
MultiGraph MultiGraphFromJson(const Json& j);
StepGraphon GraphonFromJson(const Json& j);
KernelSpec KernelSpecFromJson(const Json& j);
LimitLaw LimitLawFromJson(const Json& j);

// Command-line kernel shorthand: "constant:P", "product", "two_block:P".
KernelSpec ParseKernelShorthand(std::string_view text);

// Builtin pattern names: "k<r>" with a single digit r (clique K_r), "k1<l>"
// or "star<l>" (star K_{1,l}), "p<e>" (path with e edges). Throws
// std::invalid_argument for anything else.
LabeledGraph BuiltinPattern(std::string_view name);

Json ReadJsonFile(const std::string& path);

}  // namespace graphonlab

#endif  // GRAPHONLAB_JSON_IO_H_
