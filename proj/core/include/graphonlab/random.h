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

// Counter-based random streams. A stream is identified by a 64-bit key and
// produces Mix(key, counter) for counter = 0, 1, 2, ...; any stream can be
// split into independent child streams by hashing (key, index), so parallel
// work can be assigned streams without coordination.

#ifndef GRAPHONLAB_RANDOM_H_
#define GRAPHONLAB_RANDOM_H_

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace graphonlab {

// SplitMix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Key of child stream `index` of the stream keyed `parent`.
constexpr std::uint64_t SplitKey(std::uint64_t parent, std::uint64_t index) {
  return Mix64(Mix64(parent ^ 0x6a09e667f3bcc909ULL) +
               0x9e3779b97f4a7c15ULL * (index + 1));
}

class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key) : key_(Mix64(key)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    return Mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_);
  }

  // Uniform on (0, 1]; never returns 0, always may return 1.
  double UniformOpenClosed() {
    return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53;
  }

  // Uniform on [0, 1).
  double Uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Standard normal by Box-Muller; both outputs of a pair are used.
  double Normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(UniformOpenClosed()));
    const double angle = 2.0 * std::numbers::pi * Uniform();
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace graphonlab

#endif  // GRAPHONLAB_RANDOM_H_
