/*
 * Copyright 2026 the ksym developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string_view>

#include "ksym/rational.hpp"

namespace ksym {

uint64_t fnv1a64(std::string_view data);

/// Mixes a run seed with a purpose label so independent sampling loops never
/// share a stream. Identical (seed, label) always yields identical samples,
/// regardless of thread count; std::random is avoided because its
/// distributions are not bit-stable across standard libraries.
uint64_t subseed(uint64_t seed, std::string_view label);

class Sampler {
 public:
  explicit Sampler(uint64_t seed) : state_(seed) {}

  uint64_t next_u64();

  /// Uniform in [lo, hi], both inclusive. lo <= hi required.
  int64_t uniform_int(int64_t lo, int64_t hi);

  /// Numerator in [-bound, bound], denominator in [1, bound]; canonicalized.
  Rational rational(int bound);

  QVec vector(int dim, int bound);

  /// Vector with at least one nonzero coordinate.
  QVec nonzero_vector(int dim, int bound);

 private:
  uint64_t state_;
};

}  // namespace ksym
