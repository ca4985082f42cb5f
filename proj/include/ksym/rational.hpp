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

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ksym {

// Every quantity in the engine is an exact rational; there is no floating
// point on any verification path.
using Rational = mpq_class;
using Integer = mpz_class;
using QVec = std::vector<Rational>;

/// Parses "p/q", "p", or a decimal-free integer string. Throws on junk.
Rational parse_rational(const std::string& text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rational_str(const Rational& r);

/// True iff r = s^2 for some rational s; when so and root != nullptr, *root = s >= 0.
bool rational_is_square(const Rational& r, Rational* root = nullptr);

std::string qvec_str(const QVec& v);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace ksym
