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

#include <optional>
#include <string>

#include <json.hpp>

#include "ksym/matrix.hpp"

namespace ksym {

struct Signature {
  int pos = 0, neg = 0, zero = 0;
  bool operator==(const Signature&) const = default;
};

/// A rational quadratic space: a symmetric Gram matrix together with a cached
/// congruence diagonalization P^T G P = diag(d). Degenerate forms are
/// representable; constructors that need nondegeneracy reject them.
/// Immutable after construction.
class QSpace {
 public:
  explicit QSpace(QMatrix gram);  // throws NonSymmetric

  /// Input schema: {"dim": n, "gram": [[p/q or int, ...], ...]}.
  static QSpace from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  int dim() const { return dim_; }
  const QMatrix& gram() const { return gram_; }
  const QMatrix& diag_basis() const { return diag_basis_; }
  const std::vector<Rational>& diag_values() const { return diag_values_; }

  bool nondegenerate() const;
  Signature signature() const;

  /// q(u, v) = u^T G v, coordinates in the input basis.
  Rational q(const QVec& u, const QVec& v) const;

  /// Column i of the diagonalizing basis, as an input-basis vector.
  QVec diag_vector(int i) const;

  /// Input-basis coordinates -> diagonal-basis coordinates and back
  /// (x = P * c).
  QVec to_diag_coords(const QVec& x) const;
  QVec from_diag_coords(const QVec& c) const;

  /// Extension by a hyperbolic plane: slot 0 carries degree 0, slots
  /// 1..dim carry the original space in degree 2, the last slot degree 4.
  /// The outer pairing is q~((a,..,b), (a',..,b')) = ab' + a'b.
  QSpace mukai_extend() const;  // throws Degenerate

  /// A nonzero isotropic vector when the diagonal-pair square search finds
  /// one; nullopt is "none found", never a proof of anisotropy.
  std::optional<QVec> find_isotropic() const;

  /// Canonical content key of the Gram matrix, for cache naming.
  std::string canonical_key() const;

 private:
  int dim_;
  QMatrix gram_;
  QMatrix diag_basis_;
  std::vector<Rational> diag_values_;
};

QSpace qspace_from_diagonal(const std::vector<Rational>& d);

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json qvec_to_json(const QVec& v);

}  // namespace ksym
