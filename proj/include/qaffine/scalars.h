// Copyright 2026 The qaffine Authors
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

#ifndef QAFFINE_SCALARS_H_
#define QAFFINE_SCALARS_H_

#include <compare>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace qaffine {

// The multiplicative group entries of a parameter matrix are drawn from.
//
// Finite mode is the cyclic group of order N, i.e. the units of a field with
// N + 1 elements; an element is a residue e standing for g^e. Symbolic mode
// is Z^m x {+1, -1} on named generators, so that distinct monomials are
// distinct scalars.
class ValueGroup {
 public:
  enum class Kind { kFiniteUnits, kSymbolic };

  static std::shared_ptr<const ValueGroup> finite_units(int order);
  static std::shared_ptr<const ValueGroup> symbolic(
      std::vector<std::string> generators);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFiniteUnits; }
  // N in finite mode, 0 in symbolic mode.
  int order() const { return order_; }
  const std::vector<std::string>& generators() const { return generators_; }
  int num_generators() const { return static_cast<int>(generators_.size()); }
  // Index of a generator name, or -1.
  int generator_index(std::string_view name) const;

  // True when the group has an element of order exactly 2.
  bool has_epsilon() const;
  // Number of unordered pairs {x, x^-1} with x != x^-1; -1 when unbounded.
  long inverse_pair_count() const;

  // "finite:<N+1>" or "symbolic:<g1>,<g2>,...".
  std::string describe() const;

  bool operator==(const ValueGroup& other) const = default;

 private:
  ValueGroup(Kind kind, int order, std::vector<std::string> generators)
      : kind_(kind), order_(order), generators_(std::move(generators)) {}

  Kind kind_;
  int order_;
  std::vector<std::string> generators_;
};

using ValueGroupPtr = std::shared_ptr<const ValueGroup>;

// True if both pointers denote equal groups.
bool same_group(const ValueGroupPtr& a, const ValueGroupPtr& b);

// Symbolic group whose generators are those of `a` followed by the new ones
// of `b`. Both must be symbolic.
ValueGroupPtr merge_symbolic(const ValueGroupPtr& a, const ValueGroupPtr& b);

// An element of a ValueGroup.
class Scalar {
 public:
  Scalar() = default;

  static Scalar one(ValueGroupPtr group);
  // The element of order 2. Throws InvalidArgument if there is none.
  static Scalar epsilon(ValueGroupPtr group);
  // g^e in finite mode; e is reduced mod N.
  static Scalar power(ValueGroupPtr group, long e);
  // Generator number `index` raised to `exponent` in symbolic mode.
  static Scalar generator(ValueGroupPtr group, int index, int exponent = 1);
  static Scalar monomial(ValueGroupPtr group, std::vector<int> exponents,
                         bool negative);

  const ValueGroupPtr& group() const { return group_; }
  bool valid() const { return group_ != nullptr; }
  int residue() const { return residue_; }
  const std::vector<int>& exponents() const { return exponents_; }
  bool negative() const { return negative_; }

  bool is_one() const;
  bool is_epsilon() const;

  // Same-group comparison; throws ValueGroupMismatch otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  ValueGroupPtr group_;
  int residue_ = 0;
  bool negative_ = false;
  std::vector<int> exponents_;
};

Scalar mul(const Scalar& a, const Scalar& b);
Scalar inv(const Scalar& a);
bool is_self_inverse(const Scalar& a);

// The same element in a larger symbolic group (generators matched by name).
Scalar rebase(const Scalar& s, const ValueGroupPtr& group);

// Text form of a scalar. Finite: "1", "-1" (N even), "g^<e>" with 0 < e < N.
// Symbolic: "1", "-1", or [-]factor{*factor} with factor = name[^int].
Scalar parse_scalar(std::string_view text, const ValueGroupPtr& group);
std::string format_scalar(const Scalar& s);

}  // namespace qaffine

#endif  // QAFFINE_SCALARS_H_
