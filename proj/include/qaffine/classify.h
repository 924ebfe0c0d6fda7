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

#ifndef QAFFINE_CLASSIFY_H_
#define QAFFINE_CLASSIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qaffine/perms.h"
#include "qaffine/qmatrix.h"

namespace qaffine {

// Largest field order tried by min_field_size.
inline constexpr int kMaxFieldOrder = 64;
// Largest dimension classify accepts.
inline constexpr int kMaxClassifyDim = 7;

// Either "sufficiently large" (generic) or a specific finite field.
class FieldSpec {
 public:
  static FieldSpec generic() { return FieldSpec(0); }
  // order must be a prime power.
  static FieldSpec finite(int order);

  bool is_generic() const { return order_ == 0; }
  int order() const { return order_; }
  // "generic" or "F<q>".
  std::string describe() const;
  // Value group of the entries: symbolic, or the units of the field.
  ValueGroupPtr value_group() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  explicit FieldSpec(int order) : order_(order) {}
  int order_;
};

// What the entries of a parameter matrix may use over a field: whether -1
// differs from 1, and how many inverse pairs {x, x^-1} with x != x^-1 exist.
struct FieldConfig {
  bool epsilon = true;
  long symbols = -1;  // -1: unbounded
};
FieldConfig field_config(const FieldSpec& field);

struct SearchOptions {
  // Node cap for one finite-field search; 0 means no cap.
  uint64_t node_budget = 200'000'000;
};

enum class Verdict { kRealized, kImpossible, kUnknown };

struct Realization {
  Verdict verdict = Verdict::kImpossible;
  // r x r parameter matrix with distinct rows, when realized.
  std::optional<QMatrix> block_matrix;
  uint64_t nodes = 0;
};

// Looks for an r x r matrix with distinct rows whose size-preserving
// automorphism group is exactly g, sizes[i] being the size of block i.
// g must preserve sizes. kUnknown only when the node budget runs out.
Realization realize_blocks(const PermGroup& g, const std::vector<int>& sizes,
                           const FieldSpec& field,
                           const SearchOptions& options = {});

// An n x n matrix whose blocks have the given sizes (in order) and whose Stab
// is exactly g, or nullopt. Throws BudgetExhausted if the search is cut off.
std::optional<QMatrix> realize(const PermGroup& g,
                               const std::vector<int>& sizes,
                               const FieldSpec& field,
                               const SearchOptions& options = {});

struct MinField {
  // Smallest prime power <= kMaxFieldOrder that realizes; nullopt when none
  // does (generic only).
  std::optional<int> order;
  // False when some smaller field was cut off by the node budget, making
  // order an upper bound.
  bool exact = true;
  std::optional<QMatrix> witness;  // n x n, over GF(order)
};
// Requires realizability over a generic field; throws InvalidArgument if not.
MinField min_field_size(const PermGroup& g, const std::vector<int>& sizes,
                        const SearchOptions& options = {});

struct ClassRecord {
  int n = 0;
  std::vector<int> sizes;  // block sizes, ascending; the partition lambda
  PermGroup stab_rep;      // acts on blocks in the order of sizes
  std::optional<int> min_field;
  bool min_field_exact = true;
  QMatrix witness;  // over the classified field, or over min_field if generic

  bool monomial() const { return static_cast<int>(sizes.size()) == n; }
};

struct ClassifyOptions {
  bool monomial_only = false;
  // Only for generic classification.
  bool compute_min_field = true;
  SearchOptions search;
};

// Partitions of n as ascending size lists, in table order: descending-sorted
// sequences in increasing lexicographic order.
std::vector<std::vector<int>> partitions_of(int n);

// Orbit-maximal subgroups of young_subgroup(sizes), one per conjugacy class
// under that subgroup, each the member with the least pair partition.
std::vector<PermGroup> young_candidates(const std::vector<int>& sizes);

// All graded automorphism group types in dimension n over the field.
std::vector<ClassRecord> classify(int n, const FieldSpec& field,
                                  const ClassifyOptions& options = {});

struct CountRow {
  std::vector<int> sizes;
  int count = 0;
};
struct CountTable {
  std::vector<CountRow> rows;  // every partition of n, table order
  int total = 0;
};
CountTable summarize_counts(int n, const std::vector<ClassRecord>& records);

// Pair orbits of g on each size class of blocks, numbered from 1 by first
// occurrence in row-major order; one matrix per distinct size, ascending.
std::vector<std::vector<std::vector<int>>> orbit_matrices(
    const std::vector<int>& sizes, const PermGroup& g);
std::string format_orbit_matrices(const std::vector<int>& sizes,
                                  const PermGroup& g);

}  // namespace qaffine

#endif  // QAFFINE_CLASSIFY_H_
