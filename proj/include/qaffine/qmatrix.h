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

#ifndef QAFFINE_QMATRIX_H_
#define QAFFINE_QMATRIX_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qaffine/perms.h"
#include "qaffine/scalars.h"

namespace qaffine {

// A partition of {0..n-1}. Blocks are sorted and ordered by least element.
class SetPartition {
 public:
  SetPartition() = default;
  static SetPartition from_blocks(int n, std::vector<std::vector<int>> blocks);
  // Elements with equal labels share a block.
  static SetPartition from_labels(std::span<const int> labels);
  static SetPartition singletons(int n);

  int size() const { return n_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int b) const { return blocks_[b]; }
  int block_of(int i) const { return block_of_[i]; }
  std::vector<int> block_sizes() const;

  bool refines(const SetPartition& coarser) const;
  // "{1,6},{2,3,8}" with 1-based points.
  std::string to_string() const;

  bool operator==(const SetPartition&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

// A square matrix of scalars from a single value group. The constructor does
// not check the parameter-matrix axioms; see validate().
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(ValueGroupPtr group, int n, std::vector<Scalar> entries);
  static QMatrix ones(ValueGroupPtr group, int n);

  int size() const { return n_; }
  const ValueGroupPtr& group() const { return group_; }
  const Scalar& operator()(int i, int j) const { return entries_[i * n_ + j]; }
  const std::vector<Scalar>& entries() const { return entries_; }

  // Equal entries get equal ids, numbered by first occurrence (row-major).
  std::vector<int> value_ids() const;
  // Distinct entries in order of first occurrence.
  std::vector<Scalar> distinct_values() const;

  bool operator==(const QMatrix& other) const;

 private:
  ValueGroupPtr group_;
  int n_ = 0;
  std::vector<Scalar> entries_;
};

// Throws MatrixValidationError unless q_ii = 1 and q_ij q_ji = 1.
void validate(const QMatrix& q);
// Parses rows of scalar text and validates.
QMatrix make_qmatrix(const ValueGroupPtr& group,
                     const std::vector<std::vector<std::string>>& rows);

// Partition of indices by identical rows.
SetPartition row_blocks(const QMatrix& q);

// An |rows| x |cols| submatrix.
struct Minor {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> entries;
  const Scalar& at(int i, int j) const { return entries[i * cols + j]; }
  bool is_constant() const;
};

Minor minor(const QMatrix& q, std::span<const int> rows,
            std::span<const int> cols);
// The principal submatrix on the given indices, in their order.
QMatrix submatrix(const QMatrix& q, std::span<const int> indices);

// q'_ij = q_{tau(i) tau(j)}.
QMatrix permute_indices(const QMatrix& q, const Perm& tau);
// The matrix whose (B, C) minor is q's (sigma B, sigma C) minor, for sigma a
// size-preserving permutation of the row blocks of q.
QMatrix block_permute(const QMatrix& q, const Perm& sigma);

// Kronecker product; index (i, i') becomes i * n' + i'. Symbolic operands
// are moved to the union of their generators.
QMatrix kronecker(const QMatrix& a, const QMatrix& b);
// True when the sets of pairwise entry products of a and b meet only in 1.
bool mult_independent(const QMatrix& a, const QMatrix& b);
// Repeats index i sizes[i] times.
QMatrix expand_to_dim(const QMatrix& q, std::span<const int> sizes);
// [[q1, a], [a^-1, q2]] with constant off-diagonal blocks. a must not be
// +-1 and neither a nor a^-1 may occur in q1 or q2.
QMatrix direct_sum(const QMatrix& q1, const QMatrix& q2, const Scalar& a);
// The same matrix over a larger symbolic group.
QMatrix rebase(const QMatrix& q, const ValueGroupPtr& group);

// Canonical representative under index permutation and value relabelling.
// Values are renamed in order of first use along the upper triangle, read
// column by column: 1 stays 1, -1 stays -1, and the k-th new inverse pair
// {x, x^-1} becomes generator k (a, b, c, ...) as first met.
struct CanonicalForm {
  QMatrix pattern;
  // pattern is the relabelling of permute_indices(q, tau).
  Perm tau;
};
CanonicalForm canonical_form(const QMatrix& q);

// Text format:
//   qmatrix n=<n> mode=finite:<field order>|symbolic:<g1>,<g2>,...
//   <n rows of n whitespace-separated scalars>
// Lines starting with '#' and blank lines are ignored.
QMatrix read_qmatrix(std::string_view text);
QMatrix read_qmatrix_file(const std::string& path);
std::string write_qmatrix(const QMatrix& q);
// Rows only, entries right-aligned per column.
std::string format_matrix(const QMatrix& q);

}  // namespace qaffine

#endif  // QAFFINE_QMATRIX_H_
