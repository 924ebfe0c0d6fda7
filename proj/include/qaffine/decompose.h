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

#ifndef QAFFINE_DECOMPOSE_H_
#define QAFFINE_DECOMPOSE_H_

#include <vector>

#include "qaffine/autgroup.h"
#include "qaffine/qmatrix.h"

namespace qaffine {

// The finest partition that is a union of classes of rows equal up to
// reordering and has a constant minor between every two distinct parts.
SetPartition independence_partition(const QMatrix& q);

struct Factor {
  std::vector<int> indices;  // sorted, 0-based
  QMatrix sub;               // principal submatrix on indices
};
// One factor per part of the independence partition.
std::vector<Factor> direct_product_decomposition(const QMatrix& q);

// True when every minor q_DE, D != E parts of p, is constant. Throws
// InvalidArgument unless row_blocks(q) refines p.
bool constant_off_diagonal(const QMatrix& q, const SetPartition& p);

struct CoarseSemidirect {
  std::vector<StructuredAutGroup> factors;  // one per part of p
  // Size-preserving permutations of the parts of p with
  // q_{sigma D, sigma E} = q_DE entrywise in index order.
  PermGroup group;
};
// Requires constant_off_diagonal(q, p) and that every element of Stab(q)
// permutes the parts of p. Checks |Stab(q)| = |group| prod |Stab(q_DD)|.
CoarseSemidirect coarse_semidirect(const QMatrix& q, const SetPartition& p);

}  // namespace qaffine

#endif  // QAFFINE_DECOMPOSE_H_
