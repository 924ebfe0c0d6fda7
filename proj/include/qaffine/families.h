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

#ifndef QAFFINE_FAMILIES_H_
#define QAFFINE_FAMILIES_H_

#include "qaffine/autgroup.h"
#include "qaffine/perms.h"
#include "qaffine/qmatrix.h"

namespace qaffine {

// All off-diagonal entries -1. Stab is S_n.
QMatrix symmetric_family(int n,
                         ValueGroupPtr group = ValueGroup::symbolic({}));

// Stab is the dihedral group of order 2n, n >= 4. For n > 4 the -1 entries
// sit on the cyclic super- and subdiagonal; n = 4 uses a special matrix.
QMatrix dihedral_family(int n,
                        ValueGroupPtr group = ValueGroup::symbolic({}));

// A symbolic matrix with Stab exactly <sigma>. sigma must list its cycles
// as consecutive runs: (1 2 ... m1)(m1+1 ... m2)..., fixed points included.
// Generators are named a, b, c, ... in allocation order: offsets inside each
// cycle first, then pairs of cycles by (first cycle, second cycle, offset).
QMatrix cyclic_family(const Perm& sigma);

// True if sigma is in the consecutive-run form cyclic_family needs.
bool is_normalized_cycle_order(const Perm& sigma);
// tau with tau sigma tau^-1 in consecutive-run form, longest cycles first.
Perm normalizing_conjugator(const Perm& sigma);

// kronecker(q, 1_m).
QMatrix inflate(const QMatrix& q, int m);

// Aut structure of kronecker(a, b) assembled from those of a and b. Throws
// InvalidArgument unless mult_independent(a, b).
StructuredAutGroup tensor_structure(const QMatrix& a, const QMatrix& b);

}  // namespace qaffine

#endif  // QAFFINE_FAMILIES_H_
