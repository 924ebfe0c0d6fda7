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

#ifndef QAFFINE_AUTGROUP_H_
#define QAFFINE_AUTGROUP_H_

#include <string>
#include <utility>
#include <vector>

#include "qaffine/galois_field.h"
#include "qaffine/perms.h"
#include "qaffine/qmatrix.h"

namespace qaffine {

// The graded automorphism group (prod_B GL(V_B)) x| Stab of a parameter
// matrix, in terms of its row blocks.
struct StructuredAutGroup {
  SetPartition blocks;
  std::vector<int> gl_degrees;  // |B| for each block, in block order
  PermGroup stab;               // acts on block indices
  bool monomial = false;

  // (part, multiplicity) pairs, parts descending.
  std::vector<std::pair<int, int>> lambda() const;
};

// Block permutations sigma preserving sizes with q_{sigma B, sigma C} = q_BC.
PermGroup stab(const QMatrix& q);
StructuredAutGroup aut_structure(const QMatrix& q);

// Exponent notation with ascending parts, e.g. "1^2 2^1".
std::string lambda_string(std::vector<int> sizes);
// Structure such as "(kx)^2 x GL(2) ⋊ <(1 2)>" for blocks of the given
// sizes, in block order.
std::string structure_string(const std::vector<int>& sizes,
                             const PermGroup& stab);
std::string structure_string(const StructuredAutGroup& a);

// The permutation matrix sending V_B onto V_{sigma B}, keeping index order
// inside blocks. Columns are images: h v_j = sum_i h_ij v_i.
FieldMatrix block_injection(const Perm& sigma, const QMatrix& q);
// The block permutation induced by a graded automorphism.
Perm block_projection(const FieldMatrix& h, const QMatrix& q,
                      const GaloisField& field);
// h invertible and h_il h_jm = 0 or q_ij = q_lm for all i, j, l, m.
bool is_graded_automorphism(const FieldMatrix& h, const QMatrix& q,
                            const GaloisField& field);
// Checks directly that h respects v_j v_i = q_ij v_i v_j in degree 2.
bool relation_oracle(const FieldMatrix& h, const QMatrix& q,
                     const GaloisField& field);

struct SemidirectFactor {
  FieldMatrix g;  // block diagonal
  Perm sigma;
};
// h = g * block_injection(sigma).
SemidirectFactor semidirect_factor(const FieldMatrix& h, const QMatrix& q,
                                   const GaloisField& field);

// True when q's values can be placed in GF(field_order)^x keeping 1, -1,
// inverses and the equality pattern.
bool specializable(const QMatrix& q, int field_order);
// Such a placement: 1 -> 1, -1 -> -1, and the k-th inverse pair {x, x^-1}
// in order of first occurrence -> {g^(k+1), g^-(k+1)}. Throws EmbeddingError
// if the field is too small.
QMatrix specialize(const QMatrix& q, int field_order);
// Smallest prime power order (at most 256) for which specialize succeeds.
int smallest_specializing_field(const QMatrix& q);

}  // namespace qaffine

#endif  // QAFFINE_AUTGROUP_H_
