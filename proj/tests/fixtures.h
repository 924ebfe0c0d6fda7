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

// Worked matrices reused across tests.

#ifndef QAFFINE_TESTS_FIXTURES_H_
#define QAFFINE_TESTS_FIXTURES_H_

#include "test_util.h"

namespace fixtures {

// Rational entries over Q written with a = 2, b = 3. Blocks
// {1,6},{2,3,8},{4,5},{7}; Stab swaps the first and third block.
inline qaffine::QMatrix mixed_blocks_8() {
  return testutil::sym("a,b", {
      "1    a^-1 a^-1 -1   -1   1    b   a^-1",
      "a    1    1    a    a    a    a^2 1",
      "a    1    1    a    a    a    a^2 1",
      "-1   a^-1 a^-1 1    1    -1   b   a^-1",
      "-1   a^-1 a^-1 1    1    -1   b   a^-1",
      "1    a^-1 a^-1 -1   -1   1    b   a^-1",
      "b^-1 a^-2 a^-2 b^-1 b^-1 b^-1 1   a^-2",
      "a    1    1    a    a    a    a^2 1",
  });
}

// [[A, B, C], [C, A, B], [B, C, A]] with A = 1_2, B = a, C = a^-1.
inline qaffine::QMatrix circulant_blocks_6() {
  return testutil::sym("a", {
      "1    1    a    a    a^-1 a^-1",
      "1    1    a    a    a^-1 a^-1",
      "a^-1 a^-1 1    1    a    a",
      "a^-1 a^-1 1    1    a    a",
      "a    a    a^-1 a^-1 1    1",
      "a    a    a^-1 a^-1 1    1",
  });
}

// Over GF(5) (2 = g^1, 3 = g^3): [[A, B, C], [C, A, B], [B, C, A]] with
// A the 3x3 circulant (1 2 3), B = 2 and C = 3 constant.
inline qaffine::QMatrix nested_f5_9() {
  return testutil::fin(5, {
      "1   g^1 g^3 g^1 g^1 g^1 g^3 g^3 g^3",
      "g^3 1   g^1 g^1 g^1 g^1 g^3 g^3 g^3",
      "g^1 g^3 1   g^1 g^1 g^1 g^3 g^3 g^3",
      "g^3 g^3 g^3 1   g^1 g^3 g^1 g^1 g^1",
      "g^3 g^3 g^3 g^3 1   g^1 g^1 g^1 g^1",
      "g^3 g^3 g^3 g^1 g^3 1   g^1 g^1 g^1",
      "g^1 g^1 g^1 g^3 g^3 g^3 1   g^1 g^3",
      "g^1 g^1 g^1 g^3 g^3 g^3 g^3 1   g^1",
      "g^1 g^1 g^1 g^3 g^3 g^3 g^1 g^3 1",
  });
}

// Rows {1,2},{3,4},{5,6},{7,8} pairwise permutations of each other. The
// entries q_57 = q_58 = d tie {5,6} to the rest, so the decomposition has a
// single part.
inline qaffine::QMatrix linked_8() {
  return testutil::sym("a,b,c,d,f", {
      "1    -1   a    b    c    c    f    f",
      "-1   1    b    a    c    c    f    f",
      "a^-1 b^-1 1    -1   c    c    d    f",
      "b^-1 a^-1 -1   1    c    c    f    d",
      "c^-1 c^-1 c^-1 c^-1 1    -1   d    d",
      "c^-1 c^-1 c^-1 c^-1 -1   1    d    d",
      "f^-1 f^-1 d^-1 f^-1 d^-1 d^-1 1    -1",
      "f^-1 f^-1 f^-1 d^-1 d^-1 d^-1 -1   1",
  });
}

// linked_8 with {5,6} joined to everything by c alone. Splits as
// {1,2,3,4,7,8} and {5,6}.
inline qaffine::QMatrix split_8() {
  return testutil::sym("a,b,c,d,f", {
      "1    -1   a    b    c    c    f    f",
      "-1   1    b    a    c    c    f    f",
      "a^-1 b^-1 1    -1   c    c    d    f",
      "b^-1 a^-1 -1   1    c    c    f    d",
      "c^-1 c^-1 c^-1 c^-1 1    -1   c^-1 c^-1",
      "c^-1 c^-1 c^-1 c^-1 -1   1    c^-1 c^-1",
      "f^-1 f^-1 d^-1 f^-1 c    c    1    -1",
      "f^-1 f^-1 f^-1 d^-1 c    c    -1   1",
  });
}

// Stab is generated by (1 2 3 4 5 6)(7 8).
inline qaffine::QMatrix cyclic_6_2_1() {
  return testutil::sym("a,b,c,d,e,f", {
      "1    a    b    -1   b^-1 a^-1 c    d    e",
      "a^-1 1    a    b    -1   b^-1 d    c    e",
      "b^-1 a^-1 1    a    b    -1   c    d    e",
      "-1   b^-1 a^-1 1    a    b    d    c    e",
      "b    -1   b^-1 a^-1 1    a    c    d    e",
      "a    b    -1   b^-1 a^-1 1    d    c    e",
      "c^-1 d^-1 c^-1 d^-1 c^-1 d^-1 1    -1   f",
      "d^-1 c^-1 d^-1 c^-1 d^-1 c^-1 -1   1    f",
      "e^-1 e^-1 e^-1 e^-1 e^-1 e^-1 f^-1 f^-1 1",
  });
}

// Stab is <(1 2 3)> on four singleton blocks; needs |k| >= 4.
inline qaffine::QMatrix three_cycle_f4() {
  return testutil::fin(4, {
      "1   g^1 g^2 g^1",
      "g^2 1   g^1 g^1",
      "g^1 g^2 1   g^1",
      "g^2 g^2 g^2 1",
  });
}

}  // namespace fixtures

#endif  // QAFFINE_TESTS_FIXTURES_H_
