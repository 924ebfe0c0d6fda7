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

#include <gtest/gtest.h>

#include <functional>

#include "fixtures.h"
#include "oracles.h"
#include "qaffine/autgroup.h"
#include "qaffine/errors.h"
#include "qaffine/families.h"
#include "test_util.h"

namespace qaffine {
namespace {

// Consecutive-run permutation with the given cycle lengths.
Perm runs(const std::vector<int>& lengths) {
  int n = 0;
  std::vector<std::vector<int>> cycles;
  for (int len : lengths) {
    std::vector<int> c;
    for (int k = 0; k < len; ++k) c.push_back(n + k);
    if (len > 1) cycles.push_back(c);
    n += len;
  }
  return Perm::from_cycles(n, cycles);
}

// Partitions of n with parts in descending order.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max) {
    if (left == 0) {
      f(cur);
      return;
    }
    for (int p = std::min(left, max); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
}

TEST(SymmetricFamily, StabIsFullSymmetricGroup) {
  size_t fact = 1;
  for (int n = 1; n <= 8; ++n) {
    fact *= n;
    QMatrix q = symmetric_family(n);
    EXPECT_TRUE(aut_structure(q).monomial);
    EXPECT_EQ(stab(q).order(), fact) << n;
  }
  EXPECT_THROW(symmetric_family(3, ValueGroup::finite_units(3)),
               InvalidArgument);
  EXPECT_EQ(stab(symmetric_family(4, ValueGroup::finite_units(2))).order(), 24u);
}

TEST(DihedralFamily, StabIsDihedral) {
  for (int n = 4; n <= 8; ++n) {
    QMatrix q = dihedral_family(n);
    PermGroup s = stab(q);
    EXPECT_EQ(s.order(), static_cast<size_t>(2 * n)) << n;
    std::vector<int> rot(n), refl(n);
    for (int i = 0; i < n; ++i) {
      rot[i] = (i + 1) % n;
      refl[i] = (n - i) % n;
    }
    PermGroup d = closure(n, std::vector<Perm>{Perm::from_images(rot),
                                               Perm::from_images(refl)});
    if (n > 4) {
      EXPECT_EQ(s, d);
    } else {
      EXPECT_EQ(oracle::class_key(std::vector<int>(4, 1), s),
                oracle::class_key(std::vector<int>(4, 1), d));
    }
  }
  EXPECT_THROW(dihedral_family(3), InvalidArgument);
}

TEST(CyclicFamily, EveryCycleTypeUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for_each_partition(n, [&](const std::vector<int>& type) {
      Perm sigma = runs(type);
      ASSERT_TRUE(is_normalized_cycle_order(sigma));
      QMatrix q = cyclic_family(sigma);
      EXPECT_NO_THROW(validate(q));
      EXPECT_TRUE(aut_structure(q).monomial);
      EXPECT_EQ(stab(q), closure(n, std::vector<Perm>{sigma}))
          << format_cycles(sigma);
    });
  }
}

// The smallest field carrying the equality pattern keeps Stab = <sigma>.
TEST(CyclicFamily, SmallestFieldKeepsStab) {
  for (int n = 1; n <= 6; ++n) {
    for_each_partition(n, [&](const std::vector<int>& type) {
      Perm sigma = runs(type);
      QMatrix q = cyclic_family(sigma);
      int order = smallest_specializing_field(q);
      EXPECT_EQ(stab(specialize(q, order)),
                closure(n, std::vector<Perm>{sigma}))
          << format_cycles(sigma) << " over F" << order;
    });
  }
  EXPECT_EQ(smallest_specializing_field(cyclic_family(runs({3, 2}))), 7);
}

TEST(CyclicFamily, LargerDegrees) {
  for (const auto& type : std::vector<std::vector<int>>{
           {7}, {4, 3}, {5, 2, 1}, {3, 3, 2}, {6, 2, 1}, {4, 4}, {2, 2, 2, 2}}) {
    Perm sigma = runs(type);
    EXPECT_EQ(stab(cyclic_family(sigma)),
              closure(sigma.degree(), std::vector<Perm>{sigma}))
        << format_cycles(sigma);
  }
}

TEST(CyclicFamily, WorkedExample) {
  QMatrix q = cyclic_family(testutil::cyc("(1 2 3 4 5 6)(7 8)", 9));
  EXPECT_EQ(q, fixtures::cyclic_6_2_1()) << format_matrix(q);
  EXPECT_EQ(stab(q), testutil::grp("<(1 2 3 4 5 6)(7 8)>", 9));
}

TEST(CyclicFamily, RejectsUnnormalized) {
  Perm sigma = testutil::cyc("(1 3)", 3);
  EXPECT_FALSE(is_normalized_cycle_order(sigma));
  EXPECT_THROW(cyclic_family(sigma), InvalidArgument);
}

TEST(CyclicFamily, NormalizingConjugator) {
  testutil::Rng rng(61);
  for (int t = 0; t < 200; ++t) {
    int n = testutil::uniform(rng, 1, 8);
    Perm sigma = testutil::random_perm(rng, n);
    Perm tau = normalizing_conjugator(sigma);
    Perm norm = tau * sigma * tau.inverse();
    ASSERT_TRUE(is_normalized_cycle_order(norm));
    EXPECT_EQ(norm.cycle_type(), sigma.cycle_type());
    // Longest cycles first.
    std::vector<int> lengths;
    int i = 0;
    while (i < n) {
      int len = 1;
      while (norm(i + len - 1) == i + len) ++len;
      lengths.push_back(len);
      i += len;
    }
    EXPECT_TRUE(std::is_sorted(lengths.rbegin(), lengths.rend()));
    if (n <= 7) {
      QMatrix q = permute_indices(cyclic_family(norm), tau);
      EXPECT_EQ(stab(q), closure(n, std::vector<Perm>{sigma}));
    }
  }
}

TEST(Inflate, KeepsStabilizer) {
  testutil::Rng rng(62);
  for (int t = 0; t < 100; ++t) {
    int n = testutil::uniform(rng, 1, 4), m = testutil::uniform(rng, 1, 3);
    QMatrix q = testutil::random_blocked(rng, n, 2);
    QMatrix big = inflate(q, m);
    EXPECT_EQ(big, kronecker(q, QMatrix::ones(ValueGroup::symbolic({}), m)));
    StructuredAutGroup s = aut_structure(big);
    std::vector<int> want = row_blocks(q).block_sizes();
    for (int& x : want) x *= m;
    EXPECT_EQ(s.gl_degrees, want);
    EXPECT_EQ(s.stab, stab(q));
  }
  EXPECT_THROW(inflate(symmetric_family(2), 0), InvalidArgument);
}

TEST(Inflate, SymmetricExample) {
  StructuredAutGroup s = aut_structure(inflate(symmetric_family(3), 2));
  EXPECT_TRUE(structure_string(s).starts_with("GL(2)^3 ⋊ <"));
  EXPECT_EQ(s.stab.order(), 6u);
}

// The assembled structure agrees with a direct computation on the product.
TEST(TensorStructure, MatchesDirect) {
  testutil::Rng rng(63);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    int n1 = testutil::uniform(rng, 1, 4);
    int n2 = testutil::uniform(rng, 1, 12 / n1);
    QMatrix a = t % 2 ? testutil::random_blocked(rng, n1, 1)
                      : testutil::random_symbolic(rng, n1, 1);
    QMatrix b = testutil::random_symbolic(rng, n2, 1, t % 3 == 0, 'x');
    if (!mult_independent(a, b)) {
      EXPECT_THROW(tensor_structure(a, b), InvalidArgument);
      continue;
    }
    if (stab(a).order() * stab(b).order() > 5040) continue;
    ++checked;
    StructuredAutGroup ts = tensor_structure(a, b);
    StructuredAutGroup direct = aut_structure(kronecker(a, b));
    EXPECT_EQ(ts.blocks, direct.blocks);
    EXPECT_EQ(ts.gl_degrees, direct.gl_degrees);
    EXPECT_EQ(ts.stab, direct.stab) << format_matrix(a) << format_matrix(b);
    EXPECT_EQ(ts.monomial, direct.monomial);
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace qaffine
