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

#include <numeric>
#include <set>

#include "qaffine/errors.h"
#include "qaffine/galois_field.h"
#include "qaffine/scalars.h"
#include "test_util.h"

namespace qaffine {
namespace {

TEST(Scalars, FiniteGroupLaw) {
  auto g = ValueGroup::finite_units(4);
  Scalar x = Scalar::power(g, 1);
  EXPECT_EQ(mul(Scalar::one(g), x), x);
  EXPECT_TRUE(mul(x, Scalar::power(g, 3)).is_one());
  EXPECT_EQ(Scalar::power(g, 7), Scalar::power(g, 3));
  EXPECT_EQ(Scalar::power(g, -1), Scalar::power(g, 3));
}

TEST(Scalars, SymbolicInverse) {
  auto g = ValueGroup::symbolic({"a", "b"});
  Scalar a = Scalar::generator(g, 0);
  EXPECT_TRUE(mul(a, inv(a)).is_one());
  Scalar x = parse_scalar("-a*b^-1", g);
  EXPECT_EQ(inv(x), parse_scalar("-a^-1*b", g));
  EXPECT_TRUE(inv(Scalar::epsilon(g)).is_epsilon());
  EXPECT_TRUE(inv(Scalar::one(g)).is_one());
}

TEST(Scalars, SelfInverse) {
  auto g = ValueGroup::symbolic({"a"});
  EXPECT_TRUE(is_self_inverse(Scalar::one(g)));
  EXPECT_TRUE(is_self_inverse(Scalar::epsilon(g)));
  EXPECT_FALSE(is_self_inverse(Scalar::generator(g, 0)));
  EXPECT_FALSE(is_self_inverse(parse_scalar("-a", g)));
}

TEST(Scalars, ParseGrammar) {
  auto g = ValueGroup::symbolic({"a", "b", "c"});
  Scalar x = parse_scalar("a^-2*b", g);
  EXPECT_EQ(x.exponents(), (std::vector<int>{-2, 1, 0}));
  EXPECT_FALSE(x.negative());
  EXPECT_TRUE(parse_scalar("1", g).is_one());
  EXPECT_TRUE(parse_scalar("-1", g).is_epsilon());
  EXPECT_EQ(parse_scalar("b*a^-2", g), x);
  EXPECT_EQ(format_scalar(x), "a^-2*b");
  EXPECT_THROW(parse_scalar("d", g), ParseError);
  EXPECT_THROW(parse_scalar("a^", g), ParseError);
  EXPECT_THROW(parse_scalar("", g), ParseError);
}

TEST(Scalars, ParseFinite) {
  auto g4 = ValueGroup::finite_units(4);
  EXPECT_EQ(parse_scalar("g^3", g4), Scalar::power(g4, 3));
  EXPECT_TRUE(parse_scalar("-1", g4).is_epsilon());
  EXPECT_EQ(format_scalar(Scalar::power(g4, 2)), "-1");
  EXPECT_THROW(parse_scalar("g^4", g4), ParseError);
  auto g3 = ValueGroup::finite_units(3);
  EXPECT_THROW(parse_scalar("-1", g3), ParseError);
}

TEST(Scalars, RoundTripFormat) {
  testutil::Rng rng(7);
  auto g = ValueGroup::symbolic({"a", "b", "x1"});
  for (int t = 0; t < 200; ++t) {
    std::vector<int> e = {testutil::uniform(rng, -3, 3),
                          testutil::uniform(rng, -3, 3),
                          testutil::uniform(rng, -3, 3)};
    Scalar s = Scalar::monomial(g, e, testutil::uniform(rng, 0, 1) == 1);
    EXPECT_EQ(parse_scalar(format_scalar(s), g), s);
  }
  for (int n : {1, 2, 4, 7, 63}) {
    auto f = ValueGroup::finite_units(n);
    for (int e = 0; e < n; ++e) {
      Scalar s = Scalar::power(f, e);
      EXPECT_EQ(parse_scalar(format_scalar(s), f), s);
    }
  }
}

TEST(Scalars, MismatchedGroups) {
  auto a = ValueGroup::finite_units(4);
  auto b = ValueGroup::finite_units(6);
  EXPECT_THROW(mul(Scalar::one(a), Scalar::one(b)), ValueGroupMismatch);
  EXPECT_THROW((void)(Scalar::one(a) == Scalar::one(b)), ValueGroupMismatch);
}

TEST(Scalars, GroupAxiomsFinite) {
  for (int n : {1, 2, 3, 4, 6, 8}) {
    auto g = ValueGroup::finite_units(n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        Scalar a = Scalar::power(g, x), b = Scalar::power(g, y);
        EXPECT_EQ(mul(a, b), mul(b, a));
        for (int z = 0; z < n; ++z) {
          Scalar c = Scalar::power(g, z);
          EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
        }
      }
      EXPECT_TRUE(mul(Scalar::power(g, x), inv(Scalar::power(g, x))).is_one());
    }
  }
}

TEST(Scalars, GroupAxiomsSymbolic) {
  testutil::Rng rng(11);
  auto g = ValueGroup::symbolic({"a", "b"});
  auto pick = [&] {
    return Scalar::monomial(g,
                            {testutil::uniform(rng, -2, 2),
                             testutil::uniform(rng, -2, 2)},
                            testutil::uniform(rng, 0, 1) == 1);
  };
  for (int t = 0; t < 300; ++t) {
    Scalar a = pick(), b = pick(), c = pick();
    EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    EXPECT_EQ(mul(a, b), mul(b, a));
    EXPECT_EQ(mul(a, Scalar::one(g)), a);
    EXPECT_TRUE(mul(a, inv(a)).is_one());
  }
}

TEST(Scalars, SelfInverseCountAndPairs) {
  for (int n = 1; n <= 64; ++n) {
    auto g = ValueGroup::finite_units(n);
    int self = 0;
    for (int e = 0; e < n; ++e) self += is_self_inverse(Scalar::power(g, e));
    int expected = std::gcd(2, n);
    EXPECT_EQ(self, expected) << n;
    EXPECT_EQ(g->inverse_pair_count(), (n - expected) / 2) << n;
    EXPECT_EQ(g->has_epsilon(), n % 2 == 0);
  }
  EXPECT_EQ(ValueGroup::symbolic({"a"})->inverse_pair_count(), -1);
  EXPECT_TRUE(ValueGroup::symbolic({})->has_epsilon());
}

TEST(Scalars, EpsilonMissing) {
  EXPECT_THROW(Scalar::epsilon(ValueGroup::finite_units(3)), InvalidArgument);
}

TEST(Scalars, Rebase) {
  auto small = ValueGroup::symbolic({"b"});
  auto big = merge_symbolic(ValueGroup::symbolic({"a"}), small);
  EXPECT_EQ(big->generators(), (std::vector<std::string>{"a", "b"}));
  Scalar s = rebase(parse_scalar("-b^2", small), big);
  EXPECT_EQ(s, parse_scalar("-b^2", big));
}

TEST(GaloisField, SmallFacts) {
  GaloisField f2(2);
  EXPECT_EQ(f2.add(1, 1), 0);
  GaloisField f4(4);
  FieldElem x = f4.primitive_element();
  EXPECT_EQ(x, 2);  // the polynomial x
  EXPECT_EQ(f4.mul(x, x), f4.add(x, 1));
  GaloisField f5(5);
  EXPECT_EQ(f5.primitive_element(), 2);
  EXPECT_EQ(f5.embed_residue(4, 2), 4);
  EXPECT_EQ(f5.embed(Scalar::power(ValueGroup::finite_units(4), 2)), 4);
}

TEST(GaloisField, RejectsNonPrimePowers) {
  EXPECT_THROW(GaloisField(6), InvalidArgument);
  EXPECT_THROW(GaloisField(1), InvalidArgument);
  EXPECT_THROW(GaloisField(512), InvalidArgument);
  EXPECT_THROW(GaloisField(7).embed_residue(4, 1), EmbeddingError);
}

TEST(GaloisField, AxiomsExhaustive) {
  for (int q : prime_powers_up_to(9)) {
    GaloisField f(q);
    for (int a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, 0), a);
      EXPECT_EQ(f.mul(a, 1), a);
      EXPECT_EQ(f.add(a, f.neg(a)), 0);
      if (a) EXPECT_EQ(f.mul(a, f.inv(a)), 1);
      for (int b = 0; b < q; ++b) {
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (int c = 0; c < q; ++c) {
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
          EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
          EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        }
      }
    }
  }
}

TEST(GaloisField, AxiomsSampled) {
  testutil::Rng rng(3);
  for (int q : prime_powers_up_to(256)) {
    if (q <= 9) continue;
    GaloisField f(q);
    for (int t = 0; t < 500; ++t) {
      int a = testutil::uniform(rng, 0, q - 1);
      int b = testutil::uniform(rng, 0, q - 1);
      int c = testutil::uniform(rng, 0, q - 1);
      ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))) << q;
      ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c))) << q;
    }
  }
}

TEST(GaloisField, UnitGroupIsCyclic) {
  for (int q : prime_powers_up_to(64)) {
    GaloisField f(q);
    std::set<FieldElem> seen;
    for (int e = 0; e < q - 1; ++e) seen.insert(f.pow_primitive(e));
    EXPECT_EQ(static_cast<int>(seen.size()), q - 1) << q;
    EXPECT_FALSE(seen.count(0));
    for (int e = 0; e < q - 1; ++e) EXPECT_EQ(f.log(f.pow_primitive(e)), e);
    // Embedding respects products.
    auto g = ValueGroup::finite_units(q - 1);
    for (int x = 0; x < q - 1; x += 3) {
      for (int y = 0; y < q - 1; y += 5) {
        EXPECT_EQ(f.embed(mul(Scalar::power(g, x), Scalar::power(g, y))),
                  f.mul(f.embed(Scalar::power(g, x)),
                        f.embed(Scalar::power(g, y))));
      }
    }
  }
}

TEST(GaloisField, PrimePowers) {
  EXPECT_EQ(prime_powers_up_to(16),
            (std::vector<int>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16}));
  int p = 0, k = 0;
  EXPECT_TRUE(is_prime_power(64, &p, &k));
  EXPECT_EQ(p, 2);
  EXPECT_EQ(k, 6);
  EXPECT_FALSE(is_prime_power(12));
}

TEST(GaloisField, MatrixInverse) {
  GaloisField f(7);
  testutil::Rng rng(5);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    FieldMatrix m(3);
    for (auto& x : m.a) x = testutil::uniform(rng, 0, 6);
    if (!is_invertible(f, m)) {
      EXPECT_THROW(inverse(f, m), InvalidArgument);
      continue;
    }
    ++checked;
    EXPECT_EQ(multiply(f, m, inverse(f, m)), identity_matrix(3));
  }
  EXPECT_GT(checked, 100);
}

}  // namespace
}  // namespace qaffine
