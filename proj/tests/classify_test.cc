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

#include <map>
#include <set>

#include "oracles.h"
#include "qaffine/autgroup.h"
#include "qaffine/classify.h"
#include "qaffine/errors.h"
#include "test_util.h"

namespace qaffine {
namespace {

using testutil::grp;

std::set<oracle::ClassKey> keys_of(const std::vector<ClassRecord>& records) {
  std::set<oracle::ClassKey> out;
  for (const auto& r : records) {
    out.insert(oracle::class_key(r.sizes, r.stab_rep));
  }
  return out;
}

const std::vector<ClassRecord>& generic_records(int n) {
  static std::map<int, std::vector<ClassRecord>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, classify(n, FieldSpec::generic())).first;
  }
  return it->second;
}

TEST(Partitions, TableOrder) {
  EXPECT_EQ(partitions_of(4),
            (std::vector<std::vector<int>>{
                {1, 1, 1, 1}, {1, 1, 2}, {2, 2}, {1, 3}, {4}}));
  std::vector<size_t> counts;
  for (int n = 1; n <= 7; ++n) counts.push_back(partitions_of(n).size());
  EXPECT_EQ(counts, (std::vector<size_t>{1, 2, 3, 5, 7, 11, 15}));
}

TEST(FieldSpec, Basics) {
  EXPECT_EQ(FieldSpec::generic().describe(), "generic");
  EXPECT_EQ(FieldSpec::finite(9).describe(), "F9");
  EXPECT_THROW(FieldSpec::finite(6), InvalidArgument);
  EXPECT_FALSE(field_config(FieldSpec::finite(2)).epsilon);
  EXPECT_EQ(field_config(FieldSpec::finite(2)).symbols, 0);
  EXPECT_EQ(field_config(FieldSpec::finite(9)).symbols, 3);
  EXPECT_TRUE(field_config(FieldSpec::finite(9)).epsilon);
  EXPECT_EQ(field_config(FieldSpec::finite(8)).symbols, 3);
  EXPECT_FALSE(field_config(FieldSpec::finite(8)).epsilon);
  EXPECT_EQ(field_config(FieldSpec::generic()).symbols, -1);
}

TEST(YoungCandidates, SmallCases) {
  EXPECT_EQ(young_candidates({1, 1, 2}).size(), 2u);
  EXPECT_EQ(young_candidates({1, 2, 3}).size(), 1u);
  EXPECT_EQ(young_candidates({2, 2}).size(), 2u);
  for (const auto& sizes : partitions_of(5)) {
    for (const auto& g : young_candidates(sizes)) {
      EXPECT_TRUE(is_orbit_maximal(g));
      EXPECT_TRUE(g.is_subgroup_of(young_subgroup(sizes)));
    }
  }
}

TEST(OrbitMatrices, Examples) {
  std::vector<int> two = {1, 1};
  auto m = orbit_matrices(two, grp("<(1 2)>", 2));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0], (std::vector<std::vector<int>>{{1, 2}, {2, 1}}));
  auto t = orbit_matrices(two, PermGroup::trivial(2));
  EXPECT_EQ(t[0], (std::vector<std::vector<int>>{{1, 2}, {3, 4}}));
  std::vector<int> mixed = {1, 2};
  EXPECT_EQ(orbit_matrices(mixed, PermGroup::trivial(2)).size(), 2u);
}

TEST(Classify, SmallCounts) {
  std::vector<int> totals;
  for (int n = 1; n <= 5; ++n) {
    totals.push_back(summarize_counts(n, generic_records(n)).total);
  }
  EXPECT_EQ(totals, (std::vector<int>{1, 3, 6, 15, 25}));
  CountTable t4 = summarize_counts(4, generic_records(4));
  std::vector<int> per;
  for (const auto& row : t4.rows) per.push_back(row.count);
  EXPECT_EQ(per, (std::vector<int>{9, 2, 2, 1, 1}));
  EXPECT_THROW(classify(8, FieldSpec::generic()), CapExceeded);
  EXPECT_THROW(classify(0, FieldSpec::generic()), CapExceeded);
}

TEST(Classify, RecordsAreDistinctAndOrbitMaximal) {
  for (int n = 1; n <= 6; ++n) {
    ClassifyOptions o;
    o.compute_min_field = false;
    auto records = classify(n, FieldSpec::generic(), o);
    EXPECT_EQ(keys_of(records).size(), records.size()) << n;
    for (const auto& r : records) {
      EXPECT_TRUE(is_orbit_maximal(r.stab_rep));
      EXPECT_TRUE(r.stab_rep.is_subgroup_of(young_subgroup(r.sizes)));
      EXPECT_EQ(oracle::class_key(r.witness),
                oracle::class_key(r.sizes, r.stab_rep));
    }
  }
}

// Every type in dimension n over GF(q), found by trying every matrix,
// against the classification over that field.
TEST(Classify, MatchesExhaustiveSearch) {
  struct Case {
    int n, q;
  };
  for (Case c : {Case{2, 2}, Case{2, 3}, Case{2, 4}, Case{3, 2}, Case{3, 3},
                 Case{3, 4}, Case{3, 5}, Case{3, 7}, Case{4, 2}, Case{4, 3},
                 Case{4, 4}, Case{4, 5}, Case{4, 7}, Case{4, 8}, Case{5, 2},
                 Case{5, 3}, Case{5, 4}}) {
    auto records = classify(c.n, FieldSpec::finite(c.q));
    EXPECT_EQ(keys_of(records), oracle::field_types(c.n, c.q - 1))
        << "n=" << c.n << " q=" << c.q;
    for (const auto& r : records) {
      EXPECT_EQ(r.witness.group()->order(), c.q - 1);
      EXPECT_EQ(oracle::class_key(r.witness),
                oracle::class_key(r.sizes, r.stab_rep));
    }
  }
}

// Over F3 every type in dimension 6 is found by enumerating all 2^15
// matrices. The hexagon dihedral group is among the 21 monomial types.
TEST(Classify, DimSixOverF3MatchesExhaustiveSearch) {
  auto records = classify(6, FieldSpec::finite(3));
  EXPECT_EQ(keys_of(records), oracle::field_types(6, 2));
  std::set<oracle::ClassKey> monomial;
  for (const auto& r : records) {
    if (r.monomial()) monomial.insert(oracle::class_key(r.sizes, r.stab_rep));
  }
  EXPECT_EQ(monomial.size(), 21u);
  EXPECT_TRUE(monomial.count(oracle::class_key(
      std::vector<int>(6, 1), grp("<(1 2 3 4 5 6), (1 6)(2 5)(3 4)>", 6))));
}

// Minimal field sizes against exhaustive search. Every type in dimension
// n <= 5 is realized over some field of order at most 5.
TEST(Classify, MinFieldMatchesExhaustiveSearch) {
  for (int n = 2; n <= 5; ++n) {
    std::map<int, std::set<oracle::ClassKey>> types;
    for (int q : {2, 3, 4, 5}) {
      if (n == 5 && q == 5) continue;  // too many matrices; checked by witness
      types[q] = oracle::field_types(n, q - 1);
    }
    for (const auto& r : generic_records(n)) {
      ASSERT_TRUE(r.min_field.has_value());
      EXPECT_TRUE(r.min_field_exact);
      oracle::ClassKey key = oracle::class_key(r.sizes, r.stab_rep);
      int want = 0;
      for (const auto& [q, set] : types) {
        if (set.count(key)) {
          want = q;
          break;
        }
      }
      if (want == 0) want = 5;
      EXPECT_EQ(*r.min_field, want)
          << "n=" << n << " sizes=" << lambda_string(r.sizes) << " "
          << format_group(r.stab_rep);
      EXPECT_EQ(r.witness.group()->order(), *r.min_field - 1);
      EXPECT_EQ(oracle::class_key(r.witness), key);
    }
  }
}

// An embedding GF(q)^x -> GF(q')^x keeps equality and -1, so the types over
// GF(q) appear over GF(q') whenever q - 1 divides q' - 1.
TEST(Classify, SubgroupEmbeddingMonotone) {
  std::map<int, std::set<oracle::ClassKey>> keys;
  for (int q : {2, 3, 4, 5, 7, 9}) {
    keys[q] = keys_of(classify(5, FieldSpec::finite(q)));
  }
  auto generic = keys_of(generic_records(5));
  for (const auto& [q, a] : keys) {
    for (const auto& [q2, b] : keys) {
      if ((q2 - 1) % (q - 1) != 0) continue;
      for (const auto& k : a) EXPECT_TRUE(b.count(k)) << q << " in " << q2;
    }
    for (const auto& k : a) EXPECT_TRUE(generic.count(k));
  }
  EXPECT_EQ(keys[2].size(), 1u);  // all entries 1: GL(5) only
}

// (1 2)(3 4) on blocks of sizes 1, 1, 2, 2 is realized and is its own
// Young class, so it counts separately from <(1 2)> and <(3 4)>.
TEST(Classify, DiagonalSwapOnTwoSizes) {
  QMatrix block = testutil::sym("a,b", {"1    1    a b",
                                         "1    1    b a",
                                         "a^-1 b^-1 1 1",
                                         "b^-1 a^-1 1 1"});
  std::vector<int> sizes = {1, 1, 2, 2};
  QMatrix q = expand_to_dim(block, sizes);
  PermGroup swap = grp("<(1 2)(3 4)>", 4);
  EXPECT_EQ(oracle::stab(q), oracle::to_elements(swap));
  oracle::ClassKey key = oracle::class_key(sizes, swap);
  EXPECT_EQ(oracle::class_key(q), key);
  EXPECT_TRUE(is_orbit_maximal(swap));
  ClassifyOptions o;
  o.compute_min_field = false;
  auto records = classify(6, FieldSpec::generic(), o);
  EXPECT_TRUE(keys_of(records).count(key));
  for (const char* other : {"<(1 2)>", "<(3 4)>", "<(1 2),(3 4)>"}) {
    EXPECT_NE(oracle::class_key(sizes, grp(other, 4)), key);
  }
}

TEST(Classify, MonomialOnly) {
  ClassifyOptions o;
  o.monomial_only = true;
  o.compute_min_field = false;
  for (int n = 2; n <= 6; ++n) {
    auto mono = classify(n, FieldSpec::generic(), o);
    ClassifyOptions all;
    all.compute_min_field = false;
    size_t want = 0;
    for (const auto& r : classify(n, FieldSpec::generic(), all))
      want += r.monomial();
    EXPECT_EQ(mono.size(), want);
    for (const auto& r : mono) EXPECT_TRUE(r.monomial());
  }
}

TEST(Realize, KleinFourIsNotAStabilizer) {
  PermGroup v4 = grp("<(1 2)(3 4),(1 3)(2 4)>", 4);
  EXPECT_TRUE(is_orbit_maximal(v4));
  std::vector<int> sizes(4, 1);
  EXPECT_FALSE(realize(v4, sizes, FieldSpec::generic()).has_value());
  EXPECT_THROW(min_field_size(v4, sizes), InvalidArgument);
}

TEST(Realize, SmallFields) {
  std::vector<int> two = {1, 1};
  PermGroup triv = PermGroup::trivial(2);
  EXPECT_FALSE(realize(triv, two, FieldSpec::finite(2)).has_value());
  EXPECT_FALSE(realize(triv, two, FieldSpec::finite(3)).has_value());
  auto w = realize(triv, two, FieldSpec::finite(4));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(stab(*w).is_trivial());
  MinField mf = min_field_size(triv, two);
  EXPECT_EQ(mf.order, 4);
  EXPECT_TRUE(mf.exact);
  EXPECT_EQ(min_field_size(grp("<(1 2)>", 2), two).order, 3);
  std::vector<int> one = {2};
  EXPECT_EQ(min_field_size(PermGroup::trivial(1), one).order, 2);
}

TEST(Realize, BudgetCutoff) {
  std::vector<int> sizes(5, 1);
  PermGroup g = PermGroup::trivial(5);
  SearchOptions tiny;
  tiny.node_budget = 1;
  Realization r = realize_blocks(g, sizes, FieldSpec::finite(5), tiny);
  EXPECT_NE(r.verdict, Verdict::kImpossible);
  if (r.verdict == Verdict::kUnknown) {
    EXPECT_THROW(realize(g, sizes, FieldSpec::finite(5), tiny),
                 BudgetExhausted);
  }
  Realization full = realize_blocks(g, sizes, FieldSpec::finite(5));
  EXPECT_EQ(full.verdict, Verdict::kRealized);
  ASSERT_TRUE(full.block_matrix.has_value());
  EXPECT_TRUE(stab(*full.block_matrix).is_trivial());
}

// Random orbit-maximal groups: a realization, when found, has exactly the
// requested stabilizer.
TEST(Realize, WitnessesAreExact) {
  testutil::Rng rng(71);
  for (int t = 0; t < 60; ++t) {
    int r = testutil::uniform(rng, 2, 6);
    PermGroup g = closure(r, std::vector<Perm>{testutil::random_perm(rng, r)});
    g = orbit_closure_group(pair_orbits(g));
    std::vector<int> sizes(r, 1);
    for (int q : {3, 4, 5, 7}) {
      auto w = realize(g, sizes, FieldSpec::finite(q));
      if (!w) continue;
      EXPECT_EQ(stab(*w), g) << format_group(g) << " over F" << q;
      EXPECT_EQ(w->group()->order(), q - 1);
    }
  }
}

}  // namespace
}  // namespace qaffine
