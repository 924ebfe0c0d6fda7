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

#include "qaffine/classify.h"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_set>

#include "qaffine/errors.h"

namespace qaffine {

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> desc;
  std::vector<int> cur;
  std::function<void(int, int)> gen = [&](int rest, int max_part) {
    if (rest == 0) {
      desc.push_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      gen(rest - p, p);
      cur.pop_back();
    }
  };
  gen(n, n);
  std::sort(desc.begin(), desc.end());
  for (auto& p : desc) std::reverse(p.begin(), p.end());
  return desc;
}

namespace {

const std::vector<PairPartition>& cached_candidates(int r) {
  static std::mutex mu;
  static std::map<int, std::vector<PairPartition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(r);
  if (it == cache.end()) {
    it = cache.emplace(r, candidate_pair_partitions(r)).first;
  }
  return it->second;
}

// Point orbits (diagonal blocks) must stay inside size classes.
bool respects_sizes(const PairPartition& p, const std::vector<int>& sizes) {
  int r = p.degree();
  std::map<int, int> size_of_block;
  for (int i = 0; i < r; ++i) {
    auto [it, fresh] = size_of_block.emplace(p.block_of(i, i), sizes[i]);
    if (!fresh && it->second != sizes[i]) return false;
  }
  return true;
}

}  // namespace

std::vector<PermGroup> young_candidates(const std::vector<int>& sizes) {
  int r = static_cast<int>(sizes.size());
  PermGroup young = young_subgroup(sizes);
  std::set<PairPartition> seen;
  std::vector<PermGroup> out;
  for (const PairPartition& p : cached_candidates(r)) {
    if (!respects_sizes(p, sizes) || seen.count(p)) continue;
    PairPartition least = p;
    for (const Perm& tau : young.elements()) {
      PairPartition img = p.image(tau);
      if (img < least) least = img;
      seen.insert(std::move(img));
    }
    out.push_back(orbit_closure_group(least));
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

std::vector<ClassRecord> classify(int n, const FieldSpec& field,
                                  const ClassifyOptions& options) {
  if (n < 1 || n > kMaxClassifyDim) {
    throw CapExceeded("classification supports 1 <= n <= " +
                      std::to_string(kMaxClassifyDim));
  }
  std::vector<ClassRecord> out;
  for (const std::vector<int>& sizes : partitions_of(n)) {
    if (options.monomial_only && static_cast<int>(sizes.size()) != n) continue;
    for (const PermGroup& g : young_candidates(sizes)) {
      Realization rz = realize_blocks(g, sizes, field, options.search);
      if (rz.verdict == Verdict::kUnknown) {
        throw BudgetExhausted("search for " + format_group(g) + " with sizes " +
                              std::to_string(sizes.size()) + " over " +
                              field.describe() + " exceeded its budget");
      }
      if (rz.verdict != Verdict::kRealized) continue;
      ClassRecord rec;
      rec.n = n;
      rec.sizes = sizes;
      rec.stab_rep = g;
      rec.witness = expand_to_dim(*rz.block_matrix, sizes);
      if (options.compute_min_field) {
        MinField mf = min_field_size(g, sizes, options.search);
        rec.min_field = mf.order;
        rec.min_field_exact = mf.exact;
        if (field.is_generic() && mf.witness) rec.witness = *mf.witness;
      }
      out.push_back(std::move(rec));
    }
  }
  return out;
}

CountTable summarize_counts(int n, const std::vector<ClassRecord>& records) {
  CountTable t;
  for (const auto& sizes : partitions_of(n)) t.rows.push_back({sizes, 0});
  for (const ClassRecord& rec : records) {
    for (CountRow& row : t.rows) {
      if (row.sizes == rec.sizes) ++row.count;
    }
    ++t.total;
  }
  return t;
}

std::vector<std::vector<std::vector<int>>> orbit_matrices(
    const std::vector<int>& sizes, const PermGroup& g) {
  PairPartition po = pair_orbits(g);
  std::vector<std::vector<std::vector<int>>> out;
  std::set<int> distinct(sizes.begin(), sizes.end());
  for (int s : distinct) {
    std::vector<int> idx;
    for (int i = 0; i < static_cast<int>(sizes.size()); ++i) {
      if (sizes[i] == s) idx.push_back(i);
    }
    std::map<int, int> number;
    std::vector<std::vector<int>> m(idx.size(), std::vector<int>(idx.size()));
    for (size_t a = 0; a < idx.size(); ++a) {
      for (size_t b = 0; b < idx.size(); ++b) {
        int o = po.block_of(idx[a], idx[b]);
        m[a][b] = number.emplace(o, static_cast<int>(number.size()) + 1).first->second;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::string format_orbit_matrices(const std::vector<int>& sizes,
                                  const PermGroup& g) {
  std::string out;
  for (const auto& m : orbit_matrices(sizes, g)) {
    if (!out.empty()) out += ' ';
    out += '[';
    for (size_t i = 0; i < m.size(); ++i) {
      if (i) out += "; ";
      for (size_t j = 0; j < m[i].size(); ++j) {
        if (j) out += ' ';
        out += std::to_string(m[i][j]);
      }
    }
    out += ']';
  }
  return out;
}

}  // namespace qaffine
