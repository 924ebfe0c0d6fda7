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

#include "qaffine/families.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "qaffine/errors.h"

namespace qaffine {

QMatrix symmetric_family(int n, ValueGroupPtr group) {
  if (n < 1) throw InvalidArgument("symmetric family needs n >= 1");
  if (!group->has_epsilon()) {
    throw InvalidArgument(group->describe() + " has no -1");
  }
  Scalar one = Scalar::one(group);
  Scalar eps = Scalar::epsilon(group);
  std::vector<Scalar> e(n * n, eps);
  for (int i = 0; i < n; ++i) e[i * n + i] = one;
  return QMatrix(group, n, std::move(e));
}

QMatrix dihedral_family(int n, ValueGroupPtr group) {
  if (n < 4) throw InvalidArgument("dihedral family needs n >= 4");
  if (!group->has_epsilon()) {
    throw InvalidArgument(group->describe() + " has no -1");
  }
  Scalar one = Scalar::one(group);
  Scalar eps = Scalar::epsilon(group);
  std::vector<Scalar> e(n * n, one);
  if (n == 4) {
    for (auto [i, j] : {std::pair{0, 2}, std::pair{1, 3}}) {
      e[i * n + j] = eps;
      e[j * n + i] = eps;
    }
  } else {
    for (int i = 0; i < n; ++i) {
      int j = (i + 1) % n;
      e[i * n + j] = eps;
      e[j * n + i] = eps;
    }
  }
  return QMatrix(group, n, std::move(e));
}

namespace {

// Runs [start, end) of a consecutive-run permutation; empty if not one.
std::vector<std::pair<int, int>> cycle_runs(const Perm& sigma) {
  std::vector<std::pair<int, int>> runs;
  int n = sigma.degree();
  int start = 0;
  while (start < n) {
    int i = start;
    while (sigma(i) == i + 1) ++i;
    if (sigma(i) != start) return {};
    runs.push_back({start, i + 1});
    start = i + 1;
  }
  return runs;
}

std::string symbol_name(int k) {
  if (k < 26) return std::string(1, static_cast<char>('a' + k));
  return "s" + std::to_string(k);
}

}  // namespace

bool is_normalized_cycle_order(const Perm& sigma) {
  return sigma.degree() == 0 || !cycle_runs(sigma).empty();
}

Perm normalizing_conjugator(const Perm& sigma) {
  int n = sigma.degree();
  std::vector<std::vector<int>> cycles;
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = sigma(j)) {
      seen[j] = 1;
      c.push_back(j);
    }
    cycles.push_back(std::move(c));
  }
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  std::vector<int> images(n);
  int next = 0;
  for (const auto& c : cycles) {
    for (int x : c) images[x] = next++;
  }
  return Perm::from_images(images);
}

QMatrix cyclic_family(const Perm& sigma) {
  int n = sigma.degree();
  if (n < 1) throw InvalidArgument("cyclic family needs degree >= 1");
  std::vector<std::pair<int, int>> runs = cycle_runs(sigma);
  if (runs.empty()) {
    throw InvalidArgument(format_cycles(sigma) +
                          " is not in consecutive cycle order");
  }
  int m = static_cast<int>(runs.size());
  std::vector<int> cls(n);
  for (int k = 0; k < m; ++k) {
    for (int i = runs[k].first; i < runs[k].second; ++i) cls[i] = k;
  }

  // Symbol (or -1 for epsilon) per (class pair, offset), allocated in order.
  struct Slot {
    int symbol;  // -1: epsilon
    bool inverted;
  };
  int next_symbol = 0;
  std::vector<std::vector<std::vector<Slot>>> within(m), across(m);
  for (int k = 0; k < m; ++k) {
    int c = runs[k].second - runs[k].first;
    std::vector<Slot> slots(c, {0, false});
    for (int d = 1; d < c; ++d) {
      if (2 * d == c) {
        slots[d] = {-1, false};
      } else if (2 * d < c) {
        slots[d] = {next_symbol, false};
        slots[c - d] = {next_symbol, true};
        ++next_symbol;
      }
    }
    within[k] = {std::move(slots)};
  }
  for (int k = 0; k < m; ++k) {
    across[k].resize(m);
    for (int l = k + 1; l < m; ++l) {
      int g = std::gcd(runs[k].second - runs[k].first,
                       runs[l].second - runs[l].first);
      for (int d = 0; d < g; ++d) across[k][l].push_back({next_symbol++, false});
    }
  }

  std::vector<std::string> names;
  for (int s = 0; s < next_symbol; ++s) names.push_back(symbol_name(s));
  ValueGroupPtr group = ValueGroup::symbolic(std::move(names));
  auto make = [&](const Slot& s, bool invert) {
    if (s.symbol < 0) return Scalar::epsilon(group);
    return Scalar::generator(group, s.symbol, s.inverted != invert ? -1 : 1);
  };

  std::vector<Scalar> e(n * n, Scalar::one(group));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int k = cls[i];
      int l = cls[j];
      Scalar s;
      if (k == l) {
        int c = runs[k].second - runs[k].first;
        s = make(within[k][0][(j - i) % c], false);
      } else {
        int g = static_cast<int>(across[k][l].size());
        int off = ((j - i) % g + g) % g;
        s = make(across[k][l][off], false);
      }
      e[j * n + i] = inv(s);
      e[i * n + j] = std::move(s);
    }
  }
  return QMatrix(group, n, std::move(e));
}

QMatrix inflate(const QMatrix& q, int m) {
  if (m < 1) throw InvalidArgument("inflate needs m >= 1");
  return kronecker(q, QMatrix::ones(q.group(), m));
}

StructuredAutGroup tensor_structure(const QMatrix& a, const QMatrix& b) {
  if (!mult_independent(a, b)) {
    throw InvalidArgument("matrices are not multiplicatively independent");
  }
  StructuredAutGroup sa = aut_structure(a);
  StructuredAutGroup sb = aut_structure(b);
  int n2 = b.size();
  int r1 = sa.blocks.num_blocks();
  int r2 = sb.blocks.num_blocks();
  std::vector<std::vector<int>> blocks;
  StructuredAutGroup out;
  for (int x = 0; x < r1; ++x) {
    for (int y = 0; y < r2; ++y) {
      std::vector<int> block;
      for (int i : sa.blocks.block(x)) {
        for (int j : sb.blocks.block(y)) block.push_back(i * n2 + j);
      }
      blocks.push_back(std::move(block));
    }
  }
  out.blocks = SetPartition::from_blocks(a.size() * n2, std::move(blocks));
  out.gl_degrees = out.blocks.block_sizes();
  if (sa.stab.order() * sb.stab.order() > kMaxGroupOrder) {
    throw CapExceeded("product stabiliser exceeds the group order cap");
  }
  std::vector<Perm> els;
  for (const Perm& s : sa.stab.elements()) {
    for (const Perm& t : sb.stab.elements()) {
      std::vector<int> images(r1 * r2);
      for (int x = 0; x < r1; ++x) {
        for (int y = 0; y < r2; ++y) images[x * r2 + y] = s(x) * r2 + t(y);
      }
      els.push_back(Perm::from_images(images));
    }
  }
  out.stab = PermGroup::from_elements(r1 * r2, std::move(els));
  out.monomial = out.blocks.num_blocks() == a.size() * n2;
  return out;
}

}  // namespace qaffine
