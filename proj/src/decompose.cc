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

#include "qaffine/decompose.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "qaffine/errors.h"

namespace qaffine {

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// True if all q_ij with i in d, j in e carry the same value id.
bool constant_minor(const std::vector<int>& ids, int n,
                    const std::vector<int>& d, const std::vector<int>& e) {
  int v = ids[d.front() * n + e.front()];
  for (int i : d) {
    for (int j : e) {
      if (ids[i * n + j] != v) return false;
    }
  }
  return true;
}

}  // namespace

SetPartition independence_partition(const QMatrix& q) {
  int n = q.size();
  std::vector<int> ids = q.value_ids();
  std::map<std::vector<int>, int> row_class;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> row(ids.begin() + i * n, ids.begin() + (i + 1) * n);
    std::sort(row.begin(), row.end());
    parent[i] = row_class.emplace(std::move(row), i).first->second;
  }
  bool merged = true;
  while (merged) {
    merged = false;
    std::map<int, std::vector<int>> parts;
    for (int i = 0; i < n; ++i) parts[find_root(parent, i)].push_back(i);
    for (auto d = parts.begin(); d != parts.end() && !merged; ++d) {
      for (auto e = parts.begin(); e != parts.end(); ++e) {
        if (d == e || constant_minor(ids, n, d->second, e->second)) continue;
        int a = d->first;
        int b = e->first;
        parent[std::max(a, b)] = std::min(a, b);
        merged = true;
        break;
      }
    }
  }
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = find_root(parent, i);
  return SetPartition::from_labels(labels);
}

std::vector<Factor> direct_product_decomposition(const QMatrix& q) {
  SetPartition p = independence_partition(q);
  std::vector<Factor> out;
  for (const auto& d : p.blocks()) out.push_back({d, submatrix(q, d)});
  return out;
}

bool constant_off_diagonal(const QMatrix& q, const SetPartition& p) {
  if (p.size() != q.size()) {
    throw InvalidArgument("partition size differs from matrix size");
  }
  if (!row_blocks(q).refines(p)) {
    throw InvalidArgument("row blocks of q do not refine the partition");
  }
  std::vector<int> ids = q.value_ids();
  for (int d = 0; d < p.num_blocks(); ++d) {
    for (int e = 0; e < p.num_blocks(); ++e) {
      if (d != e && !constant_minor(ids, q.size(), p.block(d), p.block(e))) {
        return false;
      }
    }
  }
  return true;
}

CoarseSemidirect coarse_semidirect(const QMatrix& q, const SetPartition& p) {
  if (!constant_off_diagonal(q, p)) {
    throw InvalidArgument("q is not constant on off-diagonal minors of the "
                          "partition");
  }
  SetPartition blocks = row_blocks(q);
  PermGroup full = stab(q);
  for (const Perm& sigma : full.elements()) {
    for (const auto& d : p.blocks()) {
      std::vector<int> image;
      for (int i : d) {
        const auto& b = blocks.block(sigma(blocks.block_of(i)));
        // Each block of q is moved as a whole; take its matching point.
        const auto& src = blocks.block(blocks.block_of(i));
        size_t k = std::find(src.begin(), src.end(), i) - src.begin();
        image.push_back(b[k]);
      }
      std::sort(image.begin(), image.end());
      if (image != p.block(p.block_of(image.front()))) {
        throw InvalidArgument("Stab(q) does not preserve the partition");
      }
    }
  }

  CoarseSemidirect out;
  int m = p.num_blocks();
  std::vector<int> ids = q.value_ids();
  int n = q.size();
  std::map<std::vector<int>, int> diag_class;
  std::vector<int> colors(m);
  std::vector<int> labels(m * m, -1);
  size_t product = 1;
  for (int d = 0; d < m; ++d) {
    const auto& dd = p.block(d);
    QMatrix sub = submatrix(q, dd);
    out.factors.push_back(aut_structure(sub));
    product *= out.factors.back().stab.order();
    std::vector<int> key;
    for (int i : dd) {
      for (int j : dd) key.push_back(ids[i * n + j]);
    }
    colors[d] = diag_class.emplace(std::move(key), d).first->second;
    for (int e = 0; e < m; ++e) {
      labels[d * m + e] =
          d == e ? -1 : ids[p.block(d).front() * n + p.block(e).front()];
    }
  }
  out.group = label_automorphism_group(m, colors, labels);
  if (full.order() != out.group.order() * product) {
    throw InternalError("|Stab(q)| = " + std::to_string(full.order()) +
                        " but the coarse decomposition predicts " +
                        std::to_string(out.group.order() * product));
  }
  return out;
}

}  // namespace qaffine
