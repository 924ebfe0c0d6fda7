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

#include "qaffine/qmatrix.h"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "qaffine/errors.h"

namespace qaffine {

SetPartition SetPartition::from_blocks(int n,
                                       std::vector<std::vector<int>> blocks) {
  SetPartition p;
  p.n_ = n;
  p.block_of_.assign(n, -1);
  for (auto& b : blocks) {
    if (b.empty()) throw InvalidArgument("empty block in set partition");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks.begin(), blocks.end());
  for (size_t k = 0; k < blocks.size(); ++k) {
    for (int i : blocks[k]) {
      if (i < 0 || i >= n || p.block_of_[i] >= 0) {
        throw InvalidArgument("blocks do not partition 0.." +
                              std::to_string(n - 1));
      }
      p.block_of_[i] = static_cast<int>(k);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (p.block_of_[i] < 0) {
      throw InvalidArgument("point " + std::to_string(i + 1) +
                            " is in no block");
    }
  }
  p.blocks_ = std::move(blocks);
  return p;
}

SetPartition SetPartition::from_labels(std::span<const int> labels) {
  std::map<int, std::vector<int>> groups;
  for (size_t i = 0; i < labels.size(); ++i) {
    groups[labels[i]].push_back(static_cast<int>(i));
  }
  std::vector<std::vector<int>> blocks;
  for (auto& [label, b] : groups) blocks.push_back(std::move(b));
  return from_blocks(static_cast<int>(labels.size()), std::move(blocks));
}

SetPartition SetPartition::singletons(int n) {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks.push_back({i});
  return from_blocks(n, std::move(blocks));
}

std::vector<int> SetPartition::block_sizes() const {
  std::vector<int> out;
  for (const auto& b : blocks_) out.push_back(static_cast<int>(b.size()));
  return out;
}

bool SetPartition::refines(const SetPartition& coarser) const {
  if (n_ != coarser.n_) return false;
  for (const auto& b : blocks_) {
    for (int i : b) {
      if (coarser.block_of(i) != coarser.block_of(b.front())) return false;
    }
  }
  return true;
}

std::string SetPartition::to_string() const {
  std::string out;
  for (size_t k = 0; k < blocks_.size(); ++k) {
    if (k) out += ',';
    out += '{';
    for (size_t t = 0; t < blocks_[k].size(); ++t) {
      if (t) out += ',';
      out += std::to_string(blocks_[k][t] + 1);
    }
    out += '}';
  }
  return out;
}

QMatrix::QMatrix(ValueGroupPtr group, int n, std::vector<Scalar> entries)
    : group_(std::move(group)), n_(n), entries_(std::move(entries)) {
  if (n < 0 || static_cast<int>(entries_.size()) != n * n) {
    throw InvalidArgument("matrix needs n^2 entries");
  }
  for (const Scalar& s : entries_) {
    if (!s.valid() || !same_group(s.group(), group_)) {
      throw ValueGroupMismatch("matrix entry outside " + group_->describe());
    }
  }
}

QMatrix QMatrix::ones(ValueGroupPtr group, int n) {
  Scalar one = Scalar::one(group);
  return QMatrix(group, n, std::vector<Scalar>(n * n, one));
}

std::vector<int> QMatrix::value_ids() const {
  std::map<Scalar, int> ids;
  std::vector<int> out(entries_.size());
  for (size_t c = 0; c < entries_.size(); ++c) {
    auto [it, fresh] =
        ids.emplace(entries_[c], static_cast<int>(ids.size()));
    out[c] = it->second;
  }
  return out;
}

std::vector<Scalar> QMatrix::distinct_values() const {
  std::set<Scalar> seen;
  std::vector<Scalar> out;
  for (const Scalar& s : entries_) {
    if (seen.insert(s).second) out.push_back(s);
  }
  return out;
}

bool QMatrix::operator==(const QMatrix& other) const {
  return n_ == other.n_ && same_group(group_, other.group_) &&
         entries_ == other.entries_;
}

void validate(const QMatrix& q) {
  int n = q.size();
  for (int i = 0; i < n; ++i) {
    if (!q(i, i).is_one()) {
      throw MatrixValidationError(
          MatrixValidationError::Kind::kDiagonalNotOne, i, i,
          "diagonal entry (" + std::to_string(i + 1) + "," +
              std::to_string(i + 1) + ") is " + format_scalar(q(i, i)) +
              ", not 1");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!mul(q(i, j), q(j, i)).is_one()) {
        throw MatrixValidationError(
            MatrixValidationError::Kind::kNotInversePair, i, j,
            "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                ") and (" + std::to_string(j + 1) + "," +
                std::to_string(i + 1) + ") are not inverse: " +
                format_scalar(q(i, j)) + ", " + format_scalar(q(j, i)));
      }
    }
  }
}

QMatrix make_qmatrix(const ValueGroupPtr& group,
                     const std::vector<std::vector<std::string>>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<Scalar> entries;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) {
      throw InvalidArgument("matrix rows must have length " +
                            std::to_string(n));
    }
    for (const std::string& s : row) entries.push_back(parse_scalar(s, group));
  }
  QMatrix q(group, n, std::move(entries));
  validate(q);
  return q;
}

SetPartition row_blocks(const QMatrix& q) {
  int n = q.size();
  std::vector<int> ids = q.value_ids();
  std::map<std::vector<int>, int> rows;
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> row(ids.begin() + i * n, ids.begin() + (i + 1) * n);
    labels[i] = rows.emplace(std::move(row), i).first->second;
  }
  return SetPartition::from_labels(labels);
}

bool Minor::is_constant() const {
  for (const Scalar& s : entries) {
    if (!(s == entries.front())) return false;
  }
  return true;
}

namespace {

void check_indices(const QMatrix& q, std::span<const int> idx) {
  for (int i : idx) {
    if (i < 0 || i >= q.size()) throw InvalidArgument("index out of range");
  }
}

}  // namespace

Minor minor(const QMatrix& q, std::span<const int> rows,
            std::span<const int> cols) {
  check_indices(q, rows);
  check_indices(q, cols);
  Minor m;
  m.rows = static_cast<int>(rows.size());
  m.cols = static_cast<int>(cols.size());
  for (int i : rows) {
    for (int j : cols) m.entries.push_back(q(i, j));
  }
  return m;
}

QMatrix submatrix(const QMatrix& q, std::span<const int> indices) {
  Minor m = minor(q, indices, indices);
  return QMatrix(q.group(), m.rows, std::move(m.entries));
}

QMatrix permute_indices(const QMatrix& q, const Perm& tau) {
  int n = q.size();
  if (tau.degree() != n) {
    throw InvalidArgument("permutation degree differs from matrix size");
  }
  std::vector<Scalar> e;
  e.reserve(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) e.push_back(q(tau(i), tau(j)));
  }
  return QMatrix(q.group(), n, std::move(e));
}

QMatrix block_permute(const QMatrix& q, const Perm& sigma) {
  SetPartition blocks = row_blocks(q);
  int r = blocks.num_blocks();
  if (sigma.degree() != r) {
    throw InvalidArgument("block permutation has degree " +
                          std::to_string(sigma.degree()) + ", expected " +
                          std::to_string(r));
  }
  for (int b = 0; b < r; ++b) {
    if (blocks.block(b).size() != blocks.block(sigma(b)).size()) {
      throw InvalidArgument("block permutation does not preserve sizes");
    }
  }
  int n = q.size();
  std::vector<Scalar> e;
  e.reserve(n * n);
  for (int i = 0; i < n; ++i) {
    int bi = blocks.block(sigma(blocks.block_of(i))).front();
    for (int j = 0; j < n; ++j) {
      int bj = blocks.block(sigma(blocks.block_of(j))).front();
      e.push_back(q(bi, bj));
    }
  }
  return QMatrix(q.group(), n, std::move(e));
}

QMatrix rebase(const QMatrix& q, const ValueGroupPtr& group) {
  if (same_group(q.group(), group)) return q;
  std::vector<Scalar> e;
  e.reserve(q.entries().size());
  for (const Scalar& s : q.entries()) e.push_back(rebase(s, group));
  return QMatrix(group, q.size(), std::move(e));
}

namespace {

// Common group for a binary operation.
ValueGroupPtr common_group(const ValueGroupPtr& a, const ValueGroupPtr& b) {
  if (same_group(a, b)) return a;
  if (a->is_finite() || b->is_finite()) {
    throw ValueGroupMismatch("operands from " + a->describe() + " and " +
                             b->describe());
  }
  return merge_symbolic(a, b);
}

}  // namespace

QMatrix kronecker(const QMatrix& a, const QMatrix& b) {
  ValueGroupPtr g = common_group(a.group(), b.group());
  QMatrix x = rebase(a, g);
  QMatrix y = rebase(b, g);
  int n = x.size();
  int m = y.size();
  std::vector<Scalar> e(n * m * n * m);
  for (int i = 0; i < n; ++i) {
    for (int i2 = 0; i2 < m; ++i2) {
      for (int j = 0; j < n; ++j) {
        for (int j2 = 0; j2 < m; ++j2) {
          e[(i * m + i2) * (n * m) + (j * m + j2)] = mul(x(i, j), y(i2, j2));
        }
      }
    }
  }
  return QMatrix(g, n * m, std::move(e));
}

namespace {

std::set<Scalar> pair_products(const QMatrix& q) {
  std::vector<Scalar> vals = q.distinct_values();
  std::set<Scalar> out;
  for (const Scalar& x : vals) {
    for (const Scalar& y : vals) out.insert(mul(x, y));
  }
  return out;
}

}  // namespace

bool mult_independent(const QMatrix& a, const QMatrix& b) {
  ValueGroupPtr g = common_group(a.group(), b.group());
  std::set<Scalar> pa = pair_products(rebase(a, g));
  std::set<Scalar> pb = pair_products(rebase(b, g));
  for (const Scalar& s : pa) {
    if (!s.is_one() && pb.count(s)) return false;
  }
  return true;
}

QMatrix expand_to_dim(const QMatrix& q, std::span<const int> sizes) {
  if (static_cast<int>(sizes.size()) != q.size()) {
    throw InvalidArgument("expand_to_dim: " + std::to_string(sizes.size()) +
                          " sizes for a " + std::to_string(q.size()) +
                          "x" + std::to_string(q.size()) + " matrix");
  }
  std::vector<int> origin;
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw InvalidArgument("block sizes must be positive");
    origin.insert(origin.end(), sizes[i], static_cast<int>(i));
  }
  Minor m = minor(q, origin, origin);
  return QMatrix(q.group(), m.rows, std::move(m.entries));
}

QMatrix direct_sum(const QMatrix& q1, const QMatrix& q2, const Scalar& a) {
  ValueGroupPtr g = common_group(common_group(q1.group(), q2.group()),
                                 a.group());
  QMatrix x = rebase(q1, g);
  QMatrix y = rebase(q2, g);
  Scalar s = rebase(a, g);
  Scalar si = inv(s);
  if (is_self_inverse(s)) {
    throw InvalidArgument("direct_sum: connecting scalar must not be +-1");
  }
  for (const QMatrix* m : {&x, &y}) {
    for (const Scalar& v : m->entries()) {
      if (v == s || v == si) {
        throw InvalidArgument("direct_sum: connecting scalar " +
                              format_scalar(s) + " is not fresh");
      }
    }
  }
  int n = x.size();
  int m = y.size();
  int t = n + m;
  std::vector<Scalar> e(t * t);
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      if (i < n && j < n) {
        e[i * t + j] = x(i, j);
      } else if (i >= n && j >= n) {
        e[i * t + j] = y(i - n, j - n);
      } else {
        e[i * t + j] = i < n ? s : si;
      }
    }
  }
  return QMatrix(g, t, std::move(e));
}

namespace {

constexpr long kCanonicalNodeCap = 20'000'000;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const QMatrix& q) : n_(q.size()) {
    ids_ = q.value_ids();
    int nv = 0;
    for (int id : ids_) nv = std::max(nv, id + 1);
    kind_.assign(nv, 2);
    inverse_.assign(nv, -1);
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        int v = ids_[i * n_ + j];
        if (q(i, j).is_one()) kind_[v] = 0;
        else if (q(i, j).is_epsilon()) kind_[v] = 1;
        inverse_[v] = ids_[j * n_ + i];
      }
    }
    code_.assign(nv, -1);
    tau_.assign(n_, -1);
    used_.assign(n_, 0);
  }

  void run() {
    std::vector<int> seq;
    extend(0, seq);
  }

  const std::vector<int>& best_sequence() const { return best_; }
  const std::vector<int>& best_tau() const { return best_tau_; }

 private:
  int code_of(int v, std::vector<int>& assigned) {
    if (kind_[v] == 0) return 0;
    if (kind_[v] == 1) return 1;
    if (code_[v] < 0) {
      int k = next_pair_++;
      code_[v] = 2 + 2 * k;
      code_[inverse_[v]] = 3 + 2 * k;
      assigned.push_back(v);
    }
    return code_[v];
  }

  // Compares seq with the same-length prefix of best_.
  int compare_prefix(const std::vector<int>& seq) const {
    for (size_t k = 0; k < seq.size(); ++k) {
      if (seq[k] != best_[k]) return seq[k] < best_[k] ? -1 : 1;
    }
    return 0;
  }

  void extend(int j, std::vector<int>& seq) {
    if (++nodes_ > kCanonicalNodeCap) {
      throw CapExceeded("canonical form search exceeded its node cap");
    }
    if (j == n_) {
      if (best_tau_.empty() || compare_prefix(seq) < 0) {
        best_ = seq;
        best_tau_ = tau_;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      tau_[j] = v;
      used_[v] = 1;
      std::vector<int> assigned;
      int saved_pairs = next_pair_;
      size_t base = seq.size();
      for (int i = 0; i < j; ++i) {
        seq.push_back(code_of(ids_[tau_[i] * n_ + v], assigned));
      }
      if (best_tau_.empty() || compare_prefix(seq) <= 0) extend(j + 1, seq);
      seq.resize(base);
      for (int a : assigned) {
        code_[a] = -1;
        code_[inverse_[a]] = -1;
      }
      next_pair_ = saved_pairs;
      used_[v] = 0;
      tau_[j] = -1;
    }
  }

  int n_;
  std::vector<int> ids_;
  std::vector<int> kind_;
  std::vector<int> inverse_;
  std::vector<int> code_;
  std::vector<int> tau_;
  std::vector<char> used_;
  int next_pair_ = 0;
  long nodes_ = 0;
  std::vector<int> best_;
  std::vector<int> best_tau_;
};

std::string generator_name(int k) {
  if (k < 26) return std::string(1, static_cast<char>('a' + k));
  return "s" + std::to_string(k);
}

}  // namespace

CanonicalForm canonical_form(const QMatrix& q) {
  validate(q);
  int n = q.size();
  CanonicalSearch search(q);
  search.run();
  const std::vector<int>& seq = search.best_sequence();
  int pairs = 0;
  for (int c : seq) pairs = std::max(pairs, c >= 2 ? (c - 2) / 2 + 1 : 0);
  std::vector<std::string> names;
  for (int k = 0; k < pairs; ++k) names.push_back(generator_name(k));
  ValueGroupPtr g = ValueGroup::symbolic(std::move(names));
  auto decode = [&](int c) {
    if (c == 0) return Scalar::one(g);
    if (c == 1) return Scalar::epsilon(g);
    return Scalar::generator(g, (c - 2) / 2, c % 2 == 0 ? 1 : -1);
  };
  std::vector<Scalar> e(n * n, Scalar::one(g));
  size_t pos = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      Scalar s = decode(seq[pos++]);
      e[j * n + i] = inv(s);
      e[i * n + j] = std::move(s);
    }
  }
  CanonicalForm out{QMatrix(g, n, std::move(e)),
                    n == 0 ? Perm(0) : Perm::from_images(search.best_tau())};
  return out;
}

}  // namespace qaffine
