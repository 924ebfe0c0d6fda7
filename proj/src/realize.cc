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

// Search for parameter matrices with a prescribed block stabiliser.
//
// A candidate r x r matrix is described by labels on the pair orbits of G:
// constant labels on orbits make every element of G an automorphism, so the
// search only has to rule out extra automorphisms and repeated rows. Label
// codes: 0 is 1, 1 is -1, 2 + 2k is the k-th symbol and 3 + 2k its inverse.

#include <algorithm>
#include <string>
#include <utility>

#include "qaffine/classify.h"
#include "qaffine/errors.h"
#include "qaffine/galois_field.h"

namespace qaffine {

FieldSpec FieldSpec::finite(int order) {
  if (!is_prime_power(order)) {
    throw InvalidArgument(std::to_string(order) + " is not a prime power");
  }
  return FieldSpec(order);
}

std::string FieldSpec::describe() const {
  return is_generic() ? "generic" : "F" + std::to_string(order_);
}

ValueGroupPtr FieldSpec::value_group() const {
  return is_generic() ? ValueGroup::symbolic({})
                      : ValueGroup::finite_units(order_ - 1);
}

FieldConfig field_config(const FieldSpec& field) {
  if (field.is_generic()) return {true, -1};
  ValueGroupPtr g = field.value_group();
  return {g->has_epsilon(), g->inverse_pair_count()};
}

namespace {

constexpr int kCodeOne = 0;
constexpr int kCodeEps = 1;

int inverse_code(int c) {
  if (c < 2) return c;
  return c % 2 == 0 ? c + 1 : c - 1;
}

// Orbit pairs {O, O^T} of G on off-diagonal cells, as search variables.
struct OrbitModel {
  int r = 0;
  std::vector<int> sizes;
  size_t group_order = 1;
  std::vector<int> cell_var;       // -1 on the diagonal
  std::vector<char> cell_positive; // cell lies in the variable's own orbit
  std::vector<char> self_paired;
  int num_vars = 0;

  OrbitModel(const PermGroup& g, const std::vector<int>& sz)
      : r(g.degree()), sizes(sz), group_order(g.order()) {
    PairPartition po = pair_orbits(g);
    int cells = r * r;
    cell_var.assign(cells, -1);
    cell_positive.assign(cells, 1);
    std::vector<int> orbit_var(po.num_blocks(), -1);
    std::vector<char> orbit_positive(po.num_blocks(), 1);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        if (i == j) continue;
        int o = po.block_of(i, j);
        if (orbit_var[o] < 0) {
          int t = po.block_of(j, i);
          orbit_var[o] = num_vars;
          self_paired.push_back(o == t);
          if (t != o) {
            orbit_var[t] = num_vars;
            orbit_positive[t] = 0;
          }
          ++num_vars;
        }
        cell_var[i * r + j] = orbit_var[o];
        cell_positive[i * r + j] = orbit_positive[o];
      }
    }
  }

  int non_self_paired() const {
    return static_cast<int>(std::count(self_paired.begin(), self_paired.end(), 0));
  }

  // Cell labels for a full assignment.
  std::vector<int> labels(const std::vector<int>& assign) const {
    std::vector<int> out(r * r, kCodeOne);
    for (int c = 0; c < r * r; ++c) {
      int v = cell_var[c];
      if (v < 0) continue;
      out[c] = cell_positive[c] ? assign[v] : inverse_code(assign[v]);
    }
    return out;
  }

  bool rows_distinct(const std::vector<int>& labels) const {
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        if (std::equal(labels.begin() + i * r, labels.begin() + (i + 1) * r,
                       labels.begin() + j * r)) {
          return false;
        }
      }
    }
    return true;
  }

  bool stabiliser_is_group(const std::vector<int>& labels) const {
    return count_label_automorphisms(r, sizes, labels, group_order + 1) ==
           group_order;
  }

  bool accepts(const std::vector<int>& assign) const {
    std::vector<int> l = labels(assign);
    return rows_distinct(l) && stabiliser_is_group(l);
  }
};

// Fresh symbols on every non-self-paired orbit pair; self-paired pairs range
// over {1, -1} (or 1 only). Any realizing labelling is refined by one of
// these, and refinement can only shrink the stabiliser, so this is complete
// whenever enough symbols exist.
bool fresh_assignment(const OrbitModel& m, bool epsilon,
                      std::vector<int>* found) {
  std::vector<int> self;
  std::vector<int> assign(m.num_vars, kCodeOne);
  int next = 0;
  for (int v = 0; v < m.num_vars; ++v) {
    if (m.self_paired[v]) {
      self.push_back(v);
    } else {
      assign[v] = 2 + 2 * next++;
    }
  }
  size_t choices = epsilon ? size_t{1} << self.size() : 1;
  for (size_t mask = 0; mask < choices; ++mask) {
    for (size_t k = 0; k < self.size(); ++k) {
      assign[self[k]] = (mask >> k) & 1 ? kCodeEps : kCodeOne;
    }
    if (m.accepts(assign)) {
      *found = assign;
      return true;
    }
  }
  return false;
}

// Depth-first search over orbit-pair labels with a bounded symbol supply.
class BoundedSearch {
 public:
  BoundedSearch(const OrbitModel& m, FieldConfig cfg, uint64_t budget)
      : m_(m), cfg_(cfg), budget_(budget), assign_(m.num_vars, -1) {
    for (int v = 0; v < m.num_vars; ++v) {
      if (domain_size(v) == 1) assign_[v] = kCodeOne;
    }
  }

  Verdict run() {
    if (forced_equal_rows()) return Verdict::kImpossible;
    extend(0);
    if (found_) return Verdict::kRealized;
    return aborted_ ? Verdict::kUnknown : Verdict::kImpossible;
  }

  const std::vector<int>& solution() const { return solution_; }
  int symbols_used() const { return solution_symbols_; }
  uint64_t nodes() const { return nodes_; }

 private:
  int domain_size(int v) const {
    int d = 1 + (cfg_.epsilon ? 1 : 0);
    if (!m_.self_paired[v] && cfg_.symbols > 0) d += 2;
    return d;
  }

  bool known(int c) const { return m_.cell_var[c] < 0 || assign_[m_.cell_var[c]] >= 0; }

  int label(int c) const {
    int v = m_.cell_var[c];
    if (v < 0) return kCodeOne;
    return m_.cell_positive[c] ? assign_[v] : inverse_code(assign_[v]);
  }

  // True if some pair of rows is equal under every completion.
  bool forced_equal_rows() const {
    int r = m_.r;
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        bool forced = true;
        for (int col = 0; col < r && forced; ++col) {
          int a = i * r + col;
          int b = j * r + col;
          bool ka = known(a);
          bool kb = known(b);
          if (ka && kb) {
            forced = label(a) == label(b);
          } else if (!ka && !kb && m_.cell_var[a] == m_.cell_var[b]) {
            forced = m_.cell_positive[a] == m_.cell_positive[b] ||
                     cfg_.symbols == 0;
          } else {
            forced = false;
          }
        }
        if (forced) return true;
      }
    }
    return false;
  }

  void extend(int v) {
    while (v < m_.num_vars && assign_[v] >= 0 && domain_size(v) == 1) ++v;
    if (v == m_.num_vars) {
      if (m_.accepts(assign_)) {
        found_ = true;
        solution_ = assign_;
        solution_symbols_ = used_;
      }
      return;
    }
    std::vector<int> options;
    if (!m_.self_paired[v]) {
      if (cfg_.symbols < 0 || used_ < cfg_.symbols) options.push_back(2 + 2 * used_);
      for (int k = used_ - 1; k >= 0; --k) {
        options.push_back(2 + 2 * k);
        options.push_back(3 + 2 * k);
      }
    }
    if (cfg_.epsilon) options.push_back(kCodeEps);
    options.push_back(kCodeOne);
    for (int code : options) {
      if (found_ || aborted_) return;
      if (budget_ && ++nodes_ > budget_) {
        aborted_ = true;
        return;
      }
      bool fresh = code >= 2 && (code - 2) / 2 == used_;
      if (fresh) ++used_;
      assign_[v] = code;
      if (!forced_equal_rows()) extend(v + 1);
      assign_[v] = -1;
      if (fresh) --used_;
    }
  }

  const OrbitModel& m_;
  FieldConfig cfg_;
  uint64_t budget_;
  std::vector<int> assign_;
  int used_ = 0;
  uint64_t nodes_ = 0;
  bool found_ = false;
  bool aborted_ = false;
  std::vector<int> solution_;
  int solution_symbols_ = 0;
};

std::string symbol_name(int k) {
  if (k < 26) return std::string(1, static_cast<char>('a' + k));
  return "s" + std::to_string(k);
}

QMatrix to_matrix(const OrbitModel& m, const std::vector<int>& assign,
                  const FieldSpec& field) {
  std::vector<int> labels = m.labels(assign);
  int symbols = 0;
  for (int c : labels) symbols = std::max(symbols, c >= 2 ? (c - 2) / 2 + 1 : 0);
  ValueGroupPtr g;
  if (field.is_generic()) {
    std::vector<std::string> names;
    for (int k = 0; k < symbols; ++k) names.push_back(symbol_name(k));
    g = ValueGroup::symbolic(std::move(names));
  } else {
    g = field.value_group();
  }
  std::vector<Scalar> e;
  e.reserve(labels.size());
  for (int c : labels) {
    if (c == kCodeOne) {
      e.push_back(Scalar::one(g));
    } else if (c == kCodeEps) {
      e.push_back(Scalar::epsilon(g));
    } else if (g->is_finite()) {
      int k = (c - 2) / 2 + 1;
      e.push_back(Scalar::power(g, c % 2 == 0 ? k : -k));
    } else {
      e.push_back(Scalar::generator(g, (c - 2) / 2, c % 2 == 0 ? 1 : -1));
    }
  }
  QMatrix q(g, m.r, std::move(e));
  validate(q);
  return q;
}

void check_group(const PermGroup& g, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != g.degree()) {
    throw InvalidArgument("group degree " + std::to_string(g.degree()) +
                          " differs from the number of blocks " +
                          std::to_string(sizes.size()));
  }
  for (int s : sizes) {
    if (s < 1) throw InvalidArgument("block sizes must be positive");
  }
  for (const Perm& x : g.generators()) {
    for (int i = 0; i < g.degree(); ++i) {
      if (sizes[x(i)] != sizes[i]) {
        throw InvalidArgument("group does not preserve block sizes");
      }
    }
  }
}

}  // namespace

Realization realize_blocks(const PermGroup& g, const std::vector<int>& sizes,
                           const FieldSpec& field,
                           const SearchOptions& options) {
  check_group(g, sizes);
  OrbitModel m(g, sizes);
  FieldConfig cfg = field_config(field);
  Realization out;
  std::vector<int> assign;
  if (cfg.symbols < 0 || cfg.symbols >= m.non_self_paired()) {
    if (fresh_assignment(m, cfg.epsilon, &assign)) {
      out.verdict = Verdict::kRealized;
      out.block_matrix = to_matrix(m, assign, field);
    }
    return out;
  }
  BoundedSearch search(m, cfg, options.node_budget);
  out.verdict = search.run();
  out.nodes = search.nodes();
  if (out.verdict == Verdict::kRealized) {
    out.block_matrix = to_matrix(m, search.solution(), field);
  }
  return out;
}

std::optional<QMatrix> realize(const PermGroup& g,
                               const std::vector<int>& sizes,
                               const FieldSpec& field,
                               const SearchOptions& options) {
  Realization r = realize_blocks(g, sizes, field, options);
  if (r.verdict == Verdict::kUnknown) {
    throw BudgetExhausted("realization search over " + field.describe() +
                          " exceeded its node budget");
  }
  if (!r.block_matrix) return std::nullopt;
  return expand_to_dim(*r.block_matrix, sizes);
}

MinField min_field_size(const PermGroup& g, const std::vector<int>& sizes,
                        const SearchOptions& options) {
  if (realize_blocks(g, sizes, FieldSpec::generic(), options).verdict !=
      Verdict::kRealized) {
    throw InvalidArgument("group is not realizable over any field");
  }
  MinField out;
  std::vector<FieldConfig> failed;
  for (int q : prime_powers_up_to(kMaxFieldOrder)) {
    FieldSpec field = FieldSpec::finite(q);
    FieldConfig cfg = field_config(field);
    bool dominated = false;
    for (const FieldConfig& f : failed) {
      dominated = dominated || ((!cfg.epsilon || f.epsilon) &&
                                cfg.symbols <= f.symbols);
    }
    if (dominated) continue;
    Realization r = realize_blocks(g, sizes, field, options);
    if (r.verdict == Verdict::kRealized) {
      out.order = q;
      out.witness = expand_to_dim(*r.block_matrix, sizes);
      return out;
    }
    if (r.verdict == Verdict::kUnknown) {
      out.exact = false;
    } else {
      failed.push_back(cfg);
    }
  }
  return out;
}

}  // namespace qaffine
