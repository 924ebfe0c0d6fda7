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

#include "qaffine/autgroup.h"

#include <algorithm>
#include <map>
#include <set>

#include "qaffine/errors.h"

namespace qaffine {

std::vector<std::pair<int, int>> StructuredAutGroup::lambda() const {
  std::map<int, int, std::greater<>> mult;
  for (int s : gl_degrees) ++mult[s];
  return {mult.begin(), mult.end()};
}

namespace {

// Value ids of q restricted to block representatives.
std::vector<int> block_labels(const QMatrix& q, const SetPartition& blocks) {
  std::vector<int> ids = q.value_ids();
  int n = q.size();
  int r = blocks.num_blocks();
  std::vector<int> labels(r * r);
  for (int b = 0; b < r; ++b) {
    for (int c = 0; c < r; ++c) {
      labels[b * r + c] = ids[blocks.block(b).front() * n + blocks.block(c).front()];
    }
  }
  return labels;
}

}  // namespace

PermGroup stab(const QMatrix& q) {
  SetPartition blocks = row_blocks(q);
  int r = blocks.num_blocks();
  std::vector<int> labels = block_labels(q, blocks);
  PermGroup g = label_automorphism_group(r, blocks.block_sizes(), labels);
  if (!is_orbit_maximal(g)) {
    throw InternalError("stabiliser is not the automorphism group of its "
                        "pair orbits");
  }
  return g;
}

StructuredAutGroup aut_structure(const QMatrix& q) {
  StructuredAutGroup a;
  a.blocks = row_blocks(q);
  a.gl_degrees = a.blocks.block_sizes();
  a.stab = stab(q);
  a.monomial = a.blocks.num_blocks() == q.size();
  return a;
}

std::string lambda_string(std::vector<int> sizes) {
  std::map<int, int> mult;
  for (int s : sizes) ++mult[s];
  std::string out;
  for (auto [s, m] : mult) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s) + "^" + std::to_string(m);
  }
  return out;
}

std::string structure_string(const std::vector<int>& sizes,
                             const PermGroup& stab) {
  std::map<int, int> mult;
  for (int s : sizes) ++mult[s];
  std::vector<std::string> parts;
  for (auto [s, m] : mult) {
    std::string base = s == 1 ? "kx" : "GL(" + std::to_string(s) + ")";
    if (m == 1) {
      parts.push_back(base);
    } else if (s == 1) {
      parts.push_back("(" + base + ")^" + std::to_string(m));
    } else {
      parts.push_back(base + "^" + std::to_string(m));
    }
  }
  std::string out;
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k) out += " x ";
    out += parts[k];
  }
  if (stab.is_trivial()) return out;
  return out + " ⋊ " + format_group(stab);
}

std::string structure_string(const StructuredAutGroup& a) {
  return structure_string(a.gl_degrees, a.stab);
}

FieldMatrix block_injection(const Perm& sigma, const QMatrix& q) {
  SetPartition blocks = row_blocks(q);
  int r = blocks.num_blocks();
  if (sigma.degree() != r) {
    throw InvalidArgument("block permutation has degree " +
                          std::to_string(sigma.degree()) + ", expected " +
                          std::to_string(r));
  }
  if (!stab(q).contains(sigma)) {
    throw InvalidArgument("permutation " + format_cycles(sigma) +
                          " is not in Stab(q)");
  }
  FieldMatrix h(q.size());
  for (int b = 0; b < r; ++b) {
    const auto& from = blocks.block(b);
    const auto& to = blocks.block(sigma(b));
    for (size_t k = 0; k < from.size(); ++k) h.at(to[k], from[k]) = 1;
  }
  return h;
}

namespace {

void check_shapes(const FieldMatrix& h, const QMatrix& q,
                  const GaloisField& field) {
  if (h.n != q.size()) {
    throw InvalidArgument("matrix is " + std::to_string(h.n) +
                          "x" + std::to_string(h.n) + " but q is " +
                          std::to_string(q.size()) + "x" +
                          std::to_string(q.size()));
  }
  for (FieldElem x : h.a) {
    if (x < 0 || x >= field.order()) {
      throw InvalidArgument("matrix entry outside GF(" +
                            std::to_string(field.order()) + ")");
    }
  }
}

std::vector<FieldElem> embedded_entries(const QMatrix& q,
                                        const GaloisField& field) {
  std::vector<FieldElem> out;
  out.reserve(q.entries().size());
  for (const Scalar& s : q.entries()) out.push_back(field.embed(s));
  return out;
}

}  // namespace

bool is_graded_automorphism(const FieldMatrix& h, const QMatrix& q,
                            const GaloisField& field) {
  check_shapes(h, q, field);
  int n = q.size();
  std::vector<FieldElem> e = embedded_entries(q, field);
  if (!is_invertible(field, h)) return false;
  std::vector<std::pair<int, int>> support;
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) {
      if (h.at(i, l) != 0) support.push_back({i, l});
    }
  }
  for (auto [i, l] : support) {
    for (auto [j, m] : support) {
      if (e[i * n + j] != e[l * n + m]) return false;
    }
  }
  return true;
}

bool relation_oracle(const FieldMatrix& h, const QMatrix& q,
                     const GaloisField& field) {
  check_shapes(h, q, field);
  int n = q.size();
  std::vector<FieldElem> e = embedded_entries(q, field);
  if (!is_invertible(field, h)) return false;
  std::vector<FieldElem> coef(n * n);
  // Adds c * v_a v_b to coef, rewritten so that the left index is smaller.
  auto add_term = [&](FieldElem c, int a, int b) {
    if (c == 0) return;
    if (a <= b) {
      coef[a * n + b] = field.add(coef[a * n + b], c);
    } else {
      coef[b * n + a] = field.add(coef[b * n + a], field.mul(c, e[b * n + a]));
    }
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::fill(coef.begin(), coef.end(), 0);
      FieldElem minus_q = field.neg(e[i * n + j]);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          add_term(field.mul(h.at(a, j), h.at(b, i)), a, b);
          add_term(field.mul(minus_q, field.mul(h.at(a, i), h.at(b, j))), a, b);
        }
      }
      for (FieldElem c : coef) {
        if (c != 0) return false;
      }
    }
  }
  return true;
}

Perm block_projection(const FieldMatrix& h, const QMatrix& q,
                      const GaloisField& field) {
  if (!is_graded_automorphism(h, q, field)) {
    throw NotAnAutomorphism("matrix is not a graded automorphism of q");
  }
  SetPartition blocks = row_blocks(q);
  int r = blocks.num_blocks();
  std::vector<int> images(r, -1);
  for (int b = 0; b < r; ++b) {
    std::set<int> rows;
    for (int j : blocks.block(b)) {
      for (int i = 0; i < q.size(); ++i) {
        if (h.at(i, j) != 0) rows.insert(i);
      }
    }
    int c = blocks.block_of(*rows.begin());
    const auto& target = blocks.block(c);
    if (!std::equal(rows.begin(), rows.end(), target.begin(), target.end())) {
      throw InternalError("automorphism does not map a block onto a block");
    }
    images[b] = c;
  }
  return Perm::from_images(images);
}

SemidirectFactor semidirect_factor(const FieldMatrix& h, const QMatrix& q,
                                   const GaloisField& field) {
  Perm sigma = block_projection(h, q, field);
  FieldMatrix iota = block_injection(sigma, q);
  FieldMatrix g = multiply(field, h, inverse(field, iota));
  SetPartition blocks = row_blocks(q);
  for (int i = 0; i < g.n; ++i) {
    for (int j = 0; j < g.n; ++j) {
      if (g.at(i, j) != 0 && blocks.block_of(i) != blocks.block_of(j)) {
        throw InternalError("semidirect factor is not block diagonal");
      }
    }
  }
  return {std::move(g), sigma};
}

namespace {

struct ValuePlan {
  bool needs_epsilon = false;
  int pairs = 0;
};

ValuePlan plan_values(const QMatrix& q) {
  ValuePlan plan;
  std::set<Scalar> seen;
  for (const Scalar& s : q.entries()) {
    if (s.is_one()) continue;
    if (s.is_epsilon()) {
      plan.needs_epsilon = true;
      continue;
    }
    if (seen.count(s)) continue;
    seen.insert(s);
    seen.insert(inv(s));
    ++plan.pairs;
  }
  return plan;
}

}  // namespace

bool specializable(const QMatrix& q, int field_order) {
  if (!is_prime_power(field_order)) return false;
  ValuePlan plan = plan_values(q);
  ValueGroupPtr g = ValueGroup::finite_units(field_order - 1);
  if (plan.needs_epsilon && !g->has_epsilon()) return false;
  return plan.pairs <= g->inverse_pair_count();
}

QMatrix specialize(const QMatrix& q, int field_order) {
  if (!specializable(q, field_order)) {
    throw EmbeddingError("values of q do not fit in GF(" +
                         std::to_string(field_order) + ")");
  }
  ValueGroupPtr g = ValueGroup::finite_units(field_order - 1);
  std::map<Scalar, Scalar> image;
  int next = 1;
  std::vector<Scalar> out;
  for (const Scalar& s : q.entries()) {
    auto it = image.find(s);
    if (it == image.end()) {
      if (s.is_one()) {
        it = image.emplace(s, Scalar::one(g)).first;
      } else if (s.is_epsilon()) {
        it = image.emplace(s, Scalar::epsilon(g)).first;
      } else {
        it = image.emplace(s, Scalar::power(g, next)).first;
        image.emplace(inv(s), Scalar::power(g, -next));
        ++next;
      }
    }
    out.push_back(it->second);
  }
  return QMatrix(g, q.size(), std::move(out));
}

int smallest_specializing_field(const QMatrix& q) {
  for (int f : prime_powers_up_to(256)) {
    if (specializable(q, f)) return f;
  }
  throw EmbeddingError("q needs a field with more than 256 elements");
}

}  // namespace qaffine
