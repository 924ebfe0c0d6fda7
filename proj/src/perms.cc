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

#include "qaffine/perms.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>

#include "qaffine/errors.h"

namespace qaffine {

Perm::Perm(int degree) {
  if (degree < 0 || degree > kMaxDegree) {
    throw CapExceeded("permutation degree " + std::to_string(degree) +
                      " exceeds " + std::to_string(kMaxDegree));
  }
  degree_ = static_cast<uint8_t>(degree);
  for (int i = 0; i < degree; ++i) img_[i] = static_cast<uint8_t>(i);
}

Perm Perm::from_images(std::span<const int> images) {
  Perm p(static_cast<int>(images.size()));
  std::vector<char> hit(images.size(), 0);
  for (size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 0 || v >= static_cast<int>(images.size()) || hit[v]) {
      throw InvalidArgument("image list is not a permutation");
    }
    hit[v] = 1;
    p.img_[i] = static_cast<uint8_t>(v);
  }
  return p;
}

Perm Perm::from_cycles(int degree,
                       const std::vector<std::vector<int>>& cycles) {
  Perm result(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const std::vector<int>& c = *it;
    Perm cyc(degree);
    std::vector<char> hit(degree, 0);
    for (size_t k = 0; k < c.size(); ++k) {
      if (c[k] < 0 || c[k] >= degree) {
        throw InvalidArgument("cycle point " + std::to_string(c[k] + 1) +
                              " out of range for degree " +
                              std::to_string(degree));
      }
      if (hit[c[k]]) throw InvalidArgument("repeated point in a cycle");
      hit[c[k]] = 1;
      cyc.img_[c[k]] = static_cast<uint8_t>(c[(k + 1) % c.size()]);
    }
    result = cyc * result;
  }
  return result;
}

std::vector<int> Perm::images() const {
  return std::vector<int>(img_.begin(), img_.begin() + degree_);
}

Perm Perm::operator*(const Perm& other) const {
  if (degree_ != other.degree_) {
    throw InvalidArgument("composing permutations of different degree");
  }
  Perm out(degree_);
  for (int i = 0; i < degree_; ++i) out.img_[i] = img_[other.img_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out(degree_);
  for (int i = 0; i < degree_; ++i) out.img_[img_[i]] = static_cast<uint8_t>(i);
  return out;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree_; ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

int Perm::order() const {
  int o = 1;
  for (int len : cycle_type()) o = std::lcm(o, len);
  return o;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(degree_, 0);
  for (int i = 0; i < degree_; ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> out;
  std::vector<char> seen(degree_, 0);
  for (int i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

uint64_t Perm::key() const {
  uint64_t k = degree_;
  for (int i = 0; i < degree_; ++i) k = (k << 4) | img_[i];
  return k;
}

std::string format_cycles(const Perm& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (size_t k = 0; k < c.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out;
}

namespace {

[[noreturn]] void cycle_error(std::string_view text, size_t pos,
                              const std::string& what) {
  throw ParseError(what + " in '" + std::string(text) + "'", 0,
                   static_cast<int>(pos) + 1);
}

}  // namespace

Perm parse_cycles(std::string_view text, int degree) {
  std::vector<std::vector<int>> cycles;
  size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') cycle_error(text, pos, "expected '('");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_space();
      }
      if (pos >= text.size()) cycle_error(text, pos, "unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        cycle_error(text, pos, "expected a point");
      }
      int v = 0;
      size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos++] - '0');
        if (v > 1000) cycle_error(text, start, "point too large");
      }
      if (v < 1 || v > degree) {
        cycle_error(text, start,
                    "point " + std::to_string(v) + " outside 1.." +
                        std::to_string(degree));
      }
      cycle.push_back(v - 1);
    }
    if (cycle.size() >= 2) cycles.push_back(std::move(cycle));
    skip_space();
  }
  try {
    return Perm::from_cycles(degree, cycles);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

namespace {

std::unordered_set<Perm, PermHash> closure_set(int degree,
                                               std::span<const Perm> gens) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> queue;
  Perm id(degree);
  seen.insert(id);
  queue.push_back(id);
  for (size_t head = 0; head < queue.size(); ++head) {
    for (const Perm& g : gens) {
      Perm next = g * queue[head];
      if (seen.insert(next).second) {
        if (seen.size() > kMaxGroupOrder) {
          throw CapExceeded("group order exceeds " +
                            std::to_string(kMaxGroupOrder));
        }
        queue.push_back(next);
      }
    }
  }
  return seen;
}

}  // namespace

PermGroup PermGroup::trivial(int degree) {
  PermGroup g;
  g.degree_ = degree;
  g.elements_ = {Perm(degree)};
  return g;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const Perm& p : elements) {
    if (p.degree() != degree) {
      throw InvalidArgument("element degree differs from group degree");
    }
  }
  if (elements.empty() || !elements.front().is_identity()) {
    throw InternalError("element list lacks the identity");
  }
  PermGroup g;
  g.degree_ = degree;
  std::unordered_set<Perm, PermHash> span{Perm(degree)};
  for (const Perm& p : elements) {
    if (span.count(p)) continue;
    g.generators_.push_back(p);
    span = closure_set(degree, g.generators_);
  }
  if (span.size() != elements.size()) {
    throw InternalError("element list is not closed under multiplication");
  }
  g.elements_ = std::move(elements);
  return g;
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  for (const Perm& g : generators_) {
    if (!other.contains(g)) return false;
  }
  return true;
}

PermGroup closure(int degree, std::span<const Perm> gens) {
  for (const Perm& g : gens) {
    if (g.degree() != degree) {
      throw InvalidArgument("generator degree differs from group degree");
    }
  }
  if (degree > kMaxDegree) {
    throw CapExceeded("degree " + std::to_string(degree) + " exceeds " +
                      std::to_string(kMaxDegree));
  }
  auto set = closure_set(degree, gens);
  return PermGroup::from_elements(degree,
                                  std::vector<Perm>(set.begin(), set.end()));
}

PermGroup parse_group(std::string_view text, int degree) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) {
    body.remove_prefix(1);
  }
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) {
    body.remove_suffix(1);
  }
  if (!body.empty() && body.front() == '<') {
    if (body.back() != '>') throw ParseError("unbalanced '<'", 0, 1);
    body = body.substr(1, body.size() - 2);
  }
  std::vector<Perm> gens;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] == '(') ++depth;
    if (i < body.size() && body[i] == ')') --depth;
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      std::string_view piece = body.substr(start, i - start);
      gens.push_back(parse_cycles(piece, degree));
      start = i + 1;
    }
  }
  return closure(degree, gens);
}

std::string format_group(const PermGroup& g) {
  if (g.generators().empty()) return "<()>";
  std::string out = "<";
  for (size_t i = 0; i < g.generators().size(); ++i) {
    if (i) out += ", ";
    out += format_cycles(g.generators()[i]);
  }
  return out + ">";
}

PermGroup conjugate(const PermGroup& g, const Perm& tau) {
  Perm tinv = tau.inverse();
  std::vector<Perm> els;
  els.reserve(g.order());
  for (const Perm& x : g.elements()) els.push_back(tau * x * tinv);
  return PermGroup::from_elements(g.degree(), std::move(els));
}

PairPartition PairPartition::from_labels(int degree,
                                         std::span<const int> labels) {
  if (degree < 0 || degree > kMaxDegree) {
    throw CapExceeded("pair partition degree exceeds " +
                      std::to_string(kMaxDegree));
  }
  if (static_cast<int>(labels.size()) != degree * degree) {
    throw InvalidArgument("pair partition needs degree^2 labels");
  }
  PairPartition p;
  p.degree_ = degree;
  p.labels_.resize(labels.size());
  int lo = 0;
  int hi = -1;
  for (int l : labels) {
    lo = std::min(lo, l);
    hi = std::max(hi, l);
  }
  int next = 0;
  if (lo >= 0 && hi < (1 << 16)) {
    std::vector<int> renumber(hi + 1, -1);
    for (size_t c = 0; c < labels.size(); ++c) {
      int& m = renumber[labels[c]];
      if (m < 0) m = next++;
      p.labels_[c] = static_cast<uint8_t>(m);
    }
  } else {
    std::map<int, int> renumber;
    for (size_t c = 0; c < labels.size(); ++c) {
      auto [it, fresh] = renumber.emplace(labels[c], next);
      if (fresh) ++next;
      p.labels_[c] = static_cast<uint8_t>(it->second);
    }
  }
  p.num_blocks_ = next;
  return p;
}

bool PairPartition::refines(const PairPartition& coarser) const {
  if (degree_ != coarser.degree_) return false;
  std::vector<int> image(num_blocks_, -1);
  for (size_t c = 0; c < labels_.size(); ++c) {
    int& slot = image[labels_[c]];
    if (slot < 0) {
      slot = coarser.labels_[c];
    } else if (slot != coarser.labels_[c]) {
      return false;
    }
  }
  return true;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void unite(std::vector<int>& parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

}  // namespace

PairPartition PairPartition::join(const PairPartition& other) const {
  if (degree_ != other.degree_) {
    throw InvalidArgument("joining pair partitions of different degree");
  }
  int cells = degree_ * degree_;
  std::vector<int> parent(cells);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> first_a(num_blocks_, -1), first_b(other.num_blocks_, -1);
  for (int c = 0; c < cells; ++c) {
    int& fa = first_a[labels_[c]];
    if (fa < 0) fa = c; else unite(parent, c, fa);
    int& fb = first_b[other.labels_[c]];
    if (fb < 0) fb = c; else unite(parent, c, fb);
  }
  std::vector<int> labels(cells);
  for (int c = 0; c < cells; ++c) labels[c] = find_root(parent, c);
  return from_labels(degree_, labels);
}

PairPartition PairPartition::image(const Perm& tau) const {
  if (tau.degree() != degree_) {
    throw InvalidArgument("permutation degree differs from partition degree");
  }
  std::vector<int> labels(labels_.size());
  for (int i = 0; i < degree_; ++i) {
    for (int j = 0; j < degree_; ++j) {
      labels[tau(i) * degree_ + tau(j)] = labels_[i * degree_ + j];
    }
  }
  return from_labels(degree_, labels);
}

PairPartition pair_orbits(const PermGroup& g) {
  int r = g.degree();
  std::vector<int> labels(r * r);
  for (int c = 0; c < r * r; ++c) labels[c] = c;
  for (const Perm& x : g.elements()) {
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        int& l = labels[i * r + j];
        l = std::min(l, x(i) * r + x(j));
      }
    }
  }
  return PairPartition::from_labels(r, labels);
}

namespace {

// Backtracking search for label-preserving permutations. Vertices are first
// split by iterated colour refinement so that only equivalent vertices are
// tried as images.
class LabelSearch {
 public:
  LabelSearch(int r, std::span<const int> colors, std::span<const int> labels)
      : r_(r), labels_(labels.begin(), labels.end()) {
    if (r < 0 || r > kMaxDegree) {
      throw CapExceeded("degree " + std::to_string(r) + " exceeds " +
                        std::to_string(kMaxDegree));
    }
    if (static_cast<int>(colors.size()) != r ||
        static_cast<int>(labels.size()) != r * r) {
      throw InvalidArgument("colour or label list has the wrong length");
    }
    refine(colors);
    img_.assign(r, -1);
    used_.assign(r, 0);
  }

  template <typename Visit>
  void run(Visit&& visit) {
    if (r_ == 0) {
      visit(img_);
      return;
    }
    extend(0, visit);
  }

 private:
  void refine(std::span<const int> colors) {
    cls_.assign(colors.begin(), colors.end());
    int classes = -1;
    while (true) {
      std::map<std::vector<int>, int> ids;
      std::vector<std::vector<int>> sig(r_);
      for (int i = 0; i < r_; ++i) {
        std::vector<std::array<int, 3>> nb;
        for (int j = 0; j < r_; ++j) {
          if (j != i) nb.push_back({labels_[i * r_ + j], labels_[j * r_ + i], cls_[j]});
        }
        std::sort(nb.begin(), nb.end());
        sig[i] = {cls_[i], labels_[i * r_ + i]};
        for (const auto& t : nb) sig[i].insert(sig[i].end(), t.begin(), t.end());
        ids.emplace(sig[i], 0);
      }
      int k = 0;
      for (auto& [s, id] : ids) id = k++;
      std::vector<int> next(r_);
      for (int i = 0; i < r_; ++i) next[i] = ids[sig[i]];
      cls_ = std::move(next);
      if (k == classes) break;
      classes = k;
    }
  }

  template <typename Visit>
  bool extend(int k, Visit& visit) {
    for (int v = 0; v < r_; ++v) {
      if (used_[v] || cls_[v] != cls_[k]) continue;
      bool ok = labels_[v * r_ + v] == labels_[k * r_ + k];
      for (int j = 0; ok && j < k; ++j) {
        ok = labels_[v * r_ + img_[j]] == labels_[k * r_ + j] &&
             labels_[img_[j] * r_ + v] == labels_[j * r_ + k];
      }
      if (!ok) continue;
      img_[k] = v;
      used_[v] = 1;
      bool go_on = k + 1 == r_ ? visit(img_) : extend(k + 1, visit);
      used_[v] = 0;
      img_[k] = -1;
      if (!go_on) return false;
    }
    return true;
  }

  int r_;
  std::vector<int> labels_;
  std::vector<int> cls_;
  std::vector<int> img_;
  std::vector<char> used_;
};

}  // namespace

std::vector<Perm> label_automorphisms(int r, std::span<const int> colors,
                                      std::span<const int> labels,
                                      size_t limit) {
  std::vector<Perm> out;
  if (limit == 0) return out;
  LabelSearch search(r, colors, labels);
  search.run([&](const std::vector<int>& img) {
    out.push_back(r == 0 ? Perm(0) : Perm::from_images(img));
    return out.size() < limit;
  });
  return out;
}

size_t count_label_automorphisms(int r, std::span<const int> colors,
                                 std::span<const int> labels, size_t limit) {
  size_t count = 0;
  if (limit == 0) return 0;
  LabelSearch search(r, colors, labels);
  search.run([&](const std::vector<int>&) { return ++count < limit; });
  return count;
}

PermGroup label_automorphism_group(int r, std::span<const int> colors,
                                   std::span<const int> labels) {
  auto els = label_automorphisms(r, colors, labels, kMaxGroupOrder + 1);
  if (els.size() > kMaxGroupOrder) {
    throw CapExceeded("automorphism group order exceeds " +
                      std::to_string(kMaxGroupOrder));
  }
  return PermGroup::from_elements(r, std::move(els));
}

PermGroup orbit_closure_group(const PairPartition& p) {
  int r = p.degree();
  std::vector<int> labels(p.labels().begin(), p.labels().end());
  std::vector<int> colors(r);
  for (int i = 0; i < r; ++i) colors[i] = p.block_of(i, i);
  return label_automorphism_group(r, colors, labels);
}

bool is_orbit_maximal(const PermGroup& g) {
  return orbit_closure_group(pair_orbits(g)).order() == g.order();
}

PermGroup young_subgroup(std::span<const int> sizes) {
  int r = static_cast<int>(sizes.size());
  if (r > kMaxDegree) {
    throw CapExceeded("degree " + std::to_string(r) + " exceeds " +
                      std::to_string(kMaxDegree));
  }
  std::map<int, int> mult;
  for (int s : sizes) ++mult[s];
  double order = 1;
  for (auto [s, m] : mult) {
    for (int i = 2; i <= m; ++i) order *= i;
  }
  if (order > static_cast<double>(kMaxGroupOrder)) {
    throw CapExceeded("Young subgroup order exceeds " +
                      std::to_string(kMaxGroupOrder));
  }
  std::vector<int> colors(sizes.begin(), sizes.end());
  std::vector<int> labels(r * r, 0);
  return label_automorphism_group(r, colors, labels);
}

std::optional<Perm> conjugate_within(const PermGroup& g, const PermGroup& h,
                                     const PermGroup& y) {
  if (g.degree() != h.degree() || g.degree() != y.degree() ||
      g.order() != h.order()) {
    return std::nullopt;
  }
  for (const Perm& tau : y.elements()) {
    Perm tinv = tau.inverse();
    bool ok = true;
    for (const Perm& x : g.generators()) {
      if (!h.contains(tau * x * tinv)) {
        ok = false;
        break;
      }
    }
    if (ok) return tau;
  }
  return std::nullopt;
}

namespace {

// Compact partition of at most 49 cells, for the closure computation.
using CellLabels = std::string;

CellLabels normalise(const std::vector<int>& raw) {
  CellLabels out(raw.size(), '\0');
  std::vector<int> map(raw.size(), -1);
  int next = 0;
  for (size_t c = 0; c < raw.size(); ++c) {
    int& m = map[raw[c]];
    if (m < 0) m = next++;
    out[c] = static_cast<char>(m);
  }
  return out;
}

CellLabels join_cells(const CellLabels& a, const CellLabels& b) {
  int cells = static_cast<int>(a.size());
  int parent[64];
  int first_a[64];
  int first_b[64];
  for (int c = 0; c < cells; ++c) {
    parent[c] = c;
    first_a[c] = -1;
    first_b[c] = -1;
  }
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto join = [&](int x, int y) {
    x = root(x);
    y = root(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (int c = 0; c < cells; ++c) {
    int& fa = first_a[static_cast<int>(a[c])];
    if (fa < 0) fa = c; else join(c, fa);
    int& fb = first_b[static_cast<int>(b[c])];
    if (fb < 0) fb = c; else join(c, fb);
  }
  CellLabels out(cells, '\0');
  int map[64];
  std::fill(map, map + cells, -1);
  int next = 0;
  for (int c = 0; c < cells; ++c) {
    int& m = map[root(c)];
    if (m < 0) m = next++;
    out[c] = static_cast<char>(m);
  }
  return out;
}

PairPartition to_partition(int r, const CellLabels& cells) {
  std::vector<int> labels(cells.begin(), cells.end());
  return PairPartition::from_labels(r, labels);
}

}  // namespace

std::vector<PairPartition> candidate_pair_partitions(int r) {
  if (r < 0 || r > kMaxCandidateDegree) {
    throw CapExceeded("candidate partitions need r <= " +
                      std::to_string(kMaxCandidateDegree));
  }
  std::vector<int> images(r);
  std::iota(images.begin(), images.end(), 0);
  std::unordered_set<CellLabels> cyclic_set;
  do {
    // Cyclic groups of prime power order suffice: <s> is generated by
    // powers of s of prime power order, and orbits of a generated group are
    // the join of the generators' orbits.
    Perm s = Perm::from_images(images);
    int ord = s.order();
    int pf = 0;
    for (int d = 2; d <= ord; ++d) {
      if (ord % d == 0) {
        ++pf;
        while (ord % d == 0) ord /= d;
      }
    }
    if (pf > 1) continue;
    std::vector<int> parent(r * r);
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        unite(parent, i * r + j, images[i] * r + images[j]);
      }
    }
    std::vector<int> raw(r * r);
    for (int c = 0; c < r * r; ++c) raw[c] = find_root(parent, c);
    cyclic_set.insert(normalise(raw));
  } while (std::next_permutation(images.begin(), images.end()));

  std::vector<CellLabels> cyclic(cyclic_set.begin(), cyclic_set.end());
  std::sort(cyclic.begin(), cyclic.end());
  // First cell of each cell's block, per cyclic partition.
  int cells = r * r;
  std::vector<std::vector<uint8_t>> rep(cyclic.size(), std::vector<uint8_t>(cells));
  for (size_t k = 0; k < cyclic.size(); ++k) {
    int first[64];
    std::fill(first, first + 64, -1);
    for (int c = 0; c < cells; ++c) {
      int& f = first[static_cast<int>(cyclic[k][c])];
      if (f < 0) f = c;
      rep[k][c] = static_cast<uint8_t>(f);
    }
  }
  std::unordered_set<CellLabels> seen(cyclic.begin(), cyclic.end());
  std::vector<CellLabels> queue = cyclic;
  for (size_t head = 0; head < queue.size(); ++head) {
    for (size_t k = 0; k < cyclic.size(); ++k) {
      const CellLabels& p = queue[head];
      bool refined = true;
      for (int c = 0; c < cells && refined; ++c) refined = p[c] == p[rep[k][c]];
      if (refined) continue;
      CellLabels j = join_cells(p, cyclic[k]);
      if (seen.insert(j).second) queue.push_back(std::move(j));
    }
  }
  std::sort(queue.begin(), queue.end());
  std::vector<PairPartition> out;
  out.reserve(queue.size());
  for (const CellLabels& c : queue) out.push_back(to_partition(r, c));
  return out;
}

std::vector<PermGroup> candidate_groups(int r) {
  std::vector<PairPartition> parts = candidate_pair_partitions(r);
  std::vector<int> images(r);
  std::iota(images.begin(), images.end(), 0);
  std::vector<Perm> sym;
  do {
    sym.push_back(Perm::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));

  std::set<PairPartition> seen;
  std::vector<PermGroup> out;
  for (const PairPartition& p : parts) {
    if (seen.count(p)) continue;
    for (const Perm& tau : sym) seen.insert(p.image(tau));
    PermGroup g = orbit_closure_group(p);
    if (pair_orbits(g) != p) {
      throw InternalError("orbit closure does not reproduce its partition");
    }
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace qaffine
