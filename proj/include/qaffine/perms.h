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

#ifndef QAFFINE_PERMS_H_
#define QAFFINE_PERMS_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qaffine {

// Largest degree a Perm can have.
inline constexpr int kMaxDegree = 12;
// Largest group any enumeration will materialise (8!).
inline constexpr size_t kMaxGroupOrder = 40320;
// Largest degree for operations that enumerate all of S_r.
inline constexpr int kMaxEnumerationDegree = 8;
// Largest degree for candidate pair partitions.
inline constexpr int kMaxCandidateDegree = 7;

// A permutation of {0, ..., degree-1}. Text forms are 1-based.
class Perm {
 public:
  Perm() = default;
  // Identity of the given degree.
  explicit Perm(int degree);
  // images[i] is the image of i; must be a bijection.
  static Perm from_images(std::span<const int> images);
  // Product of cycles, applied right to left; points are 0-based.
  static Perm from_cycles(int degree,
                          const std::vector<std::vector<int>>& cycles);

  int degree() const { return degree_; }
  int operator()(int i) const { return img_[i]; }
  std::vector<int> images() const;

  // (a * b)(i) = a(b(i)).
  Perm operator*(const Perm& other) const;
  Perm inverse() const;
  bool is_identity() const;
  int order() const;
  // Disjoint cycles of length >= 2, each starting at its least point,
  // ordered by that point. 0-based.
  std::vector<std::vector<int>> cycles() const;
  // Cycle lengths including fixed points, descending.
  std::vector<int> cycle_type() const;

  // Packed images, unique per permutation of a given degree.
  uint64_t key() const;

  auto operator<=>(const Perm&) const = default;

 private:
  uint8_t degree_ = 0;
  std::array<uint8_t, kMaxDegree> img_{};
};

struct PermHash {
  size_t operator()(const Perm& p) const { return p.key(); }
};

// "(1 2 3)(4 5)"; the identity prints as "()".
std::string format_cycles(const Perm& p);
// Parses a product of (possibly overlapping) cycles, applied right to left.
Perm parse_cycles(std::string_view text, int degree);

// A finite permutation group stored as its sorted element list.
class PermGroup {
 public:
  PermGroup() : elements_{Perm(0)} {}
  static PermGroup trivial(int degree);
  // Builds the group from a full element list. The list is checked to be
  // closed under multiplication; throws InternalError otherwise.
  static PermGroup from_elements(int degree, std::vector<Perm> elements);

  int degree() const { return degree_; }
  size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  bool contains(const Perm& p) const;
  bool is_subgroup_of(const PermGroup& other) const;
  // A small generating set chosen greedily from the sorted elements.
  const std::vector<Perm>& generators() const { return generators_; }
  bool is_trivial() const { return elements_.size() == 1; }

  bool operator==(const PermGroup& other) const {
    return degree_ == other.degree_ && elements_ == other.elements_;
  }

 private:
  int degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
};

// The group generated by gens. Throws CapExceeded past kMaxGroupOrder.
PermGroup closure(int degree, std::span<const Perm> gens);
// Parses "<(1 2),(3 4)>" or "(1 2), (3 4)" into the generated group.
PermGroup parse_group(std::string_view text, int degree);
// "<(1 2), (3 4)>"; "<()>" for the trivial group.
std::string format_group(const PermGroup& g);

// The group {tau g tau^-1}.
PermGroup conjugate(const PermGroup& g, const Perm& tau);

// A partition of the cells {0..r-1}^2, stored as one label per cell
// (row-major) normalised to first-occurrence numbering.
class PairPartition {
 public:
  PairPartition() = default;
  static PairPartition from_labels(int degree, std::span<const int> labels);

  int degree() const { return degree_; }
  int block_of(int i, int j) const { return labels_[i * degree_ + j]; }
  int num_blocks() const { return num_blocks_; }
  const std::vector<uint8_t>& labels() const { return labels_; }

  // True if every block of *this lies inside a block of coarser.
  bool refines(const PairPartition& coarser) const;
  // Finest common coarsening.
  PairPartition join(const PairPartition& other) const;
  // The partition whose block of (tau i, tau j) is the block of (i, j).
  PairPartition image(const Perm& tau) const;

  auto operator<=>(const PairPartition&) const = default;

 private:
  int degree_ = 0;
  int num_blocks_ = 0;
  std::vector<uint8_t> labels_;
};

// Orbits of G on pairs.
PairPartition pair_orbits(const PermGroup& g);
// {sigma : P(sigma i, sigma j) = P(i, j) for all i, j}.
PermGroup orbit_closure_group(const PairPartition& p);
// True when G equals the automorphism group of its own pair orbits.
bool is_orbit_maximal(const PermGroup& g);
// S_{s_1} x ... permuting only indices of equal size.
PermGroup young_subgroup(std::span<const int> sizes);
// Some tau in Y with tau G tau^-1 = H, if any.
std::optional<Perm> conjugate_within(const PermGroup& g, const PermGroup& h,
                                     const PermGroup& y);
// Pair orbit partitions of cyclic subgroups of S_r, closed under joins. Every
// orbit-maximal subgroup of S_r is the orbit closure group of exactly one.
std::vector<PairPartition> candidate_pair_partitions(int r);
// Orbit-maximal subgroups of S_r, one per S_r-conjugacy class, ordered by
// ascending order then by element list.
std::vector<PermGroup> candidate_groups(int r);

// Enumerates permutations sigma of {0..r-1} with
// colors[sigma i] == colors[i] and labels[sigma i][sigma j] == labels[i][j].
// Stops once `limit` elements are found. labels is row-major r x r.
std::vector<Perm> label_automorphisms(int r, std::span<const int> colors,
                                      std::span<const int> labels,
                                      size_t limit = kMaxGroupOrder + 1);
// Same search, counting only.
size_t count_label_automorphisms(int r, std::span<const int> colors,
                                 std::span<const int> labels, size_t limit);
// label_automorphisms as a group; throws CapExceeded past kMaxGroupOrder.
PermGroup label_automorphism_group(int r, std::span<const int> colors,
                                   std::span<const int> labels);

}  // namespace qaffine

#endif  // QAFFINE_PERMS_H_
