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

#include "qaffine/scalars.h"

#include <cctype>
#include <numeric>
#include <utility>

#include "qaffine/errors.h"

namespace qaffine {

ValueGroupPtr ValueGroup::finite_units(int order) {
  if (order < 1) {
    throw InvalidArgument("finite unit group needs order >= 1, got " +
                          std::to_string(order));
  }
  return std::shared_ptr<const ValueGroup>(
      new ValueGroup(Kind::kFiniteUnits, order, {}));
}

ValueGroupPtr ValueGroup::symbolic(std::vector<std::string> generators) {
  for (size_t i = 0; i < generators.size(); ++i) {
    const std::string& name = generators[i];
    bool ok = !name.empty() &&
              (std::isalpha(static_cast<unsigned char>(name[0])) ||
               name[0] == '_');
    for (char c : name) {
      ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
    }
    if (!ok) throw InvalidArgument("bad generator name '" + name + "'");
    for (size_t j = 0; j < i; ++j) {
      if (generators[j] == name) {
        throw InvalidArgument("duplicate generator name '" + name + "'");
      }
    }
  }
  return std::shared_ptr<const ValueGroup>(
      new ValueGroup(Kind::kSymbolic, 0, std::move(generators)));
}

int ValueGroup::generator_index(std::string_view name) const {
  for (size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

bool ValueGroup::has_epsilon() const {
  return kind_ == Kind::kSymbolic || order_ % 2 == 0;
}

long ValueGroup::inverse_pair_count() const {
  if (kind_ == Kind::kSymbolic) return -1;
  return (order_ - std::gcd(2, order_)) / 2;
}

std::string ValueGroup::describe() const {
  if (kind_ == Kind::kFiniteUnits) return "finite:" + std::to_string(order_ + 1);
  std::string out = "symbolic:";
  for (size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ',';
    out += generators_[i];
  }
  return out;
}

bool same_group(const ValueGroupPtr& a, const ValueGroupPtr& b) {
  return a == b || (a && b && *a == *b);
}

ValueGroupPtr merge_symbolic(const ValueGroupPtr& a, const ValueGroupPtr& b) {
  if (a->is_finite() || b->is_finite()) {
    throw ValueGroupMismatch("cannot merge " + a->describe() + " with " +
                             b->describe());
  }
  std::vector<std::string> names = a->generators();
  for (const std::string& name : b->generators()) {
    if (a->generator_index(name) < 0) names.push_back(name);
  }
  if (names.size() == a->generators().size()) return a;
  return ValueGroup::symbolic(std::move(names));
}

namespace {

void require_same(const Scalar& a, const Scalar& b) {
  if (!a.valid() || !b.valid()) {
    throw InvalidArgument("operation on an uninitialised scalar");
  }
  if (!same_group(a.group(), b.group())) {
    throw ValueGroupMismatch("scalars from " + a.group()->describe() +
                             " and " + b.group()->describe());
  }
}

long floor_mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Scalar Scalar::one(ValueGroupPtr group) {
  Scalar s;
  if (!group->is_finite()) {
    s.exponents_.assign(group->num_generators(), 0);
  }
  s.group_ = std::move(group);
  return s;
}

Scalar Scalar::epsilon(ValueGroupPtr group) {
  if (!group->has_epsilon()) {
    throw InvalidArgument(group->describe() + " has no element of order 2");
  }
  Scalar s = one(group);
  if (group->is_finite()) {
    s.residue_ = group->order() / 2;
  } else {
    s.negative_ = true;
  }
  return s;
}

Scalar Scalar::power(ValueGroupPtr group, long e) {
  if (!group->is_finite()) {
    throw ValueGroupMismatch("residues need a finite unit group");
  }
  Scalar s = one(group);
  s.residue_ = static_cast<int>(floor_mod(e, group->order()));
  return s;
}

Scalar Scalar::generator(ValueGroupPtr group, int index, int exponent) {
  if (group->is_finite()) {
    throw ValueGroupMismatch("named generators need a symbolic group");
  }
  if (index < 0 || index >= group->num_generators()) {
    throw InvalidArgument("generator index out of range");
  }
  Scalar s = one(group);
  s.exponents_[index] = exponent;
  return s;
}

Scalar Scalar::monomial(ValueGroupPtr group, std::vector<int> exponents,
                        bool negative) {
  if (group->is_finite()) {
    throw ValueGroupMismatch("monomials need a symbolic group");
  }
  if (static_cast<int>(exponents.size()) != group->num_generators()) {
    throw InvalidArgument("exponent vector has wrong length");
  }
  Scalar s;
  s.group_ = std::move(group);
  s.exponents_ = std::move(exponents);
  s.negative_ = negative;
  return s;
}

bool Scalar::is_one() const {
  if (group_->is_finite()) return residue_ == 0;
  if (negative_) return false;
  for (int e : exponents_) {
    if (e != 0) return false;
  }
  return true;
}

bool Scalar::is_epsilon() const {
  if (group_->is_finite()) {
    return group_->order() % 2 == 0 && residue_ == group_->order() / 2;
  }
  if (!negative_) return false;
  for (int e : exponents_) {
    if (e != 0) return false;
  }
  return true;
}

bool operator==(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  return a.residue_ == b.residue_ && a.negative_ == b.negative_ &&
         a.exponents_ == b.exponents_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (auto c = a.residue_ <=> b.residue_; c != 0) return c;
  if (auto c = a.negative_ <=> b.negative_; c != 0) return c;
  return a.exponents_ <=> b.exponents_;
}

Scalar mul(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.group()->is_finite()) {
    return Scalar::power(a.group(), long{a.residue()} + b.residue());
  }
  std::vector<int> exps = a.exponents();
  for (size_t i = 0; i < exps.size(); ++i) exps[i] += b.exponents()[i];
  return Scalar::monomial(a.group(), std::move(exps),
                          a.negative() != b.negative());
}

Scalar inv(const Scalar& a) {
  if (!a.valid()) throw InvalidArgument("operation on an uninitialised scalar");
  if (a.group()->is_finite()) return Scalar::power(a.group(), -a.residue());
  std::vector<int> exps = a.exponents();
  for (int& e : exps) e = -e;
  return Scalar::monomial(a.group(), std::move(exps), a.negative());
}

bool is_self_inverse(const Scalar& a) { return a.is_one() || a.is_epsilon(); }

Scalar rebase(const Scalar& s, const ValueGroupPtr& group) {
  if (same_group(s.group(), group)) return s;
  if (s.group()->is_finite() || group->is_finite()) {
    throw ValueGroupMismatch("cannot move " + s.group()->describe() +
                             " scalar into " + group->describe());
  }
  std::vector<int> exps(group->num_generators(), 0);
  const auto& names = s.group()->generators();
  for (size_t i = 0; i < names.size(); ++i) {
    int j = group->generator_index(names[i]);
    if (j < 0) {
      if (s.exponents()[i] == 0) continue;
      throw ValueGroupMismatch("generator '" + names[i] + "' missing from " +
                               group->describe());
    }
    exps[j] = s.exponents()[i];
  }
  return Scalar::monomial(group, std::move(exps), s.negative());
}

namespace {

class ScalarParser {
 public:
  ScalarParser(std::string_view text, const ValueGroupPtr& group)
      : text_(text), group_(group) {}

  Scalar parse() {
    if (text_ == "1") return Scalar::one(group_);
    if (text_ == "-1") {
      if (!group_->has_epsilon()) fail("-1 does not exist in this group");
      return Scalar::epsilon(group_);
    }
    return group_->is_finite() ? parse_finite() : parse_symbolic();
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in '" + std::string(text_) + "'", 0,
                     static_cast<int>(pos_) + 1);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  long parse_int(bool allow_sign) {
    bool neg = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected an integer");
    }
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1000000000L) fail("integer too large");
    }
    return neg ? -v : v;
  }

  Scalar parse_finite() {
    if (peek() != 'g') fail("expected 1, -1 or g^<e>");
    ++pos_;
    if (peek() != '^') fail("expected '^'");
    ++pos_;
    long e = parse_int(false);
    if (!at_end()) fail("trailing characters");
    if (e >= group_->order()) {
      pos_ = 0;
      fail("residue " + std::to_string(e) + " out of range for order " +
           std::to_string(group_->order()));
    }
    return Scalar::power(group_, e);
  }

  Scalar parse_symbolic() {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    std::vector<int> exps(group_->num_generators(), 0);
    while (true) {
      size_t start = pos_;
      if (!(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
        fail("expected a generator name");
      }
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      int idx = group_->generator_index(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown generator '" + std::string(name) + "'");
      }
      long e = 1;
      if (peek() == '^') {
        ++pos_;
        e = parse_int(true);
      }
      exps[idx] += static_cast<int>(e);
      if (at_end()) break;
      if (peek() != '*') fail("expected '*'");
      ++pos_;
    }
    return Scalar::monomial(group_, std::move(exps), negative);
  }

  std::string_view text_;
  const ValueGroupPtr& group_;
  size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const ValueGroupPtr& group) {
  if (text.empty()) throw ParseError("empty scalar", 0, 1);
  return ScalarParser(text, group).parse();
}

std::string format_scalar(const Scalar& s) {
  if (s.is_one()) return "1";
  if (s.is_epsilon()) return "-1";
  const ValueGroup& g = *s.group();
  if (g.is_finite()) return "g^" + std::to_string(s.residue());
  std::string out = s.negative() ? "-" : "";
  bool first = true;
  for (int i = 0; i < g.num_generators(); ++i) {
    int e = s.exponents()[i];
    if (e == 0) continue;
    if (!first) out += '*';
    first = false;
    out += g.generators()[i];
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace qaffine
