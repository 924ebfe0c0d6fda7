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

#ifndef QAFFINE_GALOIS_FIELD_H_
#define QAFFINE_GALOIS_FIELD_H_

#include <string>
#include <vector>

#include "qaffine/scalars.h"

namespace qaffine {

// Field elements are integers 0..q-1: the base-p digits of the integer are
// the coefficients of a polynomial in x modulo the defining polynomial.
// 0 and 1 are the additive and multiplicative identities.
using FieldElem = int;

// A finite field GF(p^k), q = p^k <= 256, with log/antilog tables.
//
// The primitive element is the smallest primitive root mod p when k = 1,
// otherwise the class of x modulo the first primitive polynomial in
// increasing order of its coefficient encoding.
class GaloisField {
 public:
  explicit GaloisField(int order);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return k_; }
  FieldElem primitive_element() const { return exp_[1]; }
  // Coefficients c_0..c_{k-1} of x^k + c_{k-1} x^{k-1} + ... + c_0.
  const std::vector<int>& defining_polynomial() const { return poly_; }

  FieldElem add(FieldElem a, FieldElem b) const { return add_[a * q_ + b]; }
  FieldElem neg(FieldElem a) const { return neg_[a]; }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  FieldElem mul(FieldElem a, FieldElem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  FieldElem inv(FieldElem a) const;
  FieldElem pow_primitive(long e) const;
  // Discrete logarithm to the primitive element; a must be nonzero.
  int log(FieldElem a) const;

  // Image of the residue e of the cyclic group of order n under the
  // embedding e -> g^(e (q-1)/n). Throws EmbeddingError unless n | q-1.
  FieldElem embed_residue(int n, int e) const;
  // Embeds a finite-mode scalar.
  FieldElem embed(const Scalar& s) const;

  std::string format(FieldElem a) const;

 private:
  int q_;
  int p_;
  int k_;
  std::vector<int> poly_;
  std::vector<FieldElem> add_;
  std::vector<FieldElem> neg_;
  std::vector<FieldElem> exp_;  // length 2(q-1)
  std::vector<int> log_;
};

// True if n is a prime power >= 2; sets p and k when it is.
bool is_prime_power(int n, int* p = nullptr, int* k = nullptr);

// Prime powers in [2, limit], ascending.
std::vector<int> prime_powers_up_to(int limit);

// Square matrix over a GaloisField, row-major.
struct FieldMatrix {
  int n = 0;
  std::vector<FieldElem> a;

  FieldMatrix() = default;
  explicit FieldMatrix(int size) : n(size), a(size * size, 0) {}
  FieldElem& at(int i, int j) { return a[i * n + j]; }
  FieldElem at(int i, int j) const { return a[i * n + j]; }
  bool operator==(const FieldMatrix&) const = default;
};

FieldMatrix identity_matrix(int n);
FieldMatrix multiply(const GaloisField& f, const FieldMatrix& x,
                     const FieldMatrix& y);
bool is_invertible(const GaloisField& f, const FieldMatrix& m);
// Throws InvalidArgument if singular.
FieldMatrix inverse(const GaloisField& f, const FieldMatrix& m);

}  // namespace qaffine

#endif  // QAFFINE_GALOIS_FIELD_H_
