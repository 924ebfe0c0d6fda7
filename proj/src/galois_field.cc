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

#include "qaffine/galois_field.h"

#include <utility>

#include "qaffine/errors.h"

namespace qaffine {

bool is_prime_power(int n, int* p, int* k) {
  if (n < 2) return false;
  int base = 0;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      base = d;
      break;
    }
  }
  if (base == 0) base = n;
  int m = n;
  int e = 0;
  while (m % base == 0) {
    m /= base;
    ++e;
  }
  if (m != 1) return false;
  if (p) *p = base;
  if (k) *k = e;
  return true;
}

std::vector<int> prime_powers_up_to(int limit) {
  std::vector<int> out;
  for (int n = 2; n <= limit; ++n) {
    if (is_prime_power(n)) out.push_back(n);
  }
  return out;
}

namespace {

// Digits of a in base p, little-endian, length k.
std::vector<int> digits(int a, int p, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

}  // namespace

GaloisField::GaloisField(int order) : q_(order) {
  if (order > 256 || !is_prime_power(order, &p_, &k_)) {
    throw InvalidArgument("field order must be a prime power <= 256, got " +
                          std::to_string(order));
  }
  add_.resize(q_ * q_);
  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    std::vector<int> da = digits(a, p_, k_);
    std::vector<int> na(k_);
    for (int i = 0; i < k_; ++i) na[i] = (p_ - da[i]) % p_;
    neg_[a] = undigits(na, p_);
    for (int b = 0; b < q_; ++b) {
      std::vector<int> db = digits(b, p_, k_);
      for (int i = 0; i < k_; ++i) db[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = undigits(db, p_);
    }
  }

  // Multiplication by the generator, as a map on the integer encoding.
  auto times_generator = [&](int a, int g, const std::vector<int>& poly) {
    if (k_ == 1) return (a * g) % p_;
    // a * x mod poly: shift digits up, reduce the overflow coefficient.
    std::vector<int> d = digits(a, p_, k_);
    int top = d[k_ - 1];
    for (int i = k_ - 1; i > 0; --i) d[i] = d[i - 1];
    d[0] = 0;
    for (int i = 0; i < k_; ++i) {
      d[i] = ((d[i] - top * poly[i]) % p_ + p_) % p_;
    }
    return undigits(d, p_);
  };
  auto generates = [&](int g, const std::vector<int>& poly) {
    std::vector<char> seen(q_, 0);
    int a = 1;
    for (int i = 0; i < q_ - 1; ++i) {
      if (seen[a]) return false;
      seen[a] = 1;
      a = times_generator(a, g, poly);
    }
    return a == 1;
  };

  int gen = 0;
  if (k_ == 1) {
    for (int g = 1; g < p_; ++g) {
      if (generates(g, {})) {
        gen = g;
        break;
      }
    }
    poly_ = {(p_ - gen) % p_};
  } else {
    for (int code = 0; code < q_; ++code) {
      std::vector<int> poly = digits(code, p_, k_);
      if (poly[0] != 0 && generates(0, poly)) {
        poly_ = poly;
        break;
      }
    }
    if (poly_.empty()) throw InternalError("no primitive polynomial found");
  }

  exp_.resize(2 * (q_ - 1));
  log_.assign(q_, -1);
  int a = 1;
  for (int i = 0; i < q_ - 1; ++i) {
    exp_[i] = a;
    log_[a] = i;
    a = times_generator(a, gen, poly_);
  }
  for (int i = q_ - 1; i < 2 * (q_ - 1); ++i) exp_[i] = exp_[i - (q_ - 1)];
}

FieldElem GaloisField::inv(FieldElem a) const {
  if (a == 0) throw InvalidArgument("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FieldElem GaloisField::pow_primitive(long e) const {
  long r = e % (q_ - 1);
  if (r < 0) r += q_ - 1;
  return exp_[r];
}

int GaloisField::log(FieldElem a) const {
  if (a == 0) throw InvalidArgument("logarithm of zero");
  return log_[a];
}

FieldElem GaloisField::embed_residue(int n, int e) const {
  if (n <= 0 || (q_ - 1) % n != 0) {
    throw EmbeddingError("cyclic group of order " + std::to_string(n) +
                         " does not embed in GF(" + std::to_string(q_) + ")");
  }
  return pow_primitive(static_cast<long>(e) * ((q_ - 1) / n));
}

FieldElem GaloisField::embed(const Scalar& s) const {
  if (!s.group()->is_finite()) {
    throw EmbeddingError("symbolic scalars must be specialised first");
  }
  return embed_residue(s.group()->order(), s.residue());
}

std::string GaloisField::format(FieldElem a) const {
  if (k_ == 1) return std::to_string(a);
  std::vector<int> d = digits(a, p_, k_);
  std::string out;
  for (int i = k_ - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || d[i] != 1) out += std::to_string(d[i]);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

FieldMatrix identity_matrix(int n) {
  FieldMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FieldMatrix multiply(const GaloisField& f, const FieldMatrix& x,
                     const FieldMatrix& y) {
  if (x.n != y.n) throw InvalidArgument("matrix size mismatch");
  FieldMatrix out(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int l = 0; l < x.n; ++l) {
      FieldElem xil = x.at(i, l);
      if (xil == 0) continue;
      for (int j = 0; j < x.n; ++j) {
        out.at(i, j) = f.add(out.at(i, j), f.mul(xil, y.at(l, j)));
      }
    }
  }
  return out;
}

namespace {

// Gauss-Jordan on [m | id]; returns false if singular.
bool gauss_jordan(const GaloisField& f, FieldMatrix m, FieldMatrix* inverse) {
  int n = m.n;
  FieldMatrix r = identity_matrix(n);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i) {
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return false;
    for (int j = 0; j < n; ++j) {
      std::swap(m.at(c, j), m.at(pivot, j));
      std::swap(r.at(c, j), r.at(pivot, j));
    }
    FieldElem s = f.inv(m.at(c, c));
    for (int j = 0; j < n; ++j) {
      m.at(c, j) = f.mul(s, m.at(c, j));
      r.at(c, j) = f.mul(s, r.at(c, j));
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || m.at(i, c) == 0) continue;
      FieldElem t = f.neg(m.at(i, c));
      for (int j = 0; j < n; ++j) {
        m.at(i, j) = f.add(m.at(i, j), f.mul(t, m.at(c, j)));
        r.at(i, j) = f.add(r.at(i, j), f.mul(t, r.at(c, j)));
      }
    }
  }
  if (inverse) *inverse = std::move(r);
  return true;
}

}  // namespace

bool is_invertible(const GaloisField& f, const FieldMatrix& m) {
  return gauss_jordan(f, m, nullptr);
}

FieldMatrix inverse(const GaloisField& f, const FieldMatrix& m) {
  FieldMatrix out;
  if (!gauss_jordan(f, m, &out)) throw InvalidArgument("singular matrix");
  return out;
}

}  // namespace qaffine
