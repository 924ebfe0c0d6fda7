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

// qaffine command-line tool. Every command builds one ordered JSON document;
// the plain-text report is a rendering of the same document.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qaffine/autgroup.h"
#include "qaffine/classify.h"
#include "qaffine/decompose.h"
#include "qaffine/errors.h"
#include "qaffine/families.h"
#include "qaffine/galois_field.h"

namespace {

using json = nlohmann::ordered_json;
using namespace qaffine;

struct Globals {
  std::string out;
  bool json = false;
  uint64_t seed = 1;
  uint64_t budget = SearchOptions{}.node_budget;
};

// Errors raised by the tool itself, reported like library errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string indices_string(const std::vector<int>& idx) {
  std::string out = "{";
  for (size_t k = 0; k < idx.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(idx[k] + 1);
  }
  return out + "}";
}

std::vector<std::string> generator_strings(const PermGroup& g) {
  std::vector<std::string> out;
  for (const Perm& p : g.generators()) out.push_back(format_cycles(p));
  return out;
}

void render(const json& value, const std::string& key, int indent,
            std::ostream& os);

void render_object(const json& obj, int indent, std::ostream& os) {
  for (const auto& [k, v] : obj.items()) render(v, k, indent, os);
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

void render(const json& value, const std::string& key, int indent,
            std::ostream& os) {
  std::string pad(indent, ' ');
  if (value.is_object()) {
    os << pad << key << ":\n";
    render_object(value, indent + 2, os);
  } else if (value.is_array()) {
    if (value.empty()) {
      os << pad << key << ": (none)\n";
      return;
    }
    os << pad << key << ":\n";
    for (const auto& item : value) {
      if (item.is_object()) {
        bool first = true;
        for (const auto& [k, v] : item.items()) {
          if (first && !v.is_structured() &&
              scalar_text(v).find('\n') == std::string::npos) {
            os << pad << "  - " << k << ": " << scalar_text(v) << "\n";
          } else {
            if (first) os << pad << "  -\n";
            render(v, k, indent + 4, os);
          }
          first = false;
        }
      } else {
        os << pad << "  - " << scalar_text(item) << "\n";
      }
    }
  } else {
    std::string text = scalar_text(value);
    if (text.find('\n') == std::string::npos) {
      os << pad << key << ": " << text << "\n";
      return;
    }
    os << pad << key << ":\n";
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) os << pad << "  " << line << "\n";
  }
}

void emit(const Globals& g, const json& doc) {
  std::ostringstream os;
  if (g.json) {
    os << doc.dump(2) << "\n";
  } else {
    render_object(doc, 0, os);
  }
  if (g.out.empty()) {
    std::cout << os.str();
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw UsageError("cannot write '" + g.out + "'");
  file << os.str();
}

void write_matrix_file(const std::string& path, const QMatrix& q) {
  if (path.empty()) return;
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << write_qmatrix(q);
}

json structure_json(const QMatrix& q) {
  StructuredAutGroup a = aut_structure(q);
  json j;
  j["n"] = q.size();
  j["mode"] = q.group()->describe();
  j["blocks"] = a.blocks.to_string();
  j["lambda"] = lambda_string(a.gl_degrees);
  j["stab_order"] = a.stab.order();
  j["stab_generators"] = generator_strings(a.stab);
  j["structure"] = structure_string(a);
  j["monomial"] = a.monomial;
  return j;
}

json factors_json(const QMatrix& q) {
  json factors = json::array();
  for (const Factor& f : direct_product_decomposition(q)) {
    json item;
    item["indices"] = indices_string(f.indices);
    item["structure"] = structure_string(aut_structure(f.sub));
    factors.push_back(item);
  }
  return factors;
}

json analyze_cmd(const std::string& path) {
  QMatrix q = read_qmatrix_file(path);
  json doc;
  doc["command"] = "analyze";
  doc["file"] = path;
  json structure = structure_json(q);
  for (const auto& [k, v] : structure.items()) doc[k] = v;
  doc["factors"] = factors_json(q);
  return doc;
}

json decompose_cmd(const std::string& path) {
  QMatrix q = read_qmatrix_file(path);
  json doc;
  doc["command"] = "decompose";
  doc["file"] = path;
  doc["partition"] = independence_partition(q).to_string();
  json factors = json::array();
  for (const Factor& f : direct_product_decomposition(q)) {
    json item;
    item["indices"] = indices_string(f.indices);
    item["size"] = f.indices.size();
    item["structure"] = structure_string(aut_structure(f.sub));
    item["matrix"] = write_qmatrix(f.sub);
    factors.push_back(item);
  }
  doc["factors"] = factors;
  return doc;
}

json tensor_cmd(const std::string& a_path, const std::string& b_path,
                bool force, const std::string& matrix_out) {
  QMatrix a = read_qmatrix_file(a_path);
  QMatrix b = read_qmatrix_file(b_path);
  bool independent = mult_independent(a, b);
  if (!independent && !force) {
    throw UsageError(
        "the value sets are not multiplicatively independent; pass --force "
        "to compute the product anyway");
  }
  QMatrix k = kronecker(a, b);
  json doc;
  doc["command"] = "tensor";
  doc["left"] = a_path;
  doc["right"] = b_path;
  doc["independent"] = independent;
  json structure = structure_json(k);
  for (const auto& [key, v] : structure.items()) doc[key] = v;
  if (independent) {
    StructuredAutGroup assembled = tensor_structure(a, b);
    if (assembled.stab != stab(k)) {
      throw InternalError("Stab of the product is not the product of Stabs");
    }
    doc["stab_product_law"] = "holds";
  }
  write_matrix_file(matrix_out, k);
  doc["matrix"] = write_qmatrix(k);
  return doc;
}

json classify_cmd(const Globals& g, int dim, int field, bool monomial_only,
                  bool min_field, bool witnesses) {
  FieldSpec spec = field == 0 ? FieldSpec::generic() : FieldSpec::finite(field);
  ClassifyOptions options;
  options.monomial_only = monomial_only;
  options.compute_min_field = min_field && spec.is_generic();
  options.search.node_budget = g.budget;
  std::vector<ClassRecord> records = classify(dim, spec, options);

  json doc;
  doc["command"] = "classify";
  doc["dim"] = dim;
  doc["field"] = spec.describe();
  doc["monomial_only"] = monomial_only;
  doc["total"] = records.size();
  json counts = json::array();
  for (const CountRow& row : summarize_counts(dim, records).rows) {
    if (monomial_only && static_cast<int>(row.sizes.size()) != dim) continue;
    json item;
    item["lambda"] = lambda_string(row.sizes);
    item["count"] = row.count;
    counts.push_back(item);
  }
  doc["counts"] = counts;
  json rows = json::array();
  for (size_t k = 0; k < records.size(); ++k) {
    const ClassRecord& r = records[k];
    json item;
    item["index"] = k + 1;
    item["lambda"] = lambda_string(r.sizes);
    item["structure"] = structure_string(r.sizes, r.stab_rep);
    item["stab_generators"] = generator_strings(r.stab_rep);
    if (options.compute_min_field) {
      item["min_field"] = r.min_field ? json(*r.min_field) : json(nullptr);
      item["min_field_exact"] = r.min_field_exact;
    }
    if (witnesses) item["witness"] = write_qmatrix(r.witness);
    rows.push_back(item);
  }
  doc["records"] = rows;
  return doc;
}

json family_cmd(const std::string& kind, int n, const std::string& sigma_text,
                int degree, bool normalize, const std::string& matrix_path,
                int m, const std::string& matrix_out) {
  QMatrix q;
  json doc;
  doc["command"] = "family";
  doc["family"] = kind;
  if (kind == "sym") {
    q = symmetric_family(n);
  } else if (kind == "dihedral") {
    q = dihedral_family(n);
  } else if (kind == "cyclic") {
    if (sigma_text.empty()) throw UsageError("cyclic needs --sigma");
    if (degree == 0) {
      // Default: the largest point named.
      int value = 0;
      for (char c : sigma_text) {
        value = std::isdigit(static_cast<unsigned char>(c)) ? value * 10 + (c - '0') : 0;
        degree = std::max(degree, value);
      }
    }
    Perm sigma = parse_cycles(sigma_text, degree);
    if (normalize) {
      Perm tau = normalizing_conjugator(sigma);
      sigma = tau * sigma * tau.inverse();
      doc["normalized_sigma"] = format_cycles(sigma);
    }
    q = cyclic_family(sigma);
  } else if (kind == "inflate") {
    if (matrix_path.empty()) throw UsageError("inflate needs --matrix");
    q = inflate(read_qmatrix_file(matrix_path), m);
  } else {
    throw UsageError("unknown family '" + kind +
                     "'; expected sym, dihedral, cyclic or inflate");
  }
  json structure = structure_json(q);
  for (const auto& [k, v] : structure.items()) doc[k] = v;
  // Smallest field over which the same equality pattern, hence the same
  // Stab, is available.
  if (!q.group()->is_finite()) {
    doc["smallest_field"] = smallest_specializing_field(q);
  }
  write_matrix_file(matrix_out, q);
  doc["matrix"] = write_qmatrix(q);
  return doc;
}

FieldMatrix read_field_matrix(const std::string& path, const GaloisField& f) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::vector<std::vector<int>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::vector<int> row;
    std::string tok;
    while (ss >> tok) {
      int v = 0;
      try {
        size_t used = 0;
        v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("expected a field element, got '" + tok + "'",
                         line_no, static_cast<int>(line.find(tok)) + 1);
      }
      if (v < 0 || v >= f.order()) {
        throw ParseError("field element out of range: " + tok, line_no,
                         static_cast<int>(line.find(tok)) + 1);
      }
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(row);
  }
  int n = static_cast<int>(rows.size());
  FieldMatrix h(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw ParseError("expected " + std::to_string(n) + " entries", i + 1, 0);
    }
    for (int j = 0; j < n; ++j) h.at(i, j) = rows[i][j];
  }
  return h;
}

json verify_pair_cmd(int field, const std::string& h_path,
                     const std::string& q_path) {
  GaloisField f(field);
  FieldMatrix h = read_field_matrix(h_path, f);
  QMatrix q = read_qmatrix_file(q_path);
  if (h.n != q.size()) throw UsageError("h and q have different sizes");
  if (!is_invertible(f, h)) throw UsageError("h is not invertible");
  bool graded = is_graded_automorphism(h, q, f);
  bool relation = relation_oracle(h, q, f);
  json doc;
  doc["command"] = "verify";
  doc["field"] = "F" + std::to_string(field);
  doc["graded_automorphism"] = graded;
  doc["relation_oracle"] = relation;
  doc["agree"] = graded == relation;
  if (graded) doc["block_permutation"] = format_cycles(block_projection(h, q, f));
  return doc;
}

// Exhaustive when the search space is small, otherwise seeded sampling.
json verify_fuzz_cmd(const Globals& g, int field, int n, int samples) {
  constexpr double kExhaustiveLimit = 250000;
  GaloisField f(field);
  auto group = ValueGroup::finite_units(field - 1);
  std::mt19937_64 rng(g.seed);
  int cells = n * (n - 1) / 2;

  std::vector<QMatrix> qs;
  bool all_q = std::pow(double(field - 1), cells) <= 4096;
  auto make_q = [&](const std::vector<int>& res) {
    std::vector<Scalar> e(n * n, Scalar::one(group));
    int c = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++c) {
        e[i * n + j] = Scalar::power(group, res[c]);
        e[j * n + i] = Scalar::power(group, -res[c]);
      }
    }
    return QMatrix(group, n, std::move(e));
  };
  if (all_q) {
    std::vector<int> res(cells, 0);
    while (true) {
      qs.push_back(make_q(res));
      int k = 0;
      while (k < cells && ++res[k] == field - 1) res[k++] = 0;
      if (k == cells) break;
    }
  } else {
    std::uniform_int_distribution<int> pick(0, field - 2);
    for (int t = 0; t < 64; ++t) {
      std::vector<int> res(cells);
      for (int& r : res) r = pick(rng);
      qs.push_back(make_q(res));
    }
  }

  bool all_h = std::pow(double(field), n * n) * qs.size() <= kExhaustiveLimit;
  long pairs = 0, automorphisms = 0, disagreements = 0;
  auto check = [&](const FieldMatrix& h) {
    for (const QMatrix& q : qs) {
      bool graded = is_graded_automorphism(h, q, f);
      ++pairs;
      automorphisms += graded;
      disagreements += graded != relation_oracle(h, q, f);
    }
  };
  if (all_h) {
    FieldMatrix h(n);
    while (true) {
      if (is_invertible(f, h)) check(h);
      size_t k = 0;
      while (k < h.a.size() && ++h.a[k] == field) h.a[k++] = 0;
      if (k == h.a.size()) break;
    }
  } else {
    std::uniform_int_distribution<int> elem(0, field - 1);
    std::uniform_int_distribution<int> unit(1, field - 1);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int t = 0; t < samples; ++t) {
      FieldMatrix h(n);
      // Sparse draws make automorphisms likely; dense draws exercise
      // rejection.
      bool sparse = coin(rng) != 0;
      do {
        for (auto& x : h.a) x = sparse ? 0 : elem(rng);
        if (sparse) {
          std::vector<int> perm(n);
          for (int i = 0; i < n; ++i) perm[i] = i;
          std::shuffle(perm.begin(), perm.end(), rng);
          for (int i = 0; i < n; ++i) h.at(perm[i], i) = unit(rng);
        }
      } while (!is_invertible(f, h));
      check(h);
    }
  }
  json doc;
  doc["command"] = "verify";
  doc["field"] = "F" + std::to_string(field);
  doc["n"] = n;
  doc["mode"] = all_h && all_q ? "exhaustive" : "sampled";
  doc["matrices_q"] = qs.size();
  doc["pairs"] = pairs;
  doc["automorphisms"] = automorphisms;
  doc["disagreements"] = disagreements;
  return doc;
}

int report_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded automorphism groups of quantum affine spaces"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--out", g.out, "Write the report to this file");
  app.add_flag("--json", g.json, "Emit JSON instead of plain text");
  app.add_option("--seed", g.seed, "Seed for sampled verification");
  app.add_option("--budget", g.budget,
                 "Node budget per finite-field search (0 = unlimited)");

  json doc;
  auto* analyze = app.add_subcommand("analyze", "Block structure and Stab");
  std::string file;
  analyze->add_option("file", file, "Matrix file")->required();
  analyze->callback([&] { doc = analyze_cmd(file); });

  auto* decompose = app.add_subcommand("decompose", "Direct-product factors");
  decompose->add_option("file", file, "Matrix file")->required();
  decompose->callback([&] { doc = decompose_cmd(file); });

  auto* tensor = app.add_subcommand("tensor", "Kronecker product");
  std::string file2, matrix_out;
  bool force = false;
  tensor->add_option("left", file, "First matrix file")->required();
  tensor->add_option("right", file2, "Second matrix file")->required();
  tensor->add_flag("--force", force, "Allow dependent value sets");
  tensor->add_option("--matrix-out", matrix_out, "Write the product here");
  tensor->callback(
      [&] { doc = tensor_cmd(file, file2, force, matrix_out); });

  auto* cls = app.add_subcommand("classify", "Classify by dimension");
  int dim = 0, field = 0;
  bool generic = false, monomial_only = false, no_min_field = false,
       witnesses = false;
  cls->add_option("--dim", dim, "Dimension, 1 to 7")->required();
  auto* field_opt = cls->add_option("--field", field, "Finite field order");
  cls->add_flag("--generic", generic, "Generic field (default)")
      ->excludes(field_opt);
  cls->add_flag("--monomial-only", monomial_only, "Only 1^n");
  cls->add_flag("--no-min-field", no_min_field, "Skip minimal field sizes");
  cls->add_flag("--witnesses", witnesses, "Include a witness matrix per row");
  cls->callback([&] {
    doc = classify_cmd(g, dim, field, monomial_only, !no_min_field, witnesses);
  });

  auto* family = app.add_subcommand("family", "Realizing families");
  std::string kind, sigma, matrix_in;
  int n = 0, degree = 0, m = 1;
  bool normalize = false;
  family->add_option("kind", kind, "sym, dihedral, cyclic or inflate")
      ->required();
  family->add_option("--n", n, "Dimension for sym and dihedral");
  family->add_option("--sigma", sigma, "Cycle notation, 1-based");
  family->add_option("--degree", degree, "Degree of sigma");
  family->add_flag("--normalize", normalize,
                   "Conjugate sigma into consecutive-run form first");
  family->add_option("--matrix", matrix_in, "Input matrix for inflate");
  family->add_option("--m", m, "Inflation factor");
  family->add_option("--matrix-out", matrix_out, "Write the matrix here");
  family->callback([&] {
    doc = family_cmd(kind, n, sigma, degree, normalize, matrix_in, m,
                     matrix_out);
  });

  auto* verify = app.add_subcommand("verify", "Automorphism oracle check");
  std::string h_path, q_path;
  bool fuzz = false;
  int samples = 2000;
  verify->add_option("--field", field, "Field order")->required();
  verify->add_option("--hmat", h_path, "Field matrix file (integer rows)");
  verify->add_option("--q", q_path, "Parameter matrix file");
  verify->add_flag("--fuzz", fuzz, "Check many pairs");
  verify->add_option("--n", n, "Dimension for --fuzz");
  verify->add_option("--samples", samples, "Sampled h matrices for --fuzz");
  verify->callback([&] {
    if (fuzz) {
      if (n < 1) throw UsageError("--fuzz needs --n");
      doc = verify_fuzz_cmd(g, field, n, samples);
    } else {
      if (h_path.empty() || q_path.empty()) {
        throw UsageError("verify needs --hmat and --q, or --fuzz");
      }
      doc = verify_pair_cmd(field, h_path, q_path);
    }
  });

  try {
    app.parse(argc, argv);
    emit(g, doc);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ParseError& e) {
    return report_error(std::string("parse error, ") + e.what());
  } catch (const MatrixValidationError& e) {
    return report_error(std::string("invalid matrix at (") +
                        std::to_string(e.row() + 1) + ", " +
                        std::to_string(e.col() + 1) + "): " + e.what());
  } catch (const std::exception& e) {
    return report_error(e.what());
  }
  return 0;
}
