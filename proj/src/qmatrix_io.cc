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

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qaffine/errors.h"
#include "qaffine/galois_field.h"
#include "qaffine/qmatrix.h"

namespace qaffine {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> split_line(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

bool parse_positive(const std::string& s, int* out) {
  if (s.empty() || s.size() > 6) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  *out = std::stoi(s);
  return true;
}

ValueGroupPtr parse_mode(const Token& tok, int line) {
  std::string v = tok.text.substr(tok.text.find('=') + 1);
  int col = tok.column + static_cast<int>(tok.text.find('=')) + 1;
  if (v.rfind("finite:", 0) == 0) {
    int q = 0;
    if (!parse_positive(v.substr(7), &q) || !is_prime_power(q)) {
      throw ParseError("finite mode needs a prime power field order", line,
                       col + 7);
    }
    return ValueGroup::finite_units(q - 1);
  }
  if (v.rfind("symbolic:", 0) == 0) {
    std::vector<std::string> names;
    std::string list = v.substr(9);
    size_t start = 0;
    while (start < list.size()) {
      size_t comma = list.find(',', start);
      if (comma == std::string::npos) comma = list.size();
      names.push_back(list.substr(start, comma - start));
      start = comma + 1;
    }
    try {
      return ValueGroup::symbolic(std::move(names));
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what(), line, col + 9);
    }
  }
  throw ParseError("mode must be finite:<q> or symbolic:<names>", line, col);
}

}  // namespace

QMatrix read_qmatrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  ValueGroupPtr group;
  std::vector<Scalar> entries;
  int rows_read = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<Token> toks = split_line(line);
    if (toks.empty() || toks.front().text[0] == '#') continue;
    if (n < 0) {
      if (toks.front().text != "qmatrix") {
        throw ParseError("expected header 'qmatrix n=<n> mode=<mode>'", lineno,
                         toks.front().column);
      }
      for (size_t k = 1; k < toks.size(); ++k) {
        const Token& t = toks[k];
        if (t.text.rfind("n=", 0) == 0) {
          if (!parse_positive(t.text.substr(2), &n) || n < 1) {
            throw ParseError("bad dimension", lineno, t.column + 2);
          }
        } else if (t.text.rfind("mode=", 0) == 0) {
          group = parse_mode(t, lineno);
        } else {
          throw ParseError("unknown header field '" + t.text + "'", lineno,
                           t.column);
        }
      }
      if (n < 0) throw ParseError("header lacks n=<n>", lineno, 1);
      if (!group) throw ParseError("header lacks mode=<mode>", lineno, 1);
      continue;
    }
    if (rows_read == n) {
      throw ParseError("more than " + std::to_string(n) + " rows", lineno,
                       toks.front().column);
    }
    if (static_cast<int>(toks.size()) != n) {
      throw ParseError("row has " + std::to_string(toks.size()) +
                           " entries, expected " + std::to_string(n),
                       lineno, toks.size() > static_cast<size_t>(n)
                                   ? toks[n].column
                                   : static_cast<int>(line.size()) + 1);
    }
    for (const Token& t : toks) {
      try {
        entries.push_back(parse_scalar(t.text, group));
      } catch (const ParseError& e) {
        std::string msg = e.what();
        size_t colon = msg.find(": ");
        if (e.line() == 0 && e.column() > 0 && colon != std::string::npos) {
          msg = msg.substr(colon + 2);
        }
        throw ParseError(msg, lineno,
                         t.column + std::max(0, e.column() - 1));
      }
    }
    ++rows_read;
  }
  if (n < 0) throw ParseError("missing header", lineno, 0);
  if (rows_read != n) {
    throw ParseError("expected " + std::to_string(n) + " rows, found " +
                         std::to_string(rows_read),
                     lineno, 0);
  }
  QMatrix q(group, n, std::move(entries));
  validate(q);
  return q;
}

QMatrix read_qmatrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return read_qmatrix(buf.str());
}

std::string write_qmatrix(const QMatrix& q) {
  std::string out = "qmatrix n=" + std::to_string(q.size()) +
                    " mode=" + q.group()->describe() + "\n";
  for (int i = 0; i < q.size(); ++i) {
    for (int j = 0; j < q.size(); ++j) {
      if (j) out += ' ';
      out += format_scalar(q(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string format_matrix(const QMatrix& q) {
  int n = q.size();
  std::vector<std::string> cells;
  std::vector<size_t> width(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cells.push_back(format_scalar(q(i, j)));
      width[j] = std::max(width[j], cells.back().size());
    }
  }
  std::string out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::string& c = cells[i * n + j];
      if (j) out += ' ';
      out += std::string(width[j] - c.size(), ' ') + c;
    }
    out += '\n';
  }
  return out;
}

}  // namespace qaffine
