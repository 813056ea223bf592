// Copyright 2026 The sparse_interp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sparse_interp/poly_io.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "sparse_interp/errors.hpp"

namespace sparse_interp {
namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

u64 parse_u64(const std::string& token, std::size_t line) {
  try {
    return to_u64(parse_bigint(token));
  } catch (const std::exception&) {
    throw ParseError(line, "expected an unsigned integer, got '" + token + "'");
  }
}

// Reads the next line holding tokens; false at end of input.
bool next_tokens(std::istream& in, std::size_t& line,
                 std::vector<std::string>& tokens) {
  std::string text;
  while (std::getline(in, text)) {
    ++line;
    tokens = split_tokens(text);
    if (!tokens.empty()) return true;
  }
  return false;
}

}  // namespace

void write_poly(std::ostream& out, const SparsePoly& f) {
  const ExtField& field = *f.field();
  out << "q " << field.base().modulus() << '\n';
  if (field.degree() > 1) {
    out << "s " << field.degree() << '\n';
    out << "modulus";
    for (u64 c : field.modulus()) out << ' ' << c;
    out << '\n';
  }
  for (const auto& [e, c] : f.terms()) {
    for (u64 r : c.coeffs()) out << r << ' ';
    out << e.str() << '\n';
  }
}

std::string to_text(const SparsePoly& f) {
  std::ostringstream out;
  write_poly(out, f);
  return out.str();
}

SparsePoly parse_poly(std::istream& in) {
  std::size_t line = 0;
  std::vector<std::string> tokens;
  if (!next_tokens(in, line, tokens)) {
    throw ParseError(line + 1, "missing header 'q <prime>'");
  }
  if (tokens.size() != 2 || tokens[0] != "q") {
    throw ParseError(line, "expected header 'q <prime>'");
  }
  std::optional<PrimeField> base;
  try {
    base.emplace(parse_u64(tokens[1], line));
  } catch (const UsageError& e) {
    throw ParseError(line, e.what());
  }

  ExtFieldPtr field = ExtField::prime(*base);
  bool more = next_tokens(in, line, tokens);
  if (more && tokens[0] == "s") {
    if (tokens.size() != 2) throw ParseError(line, "expected 's <degree>'");
    const u64 s = parse_u64(tokens[1], line);
    if (s == 0) throw ParseError(line, "extension degree must be >= 1");
    if (!next_tokens(in, line, tokens) || tokens[0] != "modulus") {
      throw ParseError(line, "expected 'modulus' after 's'");
    }
    if (tokens.size() != s + 2) {
      throw ParseError(line, "modulus needs s + 1 coefficients");
    }
    std::vector<u64> modulus;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      modulus.push_back(parse_u64(tokens[i], line));
    }
    if (s == 1) {
      if (modulus != std::vector<u64>{0, 1}) {
        throw ParseError(line, "degree-1 modulus must be '0 1'");
      }
    } else {
      try {
        field = ExtField::create(*base, std::move(modulus));
      } catch (const UsageError& e) {
        throw ParseError(line, e.what());
      }
    }
    more = next_tokens(in, line, tokens);
  }

  const std::size_t s = field->degree();
  SparsePoly f(field);
  for (; more; more = next_tokens(in, line, tokens)) {
    if (tokens.size() != s + 1) {
      throw ParseError(line, "expected " + std::to_string(s) +
                                 " residues and an exponent");
    }
    std::vector<u64> coeffs;
    for (std::size_t i = 0; i < s; ++i) {
      const u64 r = parse_u64(tokens[i], line);
      if (r >= base->modulus()) throw ParseError(line, "residue is not below q");
      coeffs.push_back(r);
    }
    BigInt e;
    try {
      e = parse_bigint(tokens[s]);
    } catch (const UsageError&) {
      throw ParseError(line, "bad exponent '" + tokens[s] + "'");
    }
    ExtFieldElement c = field->element(std::move(coeffs));
    if (c.is_zero()) throw ParseError(line, "zero coefficient");
    if (f.terms().count(e) != 0) throw ParseError(line, "repeated exponent");
    f.add_term(e, c);
  }
  return f;
}

SparsePoly parse_poly(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_poly(in);
}

}  // namespace sparse_interp
