/* Copyright 2026 The fobkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace fob {

/// Minimal s-expression reader shared by the term, pattern and file parsers.
struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t line = 1;
  std::size_t column = 1;

  bool is_atom() const { return !is_list; }
  bool is_atom(std::string_view a) const { return !is_list && atom == a; }
};

/// Reads s-expressions from a character range while tracking line/column.
class SExprReader {
 public:
  explicit SExprReader(std::string_view text, std::size_t line = 1, std::size_t column = 1)
      : text_(text), line_(line), column_(column) {}

  /// Reads exactly one expression; throws ParseError on malformed input.
  SExpr read();
  /// True when only whitespace and comments remain.
  bool at_end();
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  void skip_space();
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void advance();

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

/// Parses a whole string as a single expression with nothing trailing.
SExpr read_single_sexpr(std::string_view text, std::size_t line = 1, std::size_t column = 1);

/// Parses a decimal natural; throws ParseError (positioned at e) otherwise.
std::size_t sexpr_nat(const SExpr& e);

}  // namespace fob
