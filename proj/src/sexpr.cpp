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

#include "fob/sexpr.hpp"

#include <cctype>
#include <charconv>

#include "fob/error.hpp"

namespace fob {

void SExprReader::advance() {
  if (pos_ >= text_.size()) return;
  if (text_[pos_] == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  ++pos_;
}

void SExprReader::skip_space() {
  while (pos_ < text_.size()) {
    char c = text_[pos_];
    if (c == '#') {
      while (pos_ < text_.size() && text_[pos_] != '\n') advance();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else {
      break;
    }
  }
}

bool SExprReader::at_end() {
  skip_space();
  return pos_ >= text_.size();
}

SExpr SExprReader::read() {
  skip_space();
  SExpr e;
  e.line = line_;
  e.column = column_;
  if (pos_ >= text_.size()) throw ParseError("unexpected end of input", line_, column_);
  char c = peek();
  if (c == ')') throw ParseError("unexpected ')'", line_, column_);
  if (c == '(') {
    advance();
    e.is_list = true;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size())
        throw ParseError("unbalanced '(' opened at " + std::to_string(e.line) + ":" +
                             std::to_string(e.column),
                         line_, column_);
      if (peek() == ')') {
        advance();
        break;
      }
      e.items.push_back(read());
    }
    return e;
  }
  while (pos_ < text_.size()) {
    c = peek();
    if (c == '(' || c == ')' || c == '#' || std::isspace(static_cast<unsigned char>(c))) break;
    e.atom.push_back(c);
    advance();
  }
  return e;
}

SExpr read_single_sexpr(std::string_view text, std::size_t line, std::size_t column) {
  SExprReader r(text, line, column);
  SExpr e = r.read();
  if (!r.at_end()) throw ParseError("trailing input after expression", r.line(), r.column());
  return e;
}

std::size_t sexpr_nat(const SExpr& e) {
  if (!e.is_atom() || e.atom.empty())
    throw ParseError("expected a natural number", e.line, e.column);
  std::size_t v = 0;
  const char* first = e.atom.data();
  const char* last = first + e.atom.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last)
    throw ParseError("expected a natural number, got '" + e.atom + "'", e.line, e.column);
  return v;
}

}  // namespace fob
