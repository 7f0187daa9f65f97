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
#include <stdexcept>
#include <string>

namespace fob {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownGenerator : public Error {
 public:
  explicit UnknownGenerator(const std::string& name)
      : Error("unknown generator '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Ill-typed composition or replacement; `where` is the printed position.
class TypeError : public Error {
 public:
  TypeError(const std::string& msg, const std::string& where)
      : Error(msg + " at " + where), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

class PositionError : public Error {
 public:
  using Error::Error;
};

/// A relation or a search space exceeds the configured bound.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Operands of a relational operation disagree on carrier or arity.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A rewrite step that cannot be applied.
class RewriteError : public Error {
 public:
  using Error::Error;
};

}  // namespace fob
