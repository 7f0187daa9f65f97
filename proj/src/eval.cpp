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

// The interpretation functor into finite relations, and the text format for
// interpretations.

#include <cctype>
#include <charconv>
#include <sstream>

#include "fob/finrel.hpp"

namespace fob {

void Interpretation::validate(const Signature& sig) const {
  if (carrier == 0) throw ShapeError("interpretation carrier must be at least 1");
  for (const auto& [name, ty] : sig.generators()) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw ShapeError("generator '" + name + "' is not assigned");
    const FinRelation& r = it->second;
    if (r.carrier() != carrier)
      throw ShapeError("generator '" + name + "' assigned over carrier " +
                       std::to_string(r.carrier()) + ", expected " + std::to_string(carrier));
    if (r.dom_arity() != ty.dom || r.cod_arity() != ty.cod)
      throw ShapeError("generator '" + name + "' assigned a relation " +
                       std::to_string(r.dom_arity()) + " -> " + std::to_string(r.cod_arity()) +
                       ", declared " + to_string(ty));
  }
}

namespace {

struct Evaluator {
  const Signature& sig;
  const Interpretation& interp;
  std::uint64_t limit;

  const FinRelation& lookup(const std::string& name) const {
    auto it = interp.assignment.find(name);
    if (it == interp.assignment.end())
      throw ShapeError("generator '" + name + "' is not assigned");
    return it->second;
  }

  FinRelation run(const Term& t) const {
    const Nat k = interp.carrier;
    switch (t.kind()) {
      case Kind::IdW:
      case Kind::IdB:
        check_relation_size(k, t.p0(), t.p0(), limit);
        return identity_rel(color_of(t.kind()), k, t.p0());
      case Kind::SymW:
      case Kind::SymB:
        check_relation_size(k, t.p0() + t.p1(), t.p0() + t.p1(), limit);
        return symmetry_rel(color_of(t.kind()), k, t.p0(), t.p1());
      case Kind::Gen: return lookup(t.name());
      case Kind::GenOp: return linear_adjoint(lookup(t.name()));
      case Kind::SeqW:
      case Kind::SeqB:
      case Kind::TensW:
      case Kind::TensB: {
        FinRelation a = run(t.child(0));
        FinRelation b = run(t.child(1));
        const bool seq = t.kind() == Kind::SeqW || t.kind() == Kind::SeqB;
        if (seq)
          check_relation_size(k, a.dom_arity(), b.cod_arity(), limit);
        else
          check_relation_size(k, a.dom_arity() + b.dom_arity(), a.cod_arity() + b.cod_arity(),
                              limit);
        const Color c = color_of(t.kind());
        return seq ? compose(c, a, b) : tensor(c, a, b);
      }
      default:
        if (is_constant(t.kind())) return constant_rel(t.kind(), k);
        throw TypeError("eval_primitive on a sugar node", print_term(t));
    }
  }
};

}  // namespace

FinRelation eval_primitive(const Term& t, const Signature& sig, const Interpretation& interp,
                           const EvalOptions& opts) {
  return Evaluator{sig, interp, opts.max_bits}.run(t);
}

FinRelation eval(const Term& t, const Signature& sig, const Interpretation& interp,
                 const EvalOptions& opts) {
  return eval_primitive(desugar(t, sig), sig, interp, opts);
}

// --- Text format -------------------------------------------------------------------------

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto step = [&]() {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') step();
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      step();
    } else if (c == '(' || c == ')' || c == '{' || c == '}' || c == ';') {
      out.push_back({std::string(1, c), line, col});
      step();
    } else {
      Token t{{}, line, col};
      while (i < text.size()) {
        const char d = text[i];
        if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == '{' ||
            d == '}' || d == ';' || d == '#')
          break;
        t.text.push_back(d);
        step();
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}
  bool done() const { return pos_ >= toks_.size(); }
  const Token& peek() const {
    if (done()) throw ParseError("unexpected end of input", last_line(), 1);
    return toks_[pos_];
  }
  Token next() {
    Token t = peek();
    ++pos_;
    return t;
  }
  void expect(const std::string& s) {
    Token t = next();
    if (t.text != s) throw ParseError("expected '" + s + "', got '" + t.text + "'", t.line, t.column);
  }
  Nat nat() {
    Token t = next();
    Nat v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (t.text.empty() || ec != std::errc() || p != t.text.data() + t.text.size())
      throw ParseError("expected a natural number, got '" + t.text + "'", t.line, t.column);
    return v;
  }

 private:
  std::size_t last_line() const { return toks_.empty() ? 1 : toks_.back().line; }
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Interpretation parse_interpretation(std::string_view text, const Signature& sig) {
  TokenStream ts(tokenize(text));
  Interpretation interp;
  ts.expect("carrier");
  interp.carrier = ts.nat();
  if (interp.carrier == 0) throw ParseError("carrier must be at least 1", 1, 1);
  while (!ts.done()) {
    const Token kw = ts.next();
    if (kw.text != "rel")
      throw ParseError("expected 'rel', got '" + kw.text + "'", kw.line, kw.column);
    const Token name = ts.next();
    if (!sig.contains(name.text)) throw UnknownGenerator(name.text);
    if (interp.assignment.count(name.text))
      throw ParseError("generator '" + name.text + "' assigned twice", name.line, name.column);
    const Nat n = ts.nat();
    const Nat m = ts.nat();
    const Type declared = sig.type_of(name.text);
    if (declared != Type{n, m})
      throw ParseError("'" + name.text + "' declared " + to_string(declared) + ", given " +
                           std::to_string(n) + " -> " + std::to_string(m),
                       name.line, name.column);
    FinRelation r(interp.carrier, n, m);
    ts.expect("{");
    while (ts.peek().text != "}") {
      const Token open = ts.peek();
      ts.expect("(");
      std::vector<Nat> xs, ys;
      for (Nat i = 0; i < n; ++i) xs.push_back(ts.nat());
      ts.expect(";");
      for (Nat i = 0; i < m; ++i) ys.push_back(ts.nat());
      ts.expect(")");
      for (Nat v : xs)
        if (v >= interp.carrier)
          throw ParseError("value " + std::to_string(v) + " outside carrier", open.line,
                           open.column);
      for (Nat v : ys)
        if (v >= interp.carrier)
          throw ParseError("value " + std::to_string(v) + " outside carrier", open.line,
                           open.column);
      r.set(encode_tuple(xs, interp.carrier), encode_tuple(ys, interp.carrier));
    }
    ts.expect("}");
    interp.assignment.emplace(name.text, std::move(r));
  }
  interp.validate(sig);
  return interp;
}

std::string print_relation(const FinRelation& r) {
  std::ostringstream os;
  os << '{';
  for (const auto& [xs, ys] : r.pairs()) {
    os << " (";
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? " " : "") << xs[i];
    os << (xs.empty() ? "; " : " ; ");
    for (std::size_t i = 0; i < ys.size(); ++i) os << (i ? " " : "") << ys[i];
    os << ')';
  }
  os << " }";
  return os.str();
}

std::string print_interpretation(const Interpretation& interp, const Signature& sig) {
  std::ostringstream os;
  os << "carrier " << interp.carrier << '\n';
  for (const auto& [name, ty] : sig.generators()) {
    auto it = interp.assignment.find(name);
    if (it == interp.assignment.end()) continue;
    os << "rel " << name << ' ' << ty.dom << ' ' << ty.cod << ' ' << print_relation(it->second)
       << '\n';
  }
  return os.str();
}

}  // namespace fob
