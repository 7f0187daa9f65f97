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
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fob/error.hpp"
#include "fob/sexpr.hpp"

namespace fob {

using Nat = std::size_t;

/// Diagram type n -> m. Objects of the free calculus are naturals.
struct Type {
  Nat dom = 0;
  Nat cod = 0;
  friend bool operator==(const Type&, const Type&) = default;
};

std::string to_string(const Type& t);

// -----------------------------------------------------------------------------
// Signature
// -----------------------------------------------------------------------------

/// Generator table. Keeps declaration order, which fixes the enumeration
/// order used by model search.
class Signature {
 public:
  void add(const std::string& name, Nat arity, Nat coarity);
  bool contains(const std::string& name) const { return index_.count(name) != 0; }
  Type type_of(const std::string& name) const;  // throws UnknownGenerator
  const std::vector<std::pair<std::string, Type>>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

 private:
  std::vector<std::pair<std::string, Type>> gens_;
  std::map<std::string, std::size_t> index_;
};

// -----------------------------------------------------------------------------
// Terms
// -----------------------------------------------------------------------------

enum class Kind : std::uint8_t {
  // primitives
  IdW, IdB, SymW, SymB, Gen, GenOp,
  CopyW, DiscardW, CocopyW, CodiscardW,
  CopyB, DiscardB, CocopyB, CodiscardB,
  SeqW, SeqB, TensW, TensB,
  // sugar
  Dag, Neg, Meet, Join, Top, Bot,
};

enum class Color : std::uint8_t { White, Black };

bool is_sugar(Kind k);
bool is_constant(Kind k);  // the eight (co)monoid constants
bool is_binary(Kind k);    // Seq*, Tens*, Meet, Join
bool is_unary(Kind k);     // Dag, Neg
Color color_of(Kind k);    // for primitive kinds only
std::size_t arity_of(Kind k);  // number of children

/// Immutable diagram term. Copies share structure; equality is structural.
class Term {
 public:
  Term();  // (idw 0)

  Kind kind() const { return node_->kind; }
  /// Numeric parameters: IdW/IdB(n) uses p0; SymW/SymB(m,n), Top/Bot(n,m) use p0,p1.
  Nat p0() const { return node_->p0; }
  Nat p1() const { return node_->p1; }
  const std::string& name() const { return node_->name; }
  std::size_t num_children() const { return arity_of(node_->kind); }
  const Term& child(std::size_t i) const;

  /// Structural size (node count).
  std::size_t size() const;
  std::size_t depth() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

  // Constructors.
  static Term id_w(Nat n);
  static Term id_b(Nat n);
  static Term id(Color c, Nat n) { return c == Color::White ? id_w(n) : id_b(n); }
  static Term sym_w(Nat m, Nat n);
  static Term sym_b(Nat m, Nat n);
  static Term sym(Color c, Nat m, Nat n) { return c == Color::White ? sym_w(m, n) : sym_b(m, n); }
  static Term gen(std::string name);
  static Term gen_op(std::string name);
  static Term constant(Kind k);  // one of the eight (co)monoid constants
  static Term seq_w(Term a, Term b);
  static Term seq_b(Term a, Term b);
  static Term seq(Color c, Term a, Term b);
  static Term tens_w(Term a, Term b);
  static Term tens_b(Term a, Term b);
  static Term tens(Color c, Term a, Term b);
  static Term dag(Term a);
  static Term neg(Term a);
  static Term meet(Term a, Term b);
  static Term join(Term a, Term b);
  static Term top(Nat n, Nat m);
  static Term bot(Nat n, Nat m);

  /// Rebuild this node with new children (same kind and parameters).
  Term with_children(std::vector<Term> kids) const;

 private:
  struct Node {
    Kind kind;
    Nat p0 = 0;
    Nat p1 = 0;
    std::string name;
    std::vector<Term> kids;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(Kind k, Nat p0, Nat p1, std::string name, std::vector<Term> kids);

  std::shared_ptr<const Node> node_;
};

/// Constant kinds by colour.
Kind copy_kind(Color c);
Kind discard_kind(Color c);
Kind cocopy_kind(Color c);
Kind codiscard_kind(Color c);

/// Arity-indexed (co)monoid structure on object n, built from the unary
/// constants as a left-nested comb. n = 0 yields the identity on 0 and
/// n = 1 yields the primitive constant.
Term copy_n(Color c, Nat n);
Term discard_n(Color c, Nat n);
Term cocopy_n(Color c, Nat n);
Term codiscard_n(Color c, Nat n);

// -----------------------------------------------------------------------------
// Positions
// -----------------------------------------------------------------------------

/// Path of child indices from the root. Printed as "ε" for the root or
/// dot-separated indices ("0.1.1").
struct Position {
  std::vector<std::uint8_t> path;
  friend bool operator==(const Position&, const Position&) = default;
};

std::string to_string(const Position& p);
Position parse_position(std::string_view text);  // accepts "ε", "e", "root", or "0.1"

/// All valid positions of t in pre-order.
std::vector<Position> positions(const Term& t);

const Term& subterm_at(const Term& t, const Position& p);  // throws PositionError
/// Replaces the subterm at p by u. u must have the same type as the current
/// subterm under sig.
Term replace_at(const Term& t, const Position& p, const Term& u, const Signature& sig);

// -----------------------------------------------------------------------------
// Syntax
// -----------------------------------------------------------------------------

/// Parses the s-expression syntax. Generator names are checked against sig.
Term parse_term(std::string_view text, const Signature& sig);
/// Parses without checking generator names.
Term parse_term_unchecked(std::string_view text);
Term term_from_sexpr(const SExpr& e, const Signature& sig);
std::string print_term(const Term& t);

/// Parses `sig NAME : N -> M` lines. Blank lines and `#` comments are skipped.
Signature parse_signature(std::string_view text);
std::string print_signature(const Signature& sig);

// -----------------------------------------------------------------------------
// Typing and derived constructors
// -----------------------------------------------------------------------------

Type typecheck(const Term& t, const Signature& sig);  // throws TypeError / UnknownGenerator

/// Sugar nodes; expansion is deferred to desugar().
inline Term dagger(const Term& t) { return Term::dag(t); }
inline Term negate(const Term& t) { return Term::neg(t); }

/// Expands Dag, Neg, Meet, Join, Top and Bot into the primitive calculus.
/// The argument must be well typed under sig.
Term desugar(const Term& t, const Signature& sig);
bool is_primitive(const Term& t);

/// Colour switch on a primitive term: the syntactic negation.
Term colour_switch(const Term& primitive, const Signature& sig);
/// Converse via cup/cap conjugation on a primitive term of type n -> m.
Term cup_cap_conjugate(const Term& primitive, Type type);
/// Dagger of a primitive term: reverses composites, swaps the (co)monoid
/// constants and conjugates only the generators.
Term dagger_primitive(const Term& primitive, const Signature& sig);

}  // namespace fob
