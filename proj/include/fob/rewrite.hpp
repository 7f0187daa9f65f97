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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fob/finrel.hpp"
#include "fob/term.hpp"

namespace fob {

// -----------------------------------------------------------------------------
// Object expressions and patterns
// -----------------------------------------------------------------------------

using ObjBinding = std::map<std::string, Nat>;

/// Linear expression over object metavariables: c + sum_i a_i * X_i.
/// Written `2X+Y+1`, `X`, `0`.
struct ObjExpr {
  std::int64_t constant = 0;
  std::map<std::string, std::int64_t> coeff;

  static ObjExpr lit(Nat n) { return ObjExpr{static_cast<std::int64_t>(n), {}}; }
  static ObjExpr parse(std::string_view text);  // throws ParseError
  std::optional<Nat> eval(const ObjBinding& b) const;
  std::string str() const;
  friend bool operator==(const ObjExpr&, const ObjExpr&) = default;
};

/// A term with holes. Arrow metavariables are written `?a`, generator
/// metavariables `(gen ?r)` / `(genop ?r)`. `(copyw E)` and friends denote the
/// arity-indexed (co)monoid macros at object E.
struct Pattern {
  enum class Tag : std::uint8_t { Node, ArrowVar, GenVar, Macro };
  Tag tag = Tag::Node;
  Kind kind = Kind::IdW;  // Node kind; Gen/GenOp for GenVar; unary constant for Macro
  ObjExpr e0, e1;
  std::string name;
  std::vector<Pattern> kids;
};

Pattern parse_pattern(std::string_view text);
std::string print_pattern(const Pattern& p);

struct Substitution {
  ObjBinding objects;
  std::map<std::string, Term> arrows;
  std::map<std::string, std::string> gens;
};

std::string to_string(const Substitution& s);

/// Syntactic matching. Object metavariables are solved from the types of the
/// matched leaves; `seed` bindings are used first. On success
/// instantiate(p, result) == t.
std::optional<Substitution> match_pattern(const Pattern& p, const Term& t, const Signature& sig,
                                          const Substitution& seed = {});
/// Throws RewriteError naming the first unbound metavariable.
Term instantiate(const Pattern& p, const Substitution& s);

// -----------------------------------------------------------------------------
// Axioms
// -----------------------------------------------------------------------------

enum class AxiomKind : std::uint8_t { Le, Eq };
enum class Family : std::uint8_t {
  Cartesian, Cocartesian, Linear, Fo, Structural, GeneratorAdjoint
};

std::string to_string(Family f);

struct VarType {
  ObjExpr dom, cod;
};

struct Axiom {
  std::string name;
  Family family = Family::Structural;
  AxiomKind kind = AxiomKind::Eq;
  Pattern lhs, rhs;
  std::map<std::string, VarType> arrow_vars;
  std::map<std::string, VarType> gen_vars;
  std::vector<std::string> object_vars;  // sorted
  std::string text;                      // "lhs <= rhs" as written
};

/// decls: space separated `a:X->Y` entries, one per metavariable. A variable
/// used as `(gen ?r)` is a generator metavariable, otherwise an arrow one.
Axiom make_axiom(std::string name, Family family, AxiomKind kind, std::string_view decls,
                 std::string_view lhs, std::string_view rhs);

const std::vector<Axiom>& axiom_db();
const Axiom* find_axiom(std::string_view name);

/// The fixed-type instance of an axiom: metavariables become fresh generators
/// (`a`, `r`, ...) in the returned signature.
struct AxiomInstance {
  Signature sig;
  Term lhs, rhs;
};
AxiomInstance instantiate_axiom(const Axiom& ax, const ObjBinding& objects);

// -----------------------------------------------------------------------------
// Steps and proofs
// -----------------------------------------------------------------------------

enum class Direction : std::uint8_t { L2R, R2L };

struct Step {
  std::string axiom;
  Position pos;
  Direction dir = Direction::L2R;
  Substitution with;
  std::string with_text;  // as written, for printing
};

std::string to_string(const Step& s);

/// Rewrites the subterm at s.pos with the chosen axiom. An inequality can only
/// be applied left to right. Throws RewriteError / PositionError.
Term apply_step(const Term& t, const Step& s, const Signature& sig);
/// Same, against an explicit axiom list (used for fixture injection).
Term apply_step(const Term& t, const Step& s, const Signature& sig,
                const std::vector<Axiom>& axioms);

struct ProofScript {
  Term lhs, rhs;  // claim lhs <= rhs
  std::vector<Step> steps;
};

/// `prove S <= T`, `step AX at P dir l2r|r2l [with ...]` lines, `qed`.
ProofScript parse_proof(std::string_view text, const Signature& sig);
std::string print_proof(const ProofScript& p);

struct Verdict {
  bool accepted = false;
  std::optional<std::size_t> step;  // failing step index; steps.size() for the final comparison
  std::string reason;
  std::string to_string() const;
};

Verdict check_proof(const ProofScript& script, const Signature& sig);

struct SpotcheckResult {
  bool ok = true;
  std::optional<Interpretation> countermodel;
  std::size_t trials = 0;
};

/// eval(s) <= eval(t) under `trials` random interpretations at carrier k.
SpotcheckResult semantic_spotcheck(const Term& s, const Term& t, const Signature& sig,
                                   std::size_t trials, Nat k, std::uint64_t seed = 1);
SpotcheckResult semantic_spotcheck(const ProofScript& script, const Signature& sig,
                                   std::size_t trials, Nat k, std::uint64_t seed = 1);

/// Uniform random interpretation of sig at carrier k.
template <class Rng>
Interpretation random_interpretation(const Signature& sig, Nat k, Rng& rng);

// -----------------------------------------------------------------------------
// Spiders
// -----------------------------------------------------------------------------

/// Boundary ports are numbered inputs first (0..n-1) then outputs (n..n+m-1).
struct SpiderForm {
  Nat inputs = 0;
  Nat outputs = 0;
  Color flavour = Color::White;
  std::vector<std::vector<Nat>> blocks;  // sorted, each sorted
  Nat closed = 0;                        // components with no boundary port

  /// Ignores `closed`: special Frobenius laws erase loops.
  friend bool operator==(const SpiderForm& a, const SpiderForm& b) {
    return a.inputs == b.inputs && a.outputs == b.outputs && a.flavour == b.flavour &&
           a.blocks == b.blocks;
  }
  std::string to_string() const;
};

/// Throws TypeError naming the offending node when t leaves the one-colour
/// (co)monoid fragment.
SpiderForm spider_normalize(const Term& t, const Signature& sig);
/// The relation denoted by a spider form at carrier k >= 1.
FinRelation spider_relation(const SpiderForm& f, Nat k);

// -----------------------------------------------------------------------------

template <class Rng>
Interpretation random_interpretation(const Signature& sig, Nat k, Rng& rng) {
  Interpretation in;
  in.carrier = k;
  for (const auto& [name, ty] : sig.generators()) {
    FinRelation r(k, ty.dom, ty.cod);
    for (std::uint64_t x = 0; x < r.rows(); ++x)
      for (std::uint64_t y = 0; y < r.cols(); ++y)
        if (rng() & 1u) r.set(x, y);
    in.assignment.emplace(name, std::move(r));
  }
  return in;
}

}  // namespace fob
