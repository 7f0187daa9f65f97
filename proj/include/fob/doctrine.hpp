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
#include <optional>
#include <string>
#include <vector>

#include "fob/finrel.hpp"

namespace fob::doctrine {

// The powerset doctrine on finite sets. Products are strict and left nested:
// the pair (x, y) in X x Y has index x * |Y| + y.

struct FinSetObj {
  Nat size = 0;
  friend bool operator==(const FinSetObj&, const FinSetObj&) = default;
};

FinSetObj product(FinSetObj x, FinSetObj y);
inline Nat pair_index(FinSetObj, FinSetObj y, Nat a, Nat b) { return a * y.size + b; }

struct FinSetMor {
  FinSetObj dom, cod;
  std::vector<Nat> table;

  Nat operator()(Nat x) const { return table[x]; }
  friend bool operator==(const FinSetMor&, const FinSetMor&) = default;
  /// `f: [v0, v1, ...]`
  std::string to_string() const;
};

/// Throws ShapeError on a bad table.
FinSetMor make_mor(FinSetObj dom, FinSetObj cod, std::vector<Nat> table);
FinSetMor identity(FinSetObj x);
/// f then g.
FinSetMor then(const FinSetMor& f, const FinSetMor& g);
FinSetMor proj1(FinSetObj x, FinSetObj y);
FinSetMor proj2(FinSetObj x, FinSetObj y);
FinSetMor diagonal(FinSetObj x);
FinSetMor terminal(FinSetObj x);
/// <f, g> : Z -> X x Y
FinSetMor pairing(const FinSetMor& f, const FinSetMor& g);
/// f x g
FinSetMor cross(const FinSetMor& f, const FinSetMor& g);
/// All |Y|^|X| maps in lexicographic order of their tables.
std::vector<FinSetMor> all_maps(FinSetObj x, FinSetObj y);

struct Predicate {
  FinSetObj over;
  std::vector<bool> members;

  static Predicate top(FinSetObj x) { return {x, std::vector<bool>(x.size, true)}; }
  static Predicate bottom(FinSetObj x) { return {x, std::vector<bool>(x.size, false)}; }
  static Predicate from_mask(FinSetObj x, std::uint64_t mask);
  static Predicate from_list(FinSetObj x, const std::vector<Nat>& elems);

  bool has(Nat x) const { return members[x]; }
  std::vector<Nat> elements() const;
  /// `{0, 3}`
  std::string to_string() const;
  friend bool operator==(const Predicate&, const Predicate&) = default;
};

Predicate meet(const Predicate& a, const Predicate& b);
Predicate join(const Predicate& a, const Predicate& b);
Predicate negate(const Predicate& a);
bool leq(const Predicate& a, const Predicate& b);
/// Every predicate over x, by bitmask order. x.size <= 20.
std::vector<Predicate> all_predicates(FinSetObj x);

Predicate subst(const FinSetMor& f, const Predicate& a);
/// Direct image.
Predicate exists_along(const FinSetMor& f, const Predicate& a);
/// exists along the second projection of Y x X after reindexing by f x id and
/// the equality of Y; must agree with exists_along.
Predicate exists_along_formula(const FinSetMor& f, const Predicate& a);
/// not . exists_f . not
Predicate forall_along(const FinSetMor& f, const Predicate& a);
Predicate equality_pred(FinSetObj x);

// --- Binary predicates and Rel(P) ---------------------------------------------------

/// A predicate over dom x cod read as an arrow dom -> cod of Rel(P).
struct RelArrow {
  FinSetObj dom, cod;
  Predicate pred;

  bool has(Nat x, Nat y) const { return pred.has(x * cod.size + y); }
  friend bool operator==(const RelArrow&, const RelArrow&) = default;
};

RelArrow make_arrow(FinSetObj dom, FinSetObj cod, Predicate p);
std::vector<RelArrow> all_arrows(FinSetObj dom, FinSetObj cod);

bool is_functional(const RelArrow& phi);
bool is_entire(const RelArrow& phi);

RelArrow relp_identity(FinSetObj x);
RelArrow relp_compose(const RelArrow& phi, const RelArrow& psi);
RelArrow relp_tensor(const RelArrow& phi, const RelArrow& psi);
RelArrow relp_converse(const RelArrow& phi);
/// P_{f x id}(delta_Y)
RelArrow graph_of(const FinSetMor& f);
/// Both map inequalities of Rel(P), built from graph_of(diagonal) and
/// graph_of(terminal).
bool is_relp_map(const RelArrow& phi);

/// Bijections with finrel: X = k^n elements, tuples in base-k order.
FinRelation to_finrel(const RelArrow& phi, Nat k, Nat n, Nat m);
RelArrow from_finrel(const FinRelation& r);

// --- Comprehension, tabulation, choice ------------------------------------------------

struct ComprehensionReport {
  FinSetObj sub;
  FinSetMor incl;
  bool top_holds = false;    // P_incl(alpha) = top
  bool universal = false;    // unique factorisation for every g : Z -> X, |Z| <= probe
  std::optional<bool> full;  // against every beta over X; unset when X is too big
};

/// Brute force probes use domains of size 0..2 and fullness runs for |X| <= 12.
ComprehensionReport comprehension(const Predicate& a);

struct TabulationReport {
  FinSetObj sub;
  FinSetMor incl;
  RelArrow graph;         // i : X_r -> X
  bool section = false;   // i ; i^dagger = id
  bool recovers = false;  // i^dagger ; discard = r
};

/// r : X -> I with cod arity 0.
TabulationReport tabulation(const FinRelation& r);

/// The functional and entire case only: the unique f with top <= P_<id,f>(phi).
std::optional<FinSetMor> ruc_witness(const RelArrow& phi);
/// Lexicographically least f with top <= P_<id,f>(phi); needs only entirety.
std::optional<FinSetMor> choice_witness(const RelArrow& phi);

// --- Law sweep ------------------------------------------------------------------

struct LawTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::string first_failure;
};

/// Adjunctions, Frobenius reciprocity, Beck-Chevalley for projection squares,
/// forall = not exists not, the image formula, and the negation law for
/// functional entire composition; every object of size <= max_size.
std::vector<LawTally> check_laws(Nat max_size);

}  // namespace fob::doctrine
