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

#include "fob/term.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace fob {

std::string to_string(const Type& t) {
  return std::to_string(t.dom) + " -> " + std::to_string(t.cod);
}

// --- Signature ---------------------------------------------------------------

void Signature::add(const std::string& name, Nat arity, Nat coarity) {
  if (name.empty()) throw Error("empty generator name");
  if (index_.count(name)) throw Error("duplicate generator '" + name + "'");
  index_[name] = gens_.size();
  gens_.emplace_back(name, Type{arity, coarity});
}

Type Signature::type_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownGenerator(name);
  return gens_[it->second].second;
}

// --- Kinds -------------------------------------------------------------------

bool is_sugar(Kind k) {
  switch (k) {
    case Kind::Dag: case Kind::Neg: case Kind::Meet:
    case Kind::Join: case Kind::Top: case Kind::Bot:
      return true;
    default:
      return false;
  }
}

bool is_constant(Kind k) {
  switch (k) {
    case Kind::CopyW: case Kind::DiscardW: case Kind::CocopyW: case Kind::CodiscardW:
    case Kind::CopyB: case Kind::DiscardB: case Kind::CocopyB: case Kind::CodiscardB:
      return true;
    default:
      return false;
  }
}

bool is_binary(Kind k) {
  switch (k) {
    case Kind::SeqW: case Kind::SeqB: case Kind::TensW: case Kind::TensB:
    case Kind::Meet: case Kind::Join:
      return true;
    default:
      return false;
  }
}

bool is_unary(Kind k) { return k == Kind::Dag || k == Kind::Neg; }

std::size_t arity_of(Kind k) { return is_binary(k) ? 2 : (is_unary(k) ? 1 : 0); }

Color color_of(Kind k) {
  switch (k) {
    case Kind::IdB: case Kind::SymB: case Kind::GenOp:
    case Kind::CopyB: case Kind::DiscardB: case Kind::CocopyB: case Kind::CodiscardB:
    case Kind::SeqB: case Kind::TensB: case Kind::Join: case Kind::Bot:
      return Color::Black;
    default:
      return Color::White;
  }
}

Kind copy_kind(Color c) { return c == Color::White ? Kind::CopyW : Kind::CopyB; }
Kind discard_kind(Color c) { return c == Color::White ? Kind::DiscardW : Kind::DiscardB; }
Kind cocopy_kind(Color c) { return c == Color::White ? Kind::CocopyW : Kind::CocopyB; }
Kind codiscard_kind(Color c) { return c == Color::White ? Kind::CodiscardW : Kind::CodiscardB; }

// --- Term --------------------------------------------------------------------

Term::Term() : Term(id_w(0)) {}

Term Term::make(Kind k, Nat p0, Nat p1, std::string name, std::vector<Term> kids) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->p0 = p0;
  n->p1 = p1;
  n->name = std::move(name);
  n->kids = std::move(kids);
  return Term(std::shared_ptr<const Node>(std::move(n)));
}

const Term& Term::child(std::size_t i) const {
  if (i >= node_->kids.size()) throw PositionError("child index out of range");
  return node_->kids[i];
}

std::size_t Term::size() const {
  std::size_t s = 1;
  for (const auto& k : node_->kids) s += k.size();
  return s;
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const auto& k : node_->kids) d = std::max(d, k.depth());
  return d + 1;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.p0 != y.p0 || x.p1 != y.p1 || x.name != y.name) return false;
  for (std::size_t i = 0; i < x.kids.size(); ++i)
    if (!(x.kids[i] == y.kids[i])) return false;
  return true;
}

Term Term::id_w(Nat n) { return make(Kind::IdW, n, 0, {}, {}); }
Term Term::id_b(Nat n) { return make(Kind::IdB, n, 0, {}, {}); }
Term Term::sym_w(Nat m, Nat n) { return make(Kind::SymW, m, n, {}, {}); }
Term Term::sym_b(Nat m, Nat n) { return make(Kind::SymB, m, n, {}, {}); }
Term Term::gen(std::string name) { return make(Kind::Gen, 0, 0, std::move(name), {}); }
Term Term::gen_op(std::string name) { return make(Kind::GenOp, 0, 0, std::move(name), {}); }

Term Term::constant(Kind k) {
  if (!is_constant(k)) throw Error("not a (co)monoid constant");
  return make(k, 0, 0, {}, {});
}

Term Term::seq_w(Term a, Term b) { return make(Kind::SeqW, 0, 0, {}, {std::move(a), std::move(b)}); }
Term Term::seq_b(Term a, Term b) { return make(Kind::SeqB, 0, 0, {}, {std::move(a), std::move(b)}); }
Term Term::seq(Color c, Term a, Term b) {
  return c == Color::White ? seq_w(std::move(a), std::move(b)) : seq_b(std::move(a), std::move(b));
}
Term Term::tens_w(Term a, Term b) { return make(Kind::TensW, 0, 0, {}, {std::move(a), std::move(b)}); }
Term Term::tens_b(Term a, Term b) { return make(Kind::TensB, 0, 0, {}, {std::move(a), std::move(b)}); }
Term Term::tens(Color c, Term a, Term b) {
  return c == Color::White ? tens_w(std::move(a), std::move(b)) : tens_b(std::move(a), std::move(b));
}
Term Term::dag(Term a) { return make(Kind::Dag, 0, 0, {}, {std::move(a)}); }
Term Term::neg(Term a) { return make(Kind::Neg, 0, 0, {}, {std::move(a)}); }
Term Term::meet(Term a, Term b) { return make(Kind::Meet, 0, 0, {}, {std::move(a), std::move(b)}); }
Term Term::join(Term a, Term b) { return make(Kind::Join, 0, 0, {}, {std::move(a), std::move(b)}); }
Term Term::top(Nat n, Nat m) { return make(Kind::Top, n, m, {}, {}); }
Term Term::bot(Nat n, Nat m) { return make(Kind::Bot, n, m, {}, {}); }

Term Term::with_children(std::vector<Term> kids) const {
  if (kids.size() != node_->kids.size()) throw Error("with_children: wrong child count");
  return make(node_->kind, node_->p0, node_->p1, node_->name, std::move(kids));
}

// --- Arity-indexed (co)monoids ---------------------------------------------------

// copy_{n+1} = (copy_n (x) copy_1) ; (id_n (x) sym_{n,1} (x) id_1)
Term copy_n(Color c, Nat n) {
  if (n == 0) return Term::id(c, 0);
  Term acc = Term::constant(copy_kind(c));
  for (Nat i = 1; i < n; ++i) {
    Term spread = Term::tens(c, acc, Term::constant(copy_kind(c)));
    Term shuffle = Term::tens(c, Term::tens(c, Term::id(c, i), Term::sym(c, i, 1)), Term::id(c, 1));
    acc = Term::seq(c, spread, shuffle);
  }
  return acc;
}

// cocopy_{n+1} = (id_n (x) sym_{1,n} (x) id_1) ; (cocopy_n (x) cocopy_1)
Term cocopy_n(Color c, Nat n) {
  if (n == 0) return Term::id(c, 0);
  Term acc = Term::constant(cocopy_kind(c));
  for (Nat i = 1; i < n; ++i) {
    Term shuffle = Term::tens(c, Term::tens(c, Term::id(c, i), Term::sym(c, 1, i)), Term::id(c, 1));
    Term merge = Term::tens(c, acc, Term::constant(cocopy_kind(c)));
    acc = Term::seq(c, shuffle, merge);
  }
  return acc;
}

Term discard_n(Color c, Nat n) {
  if (n == 0) return Term::id(c, 0);
  Term acc = Term::constant(discard_kind(c));
  for (Nat i = 1; i < n; ++i) acc = Term::tens(c, acc, Term::constant(discard_kind(c)));
  return acc;
}

Term codiscard_n(Color c, Nat n) {
  if (n == 0) return Term::id(c, 0);
  Term acc = Term::constant(codiscard_kind(c));
  for (Nat i = 1; i < n; ++i) acc = Term::tens(c, acc, Term::constant(codiscard_kind(c)));
  return acc;
}

// --- Positions ---------------------------------------------------------------

std::string to_string(const Position& p) {
  if (p.path.empty()) return "ε";
  std::string s;
  for (std::size_t i = 0; i < p.path.size(); ++i) {
    if (i) s.push_back('.');
    s += std::to_string(p.path[i]);
  }
  return s;
}

Position parse_position(std::string_view text) {
  Position p;
  if (text.empty() || text == "ε" || text == "e" || text == "root") return p;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    std::string_view part = text.substr(start, dot == std::string_view::npos ? text.npos : dot - start);
    if (part != "0" && part != "1") throw PositionError("bad position component '" + std::string(part) + "'");
    p.path.push_back(static_cast<std::uint8_t>(part[0] - '0'));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return p;
}

std::vector<Position> positions(const Term& t) {
  std::vector<Position> out;
  Position cur;
  std::function<void(const Term&)> walk = [&](const Term& u) {
    out.push_back(cur);
    for (std::size_t i = 0; i < u.num_children(); ++i) {
      cur.path.push_back(static_cast<std::uint8_t>(i));
      walk(u.child(i));
      cur.path.pop_back();
    }
  };
  walk(t);
  return out;
}

const Term& subterm_at(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (std::size_t i = 0; i < p.path.size(); ++i) {
    if (p.path[i] >= cur->num_children())
      throw PositionError("invalid position " + to_string(p) + ": no child " +
                          std::to_string(p.path[i]) + " at depth " + std::to_string(i));
    cur = &cur->child(p.path[i]);
  }
  return *cur;
}

namespace {

Term replace_rec(const Term& t, const Position& p, std::size_t depth, const Term& u) {
  if (depth == p.path.size()) return u;
  std::size_t idx = p.path[depth];
  if (idx >= t.num_children()) throw PositionError("invalid position " + to_string(p));
  std::vector<Term> kids;
  for (std::size_t i = 0; i < t.num_children(); ++i)
    kids.push_back(i == idx ? replace_rec(t.child(i), p, depth + 1, u) : t.child(i));
  return t.with_children(std::move(kids));
}

}  // namespace

Term replace_at(const Term& t, const Position& p, const Term& u, const Signature& sig) {
  const Term& old = subterm_at(t, p);
  Type want = typecheck(old, sig);
  Type got = typecheck(u, sig);
  if (!(want == got))
    throw TypeError("replacement has type " + to_string(got) + ", expected " + to_string(want),
                    to_string(p));
  return replace_rec(t, p, 0, u);
}

// --- Typing --------------------------------------------------------------------

namespace {

Type type_rec(const Term& t, const Signature& sig, Position& at) {
  auto child_type = [&](std::size_t i) {
    at.path.push_back(static_cast<std::uint8_t>(i));
    Type ty = type_rec(t.child(i), sig, at);
    at.path.pop_back();
    return ty;
  };
  switch (t.kind()) {
    case Kind::IdW: case Kind::IdB:
      return {t.p0(), t.p0()};
    case Kind::SymW: case Kind::SymB:
      return {t.p0() + t.p1(), t.p1() + t.p0()};
    case Kind::Gen:
      return sig.type_of(t.name());
    case Kind::GenOp: {
      Type g = sig.type_of(t.name());
      return {g.cod, g.dom};
    }
    case Kind::CopyW: case Kind::CopyB:
      return {1, 2};
    case Kind::DiscardW: case Kind::DiscardB:
      return {1, 0};
    case Kind::CocopyW: case Kind::CocopyB:
      return {2, 1};
    case Kind::CodiscardW: case Kind::CodiscardB:
      return {0, 1};
    case Kind::SeqW: case Kind::SeqB: {
      Type a = child_type(0);
      Type b = child_type(1);
      if (a.cod != b.dom)
        throw TypeError("composition mismatch: cod " + std::to_string(a.cod) + " ≠ dom " +
                            std::to_string(b.dom) + " (left " + to_string(a) + ", right " +
                            to_string(b) + ")",
                        to_string(at));
      return {a.dom, b.cod};
    }
    case Kind::TensW: case Kind::TensB: {
      Type a = child_type(0);
      Type b = child_type(1);
      return {a.dom + b.dom, a.cod + b.cod};
    }
    case Kind::Dag: {
      Type a = child_type(0);
      return {a.cod, a.dom};
    }
    case Kind::Neg:
      return child_type(0);
    case Kind::Meet: case Kind::Join: {
      Type a = child_type(0);
      Type b = child_type(1);
      if (!(a == b))
        throw TypeError("lattice operands differ: " + to_string(a) + " vs " + to_string(b),
                        to_string(at));
      return a;
    }
    case Kind::Top: case Kind::Bot:
      return {t.p0(), t.p1()};
  }
  throw Error("unreachable term kind");
}

}  // namespace

Type typecheck(const Term& t, const Signature& sig) {
  Position at;
  return type_rec(t, sig, at);
}

bool is_primitive(const Term& t) {
  if (is_sugar(t.kind())) return false;
  for (std::size_t i = 0; i < t.num_children(); ++i)
    if (!is_primitive(t.child(i))) return false;
  return true;
}

// --- Dagger, negation, desugaring ------------------------------------------------

// c : n -> m  gives  (id_m (x) cup_n) ; (id_m (x) c (x) id_n) ; (cap_m (x) id_n) : m -> n
Term cup_cap_conjugate(const Term& c, Type type) {
  const Nat n = type.dom;
  const Nat m = type.cod;
  const Color w = Color::White;
  Term cup = Term::seq_w(codiscard_n(w, n), copy_n(w, n));
  Term cap = Term::seq_w(cocopy_n(w, m), discard_n(w, m));
  Term open = Term::tens_w(Term::id_w(m), cup);
  Term middle = Term::tens_w(Term::tens_w(Term::id_w(m), c), Term::id_w(n));
  Term close = Term::tens_w(cap, Term::id_w(n));
  return Term::seq_w(Term::seq_w(open, middle), close);
}

namespace {

Kind switch_kind(Kind k) {
  switch (k) {
    case Kind::IdW: return Kind::IdB;
    case Kind::IdB: return Kind::IdW;
    case Kind::SymW: return Kind::SymB;
    case Kind::SymB: return Kind::SymW;
    case Kind::CopyW: return Kind::CopyB;
    case Kind::CopyB: return Kind::CopyW;
    case Kind::DiscardW: return Kind::DiscardB;
    case Kind::DiscardB: return Kind::DiscardW;
    case Kind::CocopyW: return Kind::CocopyB;
    case Kind::CocopyB: return Kind::CocopyW;
    case Kind::CodiscardW: return Kind::CodiscardB;
    case Kind::CodiscardB: return Kind::CodiscardW;
    case Kind::SeqW: return Kind::SeqB;
    case Kind::SeqB: return Kind::SeqW;
    case Kind::TensW: return Kind::TensB;
    case Kind::TensB: return Kind::TensW;
    default: throw Error("colour switch on non-primitive node");
  }
}

}  // namespace

Term colour_switch(const Term& p, const Signature& sig) {
  switch (p.kind()) {
    case Kind::Gen: {
      // ¬R = (R●op)†
      Type g = sig.type_of(p.name());
      return cup_cap_conjugate(Term::gen_op(p.name()), Type{g.cod, g.dom});
    }
    case Kind::GenOp:
      // ¬(R●op) = R†
      return cup_cap_conjugate(Term::gen(p.name()), sig.type_of(p.name()));
    case Kind::IdW: case Kind::IdB:
      return Term::id(p.kind() == Kind::IdW ? Color::Black : Color::White, p.p0());
    case Kind::SymW: case Kind::SymB:
      return Term::sym(p.kind() == Kind::SymW ? Color::Black : Color::White, p.p0(), p.p1());
    case Kind::SeqW: case Kind::SeqB: case Kind::TensW: case Kind::TensB: {
      Term a = colour_switch(p.child(0), sig);
      Term b = colour_switch(p.child(1), sig);
      Kind k = switch_kind(p.kind());
      if (k == Kind::SeqW) return Term::seq_w(a, b);
      if (k == Kind::SeqB) return Term::seq_b(a, b);
      if (k == Kind::TensW) return Term::tens_w(a, b);
      return Term::tens_b(a, b);
    }
    default:
      if (is_constant(p.kind())) return Term::constant(switch_kind(p.kind()));
      throw Error("colour_switch expects a primitive term");
  }
}

Term dagger_primitive(const Term& p, const Signature& sig) {
  switch (p.kind()) {
    case Kind::IdW: case Kind::IdB:
      return p;
    case Kind::SymW: case Kind::SymB:
      return Term::sym(color_of(p.kind()), p.p1(), p.p0());
    case Kind::Gen:
      return cup_cap_conjugate(p, sig.type_of(p.name()));
    case Kind::GenOp: {
      const Type g = sig.type_of(p.name());
      return cup_cap_conjugate(p, Type{g.cod, g.dom});
    }
    case Kind::SeqW: case Kind::SeqB:
      return Term::seq(color_of(p.kind()), dagger_primitive(p.child(1), sig),
                       dagger_primitive(p.child(0), sig));
    case Kind::TensW: case Kind::TensB:
      return Term::tens(color_of(p.kind()), dagger_primitive(p.child(0), sig),
                        dagger_primitive(p.child(1), sig));
    default:
      break;
  }
  if (!is_constant(p.kind())) throw Error("dagger_primitive expects a primitive term");
  const Color c = color_of(p.kind());
  const Kind k = p.kind();
  if (k == copy_kind(c)) return Term::constant(cocopy_kind(c));
  if (k == cocopy_kind(c)) return Term::constant(copy_kind(c));
  if (k == discard_kind(c)) return Term::constant(codiscard_kind(c));
  return Term::constant(discard_kind(c));
}

namespace {

struct Desugared {
  Term term;
  Type type;
};

Desugared desugar_rec(const Term& t, const Signature& sig) {
  switch (t.kind()) {
    case Kind::SeqW: case Kind::SeqB: case Kind::TensW: case Kind::TensB: {
      Desugared a = desugar_rec(t.child(0), sig);
      Desugared b = desugar_rec(t.child(1), sig);
      bool seq = t.kind() == Kind::SeqW || t.kind() == Kind::SeqB;
      Type ty = seq ? Type{a.type.dom, b.type.cod}
                    : Type{a.type.dom + b.type.dom, a.type.cod + b.type.cod};
      return {t.with_children({a.term, b.term}), ty};
    }
    case Kind::Dag: {
      Desugared a = desugar_rec(t.child(0), sig);
      return {dagger_primitive(a.term, sig), Type{a.type.cod, a.type.dom}};
    }
    case Kind::Neg: {
      Desugared a = desugar_rec(t.child(0), sig);
      return {colour_switch(a.term, sig), a.type};
    }
    case Kind::Meet: case Kind::Join: {
      Color c = t.kind() == Kind::Meet ? Color::White : Color::Black;
      Desugared a = desugar_rec(t.child(0), sig);
      Desugared b = desugar_rec(t.child(1), sig);
      Term body = Term::seq(c, copy_n(c, a.type.dom), Term::tens(c, a.term, b.term));
      return {Term::seq(c, body, cocopy_n(c, a.type.cod)), a.type};
    }
    case Kind::Top:
      return {Term::seq_w(discard_n(Color::White, t.p0()), codiscard_n(Color::White, t.p1())),
              Type{t.p0(), t.p1()}};
    case Kind::Bot:
      return {Term::seq_b(discard_n(Color::Black, t.p0()), codiscard_n(Color::Black, t.p1())),
              Type{t.p0(), t.p1()}};
    default:
      return {t, typecheck(t, sig)};
  }
}

}  // namespace

Term desugar(const Term& t, const Signature& sig) {
  typecheck(t, sig);
  return desugar_rec(t, sig).term;
}

}  // namespace fob
