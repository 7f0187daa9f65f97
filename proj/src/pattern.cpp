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

// Patterns with metavariables and syntactic matching.

#include <cctype>
#include <sstream>

#include "fob/rewrite.hpp"
#include "detail/match.hpp"

namespace fob {

// --- ObjExpr -------------------------------------------------------------------------

ObjExpr ObjExpr::parse(std::string_view text) {
  ObjExpr e;
  if (text.empty()) throw ParseError("empty object expression", 1, 1);
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t start = i;
    std::int64_t num = 0;
    bool has_num = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      num = num * 10 + (text[i] - '0');
      has_num = true;
      ++i;
    }
    std::string var;
    if (i < text.size() && std::isupper(static_cast<unsigned char>(text[i]))) {
      while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) var += text[i++];
    }
    if (!has_num && var.empty())
      throw ParseError("bad object expression '" + std::string(text) + "'", 1, start + 1);
    if (var.empty()) {
      e.constant += num;
    } else {
      e.coeff[var] += has_num ? num : 1;
    }
    if (i == text.size()) break;
    if (text[i] != '+')
      throw ParseError("bad object expression '" + std::string(text) + "'", 1, i + 1);
    ++i;
  }
  for (auto it = e.coeff.begin(); it != e.coeff.end();)
    it = it->second == 0 ? e.coeff.erase(it) : std::next(it);
  return e;
}

std::optional<Nat> ObjExpr::eval(const ObjBinding& b) const {
  std::int64_t v = constant;
  for (const auto& [x, a] : coeff) {
    auto it = b.find(x);
    if (it == b.end()) return std::nullopt;
    v += a * static_cast<std::int64_t>(it->second);
  }
  if (v < 0) return std::nullopt;
  return static_cast<Nat>(v);
}

std::string ObjExpr::str() const {
  std::string out;
  for (const auto& [x, a] : coeff) {
    if (!out.empty()) out += '+';
    if (a != 1) out += std::to_string(a);
    out += x;
  }
  if (constant != 0 || out.empty()) {
    if (!out.empty()) out += '+';
    out += std::to_string(constant);
  }
  return out;
}

// --- Pattern syntax ---------------------------------------------------------------------

namespace {

struct MacroName {
  const char* atom;
  Kind kind;
};

constexpr MacroName kMacros[] = {
    {"copyw", Kind::CopyW},     {"dscw", Kind::DiscardW}, {"cocw", Kind::CocopyW},
    {"codw", Kind::CodiscardW}, {"copyb", Kind::CopyB},   {"dscb", Kind::DiscardB},
    {"cocb", Kind::CocopyB},    {"codb", Kind::CodiscardB},
};

std::optional<Kind> macro_kind(const std::string& atom) {
  for (const auto& m : kMacros)
    if (atom == m.atom) return m.kind;
  return std::nullopt;
}

const char* macro_atom(Kind k) {
  for (const auto& m : kMacros)
    if (m.kind == k) return m.atom;
  return "?";
}

ObjExpr obj_of(const SExpr& e) {
  if (!e.is_atom()) throw ParseError("expected an object expression", e.line, e.column);
  try {
    return ObjExpr::parse(e.atom);
  } catch (const ParseError& err) {
    throw ParseError(err.what(), e.line, e.column);
  }
}

Pattern from_sexpr(const SExpr& e) {
  Pattern p;
  if (e.is_atom()) {
    if (!e.atom.empty() && e.atom[0] == '?') {
      p.tag = Pattern::Tag::ArrowVar;
      p.name = e.atom.substr(1);
      if (p.name.empty()) throw ParseError("empty metavariable name", e.line, e.column);
      return p;
    }
    if (auto k = macro_kind(e.atom)) {
      p.kind = *k;
      return p;
    }
    throw ParseError("unknown pattern atom '" + e.atom + "'", e.line, e.column);
  }
  if (e.items.empty() || !e.items[0].is_atom())
    throw ParseError("expected an operator name", e.line, e.column);
  const std::string& head = e.items[0].atom;
  auto need = [&](std::size_t n) {
    if (e.items.size() != n)
      throw ParseError("'" + head + "' expects " + std::to_string(n - 1) + " argument(s)", e.line,
                       e.column);
  };
  if (auto k = macro_kind(head)) {
    need(2);
    p.tag = Pattern::Tag::Macro;
    p.kind = *k;
    p.e0 = obj_of(e.items[1]);
    return p;
  }
  if (head == "idw" || head == "idb") {
    need(2);
    p.kind = head == "idw" ? Kind::IdW : Kind::IdB;
    p.e0 = obj_of(e.items[1]);
    return p;
  }
  if (head == "symw" || head == "symb") {
    need(3);
    p.kind = head == "symw" ? Kind::SymW : Kind::SymB;
    p.e0 = obj_of(e.items[1]);
    p.e1 = obj_of(e.items[2]);
    return p;
  }
  if (head == "gen" || head == "genop") {
    need(2);
    p.kind = head == "gen" ? Kind::Gen : Kind::GenOp;
    const SExpr& a = e.items[1];
    if (!a.is_atom()) throw ParseError("expected a generator", a.line, a.column);
    if (a.atom.size() > 1 && a.atom[0] == '?') {
      p.tag = Pattern::Tag::GenVar;
      p.name = a.atom.substr(1);
    } else {
      p.name = a.atom;
    }
    return p;
  }
  if (head == "seqw" || head == "seqb" || head == "tensw" || head == "tensb") {
    need(3);
    p.kind = head == "seqw"    ? Kind::SeqW
             : head == "seqb"  ? Kind::SeqB
             : head == "tensw" ? Kind::TensW
                               : Kind::TensB;
    p.kids = {from_sexpr(e.items[1]), from_sexpr(e.items[2])};
    return p;
  }
  throw ParseError("unknown pattern operator '" + head + "'", e.items[0].line, e.items[0].column);
}

void print_rec(const Pattern& p, std::ostringstream& os) {
  switch (p.tag) {
    case Pattern::Tag::ArrowVar: os << '?' << p.name; return;
    case Pattern::Tag::GenVar:
      os << (p.kind == Kind::Gen ? "(gen ?" : "(genop ?") << p.name << ')';
      return;
    case Pattern::Tag::Macro: os << '(' << macro_atom(p.kind) << ' ' << p.e0.str() << ')'; return;
    case Pattern::Tag::Node: break;
  }
  switch (p.kind) {
    case Kind::IdW: os << "(idw " << p.e0.str() << ')'; return;
    case Kind::IdB: os << "(idb " << p.e0.str() << ')'; return;
    case Kind::SymW: os << "(symw " << p.e0.str() << ' ' << p.e1.str() << ')'; return;
    case Kind::SymB: os << "(symb " << p.e0.str() << ' ' << p.e1.str() << ')'; return;
    case Kind::Gen: os << "(gen " << p.name << ')'; return;
    case Kind::GenOp: os << "(genop " << p.name << ')'; return;
    case Kind::SeqW:
    case Kind::SeqB:
    case Kind::TensW:
    case Kind::TensB: {
      const char* op = p.kind == Kind::SeqW    ? "seqw"
                       : p.kind == Kind::SeqB  ? "seqb"
                       : p.kind == Kind::TensW ? "tensw"
                                               : "tensb";
      os << '(' << op << ' ';
      print_rec(p.kids[0], os);
      os << ' ';
      print_rec(p.kids[1], os);
      os << ')';
      return;
    }
    default: os << macro_atom(p.kind); return;
  }
}

}  // namespace

Pattern parse_pattern(std::string_view text) { return from_sexpr(read_single_sexpr(text)); }

std::string print_pattern(const Pattern& p) {
  std::ostringstream os;
  print_rec(p, os);
  return os.str();
}

std::string to_string(const Substitution& s) {
  std::ostringstream os;
  bool first = true;
  auto sep = [&]() {
    if (!first) os << ' ';
    first = false;
  };
  for (const auto& [x, v] : s.objects) sep(), os << x << '=' << v;
  for (const auto& [a, t] : s.arrows) sep(), os << a << '=' << print_term(t);
  for (const auto& [r, g] : s.gens) sep(), os << r << '=' << g;
  return os.str();
}

// --- Instantiation ---------------------------------------------------------------------

namespace {

Nat need_obj(const ObjExpr& e, const ObjBinding& b) {
  if (auto v = e.eval(b)) return *v;
  for (const auto& [x, a] : e.coeff)
    if (!b.count(x)) throw RewriteError("cannot infer " + x + "; supply it with 'with " + x + "=N'");
  throw RewriteError("object expression " + e.str() + " is negative");
}

Term macro_term(Kind k, Nat n) {
  const Color c = color_of(k);
  switch (k) {
    case Kind::CopyW:
    case Kind::CopyB: return copy_n(c, n);
    case Kind::DiscardW:
    case Kind::DiscardB: return discard_n(c, n);
    case Kind::CocopyW:
    case Kind::CocopyB: return cocopy_n(c, n);
    default: return codiscard_n(c, n);
  }
}

Type macro_type(Kind k, Nat n) {
  switch (k) {
    case Kind::CopyW:
    case Kind::CopyB: return {n, 2 * n};
    case Kind::DiscardW:
    case Kind::DiscardB: return {n, 0};
    case Kind::CocopyW:
    case Kind::CocopyB: return {2 * n, n};
    default: return {0, n};
  }
}

}  // namespace

Term instantiate(const Pattern& p, const Substitution& s) {
  switch (p.tag) {
    case Pattern::Tag::ArrowVar: {
      auto it = s.arrows.find(p.name);
      if (it == s.arrows.end())
        throw RewriteError("cannot infer ?" + p.name + "; supply it with 'with " + p.name +
                           "=TERM'");
      return it->second;
    }
    case Pattern::Tag::GenVar: {
      auto it = s.gens.find(p.name);
      if (it == s.gens.end())
        throw RewriteError("cannot infer generator ?" + p.name + "; supply it with 'with " +
                           p.name + "=(gen NAME)'");
      return p.kind == Kind::Gen ? Term::gen(it->second) : Term::gen_op(it->second);
    }
    case Pattern::Tag::Macro: return macro_term(p.kind, need_obj(p.e0, s.objects));
    case Pattern::Tag::Node: break;
  }
  switch (p.kind) {
    case Kind::IdW:
    case Kind::IdB: return Term::id(color_of(p.kind), need_obj(p.e0, s.objects));
    case Kind::SymW:
    case Kind::SymB:
      return Term::sym(color_of(p.kind), need_obj(p.e0, s.objects), need_obj(p.e1, s.objects));
    case Kind::Gen: return Term::gen(p.name);
    case Kind::GenOp: return Term::gen_op(p.name);
    case Kind::SeqW:
    case Kind::SeqB:
    case Kind::TensW:
    case Kind::TensB: {
      Term a = instantiate(p.kids[0], s);
      Term b = instantiate(p.kids[1], s);
      const Color c = color_of(p.kind);
      return p.kind == Kind::SeqW || p.kind == Kind::SeqB ? Term::seq(c, a, b)
                                                          : Term::tens(c, a, b);
    }
    default: return Term::constant(p.kind);
  }
}

// --- Matching --------------------------------------------------------------------------

namespace detail {

void Matcher::constrain(const ObjExpr& e, Nat value) { eqs.push_back({e, value}); }

void Matcher::constrain_type(const VarType& vt, const Type& t) {
  constrain(vt.dom, t.dom);
  constrain(vt.cod, t.cod);
}

bool Matcher::walk(const Pattern& p, const Term& t) {
  switch (p.tag) {
    case Pattern::Tag::ArrowVar: {
      auto it = sub.arrows.find(p.name);
      if (it != sub.arrows.end()) return it->second == t;
      sub.arrows.emplace(p.name, t);
      return true;
    }
    case Pattern::Tag::GenVar: {
      if (t.kind() != p.kind) return false;
      auto it = sub.gens.find(p.name);
      if (it != sub.gens.end()) return it->second == t.name();
      sub.gens.emplace(p.name, t.name());
      return true;
    }
    case Pattern::Tag::Macro: {
      const Type ty = typecheck(t, sig);
      const Type shape = macro_type(p.kind, 1);
      // E -> 2E etc: each side is a multiple of E
      if (shape.dom != 0)
        eqs.push_back({scale(p.e0, shape.dom), ty.dom});
      else if (ty.dom != 0)
        return false;
      if (shape.cod != 0)
        eqs.push_back({scale(p.e0, shape.cod), ty.cod});
      else if (ty.cod != 0)
        return false;
      return true;
    }
    case Pattern::Tag::Node: break;
  }
  switch (p.kind) {
    case Kind::IdW:
    case Kind::IdB:
      if (t.kind() != p.kind) return false;
      constrain(p.e0, t.p0());
      return true;
    case Kind::SymW:
    case Kind::SymB:
      if (t.kind() != p.kind) return false;
      constrain(p.e0, t.p0());
      constrain(p.e1, t.p1());
      return true;
    case Kind::Gen:
    case Kind::GenOp: return t.kind() == p.kind && t.name() == p.name;
    case Kind::SeqW:
    case Kind::SeqB:
    case Kind::TensW:
    case Kind::TensB:
      return t.kind() == p.kind && walk(p.kids[0], t.child(0)) && walk(p.kids[1], t.child(1));
    default: return t.kind() == p.kind;
  }
}

ObjExpr Matcher::scale(const ObjExpr& e, Nat f) {
  ObjExpr r = e;
  r.constant *= static_cast<std::int64_t>(f);
  for (auto& [x, a] : r.coeff) a *= static_cast<std::int64_t>(f);
  return r;
}

bool Matcher::solve() {
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& [e, value] : eqs) {
      std::int64_t known = e.constant;
      const std::string* unknown = nullptr;
      std::int64_t unknown_coeff = 0;
      int unknowns = 0;
      for (const auto& [x, a] : e.coeff) {
        auto it = sub.objects.find(x);
        if (it != sub.objects.end()) {
          known += a * static_cast<std::int64_t>(it->second);
        } else {
          ++unknowns;
          unknown = &x;
          unknown_coeff = a;
        }
      }
      const std::int64_t rest = static_cast<std::int64_t>(value) - known;
      if (unknowns == 0) {
        if (rest != 0) return false;
      } else if (unknowns == 1) {
        if (rest < 0 || rest % unknown_coeff != 0) return false;
        sub.objects[*unknown] = static_cast<Nat>(rest / unknown_coeff);
        progress = true;
      }
    }
  }
  return true;
}

}  // namespace detail

std::optional<Substitution> match_pattern(const Pattern& p, const Term& t, const Signature& sig,
                                          const Substitution& seed) {
  detail::Matcher m{sig, seed, {}};
  if (!m.walk(p, t)) return std::nullopt;
  if (!m.solve()) return std::nullopt;
  try {
    if (instantiate(p, m.sub) != t) return std::nullopt;
  } catch (const RewriteError&) {
    return std::nullopt;
  }
  return m.sub;
}

}  // namespace fob
