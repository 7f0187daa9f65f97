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

// The axiom database.

#include <algorithm>
#include <set>
#include <sstream>

#include "fob/rewrite.hpp"

namespace fob {

std::string to_string(Family f) {
  switch (f) {
    case Family::Cartesian: return "cartesian";
    case Family::Cocartesian: return "cocartesian";
    case Family::Linear: return "linear";
    case Family::Fo: return "fo";
    case Family::Structural: return "structural";
    case Family::GeneratorAdjoint: return "generator-adjoint";
  }
  return "?";
}

namespace {

void collect(const Pattern& p, std::set<std::string>& arrows, std::set<std::string>& gens,
             std::set<std::string>& objects) {
  auto objs = [&](const ObjExpr& e) {
    for (const auto& [x, a] : e.coeff) objects.insert(x);
  };
  objs(p.e0);
  objs(p.e1);
  if (p.tag == Pattern::Tag::ArrowVar) arrows.insert(p.name);
  if (p.tag == Pattern::Tag::GenVar) gens.insert(p.name);
  for (const auto& k : p.kids) collect(k, arrows, gens, objects);
}

}  // namespace

Axiom make_axiom(std::string name, Family family, AxiomKind kind, std::string_view decls,
                 std::string_view lhs, std::string_view rhs) {
  Axiom ax;
  ax.name = std::move(name);
  ax.family = family;
  ax.kind = kind;
  ax.lhs = parse_pattern(lhs);
  ax.rhs = parse_pattern(rhs);
  ax.text = std::string(lhs) + (kind == AxiomKind::Le ? " <= " : " = ") + std::string(rhs);

  std::set<std::string> arrows, gens, objects;
  collect(ax.lhs, arrows, gens, objects);
  collect(ax.rhs, arrows, gens, objects);

  std::istringstream in{std::string(decls)};
  std::string decl;
  while (in >> decl) {
    const auto colon = decl.find(':');
    const auto arrow = decl.find("->");
    if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
      throw ParseError("bad metavariable declaration '" + decl + "'", 1, 1);
    const std::string var = decl.substr(0, colon);
    VarType vt{ObjExpr::parse(decl.substr(colon + 1, arrow - colon - 1)),
               ObjExpr::parse(decl.substr(arrow + 2))};
    for (const auto* e : {&vt.dom, &vt.cod})
      for (const auto& [x, a] : e->coeff) objects.insert(x);
    if (gens.count(var))
      ax.gen_vars.emplace(var, vt);
    else if (arrows.count(var))
      ax.arrow_vars.emplace(var, vt);
    else
      throw ParseError("declared metavariable '" + var + "' is unused in " + ax.name, 1, 1);
  }
  for (const auto& a : arrows)
    if (!ax.arrow_vars.count(a)) throw ParseError("undeclared ?" + a + " in " + ax.name, 1, 1);
  for (const auto& r : gens)
    if (!ax.gen_vars.count(r)) throw ParseError("undeclared ?" + r + " in " + ax.name, 1, 1);
  ax.object_vars.assign(objects.begin(), objects.end());
  return ax;
}

namespace {

struct Row {
  const char* name;
  Family family;
  AxiomKind kind;
  const char* decls;
  const char* lhs;
  const char* rhs;
};

constexpr auto Le = AxiomKind::Le;
constexpr auto Eq = AxiomKind::Eq;

// (Co)monoid structure, white side.
constexpr Row kCartesian[] = {
    {"copy-as", Family::Cartesian, Eq, "", "(seqw (copyw X) (tensw (copyw X) (idw X)))",
     "(seqw (copyw X) (tensw (idw X) (copyw X)))"},
    {"copy-un", Family::Cartesian, Eq, "", "(seqw (copyw X) (tensw (idw X) (dscw X)))", "(idw X)"},
    {"copy-co", Family::Cartesian, Eq, "", "(seqw (copyw X) (symw X X))", "(copyw X)"},
    {"cocopy-as", Family::Cartesian, Eq, "", "(seqw (tensw (cocw X) (idw X)) (cocw X))",
     "(seqw (tensw (idw X) (cocw X)) (cocw X))"},
    {"cocopy-un", Family::Cartesian, Eq, "", "(seqw (tensw (idw X) (codw X)) (cocw X))",
     "(idw X)"},
    {"cocopy-co", Family::Cartesian, Eq, "", "(seqw (symw X X) (cocw X))", "(cocw X)"},
    {"copy-nat", Family::Cartesian, Le, "c:X->Y", "(seqw ?c (copyw Y))",
     "(seqw (copyw X) (tensw ?c ?c))"},
    {"discard-nat", Family::Cartesian, Le, "c:X->Y", "(seqw ?c (dscw Y))", "(dscw X)"},
    {"eps-copy", Family::Cartesian, Le, "", "(seqw (cocw X) (copyw X))", "(idw 2X)"},
    {"eta-copy", Family::Cartesian, Le, "", "(idw X)", "(seqw (copyw X) (cocw X))"},
    {"eps-discard", Family::Cartesian, Le, "", "(seqw (codw X) (dscw X))", "(idw 0)"},
    {"eta-discard", Family::Cartesian, Le, "", "(idw X)", "(seqw (dscw X) (codw X))"},
    {"S-w", Family::Cartesian, Eq, "", "(seqw (copyw X) (cocw X))", "(idw X)"},
    {"F-w", Family::Cartesian, Eq, "",
     "(seqw (tensw (copyw X) (idw X)) (tensw (idw X) (cocw X)))", "(seqw (cocw X) (copyw X))"},
    {"F-w2", Family::Cartesian, Eq, "",
     "(seqw (tensw (idw X) (copyw X)) (tensw (cocw X) (idw X)))", "(seqw (cocw X) (copyw X))"},
};

// Black side: colours switched, inequalities reversed.
constexpr Row kCocartesian[] = {
    {"copyb-as", Family::Cocartesian, Eq, "", "(seqb (copyb X) (tensb (copyb X) (idb X)))",
     "(seqb (copyb X) (tensb (idb X) (copyb X)))"},
    {"copyb-un", Family::Cocartesian, Eq, "", "(seqb (copyb X) (tensb (idb X) (dscb X)))",
     "(idb X)"},
    {"copyb-co", Family::Cocartesian, Eq, "", "(seqb (copyb X) (symb X X))", "(copyb X)"},
    {"cocopyb-as", Family::Cocartesian, Eq, "", "(seqb (tensb (cocb X) (idb X)) (cocb X))",
     "(seqb (tensb (idb X) (cocb X)) (cocb X))"},
    {"cocopyb-un", Family::Cocartesian, Eq, "", "(seqb (tensb (idb X) (codb X)) (cocb X))",
     "(idb X)"},
    {"cocopyb-co", Family::Cocartesian, Eq, "", "(seqb (symb X X) (cocb X))", "(cocb X)"},
    {"copyb-nat", Family::Cocartesian, Le, "c:X->Y", "(seqb (copyb X) (tensb ?c ?c))",
     "(seqb ?c (copyb Y))"},
    {"discardb-nat", Family::Cocartesian, Le, "c:X->Y", "(dscb X)", "(seqb ?c (dscb Y))"},
    {"eta-cocopy-b", Family::Cocartesian, Le, "", "(idb 2X)", "(seqb (cocb X) (copyb X))"},
    {"eps-cocopy-b", Family::Cocartesian, Le, "", "(seqb (copyb X) (cocb X))", "(idb X)"},
    {"eta-codiscard-b", Family::Cocartesian, Le, "", "(idb 0)", "(seqb (codb X) (dscb X))"},
    {"eps-codiscard-b", Family::Cocartesian, Le, "", "(seqb (dscb X) (codb X))", "(idb X)"},
    {"S-b", Family::Cocartesian, Eq, "", "(seqb (copyb X) (cocb X))", "(idb X)"},
    {"F-b", Family::Cocartesian, Eq, "",
     "(seqb (tensb (copyb X) (idb X)) (tensb (idb X) (cocb X)))", "(seqb (cocb X) (copyb X))"},
    {"F-b2", Family::Cocartesian, Eq, "",
     "(seqb (tensb (idb X) (copyb X)) (tensb (cocb X) (idb X)))", "(seqb (cocb X) (copyb X))"},
};

// Linear distributivity, linear strengths, symmetry adjunctions.
constexpr Row kLinear[] = {
    {"delta-l", Family::Linear, Le, "a:X->Y b:Y->Z c:Z->W", "(seqw ?a (seqb ?b ?c))",
     "(seqb (seqw ?a ?b) ?c)"},
    {"delta-r", Family::Linear, Le, "a:X->Y b:Y->Z c:Z->W", "(seqw (seqb ?a ?b) ?c)",
     "(seqb ?a (seqw ?b ?c))"},
    {"tau-symw", Family::Linear, Le, "", "(idw X+Y)", "(seqb (symw X Y) (symb Y X))"},
    {"gamma-symw", Family::Linear, Le, "", "(seqw (symb X Y) (symw Y X))", "(idb X+Y)"},
    {"tau-symb", Family::Linear, Le, "", "(idw X+Y)", "(seqb (symb X Y) (symw Y X))"},
    {"gamma-symb", Family::Linear, Le, "", "(seqw (symw X Y) (symb Y X))", "(idb X+Y)"},
    {"nu-w-l", Family::Linear, Le, "a:X->Y b:Y->Z c:U->V d:V->W",
     "(tensw (seqb ?a ?b) (seqb ?c ?d))", "(seqb (tensw ?a ?c) (tensb ?b ?d))"},
    {"nu-w-r", Family::Linear, Le, "a:X->Y b:Y->Z c:U->V d:V->W",
     "(tensw (seqb ?a ?b) (seqb ?c ?d))", "(seqb (tensb ?a ?c) (tensw ?b ?d))"},
    {"nu-b-l", Family::Linear, Le, "a:X->Y b:Y->Z c:U->V d:V->W",
     "(seqw (tensw ?a ?c) (tensb ?b ?d))", "(tensb (seqw ?a ?b) (seqw ?c ?d))"},
    {"nu-b-r", Family::Linear, Le, "a:X->Y b:Y->Z c:U->V d:V->W",
     "(seqw (tensb ?a ?c) (tensw ?b ?d))", "(tensb (seqw ?a ?b) (seqw ?c ?d))"},
    {"tensb-idw", Family::Linear, Le, "", "(idw X+Y)", "(tensb (idw X) (idw Y))"},
    {"tensw-idb", Family::Linear, Le, "", "(tensw (idb X) (idb Y))", "(idb X+Y)"},
};

// (Co)monoids of one colour are linear adjoints of those of the other, plus
// the linear Frobenius laws.
constexpr Row kFo[] = {
    {"tau-copyw", Family::Fo, Le, "", "(idw X)", "(seqb (copyw X) (cocb X))"},
    {"tau-discardw", Family::Fo, Le, "", "(idw X)", "(seqb (dscw X) (codb X))"},
    {"tau-cocopyw", Family::Fo, Le, "", "(idw 2X)", "(seqb (cocw X) (copyb X))"},
    {"tau-codiscardw", Family::Fo, Le, "", "(idw 0)", "(seqb (codw X) (dscb X))"},
    {"gamma-copyw", Family::Fo, Le, "", "(seqw (cocb X) (copyw X))", "(idb 2X)"},
    {"gamma-discardw", Family::Fo, Le, "", "(seqw (codb X) (dscw X))", "(idb 0)"},
    {"gamma-cocopyw", Family::Fo, Le, "", "(seqw (copyb X) (cocw X))", "(idb X)"},
    {"gamma-codiscardw", Family::Fo, Le, "", "(seqw (dscb X) (codw X))", "(idb X)"},
    {"tau-copyb", Family::Fo, Le, "", "(idw X)", "(seqb (copyb X) (cocw X))"},
    {"tau-discardb", Family::Fo, Le, "", "(idw X)", "(seqb (dscb X) (codw X))"},
    {"tau-cocopyb", Family::Fo, Le, "", "(idw 2X)", "(seqb (cocb X) (copyw X))"},
    {"tau-codiscardb", Family::Fo, Le, "", "(idw 0)", "(seqb (codb X) (dscw X))"},
    {"gamma-copyb", Family::Fo, Le, "", "(seqw (cocw X) (copyb X))", "(idb 2X)"},
    {"gamma-discardb", Family::Fo, Le, "", "(seqw (codw X) (dscb X))", "(idb 0)"},
    {"gamma-cocopyb", Family::Fo, Le, "", "(seqw (copyw X) (cocb X))", "(idb X)"},
    {"gamma-codiscardb", Family::Fo, Le, "", "(seqw (dscw X) (codb X))", "(idb X)"},
    {"F-wb", Family::Fo, Eq, "", "(seqw (tensw (idw X) (copyw X)) (tensb (cocb X) (idb X)))",
     "(seqw (tensw (copyw X) (idw X)) (tensb (idb X) (cocb X)))"},
    {"F-wb2", Family::Fo, Eq, "", "(seqb (tensw (idw X) (copyw X)) (tensb (cocb X) (idb X)))",
     "(seqb (tensw (copyw X) (idw X)) (tensb (idb X) (cocb X)))"},
    {"F-bw", Family::Fo, Eq, "", "(seqw (tensb (idb X) (copyb X)) (tensw (cocw X) (idw X)))",
     "(seqw (tensb (copyb X) (idb X)) (tensw (idw X) (cocw X)))"},
    {"F-bw2", Family::Fo, Eq, "", "(seqb (tensb (idb X) (copyb X)) (tensw (cocw X) (idw X)))",
     "(seqb (tensb (copyb X) (idb X)) (tensw (idw X) (cocw X)))"},
};

constexpr Row kGenerator[] = {
    {"gen-tau-l", Family::GeneratorAdjoint, Le, "r:X->Y", "(idw X)",
     "(seqb (gen ?r) (genop ?r))"},
    {"gen-gamma-l", Family::GeneratorAdjoint, Le, "r:X->Y", "(seqw (genop ?r) (gen ?r))",
     "(idb Y)"},
    {"gen-tau-r", Family::GeneratorAdjoint, Le, "r:X->Y", "(idw Y)",
     "(seqb (genop ?r) (gen ?r))"},
    {"gen-gamma-r", Family::GeneratorAdjoint, Le, "r:X->Y", "(seqw (gen ?r) (genop ?r))",
     "(idb X)"},
};

// Monoidal coherence, written once with C standing for the colour letter.
struct Template {
  const char* name;
  const char* decls;
  const char* lhs;
  const char* rhs;
};

constexpr Template kStructural[] = {
    {"seq-assoc", "a:X->Y b:Y->Z c:Z->W", "(seqC (seqC ?a ?b) ?c)", "(seqC ?a (seqC ?b ?c))"},
    {"seq-unit-l", "a:X->Y", "(seqC (idC X) ?a)", "?a"},
    {"seq-unit-r", "a:X->Y", "(seqC ?a (idC Y))", "?a"},
    {"tens-assoc", "a:X->Y b:Z->W c:U->V", "(tensC (tensC ?a ?b) ?c)",
     "(tensC ?a (tensC ?b ?c))"},
    {"tens-unit-l", "a:X->Y", "(tensC (idC 0) ?a)", "?a"},
    {"tens-unit-r", "a:X->Y", "(tensC ?a (idC 0))", "?a"},
    {"interchange", "a:X->Y c:Y->Z b:U->V d:V->W", "(seqC (tensC ?a ?b) (tensC ?c ?d))",
     "(tensC (seqC ?a ?c) (seqC ?b ?d))"},
    {"id-tens", "", "(tensC (idC X) (idC Y))", "(idC X+Y)"},
    {"sym-nat", "a:X->Y b:Z->W", "(seqC (tensC ?a ?b) (symC Y W))",
     "(seqC (symC X Z) (tensC ?b ?a))"},
    {"sym-inv", "", "(seqC (symC X Y) (symC Y X))", "(idC X+Y)"},
    {"sym-unit", "", "(symC X 0)", "(idC X)"},
    {"sym-hex", "", "(symC X Y+Z)",
     "(seqC (tensC (symC X Y) (idC Z)) (tensC (idC Y) (symC X Z)))"},
    {"sym-hex2", "", "(symC X+Y Z)",
     "(seqC (tensC (idC X) (symC Y Z)) (tensC (symC X Z) (idC Y)))"},
    {"copy-tens", "", "(copyC X+Y)",
     "(seqC (tensC (copyC X) (copyC Y)) (tensC (tensC (idC X) (symC X Y)) (idC Y)))"},
    {"discard-tens", "", "(dscC X+Y)", "(tensC (dscC X) (dscC Y))"},
    {"cocopy-tens", "", "(cocC X+Y)",
     "(seqC (tensC (tensC (idC X) (symC Y X)) (idC Y)) (tensC (cocC X) (cocC Y)))"},
    {"codiscard-tens", "", "(codC X+Y)", "(tensC (codC X) (codC Y))"},
};

std::string colourize(const char* text, char c) {
  std::string s(text);
  for (const char* stem : {"seqC", "tensC", "idC", "symC", "copyC", "dscC", "cocC", "codC"}) {
    const std::string from(stem);
    std::string to = from;
    to.back() = c;
    for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos))
      s.replace(pos, from.size(), to);
  }
  return s;
}

std::vector<Axiom> build_db() {
  std::vector<Axiom> db;
  auto add_rows = [&](const auto& rows) {
    for (const Row& r : rows) db.push_back(make_axiom(r.name, r.family, r.kind, r.decls, r.lhs, r.rhs));
  };
  add_rows(kCartesian);
  add_rows(kCocartesian);
  add_rows(kLinear);
  add_rows(kFo);
  add_rows(kGenerator);
  for (char c : {'w', 'b'})
    for (const Template& t : kStructural)
      db.push_back(make_axiom(std::string(t.name) + "-" + c, Family::Structural, Eq, t.decls,
                              colourize(t.lhs, c), colourize(t.rhs, c)));
  return db;
}

}  // namespace

const std::vector<Axiom>& axiom_db() {
  static const std::vector<Axiom> db = build_db();
  return db;
}

const Axiom* find_axiom(std::string_view name) {
  for (const Axiom& a : axiom_db())
    if (a.name == name) return &a;
  return nullptr;
}

AxiomInstance instantiate_axiom(const Axiom& ax, const ObjBinding& objects) {
  AxiomInstance inst;
  Substitution s;
  s.objects = objects;
  auto type_of = [&](const std::string& var, const VarType& vt) {
    auto d = vt.dom.eval(objects);
    auto c = vt.cod.eval(objects);
    if (!d || !c) throw RewriteError("object variables of ?" + var + " are not all bound");
    return Type{*d, *c};
  };
  for (const auto& [a, vt] : ax.arrow_vars) {
    const Type ty = type_of(a, vt);
    inst.sig.add(a, ty.dom, ty.cod);
    s.arrows.emplace(a, Term::gen(a));
  }
  for (const auto& [r, vt] : ax.gen_vars) {
    const Type ty = type_of(r, vt);
    inst.sig.add(r, ty.dom, ty.cod);
    s.gens.emplace(r, r);
  }
  inst.lhs = instantiate(ax.lhs, s);
  inst.rhs = instantiate(ax.rhs, s);
  return inst;
}

}  // namespace fob
