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

// Textual syntax for terms and signatures.

#include <cctype>
#include <sstream>
#include <unordered_map>

#include "fob/sexpr.hpp"
#include "fob/term.hpp"

namespace fob {

namespace {

const std::unordered_map<std::string, Kind>& constant_atoms() {
  static const std::unordered_map<std::string, Kind> table = {
      {"copyw", Kind::CopyW}, {"dscw", Kind::DiscardW}, {"cocw", Kind::CocopyW},
      {"codw", Kind::CodiscardW}, {"copyb", Kind::CopyB}, {"dscb", Kind::DiscardB},
      {"cocb", Kind::CocopyB}, {"codb", Kind::CodiscardB},
  };
  return table;
}

const char* constant_name(Kind k) {
  switch (k) {
    case Kind::CopyW: return "copyw";
    case Kind::DiscardW: return "dscw";
    case Kind::CocopyW: return "cocw";
    case Kind::CodiscardW: return "codw";
    case Kind::CopyB: return "copyb";
    case Kind::DiscardB: return "dscb";
    case Kind::CocopyB: return "cocb";
    case Kind::CodiscardB: return "codb";
    default: return "?";
  }
}

void expect_len(const SExpr& e, std::size_t n, const std::string& head) {
  if (e.items.size() != n)
    throw ParseError("'" + head + "' expects " + std::to_string(n - 1) + " argument(s), got " +
                         std::to_string(e.items.size() - 1),
                     e.line, e.column);
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '-'))
      return false;
  return true;
}

Term from_sexpr(const SExpr& e, const Signature* sig) {
  if (e.is_atom()) {
    auto it = constant_atoms().find(e.atom);
    if (it == constant_atoms().end())
      throw ParseError("unknown atom '" + e.atom + "'", e.line, e.column);
    return Term::constant(it->second);
  }
  if (e.items.empty() || !e.items[0].is_atom())
    throw ParseError("expected an operator name", e.line, e.column);
  const std::string& head = e.items[0].atom;
  auto sub = [&](std::size_t i) { return from_sexpr(e.items[i], sig); };
  auto nat = [&](std::size_t i) { return sexpr_nat(e.items[i]); };
  auto name = [&](std::size_t i) {
    const SExpr& a = e.items[i];
    if (!a.is_atom() || !valid_name(a.atom))
      throw ParseError("expected a generator name", a.line, a.column);
    if (sig && !sig->contains(a.atom)) throw UnknownGenerator(a.atom);
    return a.atom;
  };
  if (head == "idw" || head == "idb") {
    expect_len(e, 2, head);
    return head == "idw" ? Term::id_w(nat(1)) : Term::id_b(nat(1));
  }
  if (head == "symw" || head == "symb") {
    expect_len(e, 3, head);
    return head == "symw" ? Term::sym_w(nat(1), nat(2)) : Term::sym_b(nat(1), nat(2));
  }
  if (head == "gen" || head == "genop") {
    expect_len(e, 2, head);
    return head == "gen" ? Term::gen(name(1)) : Term::gen_op(name(1));
  }
  if (head == "seqw" || head == "seqb" || head == "tensw" || head == "tensb" || head == "meet" ||
      head == "join") {
    expect_len(e, 3, head);
    Term a = sub(1);
    Term b = sub(2);
    if (head == "seqw") return Term::seq_w(a, b);
    if (head == "seqb") return Term::seq_b(a, b);
    if (head == "tensw") return Term::tens_w(a, b);
    if (head == "tensb") return Term::tens_b(a, b);
    if (head == "meet") return Term::meet(a, b);
    return Term::join(a, b);
  }
  if (head == "dag" || head == "neg") {
    expect_len(e, 2, head);
    return head == "dag" ? Term::dag(sub(1)) : Term::neg(sub(1));
  }
  if (head == "top" || head == "bot") {
    expect_len(e, 3, head);
    return head == "top" ? Term::top(nat(1), nat(2)) : Term::bot(nat(1), nat(2));
  }
  throw ParseError("unknown operator '" + head + "'", e.items[0].line, e.items[0].column);
}

void print_rec(const Term& t, std::ostringstream& os) {
  auto bin = [&](const char* op) {
    os << '(' << op << ' ';
    print_rec(t.child(0), os);
    os << ' ';
    print_rec(t.child(1), os);
    os << ')';
  };
  switch (t.kind()) {
    case Kind::IdW: os << "(idw " << t.p0() << ')'; return;
    case Kind::IdB: os << "(idb " << t.p0() << ')'; return;
    case Kind::SymW: os << "(symw " << t.p0() << ' ' << t.p1() << ')'; return;
    case Kind::SymB: os << "(symb " << t.p0() << ' ' << t.p1() << ')'; return;
    case Kind::Gen: os << "(gen " << t.name() << ')'; return;
    case Kind::GenOp: os << "(genop " << t.name() << ')'; return;
    case Kind::SeqW: bin("seqw"); return;
    case Kind::SeqB: bin("seqb"); return;
    case Kind::TensW: bin("tensw"); return;
    case Kind::TensB: bin("tensb"); return;
    case Kind::Meet: bin("meet"); return;
    case Kind::Join: bin("join"); return;
    case Kind::Dag: os << "(dag "; print_rec(t.child(0), os); os << ')'; return;
    case Kind::Neg: os << "(neg "; print_rec(t.child(0), os); os << ')'; return;
    case Kind::Top: os << "(top " << t.p0() << ' ' << t.p1() << ')'; return;
    case Kind::Bot: os << "(bot " << t.p0() << ' ' << t.p1() << ')'; return;
    default: os << constant_name(t.kind()); return;
  }
}

}  // namespace

Term parse_term(std::string_view text, const Signature& sig) {
  return from_sexpr(read_single_sexpr(text), &sig);
}

Term parse_term_unchecked(std::string_view text) {
  return from_sexpr(read_single_sexpr(text), nullptr);
}

// Exposed for file parsers that already hold an SExpr.
Term term_from_sexpr(const SExpr& e, const Signature& sig) { return from_sexpr(e, &sig); }

std::string print_term(const Term& t) {
  std::ostringstream os;
  print_rec(t, os);
  return os.str();
}

Signature parse_signature(std::string_view text) {
  Signature sig;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == text.npos ? text.npos : nl - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::string kw, name, colon, arrow;
    std::string n_str, m_str;
    if (in >> kw) {
      if (kw != "sig") throw ParseError("expected 'sig', got '" + kw + "'", line_no, 1);
      if (!(in >> name >> colon >> n_str >> arrow >> m_str) || colon != ":" || arrow != "->")
        throw ParseError("expected 'sig NAME : N -> M'", line_no, 1);
      std::string rest;
      if (in >> rest) throw ParseError("trailing input '" + rest + "'", line_no, 1);
      if (!valid_name(name)) throw ParseError("bad generator name '" + name + "'", line_no, 1);
      SExpr n_e{false, n_str, {}, line_no, 1};
      SExpr m_e{false, m_str, {}, line_no, 1};
      try {
        sig.add(name, sexpr_nat(n_e), sexpr_nat(m_e));
      } catch (const ParseError&) {
        throw;
      } catch (const Error& err) {
        throw ParseError(err.what(), line_no, 1);
      }
    }
    if (nl == text.npos) break;
    start = nl + 1;
  }
  return sig;
}

std::string print_signature(const Signature& sig) {
  std::ostringstream os;
  for (const auto& [name, ty] : sig.generators())
    os << "sig " << name << " : " << ty.dom << " -> " << ty.cod << '\n';
  return os.str();
}

}  // namespace fob
