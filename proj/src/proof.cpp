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

// Rewrite steps, proof scripts and their checker.

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "detail/match.hpp"
#include "fob/rewrite.hpp"

namespace fob {

std::string to_string(const Step& s) {
  std::string out = "step " + s.axiom + " at " + to_string(s.pos) + " dir " +
                    (s.dir == Direction::L2R ? "l2r" : "r2l");
  std::string with = s.with_text.empty() ? to_string(s.with) : s.with_text;
  if (!with.empty()) out += " with " + with;
  return out;
}

namespace {

const Axiom& lookup(const std::string& name, const std::vector<Axiom>& axioms) {
  for (const Axiom& a : axioms)
    if (a.name == name) return a;
  throw RewriteError("unknown axiom '" + name + "'");
}

// Explicit bindings arrive untyped; sort them by what the axiom declares.
Substitution seed_for(const Axiom& ax, const Substitution& with) {
  Substitution s;
  s.objects = with.objects;
  for (const auto& [name, t] : with.arrows) {
    if (ax.gen_vars.count(name)) {
      if (t.kind() != Kind::Gen)
        throw RewriteError("?" + name + " is a generator metavariable; bind it to (gen NAME)");
      s.gens[name] = t.name();
    } else if (ax.arrow_vars.count(name)) {
      s.arrows.emplace(name, t);
    } else {
      throw RewriteError("axiom " + ax.name + " has no metavariable ?" + name);
    }
  }
  for (const auto& [name, g] : with.gens) {
    if (ax.gen_vars.count(name))
      s.gens[name] = g;
    else if (ax.arrow_vars.count(name))
      s.arrows.emplace(name, Term::gen(g));
    else
      throw RewriteError("axiom " + ax.name + " has no metavariable ?" + name);
  }
  for (const auto& [x, v] : with.objects) {
    (void)v;
    if (std::find(ax.object_vars.begin(), ax.object_vars.end(), x) == ax.object_vars.end())
      throw RewriteError("axiom " + ax.name + " has no object variable " + x);
  }
  return s;
}

}  // namespace

Term apply_step(const Term& t, const Step& s, const Signature& sig,
                const std::vector<Axiom>& axioms) {
  const Axiom& ax = lookup(s.axiom, axioms);
  if (s.dir == Direction::R2L && ax.kind == AxiomKind::Le)
    throw RewriteError("axiom " + ax.name + " is an inequality; it only applies l2r");
  const Term& sub = subterm_at(t, s.pos);
  const Type ty = typecheck(sub, sig);
  const Pattern& from = s.dir == Direction::L2R ? ax.lhs : ax.rhs;
  const Pattern& to = s.dir == Direction::L2R ? ax.rhs : ax.lhs;
  const std::string where = ax.name + " at " + to_string(s.pos);

  detail::Matcher m{sig, seed_for(ax, s.with), {}};
  if (!m.walk(from, sub))
    throw RewriteError(where + ": pattern " + print_pattern(from) + " does not match " +
                       print_term(sub));
  for (const auto& [a, bound] : m.sub.arrows)
    if (auto it = ax.arrow_vars.find(a); it != ax.arrow_vars.end())
      m.constrain_type(it->second, typecheck(bound, sig));
  for (const auto& [r, g] : m.sub.gens)
    if (auto it = ax.gen_vars.find(r); it != ax.gen_vars.end())
      m.constrain_type(it->second, sig.type_of(g));
  if (!m.solve()) throw RewriteError(where + ": inconsistent object bindings");

  try {
    if (instantiate(from, m.sub) != sub)
      throw RewriteError(where + ": pattern " + print_pattern(from) + " does not match " +
                         print_term(sub));
  } catch (const RewriteError& e) {
    const std::string msg = e.what();
    throw RewriteError(msg.rfind(where, 0) == 0 ? msg : where + ": " + msg);
  }
  Term out;
  try {
    out = instantiate(to, m.sub);
  } catch (const RewriteError& e) {
    throw RewriteError(where + ": " + e.what());
  }
  const Type out_ty = typecheck(out, sig);
  if (out_ty != ty)
    throw RewriteError(where + ": rewrite changes the type from " + to_string(ty) + " to " +
                       to_string(out_ty));
  return replace_at(t, s.pos, out, sig);
}

Term apply_step(const Term& t, const Step& s, const Signature& sig) {
  return apply_step(t, s, sig, axiom_db());
}

// --- Proof files -------------------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

Term term_at(std::string_view text, std::size_t line, std::size_t col, const Signature& sig) {
  return term_from_sexpr(read_single_sexpr(text, line, col), sig);
}

// Splits "S <= T" at the top-level `<=`.
std::pair<std::size_t, std::size_t> split_claim(std::string_view s, std::size_t line) {
  int depth = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && s[i] == '<' && s[i + 1] == '=') return {i, i + 2};
  }
  throw ParseError("expected 'prove S <= T'", line, 1);
}

void parse_bindings(std::string_view s, std::size_t line, std::size_t col0, const Signature& sig,
                    Step& step) {
  std::size_t i = 0;
  auto skip = [&]() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  while (i < s.size()) {
    const std::size_t start = i;
    while (i < s.size() && s[i] != '=' && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size() || s[i] != '=')
      throw ParseError("expected NAME=VALUE in 'with'", line, col0 + start);
    std::string name(s.substr(start, i - start));
    if (!name.empty() && name[0] == '?') name.erase(0, 1);
    if (name.empty()) throw ParseError("empty binding name", line, col0 + start);
    ++i;
    const std::size_t vstart = i;
    if (i < s.size() && s[i] == '(') {
      int depth = 0;
      while (i < s.size()) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) {
          ++i;
          break;
        }
        ++i;
      }
      if (depth != 0) throw ParseError("unbalanced '(' in binding", line, col0 + vstart);
      step.with.arrows.insert_or_assign(
          name, term_at(s.substr(vstart, i - vstart), line, col0 + vstart, sig));
    } else {
      while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      const std::string v(s.substr(vstart, i - vstart));
      if (v.empty()) throw ParseError("missing value for " + name, line, col0 + vstart);
      if (std::isdigit(static_cast<unsigned char>(v[0]))) {
        SExpr e{false, v, {}, line, col0 + vstart};
        step.with.objects[name] = sexpr_nat(e);
      } else {
        if (!sig.contains(v)) throw UnknownGenerator(v);
        step.with.gens[name] = v;
      }
    }
    skip();
  }
}

}  // namespace

ProofScript parse_proof(std::string_view text, const Signature& sig) {
  ProofScript p;
  bool have_claim = false, done = false;
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view raw = text.substr(start, nl == text.npos ? text.npos : nl - start);
    ++line_no;
    if (auto hash = raw.find('#'); hash != raw.npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    const std::size_t indent = raw.find_first_not_of(" \t");
    const std::size_t col0 = (indent == raw.npos ? 0 : indent) + 1;
    if (!line.empty()) {
      std::istringstream in(line);
      std::string kw;
      in >> kw;
      if (done) throw ParseError("input after 'qed'", line_no, col0);
      if (kw == "prove") {
        if (have_claim) throw ParseError("second 'prove' line", line_no, col0);
        const std::string body = line.substr(5);
        auto [a, b] = split_claim(body, line_no);
        p.lhs = term_at(body.substr(0, a), line_no, col0 + 5, sig);
        p.rhs = term_at(body.substr(b), line_no, col0 + 5 + b, sig);
        have_claim = true;
      } else if (kw == "step") {
        if (!have_claim) throw ParseError("'step' before 'prove'", line_no, col0);
        Step st;
        std::string at, pos, dir_kw, dir;
        if (!(in >> st.axiom >> at >> pos >> dir_kw >> dir) || at != "at" || dir_kw != "dir")
          throw ParseError("expected 'step AXIOM at P dir l2r|r2l'", line_no, col0);
        try {
          st.pos = parse_position(pos);
        } catch (const Error& e) {
          throw ParseError(e.what(), line_no, col0);
        }
        if (dir == "l2r")
          st.dir = Direction::L2R;
        else if (dir == "r2l")
          st.dir = Direction::R2L;
        else
          throw ParseError("direction must be l2r or r2l, got '" + dir + "'", line_no, col0);
        std::string with_kw;
        if (in >> with_kw) {
          if (with_kw != "with") throw ParseError("expected 'with', got '" + with_kw + "'", line_no, col0);
          const auto pos_in = in.tellg();
          const std::size_t off = pos_in < 0 ? line.size() : static_cast<std::size_t>(pos_in);
          st.with_text = trim(line.substr(off));
          parse_bindings(line.substr(off), line_no, col0 + off, sig, st);
        }
        p.steps.push_back(std::move(st));
      } else if (kw == "qed") {
        if (!have_claim) throw ParseError("'qed' before 'prove'", line_no, col0);
        std::string rest;
        if (in >> rest) throw ParseError("trailing input after 'qed'", line_no, col0);
        done = true;
      } else {
        throw ParseError("unknown directive '" + kw + "'", line_no, col0);
      }
    }
    if (nl == text.npos) break;
    start = nl + 1;
  }
  if (!have_claim) throw ParseError("missing 'prove' line", line_no, 1);
  if (!done) throw ParseError("missing 'qed'", line_no, 1);
  return p;
}

std::string print_proof(const ProofScript& p) {
  std::ostringstream os;
  os << "prove " << print_term(p.lhs) << " <= " << print_term(p.rhs) << '\n';
  for (const Step& s : p.steps) os << to_string(s) << '\n';
  os << "qed\n";
  return os.str();
}

std::string Verdict::to_string() const {
  if (accepted) return "accepted";
  if (step) return "rejected at step " + std::to_string(*step) + ": " + reason;
  return "rejected: " + reason;
}

Verdict check_proof(const ProofScript& script, const Signature& sig) {
  Verdict v;
  Term cur, target;
  try {
    const Type a = typecheck(script.lhs, sig);
    const Type b = typecheck(script.rhs, sig);
    if (a != b) {
      v.reason = "claim sides have types " + to_string(a) + " and " + to_string(b);
      return v;
    }
    cur = desugar(script.lhs, sig);
    target = desugar(script.rhs, sig);
  } catch (const Error& e) {
    v.reason = std::string("claim: ") + e.what();
    return v;
  }
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    try {
      cur = apply_step(cur, script.steps[i], sig);
    } catch (const Error& e) {
      v.step = i;
      v.reason = e.what();
      return v;
    }
  }
  if (cur != target) {
    v.step = script.steps.size();
    v.reason = "final term " + print_term(cur) + " differs from " + print_term(target);
    return v;
  }
  v.accepted = true;
  return v;
}

// --- Semantic cross-check --------------------------------------------------------------

SpotcheckResult semantic_spotcheck(const Term& s, const Term& t, const Signature& sig,
                                   std::size_t trials, Nat k, std::uint64_t seed) {
  SpotcheckResult res;
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < trials; ++i) {
    Interpretation in = random_interpretation(sig, k, rng);
    ++res.trials;
    if (!included(eval(s, sig, in), eval(t, sig, in))) {
      res.ok = false;
      res.countermodel = std::move(in);
      return res;
    }
  }
  return res;
}

SpotcheckResult semantic_spotcheck(const ProofScript& script, const Signature& sig,
                                   std::size_t trials, Nat k, std::uint64_t seed) {
  return semantic_spotcheck(script.lhs, script.rhs, sig, trials, k, seed);
}

}  // namespace fob
