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

// Generators and brute-force oracles shared by the test binaries.

#pragma once

#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fob/finrel.hpp"
#include "fob/rewrite.hpp"
#include "fob/term.hpp"

#ifndef FOB_DATA_DIR
#define FOB_DATA_DIR "data"
#endif

namespace fob {
// readable gtest failure messages
inline void PrintTo(const FinRelation& r, std::ostream* os) {
  *os << r.carrier() << ":" << r.dom_arity() << "->" << r.cod_arity() << " " << print_relation(r);
}
inline void PrintTo(const Term& t, std::ostream* os) { *os << print_term(t); }
}  // namespace fob

namespace fob::testing {

using Rng = std::mt19937_64;

inline std::string data_path(const std::string& rel) { return std::string(FOB_DATA_DIR) + "/" + rel; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Nat pick(Rng& rng, Nat n) { return std::uniform_int_distribution<Nat>(0, n - 1)(rng); }
inline bool coin(Rng& rng) { return rng() & 1u; }

inline FinRelation random_relation(Rng& rng, Nat k, Nat n, Nat m) {
  FinRelation r(k, n, m);
  for (std::uint64_t x = 0; x < r.rows(); ++x)
    for (std::uint64_t y = 0; y < r.cols(); ++y)
      if (coin(rng)) r.set(x, y);
  return r;
}

// Oracles computed from tuple lists, never from the kernels.

inline bool naive_has(const FinRelation& r, const std::vector<Nat>& x, const std::vector<Nat>& y) {
  return r.test(encode_tuple(x, r.carrier()), encode_tuple(y, r.carrier()));
}

inline FinRelation naive_complement(const FinRelation& a) {
  FinRelation r(a.carrier(), a.dom_arity(), a.cod_arity());
  for (std::uint64_t x = 0; x < a.rows(); ++x)
    for (std::uint64_t y = 0; y < a.cols(); ++y) r.set(x, y, !a.test(x, y));
  return r;
}

inline FinRelation naive_converse(const FinRelation& a) {
  FinRelation r(a.carrier(), a.cod_arity(), a.dom_arity());
  for (std::uint64_t x = 0; x < a.rows(); ++x)
    for (std::uint64_t y = 0; y < a.cols(); ++y) r.set(y, x, a.test(x, y));
  return r;
}

inline FinRelation naive_compose(const FinRelation& a, const FinRelation& b, bool black) {
  FinRelation r(a.carrier(), a.dom_arity(), b.cod_arity());
  for (std::uint64_t x = 0; x < a.rows(); ++x)
    for (std::uint64_t z = 0; z < b.cols(); ++z) {
      bool v = black;
      for (std::uint64_t y = 0; y < a.cols(); ++y)
        v = black ? (v && (a.test(x, y) || b.test(y, z))) : (v || (a.test(x, y) && b.test(y, z)));
      r.set(x, z, v);
    }
  return r;
}

/// All relations on one coordinate that are graphs of functions.
inline std::vector<FinRelation> all_function_graphs(Nat k) {
  std::vector<FinRelation> out;
  std::vector<Nat> f(k, 0);
  while (true) {
    FinRelation r(k, 1, 1);
    for (Nat x = 0; x < k; ++x) r.set(x, f[x]);
    out.push_back(r);
    Nat i = k;
    while (i > 0 && ++f[i - 1] == k) f[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

// --- Random well-typed terms --------------------------------------------------------

/// Generators available to random terms: R : 1 -> 1, S : 1 -> 2, P : 1 -> 0.
inline Signature random_term_signature() {
  Signature sig;
  sig.add("R", 1, 1);
  sig.add("S", 1, 2);
  sig.add("P", 1, 0);
  return sig;
}

struct Typed {
  Term t;
  Type ty;
};

/// A random term with the given domain. Codomains stay at most 3.
inline Typed random_term_from(Rng& rng, Nat dom, int depth) {
  const Color c = coin(rng) ? Color::White : Color::Black;
  auto leaf = [&]() -> Typed {
    switch (dom) {
      case 0: {
        if (coin(rng)) return {Term::constant(codiscard_kind(c)), {0, 1}};
        return {Term::id(c, 0), {0, 0}};
      }
      case 1: {
        switch (pick(rng, 8)) {
          case 0: return {Term::constant(copy_kind(c)), {1, 2}};
          case 1: return {Term::constant(discard_kind(c)), {1, 0}};
          case 2: return {Term::gen("R"), {1, 1}};
          case 3: return {Term::gen_op("R"), {1, 1}};
          case 4: return {Term::gen("S"), {1, 2}};
          case 5: return {Term::gen("P"), {1, 0}};
          case 6: {
            const Nat m = pick(rng, 3);
            return {Term::top(1, m), {1, m}};
          }
          default: return {Term::id(c, 1), {1, 1}};
        }
      }
      case 2: {
        switch (pick(rng, 4)) {
          case 0: return {Term::constant(cocopy_kind(c)), {2, 1}};
          case 1: return {Term::sym(c, 1, 1), {2, 2}};
          case 2: return {Term::gen_op("S"), {2, 1}};
          default: return {Term::id(c, 2), {2, 2}};
        }
      }
      default: return {Term::id(c, dom), {dom, dom}};
    }
  };
  Typed out;
  if (depth <= 0) {
    out = leaf();
  } else {
    switch (pick(rng, 7)) {
      case 0:
      case 1: {
        Typed a = random_term_from(rng, dom, depth - 1);
        Typed b = random_term_from(rng, a.ty.cod, depth - 1);
        out = {Term::seq(c, a.t, b.t), {dom, b.ty.cod}};
        break;
      }
      case 2: {
        if (dom == 0) {
          out = leaf();
          break;
        }
        const Nat left = 1 + pick(rng, dom);
        Typed a = random_term_from(rng, left, depth - 1);
        Typed b = random_term_from(rng, dom - left, depth - 1);
        out = {Term::tens(c, a.t, b.t), {dom, a.ty.cod + b.ty.cod}};
        break;
      }
      case 3: {
        Typed a = random_term_from(rng, dom, depth - 1);
        out = {Term::neg(a.t), a.ty};
        break;
      }
      case 4: {
        Typed a = random_term_from(rng, dom, depth - 1);
        Typed b = random_term_from(rng, dom, depth - 1);
        if (b.ty == a.ty)
          out = {coin(rng) ? Term::meet(a.t, b.t) : Term::join(a.t, b.t), a.ty};
        else
          out = {coin(rng) ? Term::meet(a.t, Term::neg(a.t)) : Term::join(a.t, a.t), a.ty};
        break;
      }
      case 5: {
        // dagger of something ending in dom
        Typed a = random_term_from(rng, dom, depth - 1);
        if (a.ty.cod == dom)
          out = {Term::dag(a.t), {dom, dom}};
        else
          out = a;
        break;
      }
      default: out = leaf();
    }
  }
  while (out.ty.cod > 3) {
    // squeeze back with black cocopies on the first wires
    Term fix = Term::tens(Color::White, Term::constant(Kind::CocopyB), Term::id_w(out.ty.cod - 2));
    out = {Term::seq_w(out.t, fix), {dom, out.ty.cod - 1}};
  }
  return out;
}

inline Typed random_term(Rng& rng, int depth) {
  return random_term_from(rng, pick(rng, 3), depth);
}

inline Interpretation random_interp(Rng& rng, const Signature& sig, Nat k) {
  Interpretation in;
  in.carrier = k;
  for (const auto& [name, ty] : sig.generators())
    in.assignment.emplace(name, random_relation(rng, k, ty.dom, ty.cod));
  return in;
}

// --- Frobenius fragment terms ----------------------------------------------------------

/// Random one-colour (co)monoid term with the given domain and at most
/// `budget` constants.
inline Typed random_fragment(Rng& rng, Color c, Nat dom, int& budget, int depth) {
  if (depth <= 0 || budget <= 0 || pick(rng, 4) == 0) {
    if (budget > 0 && dom == 1 && coin(rng)) {
      --budget;
      return coin(rng) ? Typed{Term::constant(copy_kind(c)), {1, 2}}
                       : Typed{Term::constant(discard_kind(c)), {1, 0}};
    }
    if (budget > 0 && dom == 2 && coin(rng)) {
      --budget;
      return {Term::constant(cocopy_kind(c)), {2, 1}};
    }
    if (budget > 0 && dom == 0 && coin(rng)) {
      --budget;
      return {Term::constant(codiscard_kind(c)), {0, 1}};
    }
    if (dom == 2 && coin(rng)) return {Term::sym(c, 1, 1), {2, 2}};
    return {Term::id(c, dom), {dom, dom}};
  }
  if (dom >= 2 && coin(rng)) {
    const Nat left = 1 + pick(rng, dom - 1);
    Typed a = random_fragment(rng, c, left, budget, depth - 1);
    Typed b = random_fragment(rng, c, dom - left, budget, depth - 1);
    return {Term::tens(c, a.t, b.t), {dom, a.ty.cod + b.ty.cod}};
  }
  Typed a = random_fragment(rng, c, dom, budget, depth - 1);
  if (a.ty.cod > 3) return a;
  Typed b = random_fragment(rng, c, a.ty.cod, budget, depth - 1);
  return {Term::seq(c, a.t, b.t), {dom, b.ty.cod}};
}

/// A connected white fragment term: every new constant is attached to a wire
/// of the diagram built so far. Uses at most max_constants constants.
inline Typed random_connected_white(Rng& rng, int max_constants) {
  Typed t = coin(rng) ? Typed{Term::constant(Kind::CopyW), {1, 2}}
                      : Typed{Term::constant(Kind::CocopyW), {2, 1}};
  int used = 1;
  auto around = [&](Nat width, Nat at, Term piece, Nat piece_width) {
    Term out = piece;
    if (at > 0) out = Term::tens_w(Term::id_w(at), out);
    if (at + piece_width < width) out = Term::tens_w(out, Term::id_w(width - at - piece_width));
    return out;
  };
  const int target = 1 + static_cast<int>(pick(rng, static_cast<Nat>(max_constants)));
  while (used < target) {
    const Nat n = t.ty.dom, m = t.ty.cod;
    const bool post = coin(rng);
    const Nat width = post ? m : n;
    if (width == 0) break;
    // choose a piece that keeps the diagram connected and boundaries small
    std::vector<int> options;
    if (width + 1 <= 4) options.push_back(0);                // split a wire
    if (width >= 2) options.push_back(1);                    // merge two wires
    if (width >= 2 && n + m >= 3) options.push_back(2);      // cap one wire
    if (width >= 2) options.push_back(3);                    // swap
    if (options.empty()) break;
    const int choice = options[pick(rng, options.size())];
    Term piece;
    Nat touching = 1, new_width = width;
    bool constant = true;
    switch (choice) {
      case 0:
        piece = Term::constant(post ? Kind::CopyW : Kind::CocopyW);
        new_width = width + 1;
        break;
      case 1:
        piece = Term::constant(post ? Kind::CocopyW : Kind::CopyW);
        touching = 2;
        new_width = width - 1;
        break;
      case 2:
        piece = Term::constant(post ? Kind::DiscardW : Kind::CodiscardW);
        new_width = width - 1;
        break;
      default:
        piece = Term::sym_w(1, 1);
        touching = 2;
        constant = false;
        break;
    }
    const Nat at = pick(rng, width - touching + 1);
    Term layer = around(width, at, piece, touching);
    if (post) {
      t = {Term::seq_w(t.t, layer), {n, new_width}};
    } else {
      t = {Term::seq_w(layer, t.t), {new_width, m}};
    }
    if (constant) ++used;
  }
  return t;
}

/// The relation where every input and output coordinate carries the same value.
inline FinRelation all_equal_relation(Nat k, Nat n, Nat m) {
  FinRelation r(k, n, m);
  for (std::uint64_t x = 0; x < r.rows(); ++x)
    for (std::uint64_t y = 0; y < r.cols(); ++y) {
      std::vector<Nat> all = decode_tuple(x, k, n);
      const std::vector<Nat> ys = decode_tuple(y, k, m);
      all.insert(all.end(), ys.begin(), ys.end());
      bool same = true;
      for (Nat v : all) same = same && v == all.front();
      if (same) r.set(x, y);
    }
  return r;
}

/// Every single-step mutation of a script: each step gets every other axiom
/// name, every other position of the term it rewrites plus one past the end,
/// and the opposite direction.
inline std::vector<ProofScript> single_step_mutations(const ProofScript& script,
                                                      const Signature& sig) {
  std::vector<ProofScript> out;
  Term cur = desugar(script.lhs, sig);
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const Step& s = script.steps[i];
    auto with_step = [&](Step m) {
      ProofScript p = script;
      p.steps[i] = std::move(m);
      out.push_back(std::move(p));
    };
    for (const Axiom& ax : axiom_db())
      if (ax.name != s.axiom) {
        Step m = s;
        m.axiom = ax.name;
        with_step(m);
      }
    for (const Position& pos : positions(cur))
      if (pos != s.pos) {
        Step m = s;
        m.pos = pos;
        with_step(m);
      }
    Step bad = s;
    bad.pos.path.push_back(7);
    with_step(bad);
    Step flip = s;
    flip.dir = s.dir == Direction::L2R ? Direction::R2L : Direction::L2R;
    with_step(flip);
    cur = apply_step(cur, s, sig);
  }
  return out;
}

}  // namespace fob::testing
