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

#include "fob/theory.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <omp.h>

#include "fob/error.hpp"
#include "fob/sexpr.hpp"

namespace fob {

namespace {

struct Line {
  std::size_t no;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0, no = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == text.npos ? text.npos : nl - start);
    ++no;
    if (auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
    out.push_back({no, line});
    if (nl == text.npos) break;
    start = nl + 1;
  }
  return out;
}

std::size_t first_word_end(std::string_view s, std::size_t from) {
  while (from < s.size() && !std::isspace(static_cast<unsigned char>(s[from]))) ++from;
  return from;
}

std::size_t skip_space(std::string_view s, std::size_t from) {
  while (from < s.size() && std::isspace(static_cast<unsigned char>(s[from]))) ++from;
  return from;
}

}  // namespace

Theory parse_theory(std::string_view text) {
  const auto lines = split_lines(text);
  std::string sig_text;
  for (const auto& l : lines) {
    const std::size_t a = skip_space(l.text, 0);
    if (l.text.substr(a, 3) == "sig" && (a + 3 == l.text.size() || std::isspace(static_cast<unsigned char>(l.text[a + 3]))))
      sig_text += std::string(l.text);
    sig_text += '\n';  // keep line numbers
  }
  Theory th;
  th.sig = parse_signature(sig_text);

  std::set<std::string> names;
  for (const auto& l : lines) {
    const std::string_view s = l.text;
    std::size_t a = skip_space(s, 0);
    if (a == s.size()) continue;
    std::size_t b = first_word_end(s, a);
    const std::string_view kw = s.substr(a, b - a);
    if (kw == "sig") continue;
    if (kw != "axiom") throw ParseError("expected 'sig' or 'axiom', got '" + std::string(kw) + "'", l.no, a + 1);
    const std::size_t colon = s.find(':', b);
    if (colon == s.npos) throw ParseError("expected 'axiom NAME : S <= T'", l.no, b + 1);
    a = skip_space(s, b);
    std::size_t e = colon;
    while (e > a && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    const std::string name(s.substr(a, e - a));
    if (name.empty() || first_word_end(s, a) < e)
      throw ParseError("expected 'axiom NAME : S <= T'", l.no, a + 1);
    if (!names.insert(name).second) throw ParseError("duplicate axiom '" + name + "'", l.no, a + 1);
    const std::size_t c = colon + 1;
    const std::string_view body = s.substr(c);
    int depth = 0;
    std::size_t split = body.npos;
    for (std::size_t i = 0; i + 1 < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (depth == 0 && body[i] == '<' && body[i + 1] == '=') {
        split = i;
        break;
      }
    }
    if (split == body.npos) throw ParseError("expected 'S <= T'", l.no, c + 1);
    TheoryAxiom ax;
    ax.name = name;
    ax.lhs = term_from_sexpr(read_single_sexpr(body.substr(0, split), l.no, c + 1), th.sig);
    ax.rhs = term_from_sexpr(read_single_sexpr(body.substr(split + 2), l.no, c + split + 3), th.sig);
    const Type tl = typecheck(ax.lhs, th.sig), tr = typecheck(ax.rhs, th.sig);
    if (!(tl == tr))
      throw TypeError("axiom '" + name + "' relates " + to_string(tl) + " and " + to_string(tr),
                      "line " + std::to_string(l.no));
    th.axioms.push_back(std::move(ax));
  }
  return th;
}

std::string print_theory(const Theory& t) {
  std::ostringstream os;
  os << print_signature(t.sig);
  for (const auto& ax : t.axioms)
    os << "axiom " << ax.name << " : " << print_term(ax.lhs) << " <= " << print_term(ax.rhs) << '\n';
  return os.str();
}

bool ModelReport::is_model() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.holds; });
}

std::string ModelReport::to_string() const {
  std::ostringstream os;
  auto tuple = [&](const std::vector<Nat>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  };
  for (const auto& v : verdicts) {
    os << v.name << ": " << (v.holds ? "holds" : "fails");
    if (v.witness) {
      os << " witness (";
      tuple(v.witness->first);
      os << " ; ";
      tuple(v.witness->second);
      os << ')';
    }
    os << '\n';
  }
  os << (is_model() ? "model" : "not a model") << '\n';
  return os.str();
}

ModelReport check_model(const Theory& t, const Interpretation& i, const EvalOptions& opts) {
  i.validate(t.sig);
  ModelReport rep;
  for (const auto& ax : t.axioms) {
    AxiomVerdict v;
    v.name = ax.name;
    const FinRelation l = eval(ax.lhs, t.sig, i, opts);
    const FinRelation r = eval(ax.rhs, t.sig, i, opts);
    for (std::uint64_t x = 0; x < l.rows() && v.holds; ++x)
      for (std::uint64_t y = 0; y < l.cols(); ++y)
        if (l.test(x, y) && !r.test(x, y)) {
          v.holds = false;
          v.witness = FinRelation::TuplePair{decode_tuple(x, l.carrier(), l.dom_arity()),
                                             decode_tuple(y, l.carrier(), l.cod_arity())};
          break;
        }
    rep.verdicts.push_back(std::move(v));
  }
  return rep;
}

namespace {

std::uint64_t total_bits(const Signature& sig, Nat k, std::uint64_t max_space) {
  std::uint64_t bits = 0;
  for (const auto& [name, ty] : sig.generators()) {
    bits += tuple_count(k, ty.dom + ty.cod);
    if (bits >= 64 || (std::uint64_t{1} << bits) > max_space)
      throw SizeLimitError("search space 2^" + std::to_string(bits) + (bits >= 64 ? "+" : "") +
                           " exceeds bound " + std::to_string(max_space));
  }
  return bits;
}

}  // namespace

std::uint64_t search_space(const Signature& sig, Nat k, const EnumerateOptions& opts) {
  return std::uint64_t{1} << total_bits(sig, k, opts.max_space);
}

Interpretation assignment_at(const Signature& sig, Nat k, std::uint64_t rank) {
  const std::uint64_t bits = total_bits(sig, k, ~std::uint64_t{0});
  Interpretation in;
  in.carrier = k;
  std::uint64_t pos = 0;  // position in the concatenated vector, first = most significant
  for (const auto& [name, ty] : sig.generators()) {
    FinRelation r(k, ty.dom, ty.cod);
    for (std::uint64_t x = 0; x < r.rows(); ++x)
      for (std::uint64_t y = 0; y < r.cols(); ++y, ++pos)
        if ((rank >> (bits - 1 - pos)) & 1u) r.set(x, y);
    in.assignment.emplace(name, std::move(r));
  }
  return in;
}

std::vector<Interpretation> enumerate_models(const Theory& t, Nat k, const EnumerateOptions& opts) {
  if (k == 0) throw ShapeError("carrier must be at least 1");
  const std::uint64_t space = search_space(t.sig, k, opts);
  const int threads = omp_get_max_threads();
  std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(threads));
  std::exception_ptr err;
#pragma omp parallel num_threads(threads)
  {
    auto& mine = found[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
    for (std::uint64_t rank = 0; rank < space; ++rank) {
      try {
        if (check_model(t, assignment_at(t.sig, k, rank), opts.eval).is_model()) mine.push_back(rank);
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
  std::vector<std::uint64_t> ranks;
  for (const auto& v : found) ranks.insert(ranks.end(), v.begin(), v.end());
  std::sort(ranks.begin(), ranks.end());
  std::vector<Interpretation> out;
  for (auto r : ranks) out.push_back(assignment_at(t.sig, k, r));
  return out;
}

namespace reference {

std::vector<Interpretation> enumerate_models(const Theory& t, Nat k, const EnumerateOptions& opts) {
  if (k == 0) throw ShapeError("carrier must be at least 1");
  const std::uint64_t space = search_space(t.sig, k, opts);
  std::vector<Interpretation> out;
  for (std::uint64_t rank = 0; rank < space; ++rank) {
    Interpretation in = assignment_at(t.sig, k, rank);
    if (check_model(t, in, opts.eval).is_model()) out.push_back(std::move(in));
  }
  return out;
}

}  // namespace reference

}  // namespace fob
