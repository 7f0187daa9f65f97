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

#include <gtest/gtest.h>

#include "fob/error.hpp"
#include "fob/finrel.hpp"
#include "support.hpp"

namespace fob {
namespace {

using testing::Rng;
using P = FinRelation::TuplePair;

FinRelation rel(Nat k, Nat n, Nat m, std::vector<P> pairs) {
  return FinRelation::from_pairs(k, n, m, pairs);
}

FinRelation unary(Nat k, std::vector<std::pair<Nat, Nat>> pairs) {
  std::vector<P> ps;
  for (auto [x, y] : pairs) ps.push_back({{x}, {y}});
  return rel(k, 1, 1, ps);
}

TEST(Codec, MostSignificantFirst) {
  EXPECT_EQ(encode_tuple(std::vector<Nat>{1, 0}, 2), 2u);
  EXPECT_EQ(decode_tuple(5, 3, 2), (std::vector<Nat>{1, 2}));
  EXPECT_EQ(decode_tuple(0, 4, 0), std::vector<Nat>{});
}

TEST(Compose, WhiteExamples) {
  EXPECT_EQ(compose_white(unary(2, {{0, 1}}), unary(2, {{1, 0}})), unary(2, {{0, 0}}));
  EXPECT_TRUE(compose_white(unary(2, {{0, 0}}), unary(2, {{1, 1}})).empty());
}

TEST(Compose, BlackExamples) {
  EXPECT_EQ(compose_black(unary(2, {{0, 0}, {0, 1}}), FinRelation(2, 1, 1)),
            unary(2, {{0, 0}, {0, 1}}));
  Rng rng(3);
  for (Nat k = 1; k <= 3; ++k) {
    const FinRelation a = testing::random_relation(rng, k, 1, 2);
    EXPECT_EQ(compose_black(identity_rel(Color::Black, k, 1), a), a);
    EXPECT_EQ(compose_white(identity_rel(Color::White, k, 1), a), a);
  }
}

TEST(Compose, BlackIdentityIsInequality) {
  const FinRelation idb = constant_rel(Kind::IdB, 3);
  for (Nat x = 0; x < 3; ++x)
    for (Nat y = 0; y < 3; ++y) EXPECT_EQ(idb.test(x, y), x != y);
}

TEST(Compose, DeMorgan) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Nat k = 1 + testing::pick(rng, 3);
    const FinRelation a = testing::random_relation(rng, k, 1, 2);
    const FinRelation b = testing::random_relation(rng, k, 2, 1);
    EXPECT_EQ(compose_black(a, b),
              testing::naive_complement(
                  compose_white(testing::naive_complement(a), testing::naive_complement(b))));
  }
}

TEST(Compose, MatchesEnumeration) {
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const Nat k = 1 + testing::pick(rng, 3);
    const Nat n = testing::pick(rng, 3), m = testing::pick(rng, 3), p = testing::pick(rng, 3);
    const FinRelation a = testing::random_relation(rng, k, n, m);
    const FinRelation b = testing::random_relation(rng, k, m, p);
    EXPECT_EQ(compose_white(a, b), testing::naive_compose(a, b, false));
    EXPECT_EQ(compose_black(a, b), testing::naive_compose(a, b, true));
  }
}

TEST(Compose, ShapeErrors) {
  EXPECT_THROW(compose_white(FinRelation(2, 1, 1), FinRelation(2, 2, 1)), ShapeError);
  EXPECT_THROW(compose_white(FinRelation(2, 1, 1), FinRelation(3, 1, 1)), ShapeError);
}

TEST(Tensor, Examples) {
  EXPECT_EQ(tensor_white(identity_rel(Color::White, 2, 1), identity_rel(Color::White, 2, 1)),
            identity_rel(Color::White, 2, 2));
  EXPECT_EQ(tensor_black(FinRelation(2, 1, 0), FinRelation::full(2, 1, 0)),
            FinRelation::full(2, 2, 0));
  Rng rng(8);
  const FinRelation unit = rel(3, 0, 0, {{{}, {}}});
  const FinRelation a = testing::random_relation(rng, 3, 1, 2);
  EXPECT_EQ(tensor_white(a, unit), a);
  EXPECT_EQ(tensor_white(unit, a), a);
}

// pointwise definition with tuple concatenation
TEST(Tensor, MatchesDefinition) {
  Rng rng(9);
  for (int i = 0; i < 60; ++i) {
    const Nat k = 1 + testing::pick(rng, 3);
    const Nat n1 = testing::pick(rng, 2), m1 = testing::pick(rng, 3);
    const Nat n2 = testing::pick(rng, 3), m2 = testing::pick(rng, 2);
    const FinRelation a = testing::random_relation(rng, k, n1, m1);
    const FinRelation c = testing::random_relation(rng, k, n2, m2);
    const FinRelation w = tensor_white(a, c), b = tensor_black(a, c);
    for (std::uint64_t x = 0; x < w.rows(); ++x)
      for (std::uint64_t y = 0; y < w.cols(); ++y) {
        const auto xs = decode_tuple(x, k, n1 + n2), ys = decode_tuple(y, k, m1 + m2);
        const std::vector<Nat> x1(xs.begin(), xs.begin() + n1), x2(xs.begin() + n1, xs.end());
        const std::vector<Nat> y1(ys.begin(), ys.begin() + m1), y2(ys.begin() + m1, ys.end());
        const bool l = testing::naive_has(a, x1, y1), r = testing::naive_has(c, x2, y2);
        ASSERT_EQ(w.test(x, y), l && r);
        ASSERT_EQ(b.test(x, y), l || r);
      }
  }
}

TEST(Constants, Examples) {
  for (Nat k = 0; k <= 3; ++k) EXPECT_TRUE(constant_rel(Kind::DiscardB, k).empty());
  EXPECT_TRUE(constant_rel(Kind::CopyB, 1).empty());
  const FinRelation sym = constant_rel(Kind::SymW, 2);
  for (Nat a = 0; a < 2; ++a)
    for (Nat b = 0; b < 2; ++b)
      for (Nat c = 0; c < 2; ++c)
        for (Nat d = 0; d < 2; ++d)
          EXPECT_EQ(testing::naive_has(sym, {a, b}, {c, d}), a == d && b == c);
}

TEST(Constants, CopyFamily) {
  const Nat k = 3;
  const FinRelation cw = constant_rel(Kind::CopyW, k), cb = constant_rel(Kind::CopyB, k);
  for (Nat x = 0; x < k; ++x)
    for (Nat y = 0; y < k; ++y)
      for (Nat z = 0; z < k; ++z) {
        EXPECT_EQ(testing::naive_has(cw, {x}, {y, z}), x == y && x == z);
        EXPECT_EQ(testing::naive_has(cb, {x}, {y, z}), x != y || x != z);
      }
  EXPECT_EQ(constant_rel(Kind::CocopyW, k), testing::naive_converse(cw));
  EXPECT_EQ(constant_rel(Kind::DiscardW, k), FinRelation::full(k, 1, 0));
  EXPECT_EQ(constant_rel(Kind::CodiscardW, k), FinRelation::full(k, 0, 1));
  EXPECT_TRUE(constant_rel(Kind::CodiscardB, k).empty());
}

TEST(Constants, EmptyCarrier) {
  const FinRelation d = constant_rel(Kind::DiscardW, 0);
  EXPECT_EQ(d.rows(), 0u);
  EXPECT_EQ(d.cols(), 1u);
  EXPECT_EQ(FinRelation::full(0, 0, 0).count(), 1u);
}

TEST(Basic, ComplementConverseInclusion) {
  Rng rng(10);
  const FinRelation a = testing::random_relation(rng, 3, 2, 1);
  EXPECT_EQ(complement(complement(a)), a);
  EXPECT_EQ(complement(a), testing::naive_complement(a));
  EXPECT_EQ(converse(unary(2, {{0, 1}})), unary(2, {{1, 0}}));
  EXPECT_EQ(converse(a), testing::naive_converse(a));
  EXPECT_TRUE(included(FinRelation(3, 2, 1), a));
  EXPECT_TRUE(included(a, a));
  EXPECT_EQ(intersect(a, complement(a)).count(), 0u);
  EXPECT_EQ(unite(a, complement(a)), FinRelation::full(3, 2, 1));
}

TEST(SizeGuard, RejectsHugeRelations) {
  EXPECT_THROW(FinRelation(4, 8, 8), SizeLimitError);
  EXPECT_THROW(check_relation_size(2, 20, 11), SizeLimitError);
  EXPECT_NO_THROW(check_relation_size(2, 15, 15));
}

TEST(Maps, Examples) {
  EXPECT_TRUE(is_map(identity_rel(Color::White, 3, 1)));
  EXPECT_FALSE(is_map(unary(2, {{0, 0}, {0, 1}})));
  for (const auto& f : testing::all_function_graphs(3)) EXPECT_TRUE(is_map(f));
}

// both semantic inequalities against the pointwise function test, exhaustively
TEST(Maps, AgreesWithFunctionTest) {
  for (Nat k = 1; k <= 3; ++k) {
    const std::uint64_t total = std::uint64_t{1} << (k * k);
    for (std::uint64_t m = 0; m < total; ++m) {
      FinRelation r(k, 1, 1);
      bool function = true;
      for (Nat x = 0; x < k; ++x) {
        Nat hits = 0;
        for (Nat y = 0; y < k; ++y)
          if ((m >> (x * k + y)) & 1u) {
            r.set(x, y);
            ++hits;
          }
        function = function && hits == 1;
      }
      EXPECT_EQ(is_map(r), function);
      EXPECT_EQ(is_function(r), function);
    }
  }
}

TEST(LinearAdjoint, Examples) {
  EXPECT_EQ(linear_adjoint(identity_rel(Color::Black, 3, 1)), identity_rel(Color::White, 3, 1));
  EXPECT_EQ(linear_adjoint(identity_rel(Color::White, 3, 1)), identity_rel(Color::Black, 3, 1));
  EXPECT_TRUE(linear_adjoint(FinRelation::full(2, 1, 2)).empty());
}

TEST(LinearAdjoint, AdjunctionLaws) {
  Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    const Nat k = 1 + testing::pick(rng, 3);
    const Nat n = testing::pick(rng, 3), m = testing::pick(rng, 3);
    const FinRelation a = testing::random_relation(rng, k, n, m);
    const FinRelation adj = linear_adjoint(a);
    EXPECT_EQ(adj, testing::naive_converse(testing::naive_complement(a)));
    EXPECT_TRUE(included(identity_rel(Color::White, k, n), compose_black(a, adj)));
    EXPECT_TRUE(included(compose_white(adj, a), identity_rel(Color::Black, k, m)));
    EXPECT_TRUE(included(identity_rel(Color::White, k, m), compose_black(adj, a)));
    EXPECT_TRUE(included(compose_white(a, adj), identity_rel(Color::Black, k, n)));
  }
}

TEST(Reference, ParallelKernelsAgree) {
  Rng rng(16);
  for (int i = 0; i < 120; ++i) {
    const Nat k = 1 + testing::pick(rng, 4);
    const Nat n = testing::pick(rng, 3), m = testing::pick(rng, 4), p = testing::pick(rng, 3);
    const FinRelation a = testing::random_relation(rng, k, n, m);
    const FinRelation b = testing::random_relation(rng, k, m, p);
    const FinRelation c = testing::random_relation(rng, k, p, n);
    EXPECT_EQ(compose_white(a, b), reference::compose_white(a, b));
    EXPECT_EQ(compose_black(a, b), reference::compose_black(a, b));
    EXPECT_EQ(tensor_white(a, c), reference::tensor_white(a, c));
    EXPECT_EQ(tensor_black(a, c), reference::tensor_black(a, c));
    EXPECT_EQ(complement(a), reference::complement(a));
    EXPECT_EQ(converse(a), reference::converse(a));
    const FinRelation a2 = testing::random_relation(rng, k, n, m);
    EXPECT_EQ(included(a, a2), reference::included(a, a2));
    EXPECT_EQ(included(intersect(a, a2), a), reference::included(intersect(a, a2), a));
  }
}

// rows wider than a word exercise the shifted copies in the tensor kernel
TEST(Reference, WideRows) {
  Rng rng(17);
  for (int i = 0; i < 6; ++i) {
    const FinRelation a = testing::random_relation(rng, 3, 1, 3);
    const FinRelation c = testing::random_relation(rng, 3, 1, 2);
    EXPECT_EQ(tensor_white(a, c), reference::tensor_white(a, c));
    EXPECT_EQ(tensor_black(a, c), reference::tensor_black(a, c));
    const FinRelation b = testing::random_relation(rng, 3, 3, 4);
    EXPECT_EQ(compose_white(a, b), reference::compose_white(a, b));
    EXPECT_EQ(compose_black(a, b), reference::compose_black(a, b));
  }
}

TEST(Eval, Examples) {
  Signature sig;
  sig.add("R", 1, 1);
  Interpretation in;
  in.carrier = 2;
  in.assignment.emplace("R", unary(2, {{0, 1}}));
  EXPECT_EQ(eval(Term::id_w(1), sig, in), identity_rel(Color::White, 2, 1));
  EXPECT_EQ(eval(Term::seq_w(Term::gen("R"), Term::constant(Kind::DiscardW)), sig, in),
            rel(2, 1, 0, {{{0}, {}}}));
  EXPECT_EQ(eval(Term::gen_op("R"), sig, in),
            testing::naive_converse(testing::naive_complement(unary(2, {{0, 1}}))));
}

TEST(Eval, NegationIsComplement) {
  Rng rng(18);
  const Signature sig = testing::random_term_signature();
  for (int i = 0; i < 100; ++i) {
    const Term t = testing::random_term(rng, 4).t;
    const Interpretation in = testing::random_interp(rng, sig, 2);
    EXPECT_EQ(eval(Term::neg(t), sig, in), testing::naive_complement(eval(t, sig, in)))
        << print_term(t);
  }
}

TEST(Eval, SizeLimitAndMissingGenerator) {
  Signature sig;
  sig.add("R", 1, 1);
  Interpretation in;
  in.carrier = 2;
  EXPECT_THROW(eval(Term::gen("R"), sig, in), Error);
  in.assignment.emplace("R", FinRelation(2, 1, 1));
  EXPECT_THROW(eval(Term::id_w(6), sig, in, EvalOptions{1000}), SizeLimitError);
}

TEST(Interp, ParsePrint) {
  Signature sig;
  sig.add("R", 1, 1);
  sig.add("P", 2, 0);
  const std::string text = "carrier 3\nrel R 1 1 { (0 ; 1) (2 ; 2) }\nrel P 2 0 { (1 0 ; ) }\n";
  const Interpretation in = parse_interpretation(text, sig);
  EXPECT_EQ(in.carrier, 3u);
  EXPECT_EQ(in.assignment.at("R"), unary(3, {{0, 1}, {2, 2}}));
  EXPECT_EQ(in.assignment.at("P").count(), 1u);
  const Interpretation again = parse_interpretation(print_interpretation(in, sig), sig);
  EXPECT_EQ(again.assignment, in.assignment);
}

TEST(Interp, Rejections) {
  Signature sig;
  sig.add("R", 1, 1);
  EXPECT_THROW(parse_interpretation("carrier 2\nrel R 1 1 { (0 ; 2) }\n", sig), Error);
  EXPECT_THROW(parse_interpretation("carrier 2\nrel R 2 1 { }\n", sig), Error);
  EXPECT_THROW(parse_interpretation("carrier 2\n", sig), Error);
  EXPECT_THROW(parse_interpretation("carrier 0\nrel R 1 1 { }\n", sig), Error);
}

}  // namespace
}  // namespace fob
