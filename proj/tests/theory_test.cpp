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
#include "fob/theory.hpp"
#include "support.hpp"

namespace fob {
namespace {

using testing::Rng;

Theory order() { return parse_theory(testing::read_file(testing::data_path("theories/order.thy"))); }

FinRelation unary(Nat k, const std::vector<std::pair<Nat, Nat>>& ps) {
  FinRelation r(k, 1, 1);
  for (auto [x, y] : ps) r.set(x, y);
  return r;
}

// reflexive, transitive, antisymmetric and total, pointwise
bool is_total_order(const FinRelation& r) {
  const Nat k = r.carrier();
  for (Nat x = 0; x < k; ++x) {
    if (!r.test(x, x)) return false;
    for (Nat y = 0; y < k; ++y) {
      if (x != y && r.test(x, y) && r.test(y, x)) return false;
      if (!r.test(x, y) && !r.test(y, x)) return false;
      for (Nat z = 0; z < k; ++z)
        if (r.test(x, y) && r.test(y, z) && !r.test(x, z)) return false;
    }
  }
  return true;
}

Interpretation with_r(FinRelation r) {
  Interpretation in;
  in.carrier = r.carrier();
  in.assignment.emplace("R", std::move(r));
  return in;
}

TEST(Parse, OrderTheory) {
  const Theory t = order();
  ASSERT_EQ(t.axioms.size(), 4u);
  EXPECT_EQ(t.axioms[0].name, "refl");
  EXPECT_EQ(t.sig.type_of("R"), (Type{1, 1}));
  const Theory again = parse_theory(print_theory(t));
  ASSERT_EQ(again.axioms.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(again.axioms[i].lhs, t.axioms[i].lhs);
    EXPECT_EQ(again.axioms[i].rhs, t.axioms[i].rhs);
  }
}

TEST(Parse, Rejections) {
  EXPECT_THROW(parse_theory("sig R : 1 -> 1\naxiom a : (gen R) <= (idw 2)\n"), TypeError);
  EXPECT_THROW(parse_theory("sig R : 1 -> 1\naxiom a : (gen R)\n"), ParseError);
  EXPECT_THROW(parse_theory("sig R : 1 -> 1\naxiom a : (gen R) <= (gen R)\naxiom a : (gen R) <= "
                            "(gen R)\n"),
               ParseError);
  EXPECT_THROW(parse_theory("axiom a : (gen Q) <= (gen Q)\n"), UnknownGenerator);
}

TEST(CheckModel, Examples) {
  const Theory t = order();
  const ModelReport ok = check_model(t, with_r(unary(2, {{0, 0}, {1, 1}, {0, 1}})));
  EXPECT_TRUE(ok.is_model()) << ok.to_string();
  const ModelReport bad = check_model(t, with_r(FinRelation(2, 1, 1)));
  EXPECT_FALSE(bad.is_model());
  EXPECT_FALSE(bad.verdicts[0].holds);
  ASSERT_TRUE(bad.verdicts[0].witness.has_value());
  EXPECT_EQ(bad.verdicts[0].witness->first, bad.verdicts[0].witness->second);
  Theory empty;
  empty.sig = t.sig;
  EXPECT_TRUE(check_model(empty, with_r(unary(2, {{1, 0}}))).is_model());
}

TEST(CheckModel, AgreesWithPointwiseOrderTest) {
  const Theory t = order();
  for (Nat k = 1; k <= 3; ++k)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k * k)); ++mask) {
      FinRelation r(k, 1, 1);
      for (Nat i = 0; i < k * k; ++i)
        if ((mask >> i) & 1u) r.set(i / k, i % k);
      EXPECT_EQ(check_model(t, with_r(r)).is_model(), is_total_order(r));
    }
}

TEST(Enumerate, OrderCountsAreFactorials) {
  const Theory t = order();
  const std::uint64_t fact[] = {1, 1, 2, 6};
  for (Nat k = 1; k <= 3; ++k) {
    const auto models = enumerate_models(t, k);
    EXPECT_EQ(models.size(), fact[k]);
    for (const auto& m : models) EXPECT_TRUE(is_total_order(m.assignment.at("R")));
  }
}

// a plain filter over every rank, serial, as the oracle
TEST(Enumerate, MatchesNaiveFilter) {
  const Theory g = parse_theory(
      "sig E : 1 -> 1\nsig P : 1 -> 0\naxiom sym : (dag (gen E)) <= (gen E)\n"
      "axiom closed : (seqw (gen E) (gen P)) <= (gen P)\n");
  for (Nat k = 1; k <= 2; ++k) {
    const std::uint64_t space = search_space(g.sig, k);
    std::vector<Interpretation> naive;
    for (std::uint64_t rank = 0; rank < space; ++rank) {
      Interpretation in = assignment_at(g.sig, k, rank);
      if (check_model(g, in).is_model()) naive.push_back(std::move(in));
    }
    const auto fast = enumerate_models(g, k);
    const auto serial = reference::enumerate_models(g, k);
    ASSERT_EQ(fast.size(), naive.size());
    ASSERT_EQ(serial.size(), naive.size());
    for (std::size_t i = 0; i < naive.size(); ++i) {
      EXPECT_EQ(fast[i].assignment, naive[i].assignment);
      EXPECT_EQ(serial[i].assignment, naive[i].assignment);
    }
  }
}

TEST(Enumerate, RankOrderIsLexicographic) {
  Signature sig;
  sig.add("R", 1, 1);
  const Interpretation first = assignment_at(sig, 2, 0);
  EXPECT_TRUE(first.assignment.at("R").empty());
  const Interpretation high = assignment_at(sig, 2, 8);
  EXPECT_EQ(high.assignment.at("R"), unary(2, {{0, 0}}));
  EXPECT_EQ(assignment_at(sig, 2, 1).assignment.at("R"), unary(2, {{1, 1}}));
}

TEST(Enumerate, Limits) {
  const Theory t = order();
  EXPECT_EQ(search_space(t.sig, 3), 512u);
  EnumerateOptions small;
  small.max_space = 100;
  EXPECT_THROW(enumerate_models(t, 3, small), SizeLimitError);
  try {
    search_space(t.sig, 5);
    FAIL() << "no error";
  } catch (const SizeLimitError& e) {
    EXPECT_NE(std::string(e.what()).find("2^25"), std::string::npos);
  }
  EXPECT_THROW(enumerate_models(t, 0), Error);
}

}  // namespace
}  // namespace fob
