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

#include "fob/doctrine.hpp"
#include "fob/error.hpp"
#include "support.hpp"

namespace fob::doctrine {
namespace {

using fob::testing::Rng;

const FinSetObj kOne{1}, kTwo{2};

FinSetMor const0(FinSetObj x) { return make_mor(x, kOne, std::vector<Nat>(x.size, 0)); }

// fiber test written out pointwise
Predicate naive_forall(const FinSetMor& f, const Predicate& a) {
  Predicate out = Predicate::top(f.cod);
  for (Nat x = 0; x < f.dom.size; ++x)
    if (!a.has(x)) out.members[f(x)] = false;
  return out;
}

bool naive_functional(const RelArrow& r) {
  for (Nat x = 0; x < r.dom.size; ++x) {
    Nat hits = 0;
    for (Nat y = 0; y < r.cod.size; ++y) hits += r.has(x, y);
    if (hits > 1) return false;
  }
  return true;
}

bool naive_entire(const RelArrow& r) {
  for (Nat x = 0; x < r.dom.size; ++x) {
    bool any = false;
    for (Nat y = 0; y < r.cod.size; ++y) any = any || r.has(x, y);
    if (!any) return false;
  }
  return true;
}

TEST(Maps, Basics) {
  EXPECT_THROW(make_mor(kTwo, kOne, {0, 1}), ShapeError);
  EXPECT_EQ(all_maps(FinSetObj{3}, kTwo).size(), 8u);
  EXPECT_EQ(all_maps(FinSetObj{0}, kTwo).size(), 1u);
  EXPECT_EQ(all_maps(kTwo, FinSetObj{0}).size(), 0u);
  const FinSetMor f = make_mor(kTwo, kTwo, {1, 0});
  EXPECT_EQ(then(f, f), identity(kTwo));
  EXPECT_EQ(pairing(proj1(kTwo, kTwo), proj2(kTwo, kTwo)), identity(product(kTwo, kTwo)));
  EXPECT_EQ(then(diagonal(kTwo), proj2(kTwo, kTwo)), identity(kTwo));
  EXPECT_EQ(f.to_string(), "f: [1, 0]");
  EXPECT_EQ(pair_index(kTwo, FinSetObj{3}, 1, 2), 5u);
}

TEST(Subst, Examples) {
  EXPECT_EQ(subst(const0(kTwo), Predicate::top(kOne)), Predicate::top(kTwo));
  const Predicate a = Predicate::from_list(FinSetObj{3}, {0, 2});
  EXPECT_EQ(subst(identity(FinSetObj{3}), a), a);
  for (Nat n = 0; n <= 3; ++n) {
    const FinSetObj x{n};
    const FinSetMor swap = pairing(proj2(x, x), proj1(x, x));
    EXPECT_EQ(subst(swap, equality_pred(x)), equality_pred(x));
  }
  EXPECT_THROW(subst(identity(kTwo), Predicate::top(kOne)), ShapeError);
}

TEST(Exists, Examples) {
  EXPECT_EQ(exists_along(const0(kTwo), Predicate::from_list(kTwo, {0})), Predicate::top(kOne));
  const Predicate a = Predicate::from_list(FinSetObj{3}, {1});
  EXPECT_EQ(exists_along(identity(FinSetObj{3}), a), a);
}

TEST(Exists, FormulaAgreesWithImage) {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const FinSetObj x{fob::testing::pick(rng, 4)}, y{1 + fob::testing::pick(rng, 3)};
    std::vector<Nat> table;
    for (Nat j = 0; j < x.size; ++j) table.push_back(fob::testing::pick(rng, y.size));
    const FinSetMor f = make_mor(x, y, table);
    const Predicate a = Predicate::from_mask(x, rng());
    EXPECT_EQ(exists_along_formula(f, a), exists_along(f, a));
  }
}

TEST(Forall, Examples) {
  EXPECT_EQ(forall_along(const0(kTwo), Predicate::from_list(kTwo, {0})), Predicate::bottom(kOne));
  const Predicate a = Predicate::from_list(kTwo, {1});
  EXPECT_EQ(forall_along(identity(kTwo), a), a);
  const FinSetMor g = make_mor(kOne, kTwo, {0});
  EXPECT_EQ(forall_along(g, Predicate::from_list(kOne, {0})), Predicate::top(kTwo));
}

TEST(Forall, MatchesFiberCheck) {
  for (Nat n = 0; n <= 3; ++n)
    for (Nat m = 1; m <= 3; ++m)
      for (const auto& f : all_maps(FinSetObj{n}, FinSetObj{m}))
        for (const auto& a : all_predicates(FinSetObj{n}))
          EXPECT_EQ(forall_along(f, a), naive_forall(f, a));
}

TEST(Equality, Examples) {
  EXPECT_EQ(equality_pred(kOne), Predicate::top(product(kOne, kOne)));
  EXPECT_EQ(equality_pred(kTwo).elements(), (std::vector<Nat>{0, 3}));
  EXPECT_EQ(equality_pred(kTwo).to_string(), "{0, 3}");
  for (Nat n = 0; n <= 4; ++n)
    EXPECT_EQ(subst(diagonal(FinSetObj{n}), equality_pred(FinSetObj{n})),
              Predicate::top(FinSetObj{n}));
}

TEST(Adjunctions, Exhaustive) {
  for (Nat n = 0; n <= 3; ++n)
    for (Nat m = 0; m <= 3; ++m)
      for (const auto& f : all_maps(FinSetObj{n}, FinSetObj{m}))
        for (const auto& a : all_predicates(FinSetObj{n}))
          for (const auto& b : all_predicates(FinSetObj{m})) {
            ASSERT_EQ(leq(exists_along(f, a), b), leq(a, subst(f, b)));
            ASSERT_EQ(leq(subst(f, b), a), leq(b, forall_along(f, a)));
            ASSERT_EQ(exists_along(f, meet(subst(f, b), a)), meet(b, exists_along(f, a)));
          }
}

TEST(BeckChevalley, ProjectionSquares) {
  for (Nat xs = 0; xs <= 2; ++xs)
    for (Nat ys = 0; ys <= 2; ++ys)
      for (Nat zs = 1; zs <= 2; ++zs) {
        const FinSetObj x{xs}, y{ys}, z{zs};
        for (const auto& f : all_maps(x, y))
          for (const auto& g : all_predicates(product(y, z)))
            EXPECT_EQ(subst(f, exists_along(proj1(y, z), g)),
                      exists_along(proj1(x, z), subst(cross(f, identity(z)), g)));
      }
}

TEST(RelArrows, FunctionalEntireExamples) {
  const RelArrow id = graph_of(identity(kTwo));
  EXPECT_TRUE(is_functional(id));
  EXPECT_TRUE(is_entire(id));
  const RelArrow full = make_arrow(kTwo, kTwo, Predicate::top(product(kTwo, kTwo)));
  EXPECT_TRUE(is_entire(full));
  EXPECT_FALSE(is_functional(full));
  const RelArrow none = make_arrow(kTwo, kTwo, Predicate::bottom(product(kTwo, kTwo)));
  EXPECT_TRUE(is_functional(none));
  EXPECT_FALSE(is_entire(none));
}

TEST(RelArrows, LiteralConditionsMatchPointwise) {
  for (Nat n = 0; n <= 3; ++n)
    for (Nat m = 0; m <= 3; ++m) {
      if (n * m > 9) continue;
      for (const auto& r : all_arrows(FinSetObj{n}, FinSetObj{m})) {
        ASSERT_EQ(is_functional(r), naive_functional(r));
        ASSERT_EQ(is_entire(r), naive_entire(r));
      }
    }
}

TEST(RelArrows, GraphExamples) {
  EXPECT_EQ(graph_of(identity(FinSetObj{3})).pred, equality_pred(FinSetObj{3}));
  const RelArrow g = graph_of(make_mor(kTwo, kTwo, {0, 0}));
  EXPECT_EQ(g.pred.elements(), (std::vector<Nat>{0, 2}));
  for (Nat n = 0; n <= 3; ++n)
    for (Nat m = 0; m <= 3; ++m)
      for (const auto& f : all_maps(FinSetObj{n}, FinSetObj{m})) {
        const RelArrow r = graph_of(f);
        EXPECT_TRUE(is_functional(r) && is_entire(r));
        EXPECT_TRUE(is_relp_map(r));
      }
}

TEST(RelArrows, MatchFinrel) {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    const Nat k = 1 + fob::testing::pick(rng, 3);
    const FinRelation a = fob::testing::random_relation(rng, k, 1, 1);
    const FinRelation b = fob::testing::random_relation(rng, k, 1, 1);
    const FinRelation c = fob::testing::random_relation(rng, k, 1, 0);
    EXPECT_EQ(to_finrel(relp_compose(from_finrel(a), from_finrel(b)), k, 1, 1), compose_white(a, b));
    EXPECT_EQ(to_finrel(relp_tensor(from_finrel(a), from_finrel(c)), k, 2, 1), tensor_white(a, c));
    EXPECT_EQ(to_finrel(relp_converse(from_finrel(a)), k, 1, 1), converse(a));
    EXPECT_EQ(relp_compose(from_finrel(a), relp_identity(FinSetObj{k})), from_finrel(a));
    EXPECT_EQ(to_finrel(from_finrel(a), k, 1, 1), a);
  }
}

TEST(RelArrows, MapsAreFunctionalEntire) {
  for (Nat n = 0; n <= 3; ++n)
    for (Nat m = 0; m <= 3; ++m) {
      if (n * m > 9) continue;
      for (const auto& r : all_arrows(FinSetObj{n}, FinSetObj{m}))
        ASSERT_EQ(is_relp_map(r), naive_functional(r) && naive_entire(r));
    }
}

TEST(RelArrows, FeNegation) {
  for (Nat n = 0; n <= 2; ++n)
    for (Nat m = 1; m <= 2; ++m)
      for (Nat p = 0; p <= 2; ++p)
        for (const auto& f : all_maps(FinSetObj{n}, FinSetObj{m})) {
          const RelArrow phi = graph_of(f);
          for (const auto& psi : all_arrows(FinSetObj{m}, FinSetObj{p})) {
            const RelArrow neg{psi.dom, psi.cod, negate(psi.pred)};
            EXPECT_EQ(relp_compose(phi, neg).pred, negate(relp_compose(phi, psi).pred));
          }
        }
}

TEST(Comprehension, Examples) {
  const ComprehensionReport one = comprehension(Predicate::from_list(kTwo, {1}));
  EXPECT_EQ(one.sub, kOne);
  EXPECT_EQ(one.incl, make_mor(kOne, kTwo, {1}));
  EXPECT_TRUE(one.top_holds && one.universal);
  EXPECT_EQ(one.full, std::optional<bool>(true));
  const ComprehensionReport none = comprehension(Predicate::bottom(FinSetObj{3}));
  EXPECT_EQ(none.sub.size, 0u);
  EXPECT_TRUE(none.universal);
  const ComprehensionReport all = comprehension(Predicate::top(FinSetObj{3}));
  EXPECT_EQ(all.incl, identity(FinSetObj{3}));
}

TEST(Comprehension, EveryPredicate) {
  for (Nat n = 0; n <= 3; ++n)
    for (const auto& a : all_predicates(FinSetObj{n})) {
      const ComprehensionReport r = comprehension(a);
      EXPECT_EQ(r.sub.size, a.elements().size());
      EXPECT_TRUE(r.top_holds && r.universal);
      EXPECT_EQ(r.full, std::optional<bool>(true));
      for (Nat i = 0; i < r.sub.size; ++i) EXPECT_TRUE(a.has(r.incl(i)));
    }
}

TEST(Comprehension, DiagonalsAreComprehensive) {
  for (Nat n = 0; n <= 3; ++n) {
    const FinSetObj x{n};
    const ComprehensionReport r = comprehension(equality_pred(x));
    EXPECT_EQ(r.sub, x);
    EXPECT_EQ(r.incl, diagonal(x));
  }
}

TEST(Tabulation, Examples) {
  const TabulationReport full = tabulation(FinRelation::full(2, 1, 0));
  EXPECT_EQ(full.sub, kTwo);
  EXPECT_EQ(full.graph, graph_of(identity(kTwo)));
  const TabulationReport one = tabulation(FinRelation::from_pairs(2, 1, 0, {{{1}, {}}}));
  EXPECT_EQ(one.sub, kOne);
  EXPECT_EQ(one.incl, make_mor(kOne, kTwo, {1}));
  EXPECT_TRUE(one.section && one.recovers);
  EXPECT_EQ(tabulation(FinRelation(2, 1, 0)).sub.size, 0u);
  EXPECT_THROW(tabulation(FinRelation(2, 1, 1)), ShapeError);
}

TEST(Tabulation, MatchesComprehension) {
  for (Nat k = 1; k <= 4; ++k)
    for (Nat n = 0; n <= 2; ++n) {
      const std::uint64_t size = fob::tuple_count(k, n);
      if (size > 4) continue;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
        FinRelation r(k, n, 0);
        for (std::uint64_t x = 0; x < size; ++x)
          if ((mask >> x) & 1u) r.set(x, 0);
        const TabulationReport t = tabulation(r);
        const ComprehensionReport c =
            comprehension(Predicate::from_mask(FinSetObj{static_cast<Nat>(size)}, mask));
        EXPECT_EQ(t.incl, c.incl);
        EXPECT_TRUE(t.section && t.recovers);
      }
    }
}

TEST(Choice, Examples) {
  const FinSetMor f = make_mor(kTwo, FinSetObj{3}, {2, 0});
  EXPECT_EQ(ruc_witness(graph_of(f)), std::optional<FinSetMor>(f));
  const RelArrow full = make_arrow(kTwo, kTwo, Predicate::top(product(kTwo, kTwo)));
  EXPECT_EQ(choice_witness(full), std::optional<FinSetMor>(make_mor(kTwo, kTwo, {0, 0})));
  EXPECT_FALSE(ruc_witness(full).has_value());
  const RelArrow partial = make_arrow(kTwo, kTwo, Predicate::from_list(product(kTwo, kTwo), {1}));
  EXPECT_FALSE(ruc_witness(partial).has_value());
  EXPECT_FALSE(choice_witness(partial).has_value());
}

TEST(Choice, UniqueChoiceEverywhere) {
  for (Nat n = 0; n <= 3; ++n)
    for (Nat m = 0; m <= 3; ++m) {
      if (n * m > 9) continue;
      for (const auto& r : all_arrows(FinSetObj{n}, FinSetObj{m})) {
        const auto w = ruc_witness(r);
        ASSERT_EQ(w.has_value(), naive_functional(r) && naive_entire(r));
        if (w) ASSERT_EQ(graph_of(*w), r);
        const auto c = choice_witness(r);
        ASSERT_EQ(c.has_value(), naive_entire(r));
        if (c)
          for (Nat x = 0; x < n; ++x) ASSERT_TRUE(r.has(x, (*c)(x)));
      }
    }
}

TEST(Laws, SweepClean) {
  for (const LawTally& t : check_laws(2)) {
    EXPECT_GT(t.checked, 0u) << t.name;
    EXPECT_EQ(t.failed, 0u) << t.name << ": " << t.first_failure;
  }
}

}  // namespace
}  // namespace fob::doctrine
