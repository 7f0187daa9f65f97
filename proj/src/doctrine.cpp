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

#include "fob/doctrine.hpp"

#include <functional>
#include <sstream>

#include "fob/error.hpp"

namespace fob::doctrine {

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw ShapeError(what);
}

std::string obj_str(FinSetObj x) { return std::to_string(x.size); }

// table of a map given by a function of the domain index
template <class F>
FinSetMor tabulate(FinSetObj dom, FinSetObj cod, F f) {
  FinSetMor m{dom, cod, std::vector<Nat>(dom.size)};
  for (Nat i = 0; i < dom.size; ++i) m.table[i] = f(i);
  return m;
}

}  // namespace

FinSetObj product(FinSetObj x, FinSetObj y) { return {x.size * y.size}; }

std::string FinSetMor::to_string() const {
  std::ostringstream os;
  os << "f: [";
  for (std::size_t i = 0; i < table.size(); ++i) os << (i ? ", " : "") << table[i];
  os << ']';
  return os.str();
}

FinSetMor make_mor(FinSetObj dom, FinSetObj cod, std::vector<Nat> table) {
  need(table.size() == dom.size, "map table has " + std::to_string(table.size()) +
                                     " entries, domain has " + obj_str(dom));
  for (Nat v : table) need(v < cod.size, "map value " + std::to_string(v) + " outside codomain");
  return {dom, cod, std::move(table)};
}

FinSetMor identity(FinSetObj x) {
  return tabulate(x, x, [](Nat i) { return i; });
}

FinSetMor then(const FinSetMor& f, const FinSetMor& g) {
  need(f.cod == g.dom, "composite of maps with mismatched middle object");
  return tabulate(f.dom, g.cod, [&](Nat i) { return g(f(i)); });
}

FinSetMor proj1(FinSetObj x, FinSetObj y) {
  return tabulate(product(x, y), x, [&](Nat i) { return i / y.size; });
}

FinSetMor proj2(FinSetObj x, FinSetObj y) {
  return tabulate(product(x, y), y, [&](Nat i) { return i % y.size; });
}

FinSetMor diagonal(FinSetObj x) {
  return tabulate(x, product(x, x), [&](Nat i) { return i * x.size + i; });
}

FinSetMor terminal(FinSetObj x) {
  return tabulate(x, {1}, [](Nat) { return Nat{0}; });
}

FinSetMor pairing(const FinSetMor& f, const FinSetMor& g) {
  need(f.dom == g.dom, "pairing of maps with different domains");
  return tabulate(f.dom, product(f.cod, g.cod), [&](Nat i) { return f(i) * g.cod.size + g(i); });
}

FinSetMor cross(const FinSetMor& f, const FinSetMor& g) {
  return tabulate(product(f.dom, g.dom), product(f.cod, g.cod), [&](Nat i) {
    return f(i / g.dom.size) * g.cod.size + g(i % g.dom.size);
  });
}

std::vector<FinSetMor> all_maps(FinSetObj x, FinSetObj y) {
  std::vector<FinSetMor> out;
  if (y.size == 0 && x.size > 0) return out;
  std::vector<Nat> t(x.size, 0);
  while (true) {
    out.push_back({x, y, t});
    Nat i = x.size;
    while (i > 0 && ++t[i - 1] == y.size) t[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

Predicate Predicate::from_mask(FinSetObj x, std::uint64_t mask) {
  Predicate p = bottom(x);
  for (Nat i = 0; i < x.size; ++i) p.members[i] = (mask >> i) & 1u;
  return p;
}

Predicate Predicate::from_list(FinSetObj x, const std::vector<Nat>& elems) {
  Predicate p = bottom(x);
  for (Nat e : elems) {
    need(e < x.size, "element " + std::to_string(e) + " outside object of size " + obj_str(x));
    p.members[e] = true;
  }
  return p;
}

std::vector<Nat> Predicate::elements() const {
  std::vector<Nat> out;
  for (Nat i = 0; i < over.size; ++i)
    if (members[i]) out.push_back(i);
  return out;
}

std::string Predicate::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Nat e : elements()) {
    os << (first ? "" : ", ") << e;
    first = false;
  }
  os << '}';
  return os.str();
}

Predicate meet(const Predicate& a, const Predicate& b) {
  need(a.over == b.over, "meet over different objects");
  Predicate r = a;
  for (Nat i = 0; i < a.over.size; ++i) r.members[i] = a.members[i] && b.members[i];
  return r;
}

Predicate join(const Predicate& a, const Predicate& b) {
  need(a.over == b.over, "join over different objects");
  Predicate r = a;
  for (Nat i = 0; i < a.over.size; ++i) r.members[i] = a.members[i] || b.members[i];
  return r;
}

Predicate negate(const Predicate& a) {
  Predicate r = a;
  r.members.flip();
  return r;
}

bool leq(const Predicate& a, const Predicate& b) {
  need(a.over == b.over, "comparison over different objects");
  for (Nat i = 0; i < a.over.size; ++i)
    if (a.members[i] && !b.members[i]) return false;
  return true;
}

std::vector<Predicate> all_predicates(FinSetObj x) {
  need(x.size <= 20, "too many predicates over an object of size " + obj_str(x));
  std::vector<Predicate> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << x.size); ++m)
    out.push_back(Predicate::from_mask(x, m));
  return out;
}

Predicate subst(const FinSetMor& f, const Predicate& a) {
  need(a.over == f.cod, "substitution: predicate is not over the codomain");
  Predicate r = Predicate::bottom(f.dom);
  for (Nat x = 0; x < f.dom.size; ++x) r.members[x] = a.members[f(x)];
  return r;
}

Predicate exists_along(const FinSetMor& f, const Predicate& a) {
  need(a.over == f.dom, "exists: predicate is not over the domain");
  Predicate r = Predicate::bottom(f.cod);
  for (Nat x = 0; x < f.dom.size; ++x)
    if (a.members[x]) r.members[f(x)] = true;
  return r;
}

Predicate exists_along_formula(const FinSetMor& f, const Predicate& a) {
  need(a.over == f.dom, "exists: predicate is not over the domain");
  const FinSetObj x = f.dom, y = f.cod;
  // over Y x X: (f x id)^* on delta_Y needs X x Y, so swap into place
  const FinSetMor swap = tabulate(product(y, x), product(x, y), [&](Nat i) {
    return (i % x.size) * y.size + i / x.size;
  });
  const Predicate eq = subst(then(swap, cross(f, identity(y))), equality_pred(y));
  const Predicate in = subst(proj2(y, x), a);
  Predicate r = Predicate::bottom(y);
  const FinSetMor p = proj1(y, x);
  const Predicate both = meet(eq, in);
  for (Nat i = 0; i < both.over.size; ++i)
    if (both.members[i]) r.members[p(i)] = true;
  return r;
}

Predicate forall_along(const FinSetMor& f, const Predicate& a) {
  return negate(exists_along(f, negate(a)));
}

Predicate equality_pred(FinSetObj x) {
  return exists_along(diagonal(x), Predicate::top(x));
}

// --- Rel(P) ---------------------------------------------------------------------

RelArrow make_arrow(FinSetObj dom, FinSetObj cod, Predicate p) {
  need(p.over == product(dom, cod), "binary predicate is not over the product");
  return {dom, cod, std::move(p)};
}

std::vector<RelArrow> all_arrows(FinSetObj dom, FinSetObj cod) {
  std::vector<RelArrow> out;
  for (auto& p : all_predicates(product(dom, cod))) out.push_back({dom, cod, std::move(p)});
  return out;
}

bool is_functional(const RelArrow& phi) {
  const FinSetObj x = phi.dom, y = phi.cod;
  const FinSetObj t = product(product(x, y), y);
  const Nat ny = y.size;
  const auto m12 = tabulate(t, product(x, y), [&](Nat i) { return i / ny; });
  const auto m13 = tabulate(t, product(x, y), [&](Nat i) { return (i / ny / ny) * ny + i % ny; });
  const auto m23 = tabulate(t, product(y, y), [&](Nat i) { return i % (ny * ny); });
  return leq(meet(subst(m12, phi.pred), subst(m13, phi.pred)), subst(m23, equality_pred(y)));
}

bool is_entire(const RelArrow& phi) {
  return leq(Predicate::top(phi.dom), exists_along(proj1(phi.dom, phi.cod), phi.pred));
}

RelArrow relp_identity(FinSetObj x) { return {x, x, equality_pred(x)}; }

RelArrow relp_compose(const RelArrow& phi, const RelArrow& psi) {
  need(phi.cod == psi.dom, "Rel(P) composite with mismatched middle object");
  const FinSetObj x = phi.dom, y = phi.cod, z = psi.cod;
  const FinSetObj t = product(product(x, y), z);
  const auto pxy = tabulate(t, product(x, y), [&](Nat i) { return i / z.size; });
  const auto pyz = tabulate(t, product(y, z), [&](Nat i) { return i % (y.size * z.size); });
  const auto pxz = tabulate(t, product(x, z), [&](Nat i) {
    return (i / z.size / y.size) * z.size + i % z.size;
  });
  return {x, z, exists_along(pxz, meet(subst(pxy, phi.pred), subst(pyz, psi.pred)))};
}

RelArrow relp_tensor(const RelArrow& phi, const RelArrow& psi) {
  const FinSetObj x = phi.dom, y = phi.cod, z = psi.dom, w = psi.cod;
  const FinSetObj dom = product(x, z), cod = product(y, w);
  const FinSetObj t = product(dom, cod);
  const auto p13 = tabulate(t, product(x, y), [&](Nat i) {
    const Nat a = i / cod.size, b = i % cod.size;
    return (a / z.size) * y.size + b / w.size;
  });
  const auto p24 = tabulate(t, product(z, w), [&](Nat i) {
    const Nat a = i / cod.size, b = i % cod.size;
    return (a % z.size) * w.size + b % w.size;
  });
  return {dom, cod, meet(subst(p13, phi.pred), subst(p24, psi.pred))};
}

RelArrow relp_converse(const RelArrow& phi) {
  const FinSetObj x = phi.dom, y = phi.cod;
  const auto swap = tabulate(product(y, x), product(x, y), [&](Nat i) {
    return (i % x.size) * y.size + i / x.size;
  });
  return {y, x, subst(swap, phi.pred)};
}

RelArrow graph_of(const FinSetMor& f) {
  return {f.dom, f.cod, subst(cross(f, identity(f.cod)), equality_pred(f.cod))};
}

bool is_relp_map(const RelArrow& phi) {
  const RelArrow copy_x = graph_of(diagonal(phi.dom)), copy_y = graph_of(diagonal(phi.cod));
  const RelArrow disc_x = graph_of(terminal(phi.dom)), disc_y = graph_of(terminal(phi.cod));
  return leq(relp_compose(copy_x, relp_tensor(phi, phi)).pred, relp_compose(phi, copy_y).pred) &&
         leq(disc_x.pred, relp_compose(phi, disc_y).pred);
}

FinRelation to_finrel(const RelArrow& phi, Nat k, Nat n, Nat m) {
  FinRelation r(k, n, m);
  need(r.rows() == phi.dom.size && r.cols() == phi.cod.size,
       "Rel(P) arrow " + obj_str(phi.dom) + " -> " + obj_str(phi.cod) +
           " does not match tuple spaces");
  for (Nat x = 0; x < phi.dom.size; ++x)
    for (Nat y = 0; y < phi.cod.size; ++y)
      if (phi.has(x, y)) r.set(x, y);
  return r;
}

RelArrow from_finrel(const FinRelation& r) {
  const FinSetObj x{static_cast<Nat>(r.rows())}, y{static_cast<Nat>(r.cols())};
  RelArrow a{x, y, Predicate::bottom(product(x, y))};
  for (Nat i = 0; i < x.size; ++i)
    for (Nat j = 0; j < y.size; ++j) a.pred.members[i * y.size + j] = r.test(i, j);
  return a;
}

// --- Comprehension and friends ------------------------------------------------------

ComprehensionReport comprehension(const Predicate& a) {
  ComprehensionReport rep;
  const auto elems = a.elements();
  rep.sub = {elems.size()};
  rep.incl = make_mor(rep.sub, a.over, elems);
  rep.top_holds = subst(rep.incl, a) == Predicate::top(rep.sub);

  rep.universal = true;
  for (Nat zs = 0; zs <= 2 && rep.universal; ++zs) {
    const FinSetObj z{zs};
    const auto hs = all_maps(z, rep.sub);
    for (const auto& g : all_maps(z, a.over)) {
      if (!(subst(g, a) == Predicate::top(z))) continue;
      std::size_t through = 0;
      for (const auto& h : hs)
        if (then(h, rep.incl) == g) ++through;
      if (through != 1) {
        rep.universal = false;
        break;
      }
    }
  }

  if (a.over.size <= 12) {
    bool full = true;
    for (const auto& b : all_predicates(a.over)) {
      const auto ib = b.elements();
      bool factors = true;
      for (Nat e : elems) {
        bool hit = false;
        for (Nat v : ib) hit = hit || v == e;
        factors = factors && hit;
      }
      if (factors && !leq(a, b)) full = false;
    }
    rep.full = full;
  }
  return rep;
}

TabulationReport tabulation(const FinRelation& r) {
  need(r.cod_arity() == 0, "tabulation needs a relation into the unit");
  const FinSetObj x{static_cast<Nat>(r.rows())};
  TabulationReport t;
  std::vector<Nat> defined;
  for (Nat i = 0; i < x.size; ++i)
    if (r.test(i, 0)) defined.push_back(i);
  t.sub = {defined.size()};
  t.incl = make_mor(t.sub, x, defined);
  t.graph = graph_of(t.incl);
  const RelArrow dag = relp_converse(t.graph);
  t.section = relp_compose(t.graph, dag) == relp_identity(t.sub);
  t.recovers = relp_compose(dag, graph_of(terminal(t.sub))) == from_finrel(r);
  return t;
}

std::optional<FinSetMor> choice_witness(const RelArrow& phi) {
  std::vector<Nat> table(phi.dom.size);
  for (Nat x = 0; x < phi.dom.size; ++x) {
    Nat y = 0;
    while (y < phi.cod.size && !phi.has(x, y)) ++y;
    if (y == phi.cod.size) return std::nullopt;
    table[x] = y;
  }
  FinSetMor f{phi.dom, phi.cod, std::move(table)};
  if (!leq(Predicate::top(phi.dom), subst(pairing(identity(phi.dom), f), phi.pred)))
    return std::nullopt;
  return f;
}

std::optional<FinSetMor> ruc_witness(const RelArrow& phi) {
  if (!is_functional(phi) || !is_entire(phi)) return std::nullopt;
  return choice_witness(phi);
}

// --- Law sweep -------------------------------------------------------------------

namespace {

std::string fmt(const FinSetMor& f) { return f.to_string(); }

}  // namespace

std::vector<LawTally> check_laws(Nat max_size) {
  std::vector<FinSetObj> objs;
  for (Nat s = 0; s <= max_size; ++s) objs.push_back({s});

  std::vector<LawTally> tallies;
  for (const char* name : {"exists-adjunction", "forall-adjunction", "forall-dual", "exists-formula",
                           "frobenius", "beck-chevalley", "fe-negation"})
    tallies.push_back({name, 0, 0, {}});
  struct Case {
    std::size_t law;
    std::function<void(std::uint64_t&, std::uint64_t&, std::string&)> body;
  };
  std::vector<Case> cases;

  auto fail = [](std::uint64_t& bad, std::string& text, const std::string& what) {
    if (bad++ == 0) text = what;
  };

  for (FinSetObj x : objs)
    for (FinSetObj y : objs)
      for (const FinSetMor& f : all_maps(x, y)) {
        cases.push_back({0, [=](auto& n, auto& bad, auto& text) {
                           for (const auto& a : all_predicates(x))
                             for (const auto& b : all_predicates(y)) {
                               ++n;
                               if (leq(exists_along(f, a), b) != leq(a, subst(f, b)))
                                 fail(bad, text, fmt(f) + " a=" + a.to_string() + " b=" + b.to_string());
                             }
                         }});
        cases.push_back({1, [=](auto& n, auto& bad, auto& text) {
                           for (const auto& a : all_predicates(x))
                             for (const auto& b : all_predicates(y)) {
                               ++n;
                               if (leq(subst(f, b), a) != leq(b, forall_along(f, a)))
                                 fail(bad, text, fmt(f) + " a=" + a.to_string() + " b=" + b.to_string());
                             }
                         }});
        cases.push_back({2, [=](auto& n, auto& bad, auto& text) {
                           for (const auto& a : all_predicates(x)) {
                             ++n;
                             Predicate fib = Predicate::top(y);
                             for (Nat i = 0; i < x.size; ++i)
                               if (!a.has(i)) fib.members[f(i)] = false;
                             if (!(forall_along(f, a) == fib))
                               fail(bad, text, fmt(f) + " a=" + a.to_string());
                           }
                         }});
        cases.push_back({3, [=](auto& n, auto& bad, auto& text) {
                           for (const auto& a : all_predicates(x)) {
                             ++n;
                             if (!(exists_along(f, a) == exists_along_formula(f, a)))
                               fail(bad, text, fmt(f) + " a=" + a.to_string());
                           }
                         }});
        cases.push_back({4, [=](auto& n, auto& bad, auto& text) {
                           for (const auto& a : all_predicates(y))
                             for (const auto& b : all_predicates(x)) {
                               ++n;
                               if (!(exists_along(f, meet(subst(f, a), b)) ==
                                     meet(a, exists_along(f, b))))
                                 fail(bad, text, fmt(f) + " a=" + a.to_string() + " b=" + b.to_string());
                             }
                         }});
        for (FinSetObj z : objs)
          cases.push_back({5, [=](auto& n, auto& bad, auto& text) {
                             const FinSetMor px = proj1(y, z), pxp = proj1(x, z);
                             const FinSetMor fz = cross(f, identity(z));
                             for (const auto& g : all_predicates(product(y, z))) {
                               ++n;
                               if (!(subst(f, exists_along(px, g)) == exists_along(pxp, subst(fz, g))))
                                 fail(bad, text, fmt(f) + " z=" + obj_str(z) + " g=" + g.to_string());
                             }
                           }});
      }

  for (FinSetObj x : objs)
    for (FinSetObj y : objs)
      for (FinSetObj z : objs)
        cases.push_back({6, [=](auto& n, auto& bad, auto& text) {
                           for (const auto& phi : all_arrows(x, y)) {
                             if (!is_functional(phi) || !is_entire(phi)) continue;
                             for (const auto& psi : all_arrows(y, z)) {
                               ++n;
                               RelArrow neg = psi;
                               neg.pred = negate(psi.pred);
                               RelArrow rhs = relp_compose(phi, psi);
                               rhs.pred = negate(rhs.pred);
                               if (!(relp_compose(phi, neg) == rhs))
                                 fail(bad, text, "phi=" + phi.pred.to_string() + " psi=" + psi.pred.to_string());
                             }
                           }
                         }});

  std::vector<std::uint64_t> checks(cases.size()), bads(cases.size());
  std::vector<std::string> texts(cases.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < cases.size(); ++i) cases[i].body(checks[i], bads[i], texts[i]);

  for (std::size_t i = 0; i < cases.size(); ++i) {
    LawTally& t = tallies[cases[i].law];
    t.checked += checks[i];
    if (bads[i] && t.failed == 0) t.first_failure = texts[i];
    t.failed += bads[i];
  }
  return tallies;
}

}  // namespace fob::doctrine
