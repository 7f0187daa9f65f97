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

#include "fob/verify.hpp"

#include <random>
#include <sstream>

namespace fob {

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& a : axioms) n += a.failed;
  return n;
}

namespace {

std::string describe(const Axiom& ax, const ObjBinding& objs, const AxiomInstance& inst,
                     const Interpretation& in, const std::string& why) {
  std::ostringstream os;
  os << why << ";";
  for (const auto& [x, v] : objs) os << ' ' << x << '=' << v;
  for (const auto& [name, ty] : inst.sig.generators())
    os << ' ' << name << '=' << print_relation(in.assignment.at(name));
  os << "; lhs " << print_term(inst.lhs) << (ax.kind == AxiomKind::Le ? " <= " : " = ")
     << print_term(inst.rhs);
  return os.str();
}

AxiomTally verify_one(const Axiom& ax, std::size_t index, const VerifyOptions& opts) {
  AxiomTally tally{ax.name, ax.family, 0, 0, std::nullopt};
  for (std::size_t trial = 0; trial < opts.trials; ++trial) {
    std::seed_seq ss{opts.seed, static_cast<std::uint64_t>(index),
                     static_cast<std::uint64_t>(trial), static_cast<std::uint64_t>(opts.k)};
    std::mt19937_64 rng(ss);
    ObjBinding objs;
    for (const auto& x : ax.object_vars)
      objs[x] = static_cast<Nat>(rng() % (opts.max_object + 1));
    AxiomInstance inst = instantiate_axiom(ax, objs);
    Interpretation in = random_interpretation(inst.sig, opts.k, rng);
    std::string why;
    try {
      const Type lt = typecheck(inst.lhs, inst.sig);
      const Type rt = typecheck(inst.rhs, inst.sig);
      if (lt != rt) {
        why = "ill-typed instance " + to_string(lt) + " vs " + to_string(rt);
      } else {
        const EvalOptions eo{opts.max_bits};
        const FinRelation l = eval_primitive(inst.lhs, inst.sig, in, eo);
        const FinRelation r = eval_primitive(inst.rhs, inst.sig, in, eo);
        const bool ok = ax.kind == AxiomKind::Le ? included(l, r) : equal(l, r);
        if (!ok) why = ax.kind == AxiomKind::Le ? "lhs not included in rhs" : "sides differ";
      }
    } catch (const Error& e) {
      why = e.what();
    }
    if (why.empty()) {
      ++tally.passed;
    } else {
      ++tally.failed;
      if (!tally.counterexample) tally.counterexample = describe(ax, objs, inst, in, why);
    }
  }
  return tally;
}

}  // namespace

VerifyReport verify_axioms(const VerifyOptions& opts, const std::vector<Axiom>& axioms) {
  if (opts.k > 4) throw ShapeError("verify-axioms supports carriers up to 4");
  VerifyReport rep;
  rep.options = opts;
  rep.axioms.resize(axioms.size());
  const long long n = static_cast<long long>(axioms.size());
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i)
    rep.axioms[static_cast<std::size_t>(i)] =
        verify_one(axioms[static_cast<std::size_t>(i)], static_cast<std::size_t>(i), opts);
  return rep;
}

VerifyReport verify_axioms(const VerifyOptions& opts) { return verify_axioms(opts, axiom_db()); }

}  // namespace fob
