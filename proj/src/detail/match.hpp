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

#pragma once

#include <utility>
#include <vector>

#include "fob/rewrite.hpp"

namespace fob::detail {

// Collects bindings and linear constraints `expr = value` while walking a
// pattern against a term, then solves them one unknown at a time.
struct Matcher {
  const Signature& sig;
  Substitution sub;
  std::vector<std::pair<ObjExpr, Nat>> eqs;

  bool walk(const Pattern& p, const Term& t);
  void constrain(const ObjExpr& e, Nat value);
  void constrain_type(const VarType& vt, const Type& t);
  bool solve();

  static ObjExpr scale(const ObjExpr& e, Nat f);
};

}  // namespace fob::detail
