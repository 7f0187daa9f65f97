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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fob/rewrite.hpp"

namespace fob {

struct VerifyOptions {
  Nat k = 2;  // at most 4
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  Nat max_object = 2;  // object metavariables range over 0..max_object
  std::uint64_t max_bits = kMaxRelationBits;
};

struct AxiomTally {
  std::string name;
  Family family = Family::Structural;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<std::string> counterexample;  // first failing instantiation
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<AxiomTally> axioms;  // database order

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
};

/// Checks every axiom in Rel on random instantiations: object metavariables
/// uniformly in 0..max_object, arrow and generator metavariables as uniform
/// random relations. Axioms are spread over OpenMP threads; the report is in
/// input order and depends only on the seed.
VerifyReport verify_axioms(const VerifyOptions& opts, const std::vector<Axiom>& axioms);
VerifyReport verify_axioms(const VerifyOptions& opts);

}  // namespace fob
