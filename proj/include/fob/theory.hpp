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
#include <string_view>
#include <vector>

#include "fob/finrel.hpp"
#include "fob/term.hpp"

namespace fob {

/// c <= d
struct TheoryAxiom {
  std::string name;
  Term lhs, rhs;
};

struct Theory {
  Signature sig;
  std::vector<TheoryAxiom> axioms;
};

/// `sig NAME : N -> M` lines, then `axiom NAME : TERM <= TERM` lines. Both
/// sides are typechecked and must share a type.
Theory parse_theory(std::string_view text);
std::string print_theory(const Theory& t);

struct AxiomVerdict {
  std::string name;
  bool holds = true;
  std::optional<FinRelation::TuplePair> witness;  // in eval(lhs) but not eval(rhs)
};

struct ModelReport {
  std::vector<AxiomVerdict> verdicts;
  bool is_model() const;
  std::string to_string() const;
};

ModelReport check_model(const Theory& t, const Interpretation& i, const EvalOptions& opts = {});

struct EnumerateOptions {
  std::uint64_t max_space = std::uint64_t{1} << 24;
  EvalOptions eval;
};

/// Number of assignments over carrier k; SizeLimitError past opts.max_space.
std::uint64_t search_space(const Signature& sig, Nat k, const EnumerateOptions& opts = {});

/// Every model over carrier k, ordered by the concatenated bit vectors of the
/// relations (signature order, flat encoding) read lexicographically.
std::vector<Interpretation> enumerate_models(const Theory& t, Nat k,
                                             const EnumerateOptions& opts = {});

/// The assignment with the given rank in that order.
Interpretation assignment_at(const Signature& sig, Nat k, std::uint64_t rank);

namespace reference {
std::vector<Interpretation> enumerate_models(const Theory& t, Nat k,
                                             const EnumerateOptions& opts = {});
}  // namespace reference

}  // namespace fob
