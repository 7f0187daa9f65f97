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

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fob/term.hpp"

namespace fob {

/// Hard upper bound on the number of pairs a relation may index.
inline constexpr std::uint64_t kMaxRelationBits = std::uint64_t{1} << 30;

/// k^arity, or SizeLimitError when it exceeds `limit`.
std::uint64_t tuple_count(Nat k, Nat arity, std::uint64_t limit = kMaxRelationBits);
/// Throws SizeLimitError unless k^(n+m) <= limit.
void check_relation_size(Nat k, Nat n, Nat m, std::uint64_t limit = kMaxRelationBits);

/// Base-k tuple codec, most significant coordinate first.
std::vector<Nat> decode_tuple(std::uint64_t index, Nat k, Nat arity);
std::uint64_t encode_tuple(std::span<const Nat> tuple, Nat k);

/// A relation between X^n and X^m for |X| = k. Logically a bit-vector indexed
/// by row * k^m + col where row and col are base-k tuple codes. Rows are
/// stored padded to 64-bit words so kernels can work on whole rows.
class FinRelation {
 public:
  FinRelation() : FinRelation(1, 0, 0) {}
  /// The empty relation.
  FinRelation(Nat carrier, Nat dom_arity, Nat cod_arity);

  static FinRelation full(Nat carrier, Nat dom_arity, Nat cod_arity);
  /// From the flat encoding; bits.size() must be k^n * k^m.
  static FinRelation from_bits(Nat carrier, Nat dom_arity, Nat cod_arity,
                               const std::vector<bool>& bits);
  using TuplePair = std::pair<std::vector<Nat>, std::vector<Nat>>;
  static FinRelation from_pairs(Nat carrier, Nat dom_arity, Nat cod_arity,
                                const std::vector<TuplePair>& pairs);

  Nat carrier() const { return carrier_; }
  Nat dom_arity() const { return dom_arity_; }
  Nat cod_arity() const { return cod_arity_; }
  std::uint64_t rows() const { return rows_; }
  std::uint64_t cols() const { return cols_; }
  std::uint64_t num_bits() const { return rows_ * cols_; }

  bool test(std::uint64_t row, std::uint64_t col) const {
    return (words_[row * wpr_ + (col >> 6)] >> (col & 63)) & 1u;
  }
  void set(std::uint64_t row, std::uint64_t col, bool value = true) {
    std::uint64_t& w = words_[row * wpr_ + (col >> 6)];
    const std::uint64_t bit = std::uint64_t{1} << (col & 63);
    w = value ? (w | bit) : (w & ~bit);
  }

  std::size_t words_per_row() const { return wpr_; }
  std::span<const std::uint64_t> row_words(std::uint64_t row) const {
    return {words_.data() + row * wpr_, wpr_};
  }
  std::span<std::uint64_t> row_words(std::uint64_t row) {
    return {words_.data() + row * wpr_, wpr_};
  }
  /// Mask of the valid bits in the last word of a row.
  std::uint64_t tail_mask() const;

  /// Flat encoding, index row * k^m + col.
  std::vector<bool> bits() const;
  std::vector<TuplePair> pairs() const;
  std::uint64_t count() const;
  bool empty() const { return count() == 0; }

  bool same_shape(const FinRelation& o) const {
    return carrier_ == o.carrier_ && dom_arity_ == o.dom_arity_ && cod_arity_ == o.cod_arity_;
  }
  friend bool operator==(const FinRelation& a, const FinRelation& b) {
    return a.same_shape(b) && a.words_ == b.words_;
  }

 private:
  Nat carrier_;
  Nat dom_arity_;
  Nat cod_arity_;
  std::uint64_t rows_;
  std::uint64_t cols_;
  std::size_t wpr_;
  std::vector<std::uint64_t> words_;
};

// --- Constants -------------------------------------------------------------------

/// The twelve unary constants: IdW, IdB (1 -> 1), SymW, SymB (2 -> 2) and the
/// eight (co)monoid constants.
FinRelation constant_rel(Kind kind, Nat k);
FinRelation identity_rel(Color c, Nat k, Nat n);
FinRelation symmetry_rel(Color c, Nat k, Nat m, Nat n);
/// Arity-indexed (co)monoid relations on X^n, computed directly.
FinRelation copy_rel(Color c, Nat k, Nat n);
FinRelation discard_rel(Color c, Nat k, Nat n);
FinRelation cocopy_rel(Color c, Nat k, Nat n);
FinRelation codiscard_rel(Color c, Nat k, Nat n);

// --- Kernels (OpenMP over result rows) -------------------------------------------

/// (x,z) iff exists y. (x,y) in a and (y,z) in b.
FinRelation compose_white(const FinRelation& a, const FinRelation& b);
/// (x,z) iff forall y. (x,y) in a or (y,z) in b.
FinRelation compose_black(const FinRelation& a, const FinRelation& b);
FinRelation tensor_white(const FinRelation& a, const FinRelation& c);
FinRelation tensor_black(const FinRelation& a, const FinRelation& c);
FinRelation complement(const FinRelation& a);
FinRelation converse(const FinRelation& a);
FinRelation intersect(const FinRelation& a, const FinRelation& b);
FinRelation unite(const FinRelation& a, const FinRelation& b);
bool included(const FinRelation& a, const FinRelation& b);
bool equal(const FinRelation& a, const FinRelation& b);

inline FinRelation compose(Color c, const FinRelation& a, const FinRelation& b) {
  return c == Color::White ? compose_white(a, b) : compose_black(a, b);
}
inline FinRelation tensor(Color c, const FinRelation& a, const FinRelation& b) {
  return c == Color::White ? tensor_white(a, b) : tensor_black(a, b);
}

/// Serial bit-at-a-time versions written directly from the set definitions.
/// Kept as the oracle for the parallel kernels.
namespace reference {
FinRelation compose_white(const FinRelation& a, const FinRelation& b);
FinRelation compose_black(const FinRelation& a, const FinRelation& b);
FinRelation tensor_white(const FinRelation& a, const FinRelation& c);
FinRelation tensor_black(const FinRelation& a, const FinRelation& c);
FinRelation complement(const FinRelation& a);
FinRelation converse(const FinRelation& a);
bool included(const FinRelation& a, const FinRelation& b);
}  // namespace reference

// --- Semantic predicates -------------------------------------------------------------

/// Both map inequalities: a;copy >= copy;(a (x) a) and a;discard >= discard.
bool is_map(const FinRelation& a);
/// Single-valued and total, checked pointwise.
bool is_function(const FinRelation& a);
/// The right (and left) linear adjoint, converse(complement(a)).
FinRelation linear_adjoint(const FinRelation& a);

// --- Interpretations and evaluation ------------------------------------------------

struct Interpretation {
  Nat carrier = 1;
  std::map<std::string, FinRelation> assignment;

  /// Carrier >= 1, every generator assigned, arities match.
  void validate(const Signature& sig) const;
};

struct EvalOptions {
  std::uint64_t max_bits = kMaxRelationBits;
};

/// The interpretation functor: desugars t and evaluates it structurally.
FinRelation eval(const Term& t, const Signature& sig, const Interpretation& interp,
                 const EvalOptions& opts = {});
/// Evaluates an already primitive term without desugaring.
FinRelation eval_primitive(const Term& t, const Signature& sig, const Interpretation& interp,
                           const EvalOptions& opts = {});

// --- Text formats --------------------------------------------------------------------

/// `carrier K` followed by `rel NAME N M { (t1 .. tN ; u1 .. uM) ... }`.
Interpretation parse_interpretation(std::string_view text, const Signature& sig);
std::string print_interpretation(const Interpretation& interp, const Signature& sig);
/// Tuple-list body: `{ (0 ; 1) (1 ; 0) }`.
std::string print_relation(const FinRelation& r);

}  // namespace fob
