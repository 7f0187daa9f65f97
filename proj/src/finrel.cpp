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

#include "fob/finrel.hpp"

#include <algorithm>
#include <bit>

namespace fob {

std::uint64_t tuple_count(Nat k, Nat arity, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (Nat i = 0; i < arity; ++i) {
    if (k == 0) return 0;
    if (r > limit / k)
      throw SizeLimitError("tuple space " + std::to_string(k) + "^" + std::to_string(arity) +
                           " exceeds the limit of " + std::to_string(limit));
    r *= k;
  }
  return r;
}

void check_relation_size(Nat k, Nat n, Nat m, std::uint64_t limit) {
  const std::uint64_t rows = tuple_count(k, n, limit);
  const std::uint64_t cols = tuple_count(k, m, limit);
  if (rows != 0 && cols > limit / rows)
    throw SizeLimitError("relation " + std::to_string(k) + "^" + std::to_string(n) + " x " +
                         std::to_string(k) + "^" + std::to_string(m) + " exceeds " +
                         std::to_string(limit) + " bits");
}

std::vector<Nat> decode_tuple(std::uint64_t index, Nat k, Nat arity) {
  std::vector<Nat> out(arity, 0);
  for (Nat i = arity; i-- > 0;) {
    out[i] = static_cast<Nat>(index % k);
    index /= k;
  }
  return out;
}

std::uint64_t encode_tuple(std::span<const Nat> tuple, Nat k) {
  std::uint64_t r = 0;
  for (Nat v : tuple) r = r * k + v;
  return r;
}

// --- FinRelation ---------------------------------------------------------------------

FinRelation::FinRelation(Nat carrier, Nat dom_arity, Nat cod_arity)
    : carrier_(carrier), dom_arity_(dom_arity), cod_arity_(cod_arity) {
  check_relation_size(carrier, dom_arity, cod_arity);
  rows_ = tuple_count(carrier, dom_arity);
  cols_ = tuple_count(carrier, cod_arity);
  wpr_ = static_cast<std::size_t>((cols_ + 63) / 64);
  words_.assign(static_cast<std::size_t>(rows_) * wpr_, 0);
}

std::uint64_t FinRelation::tail_mask() const {
  const std::uint64_t rem = cols_ & 63;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

FinRelation FinRelation::full(Nat carrier, Nat dom_arity, Nat cod_arity) {
  FinRelation r(carrier, dom_arity, cod_arity);
  if (r.wpr_ == 0) return r;
  const std::uint64_t mask = r.tail_mask();
  for (std::uint64_t x = 0; x < r.rows_; ++x) {
    auto row = r.row_words(x);
    std::fill(row.begin(), row.end(), ~std::uint64_t{0});
    row.back() = mask;
  }
  return r;
}

FinRelation FinRelation::from_bits(Nat carrier, Nat dom_arity, Nat cod_arity,
                                   const std::vector<bool>& bits) {
  FinRelation r(carrier, dom_arity, cod_arity);
  if (bits.size() != r.num_bits())
    throw ShapeError("bit-vector has length " + std::to_string(bits.size()) + ", expected " +
                     std::to_string(r.num_bits()));
  for (std::uint64_t x = 0; x < r.rows_; ++x)
    for (std::uint64_t y = 0; y < r.cols_; ++y)
      if (bits[x * r.cols_ + y]) r.set(x, y);
  return r;
}

FinRelation FinRelation::from_pairs(Nat carrier, Nat dom_arity, Nat cod_arity,
                                    const std::vector<TuplePair>& pairs) {
  FinRelation r(carrier, dom_arity, cod_arity);
  for (const auto& [xs, ys] : pairs) {
    if (xs.size() != dom_arity || ys.size() != cod_arity)
      throw ShapeError("tuple pair has arities " + std::to_string(xs.size()) + "/" +
                       std::to_string(ys.size()) + ", expected " + std::to_string(dom_arity) +
                       "/" + std::to_string(cod_arity));
    for (Nat v : xs)
      if (v >= carrier) throw ShapeError("value " + std::to_string(v) + " outside carrier");
    for (Nat v : ys)
      if (v >= carrier) throw ShapeError("value " + std::to_string(v) + " outside carrier");
    r.set(encode_tuple(xs, carrier), encode_tuple(ys, carrier));
  }
  return r;
}

std::vector<bool> FinRelation::bits() const {
  std::vector<bool> out(num_bits(), false);
  for (std::uint64_t x = 0; x < rows_; ++x)
    for (std::uint64_t y = 0; y < cols_; ++y)
      if (test(x, y)) out[x * cols_ + y] = true;
  return out;
}

std::vector<FinRelation::TuplePair> FinRelation::pairs() const {
  std::vector<TuplePair> out;
  for (std::uint64_t x = 0; x < rows_; ++x)
    for (std::uint64_t y = 0; y < cols_; ++y)
      if (test(x, y))
        out.emplace_back(decode_tuple(x, carrier_, dom_arity_),
                         decode_tuple(y, carrier_, cod_arity_));
  return out;
}

std::uint64_t FinRelation::count() const {
  std::uint64_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
  return c;
}

// --- Constants -------------------------------------------------------------------------

namespace {

FinRelation black_of(const FinRelation& white) { return complement(white); }

}  // namespace

FinRelation identity_rel(Color c, Nat k, Nat n) {
  FinRelation w(k, n, n);
  for (std::uint64_t x = 0; x < w.rows(); ++x) w.set(x, x);
  return c == Color::White ? w : black_of(w);
}

// (x, z) |-> (z, x) with x in X^m, z in X^n: index xa*k^n + zb goes to zb*k^m + xa.
FinRelation symmetry_rel(Color c, Nat k, Nat m, Nat n) {
  FinRelation w(k, m + n, n + m);
  const std::uint64_t km = tuple_count(k, m), kn = tuple_count(k, n);
  for (std::uint64_t xa = 0; xa < km; ++xa)
    for (std::uint64_t zb = 0; zb < kn; ++zb) w.set(xa * kn + zb, zb * km + xa);
  return c == Color::White ? w : black_of(w);
}

FinRelation copy_rel(Color c, Nat k, Nat n) {
  FinRelation w(k, n, 2 * n);
  const std::uint64_t kn = w.rows();
  for (std::uint64_t x = 0; x < kn; ++x) w.set(x, x * kn + x);
  return c == Color::White ? w : black_of(w);
}

FinRelation cocopy_rel(Color c, Nat k, Nat n) { return converse(copy_rel(c, k, n)); }

FinRelation discard_rel(Color c, Nat k, Nat n) {
  return c == Color::White ? FinRelation::full(k, n, 0) : FinRelation(k, n, 0);
}

FinRelation codiscard_rel(Color c, Nat k, Nat n) {
  return c == Color::White ? FinRelation::full(k, 0, n) : FinRelation(k, 0, n);
}

FinRelation constant_rel(Kind kind, Nat k) {
  switch (kind) {
    case Kind::IdW: return identity_rel(Color::White, k, 1);
    case Kind::IdB: return identity_rel(Color::Black, k, 1);
    case Kind::SymW: return symmetry_rel(Color::White, k, 1, 1);
    case Kind::SymB: return symmetry_rel(Color::Black, k, 1, 1);
    case Kind::CopyW: return copy_rel(Color::White, k, 1);
    case Kind::CopyB: return copy_rel(Color::Black, k, 1);
    case Kind::DiscardW: return discard_rel(Color::White, k, 1);
    case Kind::DiscardB: return discard_rel(Color::Black, k, 1);
    case Kind::CocopyW: return cocopy_rel(Color::White, k, 1);
    case Kind::CocopyB: return cocopy_rel(Color::Black, k, 1);
    case Kind::CodiscardW: return codiscard_rel(Color::White, k, 1);
    case Kind::CodiscardB: return codiscard_rel(Color::Black, k, 1);
    default: throw ShapeError("not a constant kind");
  }
}

// --- Kernels -----------------------------------------------------------------------------

namespace {

void require_compose(const FinRelation& a, const FinRelation& b) {
  if (a.carrier() != b.carrier())
    throw ShapeError("carrier mismatch: " + std::to_string(a.carrier()) + " vs " +
                     std::to_string(b.carrier()));
  if (a.cod_arity() != b.dom_arity())
    throw ShapeError("arity mismatch: cod " + std::to_string(a.cod_arity()) + " vs dom " +
                     std::to_string(b.dom_arity()));
}

void require_same(const FinRelation& a, const FinRelation& b) {
  if (!a.same_shape(b))
    throw ShapeError("relations of different types: " + std::to_string(a.dom_arity()) + "->" +
                     std::to_string(a.cod_arity()) + " vs " + std::to_string(b.dom_arity()) +
                     "->" + std::to_string(b.cod_arity()));
}

void require_carrier(const FinRelation& a, const FinRelation& b) {
  if (a.carrier() != b.carrier())
    throw ShapeError("carrier mismatch: " + std::to_string(a.carrier()) + " vs " +
                     std::to_string(b.carrier()));
}

using i64 = long long;

}  // namespace

namespace {

// Calls f(y) for every set (Set = true) or clear bit y < cols of a row.
template <bool Set, class F>
void scan_row(std::span<const std::uint64_t> row, std::uint64_t cols, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::uint64_t bits = Set ? row[w] : ~row[w];
    if (w + 1 == row.size() && (cols & 63)) bits &= (std::uint64_t{1} << (cols & 63)) - 1;
    while (bits) {
      const int b = std::countr_zero(bits);
      f(static_cast<std::uint64_t>(w) * 64 + static_cast<std::uint64_t>(b));
      bits &= bits - 1;
    }
  }
}

}  // namespace

FinRelation compose_white(const FinRelation& a, const FinRelation& b) {
  require_compose(a, b);
  FinRelation r(a.carrier(), a.dom_arity(), b.cod_arity());
  const i64 rows = static_cast<i64>(a.rows());
  const std::uint64_t mid = a.cols();
  const std::size_t wpr = r.words_per_row();
#pragma omp parallel for schedule(static)
  for (i64 x = 0; x < rows; ++x) {
    auto out = r.row_words(static_cast<std::uint64_t>(x));
    scan_row<true>(a.row_words(static_cast<std::uint64_t>(x)), mid, [&](std::uint64_t y) {
      auto in = b.row_words(y);
      for (std::size_t w = 0; w < wpr; ++w) out[w] |= in[w];
    });
  }
  return r;
}

FinRelation compose_black(const FinRelation& a, const FinRelation& b) {
  require_compose(a, b);
  FinRelation r = FinRelation::full(a.carrier(), a.dom_arity(), b.cod_arity());
  const i64 rows = static_cast<i64>(a.rows());
  const std::uint64_t mid = a.cols();
  const std::size_t wpr = r.words_per_row();
#pragma omp parallel for schedule(static)
  for (i64 x = 0; x < rows; ++x) {
    auto out = r.row_words(static_cast<std::uint64_t>(x));
    scan_row<false>(a.row_words(static_cast<std::uint64_t>(x)), mid, [&](std::uint64_t y) {
      auto in = b.row_words(y);
      for (std::size_t w = 0; w < wpr; ++w) out[w] &= in[w];
    });
  }
  return r;
}

namespace {

// Writes `len` bits of src (from bit 0) into dst starting at bit `at`.
// dst bits in the range are assumed clear.
void or_bits(std::span<std::uint64_t> dst, std::uint64_t at, std::span<const std::uint64_t> src,
             std::uint64_t len) {
  const unsigned shift = static_cast<unsigned>(at & 63);
  std::size_t w = static_cast<std::size_t>(at >> 6);
  for (std::uint64_t done = 0, i = 0; done < len; done += 64, ++i) {
    std::uint64_t v = src[i];
    if (len - done < 64) v &= (std::uint64_t{1} << (len - done)) - 1;
    dst[w + i] |= v << shift;
    if (shift && w + i + 1 < dst.size()) dst[w + i + 1] |= v >> (64 - shift);
  }
}

// Row (xa, xc) of the white tensor is, for each set bit ya of a's row xa,
// c's row xc placed at block ya.
FinRelation tensor_kernel(const FinRelation& a, const FinRelation& c) {
  require_carrier(a, c);
  FinRelation r(a.carrier(), a.dom_arity() + c.dom_arity(), a.cod_arity() + c.cod_arity());
  const std::uint64_t ca = a.cols(), rc = c.rows(), cc = c.cols();
  const i64 rows = static_cast<i64>(r.rows());
#pragma omp parallel for schedule(static)
  for (i64 xi = 0; xi < rows; ++xi) {
    const std::uint64_t x = static_cast<std::uint64_t>(xi);
    auto out = r.row_words(x);
    auto crow = c.row_words(x % rc);
    scan_row<true>(a.row_words(x / rc), ca, [&](std::uint64_t ya) { or_bits(out, ya * cc, crow, cc); });
  }
  return r;
}

}  // namespace

FinRelation tensor_white(const FinRelation& a, const FinRelation& c) {
  return tensor_kernel(a, c);
}

// a (x)b c = not(not a (x)w not c)
FinRelation tensor_black(const FinRelation& a, const FinRelation& c) {
  return complement(tensor_kernel(complement(a), complement(c)));
}

FinRelation complement(const FinRelation& a) {
  FinRelation r(a.carrier(), a.dom_arity(), a.cod_arity());
  const std::size_t wpr = r.words_per_row();
  if (wpr == 0) return r;
  const std::uint64_t mask = r.tail_mask();
  const i64 rows = static_cast<i64>(a.rows());
#pragma omp parallel for schedule(static)
  for (i64 x = 0; x < rows; ++x) {
    auto out = r.row_words(static_cast<std::uint64_t>(x));
    auto in = a.row_words(static_cast<std::uint64_t>(x));
    for (std::size_t w = 0; w < wpr; ++w) out[w] = ~in[w];
    out[wpr - 1] &= mask;
  }
  return r;
}

FinRelation converse(const FinRelation& a) {
  FinRelation r(a.carrier(), a.cod_arity(), a.dom_arity());
  // one task per 64-column stripe of a, i.e. 64 rows of r
  const i64 stripes = static_cast<i64>(a.words_per_row());
#pragma omp parallel for schedule(static)
  for (i64 s = 0; s < stripes; ++s)
    for (std::uint64_t x = 0; x < a.rows(); ++x) {
      std::uint64_t w = a.row_words(x)[static_cast<std::size_t>(s)];
      const std::uint64_t bit = std::uint64_t{1} << (x & 63);
      while (w) {
        const std::uint64_t y = static_cast<std::uint64_t>(s) * 64 + std::countr_zero(w);
        r.row_words(y)[x >> 6] |= bit;
        w &= w - 1;
      }
    }
  return r;
}

FinRelation intersect(const FinRelation& a, const FinRelation& b) {
  require_same(a, b);
  FinRelation r = a;
  for (std::uint64_t x = 0; x < r.rows(); ++x) {
    auto out = r.row_words(x);
    auto in = b.row_words(x);
    for (std::size_t w = 0; w < out.size(); ++w) out[w] &= in[w];
  }
  return r;
}

FinRelation unite(const FinRelation& a, const FinRelation& b) {
  require_same(a, b);
  FinRelation r = a;
  for (std::uint64_t x = 0; x < r.rows(); ++x) {
    auto out = r.row_words(x);
    auto in = b.row_words(x);
    for (std::size_t w = 0; w < out.size(); ++w) out[w] |= in[w];
  }
  return r;
}

bool included(const FinRelation& a, const FinRelation& b) {
  require_same(a, b);
  for (std::uint64_t x = 0; x < a.rows(); ++x) {
    auto l = a.row_words(x);
    auto r = b.row_words(x);
    for (std::size_t w = 0; w < l.size(); ++w)
      if (l[w] & ~r[w]) return false;
  }
  return true;
}

bool equal(const FinRelation& a, const FinRelation& b) {
  require_same(a, b);
  return a == b;
}

// --- Reference implementations ---------------------------------------------------------

namespace reference {

FinRelation compose_white(const FinRelation& a, const FinRelation& b) {
  require_compose(a, b);
  FinRelation r(a.carrier(), a.dom_arity(), b.cod_arity());
  for (std::uint64_t x = 0; x < a.rows(); ++x)
    for (std::uint64_t z = 0; z < b.cols(); ++z) {
      bool any = false;
      for (std::uint64_t y = 0; y < a.cols() && !any; ++y) any = a.test(x, y) && b.test(y, z);
      r.set(x, z, any);
    }
  return r;
}

FinRelation compose_black(const FinRelation& a, const FinRelation& b) {
  require_compose(a, b);
  FinRelation r(a.carrier(), a.dom_arity(), b.cod_arity());
  for (std::uint64_t x = 0; x < a.rows(); ++x)
    for (std::uint64_t z = 0; z < b.cols(); ++z) {
      bool all = true;
      for (std::uint64_t y = 0; y < a.cols() && all; ++y) all = a.test(x, y) || b.test(y, z);
      r.set(x, z, all);
    }
  return r;
}

namespace {

// Literal tuple concatenation: ((x,z),(y,v)) against (x,y) and (z,v).
template <class Op>
FinRelation tensor_literal(const FinRelation& a, const FinRelation& c, Op op) {
  require_carrier(a, c);
  const Nat k = a.carrier();
  FinRelation r(k, a.dom_arity() + c.dom_arity(), a.cod_arity() + c.cod_arity());
  for (std::uint64_t row = 0; row < r.rows(); ++row) {
    const auto in = decode_tuple(row, k, r.dom_arity());
    const std::vector<Nat> x(in.begin(), in.begin() + a.dom_arity());
    const std::vector<Nat> z(in.begin() + a.dom_arity(), in.end());
    for (std::uint64_t col = 0; col < r.cols(); ++col) {
      const auto out = decode_tuple(col, k, r.cod_arity());
      const std::vector<Nat> y(out.begin(), out.begin() + a.cod_arity());
      const std::vector<Nat> v(out.begin() + a.cod_arity(), out.end());
      r.set(row, col,
            op(a.test(encode_tuple(x, k), encode_tuple(y, k)),
               c.test(encode_tuple(z, k), encode_tuple(v, k))));
    }
  }
  return r;
}

}  // namespace

FinRelation tensor_white(const FinRelation& a, const FinRelation& c) {
  return tensor_literal(a, c, [](bool p, bool q) { return p && q; });
}

FinRelation tensor_black(const FinRelation& a, const FinRelation& c) {
  return tensor_literal(a, c, [](bool p, bool q) { return p || q; });
}

FinRelation complement(const FinRelation& a) {
  FinRelation r(a.carrier(), a.dom_arity(), a.cod_arity());
  for (std::uint64_t x = 0; x < a.rows(); ++x)
    for (std::uint64_t y = 0; y < a.cols(); ++y) r.set(x, y, !a.test(x, y));
  return r;
}

FinRelation converse(const FinRelation& a) {
  FinRelation r(a.carrier(), a.cod_arity(), a.dom_arity());
  for (std::uint64_t x = 0; x < a.rows(); ++x)
    for (std::uint64_t y = 0; y < a.cols(); ++y) r.set(y, x, a.test(x, y));
  return r;
}

bool included(const FinRelation& a, const FinRelation& b) {
  require_same(a, b);
  for (std::uint64_t x = 0; x < a.rows(); ++x)
    for (std::uint64_t y = 0; y < a.cols(); ++y)
      if (a.test(x, y) && !b.test(x, y)) return false;
  return true;
}

}  // namespace reference

// --- Semantic predicates -------------------------------------------------------------------

bool is_map(const FinRelation& a) {
  const Nat k = a.carrier(), n = a.dom_arity(), m = a.cod_arity();
  // copy;(a x a) <= a;copy
  const FinRelation lhs_copy = compose_white(copy_rel(Color::White, k, n), tensor_white(a, a));
  const FinRelation rhs_copy = compose_white(a, copy_rel(Color::White, k, m));
  if (!included(lhs_copy, rhs_copy)) return false;
  // discard <= a;discard
  return included(discard_rel(Color::White, k, n),
                  compose_white(a, discard_rel(Color::White, k, m)));
}

bool is_function(const FinRelation& a) {
  for (std::uint64_t x = 0; x < a.rows(); ++x) {
    std::uint64_t hits = 0;
    for (std::uint64_t y = 0; y < a.cols(); ++y) hits += a.test(x, y) ? 1 : 0;
    if (hits != 1) return false;
  }
  return true;
}

FinRelation linear_adjoint(const FinRelation& a) { return converse(complement(a)); }

}  // namespace fob
