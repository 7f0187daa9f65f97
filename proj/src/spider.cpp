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

// Spider normal forms for the one-colour (co)monoid fragment.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "fob/rewrite.hpp"

namespace fob {

std::string SpiderForm::to_string() const {
  std::ostringstream os;
  auto port = [&](Nat p) {
    if (p < inputs) return "in" + std::to_string(p);
    return "out" + std::to_string(p - inputs);
  };
  os << (flavour == Color::White ? "white" : "black") << ' ' << inputs << " -> " << outputs
     << " {";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    os << (b ? ", {" : "{");
    for (std::size_t i = 0; i < blocks[b].size(); ++i) os << (i ? "," : "") << port(blocks[b][i]);
    os << '}';
  }
  os << "} closed=" << closed;
  return os.str();
}

namespace {

class Wires {
 public:
  Nat fresh() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  Nat find(Nat x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(Nat a, Nat b) { parent_[find(a)] = find(b); }
  Nat size() const { return parent_.size(); }

 private:
  std::vector<Nat> parent_;
};

struct Ports {
  std::vector<Nat> in, out;
};

class Builder {
 public:
  Wires wires;
  std::optional<Color> colour;

  Ports run(const Term& t, Position& at) {
    if (t.kind() == Kind::Gen || t.kind() == Kind::GenOp || is_sugar(t.kind()))
      throw TypeError("outside Frobenius fragment: " + print_term(t), to_string(at));
    const Color c = color_of(t.kind());
    if (colour && *colour != c)
      throw TypeError("outside Frobenius fragment: mixed colours at " + print_term(t),
                      to_string(at));
    colour = c;
    Ports p;
    switch (t.kind()) {
      case Kind::IdW:
      case Kind::IdB:
        for (Nat i = 0; i < t.p0(); ++i) p.in.push_back(wires.fresh());
        p.out = p.in;
        return p;
      case Kind::SymW:
      case Kind::SymB:
        for (Nat i = 0; i < t.p0() + t.p1(); ++i) p.in.push_back(wires.fresh());
        p.out.assign(p.in.begin() + static_cast<std::ptrdiff_t>(t.p0()), p.in.end());
        p.out.insert(p.out.end(), p.in.begin(), p.in.begin() + static_cast<std::ptrdiff_t>(t.p0()));
        return p;
      case Kind::CopyW:
      case Kind::CopyB: {
        const Nat w = wires.fresh();
        return {{w}, {w, w}};
      }
      case Kind::CocopyW:
      case Kind::CocopyB: {
        const Nat w = wires.fresh();
        return {{w, w}, {w}};
      }
      case Kind::DiscardW:
      case Kind::DiscardB: return {{wires.fresh()}, {}};
      case Kind::CodiscardW:
      case Kind::CodiscardB: return {{}, {wires.fresh()}};
      default: break;
    }
    const bool seq = t.kind() == Kind::SeqW || t.kind() == Kind::SeqB;
    at.path.push_back(0);
    Ports a = run(t.child(0), at);
    at.path.back() = 1;
    Ports b = run(t.child(1), at);
    at.path.pop_back();
    if (seq) {
      for (std::size_t i = 0; i < a.out.size() && i < b.in.size(); ++i)
        wires.unite(a.out[i], b.in[i]);
      return {a.in, b.out};
    }
    a.in.insert(a.in.end(), b.in.begin(), b.in.end());
    a.out.insert(a.out.end(), b.out.begin(), b.out.end());
    return a;
  }
};

}  // namespace

SpiderForm spider_normalize(const Term& t, const Signature& sig) {
  const Term p = desugar(t, sig);
  Builder b;
  Position at;
  const Ports ports = b.run(p, at);
  SpiderForm f;
  f.inputs = ports.in.size();
  f.outputs = ports.out.size();
  f.flavour = b.colour.value_or(Color::White);
  std::vector<Nat> boundary = ports.in;
  boundary.insert(boundary.end(), ports.out.begin(), ports.out.end());

  std::map<Nat, std::vector<Nat>> by_root;
  for (Nat i = 0; i < boundary.size(); ++i) by_root[b.wires.find(boundary[i])].push_back(i);
  for (auto& [root, block] : by_root) f.blocks.push_back(block);
  std::sort(f.blocks.begin(), f.blocks.end());

  std::set<Nat> roots;
  for (Nat w = 0; w < b.wires.size(); ++w) roots.insert(b.wires.find(w));
  f.closed = roots.size() - by_root.size();
  return f;
}

FinRelation spider_relation(const SpiderForm& f, Nat k) {
  FinRelation r(k, f.inputs, f.outputs);
  std::vector<Nat> block_of(f.inputs + f.outputs, 0);
  for (std::size_t b = 0; b < f.blocks.size(); ++b)
    for (Nat port : f.blocks[b]) block_of[port] = b;
  for (std::uint64_t x = 0; x < r.rows(); ++x) {
    const auto xs = decode_tuple(x, k, f.inputs);
    for (std::uint64_t y = 0; y < r.cols(); ++y) {
      const auto ys = decode_tuple(y, k, f.outputs);
      std::vector<std::optional<Nat>> value(f.blocks.size());
      bool ok = true;
      for (Nat port = 0; port < f.inputs + f.outputs && ok; ++port) {
        const Nat v = port < f.inputs ? xs[port] : ys[port - f.inputs];
        auto& slot = value[block_of[port]];
        if (slot && *slot != v) ok = false;
        slot = v;
      }
      if (ok) r.set(x, y);
    }
  }
  // closed components hold at any inhabited carrier
  if (f.closed > 0 && k == 0) r = FinRelation(k, f.inputs, f.outputs);
  return f.flavour == Color::White ? r : complement(r);
}

}  // namespace fob
