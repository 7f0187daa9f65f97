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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "fob/doctrine.hpp"
#include "fob/error.hpp"
#include "fob/rewrite.hpp"
#include "fob/theory.hpp"
#include "fob/verify.hpp"

namespace fob::cli {

namespace {

// Input that is not a semantic failure: bad files, flags or syntax.
struct Usage : Error {
  using Error::Error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Usage("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join_nats(const std::vector<Nat>& v, char sep = ',') {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

std::vector<Nat> parse_list(const std::string& text) {
  std::vector<Nat> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    if (!std::all_of(item.begin(), item.end(), ::isdigit)) throw Usage("bad list entry '" + item + "'");
    out.push_back(std::stoul(item));
  }
  return out;
}

struct Common {
  std::string sig_file, interp_file, file, expr;
  Nat size = 2;
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  std::uint64_t max_bits = kMaxRelationBits;
  bool machine = false;
};

Signature load_sig(const Common& c) {
  if (c.sig_file.empty()) return {};
  return parse_signature(slurp(c.sig_file));
}

std::string term_text(const Common& c) {
  if (!c.expr.empty()) return c.expr;
  if (c.file.empty()) throw Usage("expected a term file or --expr");
  return slurp(c.file);
}

int cmd_typecheck(const Common& c, std::ostream& out) {
  const Signature sig = load_sig(c);
  const Type ty = typecheck(parse_term(term_text(c), sig), sig);
  if (c.machine)
    out << "dom=" << ty.dom << " cod=" << ty.cod << '\n';
  else
    out << ty.dom << " -> " << ty.cod << '\n';
  return kOk;
}

int cmd_eval(const Common& c, std::ostream& out) {
  const Signature sig = load_sig(c);
  const Term t = parse_term(term_text(c), sig);
  Interpretation in;
  if (!c.interp_file.empty()) {
    in = parse_interpretation(slurp(c.interp_file), sig);
  } else {
    if (sig.size() != 0) throw Usage("eval needs --interp when the signature is not empty");
    in.carrier = c.size;
  }
  const FinRelation r = eval(t, sig, in, EvalOptions{c.max_bits});
  if (c.machine) {
    out << "carrier=" << r.carrier() << " dom=" << r.dom_arity() << " cod=" << r.cod_arity()
        << " count=" << r.count() << '\n';
    for (const auto& [x, y] : r.pairs()) out << "in=" << join_nats(x) << " out=" << join_nats(y) << '\n';
  } else {
    out << "carrier " << r.carrier() << ", " << r.dom_arity() << " -> " << r.cod_arity() << ", "
        << r.count() << " pairs\n"
        << print_relation(r) << '\n';
  }
  return kOk;
}

int cmd_check_model(const Common& c, std::ostream& out) {
  if (c.interp_file.empty()) throw Usage("check-model needs --interp");
  const Theory th = parse_theory(slurp(c.file));
  const Interpretation in = parse_interpretation(slurp(c.interp_file), th.sig);
  const ModelReport rep = check_model(th, in, EvalOptions{c.max_bits});
  if (c.machine) {
    for (const auto& v : rep.verdicts) {
      out << "axiom=" << v.name << " holds=" << (v.holds ? 1 : 0);
      if (v.witness)
        out << " in=" << join_nats(v.witness->first) << " out=" << join_nats(v.witness->second);
      out << '\n';
    }
    out << "model=" << (rep.is_model() ? 1 : 0) << '\n';
  } else {
    out << rep.to_string();
  }
  return rep.is_model() ? kOk : kFailed;
}

int cmd_find_models(const Common& c, std::ostream& out) {
  const Theory th = parse_theory(slurp(c.file));
  EnumerateOptions opts;
  opts.eval.max_bits = c.max_bits;
  const auto models = enumerate_models(th, c.size, opts);
  if (c.machine) {
    out << "carrier=" << c.size << " models=" << models.size() << '\n';
    for (std::size_t i = 0; i < models.size(); ++i)
      for (const auto& [name, r] : models[i].assignment) {
        std::string bits;
        for (bool b : r.bits()) bits += b ? '1' : '0';
        out << "model=" << i << " rel=" << name << " bits=" << bits << '\n';
      }
  } else {
    out << models.size() << (models.size() == 1 ? " model" : " models") << " at carrier " << c.size
        << '\n';
    for (std::size_t i = 0; i < models.size(); ++i)
      out << "# model " << i << '\n' << print_interpretation(models[i], th.sig);
  }
  return kOk;
}

int cmd_check_proof(const Common& c, std::ostream& out) {
  const Signature sig = load_sig(c);
  const ProofScript p = parse_proof(slurp(c.file), sig);
  const Verdict v = check_proof(p, sig);
  if (c.machine) {
    out << "accepted=" << (v.accepted ? 1 : 0) << " steps=" << p.steps.size();
    if (v.step) out << " step=" << *v.step;
    out << '\n';
    if (!v.accepted) out << "reason=" << v.reason << '\n';
  } else {
    out << v.to_string() << '\n';
  }
  if (!v.accepted) return kFailed;
  if (c.trials > 0) {
    const SpotcheckResult s = semantic_spotcheck(p, sig, c.trials, c.size, c.seed);
    if (c.machine)
      out << "spotcheck=" << (s.ok ? 1 : 0) << " trials=" << s.trials << '\n';
    else
      out << "spotcheck " << (s.ok ? "passed" : "FAILED") << " (" << s.trials << " trials at carrier "
          << c.size << ")\n";
    if (!s.ok) {
      out << print_interpretation(*s.countermodel, sig);
      return kFailed;
    }
  }
  return kOk;
}

int cmd_verify(const Common& c, std::ostream& out) {
  VerifyOptions opts;
  opts.k = c.size;
  opts.trials = c.trials;
  opts.seed = c.seed;
  opts.max_bits = c.max_bits;
  if (opts.k > 4) throw Usage("verify-axioms supports carriers up to 4");
  const VerifyReport rep = verify_axioms(opts);
  for (const auto& t : rep.axioms) {
    if (c.machine) {
      out << "axiom=" << t.name << " family=" << to_string(t.family) << " passed=" << t.passed
          << " failed=" << t.failed << '\n';
    } else {
      out << (t.failed ? "FAIL " : "ok   ") << t.name << " [" << to_string(t.family) << "] "
          << t.passed << '/' << (t.passed + t.failed) << '\n';
      if (t.counterexample) out << "  " << *t.counterexample << '\n';
    }
  }
  if (c.machine)
    out << "axioms=" << rep.axioms.size() << " failures=" << rep.failures() << '\n';
  else
    out << rep.axioms.size() << " axioms, " << rep.failures() << " failing, carrier " << opts.k
        << ", " << opts.trials << " trials, seed " << opts.seed << '\n';
  return rep.all_passed() ? kOk : kFailed;
}

int cmd_spider(const Common& c, std::ostream& out) {
  const Signature sig = load_sig(c);
  const SpiderForm f = spider_normalize(parse_term(term_text(c), sig), sig);
  if (c.machine) {
    out << "colour=" << (f.flavour == Color::White ? "white" : "black") << " inputs=" << f.inputs
        << " outputs=" << f.outputs << " closed=" << f.closed << '\n';
    for (const auto& b : f.blocks) out << "block=" << join_nats(b) << '\n';
  } else {
    out << f.to_string() << '\n';
  }
  return kOk;
}

int cmd_axioms(const Common& c, std::ostream& out) {
  for (const Axiom& a : axiom_db()) {
    if (c.machine)
      out << "axiom=" << a.name << " family=" << to_string(a.family)
          << " kind=" << (a.kind == AxiomKind::Le ? "le" : "eq") << '\n';
    else
      out << a.name << " [" << to_string(a.family) << "] " << a.text << '\n';
  }
  return kOk;
}

struct DoctrineArgs {
  Nat dom = 2, cod = 2;
  std::string map, pred;
};

int cmd_doctrine_laws(const Common& c, std::ostream& out) {
  if (c.size > 3) throw Usage("doctrine laws supports sizes up to 3");
  const auto tallies = doctrine::check_laws(c.size);
  bool ok = true;
  for (const auto& t : tallies) {
    ok = ok && t.failed == 0;
    if (c.machine)
      out << "law=" << t.name << " checked=" << t.checked << " failed=" << t.failed << '\n';
    else
      out << (t.failed ? "FAIL " : "ok   ") << t.name << ' ' << t.checked - t.failed << '/'
          << t.checked << (t.failed ? "  first: " + t.first_failure : "") << '\n';
  }
  return ok ? kOk : kFailed;
}

int cmd_doctrine_image(const Common&, const DoctrineArgs& d, std::ostream& out) {
  using namespace doctrine;
  const FinSetMor f = make_mor({d.dom}, {d.cod}, parse_list(d.map));
  const Predicate a = Predicate::from_list({d.dom}, parse_list(d.pred));
  out << f.to_string() << '\n';
  out << "exists " << exists_along(f, a).to_string() << '\n';
  out << "forall " << forall_along(f, a).to_string() << '\n';
  return kOk;
}

int cmd_doctrine_subst(const Common&, const DoctrineArgs& d, std::ostream& out) {
  using namespace doctrine;
  const FinSetMor f = make_mor({d.dom}, {d.cod}, parse_list(d.map));
  const Predicate a = Predicate::from_list({d.cod}, parse_list(d.pred));
  out << subst(f, a).to_string() << '\n';
  return kOk;
}

int cmd_doctrine_comprehension(const Common& c, const DoctrineArgs& d, std::ostream& out) {
  using namespace doctrine;
  const auto rep = comprehension(Predicate::from_list({d.dom}, parse_list(d.pred)));
  const bool ok = rep.top_holds && rep.universal && rep.full.value_or(true);
  if (c.machine) {
    out << "size=" << rep.sub.size << " incl=" << join_nats(rep.incl.table)
        << " top=" << rep.top_holds << " universal=" << rep.universal;
    if (rep.full) out << " full=" << *rep.full;
    out << '\n';
  } else {
    out << "object of size " << rep.sub.size << ", inclusion " << rep.incl.to_string() << '\n'
        << "top " << (rep.top_holds ? "holds" : "fails") << ", factorisation "
        << (rep.universal ? "unique" : "FAILS") << ", fullness "
        << (rep.full ? (*rep.full ? "holds" : "FAILS") : "not checked") << '\n';
  }
  return ok ? kOk : kFailed;
}

int cmd_doctrine_ruc(const Common&, const DoctrineArgs& d, std::ostream& out) {
  using namespace doctrine;
  const FinSetObj x{d.dom}, y{d.cod};
  const RelArrow phi = make_arrow(x, y, Predicate::from_list(product(x, y), parse_list(d.pred)));
  out << "functional " << (is_functional(phi) ? "yes" : "no") << ", entire "
      << (is_entire(phi) ? "yes" : "no") << '\n';
  const auto f = ruc_witness(phi);
  out << "ruc " << (f ? f->to_string() : "none") << '\n';
  const auto g = choice_witness(phi);
  out << "choice " << (g ? g->to_string() : "none") << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"diagram calculus kernel"};
  app.require_subcommand(1);
  Common c;
  DoctrineArgs d;
  app.add_flag("--machine", c.machine, "key=value records, one per line");

  auto term_input = [&](CLI::App* sub) {
    sub->add_option("--sig", c.sig_file, "signature file");
    sub->add_option("-e,--expr", c.expr, "term given inline");
    sub->add_option("term", c.file, "term file");
  };

  auto* typecheck_cmd = app.add_subcommand("typecheck", "print the type of a term");
  term_input(typecheck_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a term in an interpretation");
  term_input(eval_cmd);
  eval_cmd->add_option("--interp", c.interp_file, "interpretation file");
  eval_cmd->add_option("--size", c.size, "carrier when the signature is empty");
  eval_cmd->add_option("--max-bits", c.max_bits, "largest relation allowed");

  auto* model_cmd = app.add_subcommand("check-model", "check an interpretation against a theory");
  model_cmd->add_option("theory", c.file, "theory file")->required();
  model_cmd->add_option("--interp", c.interp_file, "interpretation file");
  model_cmd->add_option("--max-bits", c.max_bits, "largest relation allowed");

  auto* find_cmd = app.add_subcommand("find-models", "enumerate the models of a theory");
  find_cmd->add_option("theory", c.file, "theory file")->required();
  find_cmd->add_option("--size", c.size, "carrier size")->required();
  find_cmd->add_option("--max-bits", c.max_bits, "largest relation allowed");

  auto* proof_cmd = app.add_subcommand("check-proof", "check a proof script");
  proof_cmd->add_option("proof", c.file, "proof file")->required();
  proof_cmd->add_option("--sig", c.sig_file, "signature file");
  proof_cmd->add_option("--trials", c.trials, "random interpretations for the spot check");
  proof_cmd->add_option("--size", c.size, "carrier of the spot check");
  proof_cmd->add_option("--seed", c.seed, "random seed");

  auto* verify_cmd = app.add_subcommand("verify-axioms", "test every axiom in finite relations");
  verify_cmd->add_option("--size", c.size, "carrier size, at most 4");
  verify_cmd->add_option("--trials", c.trials, "instantiations per axiom")->default_val(200);
  verify_cmd->add_option("--seed", c.seed, "random seed");
  verify_cmd->add_option("--max-bits", c.max_bits, "largest relation allowed");

  auto* spider_cmd = app.add_subcommand("spider", "spider normal form of a Frobenius term");
  term_input(spider_cmd);

  auto* axioms_cmd = app.add_subcommand("axioms", "list the axiom database");

  auto* doc_cmd = app.add_subcommand("doctrine", "powerset doctrine tools");
  doc_cmd->require_subcommand(1);
  auto* laws_cmd = doc_cmd->add_subcommand("laws", "exhaustive law sweep");
  laws_cmd->add_option("--size", c.size, "largest object, at most 3");
  auto* image_cmd = doc_cmd->add_subcommand("image", "exists and forall along a map");
  auto* subst_cmd = doc_cmd->add_subcommand("subst", "reindex a predicate along a map");
  for (auto* s : {image_cmd, subst_cmd}) {
    s->add_option("--dom", d.dom, "domain size")->required();
    s->add_option("--cod", d.cod, "codomain size")->required();
    s->add_option("--map", d.map, "table, comma separated")->required();
    s->add_option("--pred", d.pred, "members, comma separated");
  }
  auto* comp_cmd = doc_cmd->add_subcommand("comprehension", "comprehension of a predicate");
  comp_cmd->add_option("--size", d.dom, "object size")->required();
  comp_cmd->add_option("--pred", d.pred, "members, comma separated");
  auto* ruc_cmd = doc_cmd->add_subcommand("ruc", "unique choice for a binary predicate");
  ruc_cmd->add_option("--dom", d.dom, "domain size")->required();
  ruc_cmd->add_option("--cod", d.cod, "codomain size")->required();
  ruc_cmd->add_option("--pred", d.pred, "pair indices x*|Y|+y, comma separated");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*typecheck_cmd) return cmd_typecheck(c, out);
    if (*eval_cmd) return cmd_eval(c, out);
    if (*model_cmd) return cmd_check_model(c, out);
    if (*find_cmd) return cmd_find_models(c, out);
    if (*proof_cmd) return cmd_check_proof(c, out);
    if (*verify_cmd) return cmd_verify(c, out);
    if (*spider_cmd) return cmd_spider(c, out);
    if (*axioms_cmd) return cmd_axioms(c, out);
    if (*laws_cmd) return cmd_doctrine_laws(c, out);
    if (*image_cmd) return cmd_doctrine_image(c, d, out);
    if (*subst_cmd) return cmd_doctrine_subst(c, d, out);
    if (*comp_cmd) return cmd_doctrine_comprehension(c, d, out);
    if (*ruc_cmd) return cmd_doctrine_ruc(c, d, out);
  } catch (const RewriteError& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace fob::cli
