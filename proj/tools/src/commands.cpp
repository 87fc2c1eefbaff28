#include "monreg_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

#include "monreg/combinatorics.hpp"
#include "monreg/errors.hpp"
#include "monreg/groebner.hpp"
#include "monreg/initreg.hpp"
#include "monreg/oracle.hpp"
#include "monreg_cli/lemmas.hpp"

namespace monreg::cli {

namespace {

using nlohmann::json;

std::vector<std::string> generator_strings(const MonomialIdeal& ideal, const RingContext& ring) {
  std::vector<std::string> out;
  for (const Monomial& g : ideal.generators()) out.push_back(Polynomial(g).to_string(ring));
  return out;
}

std::string power_label(unsigned t) { return t == 1 ? "R/I" : "R/I^" + std::to_string(t); }

MonomialIdeal powered(const ProblemFile& p, unsigned t) { return ideal_power(p.ideal, t); }

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> ids;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) ids.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur.push_back(c);
    }
  }
  return ids;
}

const NamedForm& single_form(const CommandOptions& o, const ProblemFile& p) {
  if (o.form) return p.form(*o.form);
  if (p.forms.size() == 1) return p.forms.front();
  throw InvalidArgument("this command needs --form <id>");
}

std::vector<NamedForm> selected_forms(const CommandOptions& o, const ProblemFile& p) {
  if (!o.form) return p.forms;
  std::vector<NamedForm> out;
  for (const std::string& id : split_ids(*o.form)) out.push_back(p.form(id));
  return out;
}

std::vector<LinearSum> sums(const std::vector<NamedForm>& forms) {
  std::vector<LinearSum> out;
  for (const NamedForm& f : forms) out.push_back(f.sum);
  return out;
}

// Heads of all forms, then their second variables, and so on.
TermOrder heads_first(std::size_t n, const std::vector<LinearSum>& forms) {
  std::vector<VarIndex> leading;
  std::size_t longest = 0;
  for (const LinearSum& f : forms) longest = std::max(longest, f.size());
  for (std::size_t k = 0; k < longest; ++k) {
    for (const LinearSum& f : forms) {
      if (k < f.size() && std::find(leading.begin(), leading.end(), f.variables()[k]) == leading.end())
        leading.push_back(f.variables()[k]);
    }
  }
  return TermOrder::lex_leading(n, leading);
}

std::vector<std::string> prime_strings(const std::vector<oracle::MonomialPrime>& primes, const RingContext& ring) {
  std::vector<std::string> out;
  for (const auto& p : primes) out.push_back(p.to_string(ring));
  return out;
}

Report cmd_gb(const CommandOptions& o, const ProblemFile& p) {
  std::vector<Polynomial> extra;
  std::string what = "I";
  if (o.power > 1) what += "^" + std::to_string(o.power);
  if (o.form) {
    const NamedForm& f = p.form(*o.form);
    extra.push_back(f.sum.to_polynomial(p.ring.size()));
    what = "(" + what + ", " + f.id + ")";
  }
  auto gens = gb::with_extra(powered(p, o.power), extra);
  gb::GroebnerBasis basis = gb::buchberger(gens, p.order);
  Report r;
  r.theorem = "Buchberger's criterion";
  r.lines.push_back("reduced Groebner basis of " + what + " under " + p.order.to_string(p.ring) + ":");
  json elements = json::array();
  for (const Polynomial& g : basis.elements) {
    r.lines.push_back("  " + g.to_string(p.ring));
    elements.push_back(g.to_string(p.ring));
  }
  r.data["order"] = p.order.to_string(p.ring);
  r.data["basis"] = elements;
  return r;
}

Report cmd_initial(const CommandOptions& o, const ProblemFile& p) {
  const NamedForm& f = single_form(o, p);
  std::vector<Polynomial> extra{f.sum.to_polynomial(p.ring.size())};
  MonomialIdeal ini = gb::initial_ideal(gb::with_extra(powered(p, o.power), extra), p.order);
  Report r;
  r.theorem = "Buchberger's criterion";
  std::string what = o.power == 1 ? "I" : "I^" + std::to_string(o.power);
  r.lines.push_back("ini(" + what + ", " + f.sum.to_string(p.ring) + ") = " + ini.to_string(p.ring));
  r.data["form"] = f.id;
  r.data["order"] = p.order.to_string(p.ring);
  r.data["initial_ideal"] = generator_strings(ini, p.ring);
  return r;
}

Report cmd_ass(const CommandOptions& o, const ProblemFile& p) {
  auto primes = oracle::associated_primes(powered(p, o.power));
  Report r;
  r.theorem = "irreducible decomposition";
  r.lines.push_back("Ass(" + power_label(o.power) + "):");
  for (const std::string& s : prime_strings(primes, p.ring)) r.lines.push_back("  " + s);
  r.data["associated_primes"] = prime_strings(primes, p.ring);
  return r;
}

Report cmd_depth(const CommandOptions& o, const ProblemFile& p) {
  std::size_t d = oracle::depth(powered(p, o.power));
  Report r;
  r.theorem = "Auslander-Buchsbaum formula";
  r.lines.push_back("depth " + power_label(o.power) + " = " + std::to_string(d));
  r.data["depth"] = d;
  r.data["power"] = o.power;
  return r;
}

Report cmd_power(const CommandOptions& o, const ProblemFile& p) {
  MonomialIdeal q = powered(p, o.power);
  Report r;
  r.theorem = "minimal generators of a power";
  r.lines.push_back("I^" + std::to_string(o.power) + " = " + q.to_string(p.ring));
  r.lines.push_back(std::to_string(q.size()) + " minimal generators");
  r.data["generators"] = generator_strings(q, p.ring);
  return r;
}

Report cmd_colon(const CommandOptions& o, const ProblemFile& p) {
  const NamedForm& f = single_form(o, p);
  if (f.sum.size() != 2) throw InvalidArgument("colon needs a binomial form b0 + b1");
  const auto& v = f.sum.variables();
  MonomialIdeal c = initreg::colon_linear_binomial(p.ideal, o.power, v[0], v[1]);
  Report r;
  r.theorem = "binomial colon lemma";
  r.lines.push_back("(I^" + std::to_string(o.power) + " : " + f.sum.to_string(p.ring) + ") = " + c.to_string(p.ring));
  r.data["form"] = f.id;
  r.data["colon"] = generator_strings(c, p.ring);
  return r;
}

Report cmd_star_check(const CommandOptions& o, const ProblemFile& p) {
  const NamedForm& f = single_form(o, p);
  initreg::StarCheck check = initreg::check_star(p.ideal, f.sum);
  Report r;
  r.theorem = "condition (star)";
  r.pass = check.witness.has_value();
  r.data["form"] = f.id;
  if (check.witness) {
    r.lines.push_back(f.sum.to_string(p.ring) + " satisfies (star) with head " + p.ring.name(check.witness->head));
    r.data["head"] = p.ring.name(check.witness->head);
    r.data["order"] = check.witness->order.to_string(p.ring);
  } else {
    r.lines.push_back(f.sum.to_string(p.ring) + " fails (star)");
  }
  json failures = json::array();
  for (const auto& fail : check.verdict.failures) {
    r.lines.push_back("  " + fail.describe(p.ring));
    failures.push_back(fail.describe(p.ring));
  }
  r.data["failures"] = failures;
  return r;
}

Report cmd_regular_check(const CommandOptions& o, const ProblemFile& p) {
  std::vector<NamedForm> named = selected_forms(o, p);
  if (named.empty()) throw InvalidArgument("regular-check needs at least one form");
  std::vector<LinearSum> forms = sums(named);
  TermOrder order = p.order_declared ? p.order : heads_first(p.ring.size(), forms);
  MonomialIdeal q = powered(p, o.power);
  auto report = initreg::is_initially_regular(q, forms, order, o.strict);
  Report r;
  r.theorem = "initial regularity bounds depth";
  r.pass = report.regular;
  r.lines.push_back("order " + order.to_string(p.ring));
  json steps = json::array();
  for (std::size_t i = 0; i < report.steps.size(); ++i) {
    const auto& step = report.steps[i];
    std::string line = "  " + named[i].id + " = " + forms[i].to_string(p.ring) + ": " +
                       (step.regular ? "regular" : "zerodivisor");
    json s{{"form", named[i].id}, {"regular", step.regular}};
    if (step.witness) {
      line += " (in " + step.witness->to_string(p.ring) + ")";
      s["witness"] = step.witness->to_string(p.ring);
    }
    r.lines.push_back(line);
    steps.push_back(s);
  }
  r.lines.push_back(std::string(report.regular ? "initially regular" : "not initially regular") + " on " +
                    power_label(o.power));
  r.data["order"] = order.to_string(p.ring);
  r.data["steps"] = steps;
  return r;
}

Report cmd_find_initreg(const CommandOptions&, const ProblemFile& p) {
  initreg::SequenceCertificate cert = initreg::find_sequences(p.ideal);
  Report r;
  r.theorem = "combined binomial and trinomial criterion";
  r.pass = cert.verified;
  r.lines.push_back("depth R/I^2 >= " + std::to_string(cert.depth_lower_bound));
  r.lines.push_back("order " + cert.order.to_string(p.ring));
  json forms = json::array();
  for (std::size_t i = 0; i < cert.forms.size(); ++i) {
    r.lines.push_back("  " + cert.forms[i].to_string(p.ring) + " (" + initreg::to_string(cert.kinds[i]) + ")");
    forms.push_back(cert.forms[i].to_string(p.ring));
  }
  r.data["bound"] = cert.depth_lower_bound;
  r.data["forms"] = forms;
  r.data["order"] = cert.order.to_string(p.ring);
  r.data["sequence"] = initreg::to_string(cert.verdict);
  r.data["verified"] = cert.verified;
  return r;
}

Report cmd_tt(const CommandOptions&, const ProblemFile& p) {
  auto primes = comb::tt_associated_primes_square(p.ideal);
  Report r;
  r.theorem = "2-saturating sets describe Ass(R/I^2)";
  r.lines.push_back("Ass(R/I^2):");
  for (const std::string& s : prime_strings(primes, p.ring)) r.lines.push_back("  " + s);
  r.data["associated_primes"] = prime_strings(primes, p.ring);
  return r;
}

Report cmd_graph_bound(const CommandOptions& o, const ProblemFile& p) {
  if (!o.vertex) throw InvalidArgument("graph-bound needs --vertex <name>");
  comb::Hypergraph g = comb::to_hypergraph(p.ideal);
  VarIndex v = p.ring.index(*o.vertex);
  LinearSum star = comb::star_form(g, v);
  comb::PowerBound bound = comb::power_regularity_bound(g, v);
  Report r;
  r.theorem = "star forms on powers of graphs with at most one odd cycle";
  r.lines.push_back(bound.to_string());
  r.lines.push_back(star.to_string(p.ring) + " is regular on R/I^r for r <= " + bound.to_string());
  r.data["vertex"] = *o.vertex;
  r.data["form"] = star.to_string(p.ring);
  r.data["bound"] = bound.infinite ? json("inf") : json(bound.value);
  return r;
}

Report cmd_leaves_bound(const CommandOptions&, const ProblemFile& p) {
  comb::LeavesBound lb = comb::leaves_bound(comb::to_hypergraph(p.ideal));
  Report r;
  r.theorem = "leaves at distance at least 4";
  r.lines.push_back("depth R/I^r >= " + std::to_string(lb.bound));
  json leaves = json::array();
  json forms = json::array();
  for (VarIndex l : lb.leaves) leaves.push_back(p.ring.name(l));
  for (const LinearSum& f : lb.forms) {
    r.lines.push_back("  " + f.to_string(p.ring));
    forms.push_back(f.to_string(p.ring));
  }
  r.data["bound"] = lb.bound;
  r.data["leaves"] = leaves;
  r.data["forms"] = forms;
  return r;
}

Report cmd_verify_lemmas() {
  Report r;
  r.theorem = "worked examples";
  std::size_t failed = 0;
  json results = json::array();
  for (const LemmaCheck& check : lemma_checks()) {
    std::string problem;
    try {
      problem = check.run();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    bool ok = problem.empty();
    if (!ok) ++failed;
    r.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + check.name + " [" + check.theorem + "]" +
                      (ok ? "" : ": " + problem));
    results.push_back({{"name", check.name}, {"theorem", check.theorem}, {"ok", ok}});
  }
  r.lines.push_back(std::to_string(lemma_checks().size() - failed) + "/" + std::to_string(lemma_checks().size()) +
                    " checks passed");
  r.pass = failed == 0;
  r.data["checks"] = results;
  r.data["failed"] = failed;
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"gb",           "initial",      "ass",           "depth",
                                              "power",        "colon",        "star-check",    "regular-check",
                                              "find-initreg", "tt-ass-square", "graph-bound",  "leaves-bound",
                                              "verify-lemmas"};
  return names;
}

bool needs_problem(const std::string& command) { return command != "verify-lemmas"; }

Report execute(const CommandOptions& o, const ProblemFile* problem) {
  const auto& names = command_names();
  if (std::find(names.begin(), names.end(), o.command) == names.end())
    throw InvalidArgument("unknown command '" + o.command + "'");
  if (o.command == "verify-lemmas") return cmd_verify_lemmas();
  if (!problem) throw InvalidArgument(o.command + " needs a problem file");
  if (o.power == 0) throw InvalidArgument("--power must be at least 1");
  const ProblemFile& p = *problem;
  if (o.command == "gb") return cmd_gb(o, p);
  if (o.command == "initial") return cmd_initial(o, p);
  if (o.command == "ass") return cmd_ass(o, p);
  if (o.command == "depth") return cmd_depth(o, p);
  if (o.command == "power") return cmd_power(o, p);
  if (o.command == "colon") return cmd_colon(o, p);
  if (o.command == "star-check") return cmd_star_check(o, p);
  if (o.command == "regular-check") return cmd_regular_check(o, p);
  if (o.command == "find-initreg") return cmd_find_initreg(o, p);
  if (o.command == "tt-ass-square") return cmd_tt(o, p);
  if (o.command == "graph-bound") return cmd_graph_bound(o, p);
  return cmd_leaves_bound(o, p);
}

int run(const CommandOptions& o, std::ostream& out, std::ostream& err) {
  auto start = std::chrono::steady_clock::now();
  auto emit_error = [&](const std::string& kind, const std::string& message, int code) {
    if (o.json) {
      json j{{"command", o.command}, {"verdict", "error"}, {"theorem", nullptr}, {"error", kind},
             {"message", message}};
      j["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      out << j.dump() << '\n';
    }
    err << "monreg: " << kind << ": " << message << '\n';
    return code;
  };
  try {
    std::optional<ProblemFile> problem;
    if (needs_problem(o.command)) {
      if (o.file.empty()) throw InvalidArgument(o.command + " needs a problem file");
      problem = read_problem_file(o.file);
    }
    Report r = execute(o, problem ? &*problem : nullptr);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.json) {
      json j = r.data;
      j["command"] = o.command;
      j["verdict"] = r.pass ? "pass" : "fail";
      j["theorem"] = r.theorem;
      j["elapsed_ms"] = ms;
      out << j.dump() << '\n';
    } else {
      for (const std::string& line : r.lines) out << line << '\n';
      out << "verdict: " << (r.pass ? "pass" : "fail") << " (" << r.theorem << ")\n";
    }
    return r.pass ? kPass : kFail;
  } catch (const ParseError& e) {
    return emit_error("parse error", e.what(), kUsage);
  } catch (const InvalidArgument& e) {
    return emit_error("invalid argument", e.what(), kUsage);
  } catch (const RingMismatch& e) {
    return emit_error("ring mismatch", e.what(), kUsage);
  } catch (const ResourceLimit& e) {
    return emit_error("resource limit", e.what(), kResource);
  } catch (const Overflow& e) {
    return emit_error("overflow", e.what(), kResource);
  } catch (const HypothesisViolation& e) {
    if (o.json) {
      json j{{"command", o.command}, {"verdict", "fail"}, {"theorem", nullptr}, {"reason", e.what()}};
      j["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      out << j.dump() << '\n';
    } else {
      out << "hypothesis not satisfied: " << e.what() << "\nverdict: fail\n";
    }
    return kFail;
  }
}

}  // namespace monreg::cli
