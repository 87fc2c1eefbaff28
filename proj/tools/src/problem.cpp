#include "monreg_cli/problem.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace monreg::cli {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  std::size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

VarIndex lookup(const RingContext& ring, std::string_view name) {
  auto idx = ring.find(std::string(name));
  if (!idx) throw InvalidArgument("undeclared variable '" + std::string(name) + "'");
  return *idx;
}

// Rethrows library argument errors with the line number attached.
template <class F>
auto at_line(std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

const NamedForm& ProblemFile::form(std::string_view id) const {
  for (const NamedForm& f : forms) {
    if (f.id == id) return f;
  }
  throw InvalidArgument("no form named '" + std::string(id) + "'");
}

Monomial parse_monomial(const RingContext& ring, std::string_view token) {
  token = trim(token);
  std::vector<Exponent> exps(ring.size(), 0);
  if (token == "1") return Monomial(std::move(exps));
  if (token.empty()) throw InvalidArgument("empty monomial");
  std::size_t start = 0;
  while (start <= token.size()) {
    std::size_t star = token.find('*', start);
    std::string_view factor = token.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
    if (factor.empty()) throw InvalidArgument("malformed monomial '" + std::string(token) + "'");
    std::size_t caret = factor.find('^');
    Exponent power = 1;
    if (caret != std::string_view::npos) {
      std::string_view digits = factor.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), power);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || power == 0)
        throw InvalidArgument("malformed exponent in '" + std::string(token) + "'");
      factor = factor.substr(0, caret);
    }
    if (!RingContext::valid_name(std::string(factor)))
      throw InvalidArgument("malformed monomial '" + std::string(token) + "'");
    VarIndex v = lookup(ring, factor);
    if (exps[v] > UINT32_MAX - power) throw Overflow("exponent overflow in '" + std::string(token) + "'");
    exps[v] += power;
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return Monomial(std::move(exps));
}

LinearSum parse_linear_sum(const RingContext& ring, std::string_view text) {
  std::vector<VarIndex> vars;
  std::size_t start = 0;
  while (true) {
    std::size_t plus = text.find('+', start);
    std::string_view term = trim(text.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start));
    if (term.empty() || !RingContext::valid_name(std::string(term)))
      throw InvalidArgument("malformed linear sum '" + std::string(trim(text)) + "'");
    vars.push_back(lookup(ring, term));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return LinearSum(std::move(vars));
}

ProblemFile parse_problem(std::string_view text) {
  std::optional<RingContext> ring;
  std::optional<std::vector<VarIndex>> order;
  std::optional<std::vector<Monomial>> gens;
  std::vector<NamedForm> forms;
  std::set<std::string> form_ids;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view content = raw;
    content = trim(content.substr(0, content.find('#')));
    if (content.empty()) continue;
    std::size_t colon = content.find(':');
    if (colon == std::string_view::npos) throw ParseError(line, "expected '<header>: ...'");
    std::vector<std::string> head = tokens(content.substr(0, colon));
    std::string_view body = content.substr(colon + 1);
    if (head.empty()) throw ParseError(line, "missing header before ':'");
    const std::string& key = head[0];
    if (key == "ring") {
      if (head.size() != 1) throw ParseError(line, "malformed ring header");
      if (ring) throw ParseError(line, "ring declared twice");
      ring = at_line(line, [&] { return RingContext(tokens(body)); });
      continue;
    }
    if (!ring) throw ParseError(line, "'" + key + "' before the ring declaration");
    if (key == "order") {
      if (head.size() != 1) throw ParseError(line, "malformed order header");
      if (order) throw ParseError(line, "order declared twice");
      std::vector<std::string> words = tokens(body);
      if (words.empty() || words[0] != "lex") throw ParseError(line, "only 'lex' orders are supported");
      std::vector<VarIndex> lead;
      for (std::size_t i = 1; i < words.size(); ++i) {
        VarIndex v = at_line(line, [&] { return lookup(*ring, words[i]); });
        if (std::find(lead.begin(), lead.end(), v) != lead.end())
          throw ParseError(line, "duplicate name '" + words[i] + "' in order");
        lead.push_back(v);
      }
      order = std::move(lead);
    } else if (key == "ideal") {
      if (head.size() != 1) throw ParseError(line, "malformed ideal header");
      if (!gens) gens.emplace();
      for (const std::string& tok : tokens(body)) {
        gens->push_back(at_line(line, [&] { return parse_monomial(*ring, tok); }));
      }
    } else if (key == "form") {
      if (head.size() != 2 || !RingContext::valid_name(head[1])) throw ParseError(line, "expected 'form <id>:'");
      if (!form_ids.insert(head[1]).second) throw ParseError(line, "duplicate form '" + head[1] + "'");
      forms.push_back({head[1], at_line(line, [&] { return parse_linear_sum(*ring, body); })});
    } else {
      throw ParseError(line, "unknown header '" + key + "'");
    }
  }
  if (!ring) throw ParseError(line, "missing ring declaration");
  if (!gens) throw ParseError(line, "missing ideal declaration");
  const std::size_t n = ring->size();
  TermOrder resolved = order ? TermOrder::lex_leading(n, *order) : TermOrder::lex(n);
  return ProblemFile{std::move(*ring), order.has_value(), std::move(resolved), MonomialIdeal(n, std::move(*gens)),
                     std::move(forms)};
}

ProblemFile read_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string to_text(const ProblemFile& problem) {
  const RingContext& ring = problem.ring;
  std::string out = "ring:";
  for (const std::string& name : ring.names()) out += " " + name;
  out += "\n";
  if (problem.order_declared) out += "order: " + problem.order.to_string(ring) + "\n";
  out += "ideal:";
  for (const Monomial& g : problem.ideal.generators()) out += " " + g.to_string(ring);
  out += "\n";
  for (const NamedForm& f : problem.forms) out += "form " + f.id + ": " + f.sum.to_string(ring) + "\n";
  return out;
}

}  // namespace monreg::cli
