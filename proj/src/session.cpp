/*
   Copyright 2026 cmdefect contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cmdefect/session.hpp"

#include <json.hpp>

#include <map>
#include <ostream>
#include <sstream>

#include "cmdefect/parser.hpp"

namespace cmdefect {

namespace {

using json = nlohmann::ordered_json;

struct LineLexer {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line;

  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, pos + 1); }

  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a token");
    return std::string(text.substr(start, pos - start));
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected an identifier");
    return std::string(text.substr(start, pos - start));
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  bool try_consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  std::string rest() {
    skip_ws();
    return std::string(text.substr(pos));
  }
};

Polynomial parse_poly_in_line(const std::string& text, const RingPtr& ring,
                              std::size_t session_line) {
  try {
    return parse_polynomial(text, ring);
  } catch (const ParseError& e) {
    throw ParseError(std::string("bad polynomial: ") + e.what(), session_line, 1);
  }
}

std::vector<std::string> split_top_level_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

long parse_long(LineLexer& lex, const std::string& what) {
  lex.skip_ws();
  std::size_t start = lex.pos;
  while (lex.pos < lex.text.size() && std::isdigit(static_cast<unsigned char>(lex.text[lex.pos])))
    ++lex.pos;
  if (start == lex.pos) lex.fail("expected a number for " + what);
  return std::stol(std::string(lex.text.substr(start, lex.pos - start)));
}

struct SymbolTable {
  std::map<std::string, CommandKind> kinds;  // declare_ideal or declare_module

  void declare(const std::string& name, CommandKind kind, LineLexer& lex) {
    if (name.empty()) lex.fail("empty name");
    if (kinds.count(name)) lex.fail("duplicate name '" + name + "'");
    kinds[name] = kind;
  }
  bool is_ideal(const std::string& name) const {
    auto it = kinds.find(name);
    return it != kinds.end() && it->second == CommandKind::declare_ideal;
  }
  bool is_module(const std::string& name) const {
    auto it = kinds.find(name);
    return it != kinds.end() && it->second == CommandKind::declare_module;
  }
  void require_known(const std::string& name, LineLexer& lex) const {
    if (!kinds.count(name)) lex.fail("reference to undeclared object '" + name + "'");
  }
  void require_ideal(const std::string& name, LineLexer& lex) const {
    require_known(name, lex);
    if (!is_ideal(name)) lex.fail("'" + name + "' is not an ideal");
  }
};

RingPtr parse_ring_line(LineLexer& lex) {
  // <Field>[v1,...,vk] <order>
  lex.skip_ws();
  std::string field_name;
  while (lex.pos < lex.text.size() && lex.text[lex.pos] != '[') {
    if (std::isspace(static_cast<unsigned char>(lex.text[lex.pos]))) break;
    field_name += lex.text[lex.pos++];
  }
  CoefficientField field = CoefficientField::rationals();
  if (field_name == "Q") {
    // rationals
  } else if (field_name.size() >= 2 && field_name[0] == 'F') {
    unsigned long p = 0;
    try {
      p = std::stoul(field_name.substr(1));
    } catch (...) {
      lex.fail("unsupported field '" + field_name + "'");
    }
    try {
      field = CoefficientField::prime_field(static_cast<std::uint32_t>(p));
    } catch (const std::invalid_argument& e) {
      lex.fail(e.what());
    }
  } else {
    lex.fail("unsupported field '" + field_name + "' (use Q or Fp)");
  }

  lex.expect('[');
  std::vector<std::string> vars;
  while (true) {
    vars.push_back(lex.identifier());
    if (lex.try_consume(']')) break;
    lex.expect(',');
  }
  if (vars.empty()) lex.fail("a ring needs at least one variable");

  MonomialOrder order;
  if (!lex.done()) {
    std::string kw = lex.word();
    if (kw == "lex")
      order.kind = OrderKind::lex;
    else if (kw == "grlex")
      order.kind = OrderKind::grlex;
    else if (kw == "grevlex")
      order.kind = OrderKind::grevlex;
    else
      lex.fail("unsupported order \"" + kw + "\"");
  }
  if (!lex.done()) lex.fail("trailing input after ring declaration");
  try {
    return make_ring(std::move(vars), field, order);
  } catch (const std::invalid_argument& e) {
    lex.fail(e.what());
  }
}

std::vector<std::vector<Polynomial>> parse_matrix(LineLexer& lex, const RingPtr& ring) {
  // [[p, p, ...], [ ... ], ...]
  lex.expect('[');
  std::vector<std::vector<Polynomial>> rows;
  while (true) {
    lex.expect('[');
    std::string row_text;
    int depth = 1;
    while (lex.pos < lex.text.size() && depth > 0) {
      char c = lex.text[lex.pos];
      if (c == '[') ++depth;
      if (c == ']') {
        --depth;
        if (depth == 0) break;
      }
      row_text += c;
      ++lex.pos;
    }
    if (depth != 0) lex.fail("unterminated matrix row");
    lex.expect(']');
    std::vector<Polynomial> row;
    for (auto& cell : split_top_level_commas(row_text)) {
      std::string trimmed = cell;
      if (trimmed.find_first_not_of(" \t") == std::string::npos)
        lex.fail("empty matrix entry");
      row.push_back(parse_poly_in_line(trimmed, ring, lex.line));
    }
    rows.push_back(std::move(row));
    if (lex.try_consume(']')) break;
    lex.expect(',');
  }
  if (!lex.done()) lex.fail("trailing input after matrix");
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) lex.fail("ragged matrix rows");
  return rows;
}

}  // namespace

Session parse_session(std::string_view text) {
  Session session;
  SymbolTable symbols;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line =
        end == std::string_view::npos ? text.substr(start) : text.substr(start, end - start);
    ++line_no;
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;

    // strip comments
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    LineLexer lex{line, 0, line_no};
    if (lex.done()) continue;

    std::string head = lex.word();
    SessionCommand cmd;
    cmd.line = line_no;

    if (head == "ring") {
      if (session.ring) lex.fail("ring already declared");
      session.ring = parse_ring_line(lex);
      cmd.kind = CommandKind::declare_ring;
      session.commands.push_back(std::move(cmd));
      continue;
    }
    if (!session.ring) lex.fail("declare a ring first");

    if (head == "ideal") {
      cmd.kind = CommandKind::declare_ideal;
      cmd.name = lex.identifier();
      lex.expect('=');
      for (auto& part : split_top_level_commas(lex.rest()))
        cmd.polys.push_back(parse_poly_in_line(part, session.ring, line_no));
      symbols.declare(cmd.name, CommandKind::declare_ideal, lex);
    } else if (head == "module") {
      cmd.kind = CommandKind::declare_module;
      cmd.name = lex.identifier();
      lex.expect('=');
      std::string kw = lex.word();
      if (kw != "coker") lex.fail("expected 'coker'");
      cmd.matrix = parse_matrix(lex, session.ring);
      symbols.declare(cmd.name, CommandKind::declare_module, lex);
    } else if (head == "compute") {
      cmd.kind = CommandKind::compute;
      cmd.name = lex.identifier();
      lex.expect('=');
      cmd.compute_op = lex.word();
      if (cmd.compute_op == "quotient") {
        cmd.arg1 = lex.identifier();
        symbols.require_ideal(cmd.arg1, lex);
        symbols.declare(cmd.name, CommandKind::declare_module, lex);
      } else if (cmd.compute_op == "intersect" || cmd.compute_op == "sum") {
        cmd.arg1 = lex.identifier();
        symbols.require_ideal(cmd.arg1, lex);
        cmd.arg2 = lex.identifier();
        symbols.require_ideal(cmd.arg2, lex);
        symbols.declare(cmd.name, CommandKind::declare_ideal, lex);
      } else if (cmd.compute_op == "power") {
        cmd.arg1 = lex.identifier();
        symbols.require_ideal(cmd.arg1, lex);
        long k = parse_long(lex, "exponent");
        if (k < 1) lex.fail("power exponent must be >= 1");
        cmd.power_exponent = static_cast<unsigned>(k);
        symbols.declare(cmd.name, CommandKind::declare_ideal, lex);
      } else {
        lex.fail("unknown compute operation '" + cmd.compute_op + "'");
      }
    } else if (head == "invariants" || head == "profile") {
      cmd.kind = head == "invariants" ? CommandKind::invariants : CommandKind::profile;
      cmd.name = lex.identifier();
      symbols.require_known(cmd.name, lex);
    } else if (head == "check") {
      cmd.kind = CommandKind::check;
      std::string prop = lex.word();
      std::optional<long> n, l;
      std::string tok;
      bool on_seen = false;
      while (!lex.done()) {
        tok = lex.word();
        if (tok == "on") {
          on_seen = true;
          cmd.name = lex.identifier();
          symbols.require_known(cmd.name, lex);
        } else if (tok.rfind("n=", 0) == 0) {
          n = std::stol(tok.substr(2));
        } else if (tok.rfind("l=", 0) == 0) {
          l = std::stol(tok.substr(2));
        } else if (tok == "--expect") {
          std::string want = lex.word();
          if (want == "yes")
            cmd.expect = Answer::yes;
          else if (want == "no")
            cmd.expect = Answer::no;
          else
            lex.fail("--expect takes yes or no");
        } else {
          lex.fail("unexpected token '" + tok + "' in check");
        }
      }
      if (!on_seen) lex.fail("check needs 'on NAME'");
      if (prop == "Sn")
        cmd.query = PropertyQuery{PropertyKind::Sn, n, std::nullopt};
      else if (prop == "Cn")
        cmd.query = PropertyQuery{PropertyKind::Cn, n, std::nullopt};
      else if (prop == "Cnl")
        cmd.query = PropertyQuery{PropertyKind::Cnl, n, l};
      else if (prop == "Snl")
        cmd.query = PropertyQuery{PropertyKind::Snl, n, l};
      else if (prop == "acm")
        cmd.query = PropertyQuery::almost_cm_query();
      else
        lex.fail("unknown property '" + prop + "'");
      try {
        cmd.query.validate();
      } catch (const std::invalid_argument& e) {
        lex.fail(e.what());
      }
    } else if (head == "corpus") {
      cmd.kind = CommandKind::corpus_verify;
      bool verify_seen = false;
      while (!lex.done()) {
        std::string tok = lex.word();
        if (tok == "verify")
          verify_seen = true;
        else if (tok.rfind("seed=", 0) == 0)
          cmd.corpus_spec.seed = std::stoull(tok.substr(5));
        else if (tok.rfind("vars=", 0) == 0)
          cmd.corpus_spec.variable_count = static_cast<unsigned>(std::stoul(tok.substr(5)));
        else if (tok.rfind("count=", 0) == 0)
          cmd.corpus_spec.instance_count = static_cast<unsigned>(std::stoul(tok.substr(6)));
        else if (tok.rfind("maxdeg=", 0) == 0)
          cmd.corpus_spec.max_degree = static_cast<unsigned>(std::stoul(tok.substr(7)));
        else if (tok.rfind("gens=", 0) == 0)
          cmd.corpus_spec.generator_count = static_cast<unsigned>(std::stoul(tok.substr(5)));
        else
          lex.fail("unknown corpus option '" + tok + "'");
      }
      if (!verify_seen) lex.fail("corpus currently supports only 'verify'");
      try {
        cmd.corpus_spec.validate();
      } catch (const std::invalid_argument& e) {
        lex.fail(e.what());
      }
    } else {
      lex.fail("unknown command '" + head + "'");
    }
    session.commands.push_back(std::move(cmd));
  }
  if (!session.ring) throw ParseError("session declares no ring", 1, 1);
  return session;
}

namespace {

json extended_to_json(const ExtendedInt& v) {
  if (v.is_plus_infinity()) return "+inf";
  if (v.is_minus_infinity()) return "-inf";
  return v.value();
}

json profile_to_json(const LocalProfile& p) {
  json j;
  j["prime"] = p.prime_label;
  j["height"] = extended_to_json(p.height);
  j["dim"] = extended_to_json(p.dim_local);
  j["depth"] = extended_to_json(p.depth_local);
  j["cmd"] = p.cmd_local;
  j["in_support"] = p.in_support;
  return j;
}

std::string profile_to_text(const LocalProfile& p) {
  std::ostringstream os;
  os << p.prime_label << ": ht=" << p.height.to_string();
  if (p.in_support)
    os << " dim=" << p.dim_local.to_string() << " depth=" << p.depth_local.to_string()
       << " cmd=" << p.cmd_local;
  else
    os << " not in support (depth=+inf, cmd=0)";
  return os.str();
}

struct Environment {
  RingPtr ring;
  std::map<std::string, Ideal> ideals;
  std::map<std::string, PresentedModule> modules;

  const PresentedModule& module_view(const std::string& name) {
    auto mit = modules.find(name);
    if (mit != modules.end()) return mit->second;
    auto iit = ideals.find(name);
    if (iit == ideals.end()) throw std::runtime_error("unknown object '" + name + "'");
    // an ideal used as a module means its cyclic quotient R/I
    auto [it, inserted] =
        modules.emplace("R/" + name, PresentedModule::cyclic(iit->second, "R/" + name));
    return it->second;
  }
};

}  // namespace

int execute_session(const Session& session, const ExecutionOptions& options, std::ostream& out) {
  Environment env;
  env.ring = session.ring;
  bool expectation_failed = false;

  for (const auto& cmd : session.commands) {
    try {
      json j;
      std::ostringstream text;
      switch (cmd.kind) {
        case CommandKind::declare_ring: {
          j["command"] = "ring";
          j["variables"] = session.ring->variables();
          j["field"] = session.ring->field().kind() == FieldKind::rationals
                           ? "Q"
                           : "F" + std::to_string(session.ring->field().characteristic());
          text << "ring with variables";
          for (const auto& v : session.ring->variables()) text << " " << v;
          break;
        }
        case CommandKind::declare_ideal: {
          env.ideals.emplace(cmd.name, Ideal(session.ring, cmd.polys));
          j["command"] = "ideal";
          j["name"] = cmd.name;
          j["generators"] = cmd.polys.size();
          text << "ideal " << cmd.name << " with " << cmd.polys.size() << " generators";
          break;
        }
        case CommandKind::declare_module: {
          const std::size_t rows = cmd.matrix.size();
          const std::size_t cols = rows ? cmd.matrix[0].size() : 0;
          GradedFreeModule target = GradedFreeModule::free_of_rank(session.ring, rows);
          std::vector<long> src_degs(cols, 0);
          for (std::size_t c = 0; c < cols; ++c) {
            for (std::size_t r = 0; r < rows; ++r) {
              if (cmd.matrix[r][c].is_zero()) continue;
              auto d = cmd.matrix[r][c].homogeneous_degree();
              if (!d)
                throw std::runtime_error("matrix entry is not homogeneous in module '" +
                                         cmd.name + "'");
              src_degs[c] = static_cast<long>(*d);
              break;
            }
          }
          GradedFreeModule source(session.ring, std::move(src_degs));
          env.modules.emplace(cmd.name,
                              PresentedModule(ModuleMap(source, target, cmd.matrix), cmd.name));
          j["command"] = "module";
          j["name"] = cmd.name;
          j["rows"] = rows;
          j["cols"] = cols;
          text << "module " << cmd.name << " = coker of a " << rows << "x" << cols << " matrix";
          break;
        }
        case CommandKind::compute: {
          j["command"] = "compute";
          j["name"] = cmd.name;
          j["op"] = cmd.compute_op;
          if (cmd.compute_op == "quotient") {
            env.modules.emplace(cmd.name,
                                PresentedModule::cyclic(env.ideals.at(cmd.arg1), cmd.name));
            text << "module " << cmd.name << " = R/" << cmd.arg1;
          } else if (cmd.compute_op == "intersect") {
            env.ideals.emplace(cmd.name,
                               ideal_intersection(env.ideals.at(cmd.arg1),
                                                  env.ideals.at(cmd.arg2)));
            text << "ideal " << cmd.name << " = " << cmd.arg1 << " ∩ " << cmd.arg2;
          } else if (cmd.compute_op == "sum") {
            env.ideals.emplace(cmd.name,
                               ideal_sum(env.ideals.at(cmd.arg1), env.ideals.at(cmd.arg2)));
            text << "ideal " << cmd.name << " = " << cmd.arg1 << " + " << cmd.arg2;
          } else {
            env.ideals.emplace(cmd.name,
                               ideal_power(env.ideals.at(cmd.arg1), cmd.power_exponent));
            text << "ideal " << cmd.name << " = " << cmd.arg1 << "^" << cmd.power_exponent;
          }
          if (auto it = env.ideals.find(cmd.name); it != env.ideals.end())
            j["generators"] = it->second.generators().size();
          break;
        }
        case CommandKind::invariants: {
          const PresentedModule& M = env.module_view(cmd.name);
          j["command"] = "invariants";
          j["target"] = cmd.name;
          j["dim"] = extended_to_json(module_dimension(M));
          j["depth"] = extended_to_json(module_depth_graded(M));
          j["cmd"] = cm_defect(M);
          j["pd"] = M.is_zero() ? json("-inf") : json(projective_dimension(M));
          j["almost_cm"] = almost_cm(M);
          text << "invariants " << cmd.name << ": dim=" << module_dimension(M).to_string()
               << " depth=" << module_depth_graded(M).to_string() << " cmd=" << cm_defect(M)
               << (almost_cm(M) ? " (almost CM)" : "");
          break;
        }
        case CommandKind::profile: {
          const PresentedModule& M = env.module_view(cmd.name);
          const auto& rows = exhaustive_monomial_report(M);
          j["command"] = "profile";
          j["target"] = cmd.name;
          j["rows"] = json::array();
          text << "profile " << cmd.name << " (" << rows.size() << " monomial primes)";
          for (const auto& p : rows) {
            j["rows"].push_back(profile_to_json(p));
            text << "\n  " << profile_to_text(p);
          }
          break;
        }
        case CommandKind::check: {
          const PresentedModule& M = env.module_view(cmd.name);
          PropertyVerdict v = check_condition(M, cmd.query);
          j["command"] = "check";
          j["property"] = cmd.query.name();
          if (cmd.query.n) j["n"] = *cmd.query.n;
          if (cmd.query.l) j["l"] = *cmd.query.l;
          j["target"] = cmd.name;
          j["answer"] = answer_to_string(v.answer);
          if (v.witness) {
            j["witness"] = v.witness->prime_label;
            j["certificate_prime"] = v.witness->prime_label;
            j["profile"] = profile_to_json(*v.witness);
          }
          if (v.chain) j["chain"] = yes_reason_to_string(*v.chain);
          j["justification"] = v.note;
          text << "check " << cmd.query.name();
          if (cmd.query.n) text << " n=" << *cmd.query.n;
          if (cmd.query.l) text << " l=" << *cmd.query.l;
          text << " on " << cmd.name << ": " << answer_to_string(v.answer);
          if (v.witness) text << " (witness " << v.witness->prime_label << ")";
          if (cmd.expect && v.answer != *cmd.expect) {
            expectation_failed = true;
            j["expected"] = answer_to_string(*cmd.expect);
            text << " [expected " << answer_to_string(*cmd.expect) << "]";
          }
          break;
        }
        case CommandKind::corpus_verify: {
          auto reports =
              verify_corpus_statements(cmd.corpus_spec, VerifyBounds{}, options.threads);
          unsigned long bad = 0;
          j["command"] = "corpus";
          j["seed"] = cmd.corpus_spec.seed;
          j["vars"] = cmd.corpus_spec.variable_count;
          j["count"] = cmd.corpus_spec.instance_count;
          j["statements"] = reports.size();
          j["reports"] = json::array();
          for (const auto& rep : reports) {
            bad += rep.counterexamples.size();
            json jr;
            jr["id"] = rep.statement_id;
            jr["instances"] = rep.instances_checked;
            jr["counterexamples"] = rep.counterexamples;
            j["reports"].push_back(std::move(jr));
          }
          j["counterexamples"] = bad;
          text << "corpus verify seed=" << cmd.corpus_spec.seed << ": " << reports.size()
               << " statements, " << bad << " counterexamples";
          for (const auto& rep : reports)
            text << "\n  " << (rep.passed() ? "pass" : "FAIL") << " " << rep.statement_id << " ("
                 << rep.instances_checked << " instances)";
          break;
        }
      }
      if (options.json)
        out << j.dump() << "\n";
      else
        out << text.str() << "\n";
    } catch (const std::exception& e) {
      if (options.json) {
        json j;
        j["command"] = "error";
        j["line"] = cmd.line;
        j["message"] = e.what();
        out << j.dump() << "\n";
      } else {
        out << "error at line " << cmd.line << ": " << e.what() << "\n";
      }
      return kExitEngineError;
    }
  }
  return expectation_failed ? kExitExpectationFailed : kExitOk;
}

}  // namespace cmdefect
