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

#pragma once

#include <iosfwd>

#include "cmdefect/corpus.hpp"

namespace cmdefect {

enum class CommandKind {
  declare_ring,
  declare_ideal,
  declare_module,
  compute,
  invariants,
  profile,
  check,
  corpus_verify,
};

struct SessionCommand {
  CommandKind kind;
  std::size_t line = 0;
  std::string name;  // declared name, or the target for invariants/profile/check

  std::vector<Polynomial> polys;                  // ideal generators
  std::vector<std::vector<Polynomial>> matrix;    // module presentation rows

  std::string compute_op;  // quotient | intersect | power | sum
  std::string arg1, arg2;
  unsigned power_exponent = 1;

  PropertyQuery query{PropertyKind::Sn, std::nullopt, std::nullopt};
  std::optional<Answer> expect;

  CorpusSpec corpus_spec;
};

/// Parsed batch session: one ring declaration, then named ideals/modules and
/// commands executed top to bottom. Names are unique and every reference is
/// resolved at parse time.
struct Session {
  RingPtr ring;
  std::vector<SessionCommand> commands;
};

Session parse_session(std::string_view text);

struct ExecutionOptions {
  bool json = false;
  unsigned threads = 1;
};

constexpr int kExitOk = 0;
constexpr int kExitExpectationFailed = 1;
constexpr int kExitEngineError = 2;

/// Runs the session, writing one report (JSON document or text block) per
/// command. Exit code: 0 on success, 1 when a --expect clause failed, 2 on an
/// engine error (reported with the offending command).
int execute_session(const Session& session, const ExecutionOptions& options, std::ostream& out);

}  // namespace cmdefect
