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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cmdefect/parser.hpp"
#include "cmdefect/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "cmdefect: dimension, depth, Cohen-Macaulay defect, Ext, grade, and "
      "Serre-type conditions for finitely presented graded modules"};

  std::string session_path;
  cmdefect::ExecutionOptions options;
  app.add_option("session", session_path, "session file (use - for stdin)")->required();
  app.add_flag("--json", options.json, "emit one JSON document per command");
  app.add_option("--threads", options.threads, "worker threads for corpus sweeps")
      ->default_val(1u)
      ->check(CLI::Range(1u, 256u));

  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (session_path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(session_path);
    if (!in) {
      std::cerr << "cannot open session file: " << session_path << "\n";
      return cmdefect::kExitEngineError;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  try {
    cmdefect::Session session = cmdefect::parse_session(text);
    return cmdefect::execute_session(session, options, std::cout);
  } catch (const cmdefect::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return cmdefect::kExitEngineError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cmdefect::kExitEngineError;
  }
}
