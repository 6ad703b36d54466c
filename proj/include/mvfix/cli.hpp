#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "mvfix/scenario.hpp"

namespace mvfix::cli {

enum class Command { Reduce, Verify, Chain, Iterate, Chainability };

std::optional<Command> parseCommand(std::string_view name);

struct Flags {
  std::optional<std::string> from;
  std::optional<std::string> to;
  std::optional<std::string> start;
  bool local = false;        // iterate: use localIterate with the derived certificate
  std::size_t maxIter = 1000;
};

/// Runs one command and returns the process exit code:
/// 0 success, 1 parse/schema, 2 validation, 3 runtime, 4 verification failure.
/// Artifacts go to `out`, one-line diagnostics to `err`.
int run(Command command, const Scenario& scenario, const Flags& flags, std::ostream& out,
        std::ostream& err);

/// Loads the scenario file and runs; maps scenario errors to exit codes too.
int runFile(Command command, const std::string& scenarioPath, const Flags& flags,
            std::ostream& out, std::ostream& err);

}  // namespace mvfix::cli
