#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace straus::cli {

/// Process exit codes. Stable across versions.
enum class ExitCode : int {
  kOk = 0,
  kUsage = 2,           // bad arguments or input outside an operation's domain
  kCounterexample = 3,  // a prime without any witness, or a violated residue rule
  kIo = 4,
  kCorrespondence = 5,  // witness route and oracle disagree
};

/// Runs the tool with argv[1..] as `args`. Never throws; every failure maps to an
/// exit code with a message on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace straus::cli
