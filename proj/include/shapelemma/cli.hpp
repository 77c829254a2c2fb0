#ifndef SHAPELEMMA_CLI_HPP
#define SHAPELEMMA_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

namespace shapelemma {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,       // bad arguments or unreadable input
  kExitParse = 2,       // malformed system
  kExitLibrary = 3,     // a precondition failed, or the work limit was hit
  kExitHypothesis = 4,  // theorem hypothesis fails, or the variety is infinite
  kExitViolation = 5,   // a verifier disagreed, or the fuzz suite failed
};

struct RunConfig {
  std::string command;
  std::string theorem;  // 1.1, 1.3, 1.4 or 5.6
  std::string path;     // "-" reads stdin
  std::string system;   // inline system text, instead of path
  bool json = false;
  int verbosity = 0;
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::string order = "lex";  // groebner
  std::string keep;           // eliminate: comma separated variables
  std::string point;          // multiplicity: x1..xn, comma separated
  std::string lambda = "0";   // fiber
};

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv and runs one command.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shapelemma

#endif
