#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "planesing/blowup/blowup.hpp"

namespace planesing::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kNoSolution = 2,
  kNonRational = 3,
  kDepthCap = 4,
  kInternal = 5,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Invocation {
  std::string command;
  std::string field = "q";
  std::vector<std::string> polys;
  std::optional<std::string> point;  // "a,b" (affine) or "a:b:c" (projective)
  int appendix_n = 0;
  int max_depth = kDefaultMaxDepth;
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
  bool dot = false;
  bool assume_irreducible = false;
  std::string help_text;  // command "help" only
};

// argv[0] is the program name.  Throws UsageError naming the offending
// flag or argument.
Invocation parse_args(const std::vector<std::string>& argv);

// "q", "p:N" with N a prime or prime power, or "p:N:m" with m a monic
// polynomial in z1 defining F_N[z1]/(m).
FieldPtr parse_field(const std::string& spec);

int run(const Invocation& inv, std::ostream& out, std::ostream& err);

// parse_args + run with usage errors reported on err.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace planesing::cli
