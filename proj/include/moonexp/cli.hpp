#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "moonexp/monster.hpp"

namespace moonexp {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum ExitCode { kPass = 0, kMismatch = 1, kUsage = 2, kInternal = 3 };

struct RunConfig {
  std::string command;
  std::vector<std::int64_t> primes;
  std::int64_t prec = 20;
  std::int64_t window = 60;
  std::int64_t K = 4;
  std::string format = "text";
  std::string out;
  bool allow_large_primes = false;
  // series only
  std::string name = "j1";
  std::int64_t level = 2;
};

// "2..71", "5,7,11" or "13". Every listed value must be prime; a range keeps
// the primes it contains. Throws UsageError.
std::vector<std::int64_t> parse_prime_spec(const std::string& spec);

// Serialises verification reports as json, csv or text. Output depends only
// on the reports and the echoed config. Throws UsageError on an unknown
// format.
std::string render_report(const std::vector<PrimeReport>& reports, const std::string& format,
                          const RunConfig& config);

// Entry point of the command-line tool; args excludes the program name.
// Returns an ExitCode.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moonexp
