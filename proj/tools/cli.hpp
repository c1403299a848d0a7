// Command-line front end: gen, analyze, power, tables.
//
// Exit codes: 0 success, 2 usage or parameter error, 3 data, parse or I/O
// error.

#ifndef BTCPROF_TOOLS_CLI_HPP_
#define BTCPROF_TOOLS_CLI_HPP_

#include <iosfwd>

namespace btcprof::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool color = false;  // emphasis in table output
};

int run(int argc, const char* const* argv, const Streams& io);

}  // namespace btcprof::cli

#endif  // BTCPROF_TOOLS_CLI_HPP_
