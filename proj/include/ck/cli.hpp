#pragma once
// Command-line driver: subcommand dispatch, JSON and table rendering, and
// streaming classification of filling records.

#include <iosfwd>

namespace ck {

// Exit codes: 0 success, 1 usage error, 2 malformed input data. The stream
// overload exists for in-process testing; `in` feeds the census subcommand.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace ck
