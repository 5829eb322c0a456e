#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace esg {

// Runs one esgame command line (args excludes the program name).
// Exit codes: 0 success, 1 counterexample / refutation / runtime failure,
// 2 usage error.
int cli_dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                 std::ostream& err);

// Blocks serving the HTTP API; defined in server.cpp.
int run_server(const std::string& host, int port, const std::string& data_dir, std::ostream& log);

}  // namespace esg
