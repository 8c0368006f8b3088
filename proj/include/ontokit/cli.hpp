#ifndef ONTOKIT_CLI_HPP
#define ONTOKIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ontokit {

// The whole command-line front end, runnable in-process: `args` holds
// everything after the program name.  Results stream to `out`,
// diagnostics to `err`.  Returns the process exit code: 0 on success,
// 1 on validation or usage errors, 2 on parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ontokit

#endif
