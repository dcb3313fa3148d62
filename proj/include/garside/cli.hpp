#ifndef GARSIDE_CLI_HPP
#define GARSIDE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace garside {

/// Dispatches one CLI invocation (args excludes the program name) and
/// writes results to out, diagnostics to err.
///
/// Subcommands: nf, eq, lcm, gcd, conj, centralizer, simples, to-artin,
/// verify.  The global --json flag switches output to a stable
/// machine-readable schema.
///
/// Exit status: 0 on success; eq uses 1 for "not equal"; any fault
/// (syntax, range, resource limits) is 2.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace garside

#endif
