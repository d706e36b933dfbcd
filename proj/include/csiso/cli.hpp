#ifndef CSISO_CLI_HPP
#define CSISO_CLI_HPP

#include <iosfwd>

namespace csiso
{

// Exit codes: 0 ok, 1 usage or I/O, 2 validation failure, 3 engine contract
// violation.
int run_cli(int argc, char const *const *argv, std::ostream &out,
            std::ostream &err);

} // namespace csiso

#endif // CSISO_CLI_HPP
