#ifndef CSISO_ERROR_HPP
#define CSISO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace csiso
{

// Input failed a structural check (bad table, non-normal series term, ...).
class ValidationError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// A caller broke an engine precondition (missing solvable witness,
// non-liftable pair, group too large for the configured cap, ...).
class ContractError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

} // namespace csiso

#endif // CSISO_ERROR_HPP
