#pragma once

#include <stdexcept>

namespace qpalign {

/// Bad user input: unknown nucleotide, malformed FASTA, out-of-range parameter.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The requested instance exceeds an enumeration or simulation guard.
class InstanceTooLarge : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace qpalign
