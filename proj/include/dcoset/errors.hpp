#ifndef DCOSET_ERRORS_HPP
#define DCOSET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dcoset {

// Vector lengths disagree with the ambient rank or the number of weights.
class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A catalogue pair, appendix case or partition with out-of-range parameters.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Precondition of is_irreducible: the vector is not a relation.
class NotInvariant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Precondition of is_irreducible: the zero relation has no irreducibility.
class ZeroRelation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The Hilbert basis completion exceeded its node budget.
class ComputationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A catalogue entry whose dimension bookkeeping does not add up.
class AuditFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed input files or option strings.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace dcoset

#endif  // DCOSET_ERRORS_HPP
