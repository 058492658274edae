#pragma once

#include <stdexcept>
#include <string>

namespace diagcover {

// Invalid input or violated precondition (bad parameters, element not in group, ...).
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A configured size limit would be exceeded; the computation was abandoned.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// gamma is undefined for cyclic groups: a generator lies in no proper subgroup.
class CyclicGroupError : public ValidationError {
public:
  CyclicGroupError() : ValidationError("cyclic group: no normal covering exists") {}
};

// A constructive certificate step produced something that does not verify.
class VerificationFailure : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace diagcover
