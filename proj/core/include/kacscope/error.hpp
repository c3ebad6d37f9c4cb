#pragma once

#include <stdexcept>
#include <string>

namespace kacscope {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: bad diagram spec, bad Kac string, bad subset.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A subgraph that is not a disjoint union of finite-type diagrams.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

// Raised when a scan finds f < 0; carries the offending diagram and subset.
class VerificationFailure : public Error {
 public:
  VerificationFailure(std::string spec, unsigned zero_set, long long f)
      : Error("counterexample on " + spec + ": f = " + std::to_string(f)),
        spec_(std::move(spec)),
        zero_set_(zero_set),
        f_(f) {}

  const std::string& spec() const noexcept { return spec_; }
  unsigned zero_set() const noexcept { return zero_set_; }
  long long f() const noexcept { return f_; }

 private:
  std::string spec_;
  unsigned zero_set_;
  long long f_;
};

// A reduction move requested on a configuration it does not apply to.
class ReductionError : public Error {
 public:
  using Error::Error;
};

}  // namespace kacscope
