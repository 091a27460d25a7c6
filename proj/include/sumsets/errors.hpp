#pragma once

#include <stdexcept>
#include <string>

namespace sumsets {

// Error taxonomy shared by the whole library.  The CLI maps kinds onto
// exit codes: Usage/Parse -> 2, everything else -> 1.
enum class ErrorKind {
  Parse,         // malformed group/set/witness text
  Domain,        // value outside its domain (wrong group, empty operand, ...)
  Precondition,  // a theorem hypothesis does not hold for the given input
  Contract,      // caller violated an operation contract (budgets, shapes)
  Resource,      // a configured cap was exceeded
  Usage,         // bad command line
  Internal,      // invariant violation; indicates a bug, surfaced loudly
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

  const char* kind_name() const noexcept {
    switch (kind_) {
      case ErrorKind::Parse: return "parse";
      case ErrorKind::Domain: return "domain";
      case ErrorKind::Precondition: return "precondition";
      case ErrorKind::Contract: return "contract";
      case ErrorKind::Resource: return "resource";
      case ErrorKind::Usage: return "usage";
      case ErrorKind::Internal: return "internal";
    }
    return "unknown";
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_parse(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }
[[noreturn]] inline void throw_domain(const std::string& msg) { throw Error(ErrorKind::Domain, msg); }
[[noreturn]] inline void throw_precondition(const std::string& msg) { throw Error(ErrorKind::Precondition, msg); }
[[noreturn]] inline void throw_contract(const std::string& msg) { throw Error(ErrorKind::Contract, msg); }
[[noreturn]] inline void throw_resource(const std::string& msg) { throw Error(ErrorKind::Resource, msg); }
[[noreturn]] inline void throw_usage(const std::string& msg) { throw Error(ErrorKind::Usage, msg); }
[[noreturn]] inline void throw_internal(const std::string& msg) { throw Error(ErrorKind::Internal, msg); }

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) throw Error(kind, msg);
}

}  // namespace sumsets
