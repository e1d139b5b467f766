#pragma once

#include <stdexcept>
#include <string>

namespace bucolic {

// Machine-readable reason attached to every library error.  The C API maps
// these one-to-one onto status codes.
enum class error_code {
    invalid_argument,   // malformed input value (bad vertex id, empty set, ...)
    parse_error,        // unreadable graph/document text
    disconnected,       // operation requires a connected graph
    precondition,       // named structural precondition does not hold
    bound_exceeded,     // exact search refused: instance above the hard bound
    budget_exceeded,    // iterative construction stopped at its growth budget
    cap_exceeded,       // enumeration stopped at its hard cap
    not_automorphism,   // supplied map is not an automorphism of the graph
    internal,           // invariant violated inside the library (a bug)
};

const char* to_string(error_code code);

class error : public std::runtime_error {
  public:
    error(error_code code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    error_code code() const noexcept { return code_; }

  private:
    error_code code_;
};

[[noreturn]] inline void fail(error_code code, const std::string& message) {
    throw error(code, message);
}

}  // namespace bucolic
