#pragma once

#include <stdexcept>
#include <string>

namespace optb {

// Every failure mode the library reports. CLI maps all of these to exit
// code 1; tests match on the kind.
enum class ErrorKind {
    BadWord,             // malformed twist-word text or explicit zero exponent
    BadParameters,       // monodromy-type invariant violated, bad family index, ...
    Overflow,            // 64-bit exact arithmetic would wrap
    NotALensSpace,       // gcd(m, n) != 1
    UnsupportedSlope,    // binding surgery with p <= 1
    InvalidSlope,        // gcd(p, q) != 1 or q == 0
    NonPrime,            // prime-only operation fed a composite
    HypothesisViolation, // decider fed composite |H1| without override
    BoundExceeded,       // brute-force oracle asked to exceed its budget
    InternalConsistency, // cross-check failed; a library bug, not a user error
    BadScanFile,         // scan store header/format mismatch
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

} // namespace optb
