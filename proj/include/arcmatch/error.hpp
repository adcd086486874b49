#pragma once

#include <stdexcept>
#include <string>

namespace arcmatch {

// Every failure the library can signal. Parsing and validation errors come
// from user input; the remaining kinds indicate misuse of an internal
// contract and are bugs when seen in production.
enum class ErrorKind {
  LengthMismatch,        // base line and structure line differ in length
  UnbalancedStructure,   // ')' without '(' or unmatched '(' at end
  InvalidStructureChar,  // structure line contains other than '(' ')' '.'
  InvalidBase,           // base line contains a reserved or unprintable symbol
  SharedEndpoint,        // two arcs touch the same position
  CrossingArcs,          // arcs overlap without nesting
  OutOfRange,            // position outside [1, |S|] or query out of bounds
  MissingRootArc,        // tree construction requires an arc spanning [1, n]
  PreconditionViolated,  // primitive called outside its stated precondition
  IntervalMismatch,      // sequence intervals do not line up
  InvalidSequence,       // values violate the monotone staircase shape
  MalformedEncoding,     // compressed payload fails structural checks
  NotEnoughOnes,         // select(k) with k greater than total ones
  InstanceTooLarge,      // reference oracle refused an oversized instance
  IoFailure,             // file could not be opened or read
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        message_(message) {}

  ErrorKind kind() const { return kind_; }
  // The message without the kind prefix, for wrapping into richer context.
  const std::string& message() const { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace arcmatch
