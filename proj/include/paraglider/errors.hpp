#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace paraglider {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Graph text format problems. line is 1-based, 0 when not tied to a line.
struct ParseError : Error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : Error("parse error (line " + std::to_string(line_no) + "): " + msg), line(line_no) {}
};

// An exact computation was asked to exceed its size cap.
struct SizeExceededError : Error {
  std::string invariant;
  int n;
  int cap;
  SizeExceededError(std::string inv, int n_, int cap_)
      : Error("size exceeded for " + inv + ": n=" + std::to_string(n_) +
              " cap=" + std::to_string(cap_)),
        invariant(std::move(inv)), n(n_), cap(cap_) {}
};

// Input failed a class predicate that an operation requires.
struct NotInClassError : Error {
  std::string predicate;           // the predicate that failed
  std::vector<int> witness;        // offending vertices, possibly empty
  NotInClassError(std::string pred, std::vector<int> wit, const std::string& msg)
      : Error(msg), predicate(std::move(pred)), witness(std::move(wit)) {}
};

// A forbidden induced subgraph was found where the class forbids one.
struct ClassViolationError : Error {
  std::string pattern;             // name of the forbidden pattern
  std::vector<int> witness;        // host vertices inducing it
  ClassViolationError(std::string pat, std::vector<int> wit)
      : Error("forbidden induced " + pat + " found"), pattern(std::move(pat)),
        witness(std::move(wit)) {}
};

// Decomposition met a neighborhood no class member can produce.
struct MalformedStructureError : Error {
  using Error::Error;
};

// A constructed object failed its own validity check. Always a bug.
struct InternalContradictionError : Error {
  using Error::Error;
};

// Rejection sampling ran out of retries.
struct GenerationExhaustedError : Error {
  using Error::Error;
};

}  // namespace paraglider
