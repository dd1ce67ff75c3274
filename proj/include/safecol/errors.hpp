#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace safecol {

/// Malformed input or a violated precondition of a public operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GraphErrorKind {
  kMalformed,          // bad ids, loops, duplicate edges or faces
  kMissingBoundaryEdge,
  kFaceCount,
  kEdgeCount,
  kEdgeFaceIncidence,
  kFan,
  kDisconnected,
};

const char* to_string(GraphErrorKind kind);

/// Raised by validate_near_triangulation; one kind per violated invariant.
class GraphError : public PreconditionError {
 public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : PreconditionError(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  GraphErrorKind kind() const { return kind_; }

 private:
  GraphErrorKind kind_;
};

/// The extension engine reached a state its case analysis says cannot occur.
/// Carries the stack of cases that were active when it happened.
class InternalInvariantError : public std::logic_error {
 public:
  InternalInvariantError(const std::string& what, std::vector<std::string> trace)
      : std::logic_error(what), trace_(std::move(trace)) {}
  const std::vector<std::string>& trace() const { return trace_; }

 private:
  std::vector<std::string> trace_;
};

}  // namespace safecol
