#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twotree {

enum class ErrorKind {
  InvalidConstruction,
  OutOfRange,
  ForeignEdge,
  NotTwoTree,
  InvalidTree,
  IllegalSplit,
  CyclicRequirement,
  TooLarge,
  IsBook,
  AlreadyTwoSimplicial,
  BadGlue,
  Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class NotTwoTreeReason {
  WrongEdgeCount,
  Disconnected,
  NoDegree2Simplicial,
  NonAdjacentNeighbors,
};

std::string_view to_string(NotTwoTreeReason reason);

class NotTwoTreeError : public Error {
 public:
  explicit NotTwoTreeError(NotTwoTreeReason reason, const std::string& detail = {})
      : Error(ErrorKind::NotTwoTree,
              std::string(to_string(reason)) + (detail.empty() ? "" : " (" + detail + ")")),
        reason_(reason) {}

  NotTwoTreeReason reason() const noexcept { return reason_; }

 private:
  NotTwoTreeReason reason_;
};

}  // namespace twotree
