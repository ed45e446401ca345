#pragma once

#include <stdexcept>
#include <string>

namespace blc {

// Error taxonomy shared by every component. The CLI maps these to exit codes.
enum class Errc {
  Parse,
  Sort,
  Schema,
  Type,
  UnboundVariable,
  NamespaceClash,
  NameCollision,
  Dialect,
  PremiseMismatch,
  SortMismatch,
  RuleViolation,
  SortClash,
  MissingAssignment,
  DualFailure,
  Fuel,
  Usage,
};

struct Error : std::runtime_error {
  Errc code;
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

const char* errc_name(Errc c);

}  // namespace blc
