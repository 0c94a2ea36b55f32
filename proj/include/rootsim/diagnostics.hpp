#pragma once

#include <exception>
#include <string>

namespace rootsim {

// Every misuse condition the runtime can detect dynamically.
enum class Diag {
  TooSmall,
  IntOutOfRange,
  NotImmediate,
  HeapExhausted,
  RuntimeReleased,
  StaleValue,
  NotABlock,
  IndexOutOfBounds,
  WrongTag,
  NotInnermostFrame,
  FrameContextMismatch,
  NotAClosure,
  UnregisteredRoot,
  AliasedRoots,
  NoCurrentRegion,
  NotCurrentRegion,
  RegionDisabled,
  SubRegionOrderViolation,
  AlreadyReleased,
  NotReleased,
  LockOrderViolation,
  NotReacquiredRegion,
  RegionContextMismatch,
  UnknownScenario,
};

const char* diag_name(Diag kind);

// Thrown when a dynamic check fails. `site` names the operation that
// detected the problem, so reports can say where a bug surfaced.
class Diagnostic : public std::exception {
public:
  Diagnostic(Diag kind, std::string site);

  Diag kind() const { return kind_; }
  const std::string& site() const { return site_; }
  const char* what() const noexcept override { return message_.c_str(); }

private:
  Diag kind_;
  std::string site_;
  std::string message_;
};

[[noreturn]] void raise(Diag kind, std::string site);

}  // namespace rootsim
