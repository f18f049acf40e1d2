#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace antlab {

/// Bad parameters to a construction or operation (k out of range, trivial rule word, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed input text (rule words, antpat files, catalog JSON).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A simulation outgrew its configured nonzero-cell cap.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, std::uint64_t step)
      : std::runtime_error(what), step_(step) {}
  std::uint64_t step() const noexcept { return step_; }

 private:
  std::uint64_t step_;
};

/// The ant walked off a pattern's support. `step_index` is 1-based: the step whose move
/// landed outside.
class OutOfSupportError : public std::runtime_error {
 public:
  explicit OutOfSupportError(std::uint64_t step_index)
      : std::runtime_error("ant left the pattern support at step " + std::to_string(step_index)),
        step_index_(step_index) {}
  std::uint64_t step_index() const noexcept { return step_index_; }

 private:
  std::uint64_t step_index_;
};

/// extract_candidate found the ant back where it started: not a highway.
class DegenerateDriftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction produced something that does not verify. Always a bug or corrupt
/// fixture data, never a user error.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Mining ran through its run budget without finding what was asked for.
class MiningBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Widget recovery from mined instances found no consistent decomposition.
class RecoveryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace antlab
