#pragma once

#include <stdexcept>
#include <string>

namespace pcsf {

/// Malformed instance data (self-loop, negative cost, bad reference, ...).
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input that does not parse; carries the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A source-to-sink path of all-infinite capacity.
class UnboundedFlowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Static coloring admits no dynamic coloring; carries the witnessing
/// max-flow value and the total duration it fell short of.
class ColoringInvalidError : public std::runtime_error {
 public:
  ColoringInvalidError(std::string flow_value, std::string total_duration)
      : std::runtime_error("invalid static coloring: max-flow " + flow_value +
                           " < total duration " + total_duration),
        flow_value_(std::move(flow_value)),
        total_duration_(std::move(total_duration)) {}
  const std::string& flow_value() const { return flow_value_; }
  const std::string& total_duration() const { return total_duration_; }

 private:
  std::string flow_value_;
  std::string total_duration_;
};

/// Instance exceeds the brute-force enumeration guard.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcsf
