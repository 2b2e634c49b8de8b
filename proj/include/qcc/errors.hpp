#pragma once

#include <stdexcept>
#include <string>

namespace qcc {

// Caller-supplied data violates a precondition or a file format.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Developing base codewords produced the same codeword twice.
class DegenerateBase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested length lies below every available construction's threshold.
class UnsupportedLength : public std::runtime_error {
 public:
  UnsupportedLength(long threshold, const std::string& what)
      : std::runtime_error(what), threshold_(threshold) {}
  long threshold() const noexcept { return threshold_; }

 private:
  long threshold_;
};

class NotFound : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Search instance exceeds the configured candidate cap.
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Code size does not match the block count of a generalized Steiner system.
class NotASteinerSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DistanceTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcc
