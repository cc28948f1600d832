#pragma once

#include <stdexcept>
#include <string>

namespace streamlet {

/// Thrown when a pipeline is touched after a terminal operation consumed it.
class AlreadyConsumedError : public std::logic_error {
  public:
    AlreadyConsumedError() : std::logic_error("pipeline has already been consumed") {}
};

/// File could not be opened or read.
class FileError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input bytes are not valid UTF-8.
class EncodingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Text does not denote a decimal number.
class DecimalParseError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Sequential and parallel runs of the benchmark disagreed on the prime
/// count. This indicates an engine bug and is always fatal.
class CountMismatchError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Demo id is not one of the supported problems.
class UnknownDemoError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace streamlet
