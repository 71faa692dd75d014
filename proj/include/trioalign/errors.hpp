#pragma once

#include <stdexcept>
#include <string>

namespace trioalign {

// Input that could not be parsed: FASTA structure, alphabet, dataset specs.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A triplet or tensor exceeds the configured cell budget.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid engine configuration (tile size, forced team width that cannot
// cover the sequences, ...).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Packed alignment of two triplets with different sequence lengths.
struct ShapeMismatchError : std::runtime_error {
  explicit ShapeMismatchError(const std::string& what) : std::runtime_error(what) {}
};

// The score bound for a packed pair does not fit a signed 16-bit lane.
struct LaneOverflowError : std::runtime_error {
  explicit LaneOverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Gapped rows that do not form a rectangular alignment.
struct MalformedAlignmentError : std::runtime_error {
  explicit MalformedAlignmentError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace trioalign
