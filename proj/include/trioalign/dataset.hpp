#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "trioalign/core.hpp"

namespace trioalign {

/// Seeded synthetic datasets. Length models:
///   Uniform(min, max)        independent per-triplet lengths
///   Blocked(lengths)         contiguous equal-count groups, one length each
///   InterleavedCycle(lengths) length i = lengths[i mod |lengths|]
///   Fixed(a, b, c)           every triplet has exactly these lengths
///
/// With equal per-triplet lengths an ancestor string is drawn and three
/// descendants are derived by per-site substitution and insertion/deletion;
/// the true column alignment is recorded as the reference. Fixed with
/// unequal dimensions draws three independent sequences (rates must be 0)
/// and records no reference.
struct DatasetSpec {
  enum class LengthModel { Uniform, Blocked, InterleavedCycle, Fixed };

  LengthModel model = LengthModel::Uniform;
  int32_t count = 1;
  int32_t min_len = 1, max_len = 1;     // Uniform
  std::vector<int32_t> lengths;         // Blocked groups / cycle entries
  int32_t fixed_a = 0, fixed_b = 0, fixed_c = 0;
  double mutation_rate = 0;
  double indel_rate = 0;
  uint64_t seed = 0;

  void validate() const;  // throws ParseError on invalid specs

  /// CLI grammar: uniform:MIN:MAX:COUNT | fixed:A:B:C[:COUNT] |
  /// blocked:L1,L2,...:COUNT | cycle:L1,L2,...:COUNT
  static DatasetSpec parse(const std::string& text);
};

struct GeneratedDataset {
  std::vector<Triplet> triplets;
  bool has_references = false;
  std::vector<std::array<std::string, 3>> references;  // true gapped rows
};

GeneratedDataset generate_dataset(const DatasetSpec& spec);

}  // namespace trioalign
