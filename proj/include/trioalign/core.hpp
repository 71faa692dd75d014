#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace trioalign {

inline constexpr char kGap = '-';
inline constexpr std::string_view kAlphabet = "ACGT";

// Score magnitudes are capped so that worst-case cell bounds (needed by the
// packed 16-bit lane check) stay computable in 64 bits.
inline constexpr int32_t kMaxScoreMagnitude = 1024;

inline bool is_residue(char ch) {
  return ch == 'A' || ch == 'C' || ch == 'G' || ch == 'T';
}

/// Pairwise contribution of two alignment characters: match/mismatch between
/// residues, `gap` for a residue against a gap. Two gaps contribute 0.
struct ScoringScheme {
  int32_t match = 1;
  int32_t mismatch = -1;
  int32_t gap = -2;  // signed contribution of one residue-gap pair

  // match > 0, mismatch <= 0, gap <= 0, magnitudes <= 1024.
  void validate() const;
};

/// Validating constructor used by every public entry point.
ScoringScheme make_scheme(int32_t match, int32_t mismatch, int32_t gap);

inline int32_t sigma(char x, char y, const ScoringScheme& s) {
  const bool gx = x == kGap, gy = y == kGap;
  if (gx & gy) return 0;
  if (gx | gy) return s.gap;
  return x == y ? s.match : s.mismatch;
}

/// Sum-of-pairs over one alignment column.
inline int32_t sop(char x, char y, char z, const ScoringScheme& s) {
  return sigma(x, y, s) + sigma(x, z, s) + sigma(y, z, s);
}

enum class AlignmentMode { Global, SemiGlobal, Local };

std::string_view mode_name(AlignmentMode mode);
AlignmentMode mode_from_name(std::string_view name);  // throws ParseError

struct Coords {
  int32_t i = 0;
  int32_t j = 0;
  int32_t k = 0;
  friend auto operator<=>(const Coords&, const Coords&) = default;
};

struct Triplet {
  std::string id;
  std::string s0, s1, s2;

  uint64_t cell_count() const {
    return uint64_t(s0.size()) * uint64_t(s1.size()) * uint64_t(s2.size());
  }
  // Residues only, no gap symbols. Throws ParseError naming the offender.
  void validate() const;
};

struct AlignmentResult {
  int32_t score = 0;
  AlignmentMode mode = AlignmentMode::Global;
  Coords end;    // tensor coordinates where the optimal score was read
  Coords begin;  // where traceback stopped; meaningful when rows are present
  bool has_rows = false;
  std::array<std::string, 3> rows{};  // equal-length gapped rows
};

}  // namespace trioalign
