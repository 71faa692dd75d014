#include "trioalign/core.hpp"

#include <cstdlib>
#include <stdexcept>

#include "trioalign/errors.hpp"

namespace trioalign {

void ScoringScheme::validate() const {
  if (match <= 0) throw std::invalid_argument("match score must be positive");
  if (mismatch > 0) throw std::invalid_argument("mismatch score must be <= 0");
  if (gap > 0) throw std::invalid_argument("gap score must be <= 0");
  if (std::abs(match) > kMaxScoreMagnitude || std::abs(mismatch) > kMaxScoreMagnitude ||
      std::abs(gap) > kMaxScoreMagnitude) {
    throw std::invalid_argument("score magnitudes must be <= 1024");
  }
}

ScoringScheme make_scheme(int32_t match, int32_t mismatch, int32_t gap) {
  ScoringScheme s{match, mismatch, gap};
  s.validate();
  return s;
}

std::string_view mode_name(AlignmentMode mode) {
  switch (mode) {
    case AlignmentMode::Global: return "global";
    case AlignmentMode::SemiGlobal: return "semiglobal";
    case AlignmentMode::Local: return "local";
  }
  return "?";
}

AlignmentMode mode_from_name(std::string_view name) {
  if (name == "global") return AlignmentMode::Global;
  if (name == "semiglobal") return AlignmentMode::SemiGlobal;
  if (name == "local") return AlignmentMode::Local;
  throw ParseError("unknown alignment mode '" + std::string(name) +
                   "' (expected global, semiglobal, or local)");
}

void Triplet::validate() const {
  for (const std::string* seq : {&s0, &s1, &s2}) {
    for (char ch : *seq) {
      if (!is_residue(ch)) {
        throw ParseError("triplet '" + id + "': invalid character '" +
                         std::string(1, ch) + "' (alphabet is ACGT, gaps are not allowed in inputs)");
      }
    }
  }
}

}  // namespace trioalign
