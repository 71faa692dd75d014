#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace trioalign {

/// Tera cell updates per second: cells / (t * 10^12). Throws
/// std::domain_error when t <= 0.
double tcups(uint64_t cells, double seconds);

/// One homologous residue pair (sequence p, position pi) ~ (q, qi), p < q,
/// positions 0-based into the ungapped inputs.
struct HomologyPair {
  uint8_t p = 0;
  uint32_t pi = 0;
  uint8_t q = 0;
  uint32_t qi = 0;
  friend auto operator<=>(const HomologyPair&, const HomologyPair&) = default;
};

using HomologySet = std::vector<HomologyPair>;  // sorted, unique

/// Pairs induced by the alignment columns: every column contributes one pair
/// for each two non-gap entries it holds. Throws MalformedAlignmentError on
/// unequal row lengths. All-gap columns are tolerated and contribute nothing.
HomologySet homology_pairs(const std::array<std::string, 3>& rows);

/// spfp = |E \ T| / |E| (0 when E is empty); spfn = |T \ E| / |T| (0 when T
/// is empty).
std::pair<double, double> spfp_spfn(const HomologySet& estimated, const HomologySet& reference);

}  // namespace trioalign
