#include "trioalign/metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include "trioalign/core.hpp"
#include "trioalign/errors.hpp"

namespace trioalign {

double tcups(uint64_t cells, double seconds) {
  if (seconds <= 0) throw std::domain_error("tcups: runtime must be positive");
  return double(cells) / (seconds * 1e12);
}

HomologySet homology_pairs(const std::array<std::string, 3>& rows) {
  if (rows[0].size() != rows[1].size() || rows[0].size() != rows[2].size()) {
    throw MalformedAlignmentError("alignment rows have unequal lengths");
  }
  HomologySet pairs;
  std::array<uint32_t, 3> pos{0, 0, 0};
  for (size_t col = 0; col < rows[0].size(); ++col) {
    const std::array<bool, 3> has{rows[0][col] != kGap, rows[1][col] != kGap,
                                  rows[2][col] != kGap};
    for (uint8_t p = 0; p < 3; ++p) {
      for (uint8_t q = uint8_t(p + 1); q < 3; ++q) {
        if (has[p] && has[q]) pairs.push_back({p, pos[p], q, pos[q]});
      }
    }
    for (int r = 0; r < 3; ++r) {
      if (has[r]) ++pos[r];
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::pair<double, double> spfp_spfn(const HomologySet& estimated, const HomologySet& reference) {
  // Both sets are sorted; count the intersection with a merge walk.
  size_t common = 0;
  auto e = estimated.begin();
  auto t = reference.begin();
  while (e != estimated.end() && t != reference.end()) {
    if (*e < *t) {
      ++e;
    } else if (*t < *e) {
      ++t;
    } else {
      ++common;
      ++e;
      ++t;
    }
  }
  const double spfp =
      estimated.empty() ? 0.0 : double(estimated.size() - common) / double(estimated.size());
  const double spfn =
      reference.empty() ? 0.0 : double(reference.size() - common) / double(reference.size());
  return {spfp, spfn};
}

}  // namespace trioalign
