#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "trioalign/core.hpp"

namespace trioalign {

// Default cap keeps the full tensor desk-scale (~512 MiB at 4 bytes/cell).
inline constexpr uint64_t kOracleCellBudget = uint64_t{1} << 27;

/// Dense (a+1) x (b+1) x (c+1) score tensor, row-major over (i, j, k).
struct Tensor3 {
  int32_t a = 0, b = 0, c = 0;  // sequence lengths
  std::vector<int32_t> cells;

  size_t index(int32_t i, int32_t j, int32_t k) const {
    return (size_t(i) * (b + 1) + size_t(j)) * (c + 1) + size_t(k);
  }
  int32_t at(int32_t i, int32_t j, int32_t k) const { return cells[index(i, j, k)]; }
  int32_t& at(int32_t i, int32_t j, int32_t k) { return cells[index(i, j, k)]; }
};

/// Fills the complete tensor for the given mode. Throws CapacityError when
/// (a+1)(b+1)(c+1) exceeds the budget.
Tensor3 fill_tensor(const Triplet& t, const ScoringScheme& scheme, AlignmentMode mode,
                    uint64_t cell_budget = kOracleCellBudget);

/// Reads the optimal score and its coordinates from a filled tensor.
/// Ties break to the lexicographically smallest (i, j, k).
std::pair<int32_t, Coords> optimal_score(const Tensor3& m, AlignmentMode mode);

/// Reconstructs gapped rows by walking predecessors from the end coordinates.
/// Predecessors are tried in the recurrence's listed order; the first one
/// that reproduces the cell value is taken.
AlignmentResult traceback(const Tensor3& m, const Triplet& t, const ScoringScheme& scheme,
                          AlignmentMode mode);

/// fill + optimal_score (+ traceback when with_rows).
AlignmentResult oracle_align(const Triplet& t, const ScoringScheme& scheme, AlignmentMode mode,
                             bool with_rows = false, uint64_t cell_budget = kOracleCellBudget);

}  // namespace trioalign
