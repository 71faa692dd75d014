#include "trioalign/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "trioalign/errors.hpp"

namespace trioalign {

Tensor3 fill_tensor(const Triplet& t, const ScoringScheme& scheme, AlignmentMode mode,
                    uint64_t cell_budget) {
  const int32_t a = int32_t(t.s0.size());
  const int32_t b = int32_t(t.s1.size());
  const int32_t c = int32_t(t.s2.size());
  const uint64_t total = uint64_t(a + 1) * uint64_t(b + 1) * uint64_t(c + 1);
  if (total > cell_budget) {
    throw CapacityError("tensor of " + std::to_string(total) + " cells exceeds the budget of " +
                        std::to_string(cell_budget) + " (triplet '" + t.id + "')");
  }

  Tensor3 m{a, b, c, std::vector<int32_t>(total)};
  const bool global = mode == AlignmentMode::Global;
  const bool local = mode == AlignmentMode::Local;
  const int32_t g2 = 2 * scheme.gap;

  for (int32_t i = 0; i <= a; ++i) {
    for (int32_t j = 0; j <= b; ++j) {
      for (int32_t k = 0; k <= c; ++k) {
        const int zeros = (i == 0) + (j == 0) + (k == 0);
        if (zeros == 3) {
          m.at(i, j, k) = 0;
          continue;
        }
        if (zeros >= 2 && !global) {
          // semi-global / local axis initialization
          m.at(i, j, k) = 0;
          continue;
        }
        // Maximum over the applicable predecessor terms. The floor term is
        // absent for global/semi-global, 0 for local; terms that would step
        // out of range are simply not considered.
        const char x0 = i ? t.s0[i - 1] : kGap;
        const char x1 = j ? t.s1[j - 1] : kGap;
        const char x2 = k ? t.s2[k - 1] : kGap;
        bool have = false;
        int32_t best = 0;
        auto consider = [&](int32_t v) {
          best = have ? std::max(best, v) : v;
          have = true;
        };
        if (i && j && k) consider(m.at(i - 1, j - 1, k - 1) + sop(x0, x1, x2, scheme));
        if (i && j) consider(m.at(i - 1, j - 1, k) + sigma(x0, x1, scheme) + g2);
        if (i && k) consider(m.at(i - 1, j, k - 1) + sigma(x0, x2, scheme) + g2);
        if (j && k) consider(m.at(i, j - 1, k - 1) + sigma(x1, x2, scheme) + g2);
        if (i) consider(m.at(i - 1, j, k) + g2);
        if (j) consider(m.at(i, j - 1, k) + g2);
        if (k) consider(m.at(i, j, k - 1) + g2);
        if (local && best < 0) best = 0;
        m.at(i, j, k) = best;
      }
    }
  }
  return m;
}

std::pair<int32_t, Coords> optimal_score(const Tensor3& m, AlignmentMode mode) {
  if (mode == AlignmentMode::Global) {
    return {m.at(m.a, m.b, m.c), Coords{m.a, m.b, m.c}};
  }
  bool have = false;
  int32_t best = 0;
  Coords at{};
  for (int32_t i = 0; i <= m.a; ++i) {
    for (int32_t j = 0; j <= m.b; ++j) {
      for (int32_t k = 0; k <= m.c; ++k) {
        if (mode == AlignmentMode::SemiGlobal && i != m.a && j != m.b && k != m.c) continue;
        const int32_t v = m.at(i, j, k);
        if (!have || v > best) {
          best = v;
          at = Coords{i, j, k};
          have = true;
        }
      }
    }
  }
  return {best, at};
}

namespace {

struct Column {
  char x0, x1, x2;
};

}  // namespace

AlignmentResult traceback(const Tensor3& m, const Triplet& t, const ScoringScheme& scheme,
                          AlignmentMode mode) {
  const auto [score, end] = optimal_score(m, mode);
  const int32_t g2 = 2 * scheme.gap;

  auto at_stop = [&](const Coords& p) {
    switch (mode) {
      case AlignmentMode::Global:
        return p == Coords{0, 0, 0};
      case AlignmentMode::SemiGlobal:
        return (p.j == 0 && p.k == 0) || (p.i == 0 && p.k == 0) || (p.i == 0 && p.j == 0);
      case AlignmentMode::Local:
        return m.at(p.i, p.j, p.k) == 0;
    }
    return true;
  };

  std::vector<Column> rev;
  Coords cur = end;
  while (!at_stop(cur)) {
    const int32_t i = cur.i, j = cur.j, k = cur.k;
    const int32_t val = m.at(i, j, k);
    const char x0 = i ? t.s0[i - 1] : kGap;
    const char x1 = j ? t.s1[j - 1] : kGap;
    const char x2 = k ? t.s2[k - 1] : kGap;
    // Predecessors in the recurrence's listed order.
    if (i && j && k && m.at(i - 1, j - 1, k - 1) + sop(x0, x1, x2, scheme) == val) {
      rev.push_back({x0, x1, x2});
      cur = {i - 1, j - 1, k - 1};
    } else if (i && j && m.at(i - 1, j - 1, k) + sigma(x0, x1, scheme) + g2 == val) {
      rev.push_back({x0, x1, kGap});
      cur = {i - 1, j - 1, k};
    } else if (i && k && m.at(i - 1, j, k - 1) + sigma(x0, x2, scheme) + g2 == val) {
      rev.push_back({x0, kGap, x2});
      cur = {i - 1, j, k - 1};
    } else if (j && k && m.at(i, j - 1, k - 1) + sigma(x1, x2, scheme) + g2 == val) {
      rev.push_back({kGap, x1, x2});
      cur = {i, j - 1, k - 1};
    } else if (i && m.at(i - 1, j, k) + g2 == val) {
      rev.push_back({x0, kGap, kGap});
      cur = {i - 1, j, k};
    } else if (j && m.at(i, j - 1, k) + g2 == val) {
      rev.push_back({kGap, x1, kGap});
      cur = {i, j - 1, k};
    } else if (k && m.at(i, j, k - 1) + g2 == val) {
      rev.push_back({kGap, kGap, x2});
      cur = {i, j, k - 1};
    } else {
      throw std::logic_error("traceback: no predecessor reproduces cell value at (" +
                             std::to_string(i) + "," + std::to_string(j) + "," +
                             std::to_string(k) + ")");
    }
  }

  AlignmentResult res;
  res.score = score;
  res.mode = mode;
  res.end = end;
  res.begin = cur;
  res.has_rows = true;

  auto push_col = [&](char x0, char x1, char x2) {
    res.rows[0].push_back(x0);
    res.rows[1].push_back(x1);
    res.rows[2].push_back(x2);
  };

  if (mode == AlignmentMode::SemiGlobal) {
    // Free leading gaps: the stop cell sits on one axis, so at most one
    // sequence has an untraversed prefix.
    for (int32_t p = 0; p < cur.i; ++p) push_col(t.s0[p], kGap, kGap);
    for (int32_t p = 0; p < cur.j; ++p) push_col(kGap, t.s1[p], kGap);
    for (int32_t p = 0; p < cur.k; ++p) push_col(kGap, kGap, t.s2[p]);
  }
  for (auto it = rev.rbegin(); it != rev.rend(); ++it) push_col(it->x0, it->x1, it->x2);
  if (mode == AlignmentMode::SemiGlobal) {
    // Free trailing gaps for every coordinate short of (a, b, c).
    for (int32_t p = end.i; p < m.a; ++p) push_col(t.s0[p], kGap, kGap);
    for (int32_t p = end.j; p < m.b; ++p) push_col(kGap, t.s1[p], kGap);
    for (int32_t p = end.k; p < m.c; ++p) push_col(kGap, kGap, t.s2[p]);
  }
  return res;
}

AlignmentResult oracle_align(const Triplet& t, const ScoringScheme& scheme, AlignmentMode mode,
                             bool with_rows, uint64_t cell_budget) {
  const Tensor3 m = fill_tensor(t, scheme, mode, cell_budget);
  if (with_rows) return traceback(m, t, scheme, mode);
  AlignmentResult res;
  res.mode = mode;
  std::tie(res.score, res.end) = optimal_score(m, mode);
  return res;
}

}  // namespace trioalign
