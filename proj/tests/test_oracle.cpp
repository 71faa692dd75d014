#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "check_alignment.hpp"
#include "trioalign/errors.hpp"
#include "trioalign/oracle.hpp"
#include "trioalign/rng.hpp"

using namespace trioalign;

namespace {

const ScoringScheme kScheme{1, -1, -2};
const AlignmentMode kModes[] = {AlignmentMode::Global, AlignmentMode::SemiGlobal,
                                AlignmentMode::Local};

Triplet random_triplet(CounterRng& rng, int32_t max_len, const std::string& id = "r") {
  Triplet t;
  t.id = id;
  for (auto* seq : {&t.s0, &t.s1, &t.s2}) {
    const int32_t len = int32_t(rng.below(uint64_t(max_len) + 1));
    for (int32_t p = 0; p < len; ++p) seq->push_back(rng.base());
  }
  return t;
}

// every interior cell must equal the max over its predecessor terms
void check_predecessor_consistency(const Tensor3& m, const Triplet& t, const ScoringScheme& sch,
                                   AlignmentMode mode) {
  const bool global = mode == AlignmentMode::Global;
  const bool local = mode == AlignmentMode::Local;
  const int32_t g2 = 2 * sch.gap;
  for (int32_t i = 0; i <= m.a; ++i) {
    for (int32_t j = 0; j <= m.b; ++j) {
      for (int32_t k = 0; k <= m.c; ++k) {
        const int zeros = (i == 0) + (j == 0) + (k == 0);
        if (zeros == 3 || (zeros >= 2 && !global)) continue;
        const char x0 = i ? t.s0[i - 1] : kGap;
        const char x1 = j ? t.s1[j - 1] : kGap;
        const char x2 = k ? t.s2[k - 1] : kGap;
        bool have = false;
        int32_t best = 0;
        auto consider = [&](int32_t v) {
          best = have ? std::max(best, v) : v;
          have = true;
        };
        if (i && j && k) consider(m.at(i - 1, j - 1, k - 1) + sop(x0, x1, x2, sch));
        if (i && j) consider(m.at(i - 1, j - 1, k) + sigma(x0, x1, sch) + g2);
        if (i && k) consider(m.at(i - 1, j, k - 1) + sigma(x0, x2, sch) + g2);
        if (j && k) consider(m.at(i, j - 1, k - 1) + sigma(x1, x2, sch) + g2);
        if (i) consider(m.at(i - 1, j, k) + g2);
        if (j) consider(m.at(i, j - 1, k) + g2);
        if (k) consider(m.at(i, j, k - 1) + g2);
        if (local && best < 0) best = 0;
        REQUIRE(m.at(i, j, k) == best);
      }
    }
  }
}

}  // namespace

TEST_CASE("fill_tensor: empty triplet is the single zero cell") {
  const Triplet t{"e", "", "", ""};
  const Tensor3 m = fill_tensor(t, kScheme, AlignmentMode::Global);
  REQUIRE(m.cells.size() == 1);
  CHECK(m.at(0, 0, 0) == 0);
}

TEST_CASE("fill_tensor: axis edge is 2*i*gap under global") {
  const Triplet t{"a", "A", "", ""};
  const Tensor3 m = fill_tensor(t, kScheme, AlignmentMode::Global);
  CHECK(m.at(1, 0, 0) == -4);
}

TEST_CASE("fill_tensor: single-column optimum matches exhaustive enumeration") {
  const Triplet t{"acg", "A", "C", "G"};
  const Tensor3 m = fill_tensor(t, kScheme, AlignmentMode::Global);
  CHECK(m.at(1, 1, 1) == -3);
  CHECK(testing::enum_global(t.s0, t.s1, t.s2, kScheme) == -3);
}

TEST_CASE("fill_tensor: capacity error beyond the cell budget") {
  const Triplet t{"big", "ACGTACGT", "ACGTACGT", "ACGTACGT"};
  CHECK_THROWS_AS(fill_tensor(t, kScheme, AlignmentMode::Global, 100), CapacityError);
}

TEST_CASE("fill is idempotent and mode-consistent cell by cell") {
  CounterRng rng(41, 7);
  for (int rep = 0; rep < 8; ++rep) {
    const Triplet t = random_triplet(rng, 6);
    for (auto mode : kModes) {
      const Tensor3 m1 = fill_tensor(t, kScheme, mode);
      const Tensor3 m2 = fill_tensor(t, kScheme, mode);
      CHECK(m1.cells == m2.cells);
      check_predecessor_consistency(m1, t, kScheme, mode);
    }
  }
}

TEST_CASE("optimal_score: identical triplet closed form") {
  const Triplet t{"id", "ACG", "ACG", "ACG"};
  const ScoringScheme sch{2, -1, -2};
  const auto [score, at] = optimal_score(fill_tensor(t, sch, AlignmentMode::Global),
                                         AlignmentMode::Global);
  CHECK(score == 18);
  CHECK(at == Coords{3, 3, 3});
}

TEST_CASE("optimal_score: local floor dominates an all-negative tensor") {
  const Triplet t{"neg", "AAA", "CCC", "GGG"};
  const auto [score, at] = optimal_score(fill_tensor(t, kScheme, AlignmentMode::Local),
                                         AlignmentMode::Local);
  CHECK(score == 0);
  CHECK(at == Coords{0, 0, 0});  // lexicographically smallest zero cell
}

TEST_CASE("optimal_score: semi-global dominates global") {
  const Triplet t{"sg", "AC", "AC", "GC"};
  const auto [g, gc] = optimal_score(fill_tensor(t, kScheme, AlignmentMode::Global),
                                      AlignmentMode::Global);
  const auto [s, sc] = optimal_score(fill_tensor(t, kScheme, AlignmentMode::SemiGlobal),
                                      AlignmentMode::SemiGlobal);
  CHECK(gc == Coords{2, 2, 2});
  CHECK(s >= g);
}

TEST_CASE("scores match exhaustive enumeration on tiny triplets") {
  CounterRng rng(2024, 1);
  for (int rep = 0; rep < 60; ++rep) {
    const Triplet t = random_triplet(rng, 3);
    const ScoringScheme sch{int32_t(1 + rng.below(4)), -int32_t(rng.below(4)),
                            -int32_t(rng.below(4))};
    for (auto mode : kModes) {
      const auto [score, at] = optimal_score(fill_tensor(t, sch, mode), mode);
      const int64_t expect = testing::enum_best(t.s0, t.s1, t.s2, sch, mode);
      CAPTURE(t.s0);
      CAPTURE(t.s1);
      CAPTURE(t.s2);
      CAPTURE(int(mode));
      CHECK(int64_t(score) == expect);
    }
  }
}

TEST_CASE("global scores match enumeration up to length 4") {
  CounterRng rng(99, 3);
  for (int rep = 0; rep < 6; ++rep) {
    Triplet t;
    t.id = "g4";
    for (auto* seq : {&t.s0, &t.s1, &t.s2}) {
      for (int32_t p = 0; p < 4; ++p) seq->push_back(rng.base());
    }
    const auto [score, at] = optimal_score(fill_tensor(t, kScheme, AlignmentMode::Global),
                                           AlignmentMode::Global);
    CHECK(int64_t(score) == testing::enum_global(t.s0, t.s1, t.s2, kScheme));
  }
}

TEST_CASE("score is invariant under permuting the input sequences") {
  CounterRng rng(7, 7);
  for (int rep = 0; rep < 10; ++rep) {
    const Triplet t = random_triplet(rng, 5);
    for (auto mode : kModes) {
      const auto base = optimal_score(fill_tensor(t, kScheme, mode), mode).first;
      const std::string* seqs[3] = {&t.s0, &t.s1, &t.s2};
      int perm[3] = {0, 1, 2};
      do {
        const Triplet p{"p", *seqs[perm[0]], *seqs[perm[1]], *seqs[perm[2]]};
        CHECK(optimal_score(fill_tensor(p, kScheme, mode), mode).first == base);
      } while (std::next_permutation(perm, perm + 3));
    }
  }
}

TEST_CASE("mode ordering: local >= semiglobal >= global") {
  CounterRng rng(11, 2);
  for (int rep = 0; rep < 20; ++rep) {
    const Triplet t = random_triplet(rng, 6);
    const auto g = optimal_score(fill_tensor(t, kScheme, AlignmentMode::Global),
                                 AlignmentMode::Global).first;
    const auto s = optimal_score(fill_tensor(t, kScheme, AlignmentMode::SemiGlobal),
                                 AlignmentMode::SemiGlobal).first;
    const auto l = optimal_score(fill_tensor(t, kScheme, AlignmentMode::Local),
                                 AlignmentMode::Local).first;
    CHECK(l >= s);
    CHECK(s >= g);
  }
}

TEST_CASE("traceback: single match column") {
  const Triplet t{"m", "A", "A", "A"};
  const AlignmentResult r = oracle_align(t, kScheme, AlignmentMode::Global, true);
  CHECK(r.score == 3);
  CHECK(r.rows[0] == "A");
  CHECK(r.rows[1] == "A");
  CHECK(r.rows[2] == "A");
}

TEST_CASE("traceback: forced boundary path") {
  const Triplet t{"b", "A", "", ""};
  const AlignmentResult r = oracle_align(t, kScheme, AlignmentMode::Global, true);
  CHECK(r.score == -4);
  CHECK(r.rows[0] == "A");
  CHECK(r.rows[1] == "-");
  CHECK(r.rows[2] == "-");
}

TEST_CASE("traceback: rows recompute to the optimal score") {
  const Triplet t{"x", "ACGT", "AGT", "ACT"};
  const AlignmentResult r = oracle_align(t, kScheme, AlignmentMode::Global, true);
  CHECK(testing::check_alignment_rows(t, kScheme, AlignmentMode::Global, r).empty());
}

TEST_CASE("traceback: self-consistency across modes on random triplets") {
  CounterRng rng(5150, 1);
  for (int rep = 0; rep < 30; ++rep) {
    const Triplet t = random_triplet(rng, 8);
    const ScoringScheme sch{int32_t(1 + rng.below(4)), -int32_t(rng.below(4)),
                            -int32_t(rng.below(4))};
    for (auto mode : kModes) {
      const AlignmentResult r = oracle_align(t, sch, mode, true);
      const std::string err = testing::check_alignment_rows(t, sch, mode, r);
      CAPTURE(t.s0);
      CAPTURE(t.s1);
      CAPTURE(t.s2);
      CAPTURE(int(mode));
      CHECK(err.empty());
    }
  }
}

TEST_CASE("traceback: empty local alignment when everything scores negative") {
  const Triplet t{"neg", "AAA", "CCC", "GGG"};
  const AlignmentResult r = oracle_align(t, kScheme, AlignmentMode::Local, true);
  CHECK(r.score == 0);
  CHECK(r.rows[0].empty());
  CHECK(r.rows[1].empty());
  CHECK(r.rows[2].empty());
}
