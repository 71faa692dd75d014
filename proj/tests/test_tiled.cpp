#include <doctest.h>

#include <string>
#include <vector>

#include "trioalign/errors.hpp"
#include "trioalign/oracle.hpp"
#include "trioalign/rng.hpp"
#include "trioalign/tiled.hpp"

using namespace trioalign;

namespace {

const ScoringScheme kScheme{1, -1, -2};
const AlignmentMode kModes[] = {AlignmentMode::Global, AlignmentMode::SemiGlobal,
                                AlignmentMode::Local};

Triplet random_triplet(CounterRng& rng, int32_t max_len) {
  Triplet t;
  t.id = "r";
  for (auto* seq : {&t.s0, &t.s1, &t.s2}) {
    const int32_t len = int32_t(rng.below(uint64_t(max_len) + 1));
    for (int32_t p = 0; p < len; ++p) seq->push_back(rng.base());
  }
  return t;
}

EngineConfig config_with(int32_t n, int32_t threads = 1) {
  EngineConfig cfg;
  cfg.tile_size = n;
  cfg.team_threads = threads;
  return cfg;
}

// Drives a full tile grid slice by slice through sweep_tile_slice, routing
// the boundary messages by hand, and compares every square against the
// oracle tensor after every slice.
void cross_check_tiles(const Triplet& t, const ScoringScheme& sch, AlignmentMode mode,
                       int32_t n) {
  const Tensor3 m = fill_tensor(t, sch, mode);
  TeamLayout ly;
  ly.n = n;
  ly.a = m.a;
  ly.b = m.b;
  ly.c = m.c;
  ly.width = derive_team_width(n, m.b, m.c);
  ly.scheme = sch;
  ly.mode = mode;
  const int32_t tw = ly.width;

  std::vector<TileState<lanes::Single>> tiles;
  for (int32_t r = 0; r < tw; ++r) {
    for (int32_t c = 0; c < tw; ++c) {
      tiles.push_back(make_tile<lanes::Single>(ly, {t.s1}, {t.s2}, r, c));
    }
  }
  std::vector<BoundaryMessage<lanes::Single>> right(tiles.size()), down(tiles.size());

  for (int32_t i = 0; i <= ly.a; ++i) {
    for (int32_t r = 0; r < tw; ++r) {
      for (int32_t c = 0; c < tw; ++c) {
        auto& ts = tiles[r * tw + c];
        if (c > 0) {
          REQUIRE(right[r * tw + c - 1].slice_index == i);
          ts.col_in = right[r * tw + c - 1].values;
        }
        if (r > 0) {
          REQUIRE(down[(r - 1) * tw + c].slice_index == i);
          ts.row_in = down[(r - 1) * tw + c].values;
        }
        const std::array<char, 1> ch{i >= 1 ? t.s0[i - 1] : 'A'};
        auto [msg_r, msg_d] = sweep_tile_slice(ly, ts, i, ch);
        CHECK(msg_r.direction == BoundaryDirection::RightColumn);
        CHECK(msg_d.direction == BoundaryDirection::DownRow);
        right[r * tw + c] = std::move(msg_r);
        down[r * tw + c] = std::move(msg_d);
      }
    }
    for (const auto& ts : tiles) {
      for (int32_t p = 0; p <= n; ++p) {
        for (int32_t q = 0; q <= n; ++q) {
          const int32_t j = ts.j0 + p, k = ts.k0 + q;
          if (j > ly.b || k > ly.c) continue;
          CAPTURE(i);
          CAPTURE(j);
          CAPTURE(k);
          REQUIRE(ts.square[size_t(p) * (n + 1) + q] == m.at(i, j, k));
        }
      }
    }
  }
}

}  // namespace

TEST_CASE("align: identical triplet closed form at N=2") {
  const Triplet t{"id", "ACG", "ACG", "ACG"};
  const AlignmentResult r = align(t, ScoringScheme{2, -1, -2}, AlignmentMode::Global,
                                  config_with(2));
  CHECK(r.score == 18);
  CHECK(r.end == Coords{3, 3, 3});
}

TEST_CASE("align: empty triplet scores zero") {
  const Triplet t{"e", "", "", ""};
  for (auto mode : kModes) {
    CHECK(align(t, kScheme, mode, config_with(4)).score == 0);
  }
}

TEST_CASE("align matches the oracle on a random corpus") {
  CounterRng rng(314159, 1);
  for (int rep = 0; rep < 40; ++rep) {
    const Triplet t = random_triplet(rng, 24);
    const ScoringScheme sch{int32_t(1 + rng.below(5)), -int32_t(rng.below(6)),
                            -int32_t(rng.below(6))};
    for (auto mode : kModes) {
      const AlignmentResult want = oracle_align(t, sch, mode);
      for (int32_t n : {1, 2, 3, 4, 8}) {
        const AlignmentResult got = align(t, sch, mode, config_with(n));
        CAPTURE(t.s0);
        CAPTURE(t.s1);
        CAPTURE(t.s2);
        CAPTURE(int(mode));
        CAPTURE(n);
        REQUIRE(got.score == want.score);
        REQUIRE(got.end == want.end);
      }
    }
  }
}

TEST_CASE("scores are invariant across tile size and team threads") {
  CounterRng rng(777, 2);
  for (int rep = 0; rep < 6; ++rep) {
    const Triplet t = random_triplet(rng, 32);
    for (auto mode : kModes) {
      const AlignmentResult base = align(t, kScheme, mode, config_with(4));
      for (int32_t n : {1, 2, 5, 8, 16, 64}) {
        for (int32_t threads : {1, 2, 3}) {
          const AlignmentResult r = align(t, kScheme, mode, config_with(n, threads));
          REQUIRE(r.score == base.score);
          REQUIRE(r.end == base.end);
        }
      }
    }
  }
}

TEST_CASE("tile sweep: first slice of a 1x1 grid matches oracle cells") {
  const Triplet t{"m", "A", "A", "A"};
  const Tensor3 m = fill_tensor(t, kScheme, AlignmentMode::Global);
  TeamLayout ly;
  ly.n = 1;
  ly.width = 1;
  ly.a = ly.b = ly.c = 1;
  ly.scheme = kScheme;
  ly.mode = AlignmentMode::Global;
  auto ts = make_tile<lanes::Single>(ly, {t.s1}, {t.s2}, 0, 0);
  (void)sweep_tile_slice<lanes::Single>(ly, ts, 0, {'A'});
  auto [right, down] = sweep_tile_slice<lanes::Single>(ly, ts, 1, {'A'});
  for (int32_t p = 0; p <= 1; ++p) {
    for (int32_t q = 0; q <= 1; ++q) {
      CHECK(ts.square[size_t(p) * 2 + q] == m.at(1, p, q));
    }
  }
  CHECK(right.slice_index == 1);
  CHECK(down.values.back() == m.at(1, 1, 1));
}

TEST_CASE("tile sweep: zero scheme and zero boundaries keep every cell at zero") {
  // degenerate scheme, constructed directly to bypass make_scheme validation
  const ScoringScheme zero{0, 0, 0};
  TeamLayout ly;
  ly.n = 4;
  ly.width = 2;
  ly.a = ly.b = ly.c = 8;
  ly.scheme = zero;
  ly.mode = AlignmentMode::Global;
  const std::string s1(8, 'A'), s2(8, 'C');
  auto ts = make_tile<lanes::Single>(ly, {s1}, {s2}, 1, 1);  // interior tile
  ts.col_in.assign(5, 0);
  ts.row_in.assign(5, 0);
  (void)sweep_tile_slice<lanes::Single>(ly, ts, 0, {'A'});
  ts.col_in.assign(5, 0);
  ts.row_in.assign(5, 0);
  (void)sweep_tile_slice<lanes::Single>(ly, ts, 3, {'G'});
  for (int32_t v : ts.square) CHECK(v == 0);
}

TEST_CASE("tile sweep: every tile of a multi-tile grid reproduces oracle cells") {
  CounterRng rng(991, 4);
  for (int rep = 0; rep < 4; ++rep) {
    const Triplet t = random_triplet(rng, 11);
    for (auto mode : kModes) {
      cross_check_tiles(t, kScheme, mode, 3);
      cross_check_tiles(t, kScheme, mode, 4);
    }
  }
}

TEST_CASE("align_packed: duplicated lanes equal the single-lane result") {
  CounterRng rng(1234, 9);
  const Triplet t = random_triplet(rng, 20);
  for (auto mode : kModes) {
    const AlignmentResult want = align(t, kScheme, mode, config_with(4));
    const auto [r1, r2] = align_packed(t, t, kScheme, mode, config_with(4));
    CHECK(r1.score == want.score);
    CHECK(r2.score == want.score);
    CHECK(r1.end == want.end);
    CHECK(r2.end == want.end);
  }
}

TEST_CASE("align_packed: random same-shape pairs equal two single-lane calls") {
  CounterRng rng(4321, 5);
  for (int rep = 0; rep < 12; ++rep) {
    Triplet t1, t2;
    t1.id = "p1";
    t2.id = "p2";
    for (auto [a, b] : {std::pair{&t1.s0, &t2.s0}, std::pair{&t1.s1, &t2.s1},
                        std::pair{&t1.s2, &t2.s2}}) {
      const int32_t len = int32_t(rng.below(25));
      for (int32_t p = 0; p < len; ++p) {
        a->push_back(rng.base());
        b->push_back(rng.base());
      }
    }
    const ScoringScheme sch{int32_t(1 + rng.below(5)), -int32_t(rng.below(6)),
                            -int32_t(rng.below(6))};
    for (auto mode : kModes) {
      for (int32_t n : {2, 8}) {
        const auto [r1, r2] = align_packed(t1, t2, sch, mode, config_with(n));
        const AlignmentResult w1 = align(t1, sch, mode, config_with(n));
        const AlignmentResult w2 = align(t2, sch, mode, config_with(n));
        REQUIRE(r1.score == w1.score);
        REQUIRE(r1.end == w1.end);
        REQUIRE(r2.score == w2.score);
        REQUIRE(r2.end == w2.end);
      }
    }
  }
}

TEST_CASE("align_packed: shape mismatch and lane overflow are rejected") {
  const Triplet a{"a", "ACGT", "AC", "G"};
  const Triplet b{"b", "ACG", "AC", "G"};
  CHECK_THROWS_AS(align_packed(a, b, kScheme, AlignmentMode::Global, config_with(4)),
                  ShapeMismatchError);

  // bound (a+b+c) * 2|gap| = 96 * 600 > 32767
  std::string long_seq(32, 'A');
  const Triplet big{"big", long_seq, long_seq, long_seq};
  const ScoringScheme harsh{5, -1, -300};
  CHECK(packed_score_bound(big, harsh) > 32767);
  CHECK_THROWS_AS(align_packed(big, big, harsh, AlignmentMode::Global, config_with(4)),
                  LaneOverflowError);
  CHECK_FALSE(packed_bound_ok(big, harsh));
  CHECK(packed_bound_ok(big, kScheme));
}

TEST_CASE("engine errors: capacity and forced team width") {
  const Triplet t{"t", "ACGTACGT", "ACGTACGT", "ACGTACGT"};
  EngineConfig tiny = config_with(4);
  tiny.cell_budget = 10;
  CHECK_THROWS_AS(align(t, kScheme, AlignmentMode::Global, tiny), CapacityError);

  EngineConfig narrow = config_with(2);
  narrow.team_width = 2;  // covers only 4 < 8
  CHECK_THROWS_AS(align(t, kScheme, AlignmentMode::Global, narrow), ConfigError);

  EngineConfig bad = config_with(0);
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("packed score bound formula") {
  const Triplet t{"t", "ACGT", "ACG", "AC"};  // 9 chars
  CHECK(packed_score_bound(t, ScoringScheme{1, -1, -2}) == 9 * 4);
  CHECK(packed_score_bound(t, ScoringScheme{5, -1, -2}) == 9 * 15);
  CHECK(packed_score_bound(t, ScoringScheme{1, -1, -300}) == 9 * 600);
}
