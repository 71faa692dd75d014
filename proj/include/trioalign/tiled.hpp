#pragma once

#include <algorithm>
#include <array>
#include <barrier>
#include <cstdint>
#include <limits>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "trioalign/core.hpp"
#include "trioalign/errors.hpp"

namespace trioalign {

enum class LaneMode { Single32, PackedDual16 };

/// Engine knobs. team_width 0 derives ceil(max(b,c)/N) per alignment; a
/// forced width that cannot cover the sequences is a ConfigError.
struct EngineConfig {
  int32_t tile_size = 8;                       // N, cells per tile side
  int32_t team_width = 0;                      // tiles per grid side (0 = derive)
  LaneMode lane_mode = LaneMode::Single32;
  uint64_t cell_budget = uint64_t{1} << 31;    // max a*b*c per triplet
  int32_t team_threads = 1;                    // OS threads driving one tile team

  void validate() const;
};

/// Streamed, tiled engine. Returns exactly the oracle's score and end
/// coordinates (score only; no rows).
AlignmentResult align(const Triplet& t, const ScoringScheme& scheme, AlignmentMode mode,
                      const EngineConfig& cfg);

/// Two same-shape triplets computed simultaneously in packed 16-bit lanes.
std::pair<AlignmentResult, AlignmentResult> align_packed(const Triplet& t1, const Triplet& t2,
                                                         const ScoringScheme& scheme,
                                                         AlignmentMode mode,
                                                         const EngineConfig& cfg);

/// Conservative bound on any tensor cell magnitude:
/// (a+b+c) * max(3|match|, 3|mismatch|, 2|gap|).
int64_t packed_score_bound(const Triplet& t, const ScoringScheme& scheme);

/// True when the bound fits a signed 16-bit lane.
bool packed_bound_ok(const Triplet& t, const ScoringScheme& scheme);

int32_t derive_team_width(int32_t tile_size, int32_t b, int32_t c);

// ---------------------------------------------------------------------------
// Lane types. Scores are exact integers: one 32-bit lane, or two independent
// 16-bit lanes packed in one cell, with add/max applied lane-wise.

namespace lanes {

struct Single {
  using Value = int32_t;
  static constexpr int kCount = 1;
  static Value splat(int32_t x) { return x; }
  static Value pack(const int32_t* per_lane) { return per_lane[0]; }
  static int32_t get(Value v, int) { return v; }
  static Value add(Value a, Value b) { return a + b; }
  static Value max(Value a, Value b) { return a > b ? a : b; }
};

struct Dual {
  struct Value {
    int16_t lo, hi;
  };
  static constexpr int kCount = 2;
  static Value splat(int32_t x) { return {int16_t(x), int16_t(x)}; }
  static Value pack(const int32_t* per_lane) { return {int16_t(per_lane[0]), int16_t(per_lane[1])}; }
  static int32_t get(Value v, int lane) { return lane == 0 ? v.lo : v.hi; }
  static Value add(Value a, Value b) {
    return {int16_t(a.lo + b.lo), int16_t(a.hi + b.hi)};
  }
  static Value max(Value a, Value b) {
    return {a.lo > b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi};
  }
};

}  // namespace lanes

// ---------------------------------------------------------------------------
// Tile machinery. One tile owns an N x N block of the (j, k) slice plus a
// one-cell halo row/column; after processing slice i its square holds the
// tensor cells M[i, j0..j0+N, k0..k0+N].

enum class BoundaryDirection { RightColumn, DownRow };

template <class L>
struct BoundaryMessage {
  BoundaryDirection direction{};
  int32_t slice_index = 0;
  std::vector<typename L::Value> values;  // N+1 cells
};

/// Geometry and scoring shared by every tile of one team.
struct TeamLayout {
  int32_t n = 1;      // tile side N
  int32_t width = 1;  // tiles per grid side (sqrt of the worker count)
  int32_t a = 0, b = 0, c = 0;
  ScoringScheme scheme{};
  AlignmentMode mode = AlignmentMode::Global;
};

template <class L>
struct TileState {
  using Value = typename L::Value;

  int32_t row = 0, col = 0;  // grid position
  int32_t j0 = 0, k0 = 0;    // square covers rows j0..j0+n, cols k0..k0+n

  std::vector<Value> square;           // (n+1)^2, row-major
  std::vector<Value> col_in, row_in;   // incoming boundaries for the current slice
  std::array<std::vector<char>, L::kCount> s1_chunk, s2_chunk;  // n owned chars per lane

  // sigma(s1[p], s2[q]) is slice-invariant; precomputed once per tile.
  std::vector<Value> sop12;
  // scratch: previous-slice rows and the new halo row/column
  std::vector<Value> prev_up, prev_cur, halo_row, halo_col, sig01, sig02;
};

/// Per-lane running best with deterministic tie-breaking: larger value wins,
/// equal values break to the lexicographically smallest coordinates, so the
/// result is independent of scan order.
struct LaneBest {
  int32_t value = std::numeric_limits<int32_t>::min();
  Coords at{std::numeric_limits<int32_t>::max(), 0, 0};
  bool valid = false;

  void offer(int32_t v, Coords c) {
    if (!valid || v > value || (v == value && c < at)) {
      value = v;
      at = c;
      valid = true;
    }
  }
  void merge(const LaneBest& other) {
    if (other.valid) offer(other.value, other.at);
  }
};

template <class L>
TileState<L> make_tile(const TeamLayout& ly,
                       const std::array<std::string_view, L::kCount>& s1,
                       const std::array<std::string_view, L::kCount>& s2, int32_t row,
                       int32_t col) {
  TileState<L> ts;
  const int32_t n = ly.n;
  const size_t stride = size_t(n) + 1;
  ts.row = row;
  ts.col = col;
  ts.j0 = row * n;
  ts.k0 = col * n;
  ts.square.assign(stride * stride, L::splat(0));
  ts.col_in.assign(stride, L::splat(0));
  ts.row_in.assign(stride, L::splat(0));
  ts.prev_up.assign(stride, L::splat(0));
  ts.prev_cur.assign(stride, L::splat(0));
  ts.halo_row.assign(stride, L::splat(0));
  ts.halo_col.assign(stride, L::splat(0));
  ts.sig01.assign(size_t(n), L::splat(0));
  ts.sig02.assign(size_t(n), L::splat(0));
  for (int lane = 0; lane < L::kCount; ++lane) {
    ts.s1_chunk[lane].resize(size_t(n), 'A');
    ts.s2_chunk[lane].resize(size_t(n), 'A');
    for (int32_t p = 0; p < n; ++p) {
      const size_t j = size_t(ts.j0 + p);
      if (j < s1[lane].size()) ts.s1_chunk[lane][p] = s1[lane][j];
    }
    for (int32_t q = 0; q < n; ++q) {
      const size_t k = size_t(ts.k0 + q);
      if (k < s2[lane].size()) ts.s2_chunk[lane][q] = s2[lane][k];
    }
  }
  ts.sop12.assign(size_t(n) * size_t(n), L::splat(0));
  for (int32_t p = 0; p < n; ++p) {
    for (int32_t q = 0; q < n; ++q) {
      int32_t per_lane[L::kCount];
      for (int lane = 0; lane < L::kCount; ++lane) {
        per_lane[lane] = sigma(ts.s1_chunk[lane][p], ts.s2_chunk[lane][q], ly.scheme);
      }
      ts.sop12[size_t(p) * n + q] = L::pack(per_lane);
    }
  }
  return ts;
}

/// Computes one slice of one tile. On entry the square holds the previous
/// slice (garbage for slice 0, which reads nothing); col_in/row_in hold the
/// neighbours' just-finished boundaries for this slice (edge tiles compute
/// their own face values instead). On exit the square holds this slice.
///
/// `best` collects score candidates for semi-global/local extraction; pass
/// nullptr for global. Cells in padded rows/columns (beyond b or c) copy
/// their top/left neighbour and are never offered to `best`.
template <class L>
void tile_step(const TeamLayout& ly, TileState<L>& ts, int32_t slice,
               const std::array<char, L::kCount>& s0ch,
               std::array<LaneBest, L::kCount>* best) {
  using V = typename L::Value;
  const int32_t n = ly.n;
  const size_t stride = size_t(n) + 1;
  const bool global = ly.mode == AlignmentMode::Global;
  const bool local = ly.mode == AlignmentMode::Local;
  const bool semi = ly.mode == AlignmentMode::SemiGlobal;
  const bool init = slice == 0;
  const bool top_edge = ts.row == 0;
  const bool left_edge = ts.col == 0;
  const V vzero = L::splat(0);
  const V vgap2 = L::splat(2 * ly.scheme.gap);

  V* const square = ts.square.data();
  auto cell = [&](int32_t p, int32_t q) -> V& { return square[size_t(p) * stride + q]; };
  auto floor0 = [&](V v) { return local ? L::max(v, vzero) : v; };
  auto axis_value = [&](int32_t dist) {
    return global ? L::splat(2 * dist * ly.scheme.gap) : vzero;
  };
  auto track = [&](int32_t j, int32_t k, V v) {
    if (best == nullptr) return;
    if (semi && slice != ly.a && j != ly.b && k != ly.c) return;
    for (int lane = 0; lane < L::kCount; ++lane) {
      (*best)[lane].offer(L::get(v, lane), Coords{slice, j, k});
    }
  };

  if (!init) {
    for (int32_t p = 0; p < n; ++p) {
      int32_t per_lane[L::kCount];
      for (int lane = 0; lane < L::kCount; ++lane) {
        per_lane[lane] = sigma(s0ch[lane], ts.s1_chunk[lane][p], ly.scheme);
      }
      ts.sig01[p] = L::pack(per_lane);
    }
    for (int32_t q = 0; q < n; ++q) {
      int32_t per_lane[L::kCount];
      for (int lane = 0; lane < L::kCount; ++lane) {
        per_lane[lane] = sigma(s0ch[lane], ts.s2_chunk[lane][q], ly.scheme);
      }
      ts.sig02[q] = L::pack(per_lane);
    }
  }

  // New halo row: tensor cells (slice, j0, k0..k0+n). Top-edge tiles compute
  // the j = 0 face; everyone else received it from the tile above.
  V* const hr = ts.halo_row.data();
  if (top_edge) {
    hr[0] = left_edge ? axis_value(slice) : ts.col_in[0];
    for (int32_t q = 1; q <= n; ++q) {
      const int32_t k = ts.k0 + q;
      if (k > ly.c) {
        hr[q] = hr[q - 1];  // padded column
      } else if (init) {
        hr[q] = axis_value(k);
      } else {
        V v = L::add(cell(0, q - 1), L::add(ts.sig02[q - 1], vgap2));
        v = L::max(v, L::add(cell(0, q), vgap2));
        v = L::max(v, L::add(hr[q - 1], vgap2));
        hr[q] = floor0(v);
      }
    }
  } else {
    std::copy(ts.row_in.begin(), ts.row_in.end(), hr);
  }

  // New halo column: tensor cells (slice, j0..j0+n, k0). Left-edge tiles
  // compute the k = 0 face.
  V* const hc = ts.halo_col.data();
  hc[0] = hr[0];
  if (left_edge) {
    for (int32_t p = 1; p <= n; ++p) {
      const int32_t j = ts.j0 + p;
      if (j > ly.b) {
        hc[p] = hc[p - 1];  // padded row
      } else if (init) {
        hc[p] = axis_value(j);
      } else {
        V v = L::add(cell(p - 1, 0), L::add(ts.sig01[p - 1], vgap2));
        v = L::max(v, L::add(cell(p, 0), vgap2));
        v = L::max(v, L::add(hc[p - 1], vgap2));
        hc[p] = floor0(v);
      }
    }
  } else {
    std::copy(ts.col_in.begin(), ts.col_in.end(), hc);
  }

  // Score-extraction bookkeeping for the halo cells this tile is responsible
  // for (the slice is partitioned so that every real cell is offered once).
  if (top_edge) {
    for (int32_t q = left_edge ? 0 : 1; q <= n; ++q) {
      if (ts.k0 + q <= ly.c) track(0, ts.k0 + q, hr[q]);
    }
  }
  if (left_edge) {
    for (int32_t p = 1; p <= n; ++p) {
      if (ts.j0 + p <= ly.b) track(ts.j0 + p, 0, hc[p]);
    }
  }

  // Owned N x N cells, row-wise. prev_up/prev_cur roll the previous slice's
  // rows while the square is overwritten in place.
  V* prev_up = ts.prev_up.data();
  V* prev_cur = ts.prev_cur.data();
  if (!init) std::copy(square, square + stride, prev_up);
  std::copy(hr, hr + stride, square);  // square row 0 := new halo row

  for (int32_t p = 1; p <= n; ++p) {
    if (!init) std::copy(square + size_t(p) * stride, square + size_t(p + 1) * stride, prev_cur);
    const int32_t j = ts.j0 + p;
    const bool j_padded = j > ly.b;
    V left = hc[p];
    cell(p, 0) = left;
    const V* const sop12_row = ts.sop12.data() + size_t(p - 1) * n;
    V* const out_row = square + size_t(p) * stride;
    V* const up_row = square + size_t(p - 1) * stride;
    if (init) {
      for (int32_t q = 1; q <= n; ++q) {
        const int32_t k = ts.k0 + q;
        V v;
        if (k > ly.c) {
          v = left;
        } else if (j_padded) {
          v = up_row[q];
        } else {
          v = L::add(up_row[q - 1], L::add(sop12_row[q - 1], vgap2));
          v = L::max(v, L::add(up_row[q], vgap2));
          v = L::max(v, L::add(left, vgap2));
          v = floor0(v);
          track(j, k, v);
        }
        out_row[q] = v;
        left = v;
      }
    } else {
      const V sig01_p = ts.sig01[p - 1];
      for (int32_t q = 1; q <= n; ++q) {
        const int32_t k = ts.k0 + q;
        V v;
        if (k > ly.c) {
          v = left;
        } else if (j_padded) {
          v = up_row[q];
        } else {
          // the seven predecessor terms of the recurrence
          v = L::add(prev_up[q - 1], L::add(sig01_p, L::add(ts.sig02[q - 1], sop12_row[q - 1])));
          v = L::max(v, L::add(prev_up[q], L::add(sig01_p, vgap2)));
          v = L::max(v, L::add(prev_cur[q - 1], L::add(ts.sig02[q - 1], vgap2)));
          v = L::max(v, L::add(up_row[q - 1], L::add(sop12_row[q - 1], vgap2)));
          v = L::max(v, L::add(prev_cur[q], vgap2));
          v = L::max(v, L::add(up_row[q], vgap2));
          v = L::max(v, L::add(left, vgap2));
          v = floor0(v);
          track(j, k, v);
        }
        out_row[q] = v;
        left = v;
      }
    }
    std::swap(prev_up, prev_cur);
  }
}

/// Spec-shaped wrapper used by tests: runs one slice and materializes the
/// outgoing boundary messages (last column rightward, last row downward).
template <class L>
std::pair<BoundaryMessage<L>, BoundaryMessage<L>> sweep_tile_slice(
    const TeamLayout& ly, TileState<L>& ts, int32_t slice,
    const std::array<char, L::kCount>& s0ch,
    std::array<LaneBest, L::kCount>* best = nullptr) {
  tile_step(ly, ts, slice, s0ch, best);
  const size_t stride = size_t(ly.n) + 1;
  BoundaryMessage<L> right{BoundaryDirection::RightColumn, slice, {}};
  BoundaryMessage<L> down{BoundaryDirection::DownRow, slice, {}};
  right.values.resize(stride);
  down.values.resize(stride);
  for (size_t p = 0; p < stride; ++p) right.values[p] = ts.square[p * stride + ly.n];
  for (size_t q = 0; q < stride; ++q) down.values[q] = ts.square[size_t(ly.n) * stride + q];
  return {std::move(right), std::move(down)};
}

// ---------------------------------------------------------------------------
// Team runner: the anti-diagonal pipeline. Tile (r, c) processes slice i at
// step i + r + c; boundaries travel through double-buffered mailboxes whose
// slice tags assert the in-order consumption invariant.

template <class L>
struct TeamResult {
  std::array<int32_t, L::kCount> score{};
  std::array<Coords, L::kCount> end{};
};

namespace detail {

template <class L>
struct Mailbox {
  std::vector<typename L::Value> slots;  // 2 * (n+1)
  std::array<int32_t, 2> tag{-1, -1};
};

}  // namespace detail

template <class L>
TeamResult<L> run_team(const TeamLayout& ly, const std::array<std::string_view, L::kCount>& s0,
                       const std::array<std::string_view, L::kCount>& s1,
                       const std::array<std::string_view, L::kCount>& s2, int32_t team_threads) {
  using V = typename L::Value;
  const int32_t n = ly.n, tw = ly.width;
  const size_t stride = size_t(n) + 1;
  const int32_t tile_count = tw * tw;
  const bool want_best = ly.mode != AlignmentMode::Global;

  std::vector<TileState<L>> tiles;
  tiles.reserve(tile_count);
  for (int32_t r = 0; r < tw; ++r) {
    for (int32_t c = 0; c < tw; ++c) tiles.push_back(make_tile<L>(ly, s1, s2, r, c));
  }
  std::vector<detail::Mailbox<L>> right_mb(tile_count), down_mb(tile_count);
  for (auto* mbs : {&right_mb, &down_mb}) {
    for (auto& mb : *mbs) mb.slots.assign(2 * stride, L::splat(0));
  }
  std::vector<std::array<LaneBest, L::kCount>> bests(want_best ? tile_count : 0);

  const int32_t steps = ly.a + 2 * (tw - 1) + 1;

  auto run_tile_at_step = [&](int32_t t, int32_t s) {
    const int32_t r = t / tw, c = t % tw;
    const int32_t i = s - r - c;
    if (i < 0 || i > ly.a) return;
    TileState<L>& ts = tiles[t];
    if (c > 0) {
      auto& mb = right_mb[t - 1];
      if (mb.tag[i & 1] != i) {
        throw std::logic_error("pipeline: column boundary for slice " + std::to_string(i) +
                               " not available in order");
      }
      std::copy(mb.slots.begin() + (i & 1) * stride, mb.slots.begin() + ((i & 1) + 1) * stride,
                ts.col_in.begin());
    }
    if (r > 0) {
      auto& mb = down_mb[t - tw];
      if (mb.tag[i & 1] != i) {
        throw std::logic_error("pipeline: row boundary for slice " + std::to_string(i) +
                               " not available in order");
      }
      std::copy(mb.slots.begin() + (i & 1) * stride, mb.slots.begin() + ((i & 1) + 1) * stride,
                ts.row_in.begin());
    }
    std::array<char, L::kCount> s0ch;
    s0ch.fill('A');
    if (i >= 1) {
      for (int lane = 0; lane < L::kCount; ++lane) s0ch[lane] = s0[lane][i - 1];
    }
    tile_step(ly, ts, i, s0ch, want_best ? &bests[t] : nullptr);
    if (c + 1 < tw) {
      auto& mb = right_mb[t];
      V* slot = mb.slots.data() + (i & 1) * stride;
      for (size_t p = 0; p < stride; ++p) slot[p] = ts.square[p * stride + n];
      mb.tag[i & 1] = i;
    }
    if (r + 1 < tw) {
      auto& mb = down_mb[t];
      V* slot = mb.slots.data() + (i & 1) * stride;
      std::copy(ts.square.begin() + size_t(n) * stride, ts.square.end(), slot);
      mb.tag[i & 1] = i;
    }
  };

  const int32_t workers = std::max(1, std::min(team_threads, tile_count));
  if (workers == 1) {
    for (int32_t s = 0; s < steps; ++s) {
      for (int32_t t = 0; t < tile_count; ++t) run_tile_at_step(t, s);
    }
  } else {
    // Lockstep pipeline: a barrier separates steps, so each mailbox slot is
    // written one step before it is read. Tiles are fixed to workers; the
    // assignment cannot affect results, only timing.
    std::barrier sync(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int32_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int32_t s = 0; s < steps; ++s) {
          for (int32_t t = w; t < tile_count; t += workers) run_tile_at_step(t, s);
          sync.arrive_and_wait();
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  TeamResult<L> out;
  if (!want_best) {
    const int32_t r_own = ly.b > 0 ? (ly.b - 1) / n : 0;
    const int32_t c_own = ly.c > 0 ? (ly.c - 1) / n : 0;
    const TileState<L>& ts = tiles[r_own * tw + c_own];
    const V v = ts.square[size_t(ly.b - ts.j0) * stride + size_t(ly.c - ts.k0)];
    for (int lane = 0; lane < L::kCount; ++lane) {
      out.score[lane] = L::get(v, lane);
      out.end[lane] = Coords{ly.a, ly.b, ly.c};
    }
  } else {
    std::array<LaneBest, L::kCount> merged{};
    for (const auto& tb : bests) {
      for (int lane = 0; lane < L::kCount; ++lane) merged[lane].merge(tb[lane]);
    }
    for (int lane = 0; lane < L::kCount; ++lane) {
      out.score[lane] = merged[lane].value;
      out.end[lane] = merged[lane].at;
    }
  }
  return out;
}

}  // namespace trioalign
