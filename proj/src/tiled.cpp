#include "trioalign/tiled.hpp"

#include <cstdlib>
#include <string>

namespace trioalign {

void EngineConfig::validate() const {
  if (tile_size < 1 || tile_size > 4096) {
    throw ConfigError("tile size must be in [1, 4096], got " + std::to_string(tile_size));
  }
  if (team_width < 0) throw ConfigError("team width must be >= 0");
  if (team_threads < 1) throw ConfigError("team threads must be >= 1");
  if (cell_budget == 0) throw ConfigError("cell budget must be positive");
}

int32_t derive_team_width(int32_t tile_size, int32_t b, int32_t c) {
  const int32_t need = std::max(b, c);
  if (need <= 0) return 1;
  return (need + tile_size - 1) / tile_size;
}

int64_t packed_score_bound(const Triplet& t, const ScoringScheme& scheme) {
  const int64_t chars = int64_t(t.s0.size()) + int64_t(t.s1.size()) + int64_t(t.s2.size());
  const int64_t per_char = std::max<int64_t>(
      {3 * std::abs(int64_t(scheme.match)), 3 * std::abs(int64_t(scheme.mismatch)),
       2 * std::abs(int64_t(scheme.gap))});
  return chars * per_char;
}

bool packed_bound_ok(const Triplet& t, const ScoringScheme& scheme) {
  return packed_score_bound(t, scheme) <= 32767;
}

namespace {

TeamLayout make_layout(const Triplet& t, const ScoringScheme& scheme, AlignmentMode mode,
                       const EngineConfig& cfg) {
  cfg.validate();
  if (t.cell_count() > cfg.cell_budget) {
    throw CapacityError("triplet '" + t.id + "' has " + std::to_string(t.cell_count()) +
                        " cells, over the budget of " + std::to_string(cfg.cell_budget));
  }
  TeamLayout ly;
  ly.n = cfg.tile_size;
  ly.a = int32_t(t.s0.size());
  ly.b = int32_t(t.s1.size());
  ly.c = int32_t(t.s2.size());
  ly.scheme = scheme;
  ly.mode = mode;
  ly.width = cfg.team_width > 0 ? cfg.team_width : derive_team_width(ly.n, ly.b, ly.c);
  if (int64_t(ly.width) * ly.n < std::max(ly.b, ly.c)) {
    throw ConfigError("tile grid " + std::to_string(ly.n) + "x" + std::to_string(ly.width) +
                      " cannot cover sequence lengths (" + std::to_string(ly.b) + ", " +
                      std::to_string(ly.c) + ")");
  }
  return ly;
}

}  // namespace

AlignmentResult align(const Triplet& t, const ScoringScheme& scheme, AlignmentMode mode,
                      const EngineConfig& cfg) {
  const TeamLayout ly = make_layout(t, scheme, mode, cfg);
  const auto res = run_team<lanes::Single>(ly, {t.s0}, {t.s1}, {t.s2}, cfg.team_threads);
  AlignmentResult out;
  out.score = res.score[0];
  out.mode = mode;
  out.end = res.end[0];
  return out;
}

std::pair<AlignmentResult, AlignmentResult> align_packed(const Triplet& t1, const Triplet& t2,
                                                         const ScoringScheme& scheme,
                                                         AlignmentMode mode,
                                                         const EngineConfig& cfg) {
  if (t1.s0.size() != t2.s0.size() || t1.s1.size() != t2.s1.size() ||
      t1.s2.size() != t2.s2.size()) {
    throw ShapeMismatchError("packed alignment requires identical sequence lengths ('" + t1.id +
                             "' vs '" + t2.id + "')");
  }
  const int64_t bound = packed_score_bound(t1, scheme);
  if (bound > 32767) {
    throw LaneOverflowError("score bound " + std::to_string(bound) +
                            " does not fit a signed 16-bit lane");
  }
  const TeamLayout ly = make_layout(t1, scheme, mode, cfg);
  const auto res = run_team<lanes::Dual>(ly, {t1.s0, t2.s0}, {t1.s1, t2.s1}, {t1.s2, t2.s2},
                                         cfg.team_threads);
  AlignmentResult out1, out2;
  out1.score = res.score[0];
  out1.mode = mode;
  out1.end = res.end[0];
  out2.score = res.score[1];
  out2.mode = mode;
  out2.end = res.end[1];
  return {out1, out2};
}

}  // namespace trioalign
