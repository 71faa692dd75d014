#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trioalign/core.hpp"
#include "trioalign/tiled.hpp"

namespace trioalign {

enum class Strategy { Blocked, Interleaved, Dynamic };

std::string_view strategy_name(Strategy s);
Strategy strategy_from_name(std::string_view name);  // throws ParseError

/// Which worker processes each triplet. Pure function of the inputs:
/// Blocked hands out contiguous ceil(s/W) chunks, Interleaved round-robins,
/// Dynamic assigns each triplet (in input order) to the worker with the
/// least cumulative cells so far, ties to the smallest index.
struct PartitionPlan {
  Strategy strategy = Strategy::Blocked;
  int32_t worker_count = 1;
  std::vector<int32_t> assignment;  // worker index per triplet
};

PartitionPlan plan_partition(const std::vector<uint64_t>& cell_counts, Strategy strategy,
                             int32_t worker_count);

struct TripletOutcome {
  std::string id;
  int32_t worker = 0;
  uint64_t cells = 0;
  bool ok = false;
  int32_t score = 0;
  Coords end;
  std::string error;  // per-triplet failure; does not abort the batch
};

struct WorkerStats {
  int32_t assigned = 0;
  uint64_t cells = 0;  // cumulative a*b*c of assigned triplets
  double seconds = 0;
};

struct BatchReport {
  std::vector<TripletOutcome> per_triplet;  // input order
  std::vector<WorkerStats> per_worker;
  double wall_seconds = 0;
  uint64_t scored_cells = 0;  // failed triplets excluded
  double tcups = 0;
};

/// Runs the tiled engine over the dataset on worker_count concurrent
/// workers. In packed lane mode each worker greedily pairs adjacent
/// same-shape triplets of its assignment when the 16-bit bound allows,
/// falling back to single-lane calls otherwise.
BatchReport run_batch(const std::vector<Triplet>& dataset, const ScoringScheme& scheme,
                      AlignmentMode mode, const EngineConfig& cfg, const PartitionPlan& plan);

}  // namespace trioalign
