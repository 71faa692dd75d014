#include "trioalign/dispatch.hpp"

#include <chrono>
#include <stdexcept>
#include <thread>

#include "trioalign/errors.hpp"
#include "trioalign/metrics.hpp"

namespace trioalign {

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Blocked: return "blocked";
    case Strategy::Interleaved: return "interleaved";
    case Strategy::Dynamic: return "dynamic";
  }
  return "?";
}

Strategy strategy_from_name(std::string_view name) {
  if (name == "blocked") return Strategy::Blocked;
  if (name == "interleaved") return Strategy::Interleaved;
  if (name == "dynamic") return Strategy::Dynamic;
  throw ParseError("unknown partition strategy '" + std::string(name) +
                   "' (expected blocked, interleaved, or dynamic)");
}

PartitionPlan plan_partition(const std::vector<uint64_t>& cell_counts, Strategy strategy,
                             int32_t worker_count) {
  if (worker_count < 1) throw ConfigError("worker count must be >= 1");
  if (cell_counts.empty()) throw ConfigError("cannot partition an empty dataset");

  const size_t s = cell_counts.size();
  PartitionPlan plan{strategy, worker_count, std::vector<int32_t>(s, 0)};
  switch (strategy) {
    case Strategy::Blocked: {
      const size_t chunk = (s + size_t(worker_count) - 1) / size_t(worker_count);
      for (size_t i = 0; i < s; ++i) plan.assignment[i] = int32_t(i / chunk);
      break;
    }
    case Strategy::Interleaved: {
      for (size_t i = 0; i < s; ++i) plan.assignment[i] = int32_t(i % size_t(worker_count));
      break;
    }
    case Strategy::Dynamic: {
      std::vector<uint64_t> load(size_t(worker_count), 0);
      for (size_t i = 0; i < s; ++i) {
        int32_t best = 0;
        for (int32_t w = 1; w < worker_count; ++w) {
          if (load[w] < load[best]) best = w;  // ties keep the smallest index
        }
        plan.assignment[i] = best;
        load[best] += cell_counts[i];
      }
      break;
    }
  }
  return plan;
}

namespace {

void run_one(const Triplet& t, const ScoringScheme& scheme, AlignmentMode mode,
             const EngineConfig& cfg, TripletOutcome& out) {
  try {
    const AlignmentResult r = align(t, scheme, mode, cfg);
    out.ok = true;
    out.score = r.score;
    out.end = r.end;
  } catch (const std::exception& e) {
    out.ok = false;
    out.error = e.what();
  }
}

bool same_shape(const Triplet& x, const Triplet& y) {
  return x.s0.size() == y.s0.size() && x.s1.size() == y.s1.size() && x.s2.size() == y.s2.size();
}

void run_worker(const std::vector<Triplet>& dataset, const std::vector<size_t>& idxs,
                const ScoringScheme& scheme, AlignmentMode mode, const EngineConfig& cfg,
                std::vector<TripletOutcome>& outcomes, WorkerStats& stats) {
  const auto t0 = std::chrono::steady_clock::now();
  size_t pos = 0;
  while (pos < idxs.size()) {
    const Triplet& t1 = dataset[idxs[pos]];
    if (cfg.lane_mode == LaneMode::PackedDual16 && pos + 1 < idxs.size()) {
      const Triplet& t2 = dataset[idxs[pos + 1]];
      if (same_shape(t1, t2) && packed_bound_ok(t1, scheme) &&
          t1.cell_count() <= cfg.cell_budget) {
        TripletOutcome& o1 = outcomes[idxs[pos]];
        TripletOutcome& o2 = outcomes[idxs[pos + 1]];
        try {
          const auto [r1, r2] = align_packed(t1, t2, scheme, mode, cfg);
          o1.ok = true;
          o1.score = r1.score;
          o1.end = r1.end;
          o2.ok = true;
          o2.score = r2.score;
          o2.end = r2.end;
        } catch (const std::exception& e) {
          o1.ok = o2.ok = false;
          o1.error = o2.error = e.what();
        }
        pos += 2;
        continue;
      }
    }
    run_one(t1, scheme, mode, cfg, outcomes[idxs[pos]]);
    ++pos;
  }
  const auto t1 = std::chrono::steady_clock::now();
  stats.seconds = std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

BatchReport run_batch(const std::vector<Triplet>& dataset, const ScoringScheme& scheme,
                      AlignmentMode mode, const EngineConfig& cfg, const PartitionPlan& plan) {
  if (plan.assignment.size() != dataset.size()) {
    throw ConfigError("partition plan covers " + std::to_string(plan.assignment.size()) +
                      " triplets, dataset has " + std::to_string(dataset.size()));
  }
  const int32_t workers = plan.worker_count;
  for (int32_t w : plan.assignment) {
    if (w < 0 || w >= workers) throw ConfigError("partition plan names an out-of-range worker");
  }

  BatchReport report;
  report.per_triplet.resize(dataset.size());
  report.per_worker.resize(size_t(workers));

  std::vector<std::vector<size_t>> by_worker(size_t(workers));
  for (size_t i = 0; i < dataset.size(); ++i) {
    const int32_t w = plan.assignment[i];
    by_worker[w].push_back(i);
    report.per_triplet[i].id = dataset[i].id;
    report.per_triplet[i].worker = w;
    report.per_triplet[i].cells = dataset[i].cell_count();
    report.per_worker[w].assigned += 1;
    report.per_worker[w].cells += dataset[i].cell_count();
  }

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::thread> pool;
  pool.reserve(size_t(workers));
  for (int32_t w = 0; w < workers; ++w) {
    pool.emplace_back(run_worker, std::cref(dataset), std::cref(by_worker[w]), std::cref(scheme),
                      mode, std::cref(cfg), std::ref(report.per_triplet),
                      std::ref(report.per_worker[w]));
  }
  for (auto& th : pool) th.join();
  const auto t1 = std::chrono::steady_clock::now();

  report.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  for (const auto& o : report.per_triplet) {
    if (o.ok) report.scored_cells += o.cells;
  }
  report.tcups = report.wall_seconds > 0 ? tcups(report.scored_cells, report.wall_seconds) : 0.0;
  return report;
}

}  // namespace trioalign
