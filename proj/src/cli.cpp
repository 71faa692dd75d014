#include "trioalign/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "trioalign/dataset.hpp"
#include "trioalign/dispatch.hpp"
#include "trioalign/errors.hpp"
#include "trioalign/fasta.hpp"
#include "trioalign/metrics.hpp"
#include "trioalign/oracle.hpp"
#include "trioalign/rng.hpp"
#include "trioalign/tiled.hpp"

namespace trioalign {

namespace {

// ---------------------------------------------------------------------------
// formatting: locale-independent, stable across runs

std::string fmt_fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// CSV fields carry no quoting layer; separators in free text become ';'.
std::string csv_safe(std::string text) {
  for (char& ch : text) {
    if (ch == ',' || ch == '\n' || ch == '\r') ch = ';';
  }
  return text;
}

struct Output {
  std::ofstream file;
  std::ostream* os = nullptr;

  static Output open(const std::string& path) {
    Output out;
    if (path.empty() || path == "-") {
      out.os = &std::cout;
      return out;
    }
    out.file.open(path, std::ios::binary);
    if (!out.file) throw ParseError("cannot open output file '" + path + "'");
    out.os = &out.file;
    return out;
  }
  std::ostream& stream() { return *os; }
};

std::vector<Triplet> load_triplets(const std::string& path) {
  if (path.empty() || path == "-") return parse_fasta_triplets(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  return parse_fasta_triplets(in);
}

std::vector<AlignmentRecord> load_alignments(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open alignment file '" + path + "'");
  return parse_fasta_alignments(in);
}

std::pair<double, double> parse_rates(const std::string& text) {
  const size_t sep = text.find(':');
  if (sep == std::string::npos) throw ParseError("rates: expected MUTATION:INDEL");
  auto parse_one = [&](const std::string& part) {
    double value = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size()) {
      throw ParseError("rates: bad number '" + part + "'");
    }
    return value;
  };
  return {parse_one(text.substr(0, sep)), parse_one(text.substr(sep + 1))};
}

// ---------------------------------------------------------------------------
// shared flag bundles

struct CommonFlags {
  int32_t match = 1;
  int32_t mismatch = -1;
  int32_t gap = -2;
  std::string mode = "global";
  int32_t tile_size = 0;  // 0 = auto
  int32_t workers = 1;
  std::string partition = "blocked";
  bool packed = false;
  uint64_t cell_budget = uint64_t{1} << 31;
  int32_t team_threads = 1;
  std::string in_path;
  std::string out_path;

  void attach_scheme(CLI::App* cmd) {
    cmd->add_option("--match", match, "match score (> 0)");
    cmd->add_option("--mismatch", mismatch, "mismatch score (<= 0)");
    cmd->add_option("--gap", gap, "gap score (<= 0)");
    cmd->add_option("--mode", mode, "global | semiglobal | local");
  }
  void attach_engine(CLI::App* cmd) {
    cmd->add_option("--tile-size", tile_size, "tile side N (default: timed auto-sweep)");
    cmd->add_option("--workers", workers, "worker pool size");
    cmd->add_option("--partition", partition, "blocked | interleaved | dynamic");
    cmd->add_flag("--packed", packed, "packed dual 16-bit lanes (pairs same-shape triplets)");
    cmd->add_option("--cell-budget", cell_budget, "max cells per triplet");
    cmd->add_option("--team-threads", team_threads, "threads per tile team");
  }

  ScoringScheme scheme() const { return make_scheme(match, mismatch, gap); }
  AlignmentMode alignment_mode() const { return mode_from_name(mode); }
  EngineConfig engine() const {
    EngineConfig cfg;
    cfg.tile_size = tile_size > 0 ? tile_size : auto_tile_size();
    cfg.lane_mode = packed ? LaneMode::PackedDual16 : LaneMode::Single32;
    cfg.cell_budget = cell_budget;
    cfg.team_threads = team_threads;
    cfg.validate();
    return cfg;
  }
};

// ---------------------------------------------------------------------------
// subcommands

int run_align(const CommonFlags& flags) {
  const auto triplets = load_triplets(flags.in_path);
  auto out = Output::open(flags.out_path);
  out.stream() << "id,mode,score,i,j,k,error\n";
  if (!triplets.empty()) {
    std::vector<uint64_t> cells;
    cells.reserve(triplets.size());
    for (const auto& t : triplets) cells.push_back(t.cell_count());
    const auto plan =
        plan_partition(cells, strategy_from_name(flags.partition), flags.workers);
    const auto report =
        run_batch(triplets, flags.scheme(), flags.alignment_mode(), flags.engine(), plan);
    for (const auto& o : report.per_triplet) {
      out.stream() << csv_safe(o.id) << ',' << flags.mode << ',';
      if (o.ok) {
        out.stream() << o.score << ',' << o.end.i << ',' << o.end.j << ',' << o.end.k << ",\n";
      } else {
        out.stream() << ",,,," << csv_safe(o.error) << '\n';
      }
    }
  }
  return 0;
}

int run_oracle(const CommonFlags& flags, const std::string& rows_out) {
  const auto triplets = load_triplets(flags.in_path);
  const ScoringScheme scheme = flags.scheme();
  const AlignmentMode mode = flags.alignment_mode();
  auto out = Output::open(flags.out_path);
  out.stream() << "id,mode,score,i,j,k,row0,row1,row2,error\n";

  std::ofstream rows_file;
  if (!rows_out.empty()) {
    rows_file.open(rows_out, std::ios::binary);
    if (!rows_file) throw ParseError("cannot open rows output file '" + rows_out + "'");
  }

  for (const auto& t : triplets) {
    out.stream() << csv_safe(t.id) << ',' << flags.mode << ',';
    try {
      const AlignmentResult r = oracle_align(t, scheme, mode, /*with_rows=*/true,
                                             flags.cell_budget);
      out.stream() << r.score << ',' << r.end.i << ',' << r.end.j << ',' << r.end.k << ','
                   << r.rows[0] << ',' << r.rows[1] << ',' << r.rows[2] << ",\n";
      if (rows_file.is_open()) {
        for (int d = 0; d < 3; ++d) {
          write_fasta_record(rows_file, t.id, "s" + std::to_string(d), r.rows[d]);
        }
      }
    } catch (const std::exception& e) {
      out.stream() << ",,,,,,," << csv_safe(e.what()) << '\n';
    }
  }
  return 0;
}

int run_generate(const std::string& spec_text, const std::string& rates_text, uint64_t seed,
                 const std::string& out_path, const std::string& ref_path) {
  DatasetSpec spec = DatasetSpec::parse(spec_text);
  std::tie(spec.mutation_rate, spec.indel_rate) = parse_rates(rates_text);
  spec.seed = seed;
  spec.validate();
  const GeneratedDataset data = generate_dataset(spec);

  auto out = Output::open(out_path);
  for (const auto& t : data.triplets) {
    write_fasta_record(out.stream(), t.id, "s0", t.s0);
    write_fasta_record(out.stream(), t.id, "s1", t.s1);
    write_fasta_record(out.stream(), t.id, "s2", t.s2);
  }
  if (!ref_path.empty()) {
    if (!data.has_references) {
      throw ParseError("this dataset spec records no reference alignment (unequal fixed lengths)");
    }
    auto ref = Output::open(ref_path);
    for (size_t i = 0; i < data.triplets.size(); ++i) {
      for (int d = 0; d < 3; ++d) {
        write_fasta_record(ref.stream(), data.triplets[i].id, "s" + std::to_string(d),
                           data.references[i][d]);
      }
    }
  }
  return 0;
}

int run_accuracy(const std::string& est_path, const std::string& ref_path,
                 const std::string& out_path) {
  const auto est = load_alignments(est_path);
  const auto ref = load_alignments(ref_path);
  if (est.size() != ref.size()) {
    throw ParseError("estimated and reference files hold different numbers of alignments (" +
                     std::to_string(est.size()) + " vs " + std::to_string(ref.size()) + ")");
  }
  auto strip = [](const std::string& row) {
    std::string s;
    for (char ch : row) {
      if (ch != kGap) s.push_back(ch);
    }
    return s;
  };
  auto out = Output::open(out_path);
  out.stream() << "id,spfp,spfn,error\n";
  for (size_t i = 0; i < est.size(); ++i) {
    out.stream() << csv_safe(est[i].id) << ',';
    bool same = true;
    for (int d = 0; d < 3; ++d) {
      if (strip(est[i].rows[d]) != strip(ref[i].rows[d])) same = false;
    }
    if (!same) {
      out.stream() << ",,alignments are not over the same ungapped sequences\n";
      continue;
    }
    const auto [spfp, spfn] = spfp_spfn(homology_pairs(est[i].rows), homology_pairs(ref[i].rows));
    out.stream() << fmt_g(spfp) << ',' << fmt_g(spfn) << ",\n";
  }
  return 0;
}

struct BenchRow {
  const BatchReport& report;
  bool stable;
};

void write_bench_csv(std::ostream& os, const std::string& mode, const BatchReport& report,
                     const std::vector<std::pair<int32_t, BatchReport>>& sweep, bool stable) {
  os << "record,id,worker,mode,score,i,j,k,triplets,cells,seconds,tcups,tile_n,error\n";
  for (const auto& o : report.per_triplet) {
    os << "triplet," << csv_safe(o.id) << ',' << o.worker << ',' << mode << ',';
    if (o.ok) {
      os << o.score << ',' << o.end.i << ',' << o.end.j << ',' << o.end.k;
    } else {
      os << ",,,";
    }
    os << ",," << o.cells << ",,,," << (o.ok ? "" : csv_safe(o.error)) << '\n';
  }
  for (size_t w = 0; w < report.per_worker.size(); ++w) {
    const auto& s = report.per_worker[w];
    os << "worker,," << w << ",,,,,," << s.assigned << ',' << s.cells << ','
       << fmt_fixed6(stable ? 0.0 : s.seconds) << ",,,\n";
  }
  os << "total,,,,,,,," << report.per_triplet.size() << ',' << report.scored_cells << ','
     << fmt_fixed6(stable ? 0.0 : report.wall_seconds) << ','
     << fmt_g(stable ? 0.0 : report.tcups) << ",,\n";
  for (const auto& [n, rep] : sweep) {
    os << "sweep,,,,,,,," << rep.per_triplet.size() << ',' << rep.scored_cells << ','
       << fmt_fixed6(stable ? 0.0 : rep.wall_seconds) << ',' << fmt_g(stable ? 0.0 : rep.tcups)
       << ',' << n << ",\n";
  }
}

int run_bench(const CommonFlags& flags, const std::string& spec_text,
              const std::string& rates_text, uint64_t seed, const std::string& sweep_text,
              bool stable) {
  std::vector<Triplet> triplets;
  if (!spec_text.empty()) {
    DatasetSpec spec = DatasetSpec::parse(spec_text);
    std::tie(spec.mutation_rate, spec.indel_rate) = parse_rates(rates_text);
    spec.seed = seed;
    spec.validate();
    triplets = generate_dataset(spec).triplets;
  } else if (!flags.in_path.empty()) {
    triplets = load_triplets(flags.in_path);
  } else {
    throw CLI::ValidationError("bench", "either --spec or --in is required");
  }
  if (triplets.empty()) throw ParseError("bench: empty dataset");

  std::vector<uint64_t> cells;
  cells.reserve(triplets.size());
  for (const auto& t : triplets) cells.push_back(t.cell_count());
  const auto plan = plan_partition(cells, strategy_from_name(flags.partition), flags.workers);
  const ScoringScheme scheme = flags.scheme();
  const AlignmentMode mode = flags.alignment_mode();

  const auto report = run_batch(triplets, scheme, mode, flags.engine(), plan);

  std::vector<std::pair<int32_t, BatchReport>> sweep;
  if (!sweep_text.empty()) {
    std::stringstream ss(sweep_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const int32_t n = int32_t(std::stol(item));
      EngineConfig cfg = flags.engine();
      cfg.tile_size = n;
      cfg.validate();
      sweep.emplace_back(n, run_batch(triplets, scheme, mode, cfg, plan));
    }
  }

  auto out = Output::open(flags.out_path);
  write_bench_csv(out.stream(), flags.mode, report, sweep, stable);
  return 0;
}

}  // namespace

int32_t auto_tile_size() {
  static int32_t cached = 0;
  if (cached) return cached;

  CounterRng rng(0x7210a11671ull, 1);
  Triplet probe;
  probe.id = "probe";
  for (auto* seq : {&probe.s0, &probe.s1, &probe.s2}) {
    for (int i = 0; i < 96; ++i) seq->push_back(rng.base());
  }
  const ScoringScheme scheme{1, -1, -2};
  int32_t best_n = 8;
  double best_time = std::numeric_limits<double>::max();
  for (int32_t n : {2, 4, 8, 16}) {
    EngineConfig cfg;
    cfg.tile_size = n;
    double elapsed = std::numeric_limits<double>::max();
    for (int rep = 0; rep < 2; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      (void)align(probe, scheme, AlignmentMode::Global, cfg);
      const auto t1 = std::chrono::steady_clock::now();
      elapsed = std::min(elapsed, std::chrono::duration<double>(t1 - t0).count());
    }
    if (elapsed < best_time) {
      best_time = elapsed;
      best_n = n;
    }
  }
  cached = best_n;
  return cached;
}

int cli_main(std::vector<std::string> args) {
  CLI::App app{"trioalign: exact 3-way sequence alignment"};
  app.require_subcommand(1);

  CommonFlags flags;

  auto* align_cmd = app.add_subcommand("align", "align triplets from FASTA, emit a score CSV");
  flags.attach_scheme(align_cmd);
  flags.attach_engine(align_cmd);
  align_cmd->add_option("--in", flags.in_path, "input FASTA ('-' for stdin)")->required();
  align_cmd->add_option("--out", flags.out_path, "output CSV ('-' for stdout)");

  auto* oracle_cmd =
      app.add_subcommand("oracle", "full-tensor reference alignment with gapped rows");
  flags.attach_scheme(oracle_cmd);
  std::string rows_out;
  oracle_cmd->add_option("--in", flags.in_path, "input FASTA ('-' for stdin)")->required();
  oracle_cmd->add_option("--out", flags.out_path, "output CSV");
  oracle_cmd->add_option("--rows-out", rows_out, "also write the gapped rows as FASTA");
  oracle_cmd->add_option("--cell-budget", flags.cell_budget, "max tensor cells per triplet")
      ->default_val(kOracleCellBudget);

  auto* gen_cmd = app.add_subcommand("generate", "seeded synthetic dataset + reference rows");
  std::string spec_text, rates_text = "0:0", ref_out;
  uint64_t seed = 0;
  gen_cmd->add_option("--spec", spec_text,
                      "uniform:MIN:MAX:COUNT | fixed:A:B:C[:COUNT] | blocked:L1,..:COUNT | "
                      "cycle:L1,..:COUNT")
      ->required();
  gen_cmd->add_option("--rates", rates_text, "MUTATION:INDEL per-site probabilities");
  gen_cmd->add_option("--seed", seed, "dataset seed");
  gen_cmd->add_option("--out", flags.out_path, "dataset FASTA");
  gen_cmd->add_option("--ref-out", ref_out, "true-alignment FASTA");

  auto* acc_cmd = app.add_subcommand("accuracy", "SPFP/SPFN between two alignment FASTAs");
  std::string est_path, ref_path;
  acc_cmd->add_option("--estimated", est_path, "estimated alignment FASTA")->required();
  acc_cmd->add_option("--reference", ref_path, "reference alignment FASTA")->required();
  acc_cmd->add_option("--out", flags.out_path, "output CSV");

  auto* bench_cmd = app.add_subcommand("bench", "batch throughput report (TCUPS)");
  flags.attach_scheme(bench_cmd);
  flags.attach_engine(bench_cmd);
  std::string bench_spec, bench_rates = "0:0", sweep_text;
  uint64_t bench_seed = 0;
  bool stable = false;
  bench_cmd->add_option("--in", flags.in_path, "input FASTA");
  bench_cmd->add_option("--spec", bench_spec, "generate the dataset instead of reading one");
  bench_cmd->add_option("--rates", bench_rates, "MUTATION:INDEL for --spec");
  bench_cmd->add_option("--seed", bench_seed, "dataset seed for --spec");
  bench_cmd->add_option("--sweep-n", sweep_text, "comma list of tile sizes to sweep");
  bench_cmd->add_flag("--stable-output", stable, "zero timing fields (byte-stable CSV)");
  bench_cmd->add_option("--out", flags.out_path, "output CSV");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (align_cmd->parsed()) return run_align(flags);
    if (oracle_cmd->parsed()) return run_oracle(flags, rows_out);
    if (gen_cmd->parsed()) {
      return run_generate(spec_text, rates_text, seed, flags.out_path, ref_out);
    }
    if (acc_cmd->parsed()) return run_accuracy(est_path, ref_path, flags.out_path);
    if (bench_cmd->parsed()) {
      return run_bench(flags, bench_spec, bench_rates, bench_seed, sweep_text, stable);
    }
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const MalformedAlignmentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace trioalign
