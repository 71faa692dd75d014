#include "trioalign/dataset.hpp"

#include <charconv>
#include <string_view>

#include "trioalign/errors.hpp"
#include "trioalign/rng.hpp"

namespace trioalign {

namespace {

int64_t parse_int(std::string_view text, std::string_view what) {
  int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("dataset spec: bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<int32_t> parse_length_list(std::string_view text) {
  std::vector<int32_t> lengths;
  for (const auto part : split(text, ',')) {
    lengths.push_back(int32_t(parse_int(part, "length")));
  }
  return lengths;
}

char other_base(char base, uint64_t pick) {
  static constexpr char kBases[] = {'A', 'C', 'G', 'T'};
  for (char b : kBases) {
    if (b == base) continue;
    if (pick == 0) return b;
    --pick;
  }
  return 'A';
}

}  // namespace

void DatasetSpec::validate() const {
  if (count < 1) throw ParseError("dataset spec: count must be >= 1");
  if (mutation_rate < 0 || mutation_rate > 1 || indel_rate < 0 || indel_rate > 1) {
    throw ParseError("dataset spec: rates must be within [0, 1]");
  }
  switch (model) {
    case LengthModel::Uniform:
      if (min_len < 0 || max_len < min_len) {
        throw ParseError("dataset spec: uniform needs 0 <= min <= max");
      }
      break;
    case LengthModel::Blocked:
    case LengthModel::InterleavedCycle:
      if (lengths.empty()) throw ParseError("dataset spec: length list must not be empty");
      for (int32_t len : lengths) {
        if (len < 0) throw ParseError("dataset spec: lengths must be >= 0");
      }
      break;
    case LengthModel::Fixed:
      if (fixed_a < 0 || fixed_b < 0 || fixed_c < 0) {
        throw ParseError("dataset spec: fixed lengths must be >= 0");
      }
      if ((fixed_a != fixed_b || fixed_b != fixed_c) &&
          (mutation_rate > 0 || indel_rate > 0)) {
        throw ParseError(
            "dataset spec: fixed with unequal lengths has no common ancestor; rates must be 0");
      }
      break;
  }
}

DatasetSpec DatasetSpec::parse(const std::string& text) {
  const auto parts = split(text, ':');
  DatasetSpec spec;
  const std::string_view kind = parts[0];
  if (kind == "uniform") {
    if (parts.size() != 4) throw ParseError("dataset spec: expected uniform:MIN:MAX:COUNT");
    spec.model = LengthModel::Uniform;
    spec.min_len = int32_t(parse_int(parts[1], "min length"));
    spec.max_len = int32_t(parse_int(parts[2], "max length"));
    spec.count = int32_t(parse_int(parts[3], "count"));
  } else if (kind == "fixed") {
    if (parts.size() != 4 && parts.size() != 5) {
      throw ParseError("dataset spec: expected fixed:A:B:C[:COUNT]");
    }
    spec.model = LengthModel::Fixed;
    spec.fixed_a = int32_t(parse_int(parts[1], "length"));
    spec.fixed_b = int32_t(parse_int(parts[2], "length"));
    spec.fixed_c = int32_t(parse_int(parts[3], "length"));
    spec.count = parts.size() == 5 ? int32_t(parse_int(parts[4], "count")) : 1;
  } else if (kind == "blocked" || kind == "cycle") {
    if (parts.size() != 3) {
      throw ParseError("dataset spec: expected " + std::string(kind) + ":L1,L2,...:COUNT");
    }
    spec.model = kind == "blocked" ? LengthModel::Blocked : LengthModel::InterleavedCycle;
    spec.lengths = parse_length_list(parts[1]);
    spec.count = int32_t(parse_int(parts[2], "count"));
  } else {
    throw ParseError("dataset spec: unknown model '" + std::string(kind) +
                     "' (expected uniform, fixed, blocked, or cycle)");
  }
  spec.validate();
  return spec;
}

GeneratedDataset generate_dataset(const DatasetSpec& spec) {
  spec.validate();
  GeneratedDataset out;
  out.triplets.reserve(size_t(spec.count));

  const bool independent_fixed =
      spec.model == DatasetSpec::LengthModel::Fixed &&
      (spec.fixed_a != spec.fixed_b || spec.fixed_b != spec.fixed_c);
  out.has_references = !independent_fixed;
  if (out.has_references) out.references.reserve(size_t(spec.count));

  for (int32_t idx = 0; idx < spec.count; ++idx) {
    CounterRng rng(spec.seed, uint64_t(idx) + 1);
    Triplet t;
    t.id = "t" + std::to_string(idx);

    if (independent_fixed) {
      for (auto [seq, len] : {std::pair{&t.s0, spec.fixed_a}, std::pair{&t.s1, spec.fixed_b},
                              std::pair{&t.s2, spec.fixed_c}}) {
        seq->reserve(size_t(len));
        for (int32_t p = 0; p < len; ++p) seq->push_back(rng.base());
      }
      out.triplets.push_back(std::move(t));
      continue;
    }

    int32_t len = 0;
    switch (spec.model) {
      case DatasetSpec::LengthModel::Uniform:
        len = int32_t(rng.range(spec.min_len, spec.max_len));
        break;
      case DatasetSpec::LengthModel::Blocked: {
        // contiguous equal-count groups, one length per group
        const size_t groups = spec.lengths.size();
        const size_t group = std::min(groups - 1, size_t(idx) * groups / size_t(spec.count));
        len = spec.lengths[group];
        break;
      }
      case DatasetSpec::LengthModel::InterleavedCycle:
        len = spec.lengths[size_t(idx) % spec.lengths.size()];
        break;
      case DatasetSpec::LengthModel::Fixed:
        len = spec.fixed_a;
        break;
    }

    std::string ancestor(size_t(len), 'A');
    for (auto& ch : ancestor) ch = rng.base();

    // Descendants column by column; deletions blank the site, insertions add
    // a column owned by one descendant. The columns are the true alignment.
    std::array<std::string, 3> rows;
    for (int32_t site = 0; site < len; ++site) {
      std::array<char, 3> col{ancestor[site], ancestor[site], ancestor[site]};
      for (int d = 0; d < 3; ++d) {
        if (spec.mutation_rate > 0 && rng.unit() < spec.mutation_rate) {
          col[d] = other_base(col[d], rng.below(3));
        }
      }
      std::array<std::array<char, 3>, 3> inserts{};
      int insert_count = 0;
      for (int d = 0; d < 3; ++d) {
        if (spec.indel_rate > 0 && rng.unit() < spec.indel_rate) {
          if (rng.below(2) == 0) {
            col[d] = kGap;  // deletion
          } else {
            std::array<char, 3> extra{kGap, kGap, kGap};
            extra[d] = rng.base();
            inserts[insert_count++] = extra;
          }
        }
      }
      if (col[0] != kGap || col[1] != kGap || col[2] != kGap) {
        for (int d = 0; d < 3; ++d) rows[d].push_back(col[d]);
      }
      for (int e = 0; e < insert_count; ++e) {
        for (int d = 0; d < 3; ++d) rows[d].push_back(inserts[e][d]);
      }
    }

    for (int d = 0; d < 3; ++d) {
      std::string& seq = d == 0 ? t.s0 : (d == 1 ? t.s1 : t.s2);
      for (char ch : rows[d]) {
        if (ch != kGap) seq.push_back(ch);
      }
    }
    out.triplets.push_back(std::move(t));
    out.references.push_back(std::move(rows));
  }
  return out;
}

}  // namespace trioalign
