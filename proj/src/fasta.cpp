#include "trioalign/fasta.hpp"

#include <cctype>
#include <istream>
#include <ostream>

#include "trioalign/errors.hpp"

namespace trioalign {

std::vector<FastaRecord> read_fasta(std::istream& in) {
  std::vector<FastaRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '>') {
      FastaRecord rec;
      rec.line = line_no;
      const size_t ws = line.find_first_of(" \t", 1);
      rec.id = line.substr(1, ws == std::string::npos ? std::string::npos : ws - 1);
      if (ws != std::string::npos) {
        const size_t start = line.find_first_not_of(" \t", ws);
        if (start != std::string::npos) rec.desc = line.substr(start);
      }
      if (rec.id.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": empty FASTA header id");
      }
      records.push_back(std::move(rec));
    } else {
      if (records.empty()) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": sequence data before the first '>' header");
      }
      for (char ch : line) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        records.back().seq.push_back(char(std::toupper(static_cast<unsigned char>(ch))));
      }
    }
  }
  return records;
}

std::vector<Triplet> parse_fasta_triplets(std::istream& in) {
  const auto records = read_fasta(in);
  if (records.size() % 3 != 0) {
    throw ParseError("FASTA holds " + std::to_string(records.size()) +
                     " records, not divisible by 3 (consecutive records form triplets)");
  }
  std::vector<Triplet> triplets;
  triplets.reserve(records.size() / 3);
  for (size_t i = 0; i < records.size(); i += 3) {
    for (size_t r = i; r < i + 3; ++r) {
      for (char ch : records[r].seq) {
        if (!is_residue(ch)) {
          throw ParseError("record '" + records[r].id + "' (line " +
                           std::to_string(records[r].line) + "): invalid character '" +
                           std::string(1, ch) + "' (alphabet is ACGT)");
        }
      }
    }
    triplets.push_back(Triplet{records[i].id, records[i].seq, records[i + 1].seq,
                               records[i + 2].seq});
  }
  return triplets;
}

std::vector<AlignmentRecord> parse_fasta_alignments(std::istream& in) {
  const auto records = read_fasta(in);
  if (records.size() % 3 != 0) {
    throw ParseError("alignment FASTA holds " + std::to_string(records.size()) +
                     " records, not divisible by 3");
  }
  std::vector<AlignmentRecord> out;
  out.reserve(records.size() / 3);
  for (size_t i = 0; i < records.size(); i += 3) {
    AlignmentRecord rec;
    rec.id = records[i].id;
    for (size_t r = 0; r < 3; ++r) {
      for (char ch : records[i + r].seq) {
        if (!is_residue(ch) && ch != kGap) {
          throw ParseError("record '" + records[i + r].id + "' (line " +
                           std::to_string(records[i + r].line) + "): invalid character '" +
                           std::string(1, ch) + "' in alignment row");
        }
      }
      rec.rows[r] = records[i + r].seq;
    }
    if (rec.rows[0].size() != rec.rows[1].size() || rec.rows[0].size() != rec.rows[2].size()) {
      throw MalformedAlignmentError("alignment '" + rec.id + "' (line " +
                                    std::to_string(records[i].line) +
                                    "): rows have unequal lengths");
    }
    out.push_back(std::move(rec));
  }
  return out;
}

void write_fasta_record(std::ostream& out, const std::string& id, const std::string& desc,
                        const std::string& seq) {
  out << '>' << id;
  if (!desc.empty()) out << ' ' << desc;
  out << '\n';
  for (size_t pos = 0; pos < seq.size(); pos += 80) {
    out << seq.substr(pos, 80) << '\n';
  }
}

}  // namespace trioalign
