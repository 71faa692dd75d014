#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "trioalign/core.hpp"

namespace trioalign {

struct FastaRecord {
  std::string id;    // header token before the first whitespace
  std::string desc;  // remainder of the header line
  std::string seq;   // upper-cased
  int line = 0;      // header line number, for error reporting
};

/// Reads every record. Throws ParseError (with line numbers) on structural
/// problems; does not validate the alphabet.
std::vector<FastaRecord> read_fasta(std::istream& in);

/// Consecutive records form triplets; the first record's id labels the
/// triplet. Throws ParseError when the record count is not divisible by 3 or
/// a sequence contains a non-ACGT character.
std::vector<Triplet> parse_fasta_triplets(std::istream& in);

/// Gapped alignment rows, three records per triplet. Rows of one triplet
/// must have equal lengths; characters are ACGT plus '-'.
struct AlignmentRecord {
  std::string id;
  std::array<std::string, 3> rows;
};
std::vector<AlignmentRecord> parse_fasta_alignments(std::istream& in);

/// Writes one record, wrapping sequence lines at 80 characters.
void write_fasta_record(std::ostream& out, const std::string& id, const std::string& desc,
                        const std::string& seq);

}  // namespace trioalign
