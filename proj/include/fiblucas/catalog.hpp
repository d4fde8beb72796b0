#pragma once

// Named integer sequences produced by this library and comparison against
// stored b-file fixtures.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fiblucas/numeric.hpp"

namespace fiblucas {

enum class SequenceKind { kfib, klucas, det, trace, lambda2 };

struct SequenceId {
  SequenceKind kind = SequenceKind::kfib;
  std::int64_t k = 1;

  friend bool operator==(const SequenceId&, const SequenceId&) = default;
};

/// Accepts "fib"/"kfib", "lucas"/"klucas", "det", "trace", "lambda2".
std::optional<SequenceKind> parse_kind(std::string_view s);
std::string to_string(SequenceKind kind);

/// Index of the first term: 0 for kfib/klucas, 1 for the matrix sequences.
std::int64_t first_index(SequenceKind kind);

/// Term at `index`. Throws InvalidParameter when index precedes the domain of
/// a matrix sequence or k < 1.
BigInt sequence_term(const SequenceId& id, std::int64_t index);

/// Terms first_index(kind) .. first_index(kind) + count - 1.
std::vector<BigInt> emit_sequence(const SequenceId& id, std::size_t count);

/// Terms from .. from + count - 1.
std::vector<BigInt> emit_range(const SequenceId& id, std::int64_t from, std::size_t count);

struct SequenceFixture {
  std::string name;  // OEIS accession or a local label
  std::vector<BigInt> terms;
  std::int64_t offset = 0;  // index of terms[0]
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
  std::size_t line;  // 1-based; 0 when not tied to a line
};

/// Reads OEIS b-file text: "index value" per line, '#' comments, blank lines,
/// surrounding whitespace and CRLF are tolerated. Indices must be consecutive.
SequenceFixture parse_bfile(std::string_view text, std::string name);

/// Canonical b-file text: one "index value\n" line per term, no comments.
std::string write_bfile(const SequenceFixture& fixture);

struct Mismatch {
  std::int64_t index;
  BigInt expected;  // fixture value
  BigInt actual;    // generated value
};

struct MatchReport {
  std::size_t compared = 0;
  std::optional<Mismatch> first_mismatch;

  bool matched() const { return !first_mismatch && compared > 0; }
};

/// Compares generated terms against the fixture at the fixture's own indices.
/// At most `max_terms` terms are compared (0 means all).
MatchReport check_fixture(const SequenceId& id, const SequenceFixture& fixture, std::size_t max_terms = 0);

/// The local sequence an OEIS accession corresponds to, if any.
std::optional<SequenceId> oeis_counterpart(std::string_view accession);

/// Accessions with a known local counterpart, in ascending order.
std::vector<std::string> known_accessions();

}  // namespace fiblucas
