#pragma once

// Grid verification: every closed form of the family against the brute-force
// oracles in linalg.

#include <cstdint>
#include <string>
#include <vector>

#include "fiblucas/family.hpp"

namespace fiblucas {

/// Inclusive range; lo > hi is empty.
struct IndexRange {
  std::int64_t lo = 1;
  std::int64_t hi = 0;

  bool empty() const { return lo > hi; }
};

enum class CheckStatus { pass, fail };

struct CheckRecord {
  std::int64_t k;
  std::int64_t n;
  std::string check;
  CheckStatus status;
  std::string witness;  // first counterexample; empty on pass
};

struct VerificationReport {
  std::vector<CheckRecord> records;  // sorted by (k, n, check)

  std::size_t checks() const { return records.size(); }
  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }
};

/// Everything the closed forms claim about one A(k,n). Kept as plain data so
/// a caller can substitute a value and watch the corresponding check fail.
struct ClosedForms {
  FamilyParams params;
  RankOneForm form;
  BigInt det;
  BigInt trace;
  BigInt lambda2;
  SpectrumReport spectrum;
  Polynomial charpoly;
  RatMatrix inverse;
  std::vector<IntMatrix> powers;  // powers[m] for m = 0..m_max
};

ClosedForms evaluate_closed_forms(const FamilyParams& p, unsigned m_max);

/// Checks one cell's closed forms against the oracles. Records come back
/// sorted by check name.
std::vector<CheckRecord> check_cell(const ClosedForms& forms);

VerificationReport verify_grid(IndexRange k_range, IndexRange n_range, unsigned m_max);

std::string to_string(CheckStatus s);

}  // namespace fiblucas
