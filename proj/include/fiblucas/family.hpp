#pragma once

// The matrix family A(k,n):
//
//   a_ii = F(k,2i-1) L(k,2i)
//   a_ij = F(k,2j)   L(k,2j-1)   (i != j; constant down each column)
//
// A(k,n) = 2 I + 1 v^T with v_j = F(k,2j) L(k,2j-1). Every invariant below
// follows from that rank-one-plus-diagonal structure and is evaluated from
// the closed forms, never from the matrix itself.

#include <cstdint>

#include "fiblucas/linalg.hpp"

namespace fiblucas {

struct FamilyParams {
  std::int64_t k = 1;
  std::int64_t n = 1;  // matrix order
};

void validate(const FamilyParams& p);

/// d I + 1 v^T.
struct RankOneForm {
  BigInt d;
  IntVector v;

  IntMatrix reconstruct() const;
  BigInt v_sum() const;
};

struct SpectrumReport {
  BigInt lambda1;     // 2
  std::int64_t mult1;  // n - 1
  BigInt lambda2;
  std::int64_t mult2;  // 1
  BigInt spectral_radius;
  BigInt energy;
};

IntMatrix build_matrix(const FamilyParams& p);
RankOneForm decompose(const FamilyParams& p);

/// 2^n (1 + (S - 1 - n)/2) with S = fib_sum_4i_minus_1(k, n).
BigInt closed_det(const FamilyParams& p);

/// k = 1 specialization: 2^(n-1) (L(4n+1) + 9 - 5n) / 5.
BigInt closed_det_k1(std::int64_t n);

/// S + n - 1.
BigInt closed_trace(const FamilyParams& p);

/// k = 1 specialization: (F(4n+3) - F(4n-1) + 4)/5 + n - 1.
BigInt closed_trace_k1(std::int64_t n);

/// The simple eigenvalue: S - n + 1 (= 2 + v^T 1).
BigInt lambda2(const FamilyParams& p);

/// k = 1 specialization: (F(4n+3) - F(4n-1) - 5n + 9) / 5.
BigInt lambda2_k1(std::int64_t n);

SpectrumReport spectrum(const FamilyParams& p);

/// det(A - lambda I) = (2 - lambda)^(n-1) (lambda2 - lambda), expanded.
Polynomial closed_charpoly(const FamilyParams& p);

/// Sherman-Morrison: A^-1 = I/2 - 1 v^T / (2 lambda2).
RatMatrix closed_inverse(const FamilyParams& p);

/// A^m = 2^m I + ((lambda2^m - 2^m) / (lambda2 - 2)) 1 v^T.
IntMatrix closed_power(const FamilyParams& p, unsigned m);

}  // namespace fiblucas
