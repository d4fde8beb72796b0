#pragma once

// k-Fibonacci and k-Lucas numbers and the identities the matrix closed forms
// are built from.
//
//   F(k,0) = 0, F(k,1) = 1, F(k,n+1) = k F(k,n) + F(k,n-1)
//   L(k,0) = 2, L(k,1) = k, same recurrence
//
// Negative indices follow the backward recurrence:
//   F(k,-n) = (-1)^(n+1) F(k,n),  L(k,-n) = (-1)^n L(k,n).

#include <cstdint>

#include "fiblucas/numeric.hpp"

namespace fiblucas {

struct SeqParams {
  std::int64_t k = 1;
  std::int64_t idx = 0;
};

BigInt kfib(SeqParams p);
BigInt klucas(SeqParams p);

inline BigInt kfib(std::int64_t k, std::int64_t idx) { return kfib(SeqParams{k, idx}); }
inline BigInt klucas(std::int64_t k, std::int64_t idx) { return klucas(SeqParams{k, idx}); }

/// F(k,m+n) - (-1)^m F(k,n-m); equals kfib(k,m) * klucas(k,n).
BigInt fib_lucas_product(std::int64_t k, std::int64_t m, std::int64_t n);

/// F(k,2j+1) L(k,2j+2) - F(k,2j+2) L(k,2j+1), evaluated by multiplication.
/// The identity says this is always 2.
BigInt cross_diff(std::int64_t k, std::int64_t j);

/// Sum_{j=1..n} F(k,2j) L(k,2j-1) by literal summation.
BigInt product_sum(std::int64_t k, std::int64_t n);

/// Sum_{i=0..n} F(k,4i-1) in closed form:
///   (F(k,4n+3) - F(k,4n-1) + F(k,5) - 1) / (L(k,4) - 2).
/// Every matrix closed form is written in terms of this quotient. Throws
/// ConsistencyError if the division leaves a remainder.
BigInt fib_sum_4i_minus_1(std::int64_t k, std::int64_t n);

/// Closed form of product_sum: fib_sum_4i_minus_1(k,n) - 1 - n.
BigInt product_sum_closed(std::int64_t k, std::int64_t n);

}  // namespace fiblucas
