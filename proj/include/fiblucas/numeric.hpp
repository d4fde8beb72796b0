#pragma once

// Exact scalar types and the error hierarchy shared by every module.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fiblucas {

using BigInt = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameter : Error {
  using Error::Error;
};

// A closed form produced a value its derivation rules out (inexact division,
// non-integral coefficient). Always a bug, never an input problem.
struct ConsistencyError : Error {
  using Error::Error;
};

struct SizeLimitError : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};

/// Builds num/den in canonical form (den > 0, gcd 1).
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// num / den, throwing ConsistencyError when the remainder is nonzero.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (den == 0) throw ConsistencyError(std::string(what) + ": division by zero");
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw ConsistencyError(std::string(what) + ": " + num.get_str() + " is not divisible by " +
                           den.get_str());
  }
  return q;
}

inline BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Decimal for integers, "num/den" (or just "num" when den = 1) for rationals.
inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace fiblucas
