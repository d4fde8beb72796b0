#include "fiblucas/family.hpp"

#include <string>

#include "fiblucas/sequence.hpp"

namespace fiblucas {
namespace {

unsigned long as_exponent(std::int64_t n) { return static_cast<unsigned long>(n); }

}  // namespace

void validate(const FamilyParams& p) {
  if (p.k < 1) throw InvalidParameter("k must be >= 1, got " + std::to_string(p.k));
  if (p.n < 1) throw InvalidParameter("n must be >= 1, got " + std::to_string(p.n));
}

IntMatrix RankOneForm::reconstruct() const {
  IntMatrix a = outer(v.size(), v);
  for (std::size_t i = 0; i < v.size(); ++i) a(i, i) += d;
  return a;
}

BigInt RankOneForm::v_sum() const {
  BigInt s = 0;
  for (const auto& x : v) s += x;
  return s;
}

IntMatrix build_matrix(const FamilyParams& p) {
  validate(p);
  const auto n = static_cast<std::size_t>(p.n);
  IntMatrix a(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = static_cast<std::int64_t>(j + 1);
    const BigInt off = kfib(p.k, 2 * col) * klucas(p.k, 2 * col - 1);
    for (std::size_t i = 0; i < n; ++i) a(i, j) = off;
    a(j, j) = kfib(p.k, 2 * col - 1) * klucas(p.k, 2 * col);
  }
  return a;
}

RankOneForm decompose(const FamilyParams& p) {
  validate(p);
  RankOneForm f{2, IntVector(static_cast<std::size_t>(p.n))};
  for (std::int64_t j = 1; j <= p.n; ++j) {
    f.v[static_cast<std::size_t>(j - 1)] = kfib(p.k, 2 * j) * klucas(p.k, 2 * j - 1);
  }
  return f;
}

BigInt closed_det(const FamilyParams& p) {
  validate(p);
  // 2^n (1 + (S - 1 - n)/2) = 2^n + 2^(n-1) (S - 1 - n)
  const BigInt s = fib_sum_4i_minus_1(p.k, p.n);
  const BigInt inner = pow2(as_exponent(p.n)) * (s - 1 - p.n);
  return pow2(as_exponent(p.n)) + exact_div(inner, 2, "closed_det");
}

BigInt closed_det_k1(std::int64_t n) {
  if (n < 1) throw InvalidParameter("n must be >= 1");
  const BigInt num = pow2(as_exponent(n - 1)) * (klucas(1, 4 * n + 1) + 9 - 5 * n);
  return exact_div(num, 5, "closed_det_k1");
}

BigInt closed_trace(const FamilyParams& p) {
  validate(p);
  return fib_sum_4i_minus_1(p.k, p.n) + p.n - 1;
}

BigInt closed_trace_k1(std::int64_t n) {
  if (n < 1) throw InvalidParameter("n must be >= 1");
  return exact_div(kfib(1, 4 * n + 3) - kfib(1, 4 * n - 1) + 4, 5, "closed_trace_k1") + n - 1;
}

BigInt lambda2(const FamilyParams& p) {
  validate(p);
  return fib_sum_4i_minus_1(p.k, p.n) - p.n + 1;
}

BigInt lambda2_k1(std::int64_t n) {
  if (n < 1) throw InvalidParameter("n must be >= 1");
  return exact_div(kfib(1, 4 * n + 3) - kfib(1, 4 * n - 1) - 5 * n + 9, 5, "lambda2_k1");
}

SpectrumReport spectrum(const FamilyParams& p) {
  const BigInt l2 = lambda2(p);
  SpectrumReport r{2, p.n - 1, l2, 1, 0, 0};
  // Both eigenvalues are positive, so the energy is the eigenvalue sum.
  r.spectral_radius = abs(l2);
  if (r.mult1 > 0 && r.spectral_radius < 2) r.spectral_radius = 2;
  r.energy = r.mult1 * abs(r.lambda1) + abs(l2);
  return r;
}

Polynomial closed_charpoly(const FamilyParams& p) {
  const BigInt l2 = lambda2(p);
  Polynomial poly = Polynomial::linear(Rational(l2), Rational(-1));
  const Polynomial two_minus = Polynomial::linear(Rational(2), Rational(-1));
  for (std::int64_t i = 1; i < p.n; ++i) poly = poly * two_minus;
  return poly;
}

RatMatrix closed_inverse(const FamilyParams& p) {
  const RankOneForm f = decompose(p);
  const BigInt l2 = lambda2(p);
  const auto n = f.v.size();
  RatMatrix inv(n);
  const Rational half = make_rational(1, 2);
  for (std::size_t j = 0; j < n; ++j) {
    const Rational corr = make_rational(f.v[j], 2 * l2);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = -corr;
    inv(j, j) += half;
  }
  return inv;
}

IntMatrix closed_power(const FamilyParams& p, unsigned m) {
  const RankOneForm f = decompose(p);
  const BigInt l2 = lambda2(p);
  const BigInt two_m = pow2(m);
  // m = 0 gives (1 - 1) / (l2 - 2) = 0, so no special case is needed.
  const BigInt coeff = exact_div(ipow(l2, m) - two_m, l2 - 2, "closed_power");
  IntMatrix a = coeff * outer(f.v.size(), f.v);
  for (std::size_t i = 0; i < f.v.size(); ++i) a(i, i) += two_m;
  return a;
}

}  // namespace fiblucas
