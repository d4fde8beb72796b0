#include "fiblucas/linalg.hpp"

#include <sstream>
#include <utility>

namespace fiblucas {
namespace {

template <class T>
void swap_rows(Matrix<T>& m, std::size_t r1, std::size_t r2) {
  for (std::size_t j = 0; j < m.order(); ++j) std::swap(m(r1, j), m(r2, j));
}

BigInt cofactor_expand(const IntMatrix& a) {
  const std::size_t n = a.order();
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  BigInt det = 0;
  IntMatrix minor(n - 1);
  for (std::size_t col = 0; col < n; ++col) {
    if (a(0, col) == 0) continue;
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t mj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) minor(i - 1, mj++) = a(i, j);
      }
    }
    const BigInt term = a(0, col) * cofactor_expand(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

template <class T>
std::string format_entries(const Matrix<T>& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < a.order(); ++j) {
      if (j) os << ',';
      os << to_string(a(i, j));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) r(i, j) = Rational(a(i, j));
  }
  return r;
}

IntVector row_times(std::span<const BigInt> v, const IntMatrix& a) {
  if (v.size() != a.order()) throw InvalidParameter("vector length does not match matrix order");
  IntVector r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) r[j] += v[i] * a(i, j);
  }
  return r;
}

IntVector times_column(const IntMatrix& a, std::span<const BigInt> v) {
  if (v.size() != a.order()) throw InvalidParameter("vector length does not match matrix order");
  IntVector r(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) r[i] += a(i, j) * v[j];
  }
  return r;
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::linear(const Rational& c0, const Rational& c1) {
  return Polynomial({c0, c1});
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  if (x.c_.empty() || y.c_.empty()) return {};
  std::vector<Rational> r(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
  }
  return Polynomial(std::move(r));
}

BigInt det_bareiss(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t n = m.order();
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

BigInt det_cofactor(const IntMatrix& a) {
  if (a.order() > kCofactorMaxOrder) {
    throw SizeLimitError("det_cofactor is limited to order " + std::to_string(kCofactorMaxOrder) +
                         ", got " + std::to_string(a.order()));
  }
  return cofactor_expand(a);
}

RatMatrix rat_inverse(const IntMatrix& a) {
  const std::size_t n = a.order();
  RatMatrix m = to_rational(a);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) throw SingularMatrix("matrix is singular");
    if (p != c) {
      swap_rows(m, c, p);
      swap_rows(inv, c, p);
    }
    const Rational pivot = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

IntMatrix mat_pow(const IntMatrix& a, unsigned m) {
  IntMatrix result = IntMatrix::identity(a.order());
  IntMatrix base = a;
  while (m > 0) {
    if (m & 1u) result = result * base;
    m >>= 1;
    if (m > 0) base = base * base;
  }
  return result;
}

Polynomial char_poly(const IntMatrix& a) {
  const std::size_t n = a.order();
  const RatMatrix ar = to_rational(a);
  // c[i] is the coefficient of lambda^i in det(lambda I - A).
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix m(n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    m = ar * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = -(ar * m).trace() / Rational(static_cast<long>(k));
  }
  const int sign = (n % 2 == 0) ? 1 : -1;
  for (std::size_t i = 0; i <= n; ++i) {
    if (c[i].get_den() != 1) {
      throw ConsistencyError("char_poly: non-integral coefficient " + c[i].get_str());
    }
    c[i] *= sign;
  }
  return Polynomial(std::move(c));
}

std::size_t rank_exact(const IntMatrix& a) {
  IntMatrix m = a;
  const std::size_t n = m.order();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t p = rank;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) continue;
    swap_rows(m, rank, p);
    for (std::size_t i = rank + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const BigInt f = m(i, c);
      const BigInt piv = m(rank, c);
      BigInt content = 0;
      for (std::size_t j = c; j < n; ++j) {
        m(i, j) = m(i, j) * piv - f * m(rank, j);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), m(i, j).get_mpz_t());
      }
      if (content > 1) {
        for (std::size_t j = c; j < n; ++j) mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), content.get_mpz_t());
      }
    }
    ++rank;
  }
  return rank;
}

IntMatrix outer(std::size_t ones_dim, std::span<const BigInt> v) {
  if (v.size() != ones_dim) {
    throw InvalidParameter("outer: vector length " + std::to_string(v.size()) +
                           " does not match dimension " + std::to_string(ones_dim));
  }
  IntMatrix p(ones_dim);
  for (std::size_t i = 0; i < ones_dim; ++i) {
    for (std::size_t j = 0; j < ones_dim; ++j) p(i, j) = v[j];
  }
  return p;
}

std::string format_matrix(const IntMatrix& a) { return format_entries(a); }
std::string format_matrix(const RatMatrix& a) { return format_entries(a); }

}  // namespace fiblucas
