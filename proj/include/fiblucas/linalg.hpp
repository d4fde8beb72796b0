#pragma once

// Dense exact linear algebra over Z and Q. These routines know nothing about
// the matrix family; they are the brute-force ground truth the closed forms
// are checked against.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fiblucas/numeric.hpp"

namespace fiblucas {

/// Square n x n matrix, row-major, n >= 1.
template <class T>
class Matrix {
 public:
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {
    if (n == 0) throw InvalidParameter("matrix order must be >= 1");
  }

  Matrix(std::size_t n, std::vector<T> entries) : n_(n), a_(std::move(entries)) {
    if (n == 0) throw InvalidParameter("matrix order must be >= 1");
    if (a_.size() != n * n) throw InvalidParameter("entry count does not match order");
  }

  /// From nested rows; every row must have as many entries as there are rows.
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : Matrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw InvalidParameter("matrix rows must all have length n");
      std::size_t j = 0;
      for (const auto& x : row) (*this)(i, j++) = x;
      ++i;
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t order() const { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  std::span<const T> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }
  std::span<const T> entries() const { return a_; }

  T trace() const {
    T t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.n_ != y.n_) throw InvalidParameter("matrix order mismatch in product");
    const std::size_t n = x.n_;
    Matrix r(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) {
        if (x(i, l) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r(i, j) += x(i, l) * y(l, j);
      }
    }
    return r;
  }

  friend Matrix operator+(Matrix x, const Matrix& y) {
    if (x.n_ != y.n_) throw InvalidParameter("matrix order mismatch in sum");
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
  }

  friend Matrix operator-(Matrix x, const Matrix& y) {
    if (x.n_ != y.n_) throw InvalidParameter("matrix order mismatch in difference");
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }

  friend Matrix operator*(const T& c, Matrix x) {
    for (auto& e : x.a_) e *= c;
    return x;
  }

 private:
  std::size_t n_;
  std::vector<T> a_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<BigInt>;

RatMatrix to_rational(const IntMatrix& a);

/// Row vector times matrix.
IntVector row_times(std::span<const BigInt> v, const IntMatrix& a);
/// Matrix times column vector.
IntVector times_column(const IntMatrix& a, std::span<const BigInt> v);

/// Polynomial in lambda with rational coefficients; coeffs[i] multiplies
/// lambda^i. Trailing zeros are trimmed, so the zero polynomial has no
/// coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  /// c0 + c1 * lambda.
  static Polynomial linear(const Rational& c0, const Rational& c1);

  const std::vector<Rational>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  Rational operator()(const Rational& x) const;

  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> c_;
};

/// Fraction-free (Bareiss) elimination with row pivoting.
BigInt det_bareiss(const IntMatrix& a);

/// Laplace expansion along the first row. Throws SizeLimitError above order 7.
BigInt det_cofactor(const IntMatrix& a);
inline constexpr std::size_t kCofactorMaxOrder = 7;

/// Gauss-Jordan over Q. Throws SingularMatrix when det(a) = 0.
RatMatrix rat_inverse(const IntMatrix& a);

/// a^m by repeated squaring; a^0 = I.
IntMatrix mat_pow(const IntMatrix& a, unsigned m);

/// det(A - lambda I) via Faddeev-LeVerrier. Leading coefficient is (-1)^n.
/// Throws ConsistencyError if any coefficient comes out non-integral.
Polynomial char_poly(const IntMatrix& a);

/// Rank over Q.
std::size_t rank_exact(const IntMatrix& a);

/// n x n matrix whose every row is v^T, i.e. 1 * v^T.
IntMatrix outer(std::size_t ones_dim, std::span<const BigInt> v);

std::string format_matrix(const IntMatrix& a);
std::string format_matrix(const RatMatrix& a);

}  // namespace fiblucas
