#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "dwalk/error.hpp"
#include "dwalk/graph.hpp"

namespace dwalk {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix. Zero-sized matrices are allowed so that deleting
/// the only vertex of a graph stays representable.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const noexcept { return data_; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = DenseMatrix<Integer>;
using RatMatrix = DenseMatrix<Rational>;

IntMatrix adjacency_matrix(const Graph& g);

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b);
IntMatrix scalar_mul(const Integer& s, const IntMatrix& a);
IntMatrix schur_product(const IntMatrix& a, const IntMatrix& b);
IntMatrix kronecker_product(const IntMatrix& a, const IntMatrix& b);

Integer trace(const IntMatrix& a);
Integer sum_entries(const IntMatrix& a);
/// Largest row sum; for a non-negative matrix this bounds the spectral radius.
Integer max_row_sum(const IntMatrix& a);

/// Rows of space-separated decimal integers, one row per line.
std::string to_text(const IntMatrix& a);

/// Successive powers A^0, A^1, ... by repeated multiplication.
class PowerStream {
 public:
  explicit PowerStream(IntMatrix base);

  std::size_t exponent() const noexcept { return exponent_; }
  const IntMatrix& current() const noexcept { return current_; }
  const IntMatrix& base() const noexcept { return base_; }
  void advance();

 private:
  IntMatrix base_;
  IntMatrix current_;
  std::size_t exponent_ = 0;
};

/// [A^0, ..., A^k_max].
std::vector<IntMatrix> power_stream(const IntMatrix& a, std::size_t k_max);

class IntPolynomial {
 public:
  IntPolynomial() = default;
  /// Coefficients from the constant term upwards; trailing zeros are trimmed.
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial monomial(std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Coefficient of x^i; zero beyond the degree.
  Integer coeff(std::size_t i) const;
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

/// det(xI - A), computed by Faddeev-LeVerrier in integer arithmetic; every
/// division by k is exact.
IntPolynomial char_poly(const IntMatrix& a);

/// T^k mod p(T) by iterated reduction; p must be monic.
IntPolynomial poly_remainder(std::size_t k, const IntPolynomial& p);

/// p(A) by Horner's rule.
IntMatrix poly_eval_matrix(const IntPolynomial& p, const IntMatrix& a);

struct TruncatedExponential {
  std::size_t order;  // K
  RatMatrix partial_sum;  // sum_{k=0}^{K} A^k / k!
  /// Every entry of e^A minus partial_sum lies in [0, tail_bound].
  Rational tail_bound;
};

/// Partial Taylor sum of e^A for a non-negative integer matrix together with
/// the geometric tail majorant R^{K+1} / ((K+1)! (1 - R/(K+2))), R = max row
/// sum. Throws TruncationTooShort unless R < K + 2.
TruncatedExponential truncated_exponential(const IntMatrix& a, std::size_t order);

}  // namespace dwalk
