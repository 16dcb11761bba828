#include "dwalk/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace dwalk {
namespace {

void require_same_shape(const IntMatrix& a, const IntMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                    "x" + std::to_string(b.cols()));
  }
}

void require_square(const IntMatrix& a, const char* op) {
  if (!a.square()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(op) + " requires a square matrix");
  }
}

}  // namespace

IntMatrix adjacency_matrix(const Graph& g) {
  IntMatrix a(g.order(), g.order());
  for (const auto& [i, j] : g.edges()) a(i, j) = a(j, i) = 1;
  return a;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "mat_mul: inner dimensions " + std::to_string(a.cols()) + " and " +
                    std::to_string(b.rows()));
  }
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
    }
  }
  return c;
}

IntMatrix mat_add(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b, "mat_add");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

IntMatrix scalar_mul(const Integer& s, const IntMatrix& a) {
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

IntMatrix schur_product(const IntMatrix& a, const IntMatrix& b) {
  require_same_shape(a, b, "schur_product");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * b(i, j);
  return c;
}

IntMatrix kronecker_product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t p = 0; p < a.cols(); ++p) {
      const auto& aip = a(i, p);
      if (sgn(aip) == 0) continue;
      for (std::size_t j = 0; j < b.rows(); ++j)
        for (std::size_t q = 0; q < b.cols(); ++q)
          c(i * b.rows() + j, p * b.cols() + q) = aip * b(j, q);
    }
  return c;
}

Integer trace(const IntMatrix& a) {
  require_square(a, "trace");
  Integer t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

Integer sum_entries(const IntMatrix& a) {
  Integer s = 0;
  for (const auto& v : a.data()) s += v;
  return s;
}

Integer max_row_sum(const IntMatrix& a) {
  Integer best = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) row += a(i, j);
    if (row > best) best = row;
  }
  return best;
}

std::string to_text(const IntMatrix& a) {
  std::ostringstream out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out << (j ? " " : "") << a(i, j).get_str();
    out << '\n';
  }
  return out.str();
}

PowerStream::PowerStream(IntMatrix base)
    : base_(std::move(base)), current_(IntMatrix::identity(base_.rows())) {
  require_square(base_, "power_stream");
}

void PowerStream::advance() {
  current_ = mat_mul(current_, base_);
  ++exponent_;
}

std::vector<IntMatrix> power_stream(const IntMatrix& a, std::size_t k_max) {
  PowerStream stream(a);
  std::vector<IntMatrix> out;
  out.reserve(k_max + 1);
  out.push_back(stream.current());
  while (stream.exponent() < k_max) {
    stream.advance();
    out.push_back(stream.current());
  }
  return out;
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree) {
  std::vector<Integer> c(degree + 1, 0);
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto i = coeffs_.size(); i-- > 0;) {
    const auto& c = coeffs_[i];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial char_poly(const IntMatrix& a) {
  require_square(a, "char_poly");
  const auto n = a.rows();
  std::vector<Integer> c(n + 1, 0);
  c[n] = 1;
  // M_k = A M_{k-1} + c_{n-k+1} I with M_0 = 0; c_{n-k} = -tr(A M_k) / k.
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = k == 1 ? IntMatrix(n, n) : mat_mul(a, m);
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    const Integer t = trace(mat_mul(a, m));
    if (!mpz_divisible_ui_p(t.get_mpz_t(), k)) {
      throw Error(ErrorCode::InvalidArgument, "char_poly: inexact division");
    }
    c[n - k] = -t / static_cast<unsigned long>(k);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial poly_remainder(std::size_t k, const IntPolynomial& p) {
  if (!p.is_monic()) {
    throw Error(ErrorCode::NonMonicModulus, "poly_remainder needs a monic modulus");
  }
  const auto n = static_cast<std::size_t>(p.degree());
  if (n == 0) return IntPolynomial{};
  // r holds exactly n coefficients of T^e mod p.
  std::vector<Integer> r(n, 0);
  r[0] = 1;
  for (std::size_t e = 0; e < k; ++e) {
    const Integer lead = r[n - 1];
    for (auto i = n - 1; i > 0; --i) r[i] = r[i - 1] - lead * p.coeff(i);
    r[0] = -lead * p.coeff(0);
  }
  return IntPolynomial(std::move(r));
}

IntMatrix poly_eval_matrix(const IntPolynomial& p, const IntMatrix& a) {
  require_square(a, "poly_eval_matrix");
  const auto n = a.rows();
  IntMatrix acc(n, n);
  for (auto i = p.coeffs().size(); i-- > 0;) {
    acc = mat_mul(acc, a);
    for (std::size_t r = 0; r < n; ++r) acc(r, r) += p.coeffs()[i];
  }
  return acc;
}

TruncatedExponential truncated_exponential(const IntMatrix& a, std::size_t order) {
  require_square(a, "truncated_exponential");
  for (const auto& v : a.data())
    if (v < 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "truncated_exponential needs a non-negative matrix");
    }
  const Integer radius = max_row_sum(a);
  if (radius >= order + 2) {
    throw Error(ErrorCode::TruncationTooShort,
                "truncation order " + std::to_string(order) +
                    " too short for row-sum bound " + radius.get_str());
  }

  // P_j = sum_{k<=j} A^k j!/k! satisfies P_j = j P_{j-1} + A^j, so
  // S_K = P_K / K! without any intermediate fractions.
  const auto n = a.rows();
  PowerStream powers(a);
  IntMatrix scaled = powers.current();
  Integer factorial = 1;
  for (std::size_t j = 1; j <= order; ++j) {
    powers.advance();
    factorial *= static_cast<unsigned long>(j);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        scaled(r, c) *= static_cast<unsigned long>(j);
        scaled(r, c) += powers.current()(r, c);
      }
  }

  TruncatedExponential out{order, RatMatrix(n, n), 0};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      out.partial_sum(r, c) = Rational(scaled(r, c), factorial);
      out.partial_sum(r, c).canonicalize();
    }

  if (radius != 0) {
    Integer next_factorial = factorial * static_cast<unsigned long>(order + 1);
    Integer power = 1;
    mpz_pow_ui(power.get_mpz_t(), radius.get_mpz_t(), order + 1);
    Rational head(power, next_factorial);
    head.canonicalize();
    Rational ratio(radius, Integer(static_cast<unsigned long>(order + 2)));
    ratio.canonicalize();
    out.tail_bound = head / (1 - ratio);
  }
  return out;
}

}  // namespace dwalk
