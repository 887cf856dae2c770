#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigdim {

using BigInt = mpz_class;
/// Exact rational scalar. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix from_columns(const std::vector<RationalVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  RationalVector column(std::size_t c) const;

  RationalMatrix transpose() const;
  const std::vector<Rational>& entries() const { return data_; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;
  friend auto operator<=>(const RationalMatrix& a, const RationalMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(),
                                                  b.data_.begin(), b.data_.end(),
                                                  [](const Rational& x, const Rational& y) {
                                                    int s = cmp(x, y);
                                                    return s < 0   ? std::strong_ordering::less
                                                           : s > 0 ? std::strong_ordering::greater
                                                                   : std::strong_ordering::equal;
                                                  });
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
RationalVector add(std::span<const Rational> a, std::span<const Rational> b);
RationalVector scale(std::span<const Rational> a, const Rational& s);

/// Kronecker product: result[len(b) * i + j] = a[i] * b[j].
RationalVector kron(std::span<const Rational> a, std::span<const Rational> b);
RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

/// Exact rank via fraction-free (Bareiss) elimination on an integer-scaled copy.
std::size_t rank(const RationalMatrix& m);

/// Any exact solution of A x = b (free variables set to zero), or nullopt when
/// the system is inconsistent. Throws DimensionMismatch if b has the wrong size.
std::optional<RationalVector> solve_exact(const RationalMatrix& a, std::span<const Rational> b);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Basis of {x : M x = 0}, one basis vector per column.
RationalMatrix nullspace(const RationalMatrix& m);

/// Reduced row echelon form; pivot column indices are written to `pivots`.
RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>& pivots);

/// Lexicographic comparison of equal-length vectors.
bool lex_less(std::span<const Rational> a, std::span<const Rational> b);

/// "num/den", denominator omitted when 1.
std::string to_string(const Rational& q);
/// Parses "num", "num/den" or a plain decimal integer; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

BigInt lcm_of_denominators(std::span<const Rational> values);

}  // namespace sigdim
