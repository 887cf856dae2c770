#include "sigdim/rational.hpp"

#include <algorithm>
#include <utility>

namespace sigdim {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionMismatch("ragged rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& cols) {
  if (cols.empty()) return {};
  RationalMatrix m(cols.front().size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows_) throw DimensionMismatch("ragged columns");
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector product shape");
  RationalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot(a.row(i), x);
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

RationalVector add(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum length");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector scale(std::span<const Rational> a, const Rational& s) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

RationalVector kron(std::span<const Rational> a, std::span<const Rational> b) {
  RationalVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[b.size() * i + j] = a[i] * b[j];
  return out;
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Scale each row to integers, then run Bareiss elimination over Z.
  std::vector<BigInt> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    BigInt l = lcm_of_denominators(m.row(r));
    for (std::size_t c = 0; c < cols; ++c) {
      const Rational& q = m(r, c);
      a[r * cols + c] = q.get_num() * (l / q.get_den());
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * cols + c]; };

  std::size_t rk = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t piv = rk;
    while (piv < rows && sgn(at(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rk)
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(piv, k), at(rk, k));
    for (std::size_t r = rk + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        at(r, k) = (at(rk, c) * at(r, k) - at(r, c) * at(rk, k));
        mpz_divexact(at(r, k).get_mpz_t(), at(r, k).get_mpz_t(), prev.get_mpz_t());
      }
      at(r, c) = 0;
    }
    prev = at(rk, c);
    ++rk;
  }
  return rk;
}

RationalMatrix rref(const RationalMatrix& m, std::vector<std::size_t>& pivots) {
  RationalMatrix a = m;
  pivots.clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && sgn(a(piv, c)) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(piv, k), a(r, k));
    const Rational inv = 1 / a(r, c);
    for (std::size_t k = c; k < a.cols(); ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t k = c; k < a.cols(); ++k)
        if (sgn(a(r, k)) != 0) a(i, k) -= f * a(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return a;
}

std::optional<RationalVector> solve_exact(const RationalMatrix& a, std::span<const Rational> b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve_exact: A has " + std::to_string(a.rows()) +
                                                    " rows but b has " + std::to_string(b.size()) +
                                                    " entries");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  std::vector<std::size_t> pivots;
  RationalMatrix red = rref(aug, pivots);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  RationalVector x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red(i, a.cols());
  return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  std::vector<std::size_t> pivots;
  RationalMatrix red = rref(aug, pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  return inv;
}

RationalMatrix nullspace(const RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  RationalMatrix red = rref(m, pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, f);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return RationalMatrix(m.cols(), 0);
  return RationalMatrix::from_columns(basis);
}

bool lex_less(std::span<const Rational> a, std::span<const Rational> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("not a rational number: \"" + s + "\"");
  BigInt n(num.front() == '+' ? num.substr(1) : num);
  BigInt d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: \"" + s + "\"");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

BigInt lcm_of_denominators(std::span<const Rational> values) {
  BigInt l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

}  // namespace sigdim
