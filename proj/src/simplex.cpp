#include "sigdim/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sigdim::simplex {

Rational ColumnSource::dual_dot(std::size_t j, std::span<const Rational> y) const {
  std::vector<Entry> col;
  column(j, col);
  Rational s = 0;
  for (const auto& e : col) s += y[e.row] * e.value;
  return s;
}

double ColumnSource::dual_dot_hint(std::size_t j, std::span<const double> y) const {
  std::vector<Entry> col;
  column(j, col);
  double s = 0;
  for (const auto& e : col) s += y[e.row] * e.value.get_d();
  return s;
}

void DenseColumns::column(std::size_t j, std::vector<Entry>& out) const {
  out.clear();
  for (std::size_t i = 0; i < a_.rows(); ++i)
    if (sgn(a_(i, j)) != 0) out.push_back({i, a_(i, j)});
}

RationalVector Result::primal(std::size_t cols) const {
  RationalVector x(cols);
  for (std::size_t k = 0; k < basis.size(); ++k) x[basis[k]] = basic_values[k];
  return x;
}

namespace {

class Tableau {
 public:
  Tableau(const ColumnSource& lp, std::span<const Rational> b, std::vector<std::size_t> basis)
      : lp_(lp), r_(lp.rows()), basis_(std::move(basis)), in_basis_(lp.cols(), 0) {
    if (b.size() != r_) throw DimensionMismatch("simplex: right-hand side length");
    if (basis_.size() != r_) throw std::invalid_argument("simplex: basis size differs from row count");
    RationalMatrix bmat(r_, r_);
    std::vector<Entry> col;
    for (std::size_t k = 0; k < r_; ++k) {
      if (basis_[k] >= lp.cols() || in_basis_[basis_[k]])
        throw std::invalid_argument("simplex: invalid initial basis");
      in_basis_[basis_[k]] = 1;
      lp.column(basis_[k], col);
      for (const auto& e : col) bmat(e.row, k) = e.value;
    }
    auto inv = inverse(bmat);
    if (!inv) throw std::invalid_argument("simplex: initial basis is singular");
    binv_ = std::move(*inv);
    xb_ = binv_ * b;
    for (const auto& x : xb_)
      if (sgn(x) < 0) throw std::invalid_argument("simplex: initial basis is infeasible");
    y_.assign(r_, Rational(0));
    for (std::size_t k = 0; k < r_; ++k) {
      const Rational c = lp.cost(basis_[k]);
      if (sgn(c) == 0) continue;
      for (std::size_t i = 0; i < r_; ++i)
        if (sgn(binv_(k, i)) != 0) y_[i] += c * binv_(k, i);
    }
  }

  Rational reduced_cost(std::size_t j) const { return lp_.cost(j) - lp_.dual_dot(j, y_); }

  // First column (by index) with negative exact reduced cost. When `hint` is
  // given, columns whose floating reduced cost is clearly positive are skipped.
  std::optional<std::pair<std::size_t, Rational>> bland(const std::vector<double>* hint,
                                                        const std::vector<double>& cost_hint,
                                                        double tol) const {
    for (std::size_t j = 0; j < lp_.cols(); ++j) {
      if (in_basis_[j]) continue;
      if (hint && cost_hint[j] - lp_.dual_dot_hint(j, *hint) > tol) continue;
      Rational rc = reduced_cost(j);
      if (sgn(rc) < 0) return std::make_pair(j, std::move(rc));
    }
    return std::nullopt;
  }

  std::optional<std::pair<std::size_t, Rational>> dantzig_hinted(const std::vector<double>& yd,
                                                                 const std::vector<double>& cost_hint,
                                                                 double tol) const {
    std::vector<std::pair<double, std::size_t>> cand;
    for (std::size_t j = 0; j < lp_.cols(); ++j) {
      if (in_basis_[j]) continue;
      const double rc = cost_hint[j] - lp_.dual_dot_hint(j, yd);
      if (rc < -tol) cand.emplace_back(rc, j);
    }
    constexpr std::size_t kTry = 64;
    const std::size_t take = std::min(cand.size(), kTry);
    std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(take), cand.end());
    for (std::size_t t = 0; t < take; ++t) {
      Rational rc = reduced_cost(cand[t].second);
      if (sgn(rc) < 0) return std::make_pair(cand[t].second, std::move(rc));
    }
    return std::nullopt;
  }

  std::optional<std::pair<std::size_t, Rational>> dantzig_exact() const {
    std::optional<std::pair<std::size_t, Rational>> best;
    for (std::size_t j = 0; j < lp_.cols(); ++j) {
      if (in_basis_[j]) continue;
      Rational rc = reduced_cost(j);
      if (sgn(rc) < 0 && (!best || rc < best->second)) best = std::make_pair(j, std::move(rc));
    }
    return best;
  }

  // Pivot column j into the basis. Returns false if the problem is unbounded
  // along j; `degenerate` reports a zero step.
  bool pivot(std::size_t j, const Rational& rc, bool& degenerate) {
    std::vector<Entry> col;
    lp_.column(j, col);
    RationalVector d(r_);
    for (const auto& e : col)
      for (std::size_t k = 0; k < r_; ++k)
        if (sgn(binv_(k, e.row)) != 0) d[k] += binv_(k, e.row) * e.value;

    std::size_t leave = r_;
    Rational theta;
    for (std::size_t k = 0; k < r_; ++k) {
      if (sgn(d[k]) <= 0) continue;
      Rational ratio = xb_[k] / d[k];
      if (leave == r_ || ratio < theta || (ratio == theta && basis_[k] < basis_[leave])) {
        leave = k;
        theta = std::move(ratio);
      }
    }
    if (leave == r_) return false;
    degenerate = sgn(theta) == 0;

    for (std::size_t k = 0; k < r_; ++k)
      if (k != leave && sgn(d[k]) != 0) xb_[k] -= theta * d[k];
    xb_[leave] = theta;

    std::vector<std::size_t> nz;
    const Rational piv = d[leave];
    for (std::size_t c = 0; c < r_; ++c)
      if (sgn(binv_(leave, c)) != 0) {
        binv_(leave, c) /= piv;
        nz.push_back(c);
      }
    for (std::size_t k = 0; k < r_; ++k) {
      if (k == leave || sgn(d[k]) == 0) continue;
      for (auto c : nz) binv_(k, c) -= d[k] * binv_(leave, c);
    }
    for (auto c : nz) y_[c] += rc * binv_(leave, c);

    in_basis_[basis_[leave]] = 0;
    in_basis_[j] = 1;
    basis_[leave] = j;
    return true;
  }

  Result result(Status status, std::size_t iterations) const {
    Result res;
    res.status = status;
    res.basis = basis_;
    res.basic_values = xb_;
    res.duals = y_;
    res.objective = 0;
    for (std::size_t k = 0; k < r_; ++k) res.objective += lp_.cost(basis_[k]) * xb_[k];
    res.iterations = iterations;
    return res;
  }

  std::vector<double> duals_hint(double& max_abs) const {
    std::vector<double> yd(r_);
    max_abs = 0;
    for (std::size_t i = 0; i < r_; ++i) {
      yd[i] = y_[i].get_d();
      max_abs = std::max(max_abs, std::abs(yd[i]));
    }
    return yd;
  }

 private:
  const ColumnSource& lp_;
  std::size_t r_;
  std::vector<std::size_t> basis_;
  std::vector<char> in_basis_;
  RationalMatrix binv_;
  RationalVector xb_;
  RationalVector y_;
};

}  // namespace

Result solve(const ColumnSource& lp, std::span<const Rational> b, std::vector<std::size_t> initial_basis,
             const Options& options) {
  Tableau tab(lp, b, std::move(initial_basis));
  std::vector<double> cost_hint;
  double max_cost = 0;
  if (options.float_hint) {
    cost_hint.resize(lp.cols());
    for (std::size_t j = 0; j < lp.cols(); ++j) {
      cost_hint[j] = lp.cost(j).get_d();
      max_cost = std::max(max_cost, std::abs(cost_hint[j]));
    }
  }

  std::size_t iterations = 0;
  std::size_t degenerate_run = 0;
  for (;;) {
    const bool use_bland =
        options.pricing == Pricing::Bland || degenerate_run >= options.degenerate_run;
    std::optional<std::pair<std::size_t, Rational>> entering;
    if (options.float_hint) {
      double max_y = 0;
      const auto yd = tab.duals_hint(max_y);
      const double tol = 1e-9 * (1 + max_y + max_cost);
      if (use_bland) {
        entering = tab.bland(&yd, cost_hint, tol);
      } else {
        entering = tab.dantzig_hinted(yd, cost_hint, tol);
      }
      // Nothing found in floating point: settle it with an exact pass.
      if (!entering) entering = tab.bland(nullptr, cost_hint, 0);
    } else {
      entering = use_bland ? tab.bland(nullptr, cost_hint, 0) : tab.dantzig_exact();
    }
    if (!entering) return tab.result(Status::Optimal, iterations);

    bool degenerate = false;
    if (!tab.pivot(entering->first, entering->second, degenerate))
      return tab.result(Status::Unbounded, iterations);
    ++iterations;
    degenerate_run = degenerate ? degenerate_run + 1 : 0;
  }
}

std::optional<RationalVector> feasible_point(const RationalMatrix& a, std::span<const Rational> b,
                                             const Options& options) {
  if (a.rows() != b.size()) throw DimensionMismatch("feasible_point: right-hand side length");
  const std::size_t r = a.rows();
  const std::size_t n = a.cols();
  if (r == 0) return RationalVector(n);
  RationalMatrix ext(r, n + r);
  RationalVector rhs(r);
  RationalVector cost(n + r);
  for (std::size_t i = 0; i < r; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) ext(i, j) = flip ? Rational(-a(i, j)) : a(i, j);
    rhs[i] = flip ? Rational(-b[i]) : b[i];
    ext(i, n + i) = 1;
    cost[n + i] = 1;
  }
  std::vector<std::size_t> basis(r);
  for (std::size_t i = 0; i < r; ++i) basis[i] = n + i;
  const Result res = solve(DenseColumns(std::move(ext), std::move(cost)), rhs, std::move(basis), options);
  if (sgn(res.objective) != 0) return std::nullopt;
  RationalVector x = res.primal(n + r);
  x.resize(n);
  return x;
}

}  // namespace sigdim::simplex
