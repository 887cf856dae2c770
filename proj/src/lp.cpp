#include "sigdim/lp.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace sigdim {

namespace {

// Columns [strategies | s | t] of the L1 membership LP. Rows are the entries
// (x, y) that are positive in p or touched by some strategy.
class SeparationColumns : public simplex::ColumnSource {
 public:
  SeparationColumns(const ConditionalDistribution& p, const StrategyList& strategies, Rational box)
      : m_(p.m()), n_(p.n()), strategies_(strategies), box_(std::move(box)),
        row_of_(p.m() * p.n(), kNone) {
    std::vector<char> used(m_ * n_, 0);
    for (std::size_t x = 0; x < m_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        if (sgn(p(x, y)) > 0) used[x * n_ + y] = 1;
    for (std::size_t j = 0; j < strategies.size(); ++j) {
      auto s = strategies[j];
      for (std::size_t x = 0; x < m_; ++x) used[x * n_ + s[x]] = 1;
    }
    for (std::size_t k = 0; k < used.size(); ++k)
      if (used[k]) {
        row_of_[k] = entries_.size();
        entries_.push_back(k);
      }
  }

  std::size_t rows() const override { return entries_.size(); }
  std::size_t cols() const override { return strategies_.size() + 2 * entries_.size(); }
  std::size_t strategy_count() const { return strategies_.size(); }
  const std::vector<std::size_t>& entries() const { return entries_; }

  void column(std::size_t j, std::vector<simplex::Entry>& out) const override {
    out.clear();
    const std::size_t v = strategies_.size();
    if (j < v) {
      auto s = strategies_[j];
      for (std::size_t x = 0; x < m_; ++x) out.push_back({row_of_[x * n_ + s[x]], Rational(1)});
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
    } else if (j < v + rows()) {
      out.push_back({j - v, Rational(1)});
    } else {
      out.push_back({j - v - rows(), Rational(-1)});
    }
  }

  Rational cost(std::size_t j) const override { return j < strategies_.size() ? Rational(0) : box_; }

  Rational dual_dot(std::size_t j, std::span<const Rational> y) const override {
    const std::size_t v = strategies_.size();
    if (j >= v) return j < v + rows() ? y[j - v] : Rational(-y[j - v - rows()]);
    auto s = strategies_[j];
    Rational total = 0;
    for (std::size_t x = 0; x < m_; ++x) total += y[row_of_[x * n_ + s[x]]];
    return total;
  }

  double dual_dot_hint(std::size_t j, std::span<const double> y) const override {
    const std::size_t v = strategies_.size();
    if (j >= v) return j < v + rows() ? y[j - v] : -y[j - v - rows()];
    auto s = strategies_[j];
    double total = 0;
    for (std::size_t x = 0; x < m_; ++x) total += y[row_of_[x * n_ + s[x]]];
    return total;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t m_, n_;
  const StrategyList& strategies_;
  Rational box_;
  std::vector<std::size_t> row_of_;
  std::vector<std::size_t> entries_;
};

bool fits(const ConditionalDistribution& p, const StrategyList& strategies) {
  if (strategies.rows() != p.m()) return false;
  for (std::size_t j = 0; j < strategies.size(); ++j)
    for (auto c : strategies[j])
      if (c >= p.n()) return false;
  return true;
}

}  // namespace

MembershipResult decide_membership(const ConditionalDistribution& p, const StrategyList& strategies,
                                   unsigned d, const Rational& box, const simplex::Options& options) {
  if (!fits(p, strategies)) throw DimensionMismatch("strategies do not match the distribution shape");
  if (sgn(box) <= 0) throw std::invalid_argument("box: must be positive");
  SeparationColumns lp(p, strategies, box);
  const std::size_t r = lp.rows();
  const std::size_t v = lp.strategy_count();
  RationalVector b(r);
  std::vector<std::size_t> basis(r);
  for (std::size_t i = 0; i < r; ++i) {
    b[i] = p.probs().entries()[lp.entries()[i]];
    basis[i] = v + i;
  }
  const auto res = simplex::solve(lp, b, std::move(basis), options);

  MembershipResult out;
  out.iterations = res.iterations;
  if (sgn(res.objective) == 0) {
    DecompositionCertificate cert;
    cert.d = d;
    for (std::size_t k = 0; k < r; ++k)
      if (res.basis[k] < v && sgn(res.basic_values[k]) > 0)
        cert.weights[strategies.strategy(res.basis[k])] += res.basic_values[k];
    if (!verify_certificate(p, cert)) throw std::logic_error("decomposition failed verification");
    out.decomposition = std::move(cert);
    return out;
  }

  WitnessCertificate cert;
  cert.d = d;
  cert.box = box;
  cert.game = RationalMatrix(p.m(), p.n());
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t k = lp.entries()[i];
    cert.game(k / p.n(), k % p.n()) = res.duals[i];
  }
  cert.value = 0;
  for (std::size_t x = 0; x < p.m(); ++x)
    for (std::size_t y = 0; y < p.n(); ++y) cert.value += p(x, y) * cert.game(x, y);
  if (cert.value != res.objective) throw std::logic_error("witness value differs from the LP optimum");
  cert.max_classical = max_effective_value(p, cert.game, d);
  out.witness = std::move(cert);
  return out;
}

std::optional<DecompositionCertificate> solve_feasibility(const LpProblem& problem,
                                                          const simplex::Options& options) {
  auto res = decide_membership(problem.target, problem.columns, problem.d, 1, options);
  return std::move(res.decomposition);
}

std::optional<WitnessCertificate> find_witness(const ConditionalDistribution& p, const StrategyList& vertices,
                                               unsigned d, const Rational& box,
                                               const simplex::Options& options) {
  auto res = decide_membership(p, vertices, d, box, options);
  return std::move(res.witness);
}

std::optional<Rational> max_effective_value(const ConditionalDistribution& p, const RationalMatrix& game,
                                            unsigned d) {
  if (game.rows() != p.m() || game.cols() != p.n()) throw DimensionMismatch("game shape differs from p");
  const std::size_t n = p.n();
  const std::size_t k = std::min<std::size_t>(d, n);
  if (k == 0) return std::nullopt;
  std::vector<char> chosen(n, 0);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(k), 1);
  std::optional<Rational> best;
  do {
    Rational total = 0;
    bool feasible = true;
    for (std::size_t x = 0; x < p.m() && feasible; ++x) {
      std::optional<Rational> row_best;
      for (std::size_t y = 0; y < n; ++y)
        if (chosen[y] && sgn(p(x, y)) > 0 && (!row_best || game(x, y) > *row_best)) row_best = game(x, y);
      if (row_best)
        total += *row_best;
      else
        feasible = false;
    }
    if (feasible && (!best || total > *best)) best = total;
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return best;
}

bool verify_certificate(const ConditionalDistribution& p, const DecompositionCertificate& cert) {
  RationalMatrix sum(p.m(), p.n());
  Rational total = 0;
  for (const auto& [s, w] : cert.weights) {
    if (sgn(w) <= 0) return false;
    if (s.assignment.size() != p.m() || s.distinct_columns() > cert.d) return false;
    for (std::size_t x = 0; x < p.m(); ++x) {
      if (s.assignment[x] >= p.n()) return false;
      sum(x, s.assignment[x]) += w;
    }
    total += w;
  }
  return total == 1 && sum == p.probs();
}

bool verify_certificate(const ConditionalDistribution& p, const WitnessCertificate& cert) {
  if (cert.game.rows() != p.m() || cert.game.cols() != p.n()) return false;
  if (sgn(cert.box) <= 0) return false;
  Rational value = 0;
  for (std::size_t x = 0; x < p.m(); ++x)
    for (std::size_t y = 0; y < p.n(); ++y) {
      if (abs(cert.game(x, y)) > cert.box) return false;
      value += p(x, y) * cert.game(x, y);
    }
  if (value != cert.value || sgn(value) <= 0) return false;
  const auto max_classical = max_effective_value(p, cert.game, cert.d);
  if (max_classical != cert.max_classical) return false;
  return !max_classical || sgn(*max_classical) <= 0;
}

}  // namespace sigdim
