#include "sigdim/classical.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <thread>

#include "sigdim/simplex.hpp"

namespace sigdim {

ConditionalDistribution::ConditionalDistribution(RationalMatrix probs) : probs_(std::move(probs)) {
  if (probs_.rows() == 0 || probs_.cols() == 0)
    throw InvalidDistribution("probs: distribution needs at least one row and one column");
  if (probs_.cols() > std::numeric_limits<Column>::max())
    throw InvalidDistribution("probs: too many columns");
  for (std::size_t x = 0; x < probs_.rows(); ++x) {
    Rational total = 0;
    for (std::size_t y = 0; y < probs_.cols(); ++y) {
      if (sgn(probs_(x, y)) < 0)
        throw InvalidDistribution("probs[" + std::to_string(x) + "][" + std::to_string(y) + "] is negative");
      total += probs_(x, y);
    }
    if (total != 1) throw InvalidDistribution("probs[" + std::to_string(x) + "] does not sum to 1");
  }
}

std::size_t DeterministicStrategy::distinct_columns() const {
  return std::set<Column>(assignment.begin(), assignment.end()).size();
}

DeterministicStrategy StrategyList::strategy(std::size_t i) const {
  auto s = (*this)[i];
  return {std::vector<Column>(s.begin(), s.end())};
}

void StrategyList::push_back(std::span<const Column> assignment) {
  if (assignment.size() != rows_) throw DimensionMismatch("strategy has wrong number of rows");
  data_.insert(data_.end(), assignment.begin(), assignment.end());
}

void StrategyList::append(const StrategyList& other) {
  if (other.rows_ != rows_) throw DimensionMismatch("strategy lists over different row counts");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
}

BigInt stirling2(unsigned m, unsigned k) {
  if (k > m) return 0;
  // Row-by-row recurrence {n brace j} = j {n-1 brace j} + {n-1 brace j-1}.
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (unsigned n = 1; n <= m; ++n) {
    for (unsigned j = std::min(n, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

BigInt count_vertices(unsigned m, unsigned n, unsigned d) {
  BigInt total = 0;
  for (unsigned k = 1; k <= std::min({d, n, m}); ++k) {
    BigInt fact, binom;
    mpz_fac_ui(fact.get_mpz_t(), k);
    mpz_bin_uiui(binom.get_mpz_t(), n, k);
    total += fact * binom * stirling2(m, k);
  }
  return total;
}

namespace {

bool in_convex_hull(std::span<const Rational> point, const std::vector<std::span<const Rational>>& others) {
  const std::size_t n = point.size();
  RationalMatrix a(n + 1, others.size());
  RationalVector b(n + 1);
  for (std::size_t k = 0; k < others.size(); ++k) {
    for (std::size_t y = 0; y < n; ++y) a(y, k) = others[k][y];
    a(n, k) = 1;
  }
  std::copy(point.begin(), point.end(), b.begin());
  b[n] = 1;
  return simplex::feasible_point(a, b).has_value();
}

}  // namespace

RowReduction reduce_rows(const ConditionalDistribution& p) {
  std::vector<std::size_t> kept;
  for (std::size_t x = 0; x < p.m(); ++x) {
    bool duplicate = false;
    for (auto k : kept)
      if (std::equal(p.probs().row(x).begin(), p.probs().row(x).end(), p.probs().row(k).begin())) {
        duplicate = true;
        break;
      }
    if (!duplicate) kept.push_back(x);
  }

  for (std::size_t i = 0; i < kept.size();) {
    std::vector<std::span<const Rational>> others;
    for (std::size_t k = 0; k < kept.size(); ++k)
      if (k != i) others.push_back(p.probs().row(kept[k]));
    if (!others.empty() && in_convex_hull(p.probs().row(kept[i]), others))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }

  RationalMatrix reduced(kept.size(), p.n());
  for (std::size_t r = 0; r < kept.size(); ++r)
    std::copy(p.probs().row(kept[r]).begin(), p.probs().row(kept[r]).end(), reduced.row(r).begin());
  return {ConditionalDistribution(std::move(reduced)), std::move(kept)};
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const ConditionalDistribution& p, unsigned d)
      : d_(d), order_(p.m()), supports_(p.m()), used_(p.n(), 0), current_(p.m(), 0) {
    for (std::size_t x = 0; x < p.m(); ++x)
      for (std::size_t y = 0; y < p.n(); ++y)
        if (sgn(p(x, y)) > 0) supports_[x].push_back(static_cast<Column>(y));
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return supports_[a].size() < supports_[b].size();
    });
  }

  std::size_t first_row_branches() const { return order_.empty() ? 0 : supports_[order_[0]].size(); }

  /// Explore the subtree where the first branched row takes its `branch`-th column.
  template <class Visit>
  void run_branch(std::size_t branch, Visit&& visit) {
    const std::size_t x = order_[0];
    const Column c = supports_[x][branch];
    if (d_ == 0) return;
    current_[x] = c;
    used_[c] = 1;
    descend(1, 1, visit);
    used_[c] = 0;
  }

  template <class Visit>
  void run(Visit&& visit) {
    for (std::size_t b = 0; b < first_row_branches(); ++b) run_branch(b, visit);
  }

 private:
  template <class Visit>
  void descend(std::size_t depth, unsigned distinct, Visit& visit) {
    if (depth == order_.size()) {
      visit(std::span<const Column>(current_));
      return;
    }
    const std::size_t x = order_[depth];
    for (Column c : supports_[x]) {
      const bool fresh = used_[c] == 0;
      if (fresh && distinct == d_) continue;  // would exceed d columns
      current_[x] = c;
      ++used_[c];
      descend(depth + 1, distinct + (fresh ? 1 : 0), visit);
      --used_[c];
    }
  }

  unsigned d_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Column>> supports_;
  std::vector<unsigned> used_;
  std::vector<Column> current_;
};

}  // namespace

void for_each_effective_vertex(const ConditionalDistribution& p, unsigned d,
                               const std::function<void(std::span<const Column>)>& visit) {
  BranchAndBound(p, d).run(visit);
}

StrategyList effective_vertices(const ConditionalDistribution& p, unsigned d, unsigned threads) {
  const std::size_t branches = BranchAndBound(p, d).first_row_branches();
  if (threads <= 1 || branches <= 1) {
    StrategyList out(p.m());
    BranchAndBound(p, d).run([&](std::span<const Column> s) { out.push_back(s); });
    return out;
  }
  std::vector<StrategyList> parts(branches, StrategyList(p.m()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    BranchAndBound bnb(p, d);
    for (std::size_t b = next++; b < branches; b = next++)
      bnb.run_branch(b, [&](std::span<const Column> s) { parts[b].push_back(s); });
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, branches); ++t) pool.emplace_back(worker);
  pool.clear();
  StrategyList out(p.m());
  for (const auto& part : parts) out.append(part);
  return out;
}

ConditionalDistribution strategy_to_distribution(const DeterministicStrategy& s, std::size_t m,
                                                 std::size_t n) {
  if (s.assignment.size() != m) throw DimensionMismatch("strategy_to_distribution: row count");
  RationalMatrix probs(m, n);
  for (std::size_t x = 0; x < m; ++x) {
    if (s.assignment[x] >= n) throw DimensionMismatch("strategy_to_distribution: column out of range");
    probs(x, s.assignment[x]) = 1;
  }
  return ConditionalDistribution(std::move(probs));
}

}  // namespace sigdim
