#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "sigdim/rational.hpp"

namespace sigdim {

class InvalidDistribution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// m x n row-stochastic matrix p_{y|x}; rows are inputs, columns outputs.
class ConditionalDistribution {
 public:
  ConditionalDistribution() = default;
  /// Throws InvalidDistribution unless m, n >= 1, entries are >= 0 and rows sum to 1.
  explicit ConditionalDistribution(RationalMatrix probs);

  std::size_t m() const { return probs_.rows(); }
  std::size_t n() const { return probs_.cols(); }
  const RationalMatrix& probs() const { return probs_; }
  const Rational& operator()(std::size_t x, std::size_t y) const { return probs_(x, y); }

  friend bool operator==(const ConditionalDistribution&, const ConditionalDistribution&) = default;

 private:
  RationalMatrix probs_;
};

using Column = std::uint16_t;

/// Deterministic classical strategy: input x is answered with column assignment[x].
struct DeterministicStrategy {
  std::vector<Column> assignment;

  std::size_t distinct_columns() const;
  friend bool operator==(const DeterministicStrategy&, const DeterministicStrategy&) = default;
  friend auto operator<=>(const DeterministicStrategy&, const DeterministicStrategy&) = default;
};

/// Flat storage for many strategies over the same number of rows.
class StrategyList {
 public:
  explicit StrategyList(std::size_t rows = 0) : rows_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t size() const { return rows_ == 0 ? 0 : data_.size() / rows_; }
  bool empty() const { return size() == 0; }

  std::span<const Column> operator[](std::size_t i) const { return {data_.data() + i * rows_, rows_}; }
  DeterministicStrategy strategy(std::size_t i) const;

  void push_back(std::span<const Column> assignment);
  void append(const StrategyList& other);

 private:
  std::size_t rows_;
  std::vector<Column> data_;
};

/// Stirling number of the second kind {m brace k}.
BigInt stirling2(unsigned m, unsigned k);

/// Number of vertices of the classical polytope P^{m->n}_d:
/// sum_{k=1}^{d} k! C(n,k) {m brace k}.
BigInt count_vertices(unsigned m, unsigned n, unsigned d);

struct RowReduction {
  ConditionalDistribution reduced;
  std::vector<std::size_t> kept_rows;
};

/// Drops every row that is a convex combination of the other kept rows. Exact
/// duplicates keep their first occurrence; remaining rows are tested in index
/// order by exact LP feasibility.
RowReduction reduce_rows(const ConditionalDistribution& p);

/// Strategies with p_{s(x)|x} > 0 for every row x that use at most d distinct
/// columns, found by depth-first branch and bound. Rows are branched in order
/// of increasing support size (ties by index), columns ascending; a branch is
/// pruned as soon as more than d columns are in use. Output order is the
/// depth-first order, independent of `threads`.
StrategyList effective_vertices(const ConditionalDistribution& p, unsigned d, unsigned threads = 1);

/// Streaming form of effective_vertices; `visit` sees each assignment once.
void for_each_effective_vertex(const ConditionalDistribution& p, unsigned d,
                               const std::function<void(std::span<const Column>)>& visit);

ConditionalDistribution strategy_to_distribution(const DeterministicStrategy& s, std::size_t m,
                                                 std::size_t n);

}  // namespace sigdim
