#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sigdim/rational.hpp"

// Exact revised simplex for  min c.x  s.t.  A x = b, x >= 0.
//
// Arithmetic on the basis inverse, primal values and duals is exact. Pricing
// may rank candidate columns with a floating-point copy of the duals, but a
// column only enters after its exact reduced cost is confirmed negative, and
// optimality is only declared after an exact pass over every column.
namespace sigdim::simplex {

struct Entry {
  std::size_t row;
  Rational value;
};

/// Column-wise access to the constraint matrix and cost vector.
class ColumnSource {
 public:
  virtual ~ColumnSource() = default;
  virtual std::size_t rows() const = 0;
  virtual std::size_t cols() const = 0;
  virtual void column(std::size_t j, std::vector<Entry>& out) const = 0;
  virtual Rational cost(std::size_t j) const = 0;

  /// y . A_j; override when the column structure allows a faster sum.
  virtual Rational dual_dot(std::size_t j, std::span<const Rational> y) const;
  virtual double dual_dot_hint(std::size_t j, std::span<const double> y) const;
};

class DenseColumns : public ColumnSource {
 public:
  DenseColumns(RationalMatrix a, RationalVector c) : a_(std::move(a)), c_(std::move(c)) {}
  std::size_t rows() const override { return a_.rows(); }
  std::size_t cols() const override { return a_.cols(); }
  void column(std::size_t j, std::vector<Entry>& out) const override;
  Rational cost(std::size_t j) const override { return c_[j]; }

 private:
  RationalMatrix a_;
  RationalVector c_;
};

enum class Pricing {
  Bland,    // smallest index with negative reduced cost, every iteration
  Dantzig,  // most negative reduced cost; Bland after a run of degenerate pivots
};

struct Options {
  Pricing pricing = Pricing::Dantzig;
  std::size_t degenerate_run = 20;  // consecutive degenerate pivots before falling back to Bland
  bool float_hint = true;           // rank Dantzig candidates in floating point
};

enum class Status { Optimal, Unbounded };

struct Result {
  Status status = Status::Optimal;
  std::vector<std::size_t> basis;  // column index per row
  RationalVector basic_values;     // x_B
  RationalVector duals;            // y = c_B B^{-1}
  Rational objective;
  std::size_t iterations = 0;

  /// Full primal vector of length `cols`.
  RationalVector primal(std::size_t cols) const;
};

/// Runs the simplex from `initial_basis`, which must index an invertible
/// basis with B^{-1} b >= 0. Throws std::invalid_argument otherwise.
Result solve(const ColumnSource& lp, std::span<const Rational> b,
             std::vector<std::size_t> initial_basis, const Options& options = {});

/// Some x >= 0 with A x = b (phase one with artificial columns), or nullopt.
std::optional<RationalVector> feasible_point(const RationalMatrix& a, std::span<const Rational> b,
                                             const Options& options = {});

}  // namespace sigdim::simplex
