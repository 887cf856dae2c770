#pragma once

#include <map>
#include <optional>

#include "sigdim/classical.hpp"
#include "sigdim/simplex.hpp"

namespace sigdim {

enum class Objective { Zeros, Ones };

/// Feasibility of A x = b, x >= 0 where the columns of A are vectorized
/// deterministic strategies and b is the vectorized target distribution.
struct LpProblem {
  ConditionalDistribution target;
  StrategyList columns;
  unsigned d = 0;  // every column uses at most d distinct outputs
  Objective objective = Objective::Zeros;
};

/// Exact convex decomposition of p over deterministic strategies of P_d.
struct DecompositionCertificate {
  unsigned d = 0;
  std::map<DeterministicStrategy, Rational> weights;
};

/// Game g with |g_xy| <= box, g.q <= 0 on every effective vertex q of P_d and
/// value = p.g > 0, so p lies outside P_d.
struct WitnessCertificate {
  unsigned d = 0;
  Rational box = 1;
  RationalMatrix game;
  Rational value;
  /// max of q.g over effective vertices of P_d; empty when there are none.
  std::optional<Rational> max_classical;
};

/// Outcome of one membership test of p in P_d.
struct MembershipResult {
  std::optional<DecompositionCertificate> decomposition;
  std::optional<WitnessCertificate> witness;
  std::size_t iterations = 0;
};

/// Solves  min box * (1.s + 1.t)  s.t.  A x + s - t = b,  x, s, t >= 0.
/// Optimum zero gives a decomposition; otherwise the optimal duals are the
/// witness maximizing p.g subject to g.q <= 0 and -box <= g <= box.
/// The decomposition is re-verified before being returned. The witness carries
/// an independently computed max_classical; it certifies p outside P_d only
/// when `strategies` holds every effective vertex of P_d.
MembershipResult decide_membership(const ConditionalDistribution& p, const StrategyList& strategies,
                                   unsigned d, const Rational& box = 1,
                                   const simplex::Options& options = {});

/// Decomposition of `problem.target` over `problem.columns`, or nullopt when
/// infeasible. With an all-zero or all-one objective every feasible point is
/// optimal, so `objective` does not change the result.
std::optional<DecompositionCertificate> solve_feasibility(const LpProblem& problem,
                                                          const simplex::Options& options = {});

/// Best witness separating p from the given vertices of P_d (box-bounded),
/// or nullopt when the optimum is <= 0.
std::optional<WitnessCertificate> find_witness(const ConditionalDistribution& p, const StrategyList& vertices,
                                               unsigned d, const Rational& box = 1,
                                               const simplex::Options& options = {});

/// max over effective vertices q of P_d of q.g, computed by maximizing row by
/// row over every choice of min(d, n) output columns.
std::optional<Rational> max_effective_value(const ConditionalDistribution& p, const RationalMatrix& game,
                                            unsigned d);

bool verify_certificate(const ConditionalDistribution& p, const DecompositionCertificate& cert);
bool verify_certificate(const ConditionalDistribution& p, const WitnessCertificate& cert);

}  // namespace sigdim
